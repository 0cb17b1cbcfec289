#include <doctest.h>

#include <cmath>
#include <random>

#include "extclosure/errors.hpp"
#include "extclosure/linalg.hpp"
#include "support/oracles.hpp"

using namespace extclosure;

namespace {

Matrix random_matrix(std::uint32_t p, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    Matrix m(p, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = static_cast<Scalar>(rng() % p);
    return m;
}

std::size_t oracle_rank(const Matrix& m) {
    std::vector<oracle::Row> rows;
    for (std::size_t r = 0; r < m.rows(); ++r) rows.emplace_back(m.row(r).begin(), m.row(r).end());
    return oracle::rank(std::move(rows), m.modulus());
}

}  // namespace

TEST_CASE("field arithmetic and modulus validation") {
    CHECK(is_prime(2));
    CHECK(is_prime(65521));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(65535));
    CHECK_THROWS_AS(require_prime_modulus(4), InvalidArgument);
    CHECK_THROWS_AS(require_prime_modulus(65537), InvalidArgument);
    const PrimeField f(65521);
    for (Scalar a : {1u, 2u, 1000u, 65520u}) CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK(f.reduce(-1) == 65520);
}

TEST_CASE("rref examples") {
    const auto id = Matrix::identity(2, 2);
    const auto e = rref(id);
    CHECK(e.reduced == id);
    CHECK(e.rank == 2);
    CHECK(e.pivot_columns == std::vector<std::size_t>{0, 1});

    const Matrix zero(3, 3, 4);
    const auto z = rref(zero);
    CHECK(z.reduced == zero);
    CHECK(z.rank == 0);
    CHECK(z.pivot_columns.empty());

    const auto ones = rref(Matrix::from_rows(2, {{1, 1}, {1, 1}}));
    CHECK(ones.reduced == Matrix::from_rows(2, {{1, 1}, {0, 0}}));
    CHECK(ones.rank == 1);
}

TEST_CASE("kernel examples") {
    CHECK(kernel_basis(Matrix::from_rows(3, {{1, 2}, {0, 1}})).cols() == 0);
    CHECK(kernel_basis(Matrix(5, 3, 3)) == Matrix::identity(5, 3));
    CHECK(kernel_basis(Matrix::from_rows(2, {{1, 1}})) == Matrix::from_rows(2, {{1}, {1}}));
}

TEST_CASE("solve examples") {
    const Vector b{2, 0, 1};
    CHECK(solve(Matrix::identity(3, 3), b) == b);
    CHECK(solve(Matrix::from_rows(2, {{1, 1}}), Vector{1}) == Vector{1, 0});
    CHECK_FALSE(solve(Matrix(2, 1, 1), Vector{1}).has_value());
}

TEST_CASE("subspace examples") {
    const auto e1 = Matrix::from_rows(2, {{1}, {0}});
    const auto e2 = Matrix::from_rows(2, {{0}, {1}});
    const auto same = subspace_ops(e1, e1);
    CHECK(same.sum == column_space(e1));
    CHECK(same.intersection == column_space(e1));
    CHECK(same.first_in_second);

    const auto split = subspace_ops(e1, e2);
    CHECK(split.sum.cols() == 2);
    CHECK(split.intersection.cols() == 0);

    const auto diag = subspace_ops(Matrix::from_rows(3, {{1}, {1}}), Matrix::identity(3, 2));
    CHECK(diag.first_in_second);
    CHECK_FALSE(diag.second_in_first);
    CHECK_THROWS_AS(subspace_ops(e1, Matrix::identity(2, 3)), DimensionMismatch);
}

TEST_CASE("quotient space section is a right inverse") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 50; ++t) {
        const auto w = random_matrix(3, 6, 1 + rng() % 4, rng);
        const auto q = quotient_space(w, 6);
        CHECK(q.projection * q.section == Matrix::identity(3, q.kept.size()));
        CHECK((q.projection * w).is_zero());
        CHECK(q.kept.size() == 6 - rank(w));
    }
}

TEST_CASE("echelon basis agrees with rank") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 30; ++t) {
        const auto m = random_matrix(5, 5, 7, rng);
        EchelonBasis basis(5, 5);
        for (std::size_t c = 0; c < m.cols(); ++c) basis.insert(m.column(c));
        CHECK(basis.dim() == rank(m));
        for (std::size_t c = 0; c < m.cols(); ++c) CHECK(basis.contains(m.column(c)));
    }
}

TEST_CASE("invariants on random matrices against an independent oracle") {
    std::mt19937_64 rng(20240601);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (int t = 0; t < 120; ++t) {
            const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
            const auto m = random_matrix(p, rows, cols, rng);
            const auto e = rref(m);
            CHECK(rref(e.reduced).reduced == e.reduced);
            CHECK(e.rank == oracle_rank(m));
            const auto k = kernel_basis(m);
            CHECK(e.rank + k.cols() == cols);
            CHECK((m * k).is_zero());
            const auto solutions = oracle::count_kernel(m);
            CHECK(solutions == static_cast<std::uint64_t>(std::llround(std::pow(p, k.cols()))));

            const auto b = random_matrix(p, rows, 1, rng).column(0);
            const auto x = solve(m, b);
            if (x) {
                CHECK(m.apply(*x) == b);
            } else {
                CHECK(rank(Matrix::hstack(m, Matrix::column_vector(p, b))) > rank(m));
            }

            const auto v = random_matrix(p, rows, 1 + rng() % 4, rng);
            const auto ops = subspace_ops(m, v);
            CHECK(ops.sum.cols() + ops.intersection.cols() == rank(m) + rank(v));
        }
    }
}
