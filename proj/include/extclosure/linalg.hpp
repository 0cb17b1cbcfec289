#pragma once

// Dense exact linear algebra over prime fields F_p with p < 2^16.
//
// Every output that involves a choice of basis is canonical: bases are read
// off reduced row-echelon forms, and particular solutions set free variables
// to zero. Downstream enumeration relies on this for reproducibility.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace extclosure {

using Scalar = std::uint32_t;
using Vector = std::vector<Scalar>;

constexpr std::uint32_t kMaxModulus = 1u << 16;

bool is_prime(std::uint32_t n);

/// Throws InvalidArgument unless p is a prime below 2^16.
void require_prime_modulus(std::uint32_t p);

/// Arithmetic in F_p. Products of two residues fit in 32 bits.
class PrimeField {
public:
    constexpr PrimeField() = default;
    explicit PrimeField(std::uint32_t p);

    std::uint32_t modulus() const noexcept { return p_; }

    Scalar reduce(long long v) const noexcept {
        long long r = v % static_cast<long long>(p_);
        return static_cast<Scalar>(r < 0 ? r + p_ : r);
    }
    Scalar add(Scalar a, Scalar b) const noexcept {
        Scalar s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Scalar sub(Scalar a, Scalar b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    Scalar neg(Scalar a) const noexcept { return a == 0 ? 0 : p_ - a; }
    Scalar mul(Scalar a, Scalar b) const noexcept { return (a * b) % p_; }
    Scalar inv(Scalar a) const;

private:
    std::uint32_t p_ = 2;
};

class Matrix {
public:
    Matrix() = default;
    Matrix(std::uint32_t p, std::size_t rows, std::size_t cols);

    static Matrix identity(std::uint32_t p, std::size_t n);
    /// Entries are reduced mod p (negative integers allowed).
    static Matrix from_rows(std::uint32_t p, std::initializer_list<std::initializer_list<long long>> rows);
    static Matrix from_columns(std::uint32_t p, std::size_t rows, std::span<const Vector> columns);
    static Matrix column_vector(std::uint32_t p, const Vector& v);

    std::uint32_t modulus() const noexcept { return field_.modulus(); }
    const PrimeField& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Scalar operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
    Scalar& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, long long v) { data_[r * cols_ + c] = field_.reduce(v); }

    std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    Vector column(std::size_t c) const;
    void set_column(std::size_t c, const Vector& v);
    std::span<const Scalar> data() const noexcept { return data_; }

    bool is_zero() const noexcept;
    Matrix transpose() const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
    Matrix columns(std::span<const std::size_t> indices) const;
    Vector apply(const Vector& v) const;

    static Matrix hstack(const Matrix& a, const Matrix& b);
    static Matrix vstack(const Matrix& a, const Matrix& b);

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix scaled(Scalar c) const;
    /// this += c * o
    void add_scaled(const Matrix& o, Scalar c);

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b) noexcept;

private:
    PrimeField field_{};
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Vector data_;
};

struct RowEchelon {
    Matrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_columns;
};

RowEchelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Columns form the canonical kernel basis: one column per free variable,
/// in increasing column order, with that free variable set to 1.
Matrix kernel_basis(const Matrix& m);

/// Particular solution of m x = b with free variables zero, or nullopt.
std::optional<Vector> solve(const Matrix& m, const Vector& b);
/// Column-by-column solve of m X = B; nullopt if any column is inconsistent.
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);

/// Canonical basis of the column space (transposed nonzero rows of rref(m^T)).
Matrix column_space(const Matrix& m);

/// Whether every column of `vectors` lies in the column space of `space`.
bool column_space_contains(const Matrix& space, const Matrix& vectors);

struct SubspaceRelation {
    Matrix sum;
    Matrix intersection;
    bool first_in_second = false;
    bool second_in_first = false;
};

/// U and V are matrices whose columns span subspaces of the same ambient space.
SubspaceRelation subspace_ops(const Matrix& u, const Matrix& v);

/// Coordinates on V/W where W = column space of `subspace`. The kept
/// coordinates are the non-pivot positions of rref(W^T), so
/// projection * section = identity and the representatives are unit vectors.
struct QuotientSpace {
    Matrix projection;  // q x n
    Matrix section;     // n x q
    std::vector<std::size_t> kept;
};

QuotientSpace quotient_space(const Matrix& subspace, std::size_t ambient_dim);

/// Incrementally maintained echelon basis; answers membership and grows by
/// one vector at a time.
class EchelonBasis {
public:
    EchelonBasis(std::uint32_t p, std::size_t ambient);

    std::size_t dim() const noexcept { return rows_.size(); }
    std::size_t ambient() const noexcept { return ambient_; }
    bool contains(const Vector& v) const;
    /// Adds v if independent; returns whether it was added.
    bool insert(const Vector& v);

private:
    Vector reduce(Vector v) const;

    PrimeField field_;
    std::size_t ambient_;
    std::vector<Vector> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace extclosure
