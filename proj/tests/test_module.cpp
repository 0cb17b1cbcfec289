#include <doctest.h>

#include <random>

#include "extclosure/errors.hpp"
#include "extclosure/extensions.hpp"
#include "support/oracles.hpp"
#include "support/rings.hpp"

using namespace extclosure;

namespace {

using Sizes = std::vector<std::size_t>;

RingElement elem(const PresentedAlgebra& r, const std::string& s) { return r.element(parse_polynomial(s, r.ring)); }

FpModule cyclic(const PresentedAlgebra& r, std::initializer_list<const char*> gens) {
    std::vector<RingElement> g;
    for (const char* s : gens) g.push_back(elem(r, s));
    return cyclic_module(ideal_generated(r.algebra, g));
}

std::vector<PresentedAlgebra> test_rings() {
    return {rings::dual_numbers(), rings::chain(3, 4), rings::small_maximal(), rings::small_maximal_y3(),
            rings::tensor_square(), rings::gorenstein4(), rings::stretched()};
}

}  // namespace

TEST_CASE("module axioms") {
    const auto d = rings::dual_numbers();
    auto action = residue_field(d.algebra).actions();
    action[1](0, 0) = 1;  // x acting as the identity breaks x^2 = 0
    CHECK_FALSE(check_module_axioms(*d.algebra, action).empty());
    CHECK_THROWS_AS(FpModule(d.algebra, action), InvalidArgument);
    CHECK(check_module_axioms(*d.algebra, free_module(d.algebra, 2).actions()).empty());
}

TEST_CASE("cyclic module examples") {
    const auto g = rings::gorenstein4();
    const auto r = cyclic_module(zero_ideal(g.algebra));
    CHECK(r.dim() == 6);
    CHECK(is_isomorphic(r, free_module(g.algebra, 1)).isomorphic);

    const auto s = rings::small_maximal();
    const auto rx = cyclic(s, {"x"});
    CHECK(rx.dim() == 2);
    CHECK(jordan_type(rx, elem(s, "y")) == Sizes{2});
    CHECK(rx.action(elem(s, "x")).is_zero());

    const auto k = residue_field(g.algebra);
    CHECK(k.dim() == 1);
    for (const auto& gen : g.algebra->generators()) CHECK(k.action(gen).is_zero());
}

TEST_CASE("hom examples and the commutation oracle") {
    const auto d = rings::dual_numbers();
    const auto k = residue_field(d.algebra);
    const auto r = free_module(d.algebra, 1);
    CHECK(hom_space(r, k).size() == 1);
    CHECK(hom_space(k, r).size() == 1);
    CHECK(hom_space(k, k).size() == 1);

    std::mt19937_64 rng(42);
    for (const auto& ring : test_rings()) {
        for (int t = 0; t < 6; ++t) {
            const auto m = oracle::random_module(ring.algebra, rng);
            const auto n = oracle::random_module(ring.algebra, rng);
            const auto basis = hom_space(m, n);
            CHECK(basis.size() == oracle::hom_dim(m, n));
            for (const auto& f : basis) CHECK(is_module_map(m, n, f));
            CHECK(hom_space(free_module(ring.algebra, 1), m).size() == m.dim());
        }
    }
}

TEST_CASE("isomorphism examples") {
    const auto d = rings::dual_numbers();
    const auto k = residue_field(d.algebra);
    const auto r = free_module(d.algebra, 1);
    const auto self = is_isomorphic(r, r);
    CHECK(self.isomorphic);
    REQUIRE(self.witness);
    CHECK(rank(*self.witness) == 2);
    CHECK_FALSE(is_isomorphic(direct_power(k, 2), r).isomorphic);

    const auto ext = ext1(k, k);
    REQUIRE(ext.dim() == 1);
    const auto a = extension_from_cocycle(k, k, ext, ext.cocycle(std::vector<Scalar>{1}));
    CHECK(is_isomorphic(a.middle, r).isomorphic);

    // Over F_3 the two nonzero cocycles give isomorphic middle terms.
    const auto d3 = rings::chain(3, 2);
    const auto k3 = residue_field(d3.algebra);
    const auto e3 = ext1(k3, k3);
    const auto m1 = extension_from_cocycle(k3, k3, e3, e3.cocycle(std::vector<Scalar>{1}));
    const auto m2 = extension_from_cocycle(k3, k3, e3, e3.cocycle(std::vector<Scalar>{2}));
    const auto iso = is_isomorphic(m1.middle, m2.middle);
    CHECK(iso.isomorphic);
    REQUIRE(iso.witness);
    CHECK(is_module_map(m1.middle, m2.middle, *iso.witness));
}

TEST_CASE("isomorphism agrees with a module permuted by a random change of basis") {
    std::mt19937_64 rng(17);
    for (const auto& ring : test_rings()) {
        for (int t = 0; t < 4; ++t) {
            const auto m = oracle::random_module(ring.algebra, rng);
            Matrix g(ring.algebra->p(), m.dim(), m.dim());
            do {
                for (std::size_t r = 0; r < m.dim(); ++r)
                    for (std::size_t c = 0; c < m.dim(); ++c) g(r, c) = static_cast<Scalar>(rng() % ring.algebra->p());
            } while (rank(g) != m.dim());
            const auto ginv = *solve(g, Matrix::identity(ring.algebra->p(), m.dim()));
            std::vector<Matrix> conj;
            for (const auto& a : m.actions()) conj.push_back(g * a * ginv);
            const FpModule n(ring.algebra, conj);
            const auto res = is_isomorphic(m, n);
            CHECK(res.isomorphic);
            REQUIRE(res.witness);
            CHECK(is_module_map(m, n, *res.witness));
            CHECK(rank(*res.witness) == m.dim());
        }
    }
}

TEST_CASE("betti examples") {
    for (const auto& ring : test_rings()) CHECK(betti(residue_field(ring.algebra), 1) == ring.algebra->edim());

    const auto d = rings::dual_numbers();
    CHECK(betti_numbers(residue_field(d.algebra), 4) == Sizes{1, 1, 1, 1, 1});

    const auto t = rings::tensor_square();
    CHECK(betti_numbers(cyclic(t, {"x"}), 6) == Sizes(7, 1));

    const auto res = minimal_free_resolution(residue_field(rings::small_maximal().algebra), 3);
    CHECK(res.ranks == Sizes{1, 2, 4, 8});
    for (const auto& dm : res.differentials)
        for (const auto& e : dm.entries) CHECK_FALSE(rings::small_maximal().algebra->is_unit(e));
}

TEST_CASE("tor examples") {
    const auto g = rings::gorenstein4();
    CHECK(tor(cyclic(g, {"x"}), cyclic(g, {"z"}), 1).dim == 0);
    const auto tk = tor(cyclic(g, {"x"}), residue_field(g.algebra), 1).dim;
    CHECK(tk > 0);
    CHECK(tk == betti(cyclic(g, {"x"}), 1));

    const auto t = rings::tensor_square();
    CHECK(tor(cyclic(t, {"x"}), cyclic(t, {"y"}), 1).dim == 0);

    std::mt19937_64 rng(7);
    const auto m = oracle::random_module(g.algebra, rng);
    CHECK(tor(free_module(g.algebra, 1), m, 0).dim == m.dim());
}

TEST_CASE("tor against (I cap J)/IJ and symmetry") {
    std::mt19937_64 rng(99);
    for (const auto& ring : test_rings()) {
        for (int t = 0; t < 8; ++t) {
            const auto i = ideal_generated(ring.algebra, {oracle::random_in_max(*ring.algebra, rng)});
            const auto j = ideal_generated(ring.algebra,
                                           {oracle::random_in_max(*ring.algebra, rng), oracle::random_in_max(*ring.algebra, rng)});
            const auto ri = cyclic_module(i), rj = cyclic_module(j);
            CHECK(tor(ri, rj, 1).dim == oracle::tor1_cyclic(i, j));
            CHECK(tor(ri, rj, 2).dim == tor(rj, ri, 2).dim);
            CHECK(tor(ri, residue_field(ring.algebra), 2).dim == betti(ri, 2));
        }
    }
}

TEST_CASE("ext1 examples and the syzygy oracle") {
    const auto d = rings::dual_numbers();
    const auto k = residue_field(d.algebra);
    const auto r = free_module(d.algebra, 1);
    CHECK(ext1(k, k).dim() == 1);
    CHECK(ext1(k, r).dim() == 0);
    CHECK(ext1(r, k).dim() == 0);

    std::mt19937_64 rng(123);
    for (const auto& ring : test_rings()) {
        for (int t = 0; t < 4; ++t) {
            const auto n = oracle::random_module(ring.algebra, rng);
            const auto l = oracle::random_module(ring.algebra, rng);
            CHECK(ext1(n, l).dim() == oracle::ext1_dim(n, l));
        }
        CHECK(ext1(free_module(ring.algebra, 1), residue_field(ring.algebra)).dim() == 0);
    }
}

TEST_CASE("splitting off k") {
    const auto d = rings::dual_numbers();
    CHECK(splits_off_k(direct_sum(residue_field(d.algebra), free_module(d.algebra, 1))).splits);
    CHECK_FALSE(splits_off_k(free_module(d.algebra, 1)).splits);

    const auto g = rings::gorenstein4();
    CHECK_FALSE(splits_off_k(free_module(g.algebra, 1)).splits);
    const auto m = restrict_to_submodule(free_module(g.algebra, 1), maximal_ideal(g.algebra).basis());
    CHECK_FALSE(splits_off_k(m).splits);

    const auto w = splits_off_k(direct_sum(cyclic(g, {"x"}), residue_field(g.algebra)));
    REQUIRE(w.splits);
    const auto both = direct_sum(cyclic(g, {"x"}), residue_field(g.algebra));
    CHECK(column_space_contains(module_socle(both), Matrix::column_vector(2, w.witness)));
    CHECK_FALSE(column_space_contains(radical(both), Matrix::column_vector(2, w.witness)));
}

TEST_CASE("jordan types") {
    const auto c = rings::chain(2, 3);
    CHECK(jordan_type(free_module(c.algebra, 1), elem(c, "x")) == Sizes{3});

    const auto d = rings::dual_numbers();
    for (std::size_t a = 0; a <= 2; ++a)
        for (std::size_t b = 0; b <= 2; ++b) {
            if (a + b == 0) continue;
            FpModule m = a ? direct_power(residue_field(d.algebra), a) : direct_power(free_module(d.algebra, 1), b);
            if (a && b) m = direct_sum(m, direct_power(free_module(d.algebra, 1), b));
            Sizes expected(b, 2);
            expected.insert(expected.end(), a, 1);
            CHECK(jordan_type(m, elem(d, "x")) == expected);
        }

    const auto s = rings::small_maximal();
    CHECK(jordan_type(cyclic(s, {"x"}), elem(s, "y")) == Sizes{2});
}

TEST_CASE("matlis duality") {
    for (const auto& ring : test_rings()) {
        const auto k = residue_field(ring.algebra);
        CHECK(matlis_dual(k).actions() == k.actions());
        if (classify(ring.algebra).is_gorenstein)
            CHECK(is_isomorphic(matlis_dual(free_module(ring.algebra, 1)), free_module(ring.algebra, 1)).isomorphic);
    }
    const auto s = rings::small_maximal();
    const auto e = matlis_dual(free_module(s.algebra, 1));
    CHECK(module_socle(e).cols() == 1);
    CHECK_FALSE(is_isomorphic(e, free_module(s.algebra, 1)).isomorphic);
}

TEST_CASE("base change") {
    const auto g = rings::gorenstein4();
    const auto x = g.variable(0);
    const auto ideal = complement_ideal(g.algebra, x);
    const auto q = quotient_ring_as_algebra(ideal);
    CHECK(is_isomorphic(base_change(free_module(g.algebra, 1), ideal, q), free_module(q.algebra, 1)).isomorphic);
    CHECK(base_change(residue_field(g.algebra), ideal, q).dim() == 1);

    std::mt19937_64 rng(2);
    for (int t = 0; t < 5; ++t) {
        const auto m = oracle::random_module(g.algebra, rng);
        const auto n = base_change(m, ideal, q);
        CHECK(n.dim() == m.dim() - submodule_generated(m, Matrix::hstack(m.action(g.variable(1)),
                                    Matrix::hstack(m.action(g.variable(2)), m.action(g.variable(3))))).cols());
        CHECK(betti(n, 1) <= betti(m, 1));
    }
}

TEST_CASE("cokernel of a presentation recovers the module") {
    std::mt19937_64 rng(31);
    for (const auto& ring : test_rings()) {
        for (int t = 0; t < 3; ++t) {
            const auto m = oracle::random_module(ring.algebra, rng);
            const auto pres = minimal_presentation(m);
            CHECK(pres.betti0 == betti(m, 0));
            CHECK(pres.betti1 == betti(m, 1));
            CHECK(is_isomorphic(cokernel(ring.algebra, pres.relations), m).isomorphic);
        }
    }
}
