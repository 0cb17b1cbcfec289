// Acceptance suite: one PASS/FAIL line per criterion.
//
// usage: acceptance <path-to-extclosure-cli> <scratch-dir>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "extclosure/diagnose.hpp"
#include "support/ideal_corpus.hpp"
#include "support/oracles.hpp"
#include "support/rings.hpp"

using namespace extclosure;

namespace {

using Sizes = std::vector<std::size_t>;

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            if (ok) detail = what;
            ok = false;
        }
    }
};

RingElement elem(const PresentedAlgebra& r, const std::string& s) { return r.element(parse_polynomial(s, r.ring)); }

FpModule cyclic(const AlgebraPtr& a, std::vector<RingElement> gens) { return cyclic_module(ideal_generated(a, gens)); }

std::vector<PresentedAlgebra> test_rings() {
    return {rings::dual_numbers(), rings::chain(3, 4), rings::small_maximal(), rings::small_maximal_y3(),
            rings::tensor_square(), rings::gorenstein4(), rings::stretched()};
}

Outcome hypersurface_ladder() {
    Outcome o;
    for (unsigned n = 2; n <= 5; ++n) {
        const auto report = hypersurface_ladder_check(rings::chain(2, n).algebra);
        const std::string tag = " (n=" + std::to_string(n) + ")";
        o.require(report.steps.size() == n - 1, "wrong number of ladder steps" + tag);
        for (const auto& s : report.steps)
            o.require(s.well_defined && s.module_maps && s.exact, "step i=" + std::to_string(s.i) + " not exact" + tag);
        o.require(report.reachable.size() == n - 1, "missing seeds" + tag);
        Sizes all(n);
        for (std::size_t i = 0; i < n; ++i) all[i] = i + 1;
        for (const auto& r : report.reachable) o.require(r == all, "closure from a seed is incomplete" + tag);
    }
    return o;
}

Outcome closure_consistency() {
    Outcome o;
    const std::pair<PresentedAlgebra, std::size_t> cases[] = {
        {rings::small_maximal(), 4}, {rings::small_maximal_y3(), 4}, {rings::gorenstein4(), 3}};
    std::string censuses;
    for (const auto& [ring, depth] : cases) {
        const auto pair = find_orthogonal_generator_pair(ring.algebra);
        o.require(pair.has_value(), "no orthogonal pair found");
        if (!pair) continue;
        o.require(pair->first == ring.variable(0) && pair->second == ring.variable(1), "pair is not (x, y)");
        const auto v = ext_closure_contains_k(ring.algebra, pair->first, depth);
        o.require(!v.contains_k, "k found in the closure");
        o.require(v.census.size() == depth, "census incomplete");
        censuses += " [";
        for (std::size_t i = 0; i < v.census.size(); ++i) censuses += (i ? "," : "") + std::to_string(v.census[i]);
        censuses += "]";
    }
    if (o.ok) o.detail = "censuses" + censuses;
    return o;
}

Outcome gorenstein4_verbatim() {
    Outcome o;
    const auto g = rings::gorenstein4();
    const auto& a = g.algebra;
    const auto x = elem(g, "x");
    o.require(tor(cyclic(a, {x}), cyclic(a, {elem(g, "z")}), 1).dim == 0, "Tor_1(R/(x), R/(z)) != 0");
    o.require(tor(cyclic(a, {x}), residue_field(a), 1).dim != 0, "Tor_1(R/(x), k) = 0");
    o.require(annihilator(x, a) == ideal_generated(a, {x, elem(g, "y"), elem(g, "w")}), "(0:x) != (x,y,w)");
    const auto inv = invariants(a);
    o.require(inv.socle_dim == 1, "socle dimension is not 1");
    o.require(inv.hilbert == Sizes{1, 4, 1}, "Hilbert function is not (1,4,1)");
    return o;
}

Outcome tensor_square_verbatim() {
    Outcome o;
    const auto t = rings::tensor_square();
    const auto& a = t.algebra;
    const auto x = elem(t, "x");
    o.require(tor(cyclic(a, {x}), cyclic(a, {elem(t, "y")}), 1).dim == 0, "Tor_1(R/(x), R/(y)) != 0");
    o.require(tor(cyclic(a, {x}), residue_field(a), 1).dim != 0, "Tor_1(R/(x), k) = 0");
    const auto product = tensor_product(rings::make(2, {"x"}, {"x^2"}).algebra, rings::make(2, {"y"}, {"y^2"}).algebra);
    o.require(invariants(product) == invariants(a), "tensor product invariants differ");
    o.require(classify(product) == classify(a), "tensor product classification differs");
    return o;
}

Outcome stretched_verbatim() {
    Outcome o;
    const auto s = rings::stretched();
    const auto inv = invariants(s.algebra);
    const auto c = classify(s.algebra);
    o.require(inv.length == 6, "length != 6");
    o.require(inv.edim == 3, "edim != 3");
    o.require(!ideal_power(maximal_ideal(s.algebra), 3).is_zero(), "m^3 = 0");
    o.require(c.is_gorenstein, "not Gorenstein");
    o.require(c.is_stretched, "not stretched");
    DiagnoseOptions opts;
    opts.depth = 2;
    const auto d = diagnose(s.algebra, &s, opts);
    o.require(to_string(d.verdict).rfind("Nontrivial_", 0) == 0, "verdict " + std::string(to_string(d.verdict)));
    if (o.ok) o.detail = "verdict " + std::string(to_string(d.verdict));
    return o;
}

struct SampledNode {
    const PresentedAlgebra* ring;
    std::size_t ring_index;
    const FiltNode* node;
};

Outcome filt_laws() {
    Outcome o;
    const std::vector<std::pair<PresentedAlgebra, std::size_t>> cases = {
        {rings::small_maximal(), 4}, {rings::small_maximal_y3(), 4}, {rings::gorenstein4(), 3}, {rings::stretched(), 3}};
    std::vector<std::vector<FiltLevel>> enumerations;
    std::vector<FpModule> x_modules;
    std::vector<SampledNode> pool;
    for (std::size_t r = 0; r < cases.size(); ++r) {
        const auto& ring = cases[r].first;
        const auto x = ring.variable(0);
        x_modules.push_back(cyclic(ring.algebra, {x}));
        EnumerationOptions opts;
        opts.x = x;
        enumerations.push_back(filt_enumerate(x_modules.back(), cases[r].second, opts));
    }
    for (std::size_t r = 0; r < cases.size(); ++r)
        for (const auto& level : enumerations[r])
            for (const auto& node : level.nodes) pool.push_back({&cases[r].first, r, &node});

    std::mt19937_64 rng(20261016);
    std::shuffle(pool.begin(), pool.end(), rng);
    o.require(pool.size() >= 200, "fewer than 200 enumerated nodes");
    pool.resize(std::min<std::size_t>(pool.size(), 200));

    std::size_t splices = 0;
    for (std::size_t s = 0; s < pool.size(); ++s) {
        const auto& [ring, r, node] = pool[s];
        const auto& a = ring->algebra;
        const auto x = ring->variable(0);
        const auto& xm = x_modules[r];
        const std::size_t n = node->level;
        const auto& m = node->module;

        o.require(m.dim() == n * xm.dim(), "length additivity fails");
        o.require(betti(m, 1) <= n, "beta_1 exceeds n");
        o.require(node->presentation.has_value(), "node lacks a presentation");
        if (node->presentation) {
            const auto cols = check_matrix_condition(a, *node->presentation, x);
            o.require(std::all_of(cols.begin(), cols.end(), [](bool b) { return b; }), "matrix condition fails");
            o.require(is_isomorphic(cokernel(a, node->presentation->relations), m).isomorphic,
                      "presentation does not present the node");
        }
        const auto ideal = complement_ideal(a, x);
        const auto q = quotient_ring_as_algebra(ideal);
        o.require(is_isomorphic(base_change(m, ideal, q), direct_power(residue_field(q.algebra), n)).isomorphic,
                  "M/IM is not k^n");
        o.require(verify_filtration(m, node_filtration(*node), xm), "filtration subquotients are not X");

        // Disjointness: other sampled nodes of the same ring are isomorphic only to themselves.
        for (std::size_t t = s + 1; t < pool.size(); ++t) {
            if (pool[t].ring_index != r) continue;
            if (pool[t].node->level != n) {
                o.require(pool[t].node->module.dim() != m.dim(), "levels overlap");
                continue;
            }
            o.require(!is_isomorphic(m, pool[t].node->module).isomorphic, "duplicate isomorphism class in a level");
        }

        // Splice: extend this node by a level-1 or level-2 node and refine the filtration.
        if (s % 8 == 0) {
            const auto& partner_level = enumerations[r][s % 16 == 0 ? 0 : 1];
            const auto& partner = partner_level.nodes[s % partner_level.nodes.size()];
            const auto e = ext1(partner.module, m);
            Vector coeffs(e.dim());
            for (auto& c : coeffs) c = static_cast<Scalar>(rng() % a->p());
            const auto w = extension_from_cocycle(partner.module, m, e, e.cocycle(coeffs));
            const auto steps = splice_filtration(w, node_filtration(*node), node_filtration(partner));
            o.require(steps.size() == n + partner.level, "splice has the wrong length");
            o.require(verify_filtration(w.middle, steps, xm), "splice law fails");
            ++splices;
        }
    }
    if (o.ok) o.detail = std::to_string(pool.size()) + " nodes, " + std::to_string(splices) + " splices";
    return o;
}

Outcome betti_machinery() {
    Outcome o;
    for (const auto& ring : test_rings())
        o.require(betti(residue_field(ring.algebra), 1) == ring.algebra->edim(), "beta_1(k) != edim");
    const auto t = rings::tensor_square();
    o.require(betti_numbers(cyclic(t.algebra, {t.variable(0)}), 6) == Sizes(7, 1), "beta_i(R/(x)) not all 1");

    const auto all = test_rings();
    std::vector<const PresentedAlgebra*> eligible;
    for (const auto& r : all)
        if (r.algebra->edim() >= 2) eligible.push_back(&r);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        const auto& ring = *eligible[rng() % eligible.size()];
        const auto combos = generator_combinations(ring.algebra);
        const auto x = combos[rng() % combos.size()];
        const auto ideal = complement_ideal(ring.algebra, x);
        const auto q = quotient_ring_as_algebra(ideal);
        const auto n = oracle::random_module(ring.algebra, rng);
        o.require(betti(base_change(n, ideal, q), 1) <= betti(n, 1), "base-change inequality fails");
        o.require(betti(residue_field(q.algebra), 1) == 1, "beta_1 of k over R/I is not 1");
    }
    return o;
}

Outcome constructions() {
    Outcome o;
    const auto s = rings::small_maximal();
    const auto e = idealization(matlis_dual(free_module(s.algebra, 1)));
    const auto inv = invariants(e);
    o.require(inv.length == 6 && inv.socle_dim == 1 && inv.hilbert == Sizes{1, 4, 1}, "idealization profile differs");
    o.require(inv == invariants(rings::gorenstein4().algebra), "idealization invariants differ from the ring");
    for (const auto& ring : test_rings()) {
        if (!classify(ring.algebra).is_gorenstein) continue;
        const auto r = free_module(ring.algebra, 1);
        o.require(is_isomorphic(matlis_dual(r), r).isomorphic, "Gorenstein ring not self-dual");
    }
    const auto g = rings::make(2, {"x", "y"}, {"x^3", "x^2y^2", "y^3"});
    const auto w = goto_condition(g);
    o.require(w.has_value() && w->l == 2, "Goto condition does not fire with l = 2");
    return o;
}

Outcome kernel_correctness() {
    Outcome o;
    for (const auto& c : corpus::ideals()) {
        const auto r = rings::make(c.p, c.vars, c.relations);
        o.require(r.algebra->dim() == oracle::quotient_dim(c.relations, c.vars, c.p),
                  "quotient dimension differs from the truncation oracle");
    }
    std::mt19937_64 rng(1000);
    std::size_t tested = 0;
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (int t = 0; t < 334; ++t, ++tested) {
            const std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 8;
            Matrix m(p, rows, cols);
            std::vector<oracle::Row> raw(rows, oracle::Row(cols));
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j) raw[i][j] = m(i, j) = static_cast<Scalar>(rng() % p);
            const auto e = rref(m);
            o.require(rref(e.reduced).reduced == e.reduced, "rref not idempotent");
            const auto k = kernel_basis(m);
            o.require(e.rank + k.cols() == cols, "rank-nullity fails");
            o.require((m * k).is_zero(), "kernel vector not annihilated");
            o.require(e.rank == oracle::rank(raw, p), "rank differs from the oracle");
        }
    }
    if (o.ok) o.detail = std::to_string(corpus::ideals().size()) + " ideals, " + std::to_string(tested) + " matrices";
    return o;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome determinism(const std::string& cli, const std::filesystem::path& scratch) {
    Outcome o;
    const auto a = scratch / "verify_workers1.json";
    const auto b = scratch / "verify_workers4.json";
    const auto run = [&](int workers, const std::filesystem::path& out) {
        const std::string cmd = "\"" + cli + "\" verify-paper --quiet --workers " + std::to_string(workers) +
                                " --json \"" + out.string() + "\"";
        return std::system(cmd.c_str());
    };
    o.require(run(1, a) == 0, "verify-paper failed with 1 worker");
    o.require(run(4, b) == 0, "verify-paper failed with 4 workers");
    const auto ja = slurp(a), jb = slurp(b);
    o.require(!ja.empty(), "empty report");
    o.require(ja == jb, "reports differ");
    if (o.ok) o.detail = std::to_string(ja.size()) + " identical bytes";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: acceptance <extclosure-cli> <scratch-dir>\n";
        return 2;
    }
    const std::string cli = argv[1];
    const std::filesystem::path scratch = argv[2];

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"hypersurface ladder replay", hypersurface_ladder},
        {"closure census with an orthogonal pair", closure_consistency},
        {"gorenstein4 ring computations", gorenstein4_verbatim},
        {"tensor square computations", tensor_square_verbatim},
        {"stretched ring computations", stretched_verbatim},
        {"filt laws on sampled nodes", filt_laws},
        {"Betti machinery", betti_machinery},
        {"constructions", constructions},
        {"kernel correctness", kernel_correctness},
        {"determinism across worker counts", [&] { return determinism(cli, scratch); }},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        failures += !o.ok;
        std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first;
        if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
        std::cout << std::endl;
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
