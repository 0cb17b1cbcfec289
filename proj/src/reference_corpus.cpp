#include "extclosure/reference_corpus.hpp"

#include <algorithm>
#include <functional>

namespace extclosure {

namespace {

struct Context {
    const CorpusOptions& options;
    LoadedRing gorenstein4 = load_ring_text(reference_rings::kGorenstein4, "gorenstein4");
    LoadedRing stretched = load_ring_text(reference_rings::kStretched, "stretched");
    LoadedRing small = load_ring_text(reference_rings::kSmallMaximal, "small_maximal");
    LoadedRing square = load_ring_text(reference_rings::kTensorSquare, "tensor_square");
    std::optional<std::vector<FiltLevel>> gorenstein4_filt;

    explicit Context(const CorpusOptions& o) : options(o) {}

    FpModule cyclic(const LoadedRing& r, const std::string& name) const {
        return cyclic_module(ideal_generated(r.algebra(), {r.element(name)}));
    }

    const std::vector<FiltLevel>& filt() {
        if (!gorenstein4_filt) {
            EnumerationOptions e = options.enumeration;
            e.x = gorenstein4.element("x");
            gorenstein4_filt = filt_enumerate(cyclic(gorenstein4, "x"), options.depth, e);
        }
        return *gorenstein4_filt;
    }
};

using Body = std::function<bool(Context&, Json&)>;

struct Entry {
    const char* id;
    const char* claim;
    Body body;
};

const std::vector<Entry>& entries() {
    static const std::vector<Entry> list = {
        {"parse_binomial_char2", "xz-yw over F_2 parses to xz + yw",
         [](Context&, Json& out) {
             const PolynomialRing ring{2, {"x", "y", "z", "w"}};
             const Polynomial f = parse_polynomial("xz-yw", ring);
             out = f.to_string();
             return f.to_string() == "xz + yw";
         }},
        {"parse_binomial_char3", "x^3-y^2 over F_3 parses to x^3 + 2y^2",
         [](Context&, Json& out) {
             const PolynomialRing ring{3, {"x", "y", "z"}};
             const Polynomial f = parse_polynomial("x^3-y^2", ring);
             out = f.to_string();
             return f.to_string() == "x^3 + 2y^2";
         }},
        {"stretched_dimension", "F_3[x,y,z]/(xy,xz,yz,x^3-y^2,x^3-z^2) has dimension 6 and edim 3",
         [](Context& c, Json& out) {
             const auto& a = c.stretched.algebra();
             out = {{"dim", a->dim()}, {"edim", a->edim()}};
             return a->dim() == 6 && a->edim() == 3;
         }},
        {"stretched_invariants", "stretched ring: length 6, edim 3, Hilbert function (1,3,1,1), m^3 != 0",
         [](Context& c, Json& out) {
             const auto inv = invariants(c.stretched.algebra());
             out = invariants_json(inv);
             return inv.length == 6 && inv.edim == 3 && inv.hilbert == std::vector<std::size_t>{1, 3, 1, 1} &&
                    inv.top_socle_degree >= 3;
         }},
        {"stretched_classification", "stretched ring is Gorenstein and stretched, not a hypersurface",
         [](Context& c, Json& out) {
             const auto cl = classify(c.stretched.algebra());
             out = classification_json(cl);
             return cl.is_gorenstein && cl.is_stretched && !cl.is_hypersurface;
         }},
        {"gorenstein4_colon", "(0:x) = (x,y,w) of dimension 4 in gorenstein4",
         [](Context& c, Json& out) {
             const auto& a = c.gorenstein4.algebra();
             const Ideal ann = annihilator(c.gorenstein4.element("x"), a);
             const Ideal expected =
                 ideal_generated(a, {c.gorenstein4.element("x"), c.gorenstein4.element("y"), c.gorenstein4.element("w")});
             out = {{"dim", ann.dim()}, {"equals_xyw", ann == expected}};
             return ann.dim() == 4 && ann == expected;
         }},
        {"stretched_cube", "m^3 = span{x^3}, of dimension 1, in the stretched ring",
         [](Context& c, Json& out) {
             const auto& a = c.stretched.algebra();
             const Ideal cube = ideal_power(maximal_ideal(a), 3);
             const Ideal x3 = ideal_generated(a, {c.stretched.element("x^3")});
             out = {{"dim", cube.dim()}, {"equals_x3", cube == x3}};
             return cube.dim() == 1 && cube == x3 && !c.stretched.element("x^3").is_zero();
         }},
        {"idealization_profile", "S x E_S(k) for S = F_2[x,y]/(x^2,xy,y^2) has the invariants of gorenstein4",
         [](Context& c, Json& out) {
             const AlgebraPtr ideal = idealization(matlis_dual(free_module(c.small.algebra(), 1)));
             const auto inv = invariants(ideal);
             const auto cl = classify(ideal);
             out = {{"invariants", invariants_json(inv)}, {"gorenstein", cl.is_gorenstein}};
             return inv.length == 6 && cl.is_gorenstein && inv.hilbert == std::vector<std::size_t>{1, 4, 1} &&
                    inv == invariants(c.gorenstein4.algebra()) && cl == classify(c.gorenstein4.algebra());
         }},
        {"tensor_invariants", "F_2[x]/(x^2) (x) F_2[y]/(y^2) has the invariants of F_2[x,y]/(x^2,y^2)",
         [](Context& c, Json& out) {
             const auto s = load_ring_text("p=2 vars=x\nx^2\n").algebra();
             const auto t = load_ring_text("p=2 vars=y\ny^2\n").algebra();
             const auto inv = invariants(tensor_product(s, t));
             out = invariants_json(inv);
             return inv == invariants(c.square.algebra()) && inv.length == 4 &&
                    inv.hilbert == std::vector<std::size_t>{1, 2, 1};
         }},
        {"betti1_residue_field", "beta_1(k) = edim R on the corpus rings",
         [](Context& c, Json& out) {
             bool ok = true;
             out = Json::object();
             for (const LoadedRing* r : {&c.gorenstein4, &c.stretched, &c.small, &c.square}) {
                 const std::size_t b1 = betti(residue_field(r->algebra()), 1);
                 out[r->source] = {{"beta1", b1}, {"edim", r->algebra()->edim()}};
                 ok = ok && b1 == r->algebra()->edim();
             }
             return ok;
         }},
        {"gorenstein4_tor_vanishes", "Tor_1(R/(x), R/(z)) = 0 over gorenstein4",
         [](Context& c, Json& out) {
             const auto t = tor(c.cyclic(c.gorenstein4, "x"), c.cyclic(c.gorenstein4, "z"), 1);
             out = t.dim;
             return t.dim == 0;
         }},
        {"gorenstein4_tor_k", "Tor_1(R/(x), k) != 0 over gorenstein4",
         [](Context& c, Json& out) {
             const auto t = tor(c.cyclic(c.gorenstein4, "x"), residue_field(c.gorenstein4.algebra()), 1);
             out = t.dim;
             return t.dim > 0;
         }},
        {"tensor_square_tor_vanishes", "Tor_1(R/(x), R/(y)) = 0 over F_2[x,y]/(x^2,y^2)",
         [](Context& c, Json& out) {
             const auto t = tor(c.cyclic(c.square, "x"), c.cyclic(c.square, "y"), 1);
             out = t.dim;
             return t.dim == 0;
         }},
        {"injective_hull", "the Matlis dual of S = F_2[x,y]/(x^2,xy,y^2) is E_S(k): length 3, simple socle, 2 generators",
         [](Context& c, Json& out) {
             const FpModule e = matlis_dual(free_module(c.small.algebra(), 1));
             const std::size_t soc = module_socle(e).cols();
             const std::size_t b0 = minimal_cover(e).betti0();
             out = {{"dim", e.dim()}, {"socle_dim", soc}, {"betti0", b0}};
             return e.dim() == 3 && soc == 1 && b0 == 2;
         }},
        {"base_change_residue_power", "M/IM = k^n over R/I for every enumerated M in filt^n(R/(x)) over gorenstein4",
         [](Context& c, Json& out) {
             const auto& a = c.gorenstein4.algebra();
             const RingElement x = c.gorenstein4.element("x");
             const Ideal i = complement_ideal(a, x);
             const QuotientAlgebra q = quotient_ring_as_algebra(i);
             const FpModule k = residue_field(q.algebra);
             std::size_t checked = 0;
             bool ok = true;
             for (const auto& level : c.filt())
                 for (const auto& node : level.nodes) {
                     ok = ok && is_isomorphic(base_change(node.module, i, q), direct_power(k, level.level)).isomorphic;
                     ++checked;
                 }
             out = {{"nodes", checked}};
             return ok;
         }},
        {"filt_length", "every node at level n has length n * length(X)",
         [](Context& c, Json& out) {
             const FpModule x = c.cyclic(c.gorenstein4, "x");
             Json census = Json::array();
             bool ok = true;
             for (const auto& level : c.filt()) {
                 census.push_back(level.nodes.size());
                 for (const auto& node : level.nodes) ok = ok && node.module.dim() == level.level * x.dim();
             }
             out = {{"census", census}, {"length_x", x.dim()}};
             return ok;
         }},
        {"presentation_level1", "for n = 1 the presentation is (x) with cokernel R/(x)",
         [](Context& c, Json& out) {
             const auto& a = c.gorenstein4.algebra();
             const FiltNode& node = c.filt().front().nodes.front();
             const FreePresentation pres = build_presentation_matrix(node, node.module, c.gorenstein4.element("x"));
             out = ring_matrix_json(*a, pres.relations);
             return pres.relations.rows == 1 && pres.relations.at(0, 0) == c.gorenstein4.element("x") &&
                    is_isomorphic(cokernel(a, pres.relations), c.cyclic(c.gorenstein4, "x")).isomorphic;
         }},
        {"hypersurface_trivial", "F_3[x]/(x^4) has only trivial extension-closed subcategories",
         [](Context&, Json& out) {
             const LoadedRing r = load_ring_text(reference_rings::kQuartic, "quartic");
             const DiagnosisReport d = diagnose(r.algebra(), &r.presentation);
             const LadderReport ladder = hypersurface_ladder_check(r.algebra());
             out = {{"verdict", std::string(to_string(d.verdict))},
                    {"ladder_exact", ladder.all_exact()},
                    {"closure_complete", ladder.closure_complete()}};
             return d.verdict == Verdict::OnlyTrivial_Hypersurface && ladder.all_exact() && ladder.closure_complete();
         }},
        {"stretched_nontrivial", "the stretched ring has a nontrivial subcategory: pair (x,y), stretched Gorenstein",
         [](Context& c, Json& out) {
             DiagnoseOptions o;
             o.depth = c.options.depth;
             o.enumeration = c.options.enumeration;
             const DiagnosisReport d = diagnose(c.stretched.algebra(), &c.stretched.presentation, o);
             out = diagnosis_json(c.stretched.algebra(), d);
             const bool pair_xy = d.pair && d.pair->first == c.stretched.element("x") &&
                                  d.pair->second == c.stretched.element("y");
             const bool sg = std::find(d.applicable.begin(), d.applicable.end(),
                                       Verdict::Nontrivial_StretchedGorenstein) != d.applicable.end();
             const bool census_ok = d.census && !d.census->contains_k;
             return d.verdict == Verdict::Nontrivial_OrthogonalPair && pair_xy && sg && census_ok;
         }},
        {"gorenstein4_analyze", "gorenstein4 = F_2[x,y,z,w]/(x^2,xy,xz-yw,xw,y^2,yz,z^2,zw,w^2) is an Artinian Gorenstein local ring",
         [](Context& c, Json& out) {
             out = analyze_json(c.gorenstein4.algebra());
             return out["classification"]["gorenstein"].get<bool>() && out["invariants"]["length"] == 6;
         }},
    };
    return list;
}

}  // namespace

std::vector<CorpusCheck> run_reference_corpus(const CorpusOptions& options) {
    Context ctx(options);
    std::vector<CorpusCheck> out;
    for (const auto& e : entries()) {
        CorpusCheck check{e.id, e.claim, false, nullptr};
        try {
            check.passed = e.body(ctx, check.observed);
        } catch (const Error& err) {
            check.observed = {{"error", err.what()}};
        }
        out.push_back(std::move(check));
    }
    return out;
}

Json corpus_json(const std::vector<CorpusCheck>& checks) {
    Json list = Json::array();
    std::size_t passed = 0;
    for (const auto& c : checks) {
        list.push_back({{"id", c.id}, {"claim", c.claim}, {"passed", c.passed}, {"observed", c.observed}});
        passed += c.passed;
    }
    return {{"checks", list},
            {"passed", passed},
            {"failed", checks.size() - passed},
            {"all_passed", passed == checks.size()}};
}

}  // namespace extclosure
