#include <doctest.h>

#include <algorithm>

#include "extclosure/diagnose.hpp"
#include "support/rings.hpp"

using namespace extclosure;

namespace {

bool has(const DiagnosisReport& r, Verdict v) {
    return std::find(r.applicable.begin(), r.applicable.end(), v) != r.applicable.end();
}

DiagnosisReport run(const PresentedAlgebra& r, std::size_t depth = 2) {
    DiagnoseOptions opts;
    opts.depth = depth;
    return diagnose(r.algebra, &r, opts);
}

}  // namespace

TEST_CASE("hypersurfaces are exclusive") {
    const auto r = run(rings::chain(3, 4));
    CHECK(r.verdict == Verdict::OnlyTrivial_Hypersurface);
    CHECK(r.applicable == std::vector<Verdict>{Verdict::OnlyTrivial_Hypersurface});
    CHECK(r.classification.is_gorenstein);
}

TEST_CASE("orthogonal pair with a census") {
    const auto g = rings::gorenstein4();
    const auto r = run(g);
    CHECK(r.verdict == Verdict::Nontrivial_OrthogonalPair);
    REQUIRE(r.pair);
    CHECK(r.pair->first == g.variable(0));
    CHECK(r.pair->second == g.variable(1));
    REQUIRE(r.census);
    CHECK_FALSE(r.census->contains_k);
}

TEST_CASE("stretched Gorenstein ring") {
    const auto s = rings::stretched();
    const auto r = run(s);
    CHECK(r.verdict == Verdict::Nontrivial_OrthogonalPair);
    REQUIRE(r.pair);
    CHECK(r.pair->first == s.variable(0));
    CHECK(r.pair->second == s.variable(1));
    CHECK(has(r, Verdict::Nontrivial_StretchedGorenstein));
}

TEST_CASE("Goto condition") {
    const auto g = rings::make(2, {"x", "y"}, {"x^3", "x^2y^2", "y^3"});
    const auto w = goto_condition(g);
    REQUIRE(w);
    CHECK(w->l == 2);
    CHECK(w->name == "x");
    CHECK(has(run(g), Verdict::Nontrivial_GotoCondition));

    const auto no_presentation = diagnose(g.algebra, nullptr);
    CHECK_FALSE(no_presentation.goto_witness);
    CHECK_FALSE(has(no_presentation, Verdict::Nontrivial_GotoCondition));
}

TEST_CASE("bounded Betti witness") {
    const auto t = rings::tensor_square();
    const auto r = run(t);
    CHECK_FALSE(r.pair);
    REQUIRE(r.bounded_betti);
    CHECK(r.bounded_betti->x == t.variable(0));
    CHECK(r.bounded_betti->betti == std::vector<std::size_t>(7, 1));
    CHECK(has(r, Verdict::Nontrivial_BoundedBetti));
    // The ring is also stretched Gorenstein, which comes first in precedence.
    CHECK(r.verdict == Verdict::Nontrivial_StretchedGorenstein);
}

TEST_CASE("not Gorenstein") {
    const auto r = run(rings::make(2, {"x", "y"}, {"x^2", "y^2", "x y"}));
    CHECK(has(r, Verdict::NecessaryConditionsFail));
}

TEST_CASE("monomial corpus in two variables with m^4 = 0 is never inconclusive") {
    // Every m-primary monomial ideal with m^4 inside it is generated by a
    // staircase: for each a in 0..3 the least b with x^a y^b in the ideal.
    std::size_t rings_seen = 0;
    for (int b0 = 1; b0 <= 4; ++b0)
        for (int b1 = 0; b1 <= std::min(b0, 3); ++b1)
            for (int b2 = 0; b2 <= std::min(b1, 2); ++b2)
                for (int b3 = 0; b3 <= std::min(b2, 1); ++b3) {
                    const int bs[4] = {b0, b1, b2, b3};
                    std::vector<std::string> gens = {"x^4"};
                    for (int a = 0; a < 4; ++a) gens.push_back("x^" + std::to_string(a) + "y^" + std::to_string(bs[a]));
                    const auto r = rings::make(2, {"x", "y"}, gens);
                    if (r.algebra->edim() < 2) continue;
                    ++rings_seen;
                    DiagnoseOptions opts;
                    opts.attach_census = false;
                    const auto d = diagnose(r.algebra, &r, opts);
                    CAPTURE(gens);
                    CHECK(d.verdict != Verdict::Inconclusive);
                    CHECK(d.verdict != Verdict::OnlyTrivial_Hypersurface);
                }
    CHECK(rings_seen > 10);
}
