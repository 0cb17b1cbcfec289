#include "extclosure/diagnose.hpp"

#include <algorithm>
#include <cstdint>

namespace extclosure {

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::OnlyTrivial_Hypersurface: return "OnlyTrivial_Hypersurface";
        case Verdict::Nontrivial_OrthogonalPair: return "Nontrivial_OrthogonalPair";
        case Verdict::Nontrivial_StretchedGorenstein: return "Nontrivial_StretchedGorenstein";
        case Verdict::Nontrivial_BoundedBetti: return "Nontrivial_BoundedBetti";
        case Verdict::Nontrivial_GotoCondition: return "Nontrivial_GotoCondition";
        case Verdict::NecessaryConditionsFail: return "NecessaryConditionsFail";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

std::optional<GotoWitness> goto_condition(const PresentedAlgebra& presentation) {
    const PolynomialRing& ring = presentation.ring;
    const std::size_t nvars = ring.variables.size();
    std::uint64_t min_order = UINT64_MAX;
    for (const auto& r : presentation.relations)
        if (!r.is_zero()) min_order = std::min(min_order, r.order());

    const std::size_t length = presentation.algebra->dim();
    for (std::size_t v = 0; v < nvars; ++v) {
        // Y^length = 0 in any local algebra of this length, so the search is bounded.
        for (std::size_t l = 1; l < length; ++l) {
            const Polynomial power =
                Polynomial::monomial(ring, Monomial::variable(nvars, v, static_cast<Exponent>(l + 1)));
            if (!presentation.element(power).is_zero()) continue;
            if (min_order < l + 1) break;  // larger l only tightens the order bound
            return GotoWitness{v, ring.variables[v], l};
        }
    }
    return std::nullopt;
}

DiagnosisReport diagnose(const AlgebraPtr& algebra, const PresentedAlgebra* presentation,
                         const DiagnoseOptions& options) {
    DiagnosisReport report;
    report.invariants = invariants(algebra);
    report.classification = classify(algebra);

    if (report.classification.is_hypersurface) {
        report.applicable.push_back(Verdict::OnlyTrivial_Hypersurface);
        report.verdict = Verdict::OnlyTrivial_Hypersurface;
        return report;
    }

    report.pair = find_orthogonal_generator_pair(algebra);
    if (report.pair) {
        report.applicable.push_back(Verdict::Nontrivial_OrthogonalPair);
        if (options.attach_census) {
            try {
                report.census = ext_closure_contains_k(algebra, report.pair->first, options.depth, options.enumeration);
            } catch (const EnumerationBudgetExceeded& e) {
                report.census_error = e.what();
            }
        }
    }

    for (const auto& x : generator_combinations(algebra)) {
        if (annihilator(x, algebra) == ideal_generated(algebra, {x})) {
            BoundedBettiWitness w{x, betti_numbers(cyclic_module(ideal_generated(algebra, {x})), options.betti_steps)};
            report.bounded_betti = std::move(w);
            break;
        }
    }

    const Classification& c = report.classification;
    if (c.is_stretched && c.is_gorenstein && report.invariants.edim >= 2) {
        report.applicable.push_back(Verdict::Nontrivial_StretchedGorenstein);
        if (!report.pair && !report.bounded_betti)
            report.notes.emplace_back("witness over extension field not searched");
    }
    if (report.bounded_betti) report.applicable.push_back(Verdict::Nontrivial_BoundedBetti);

    if (presentation) {
        report.goto_witness = goto_condition(*presentation);
        if (report.goto_witness) report.applicable.push_back(Verdict::Nontrivial_GotoCondition);
    } else {
        report.notes.emplace_back("no presentation given; Goto condition not checked");
    }

    if (!c.is_gorenstein) {
        report.applicable.push_back(Verdict::NecessaryConditionsFail);
        report.notes.emplace_back("not Gorenstein: by the Gorenstein necessary condition a nontrivial subcategory exists");
    }

    report.verdict = report.applicable.empty() ? Verdict::Inconclusive : report.applicable.front();
    if (report.applicable.empty()) report.applicable.push_back(Verdict::Inconclusive);
    return report;
}

}  // namespace extclosure
