#pragma once

// Which sufficient condition for a nontrivial extension-closed subcategory
// (or for triviality) a given local algebra satisfies.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "extclosure/extensions.hpp"

namespace extclosure {

enum class Verdict {
    OnlyTrivial_Hypersurface,
    Nontrivial_OrthogonalPair,
    Nontrivial_StretchedGorenstein,
    Nontrivial_BoundedBetti,
    Nontrivial_GotoCondition,
    NecessaryConditionsFail,
    Inconclusive,
};

std::string_view to_string(Verdict v);

struct BoundedBettiWitness {
    RingElement x;                    // (0:x) = (x)
    std::vector<std::size_t> betti;   // of R/(x), all equal to 1
};

struct GotoWitness {
    std::size_t variable = 0;
    std::string name;
    std::size_t l = 0;  // Y^{l+1} = 0 in R and every relation has order >= l+1
};

struct DiagnoseOptions {
    std::size_t depth = 3;          // closure census depth for the orthogonal-pair branch
    bool attach_census = true;
    std::size_t betti_steps = 6;    // length of the bounded-Betti witness sequence
    EnumerationOptions enumeration;
};

struct DiagnosisReport {
    AlgebraInvariants invariants;
    Classification classification;
    Verdict verdict = Verdict::Inconclusive;
    /// Every applicable condition in precedence order; verdict is the first.
    std::vector<Verdict> applicable;
    std::optional<std::pair<RingElement, RingElement>> pair;
    std::optional<ClosureVerdict> census;
    std::optional<std::string> census_error;
    std::optional<BoundedBettiWitness> bounded_betti;
    std::optional<GotoWitness> goto_witness;
    std::vector<std::string> notes;
};

/// Checks in order: hypersurface (exclusive), orthogonal generator pair,
/// stretched Gorenstein with edim >= 2, some x in m \ m^2 with (0:x) = (x),
/// the Goto condition on `presentation` (skipped when null), and finally
/// the Gorenstein necessary condition.
DiagnosisReport diagnose(const AlgebraPtr& algebra, const PresentedAlgebra* presentation = nullptr,
                         const DiagnoseOptions& options = {});

/// Smallest l >= 1 such that the variable's (l+1)-th power vanishes in R and
/// every relation has order >= l+1, over all variables in declared order.
std::optional<GotoWitness> goto_condition(const PresentedAlgebra& presentation);

}  // namespace extclosure
