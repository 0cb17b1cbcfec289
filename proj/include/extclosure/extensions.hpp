#pragma once

// Extensions from Ext^1 cocycles, enumeration of filt^n(X) up to
// isomorphism, triangular presentations of filtered modules, and the ladder
// of short exact sequences over k[x]/(x^n).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "extclosure/errors.hpp"
#include "extclosure/module.hpp"

namespace extclosure {

/// A verified short exact sequence 0 -> sub -> middle -> quotient -> 0.
struct ExtensionWitness {
    FpModule sub;
    FpModule middle;
    FpModule quotient;
    Matrix inject;   // middle.dim x sub.dim
    Matrix project;  // quotient.dim x middle.dim
};

/// Middle term of the extension of X by Y classified by `cocycle`, a vector
/// of Hom(F_1, Y) = Y^betti1 for the resolution stored in `ext`
/// (which must be ext1(x, y)). Throws Error if the result fails verification.
ExtensionWitness extension_from_cocycle(const FpModule& x, const FpModule& y, const Ext1Space& ext,
                                        const Vector& cocycle);

/// Exactness and module-map checks for a candidate sequence.
bool is_exact_sequence(const ExtensionWitness& w);

struct FiltNode {
    std::size_t level = 0;
    FpModule module;
    /// chain[k] has sub = the level-(k+1) ancestor and middle = the level-(k+2) one;
    /// chain.back().middle is `module`.
    std::vector<ExtensionWitness> chain;
    /// Triangular presentation with diagonal x; present when X = R/(x) was declared.
    std::optional<FreePresentation> presentation;
    /// dim M x level: images of the free basis under the presentation's surjection.
    Matrix generator_images;
    /// Index of the parent in the previous level and the cocycle coefficients used.
    std::size_t parent = 0;
    std::vector<Scalar> cocycle_coefficients;
};

struct FiltLevel {
    std::size_t level = 0;
    std::vector<FiltNode> nodes;
    std::size_t cocycles_enumerated = 0;
    /// Pairs whose isomorphism search was inconclusive; they were kept distinct.
    std::size_t inconclusive_pairs = 0;
};

struct EnumerationOptions {
    std::size_t budget = std::size_t{1} << 20;  // cocycles per level
    std::size_t workers = 1;
    IsoOptions iso;
    /// When X = R/(x) with generator the class of 1: build triangular presentations.
    std::optional<RingElement> x;
};

class EnumerationBudgetExceeded : public Error {
public:
    EnumerationBudgetExceeded(std::size_t level, std::size_t required, std::size_t budget,
                              std::vector<FiltLevel> partial);
    std::size_t level() const noexcept { return level_; }
    std::size_t required() const noexcept { return required_; }
    const std::vector<FiltLevel>& partial() const noexcept { return partial_; }

private:
    std::size_t level_;
    std::size_t required_;
    std::vector<FiltLevel> partial_;
};

/// Levels 1..n of filt(X), each deduplicated up to isomorphism and sorted by
/// a canonical fingerprint, so the output does not depend on the worker count.
std::vector<FiltLevel> filt_enumerate(const FpModule& x, std::size_t n, const EnumerationOptions& options = {});

/// Canonical ordering key: dimension, action-rank profile, then matrix entries.
std::vector<std::uint64_t> module_fingerprint(const FpModule& m);

struct ClosureVerdict {
    RingElement x;
    std::size_t depth = 0;
    bool contains_k = false;
    /// Set when contains_k: the node and an element of its socle outside mM.
    std::optional<FiltNode> witness_node;
    Vector splitting_element;
    /// Iso-class counts per level 1..depth (all without a k summand when !contains_k).
    std::vector<std::size_t> census;
    bool bounded_depth = true;  // a negative answer only covers levels <= depth
};

/// Searches filt^n(R/(x)) for n <= depth for a module with k as a direct summand.
/// Requires x in m \ m^2. Propagates EnumerationBudgetExceeded.
ClosureVerdict ext_closure_contains_k(const AlgebraPtr& algebra, const RingElement& x, std::size_t depth,
                                      const EnumerationOptions& options = {});

/// Rebuilds the n x n upper triangular presentation (diagonal x) of the
/// node's module from its chain. Throws LiftFailure on inconsistent data.
FreePresentation build_presentation_matrix(const FiltNode& node, const FpModule& x_module, const RingElement& x);

/// For j = 2..n: whether (c_{1,j}, ..., c_{j-1,j}) (0:x) lies in the image of
/// the leading (j-1) x (j-1) block. Entry j-2 of the result is column j.
std::vector<bool> check_matrix_condition(const AlgebraPtr& algebra, const FreePresentation& pres,
                                         const RingElement& x);

/// Column operations moving each strict-upper entry c into the complement
/// ideal I = (y, z_3, ..., z_e) of x, up to its constant term: c = u + ax + t
/// with u in F_p, t in I becomes u + t. Entries already in I are untouched.
/// The image of the matrix, hence the cokernel, is verified unchanged.
FreePresentation strict_upper_reduction(const AlgebraPtr& algebra, const FreePresentation& pres,
                                        const RingElement& x);

/// Nested submodule bases F_1 < ... < F_n = M read off the node's chain.
std::vector<Matrix> node_filtration(const FiltNode& node);

/// Filtration of the middle term of w obtained from filtrations of its sub
/// and quotient: the image of the first, then preimages of the second.
std::vector<Matrix> splice_filtration(const ExtensionWitness& w, const std::vector<Matrix>& sub_filtration,
                                      const std::vector<Matrix>& quotient_filtration);

/// Whether steps are nested submodules ending at M with every subquotient
/// isomorphic to x.
bool verify_filtration(const FpModule& m, const std::vector<Matrix>& steps, const FpModule& x,
                       const IsoOptions& iso = {});

struct LadderStep {
    std::size_t i = 0;
    bool well_defined = false;
    bool module_maps = false;
    bool exact = false;
};

struct LadderReport {
    std::size_t n = 0;  // A = F_p[x]/(x^n)
    std::vector<LadderStep> steps;
    /// reachable[l-1]: exponents i with R/(x^i) reached from the seed R/(x^l), 1 <= l < n.
    std::vector<std::vector<std::size_t>> reachable;

    bool all_exact() const;
    bool closure_complete() const;
};

/// Verifies 0 -> R/(x^i) -> R/(x^{i-1}) + R/(x^{i+1}) -> R/(x^i) -> 0 for
/// 1 <= i <= n-1 with f(a) = (a, ax) and g(a, b) = ax - b, then replays the
/// closure from each seed. Throws NotHypersurface when edim > 1.
LadderReport hypersurface_ladder_check(const AlgebraPtr& algebra);

}  // namespace extclosure
