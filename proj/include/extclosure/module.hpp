#pragma once

// Finitely generated modules over a LocalAlgebra, stored as F_p-vector
// spaces with one action matrix per algebra basis element.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "extclosure/algebra.hpp"

namespace extclosure {

/// Structure-constant checks: unit acts as identity and
/// action[i] * action[j] == sum_k T[i][j][k] * action[k].
std::vector<std::string> check_module_axioms(const LocalAlgebra& algebra, const std::vector<Matrix>& action);

class FpModule {
public:
    FpModule() = default;
    /// Validates with check_module_axioms; throws InvalidArgument on failure.
    FpModule(AlgebraPtr algebra, std::vector<Matrix> action);

    /// Skips validation. For actions derived from already valid modules by
    /// sums, quotients, restrictions, or transposes.
    static FpModule from_verified_action(AlgebraPtr algebra, std::vector<Matrix> action);

    const AlgebraPtr& algebra() const noexcept { return algebra_; }
    std::uint32_t p() const { return algebra_->p(); }
    std::size_t dim() const noexcept { return dim_; }
    const Matrix& action(std::size_t basis_index) const { return action_.at(basis_index); }
    const std::vector<Matrix>& actions() const noexcept { return action_; }
    Matrix action(const RingElement& a) const;

private:
    AlgebraPtr algebra_;
    std::size_t dim_ = 0;
    std::vector<Matrix> action_;
};

/// Whether f (target.dim x source.dim) commutes with the algebra action.
bool is_module_map(const FpModule& source, const FpModule& target, const Matrix& f);

/// Matrix with ring-element entries.
struct RingMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<RingElement> entries;

    RingMatrix() = default;
    RingMatrix(const LocalAlgebra& algebra, std::size_t rows, std::size_t cols);

    const RingElement& at(std::size_t r, std::size_t c) const { return entries.at(r * cols + c); }
    RingElement& at(std::size_t r, std::size_t c) { return entries.at(r * cols + c); }
    /// Column c as a vector of the free module A^rows.
    Vector column_vector(std::size_t c) const;
    static RingMatrix from_free_vectors(const LocalAlgebra& algebra, std::size_t rows, std::span<const Vector> cols);
};

/// F_p matrix of the A-linear map A^cols -> A^rows given by `m`.
/// Coordinates of A^r are ordered block-wise: index (i * dim A + b).
Matrix expand(const LocalAlgebra& algebra, const RingMatrix& m);

/// Same map tensored with a module: N^cols -> N^rows.
Matrix expand_over(const FpModule& module, const RingMatrix& m);

/// A presentation A^betti1 -> A^betti0 -> M -> 0 by its relation matrix.
struct FreePresentation {
    std::size_t betti0 = 0;
    std::size_t betti1 = 0;
    RingMatrix relations;
};

// ---------------------------------------------------------------------------
// Constructions

FpModule free_module(const AlgebraPtr& algebra, std::size_t rank);
/// A / I with the induced action; basis = non-pivot coordinates of I.
FpModule cyclic_module(const Ideal& ideal);
FpModule residue_field(const AlgebraPtr& algebra);
FpModule direct_sum(const FpModule& a, const FpModule& b);
FpModule direct_power(const FpModule& a, std::size_t n);
FpModule matlis_dual(const FpModule& m);

struct ModuleQuotient {
    FpModule module;
    QuotientSpace coords;
};

/// M / W for a submodule W given by spanning columns.
ModuleQuotient quotient_module(const FpModule& m, const Matrix& submodule);
/// The submodule spanned by the columns of `basis` (must be A-stable and of full column rank).
FpModule restrict_to_submodule(const FpModule& m, const Matrix& basis);
/// Smallest submodule containing the given columns.
Matrix submodule_generated(const FpModule& m, const Matrix& vectors);
/// m M as a subspace (columns).
Matrix radical(const FpModule& m);
/// (0 :_M m) as a subspace (columns).
Matrix module_socle(const FpModule& m);
/// A^rows / image(relations).
FpModule cokernel(const AlgebraPtr& algebra, const RingMatrix& relations);

struct QuotientAlgebra {
    AlgebraPtr algebra;
    QuotientSpace coords;
};

/// A / I as an algebra, for a proper ideal I.
QuotientAlgebra quotient_ring_as_algebra(const Ideal& ideal);
/// M / IM as a module over A / I.
FpModule base_change(const FpModule& m, const Ideal& ideal, const QuotientAlgebra& quotient);
FpModule base_change(const FpModule& m, const Ideal& ideal);

/// S x N with (s, n)(s', n') = (ss', sn' + s'n). Basis: that of S, then that of N.
AlgebraPtr idealization(const FpModule& n);

// ---------------------------------------------------------------------------
// Free covers, resolutions, Betti numbers

/// Minimal free cover A^betti0 -> M together with its minimal relations.
struct MinimalCover {
    Matrix generators;    // dim M x betti0: images of the free basis
    Matrix surjection;    // dim M x (betti0 * dim A)
    Matrix section;       // (betti0 * dim A) x dim M, surjection * section = I
    RingMatrix relations; // betti0 x betti1, entries in m

    std::size_t betti0() const noexcept { return generators.cols(); }
    std::size_t betti1() const noexcept { return relations.cols; }
};

MinimalCover minimal_cover(const FpModule& m);
FreePresentation minimal_presentation(const FpModule& m);

struct FreeResolution {
    std::vector<std::size_t> ranks;          // F_0 .. F_steps
    Matrix augmentation;                     // F_0 -> M
    std::vector<RingMatrix> differentials;   // differentials[i] : F_{i+1} -> F_i
};

/// Minimal free resolution through F_steps. Exactness of every computed
/// stage is verified; a failure throws (it would indicate a bug).
FreeResolution minimal_free_resolution(const FpModule& m, std::size_t steps);
std::size_t betti(const FpModule& m, std::size_t i);
std::vector<std::size_t> betti_numbers(const FpModule& m, std::size_t up_to);

struct HomologyResult {
    std::size_t dim = 0;
    Matrix basis;  // representatives, as columns
};

/// Tor_i^A(M, N) = H_i(F(M) (x) N).
HomologyResult tor(const FpModule& m, const FpModule& n, std::size_t i);

/// Ext^1(N, L) with coset representatives inside Hom(F_1, L) = L^betti1.
struct Ext1Space {
    FreeResolution resolution;  // of N, through F_2
    Matrix cocycles;            // columns: representatives of an F_p-basis of Ext^1
    std::size_t dim() const noexcept { return cocycles.cols(); }
    /// Linear combination of the representatives.
    Vector cocycle(std::span<const Scalar> coefficients) const;
};

Ext1Space ext1(const FpModule& n, const FpModule& l);

// ---------------------------------------------------------------------------
// Hom, isomorphism, structure

/// Basis of Hom_A(M, N) as target.dim x source.dim matrices.
std::vector<Matrix> hom_space(const FpModule& m, const FpModule& n);
std::vector<Matrix> hom_space(const MinimalCover& cover_of_m, const FpModule& n);

struct IsoOptions {
    std::uint64_t seed = 0;
    std::size_t samples = std::size_t{1} << 14;
    std::size_t exhaustive_limit = 8;
};

/// Cached isomorphism invariants of one module.
struct ModuleSummary {
    FpModule module;
    MinimalCover cover;
    std::vector<std::size_t> profile;  // ranks and Jordan data; equal for isomorphic modules
    std::size_t end_dim = 0;
};

ModuleSummary summarize(const FpModule& m);

struct IsoResult {
    bool isomorphic = false;
    std::optional<Matrix> witness;  // invertible module map M -> N
};

/// Dimension and invariant checks, then a search for an invertible element
/// of Hom(M, N). A map is invertible iff its induced map on M/mM -> N/mN is,
/// so the search runs over the image T of Hom(M, N) in Hom(M/mM, N/mN):
/// seeded random sampling, then exhaustive search when dim T <=
/// exhaustive_limit. Throws SearchInconclusive otherwise. When T has at most
/// `samples` elements the sampling stops after a short burst and T is
/// enumerated instead.
IsoResult is_isomorphic(const FpModule& m, const FpModule& n, const IsoOptions& options = {});
IsoResult is_isomorphic(const ModuleSummary& m, const ModuleSummary& n, const IsoOptions& options = {});

struct SplitWitness {
    bool splits = false;
    Vector witness;  // element of soc(M) outside mM when splits
};

/// k is a direct summand of M iff soc(M) is not contained in mM.
SplitWitness splits_off_k(const FpModule& m);

/// Block sizes (descending) of the nilpotent action of t on M.
std::vector<std::size_t> jordan_type(const FpModule& m, const RingElement& t);

}  // namespace extclosure
