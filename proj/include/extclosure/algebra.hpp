#pragma once

// Finite-dimensional commutative local F_p-algebras given by their regular
// representation. Basis index 0 is the unit and indices 1..dim-1 span the
// maximal ideal.

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "extclosure/groebner.hpp"
#include "extclosure/linalg.hpp"

namespace extclosure {

/// Coordinates of an algebra element in the algebra basis.
struct RingElement {
    Vector coords;

    std::size_t size() const noexcept { return coords.size(); }
    bool is_zero() const noexcept;
    friend bool operator==(const RingElement&, const RingElement&) = default;
};

class LocalAlgebra;
using AlgebraPtr = std::shared_ptr<const LocalAlgebra>;

/// Returns one string per failed axiom (commutativity, associativity, unit,
/// maximal ideal closure, nilpotence). `regular[i]` is multiplication by
/// basis element i; its column j holds the coordinates of e_i * e_j.
std::vector<std::string> check_axioms(const std::vector<Matrix>& regular);

class LocalAlgebra {
public:
    /// Validates the table with check_axioms; throws NotLocal on violation.
    static AlgebraPtr create(std::uint32_t p, std::vector<std::string> labels, std::vector<Matrix> regular);

    std::uint32_t p() const noexcept { return p_; }
    const PrimeField& field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return regular_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }

    const std::vector<Matrix>& regular() const noexcept { return regular_; }
    const Matrix& multiplication_matrix(std::size_t basis_index) const { return regular_.at(basis_index); }
    Matrix multiplication_matrix(const RingElement& a) const;
    RingElement multiply(const RingElement& a, const RingElement& b) const;
    RingElement add(const RingElement& a, const RingElement& b) const;
    RingElement scale(const RingElement& a, Scalar c) const;

    RingElement zero() const;
    RingElement one() const;
    RingElement basis_element(std::size_t i) const;
    bool is_unit(const RingElement& a) const { return a.coords.at(0) != 0; }

    /// Minimal generating set of the maximal ideal: the first basis elements
    /// (in index order) completing a basis of m^2 inside m.
    const std::vector<RingElement>& generators() const noexcept { return generators_; }
    std::size_t edim() const noexcept { return generators_.size(); }

    std::string format(const RingElement& a) const;

private:
    LocalAlgebra(std::uint32_t p, std::vector<std::string> labels, std::vector<Matrix> regular);

    std::uint32_t p_;
    PrimeField field_;
    std::vector<std::string> labels_;
    std::vector<Matrix> regular_;
    std::vector<RingElement> generators_;
};

// ---------------------------------------------------------------------------
// Ideals

/// An ideal as an F_p-subspace. The basis matrix is canonical (see
/// column_space), so two ideals are equal iff their bases are equal.
class Ideal {
public:
    /// Validates closure under multiplication by every basis element.
    Ideal(AlgebraPtr algebra, const Matrix& spanning);

    const AlgebraPtr& algebra() const noexcept { return algebra_; }
    const Matrix& basis() const noexcept { return basis_; }
    std::size_t dim() const noexcept { return basis_.cols(); }
    bool is_zero() const noexcept { return basis_.cols() == 0; }
    bool contains(const RingElement& a) const;
    bool contains(const Ideal& other) const;
    std::vector<RingElement> elements() const;

    friend bool operator==(const Ideal& a, const Ideal& b) { return a.basis_ == b.basis_; }

private:
    AlgebraPtr algebra_;
    Matrix basis_;
};

Ideal ideal_generated(const AlgebraPtr& algebra, const std::vector<RingElement>& generators);
Ideal zero_ideal(const AlgebraPtr& algebra);
Ideal maximal_ideal(const AlgebraPtr& algebra);
Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_power(const Ideal& a, std::size_t n);
Ideal ideal_intersection(const Ideal& a, const Ideal& b);
/// (I : x) = { a : a x in I }.
Ideal colon(const Ideal& ideal, const RingElement& x);
/// (I : J) = { a : a J in I }.
Ideal colon(const Ideal& ideal, const Ideal& j);
Ideal annihilator(const RingElement& x, const AlgebraPtr& algebra);
Ideal annihilator(const Ideal& j);
Ideal socle(const AlgebraPtr& algebra);

// ---------------------------------------------------------------------------
// Invariants and predicates

struct AlgebraInvariants {
    std::size_t length = 0;
    std::size_t edim = 0;
    /// hilbert[i] = dim m^i / m^{i+1}; trailing zeros dropped.
    std::vector<std::size_t> hilbert;
    std::size_t socle_dim = 0;
    /// Largest i with m^i != 0.
    std::size_t top_socle_degree = 0;

    friend bool operator==(const AlgebraInvariants&, const AlgebraInvariants&) = default;
};

struct Classification {
    bool is_field = false;
    bool is_hypersurface = false;  // edim <= 1
    bool is_gorenstein = false;    // socle dimension 1
    bool is_stretched = false;     // m^{length - edim} != 0

    friend bool operator==(const Classification&, const Classification&) = default;
};

AlgebraInvariants invariants(const AlgebraPtr& algebra);
Classification classify(const AlgebraPtr& algebra);

/// Whether a lies in m \ m^2, i.e. is part of a minimal generating set of m.
bool is_minimal_generator(const AlgebraPtr& algebra, const RingElement& a);

/// Nonzero F_p-combinations of the stored generators, one per line through
/// the origin (lowest-index nonzero coefficient equal to 1). Ordered by the
/// base-p integer whose least significant digit is the first generator's
/// coefficient, so the generators themselves come first in their own order.
std::vector<RingElement> generator_combinations(const AlgebraPtr& algebra);

/// Exhaustive scan over generator_combinations for x, y with xy = 0 and
/// x, y independent modulo m^2. Throws EdimTooSmall when edim < 2.
std::optional<std::pair<RingElement, RingElement>> find_orthogonal_generator_pair(const AlgebraPtr& algebra);

/// Ideal generated by minimal generators that complete x to a minimal
/// generating set of m, excluding x itself (the ideal (y, z_3, ..., z_e)).
/// Requires x in m \ m^2.
Ideal complement_ideal(const AlgebraPtr& algebra, const RingElement& x);

// ---------------------------------------------------------------------------
// Presentations k[x_1..x_n]/(relations)

struct PresentedAlgebra {
    PolynomialRing ring;
    std::vector<Polynomial> relations;
    GroebnerBasis groebner;
    std::vector<Monomial> monomial_basis;
    AlgebraPtr algebra;

    RingElement element(const Polynomial& f) const;
    RingElement variable(std::size_t i) const;
};

/// Builds the quotient algebra with the standard monomial basis. Throws
/// InfiniteDimension for non-Artinian quotients and NotLocal if the
/// quotient has components away from the origin.
PresentedAlgebra from_presentation(const PolynomialRing& ring, const std::vector<Polynomial>& relations);
PresentedAlgebra from_presentation(const PolynomialRing& ring, const std::vector<std::string>& relations);

/// Tensor product over F_p; basis e_i (x) f_j at index i * dim(T) + j.
AlgebraPtr tensor_product(const AlgebraPtr& s, const AlgebraPtr& t);

}  // namespace extclosure
