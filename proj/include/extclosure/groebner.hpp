#pragma once

#include <vector>

#include "extclosure/polynomial.hpp"

namespace extclosure {

/// Reduced, monic Groebner basis under degrevlex, sorted by ascending
/// leading monomial.
class GroebnerBasis {
public:
    GroebnerBasis() = default;
    GroebnerBasis(PolynomialRing ring, std::vector<Polynomial> generators)
        : ring_(std::move(ring)), generators_(std::move(generators)) {}

    const PolynomialRing& ring() const noexcept { return ring_; }
    const std::vector<Polynomial>& generators() const noexcept { return generators_; }
    std::vector<Monomial> leading_monomials() const;
    bool empty() const noexcept { return generators_.empty(); }

private:
    PolynomialRing ring_;
    std::vector<Polynomial> generators_;
};

/// Buchberger's algorithm with the coprime-leading-monomial criterion.
/// Zero inputs are dropped; no inputs yields the empty basis (zero ideal).
GroebnerBasis buchberger(const PolynomialRing& ring, const std::vector<Polynomial>& generators);

/// Full multivariate division remainder.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

/// Monomials outside the leading-monomial ideal, ordered by ascending degree
/// and then descending degrevlex (so 1 comes first, then x_1, x_2, ...). Throws InfiniteDimension when
/// some variable has no pure power among the leading monomials.
std::vector<Monomial> standard_monomial_basis(const GroebnerBasis& gb);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

}  // namespace extclosure
