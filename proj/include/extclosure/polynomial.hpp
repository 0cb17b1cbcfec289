#pragma once

// Multivariate polynomials over F_p under degree-reverse-lexicographic order.
// The variable order is the order in which names are listed: x > y > z > ...

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "extclosure/linalg.hpp"

namespace extclosure {

using Exponent = std::uint32_t;

/// Largest exponent the parser accepts.
constexpr Exponent kMaxExponent = 65535;

class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

    static Monomial variable(std::size_t nvars, std::size_t index, Exponent e = 1);

    std::size_t nvars() const noexcept { return exps_.size(); }
    Exponent operator[](std::size_t i) const { return exps_[i]; }
    Exponent& operator[](std::size_t i) { return exps_[i]; }
    const std::vector<Exponent>& exponents() const noexcept { return exps_; }
    std::uint64_t degree() const noexcept;
    bool is_one() const noexcept;

    bool divides(const Monomial& other) const;
    bool coprime(const Monomial& other) const;
    Monomial lcm(const Monomial& other) const;
    /// Requires divides(other) reversed: returns this / d.
    Monomial divided_by(const Monomial& d) const;

    std::string to_string(const std::vector<std::string>& names) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<Exponent> exps_;
};

/// Strict degrevlex comparison: true when a < b.
bool degrevlex_less(const Monomial& a, const Monomial& b);

struct DegRevLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return degrevlex_less(b, a); }
};

/// Characteristic plus ordered variable names.
struct PolynomialRing {
    std::uint32_t p = 2;
    std::vector<std::string> variables;

    std::size_t nvars() const noexcept { return variables.size(); }
    friend bool operator==(const PolynomialRing&, const PolynomialRing&) = default;
};

class Polynomial {
public:
    using Terms = std::map<Monomial, Scalar, DegRevLexGreater>;

    Polynomial() = default;
    explicit Polynomial(PolynomialRing ring);
    static Polynomial monomial(const PolynomialRing& ring, Monomial m, Scalar c = 1);
    static Polynomial constant(const PolynomialRing& ring, long long c);

    const PolynomialRing& ring() const noexcept { return ring_; }
    const PrimeField& field() const noexcept { return field_; }
    /// Terms in descending degrevlex order; no zero coefficients.
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    const Monomial& leading_monomial() const;
    Scalar leading_coefficient() const;
    /// Minimum total degree among terms (the order of the polynomial).
    std::uint64_t order() const;
    Scalar coefficient(const Monomial& m) const;

    void add_term(const Monomial& m, Scalar c);
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial scaled(Scalar c) const;
    Polynomial times_monomial(const Monomial& m, Scalar c = 1) const;
    Polynomial monic() const;

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.ring_ == b.ring_ && a.terms_ == b.terms_;
    }

    std::string to_string() const;

private:
    void check_compatible(const Polynomial& o) const;

    PolynomialRing ring_;
    PrimeField field_;
    Terms terms_;
};

/// Parses sums and differences of terms. A term is an optional unsigned
/// integer coefficient followed by juxtaposed factors `var` or `var^e`;
/// whitespace between tokens is ignored. There is no `*` token.
/// Variable names are matched greedily (longest name first).
///
/// Throws ParseError (with character position) on syntax errors, unknown
/// variables, and exponents above kMaxExponent.
Polynomial parse_polynomial(std::string_view text, const PolynomialRing& ring);

}  // namespace extclosure
