#include "extclosure/polynomial.hpp"

#include <algorithm>

#include "extclosure/errors.hpp"

namespace extclosure {

Monomial Monomial::variable(std::size_t nvars, std::size_t index, Exponent e) {
    Monomial m(nvars);
    m.exps_.at(index) = e;
    return m;
}

std::uint64_t Monomial::degree() const noexcept {
    std::uint64_t d = 0;
    for (Exponent e : exps_) d += e;
    return d;
}

bool Monomial::is_one() const noexcept {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

bool Monomial::coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] != 0 && other.exps_[i] != 0) return false;
    return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
    Monomial m(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) m.exps_[i] = std::max(exps_[i], other.exps_[i]);
    return m;
}

Monomial Monomial::divided_by(const Monomial& d) const {
    Monomial m(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) m.exps_[i] = exps_[i] - d.exps_[i];
    return m;
}

std::string Monomial::to_string(const std::vector<std::string>& names) const {
    std::string s;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0) continue;
        s += names[i];
        if (exps_[i] > 1) s += "^" + std::to_string(exps_[i]);
    }
    return s.empty() ? "1" : s;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) m[i] = a[i] + b[i];
    return m;
}

bool degrevlex_less(const Monomial& a, const Monomial& b) {
    const auto da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    // Equal degree: the monomial with the larger exponent in the last
    // differing variable is the smaller one.
    for (std::size_t i = a.nvars(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

// ---------------------------------------------------------------------------

Polynomial::Polynomial(PolynomialRing ring) : ring_(std::move(ring)), field_(ring_.p) {}

Polynomial Polynomial::monomial(const PolynomialRing& ring, Monomial m, Scalar c) {
    Polynomial f(ring);
    f.add_term(m, c);
    return f;
}

Polynomial Polynomial::constant(const PolynomialRing& ring, long long c) {
    Polynomial f(ring);
    f.add_term(Monomial(ring.nvars()), f.field_.reduce(c));
    return f;
}

const Monomial& Polynomial::leading_monomial() const {
    if (terms_.empty()) throw InvalidArgument("leading monomial of the zero polynomial");
    return terms_.begin()->first;
}

Scalar Polynomial::leading_coefficient() const {
    if (terms_.empty()) throw InvalidArgument("leading coefficient of the zero polynomial");
    return terms_.begin()->second;
}

std::uint64_t Polynomial::order() const {
    if (terms_.empty()) throw InvalidArgument("order of the zero polynomial");
    // Descending degrevlex: the last term has minimal degree.
    return terms_.rbegin()->first.degree();
}

Scalar Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
}

void Polynomial::add_term(const Monomial& m, Scalar c) {
    if (m.nvars() != ring_.nvars()) throw DimensionMismatch("monomial has wrong variable count");
    c %= field_.modulus();
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second = field_.add(it->second, c);
    if (it->second == 0) terms_.erase(it);
}

void Polynomial::check_compatible(const Polynomial& o) const {
    if (!(ring_ == o.ring_)) throw AlgebraMismatch("polynomials live in different rings");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, field_.neg(c));
    return *this;
}

Polynomial Polynomial::scaled(Scalar c) const {
    Polynomial f(ring_);
    c %= field_.modulus();
    if (c == 0) return f;
    for (const auto& [m, a] : terms_) f.terms_.emplace(m, field_.mul(a, c));
    return f;
}

Polynomial Polynomial::times_monomial(const Monomial& mono, Scalar c) const {
    Polynomial f(ring_);
    c %= field_.modulus();
    if (c == 0) return f;
    for (const auto& [m, a] : terms_) f.terms_.emplace(m * mono, field_.mul(a, c));
    return f;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(field_.inv(leading_coefficient()));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    Polynomial f(a.ring_);
    for (const auto& [mb, cb] : b.terms_) f += a.times_monomial(mb, cb);
    return f;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) s += " + ";
        first = false;
        if (m.is_one()) {
            s += std::to_string(c);
        } else {
            if (c != 1) s += std::to_string(c);
            s += m.to_string(ring_.variables);
        }
    }
    return s;
}

// ---------------------------------------------------------------------------
// Parser. Grammar (EBNF, whitespace between tokens ignored):
//   polynomial = [sign] term { sign term } ;
//   sign       = "+" | "-" ;
//   term       = integer { factor } | factor { factor } ;
//   factor     = variable [ "^" integer ] ;

namespace {

class PolynomialParser {
public:
    PolynomialParser(std::string_view text, const PolynomialRing& ring) : text_(text), ring_(ring) {
        names_by_length_ = ring.variables;
        std::stable_sort(names_by_length_.begin(), names_by_length_.end(),
                         [](const std::string& a, const std::string& b) { return a.size() > b.size(); });
    }

    Polynomial parse() {
        Polynomial result(ring_);
        const PrimeField& f = result.field();
        skip_space();
        if (at_end()) throw ParseError("empty polynomial", pos_);
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = peek() == '-';
            ++pos_;
        }
        for (;;) {
            auto [mono, coeff] = term();
            result.add_term(mono, negative ? f.neg(coeff) : coeff);
            skip_space();
            if (at_end()) break;
            if (peek() != '+' && peek() != '-')
                throw ParseError(std::string("unexpected character '") + peek() + "'", pos_);
            negative = peek() == '-';
            ++pos_;
        }
        return result;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }
    static bool is_digit(char c) { return c >= '0' && c <= '9'; }
    static bool is_ident(char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || is_digit(c);
    }
    void skip_space() {
        while (!at_end() && is_space(peek())) ++pos_;
    }

    std::pair<Monomial, Scalar> term() {
        skip_space();
        if (at_end()) throw ParseError("expected a term", pos_);
        Scalar coeff = 1;
        bool any = false;
        if (is_digit(peek())) {
            coeff = integer_mod_p();
            any = true;
        }
        Monomial mono(ring_.nvars());
        for (;;) {
            skip_space();
            if (at_end()) break;
            const char c = peek();
            if (is_digit(c)) throw ParseError("unexpected integer inside a term", pos_);
            if (!is_ident(c)) break;
            const std::size_t start = pos_;
            const std::size_t var = variable();
            Exponent e = 1;
            skip_space();
            if (!at_end() && peek() == '^') {
                ++pos_;
                skip_space();
                e = exponent();
            }
            if (static_cast<std::uint64_t>(mono[var]) + e > kMaxExponent)
                throw ParseError("exponent overflow", start);
            mono[var] += e;
            any = true;
        }
        if (!any) throw ParseError(at_end() ? "expected a term" : std::string("unexpected character '") + peek() + "'", pos_);
        return {mono, coeff};
    }

    Scalar integer_mod_p() {
        const std::uint32_t p = ring_.p;
        std::uint64_t v = 0;
        while (!at_end() && is_digit(peek())) {
            v = (v * 10 + static_cast<std::uint64_t>(peek() - '0')) % p;
            ++pos_;
        }
        return static_cast<Scalar>(v);
    }

    Exponent exponent() {
        const std::size_t start = pos_;
        if (at_end() || !is_digit(peek())) throw ParseError("expected an exponent after '^'", pos_);
        std::uint64_t v = 0;
        while (!at_end() && is_digit(peek())) {
            v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
            if (v > kMaxExponent) throw ParseError("exponent overflow", start);
            ++pos_;
        }
        return static_cast<Exponent>(v);
    }

    std::size_t variable() {
        for (const auto& name : names_by_length_) {
            if (text_.substr(pos_, name.size()) == name) {
                pos_ += name.size();
                auto it = std::find(ring_.variables.begin(), ring_.variables.end(), name);
                return static_cast<std::size_t>(it - ring_.variables.begin());
            }
        }
        std::size_t end = pos_;
        while (end < text_.size() && is_ident(text_[end])) ++end;
        throw ParseError("unknown variable '" + std::string(text_.substr(pos_, end - pos_)) + "'", pos_);
    }

    std::string_view text_;
    const PolynomialRing& ring_;
    std::vector<std::string> names_by_length_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const PolynomialRing& ring) {
    require_prime_modulus(ring.p);
    return PolynomialParser(text, ring).parse();
}

}  // namespace extclosure
