#include "extclosure/groebner.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "extclosure/errors.hpp"

namespace extclosure {

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
    std::vector<Monomial> out;
    out.reserve(generators_.size());
    for (const auto& g : generators_) out.push_back(g.leading_monomial());
    return out;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
    const PrimeField& fld = f.field();
    Polynomial a = f.times_monomial(l.divided_by(f.leading_monomial()), fld.inv(f.leading_coefficient()));
    Polynomial b = g.times_monomial(l.divided_by(g.leading_monomial()), fld.inv(g.leading_coefficient()));
    return a - b;
}

namespace {

Polynomial reduce_against(const Polynomial& f, const std::vector<Polynomial>& divisors) {
    const PrimeField& fld = f.field();
    Polynomial remainder(f.ring());
    Polynomial rest = f;
    while (!rest.is_zero()) {
        const Monomial lm = rest.leading_monomial();
        const Scalar lc = rest.leading_coefficient();
        bool divided = false;
        for (const auto& d : divisors) {
            if (!d.leading_monomial().divides(lm)) continue;
            const Scalar factor = fld.mul(lc, fld.inv(d.leading_coefficient()));
            rest -= d.times_monomial(lm.divided_by(d.leading_monomial()), factor);
            divided = true;
            break;
        }
        if (!divided) {
            remainder.add_term(lm, lc);
            rest.add_term(lm, fld.neg(lc));
        }
    }
    return remainder;
}

}  // namespace

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
    if (!(f.ring() == gb.ring())) throw AlgebraMismatch("normal_form: polynomial ring mismatch");
    return reduce_against(f, gb.generators());
}

GroebnerBasis buchberger(const PolynomialRing& ring, const std::vector<Polynomial>& generators) {
    require_prime_modulus(ring.p);
    std::vector<Polynomial> basis;
    for (const auto& g : generators) {
        if (!(g.ring() == ring)) throw AlgebraMismatch("buchberger: generator ring mismatch");
        if (!g.is_zero()) basis.push_back(g.monic());
    }

    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t j = 1; j < basis.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);

    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        // Coprime leading monomials: the S-polynomial reduces to zero.
        if (basis[i].leading_monomial().coprime(basis[j].leading_monomial())) continue;
        Polynomial r = reduce_against(s_polynomial(basis[i], basis[j]), basis);
        if (r.is_zero()) continue;
        basis.push_back(r.monic());
        const std::size_t k = basis.size() - 1;
        for (std::size_t m = 0; m < k; ++m) pairs.emplace_back(m, k);
    }

    // Minimalize: drop generators whose leading monomial is divisible by
    // another's (ties broken by keeping the earliest).
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const auto& li = basis[i].leading_monomial();
            const auto& lj = basis[j].leading_monomial();
            if (lj.divides(li) && (!(li == lj) || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // Interreduce: replace each generator by its remainder against the others.
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        const Polynomial& g = minimal[i];
        Polynomial tail = g;
        tail.add_term(g.leading_monomial(), g.field().neg(g.leading_coefficient()));
        Polynomial reduced = Polynomial::monomial(ring, g.leading_monomial(), 1) + reduce_against(tail, others);
        minimal[i] = reduced;
    }

    std::sort(minimal.begin(), minimal.end(), [](const Polynomial& a, const Polynomial& b) {
        return degrevlex_less(a.leading_monomial(), b.leading_monomial());
    });
    return GroebnerBasis(ring, std::move(minimal));
}

std::vector<Monomial> standard_monomial_basis(const GroebnerBasis& gb) {
    const std::size_t n = gb.ring().nvars();
    const auto leads = gb.leading_monomials();
    for (const auto& lm : leads)
        if (lm.is_one()) return {};  // unit ideal

    std::vector<Exponent> bound(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        for (const auto& lm : leads) {
            bool pure = lm[v] > 0;
            for (std::size_t w = 0; w < n && pure; ++w)
                if (w != v && lm[w] != 0) pure = false;
            if (pure && (bound[v] == 0 || lm[v] < bound[v])) bound[v] = lm[v];
        }
        if (bound[v] == 0)
            throw InfiniteDimension("quotient is not finite-dimensional: no pure power of " + gb.ring().variables[v] +
                                    " among leading monomials");
    }

    auto is_standard = [&](const Monomial& m) {
        return std::none_of(leads.begin(), leads.end(), [&](const Monomial& lm) { return lm.divides(m); });
    };

    // Standard monomials form an order ideal inside the box given by the pure powers.
    std::vector<Monomial> out;
    Monomial m(n);
    for (;;) {
        if (is_standard(m)) out.push_back(m);
        std::size_t v = 0;
        while (v < n) {
            if (m[v] + 1 < bound[v]) {
                ++m[v];
                break;
            }
            m[v] = 0;
            ++v;
        }
        if (v == n) break;
    }
    // Degree ascending; within a degree the larger monomial first, so the
    // variables appear in their declared order.
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return degrevlex_less(b, a);
    });
    return out;
}

}  // namespace extclosure
