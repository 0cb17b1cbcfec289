#include "extclosure/algebra.hpp"

#include <algorithm>
#include <map>

#include "extclosure/errors.hpp"

namespace extclosure {

bool RingElement::is_zero() const noexcept {
    return std::all_of(coords.begin(), coords.end(), [](Scalar s) { return s == 0; });
}

namespace {

std::string basis_name(std::size_t i) { return "e" + std::to_string(i); }

}  // namespace

std::vector<std::string> check_axioms(const std::vector<Matrix>& regular) {
    std::vector<std::string> violations;
    const std::size_t d = regular.size();
    if (d == 0) {
        violations.emplace_back("shape: the zero ring is not local");
        return violations;
    }
    const std::uint32_t p = regular[0].modulus();
    for (std::size_t i = 0; i < d; ++i) {
        if (regular[i].rows() != d || regular[i].cols() != d || regular[i].modulus() != p) {
            violations.push_back("shape: multiplication matrix of " + basis_name(i) + " is malformed");
            return violations;
        }
    }
    const PrimeField f(p);

    if (!(regular[0] == Matrix::identity(p, d)))
        violations.push_back("unit: " + basis_name(0) + " does not act as the identity");

    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            for (std::size_t r = 0; r < d; ++r)
                if (regular[i](r, j) != regular[j](r, i)) {
                    violations.push_back("commutativity: " + basis_name(i) + "*" + basis_name(j) + " != " +
                                         basis_name(j) + "*" + basis_name(i));
                    break;
                }

    // (e_i e_j) e_k == e_i (e_j e_k), exploiting sparsity of the columns.
    constexpr std::size_t kMaxReported = 64;
    std::size_t assoc_failures = 0;
    Vector lhs(d), rhs(d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            const Vector v = regular[i].column(j);
            for (std::size_t k = 0; k < d; ++k) {
                std::fill(lhs.begin(), lhs.end(), 0);
                std::fill(rhs.begin(), rhs.end(), 0);
                for (std::size_t m = 0; m < d; ++m) {
                    if (v[m] == 0) continue;
                    for (std::size_t r = 0; r < d; ++r)
                        if (regular[m](r, k) != 0) lhs[r] = f.add(lhs[r], f.mul(v[m], regular[m](r, k)));
                }
                for (std::size_t m = 0; m < d; ++m) {
                    const Scalar c = regular[j](m, k);
                    if (c == 0) continue;
                    for (std::size_t r = 0; r < d; ++r)
                        if (regular[i](r, m) != 0) rhs[r] = f.add(rhs[r], f.mul(c, regular[i](r, m)));
                }
                if (lhs != rhs) {
                    if (assoc_failures++ < kMaxReported)
                        violations.push_back("associativity: (" + basis_name(i) + "*" + basis_name(j) + ")*" +
                                             basis_name(k) + " != " + basis_name(i) + "*(" + basis_name(j) + "*" +
                                             basis_name(k) + ")");
                }
            }
        }
    }

    bool closed = true;
    for (std::size_t i = 1; i < d && closed; ++i)
        for (std::size_t j = 1; j < d; ++j)
            if (regular[i](0, j) != 0) {
                violations.push_back("maximal ideal: " + basis_name(i) + "*" + basis_name(j) +
                                     " has a unit component");
                closed = false;
                break;
            }

    if (closed) {
        // span(e_1..e_{d-1})^d must vanish.
        Matrix power(p, d, d - 1);
        for (std::size_t j = 1; j < d; ++j) power(j, j - 1) = 1;
        for (std::size_t step = 1; step < d && power.cols() > 0; ++step) {
            std::vector<Vector> cols;
            for (std::size_t i = 1; i < d; ++i) {
                const Matrix prod = regular[i] * power;
                for (std::size_t c = 0; c < prod.cols(); ++c) cols.push_back(prod.column(c));
            }
            power = column_space(Matrix::from_columns(p, d, cols));
        }
        if (power.cols() > 0) violations.emplace_back("nilpotence: the maximal ideal is not nilpotent");
    }
    return violations;
}

// ---------------------------------------------------------------------------

LocalAlgebra::LocalAlgebra(std::uint32_t p, std::vector<std::string> labels, std::vector<Matrix> regular)
    : p_(p), field_(p), labels_(std::move(labels)), regular_(std::move(regular)) {}

AlgebraPtr LocalAlgebra::create(std::uint32_t p, std::vector<std::string> labels, std::vector<Matrix> regular) {
    require_prime_modulus(p);
    if (!regular.empty() && regular[0].modulus() != p) throw AlgebraMismatch("multiplication table modulus mismatch");
    const auto violations = check_axioms(regular);
    if (!violations.empty()) {
        std::string msg = "not a commutative local algebra: " + violations.front();
        if (violations.size() > 1) msg += " (and " + std::to_string(violations.size() - 1) + " more)";
        throw NotLocal(msg);
    }
    if (labels.size() != regular.size()) {
        labels.clear();
        for (std::size_t i = 0; i < regular.size(); ++i) labels.push_back(basis_name(i));
    }
    std::shared_ptr<LocalAlgebra> a(new LocalAlgebra(p, std::move(labels), std::move(regular)));

    const std::size_t d = a->dim();
    EchelonBasis span(p, d);
    for (std::size_t i = 1; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) span.insert(a->regular_[i].column(j));
    for (std::size_t i = 1; i < d; ++i) {
        RingElement e = a->basis_element(i);
        if (span.insert(e.coords)) a->generators_.push_back(std::move(e));
    }
    return a;
}

Matrix LocalAlgebra::multiplication_matrix(const RingElement& a) const {
    if (a.size() != dim()) throw DimensionMismatch("ring element has wrong length");
    Matrix m(p_, dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i) m.add_scaled(regular_[i], a.coords[i]);
    return m;
}

RingElement LocalAlgebra::multiply(const RingElement& a, const RingElement& b) const {
    if (a.size() != dim() || b.size() != dim()) throw DimensionMismatch("ring element has wrong length");
    Vector out(dim(), 0);
    for (std::size_t i = 0; i < dim(); ++i) {
        if (a.coords[i] == 0) continue;
        const Vector prod = regular_[i].apply(b.coords);
        for (std::size_t r = 0; r < dim(); ++r) out[r] = field_.add(out[r], field_.mul(a.coords[i], prod[r]));
    }
    return {out};
}

RingElement LocalAlgebra::add(const RingElement& a, const RingElement& b) const {
    if (a.size() != dim() || b.size() != dim()) throw DimensionMismatch("ring element has wrong length");
    Vector out(dim());
    for (std::size_t i = 0; i < dim(); ++i) out[i] = field_.add(a.coords[i], b.coords[i]);
    return {out};
}

RingElement LocalAlgebra::scale(const RingElement& a, Scalar c) const {
    Vector out(a.coords);
    for (auto& v : out) v = field_.mul(v, c % p_);
    return {out};
}

RingElement LocalAlgebra::zero() const { return {Vector(dim(), 0)}; }

RingElement LocalAlgebra::one() const { return basis_element(0); }

RingElement LocalAlgebra::basis_element(std::size_t i) const {
    Vector v(dim(), 0);
    v.at(i) = 1;
    return {v};
}

std::string LocalAlgebra::format(const RingElement& a) const {
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Scalar c = a.coords[i];
        if (c == 0) continue;
        if (!s.empty()) s += " + ";
        if (labels_[i] == "1")
            s += std::to_string(c);
        else
            s += (c == 1 ? std::string() : std::to_string(c)) + labels_[i];
    }
    return s.empty() ? "0" : s;
}

// ---------------------------------------------------------------------------
// Ideals

Ideal::Ideal(AlgebraPtr algebra, const Matrix& spanning) : algebra_(std::move(algebra)) {
    if (spanning.rows() != algebra_->dim()) throw DimensionMismatch("ideal spanning set has wrong ambient dimension");
    basis_ = column_space(spanning);
    if (basis_.cols() == 0) {
        basis_ = Matrix(algebra_->p(), algebra_->dim(), 0);
        return;
    }
    for (std::size_t i = 1; i < algebra_->dim(); ++i)
        if (!column_space_contains(basis_, algebra_->multiplication_matrix(i) * basis_))
            throw InvalidArgument("subspace is not closed under multiplication by " + algebra_->label(i));
}

bool Ideal::contains(const RingElement& a) const {
    return column_space_contains(basis_, Matrix::column_vector(algebra_->p(), a.coords));
}

bool Ideal::contains(const Ideal& other) const { return column_space_contains(basis_, other.basis_); }

std::vector<RingElement> Ideal::elements() const {
    std::vector<RingElement> out;
    for (std::size_t c = 0; c < basis_.cols(); ++c) out.push_back({basis_.column(c)});
    return out;
}

Ideal ideal_generated(const AlgebraPtr& algebra, const std::vector<RingElement>& generators) {
    Matrix span(algebra->p(), algebra->dim(), 0);
    for (const auto& g : generators) span = Matrix::hstack(span, algebra->multiplication_matrix(g));
    return Ideal(algebra, span);
}

Ideal zero_ideal(const AlgebraPtr& algebra) { return Ideal(algebra, Matrix(algebra->p(), algebra->dim(), 0)); }

Ideal maximal_ideal(const AlgebraPtr& algebra) { return ideal_generated(algebra, algebra->generators()); }

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    return Ideal(a.algebra(), Matrix::hstack(a.basis(), b.basis()));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
    const auto& alg = a.algebra();
    Matrix span(alg->p(), alg->dim(), 0);
    for (const auto& u : a.elements()) span = Matrix::hstack(span, alg->multiplication_matrix(u) * b.basis());
    return Ideal(alg, span);
}

Ideal ideal_power(const Ideal& a, std::size_t n) {
    Ideal result = ideal_generated(a.algebra(), {a.algebra()->one()});
    for (std::size_t i = 0; i < n; ++i) {
        result = ideal_product(result, a);
        if (result.is_zero()) break;
    }
    return result;
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
    return Ideal(a.algebra(), subspace_ops(a.basis(), b.basis()).intersection);
}

Ideal colon(const Ideal& ideal, const RingElement& x) {
    const auto& alg = ideal.algebra();
    const std::size_t d = alg->dim();
    const Matrix k = kernel_basis(Matrix::hstack(alg->multiplication_matrix(x), ideal.basis()));
    return Ideal(alg, k.block(0, 0, d, k.cols()));
}

Ideal colon(const Ideal& ideal, const Ideal& j) {
    Ideal result = ideal_generated(ideal.algebra(), {ideal.algebra()->one()});
    for (const auto& v : j.elements()) result = ideal_intersection(result, colon(ideal, v));
    return result;
}

Ideal annihilator(const RingElement& x, const AlgebraPtr& algebra) { return colon(zero_ideal(algebra), x); }

Ideal annihilator(const Ideal& j) { return colon(zero_ideal(j.algebra()), j); }

Ideal socle(const AlgebraPtr& algebra) {
    Ideal result = ideal_generated(algebra, {algebra->one()});
    for (const auto& g : algebra->generators()) result = ideal_intersection(result, annihilator(g, algebra));
    return result;
}

// ---------------------------------------------------------------------------

AlgebraInvariants invariants(const AlgebraPtr& algebra) {
    AlgebraInvariants inv;
    inv.length = algebra->dim();
    inv.edim = algebra->edim();
    const Ideal m = maximal_ideal(algebra);
    std::vector<std::size_t> dims{algebra->dim()};
    Ideal power = m;
    while (!power.is_zero()) {
        dims.push_back(power.dim());
        power = ideal_product(power, m);
    }
    dims.push_back(0);
    for (std::size_t i = 0; i + 1 < dims.size(); ++i) inv.hilbert.push_back(dims[i] - dims[i + 1]);
    inv.top_socle_degree = inv.hilbert.size() - 1;
    inv.socle_dim = socle(algebra).dim();
    return inv;
}

Classification classify(const AlgebraPtr& algebra) {
    const AlgebraInvariants inv = invariants(algebra);
    Classification c;
    c.is_field = inv.length == 1;
    c.is_hypersurface = inv.edim <= 1;
    c.is_gorenstein = inv.socle_dim == 1;
    const std::size_t exponent = inv.length - inv.edim;
    c.is_stretched = exponent <= inv.top_socle_degree;
    return c;
}

namespace {

EchelonBasis square_of_maximal_ideal(const AlgebraPtr& algebra) {
    const Ideal m = maximal_ideal(algebra);
    const Ideal m2 = ideal_product(m, m);
    EchelonBasis span(algebra->p(), algebra->dim());
    for (const auto& v : m2.elements()) span.insert(v.coords);
    return span;
}

}  // namespace

bool is_minimal_generator(const AlgebraPtr& algebra, const RingElement& a) {
    if (a.size() != algebra->dim()) throw DimensionMismatch("ring element has wrong length");
    if (a.coords[0] != 0) return false;
    return !square_of_maximal_ideal(algebra).contains(a.coords);
}

std::vector<RingElement> generator_combinations(const AlgebraPtr& algebra) {
    const auto& gens = algebra->generators();
    const std::size_t e = gens.size();
    const std::uint32_t p = algebra->p();
    std::vector<RingElement> out;
    std::vector<Scalar> digits(e, 0);
    for (;;) {
        // Increment the base-p counter, least significant digit first.
        std::size_t pos = 0;
        while (pos < e && ++digits[pos] == p) digits[pos++] = 0;
        if (pos == e) break;
        auto first = std::find_if(digits.begin(), digits.end(), [](Scalar s) { return s != 0; });
        if (*first != 1) continue;
        RingElement x = algebra->zero();
        for (std::size_t i = 0; i < e; ++i)
            if (digits[i] != 0) x = algebra->add(x, algebra->scale(gens[i], digits[i]));
        out.push_back(std::move(x));
    }
    return out;
}

std::optional<std::pair<RingElement, RingElement>> find_orthogonal_generator_pair(const AlgebraPtr& algebra) {
    if (algebra->edim() < 2)
        throw EdimTooSmall("orthogonal generator pair needs edim >= 2, got " + std::to_string(algebra->edim()));
    const EchelonBasis m2 = square_of_maximal_ideal(algebra);
    const auto candidates = generator_combinations(algebra);
    for (const auto& x : candidates) {
        EchelonBasis with_x = m2;
        with_x.insert(x.coords);
        for (const auto& y : candidates) {
            if (with_x.contains(y.coords)) continue;
            if (algebra->multiply(x, y).is_zero()) return std::make_pair(x, y);
        }
    }
    return std::nullopt;
}

Ideal complement_ideal(const AlgebraPtr& algebra, const RingElement& x) {
    if (!is_minimal_generator(algebra, x)) throw InvalidArgument("complement_ideal: element is not in m \\ m^2");
    EchelonBasis span = square_of_maximal_ideal(algebra);
    span.insert(x.coords);
    std::vector<RingElement> chosen;
    for (const auto& g : algebra->generators())
        if (span.insert(g.coords)) chosen.push_back(g);
    return ideal_generated(algebra, chosen);
}

// ---------------------------------------------------------------------------

RingElement PresentedAlgebra::element(const Polynomial& f) const {
    const Polynomial nf = normal_form(f, groebner);
    Vector coords(monomial_basis.size(), 0);
    for (const auto& [m, c] : nf.terms()) {
        auto it = std::find(monomial_basis.begin(), monomial_basis.end(), m);
        if (it == monomial_basis.end()) throw InvalidArgument("normal form left a non-standard monomial");
        coords[static_cast<std::size_t>(it - monomial_basis.begin())] = c;
    }
    return {coords};
}

RingElement PresentedAlgebra::variable(std::size_t i) const {
    return element(Polynomial::monomial(ring, Monomial::variable(ring.nvars(), i)));
}

PresentedAlgebra from_presentation(const PolynomialRing& ring, const std::vector<Polynomial>& relations) {
    PresentedAlgebra out;
    out.ring = ring;
    out.relations = relations;
    out.groebner = buchberger(ring, relations);
    out.monomial_basis = standard_monomial_basis(out.groebner);
    const std::size_t d = out.monomial_basis.size();
    if (d == 0) throw NotLocal("relations generate the unit ideal");

    std::map<std::vector<Exponent>, std::size_t> index;
    for (std::size_t i = 0; i < d; ++i) index.emplace(out.monomial_basis[i].exponents(), i);

    std::vector<Matrix> regular(d, Matrix(ring.p, d, d));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i; j < d; ++j) {
            const Monomial prod = out.monomial_basis[i] * out.monomial_basis[j];
            Polynomial nf = normal_form(Polynomial::monomial(ring, prod), out.groebner);
            for (const auto& [m, c] : nf.terms()) {
                const std::size_t k = index.at(m.exponents());
                regular[i](k, j) = c;
                regular[j](k, i) = c;
            }
        }
    }
    std::vector<std::string> labels;
    for (const auto& m : out.monomial_basis) labels.push_back(m.to_string(ring.variables));
    out.algebra = LocalAlgebra::create(ring.p, std::move(labels), std::move(regular));
    return out;
}

PresentedAlgebra from_presentation(const PolynomialRing& ring, const std::vector<std::string>& relations) {
    std::vector<Polynomial> polys;
    for (const auto& r : relations) polys.push_back(parse_polynomial(r, ring));
    return from_presentation(ring, polys);
}

AlgebraPtr tensor_product(const AlgebraPtr& s, const AlgebraPtr& t) {
    if (s->p() != t->p()) throw AlgebraMismatch("tensor_product: characteristics differ");
    const std::size_t ds = s->dim(), dt = t->dim(), d = ds * dt;
    const std::uint32_t p = s->p();
    const PrimeField& f = s->field();
    std::vector<Matrix> regular;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < ds; ++i) {
        for (std::size_t j = 0; j < dt; ++j) {
            const Matrix& a = s->multiplication_matrix(i);
            const Matrix& b = t->multiplication_matrix(j);
            Matrix k(p, d, d);
            for (std::size_t r1 = 0; r1 < ds; ++r1)
                for (std::size_t c1 = 0; c1 < ds; ++c1) {
                    if (a(r1, c1) == 0) continue;
                    for (std::size_t r2 = 0; r2 < dt; ++r2)
                        for (std::size_t c2 = 0; c2 < dt; ++c2)
                            k(r1 * dt + r2, c1 * dt + c2) = f.mul(a(r1, c1), b(r2, c2));
                }
            regular.push_back(std::move(k));
            const std::string& ls = s->label(i);
            const std::string& lt = t->label(j);
            labels.push_back(ls == "1" ? lt : (lt == "1" ? ls : ls + "*" + lt));
        }
    }
    return LocalAlgebra::create(p, std::move(labels), std::move(regular));
}

}  // namespace extclosure
