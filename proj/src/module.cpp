#include "extclosure/module.hpp"

#include "extclosure/errors.hpp"

namespace extclosure {

std::vector<std::string> check_module_axioms(const LocalAlgebra& algebra, const std::vector<Matrix>& action) {
    std::vector<std::string> out;
    const std::size_t da = algebra.dim();
    if (action.size() != da) {
        out.push_back("action count " + std::to_string(action.size()) + " != algebra dimension " + std::to_string(da));
        return out;
    }
    const std::size_t d = action[0].rows();
    for (const auto& a : action)
        if (a.rows() != d || a.cols() != d || a.modulus() != algebra.p()) {
            out.emplace_back("action matrices are malformed");
            return out;
        }
    if (!(action[0] == Matrix::identity(algebra.p(), d))) out.emplace_back("unit does not act as the identity");
    for (std::size_t i = 1; i < da; ++i) {
        for (std::size_t j = i; j < da; ++j) {
            Matrix expected(algebra.p(), d, d);
            const Matrix& t = algebra.multiplication_matrix(i);
            for (std::size_t k = 0; k < da; ++k) expected.add_scaled(action[k], t(k, j));
            if (!(action[i] * action[j] == expected))
                out.push_back("structure constants violated for e" + std::to_string(i) + "*e" + std::to_string(j));
            if (!(action[i] * action[j] == action[j] * action[i]))
                out.push_back("actions of e" + std::to_string(i) + " and e" + std::to_string(j) + " do not commute");
        }
    }
    return out;
}

FpModule::FpModule(AlgebraPtr algebra, std::vector<Matrix> action)
    : algebra_(std::move(algebra)), dim_(action.empty() ? 0 : action[0].rows()), action_(std::move(action)) {
    const auto violations = check_module_axioms(*algebra_, action_);
    if (!violations.empty()) throw InvalidArgument("invalid module: " + violations.front());
}

FpModule FpModule::from_verified_action(AlgebraPtr algebra, std::vector<Matrix> action) {
    FpModule m;
    m.algebra_ = std::move(algebra);
    m.dim_ = action.empty() ? 0 : action[0].rows();
    m.action_ = std::move(action);
    return m;
}

Matrix FpModule::action(const RingElement& a) const {
    if (a.size() != action_.size()) throw DimensionMismatch("ring element has wrong length for this module");
    Matrix m(p(), dim_, dim_);
    for (std::size_t i = 0; i < action_.size(); ++i) m.add_scaled(action_[i], a.coords[i]);
    return m;
}

bool is_module_map(const FpModule& source, const FpModule& target, const Matrix& f) {
    if (f.rows() != target.dim() || f.cols() != source.dim()) return false;
    for (std::size_t i = 1; i < source.actions().size(); ++i)
        if (!(f * source.action(i) == target.action(i) * f)) return false;
    return true;
}

// ---------------------------------------------------------------------------

RingMatrix::RingMatrix(const LocalAlgebra& algebra, std::size_t r, std::size_t c)
    : rows(r), cols(c), entries(r * c, algebra.zero()) {}

Vector RingMatrix::column_vector(std::size_t c) const {
    Vector v;
    for (std::size_t r = 0; r < rows; ++r) {
        const auto& e = at(r, c).coords;
        v.insert(v.end(), e.begin(), e.end());
    }
    return v;
}

RingMatrix RingMatrix::from_free_vectors(const LocalAlgebra& algebra, std::size_t rows,
                                         std::span<const Vector> cols) {
    const std::size_t d = algebra.dim();
    RingMatrix m(algebra, rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows * d) throw DimensionMismatch("free vector has wrong length");
        for (std::size_t r = 0; r < rows; ++r)
            m.at(r, c).coords.assign(cols[c].begin() + static_cast<long>(r * d),
                                     cols[c].begin() + static_cast<long>((r + 1) * d));
    }
    return m;
}

Matrix expand(const LocalAlgebra& algebra, const RingMatrix& m) {
    const std::size_t d = algebra.dim();
    Matrix out(algebra.p(), m.rows * d, m.cols * d);
    for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t c = 0; c < m.cols; ++c) {
            const RingElement& e = m.at(r, c);
            if (e.is_zero()) continue;
            out.set_block(r * d, c * d, algebra.multiplication_matrix(e));
        }
    return out;
}

Matrix expand_over(const FpModule& module, const RingMatrix& m) {
    const std::size_t d = module.dim();
    Matrix out(module.p(), m.rows * d, m.cols * d);
    for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t c = 0; c < m.cols; ++c) {
            const RingElement& e = m.at(r, c);
            if (e.is_zero()) continue;
            out.set_block(r * d, c * d, module.action(e));
        }
    return out;
}

// ---------------------------------------------------------------------------
// Constructions

namespace {

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
    Matrix m(a.modulus(), a.rows() + b.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), a.cols(), b);
    return m;
}

std::vector<Matrix> induced_action(const std::vector<Matrix>& action, const QuotientSpace& q) {
    std::vector<Matrix> out;
    out.reserve(action.size());
    for (const auto& a : action) out.push_back(q.projection * a * q.section);
    return out;
}

}  // namespace

FpModule free_module(const AlgebraPtr& algebra, std::size_t rank) {
    const std::size_t d = algebra->dim();
    std::vector<Matrix> action;
    for (std::size_t b = 0; b < d; ++b) {
        Matrix m(algebra->p(), rank * d, rank * d);
        for (std::size_t i = 0; i < rank; ++i) m.set_block(i * d, i * d, algebra->multiplication_matrix(b));
        action.push_back(std::move(m));
    }
    return FpModule::from_verified_action(algebra, std::move(action));
}

FpModule cyclic_module(const Ideal& ideal) {
    const auto& alg = ideal.algebra();
    const QuotientSpace q = quotient_space(ideal.basis(), alg->dim());
    return FpModule::from_verified_action(alg, induced_action(alg->regular(), q));
}

FpModule residue_field(const AlgebraPtr& algebra) { return cyclic_module(maximal_ideal(algebra)); }

FpModule direct_sum(const FpModule& a, const FpModule& b) {
    if (a.algebra() != b.algebra()) throw AlgebraMismatch("direct_sum: modules over different algebras");
    std::vector<Matrix> action;
    for (std::size_t i = 0; i < a.actions().size(); ++i) action.push_back(block_diagonal(a.action(i), b.action(i)));
    return FpModule::from_verified_action(a.algebra(), std::move(action));
}

FpModule direct_power(const FpModule& a, std::size_t n) {
    std::vector<Matrix> action(a.actions().size(), Matrix(a.p(), 0, 0));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < action.size(); ++i) action[i] = block_diagonal(action[i], a.action(i));
    return FpModule::from_verified_action(a.algebra(), std::move(action));
}

FpModule matlis_dual(const FpModule& m) {
    std::vector<Matrix> action;
    for (const auto& a : m.actions()) action.push_back(a.transpose());
    return FpModule::from_verified_action(m.algebra(), std::move(action));
}

Matrix submodule_generated(const FpModule& m, const Matrix& vectors) {
    Matrix span = vectors;
    for (const auto& a : m.actions()) span = Matrix::hstack(span, a * vectors);
    // Each action matrix applied once suffices: the actions span the algebra.
    return column_space(span);
}

ModuleQuotient quotient_module(const FpModule& m, const Matrix& submodule) {
    QuotientSpace q = quotient_space(column_space(submodule), m.dim());
    FpModule quotient = FpModule::from_verified_action(m.algebra(), induced_action(m.actions(), q));
    return {std::move(quotient), std::move(q)};
}

FpModule restrict_to_submodule(const FpModule& m, const Matrix& basis) {
    if (rank(basis) != basis.cols()) throw InvalidArgument("restrict_to_submodule: basis is not independent");
    std::vector<Matrix> action;
    for (const auto& a : m.actions()) {
        auto x = solve(basis, a * basis);
        if (!x) throw InvalidArgument("restrict_to_submodule: subspace is not a submodule");
        action.push_back(std::move(*x));
    }
    return FpModule::from_verified_action(m.algebra(), std::move(action));
}

Matrix radical(const FpModule& m) {
    Matrix span(m.p(), m.dim(), 0);
    for (const auto& g : m.algebra()->generators()) span = Matrix::hstack(span, m.action(g));
    return column_space(span);
}

Matrix module_socle(const FpModule& m) {
    Matrix stacked(m.p(), 0, m.dim());
    for (const auto& g : m.algebra()->generators()) stacked = Matrix::vstack(stacked, m.action(g));
    return kernel_basis(stacked);
}

FpModule cokernel(const AlgebraPtr& algebra, const RingMatrix& relations) {
    const FpModule f = free_module(algebra, relations.rows);
    return quotient_module(f, expand(*algebra, relations)).module;
}

QuotientAlgebra quotient_ring_as_algebra(const Ideal& ideal) {
    const auto& alg = ideal.algebra();
    if (ideal.contains(alg->one())) throw InvalidArgument("quotient by the unit ideal is the zero ring");
    QuotientSpace q = quotient_space(ideal.basis(), alg->dim());
    std::vector<Matrix> regular;
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < q.kept.size(); ++k) {
        regular.push_back(q.projection * alg->multiplication_matrix(q.kept[k]) * q.section);
        labels.push_back(alg->label(q.kept[k]));
    }
    return {LocalAlgebra::create(alg->p(), std::move(labels), std::move(regular)), std::move(q)};
}

FpModule base_change(const FpModule& m, const Ideal& ideal, const QuotientAlgebra& quotient) {
    Matrix im(m.p(), m.dim(), 0);
    for (const auto& v : ideal.elements()) im = Matrix::hstack(im, m.action(v));
    const QuotientSpace q = quotient_space(column_space(im), m.dim());
    std::vector<Matrix> action;
    for (std::size_t k = 0; k < quotient.coords.kept.size(); ++k)
        action.push_back(q.projection * m.action(quotient.coords.kept[k]) * q.section);
    return FpModule::from_verified_action(quotient.algebra, std::move(action));
}

FpModule base_change(const FpModule& m, const Ideal& ideal) {
    return base_change(m, ideal, quotient_ring_as_algebra(ideal));
}

AlgebraPtr idealization(const FpModule& n) {
    const auto& s = n.algebra();
    const std::size_t ds = s->dim(), dn = n.dim(), d = ds + dn;
    const std::uint32_t p = s->p();
    std::vector<Matrix> regular;
    std::vector<std::string> labels = s->labels();
    for (std::size_t i = 0; i < ds; ++i) regular.push_back(block_diagonal(s->multiplication_matrix(i), n.action(i)));
    for (std::size_t k = 0; k < dn; ++k) {
        // (0, n_k) * (s', n') = (0, s' n_k)
        Matrix m(p, d, d);
        for (std::size_t i = 0; i < ds; ++i)
            for (std::size_t r = 0; r < dn; ++r) m(ds + r, i) = n.action(i)(r, k);
        regular.push_back(std::move(m));
        labels.push_back("n" + std::to_string(k + 1));
    }
    return LocalAlgebra::create(p, std::move(labels), std::move(regular));
}

}  // namespace extclosure
