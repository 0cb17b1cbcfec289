#include <algorithm>
#include <random>

#include "extclosure/errors.hpp"
#include "extclosure/module.hpp"

namespace extclosure {

namespace {

/// Multiplies each A-block of the columns of `vectors` (in A^rank) by `a`.
Matrix free_action(const LocalAlgebra& algebra, const RingElement& a, const Matrix& vectors, std::size_t rank) {
    const std::size_t d = algebra.dim();
    const Matrix la = algebra.multiplication_matrix(a);
    Matrix out(algebra.p(), vectors.rows(), vectors.cols());
    for (std::size_t i = 0; i < rank; ++i) out.set_block(i * d, 0, la * vectors.block(i * d, 0, d, vectors.cols()));
    return out;
}

/// Minimal generators of the submodule of A^rank spanned by the columns of
/// `basis`, chosen greedily among those columns modulo m * submodule.
RingMatrix minimal_generators(const LocalAlgebra& algebra, std::size_t rank, const Matrix& basis) {
    EchelonBasis span(algebra.p(), basis.rows());
    for (const auto& g : algebra.generators()) {
        const Matrix moved = free_action(algebra, g, basis, rank);
        for (std::size_t c = 0; c < moved.cols(); ++c) span.insert(moved.column(c));
    }
    std::vector<Vector> chosen;
    for (std::size_t c = 0; c < basis.cols(); ++c) {
        Vector v = basis.column(c);
        if (span.insert(v)) chosen.push_back(std::move(v));
    }
    return RingMatrix::from_free_vectors(algebra, rank, chosen);
}

RingMatrix transpose(const RingMatrix& m) {
    RingMatrix t;
    t.rows = m.cols;
    t.cols = m.rows;
    t.entries.resize(m.entries.size());
    for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t c = 0; c < m.cols; ++c) t.entries[c * m.rows + r] = m.at(r, c);
    return t;
}

/// Columns of `cycles` completing a basis of `boundaries` inside their span.
Matrix complement_representatives(const Matrix& boundaries, const Matrix& cycles) {
    EchelonBasis span(cycles.modulus(), cycles.rows());
    for (std::size_t c = 0; c < boundaries.cols(); ++c) span.insert(boundaries.column(c));
    std::vector<Vector> reps;
    for (std::size_t c = 0; c < cycles.cols(); ++c) {
        Vector v = cycles.column(c);
        if (span.insert(v)) reps.push_back(std::move(v));
    }
    return Matrix::from_columns(cycles.modulus(), cycles.rows(), reps);
}

void verify_exact(const Matrix& current, const Matrix& next, std::size_t kernel_dim) {
    if (!(current * next).is_zero() || rank(next) != kernel_dim)
        throw Error("internal error: computed resolution is not exact");
}

}  // namespace

MinimalCover minimal_cover(const FpModule& m) {
    const LocalAlgebra& alg = *m.algebra();
    const std::size_t d = alg.dim(), n = m.dim();
    const std::uint32_t p = alg.p();

    EchelonBasis span(p, n);
    const Matrix rad = radical(m);
    for (std::size_t c = 0; c < rad.cols(); ++c) span.insert(rad.column(c));
    std::vector<Vector> gens;
    for (std::size_t j = 0; j < n; ++j) {
        Vector e(n, 0);
        e[j] = 1;
        if (span.insert(e)) gens.push_back(std::move(e));
    }

    MinimalCover cover;
    cover.generators = Matrix::from_columns(p, n, gens);
    cover.surjection = Matrix(p, n, gens.size() * d);
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t b = 0; b < d; ++b) cover.surjection.set_column(i * d + b, m.action(b).apply(gens[i]));
    auto section = solve(cover.surjection, Matrix::identity(p, n));
    if (!section) throw Error("internal error: minimal cover is not surjective");
    cover.section = std::move(*section);
    const Matrix kernel = kernel_basis(cover.surjection);
    cover.relations = minimal_generators(alg, gens.size(), kernel);
    verify_exact(cover.surjection, expand(alg, cover.relations), kernel.cols());
    return cover;
}

FreePresentation minimal_presentation(const FpModule& m) {
    MinimalCover cover = minimal_cover(m);
    return {cover.betti0(), cover.betti1(), std::move(cover.relations)};
}

FreeResolution minimal_free_resolution(const FpModule& m, std::size_t steps) {
    const LocalAlgebra& alg = *m.algebra();
    MinimalCover cover = minimal_cover(m);
    FreeResolution res;
    res.ranks.push_back(cover.betti0());
    res.augmentation = std::move(cover.surjection);
    if (steps == 0) return res;
    res.ranks.push_back(cover.betti1());
    res.differentials.push_back(std::move(cover.relations));
    for (std::size_t i = 2; i <= steps; ++i) {
        const Matrix current = expand(alg, res.differentials.back());
        const Matrix kernel = kernel_basis(current);
        RingMatrix next = minimal_generators(alg, res.ranks.back(), kernel);
        verify_exact(current, expand(alg, next), kernel.cols());
        res.ranks.push_back(next.cols);
        res.differentials.push_back(std::move(next));
    }
    return res;
}

std::size_t betti(const FpModule& m, std::size_t i) { return minimal_free_resolution(m, i).ranks.at(i); }

std::vector<std::size_t> betti_numbers(const FpModule& m, std::size_t up_to) {
    return minimal_free_resolution(m, up_to).ranks;
}

HomologyResult tor(const FpModule& m, const FpModule& n, std::size_t i) {
    if (m.algebra() != n.algebra() && !(m.algebra()->regular() == n.algebra()->regular()))
        throw AlgebraMismatch("tor: modules over different algebras");
    const FreeResolution res = minimal_free_resolution(m, i + 1);
    const std::uint32_t p = n.p();
    const std::size_t chain_dim = res.ranks[i] * n.dim();
    Matrix cycles = i == 0 ? Matrix::identity(p, chain_dim) : kernel_basis(expand_over(n, res.differentials[i - 1]));
    const Matrix boundaries = column_space(expand_over(n, res.differentials[i]));
    HomologyResult out;
    out.basis = complement_representatives(boundaries, cycles);
    out.dim = out.basis.cols();
    return out;
}

Vector Ext1Space::cocycle(std::span<const Scalar> coefficients) const {
    if (coefficients.size() != cocycles.cols()) throw DimensionMismatch("cocycle coefficient count mismatch");
    Vector v(cocycles.rows(), 0);
    const PrimeField& f = cocycles.field();
    for (std::size_t c = 0; c < cocycles.cols(); ++c) {
        if (coefficients[c] == 0) continue;
        for (std::size_t r = 0; r < v.size(); ++r) v[r] = f.add(v[r], f.mul(coefficients[c], cocycles(r, c)));
    }
    return v;
}

Ext1Space ext1(const FpModule& n, const FpModule& l) {
    if (n.algebra() != l.algebra() && !(n.algebra()->regular() == l.algebra()->regular()))
        throw AlgebraMismatch("ext1: modules over different algebras");
    Ext1Space out;
    out.resolution = minimal_free_resolution(n, 2);
    // Hom(F_i, L) = L^{rank_i}; the coboundary is precomposition with d.
    const Matrix delta0 = expand_over(l, transpose(out.resolution.differentials[0]));
    const Matrix delta1 = expand_over(l, transpose(out.resolution.differentials[1]));
    const Matrix cycles = kernel_basis(delta1);
    out.cocycles = complement_representatives(column_space(delta0), cycles);
    return out;
}

// ---------------------------------------------------------------------------
// Hom and isomorphism

std::vector<Matrix> hom_space(const MinimalCover& cover, const FpModule& n) {
    const LocalAlgebra& alg = *n.algebra();
    const std::size_t d = alg.dim(), r0 = cover.betti0();
    const std::uint32_t p = n.p();
    const Matrix constraints = expand_over(n, transpose(cover.relations));
    const Matrix solutions = r0 == 0 ? Matrix(p, 0, 0) : kernel_basis(constraints);
    std::vector<Matrix> out;
    for (std::size_t s = 0; s < solutions.cols(); ++s) {
        const Vector images = solutions.column(s);
        Matrix phi(p, n.dim(), r0 * d);
        for (std::size_t a = 0; a < r0; ++a) {
            const Vector na(images.begin() + static_cast<long>(a * n.dim()),
                            images.begin() + static_cast<long>((a + 1) * n.dim()));
            for (std::size_t b = 0; b < d; ++b) phi.set_column(a * d + b, n.action(b).apply(na));
        }
        out.push_back(phi * cover.section);
    }
    return out;
}

std::vector<Matrix> hom_space(const FpModule& m, const FpModule& n) {
    if (m.algebra() != n.algebra() && !(m.algebra()->regular() == n.algebra()->regular()))
        throw AlgebraMismatch("hom_space: modules over different algebras");
    return hom_space(minimal_cover(m), n);
}

std::vector<std::size_t> jordan_type(const FpModule& m, const RingElement& t) {
    const Matrix a = m.action(t);
    std::vector<std::size_t> ranks{m.dim()};
    Matrix power = Matrix::identity(m.p(), m.dim());
    while (ranks.back() > 0) {
        power = power * a;
        const std::size_t r = rank(power);
        if (r == ranks.back()) throw InvalidArgument("jordan_type: element does not act nilpotently");
        ranks.push_back(r);
    }
    // parts of size >= k: ranks[k-1] - ranks[k]
    std::vector<std::size_t> parts;
    for (std::size_t k = ranks.size() - 1; k >= 1; --k) {
        const std::size_t at_least_k = ranks[k - 1] - ranks[k];
        const std::size_t at_least_k1 = k + 1 < ranks.size() ? ranks[k] - ranks[k + 1] : 0;
        for (std::size_t c = 0; c < at_least_k - at_least_k1; ++c) parts.push_back(k);
    }
    return parts;
}

namespace {

/// dim m^i M for i = 1, 2, ... until zero.
std::vector<std::size_t> radical_series(const FpModule& m) {
    std::vector<std::size_t> dims;
    Matrix layer = Matrix::identity(m.p(), m.dim());
    while (layer.cols() > 0) {
        Matrix next(m.p(), m.dim(), 0);
        for (const auto& g : m.algebra()->generators()) next = Matrix::hstack(next, m.action(g) * layer);
        layer = column_space(next);
        dims.push_back(layer.cols());
    }
    return dims;
}

}  // namespace

ModuleSummary summarize(const FpModule& m) {
    ModuleSummary s{m, minimal_cover(m), {}, 0};
    s.profile.push_back(m.dim());
    s.profile.push_back(s.cover.betti0());
    s.profile.push_back(s.cover.betti1());
    s.profile.push_back(module_socle(m).cols());
    for (const auto& a : m.actions()) s.profile.push_back(rank(a));
    for (const FpModule& side : {m, matlis_dual(m)}) {
        const auto series = radical_series(side);
        s.profile.push_back(series.size());
        s.profile.insert(s.profile.end(), series.begin(), series.end());
    }
    const auto combos = generator_combinations(m.algebra());
    constexpr std::size_t kMaxJordanProbes = 16;
    for (std::size_t i = 0; i < combos.size() && i < kMaxJordanProbes; ++i) {
        const auto parts = jordan_type(m, combos[i]);
        s.profile.push_back(parts.size());
        s.profile.insert(s.profile.end(), parts.begin(), parts.end());
    }
    s.end_dim = hom_space(s.cover, m).size();
    return s;
}

IsoResult is_isomorphic(const ModuleSummary& ms, const ModuleSummary& ns, const IsoOptions& options) {
    const FpModule& m = ms.module;
    const FpModule& n = ns.module;
    if (m.algebra() != n.algebra() && !(m.algebra()->regular() == n.algebra()->regular()))
        throw AlgebraMismatch("is_isomorphic: modules over different algebras");
    if (m.dim() != n.dim()) return {};
    if (m.dim() == 0) return {true, Matrix(m.p(), 0, 0)};
    if (ms.profile != ns.profile || ms.end_dim != ns.end_dim) return {};

    const std::vector<Matrix> homs = hom_space(ms.cover, n);
    if (homs.size() != ms.end_dim || homs.empty()) return {};
    if (hom_space(ns.cover, m).size() != ns.end_dim) return {};

    // By Nakayama, f : M -> N with dim M = dim N is invertible iff the induced
    // map M/mM -> N/mN is. Search the image of Hom in Hom(top M, top N).
    const std::uint32_t p = m.p();
    const std::size_t b0 = ms.cover.betti0();
    const Matrix top_n = quotient_space(radical(n), n.dim()).projection;
    EchelonBasis top_span(p, b0 * b0);
    std::vector<std::size_t> chosen;
    std::vector<Matrix> tops;
    for (std::size_t i = 0; i < homs.size(); ++i) {
        Matrix t = top_n * homs[i] * ms.cover.generators;
        if (top_span.insert(Vector(t.data().begin(), t.data().end()))) {
            chosen.push_back(i);
            tops.push_back(std::move(t));
        }
    }
    const std::size_t h = chosen.size();
    if (h == 0) return {};

    auto attempt = [&](std::span<const Scalar> coeffs) -> std::optional<Matrix> {
        Matrix t(p, b0, b0);
        for (std::size_t i = 0; i < h; ++i) t.add_scaled(tops[i], coeffs[i]);
        if (rank(t) != b0) return std::nullopt;
        Matrix f(p, n.dim(), m.dim());
        for (std::size_t i = 0; i < h; ++i) f.add_scaled(homs[chosen[i]], coeffs[i]);
        if (rank(f) != m.dim()) throw Error("internal error: top isomorphism did not lift");
        return f;
    };

    // Spaces small enough to list completely are searched exhaustively after a
    // short random burst; that decides the question outright.
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < h && size <= options.samples; ++i) size *= p;
    const bool enumerable = size <= options.samples;
    const std::size_t samples = enumerable ? std::min<std::size_t>(options.samples, 32) : options.samples;

    std::mt19937_64 rng(options.seed);
    std::vector<Scalar> coeffs(h);
    for (std::size_t s = 0; s < samples; ++s) {
        for (auto& c : coeffs) c = static_cast<Scalar>(rng() % p);
        if (auto f = attempt(coeffs)) return {true, std::move(f)};
    }
    if (!enumerable && h > options.exhaustive_limit)
        throw SearchInconclusive("isomorphism search inconclusive: " + std::to_string(h) +
                                 "-dimensional search space after " + std::to_string(options.samples) + " samples");
    std::fill(coeffs.begin(), coeffs.end(), 0);
    for (;;) {
        std::size_t pos = 0;
        while (pos < h && ++coeffs[pos] == p) coeffs[pos++] = 0;
        if (pos == h) break;
        if (auto f = attempt(coeffs)) return {true, std::move(f)};
    }
    return {};
}

IsoResult is_isomorphic(const FpModule& m, const FpModule& n, const IsoOptions& options) {
    if (m.dim() != n.dim()) return {};
    return is_isomorphic(summarize(m), summarize(n), options);
}

SplitWitness splits_off_k(const FpModule& m) {
    const Matrix soc = module_socle(m);
    const Matrix rad = radical(m);
    EchelonBasis span(m.p(), m.dim());
    for (std::size_t c = 0; c < rad.cols(); ++c) span.insert(rad.column(c));
    for (std::size_t c = 0; c < soc.cols(); ++c) {
        Vector v = soc.column(c);
        if (!span.contains(v)) return {true, std::move(v)};
    }
    return {};
}

}  // namespace extclosure
