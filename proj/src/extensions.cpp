#include "extclosure/extensions.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <thread>

namespace extclosure {

namespace {

/// F_p matrix of A^k -> M sending the i-th free generator to column i of `gens`.
Matrix generator_surjection(const FpModule& m, const Matrix& gens) {
    const std::size_t d = m.algebra()->dim();
    Matrix s(m.p(), m.dim(), gens.cols() * d);
    for (std::size_t i = 0; i < gens.cols(); ++i) {
        const Vector g = gens.column(i);
        for (std::size_t b = 0; b < d; ++b) s.set_column(i * d + b, m.action(b).apply(g));
    }
    return s;
}

/// Whether `gens` generate M with relation module exactly the image of `pres`.
bool presents(const FpModule& m, const Matrix& gens, const RingMatrix& pres) {
    const Matrix s = generator_surjection(m, gens);
    if (rank(s) != m.dim()) return false;
    const Matrix e = expand(*m.algebra(), pres);
    return (s * e).is_zero() && rank(e) == s.cols() - m.dim();
}

RingElement slice(const Vector& v, std::size_t block, std::size_t d) {
    return {Vector(v.begin() + static_cast<long>(block * d), v.begin() + static_cast<long>((block + 1) * d))};
}

struct PresentedNode {
    RingMatrix relations;
    Matrix gens;
};

PresentedNode initial_presentation(const FpModule& x_module, const RingElement& x) {
    const MinimalCover cover = minimal_cover(x_module);
    if (cover.betti0() != 1) throw LiftFailure("quotient module is not cyclic");
    PresentedNode out{RingMatrix(*x_module.algebra(), 1, 1), cover.generators};
    out.relations.at(0, 0) = x;
    if (!presents(x_module, out.gens, out.relations))
        throw LiftFailure("quotient module is not presented by the given element");
    return out;
}

/// One inductive step: the new generator lifts the generator of X, and x times
/// it lands in the image of the sub, written through the sub's generators.
PresentedNode extend_presentation(const PresentedNode& sub, const ExtensionWitness& w, const Vector& xi,
                                  const RingElement& x) {
    const LocalAlgebra& alg = *w.middle.algebra();
    const std::size_t d = alg.dim(), k = sub.relations.rows;
    const auto lift = solve(w.project, xi);
    if (!lift) throw LiftFailure("generator of the quotient does not lift");
    const Vector xm = w.middle.action(x).apply(*lift);
    const auto in_sub = solve(w.inject, xm);
    if (!in_sub) throw LiftFailure("x times the lifted generator is not in the submodule");
    const auto coeffs = solve(generator_surjection(w.sub, sub.gens), *in_sub);
    if (!coeffs) throw LiftFailure("submodule element is not a combination of its generators");

    PresentedNode out{RingMatrix(alg, k + 1, k + 1), Matrix::hstack(w.inject * sub.gens, Matrix::column_vector(alg.p(), *lift))};
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c) out.relations.at(r, c) = sub.relations.at(r, c);
    for (std::size_t r = 0; r < k; ++r) out.relations.at(r, k) = alg.scale(slice(*coeffs, r, d), alg.p() - 1);
    out.relations.at(k, k) = x;
    return out;
}

/// Builds the middle term and, when requested, extends the parent's presentation.
struct Candidate {
    ExtensionWitness witness;
    std::optional<PresentedNode> presented;
    std::optional<ModuleSummary> summary;
};

std::uint64_t checked_power(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (r > cap / base) return cap + 1;
        r *= base;
    }
    return r;
}

std::vector<Scalar> digits(std::uint64_t index, std::uint32_t p, std::size_t count) {
    std::vector<Scalar> out(count);
    for (auto& c : out) {
        c = static_cast<Scalar>(index % p);
        index /= p;
    }
    return out;
}

template <class F>
void parallel_for(std::size_t count, std::size_t workers, F&& body) {
    workers = std::max<std::size_t>(1, std::min(workers, count));
    if (workers == 1) {
        for (std::size_t t = 0; t < count; ++t) body(t);
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t t = w; t < count; t += workers) body(t);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

constexpr std::size_t kBatch = 4096;

}  // namespace

// ---------------------------------------------------------------------------

bool is_exact_sequence(const ExtensionWitness& w) {
    const std::size_t a = w.sub.dim(), b = w.middle.dim(), c = w.quotient.dim();
    if (w.inject.rows() != b || w.inject.cols() != a || w.project.rows() != c || w.project.cols() != b) return false;
    if (b != a + c || rank(w.inject) != a || rank(w.project) != c) return false;
    if (!(w.project * w.inject).is_zero()) return false;
    return is_module_map(w.sub, w.middle, w.inject) && is_module_map(w.middle, w.quotient, w.project);
}

ExtensionWitness extension_from_cocycle(const FpModule& x, const FpModule& y, const Ext1Space& ext,
                                        const Vector& cocycle) {
    const AlgebraPtr& alg = x.algebra();
    const std::size_t d = alg->dim();
    const FreeResolution& res = ext.resolution;
    const std::size_t r0 = res.ranks.at(0), r1 = res.ranks.at(1);
    if (cocycle.size() != r1 * y.dim()) throw DimensionMismatch("cocycle has wrong length");

    const Matrix e1 = expand(*alg, res.differentials.at(0));
    const FpModule ambient = direct_sum(y, free_module(alg, r0));
    // Relations (phi(z), -d1(z)) for z running over the F_p-basis of F_1.
    Matrix rel(x.p(), ambient.dim(), r1 * d);
    for (std::size_t j = 0; j < r1; ++j) {
        const Vector cj(cocycle.begin() + static_cast<long>(j * y.dim()),
                        cocycle.begin() + static_cast<long>((j + 1) * y.dim()));
        for (std::size_t b = 0; b < d; ++b) {
            Vector col = y.action(b).apply(cj);
            const PrimeField& f = alg->field();
            for (std::size_t r = 0; r < r0 * d; ++r) col.push_back(f.neg(e1(r, j * d + b)));
            rel.set_column(j * d + b, col);
        }
    }
    ModuleQuotient q = quotient_module(ambient, rel);

    Matrix include_y(x.p(), ambient.dim(), y.dim());
    include_y.set_block(0, 0, Matrix::identity(x.p(), y.dim()));
    Matrix augment(x.p(), x.dim(), ambient.dim());
    augment.set_block(0, y.dim(), res.augmentation);

    ExtensionWitness w{y, std::move(q.module), x, q.coords.projection * include_y, Matrix()};
    w.project = augment * q.coords.section;
    if (!is_exact_sequence(w)) throw Error("internal error: extension from cocycle is not exact");
    return w;
}

EnumerationBudgetExceeded::EnumerationBudgetExceeded(std::size_t level, std::size_t required, std::size_t budget,
                                                     std::vector<FiltLevel> partial)
    : Error("cocycle budget exceeded at level " + std::to_string(level) + ": " + std::to_string(required) +
            " cocycles needed, budget " + std::to_string(budget)),
      level_(level),
      required_(required),
      partial_(std::move(partial)) {}

std::vector<std::uint64_t> module_fingerprint(const FpModule& m) {
    std::vector<std::uint64_t> key{m.dim()};
    std::vector<std::uint64_t> ranks;
    for (const auto& a : m.actions()) ranks.push_back(rank(a));
    std::sort(ranks.begin(), ranks.end());
    key.insert(key.end(), ranks.begin(), ranks.end());
    for (const auto& a : m.actions()) key.insert(key.end(), a.data().begin(), a.data().end());
    return key;
}

std::vector<FiltLevel> filt_enumerate(const FpModule& x, std::size_t n, const EnumerationOptions& options) {
    if (x.dim() == 0) throw InvalidArgument("filt_enumerate: X must be nonzero");
    if (n == 0) throw InvalidArgument("filt_enumerate: n must be at least 1");
    const std::uint32_t p = x.p();

    std::optional<PresentedNode> base;
    Vector xi;
    if (options.x) {
        base = initial_presentation(x, *options.x);
        xi = base->gens.column(0);
    }

    std::vector<FiltLevel> levels(1);
    levels[0].level = 1;
    FiltNode root;
    root.level = 1;
    root.module = x;
    root.generator_images = base ? base->gens : Matrix();
    if (base) root.presentation = FreePresentation{1, 1, base->relations};
    levels[0].nodes.push_back(std::move(root));

    for (std::size_t level = 2; level <= n; ++level) {
        const std::vector<FiltNode>& parents = levels.back().nodes;
        std::vector<Ext1Space> exts(parents.size());
        parallel_for(parents.size(), options.workers, [&](std::size_t i) { exts[i] = ext1(x, parents[i].module); });

        std::vector<std::uint64_t> offsets{0};
        for (const auto& e : exts) {
            const std::uint64_t count = checked_power(p, e.dim(), options.budget);
            offsets.push_back(offsets.back() + count);
            if (offsets.back() > options.budget)
                throw EnumerationBudgetExceeded(level, offsets.back(), options.budget, std::move(levels));
        }
        const std::uint64_t total = offsets.back();

        FiltLevel next;
        next.level = level;
        next.cocycles_enumerated = total;
        std::vector<ModuleSummary> reps;
        std::map<std::pair<std::vector<std::size_t>, std::size_t>, std::vector<std::size_t>> buckets;

        for (std::uint64_t start = 0; start < total; start += kBatch) {
            const std::size_t count = static_cast<std::size_t>(std::min<std::uint64_t>(kBatch, total - start));
            std::vector<Candidate> batch(count);
            std::vector<std::size_t> parent_of(count);
            std::vector<std::vector<Scalar>> coeffs_of(count);
            parallel_for(count, options.workers, [&](std::size_t t) {
                const std::uint64_t index = start + t;
                const std::size_t parent =
                    static_cast<std::size_t>(std::upper_bound(offsets.begin(), offsets.end(), index) - offsets.begin() - 1);
                const Ext1Space& e = exts[parent];
                coeffs_of[t] = digits(index - offsets[parent], p, e.dim());
                parent_of[t] = parent;
                Candidate& c = batch[t];
                c.witness = extension_from_cocycle(x, parents[parent].module, e, e.cocycle(coeffs_of[t]));
                if (base) {
                    const PresentedNode sub{parents[parent].presentation->relations,
                                            parents[parent].generator_images};
                    c.presented = extend_presentation(sub, c.witness, xi, *options.x);
                }
                c.summary = summarize(c.witness.middle);
            });

            for (std::size_t t = 0; t < count; ++t) {
                Candidate& c = batch[t];
                auto& bucket = buckets[{c.summary->profile, c.summary->end_dim}];
                bool duplicate = false;
                for (std::size_t r : bucket) {
                    try {
                        if (is_isomorphic(*c.summary, reps[r], options.iso).isomorphic) {
                            duplicate = true;
                            break;
                        }
                    } catch (const SearchInconclusive&) {
                        ++next.inconclusive_pairs;
                    }
                }
                if (duplicate) continue;
                bucket.push_back(reps.size());
                reps.push_back(*c.summary);

                const FiltNode& parent = parents[parent_of[t]];
                FiltNode node;
                node.level = level;
                node.module = c.witness.middle;
                node.chain = parent.chain;
                node.chain.push_back(std::move(c.witness));
                if (c.presented) {
                    node.presentation = FreePresentation{level, level, c.presented->relations};
                    node.generator_images = c.presented->gens;
                }
                node.parent = parent_of[t];
                node.cocycle_coefficients = std::move(coeffs_of[t]);
                next.nodes.push_back(std::move(node));
            }
        }

        std::vector<std::pair<std::vector<std::uint64_t>, std::size_t>> keys;
        for (std::size_t i = 0; i < next.nodes.size(); ++i) keys.emplace_back(module_fingerprint(next.nodes[i].module), i);
        std::sort(keys.begin(), keys.end());
        std::vector<FiltNode> sorted;
        for (auto& [key, i] : keys) sorted.push_back(std::move(next.nodes[i]));
        next.nodes = std::move(sorted);
        levels.push_back(std::move(next));
    }
    return levels;
}

ClosureVerdict ext_closure_contains_k(const AlgebraPtr& algebra, const RingElement& x, std::size_t depth,
                                      const EnumerationOptions& options) {
    if (!is_minimal_generator(algebra, x)) throw InvalidArgument("closure search needs x in m \\ m^2");
    const FpModule cyclic = cyclic_module(ideal_generated(algebra, {x}));
    EnumerationOptions opts = options;
    opts.x = x;
    const std::vector<FiltLevel> levels = filt_enumerate(cyclic, depth, opts);

    ClosureVerdict verdict;
    verdict.x = x;
    verdict.depth = depth;
    for (const auto& level : levels) {
        verdict.census.push_back(level.nodes.size());
        if (verdict.contains_k) continue;
        for (const auto& node : level.nodes) {
            SplitWitness s = splits_off_k(node.module);
            if (s.splits) {
                verdict.contains_k = true;
                verdict.witness_node = node;
                verdict.splitting_element = std::move(s.witness);
                verdict.bounded_depth = false;
                break;
            }
        }
    }
    return verdict;
}

FreePresentation build_presentation_matrix(const FiltNode& node, const FpModule& x_module, const RingElement& x) {
    PresentedNode current = initial_presentation(x_module, x);
    const Vector xi = current.gens.column(0);
    for (const auto& w : node.chain) current = extend_presentation(current, w, xi, x);
    if (!presents(node.module, current.gens, current.relations))
        throw LiftFailure("assembled matrix does not present the node's module");
    return {node.level, node.level, std::move(current.relations)};
}

namespace {

void require_triangular(const FreePresentation& pres, const RingElement& x) {
    const RingMatrix& m = pres.relations;
    if (m.rows != m.cols) throw DimensionMismatch("presentation matrix is not square");
    for (std::size_t r = 0; r < m.rows; ++r) {
        if (!(m.at(r, r) == x)) throw DimensionMismatch("presentation diagonal is not x");
        for (std::size_t c = 0; c < r; ++c)
            if (!m.at(r, c).is_zero()) throw DimensionMismatch("presentation matrix is not upper triangular");
    }
}

RingMatrix leading_block(const LocalAlgebra& alg, const RingMatrix& m, std::size_t size) {
    RingMatrix out(alg, size, size);
    for (std::size_t r = 0; r < size; ++r)
        for (std::size_t c = 0; c < size; ++c) out.at(r, c) = m.at(r, c);
    return out;
}

}  // namespace

std::vector<bool> check_matrix_condition(const AlgebraPtr& algebra, const FreePresentation& pres,
                                         const RingElement& x) {
    require_triangular(pres, x);
    const RingMatrix& m = pres.relations;
    const std::vector<RingElement> ann = annihilator(x, algebra).elements();
    const std::size_t d = algebra->dim();
    std::vector<bool> out;
    for (std::size_t j = 1; j < m.cols; ++j) {
        const Matrix image = expand(*algebra, leading_block(*algebra, m, j));
        Matrix moved(algebra->p(), j * d, ann.size());
        for (std::size_t s = 0; s < ann.size(); ++s) {
            Vector v;
            for (std::size_t i = 0; i < j; ++i) {
                const RingElement e = algebra->multiply(m.at(i, j), ann[s]);
                v.insert(v.end(), e.coords.begin(), e.coords.end());
            }
            moved.set_column(s, v);
        }
        out.push_back(column_space_contains(image, moved));
    }
    return out;
}

FreePresentation strict_upper_reduction(const AlgebraPtr& algebra, const FreePresentation& pres,
                                        const RingElement& x) {
    require_triangular(pres, x);
    const Ideal complement = complement_ideal(algebra, x);
    const std::size_t d = algebra->dim();
    const std::uint32_t p = algebra->p();
    // [L_x | I | 1]: every element is a x + t + u.
    const Matrix system = Matrix::hstack(Matrix::hstack(algebra->multiplication_matrix(x), complement.basis()),
                                         Matrix::column_vector(p, algebra->one().coords));

    FreePresentation out = pres;
    RingMatrix& m = out.relations;
    for (std::size_t j = 1; j < m.cols; ++j) {
        for (std::size_t i = j; i-- > 0;) {
            const RingElement c = m.at(i, j);
            if (complement.contains(c)) continue;
            const auto sol = solve(system, c.coords);
            if (!sol) throw Error("internal error: element outside (x) + I + F_p");
            const RingElement a{Vector(sol->begin(), sol->begin() + static_cast<long>(d))};
            if (a.is_zero()) continue;
            const RingElement minus_a = algebra->scale(a, p - 1);
            for (std::size_t r = 0; r <= i; ++r)
                m.at(r, j) = algebra->add(m.at(r, j), algebra->multiply(minus_a, m.at(r, i)));
        }
    }
    if (!(column_space(expand(*algebra, m)) == column_space(expand(*algebra, pres.relations))))
        throw Error("internal error: column operations changed the image");
    return out;
}

std::vector<Matrix> node_filtration(const FiltNode& node) {
    std::vector<Matrix> steps{Matrix::identity(node.module.p(), node.module.dim())};
    Matrix into_top = steps.front();
    for (std::size_t k = node.chain.size(); k-- > 0;) {
        into_top = into_top * node.chain[k].inject;
        steps.push_back(into_top);
    }
    std::reverse(steps.begin(), steps.end());
    return steps;
}

std::vector<Matrix> splice_filtration(const ExtensionWitness& w, const std::vector<Matrix>& sub_filtration,
                                      const std::vector<Matrix>& quotient_filtration) {
    std::vector<Matrix> steps;
    for (const auto& s : sub_filtration) steps.push_back(w.inject * s);
    for (const auto& q : quotient_filtration) {
        auto lifted = solve(w.project, q);
        if (!lifted) throw LiftFailure("quotient filtration does not lift");
        steps.push_back(Matrix::hstack(w.inject, *lifted));
    }
    return steps;
}

bool verify_filtration(const FpModule& m, const std::vector<Matrix>& steps, const FpModule& x,
                       const IsoOptions& iso) {
    if (steps.empty() || rank(steps.back()) != m.dim()) return false;
    Matrix previous(m.p(), m.dim(), 0);
    for (const auto& step : steps) {
        const Matrix basis = column_space(step);
        if (!(submodule_generated(m, basis) == basis)) return false;
        if (!column_space_contains(basis, previous)) return false;
        if (basis.cols() != previous.cols() + x.dim()) return false;
        const FpModule sub = restrict_to_submodule(m, basis);
        const auto coords = solve(basis, previous);
        const FpModule layer = quotient_module(sub, *coords).module;
        if (!is_isomorphic(layer, x, iso).isomorphic) return false;
        previous = basis;
    }
    return true;
}

// ---------------------------------------------------------------------------

bool LadderReport::all_exact() const {
    return std::all_of(steps.begin(), steps.end(),
                       [](const LadderStep& s) { return s.well_defined && s.module_maps && s.exact; });
}

bool LadderReport::closure_complete() const {
    return std::all_of(reachable.begin(), reachable.end(), [&](const auto& r) { return r.size() == n; });
}

LadderReport hypersurface_ladder_check(const AlgebraPtr& algebra) {
    if (algebra->edim() > 1) throw NotHypersurface("ring has embedding dimension " + std::to_string(algebra->edim()));
    LadderReport report;
    report.n = algebra->dim();
    if (report.n <= 1) return report;

    const std::uint32_t p = algebra->p();
    const std::size_t n = report.n;
    const RingElement x = algebra->generators().front();
    std::vector<RingElement> powers{algebra->one()};
    for (std::size_t i = 1; i <= n; ++i) powers.push_back(algebra->multiply(powers.back(), x));

    struct Cyclic {
        Ideal ideal;
        QuotientSpace q;
        FpModule module;
    };
    std::vector<Cyclic> cyc;
    for (std::size_t i = 0; i <= n; ++i) {
        Ideal ideal = ideal_generated(algebra, {powers[i]});
        QuotientSpace q = quotient_space(ideal.basis(), algebra->dim());
        FpModule module = cyclic_module(ideal);
        cyc.push_back({std::move(ideal), std::move(q), std::move(module)});
    }
    // Multiplication by r as a map R/(x^a) -> R/(x^b), and whether it is well defined.
    auto induced = [&](const RingElement& r, std::size_t a, std::size_t b) {
        const Matrix lr = algebra->multiplication_matrix(r);
        const bool ok = (cyc[b].q.projection * lr * cyc[a].ideal.basis()).is_zero();
        return std::pair{cyc[b].q.projection * lr * cyc[a].q.section, ok};
    };

    for (std::size_t i = 1; i < n; ++i) {
        const FpModule middle = direct_sum(cyc[i - 1].module, cyc[i + 1].module);
        const auto [f_top, ok1] = induced(algebra->one(), i, i - 1);
        const auto [f_bottom, ok2] = induced(x, i, i + 1);
        const auto [g_left, ok3] = induced(x, i - 1, i);
        const auto [g_right, ok4] = induced(algebra->scale(algebra->one(), p - 1), i + 1, i);
        const Matrix f = Matrix::vstack(f_top, f_bottom);
        const Matrix g = Matrix::hstack(g_left, g_right);
        ExtensionWitness w{cyc[i].module, middle, cyc[i].module, f, g};
        LadderStep step;
        step.i = i;
        step.well_defined = ok1 && ok2 && ok3 && ok4;
        step.module_maps = is_module_map(w.sub, w.middle, f) && is_module_map(w.middle, w.quotient, g);
        step.exact = is_exact_sequence(w);
        report.steps.push_back(step);
    }

    // Each verified sequence puts both summands of its middle term in the closure of R/(x^i).
    for (std::size_t seed = 1; seed < n; ++seed) {
        std::vector<bool> reached(n + 1, false);
        std::vector<std::size_t> stack{seed};
        reached[seed] = true;
        while (!stack.empty()) {
            const std::size_t i = stack.back();
            stack.pop_back();
            if (i >= n || !report.steps[i - 1].exact) continue;
            for (std::size_t j : {i - 1, i + 1})
                if (j >= 1 && !reached[j]) {
                    reached[j] = true;
                    stack.push_back(j);
                }
        }
        std::vector<std::size_t> set;
        for (std::size_t i = 1; i <= n; ++i)
            if (reached[i]) set.push_back(i);
        report.reachable.push_back(std::move(set));
    }
    return report;
}

}  // namespace extclosure
