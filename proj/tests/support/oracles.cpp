#include "oracles.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace oracle {

namespace {

std::uint32_t inverse(std::uint32_t a, std::uint32_t p) {
    std::uint64_t result = 1, base = a, e = p - 2;
    while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

void enumerate_degree_below(std::size_t nvars, int bound, std::vector<std::vector<int>>& out) {
    std::vector<int> e(nvars, 0);
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (i == nvars) {
            out.push_back(e);
            return;
        }
        for (int k = 0; k <= left; ++k) {
            e[i] = k;
            self(self, i + 1, left - k);
        }
        e[i] = 0;
    };
    if (bound > 0) rec(rec, 0, bound - 1);
}

}  // namespace

std::size_t rank(std::vector<Row> rows, std::uint32_t p) {
    std::size_t r = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][c] % p == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        const std::uint64_t inv = inverse(rows[r][c] % p, p);
        for (auto& v : rows[r]) v = static_cast<std::uint32_t>(v % p * inv % p);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] % p == 0) continue;
            const std::uint64_t f = rows[i][c] % p;
            for (std::size_t k = 0; k < cols; ++k)
                rows[i][k] = static_cast<std::uint32_t>((rows[i][k] % p + p - f * rows[r][k] % p) % p);
        }
        ++r;
    }
    return r;
}

std::uint64_t count_kernel(const extclosure::Matrix& m) {
    const std::uint32_t p = m.modulus();
    const std::size_t n = m.cols();
    std::vector<std::uint32_t> v(n, 0);
    std::uint64_t count = 0;
    while (true) {
        bool zero = true;
        for (std::size_t r = 0; r < m.rows() && zero; ++r) {
            std::uint64_t s = 0;
            for (std::size_t c = 0; c < n; ++c) s += static_cast<std::uint64_t>(m(r, c)) * v[c];
            zero = s % p == 0;
        }
        count += zero;
        std::size_t i = 0;
        while (i < n && ++v[i] == p) v[i++] = 0;
        if (i == n) break;
    }
    return count;
}

Poly parse(const std::string& text, const std::vector<std::string>& vars) {
    Poly out;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto number = [&]() -> long long {
        long long v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + (text[i++] - '0');
        return v;
    };
    skip();
    int sign = 1;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) sign = text[i++] == '-' ? -1 : 1;
    while (true) {
        skip();
        long long coeff = 1;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) coeff = number();
        std::vector<int> e(vars.size(), 0);
        while (true) {
            skip();
            std::size_t best = vars.size(), best_len = 0;
            for (std::size_t v = 0; v < vars.size(); ++v)
                if (vars[v].size() > best_len && text.compare(i, vars[v].size(), vars[v]) == 0) {
                    best = v;
                    best_len = vars[v].size();
                }
            if (best == vars.size()) break;
            i += best_len;
            skip();
            int power = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                skip();
                power = static_cast<int>(number());
            }
            e[best] += power;
        }
        out.terms.emplace_back(e, sign * coeff);
        skip();
        if (i >= text.size()) break;
        if (text[i] != '+' && text[i] != '-') throw std::invalid_argument("oracle parse: " + text);
        sign = text[i++] == '-' ? -1 : 1;
    }
    return out;
}

std::size_t truncated_quotient_dim(const std::vector<Poly>& gens, std::size_t nvars, std::uint32_t p,
                                   std::size_t n) {
    std::vector<std::vector<int>> monos;
    enumerate_degree_below(nvars, static_cast<int>(n), monos);
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t k = 0; k < monos.size(); ++k) index[monos[k]] = k;

    std::vector<Row> rows;
    for (const auto& g : gens) {
        for (const auto& m : monos) {
            Row row(monos.size(), 0);
            bool any = false;
            for (const auto& [e, c] : g.terms) {
                std::vector<int> prod(nvars);
                int deg = 0;
                for (std::size_t v = 0; v < nvars; ++v) deg += prod[v] = e[v] + m[v];
                if (deg >= static_cast<int>(n)) continue;
                auto& slot = row[index.at(prod)];
                slot = static_cast<std::uint32_t>(((slot + c) % static_cast<long long>(p) + p) % p);
                any = true;
            }
            if (any) rows.push_back(std::move(row));
        }
    }
    return monos.size() - rank(std::move(rows), p);
}

std::size_t quotient_dim(const std::vector<std::string>& relations, const std::vector<std::string>& vars,
                         std::uint32_t p) {
    std::vector<Poly> gens;
    for (const auto& r : relations) gens.push_back(parse(r, vars));
    std::size_t prev = truncated_quotient_dim(gens, vars.size(), p, 1);
    for (std::size_t n = 2; n < 40; ++n) {
        const std::size_t cur = truncated_quotient_dim(gens, vars.size(), p, n);
        // Equal consecutive values mean m^{n-1} lies in I + m^n, hence in I.
        if (cur == prev) return cur;
        prev = cur;
    }
    throw std::runtime_error("oracle: quotient did not stabilize");
}

std::size_t hom_dim(const extclosure::FpModule& m, const extclosure::FpModule& n) {
    const std::uint32_t p = m.p();
    const std::size_t dm = m.dim(), dn = n.dim();
    if (dm == 0 || dn == 0) return 0;
    // Unknown f(r, c) at index r * dm + c.
    std::vector<Row> rows;
    for (std::size_t e = 1; e < m.algebra()->dim(); ++e) {
        const auto& am = m.action(e);
        const auto& an = n.action(e);
        for (std::size_t r = 0; r < dn; ++r)
            for (std::size_t c = 0; c < dm; ++c) {
                Row row(dn * dm, 0);
                // (f am)(r, c) = sum_k f(r, k) am(k, c)
                for (std::size_t k = 0; k < dm; ++k) row[r * dm + k] = (row[r * dm + k] + am(k, c)) % p;
                // (an f)(r, c) = sum_k an(r, k) f(k, c)
                for (std::size_t k = 0; k < dn; ++k) row[k * dm + c] = (row[k * dm + c] + p - an(r, k)) % p;
                rows.push_back(std::move(row));
            }
    }
    return dn * dm - rank(std::move(rows), p);
}

std::size_t ext1_dim(const extclosure::FpModule& n, const extclosure::FpModule& l) {
    using namespace extclosure;
    const auto& a = n.algebra();
    const std::size_t da = a->dim(), dn = n.dim();
    // Non-minimal cover A^{dim N} -> N sending generator j to basis vector j.
    Matrix surj(a->p(), dn, dn * da);
    for (std::size_t j = 0; j < dn; ++j)
        for (std::size_t b = 0; b < da; ++b) surj.set_column(j * da + b, n.action(b).column(j));
    const Matrix omega_basis = kernel_basis(surj);
    const FpModule free = free_module(a, dn);
    const std::size_t hom_omega =
        omega_basis.cols() == 0 ? 0 : hom_dim(restrict_to_submodule(free, omega_basis), l);
    return hom_omega + hom_dim(n, l) - dn * l.dim();
}

std::size_t tor1_cyclic(const extclosure::Ideal& i, const extclosure::Ideal& j) {
    return extclosure::ideal_intersection(i, j).dim() - extclosure::ideal_product(i, j).dim();
}

extclosure::RingElement random_in_max(const extclosure::LocalAlgebra& a, std::mt19937_64& rng) {
    extclosure::RingElement e = a.zero();
    for (std::size_t i = 1; i < a.dim(); ++i) e.coords[i] = static_cast<std::uint32_t>(rng() % a.p());
    return e;
}

extclosure::FpModule random_module(const extclosure::AlgebraPtr& a, std::mt19937_64& rng) {
    using namespace extclosure;
    auto cyclic = [&] {
        std::vector<RingElement> gens;
        const std::size_t count = 1 + rng() % 2;
        for (std::size_t k = 0; k < count; ++k) gens.push_back(random_in_max(*a, rng));
        return cyclic_module(ideal_generated(a, gens));
    };
    FpModule m = cyclic();
    switch (rng() % 4) {
        case 0: m = direct_sum(m, residue_field(a)); break;
        case 1: m = direct_sum(m, cyclic()); break;
        case 2: m = matlis_dual(m); break;
        default: break;
    }
    return m;
}

}  // namespace oracle
