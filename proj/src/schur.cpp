#include "phasebox/schur.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace phasebox {

MPoly skew_schur_single(const VarTable* vt, const Partition& mu, const Partition& nu, VarId x) {
    if (!interlaces(mu, nu)) return MPoly::zero_over(vt);
    long d = mu.weight() - nu.weight();
    return MPoly::var_pow2(vt, x, 2 * d);
}

std::vector<Partition> interlacings_below(const Partition& mu) {
    std::vector<Partition> out;
    std::vector<int> nu;
    std::function<void(std::size_t)> pick = [&](std::size_t i) {
        if (mu.part(i + 2) == 0) out.emplace_back(Partition(nu));
        if (i + 1 > mu.length()) return;
        int hi = mu.part(i + 1);
        int lo = mu.part(i + 2);
        for (int v = std::max(lo, 1); v <= hi; ++v) {
            nu.push_back(v);
            pick(i + 1);
            nu.pop_back();
        }
    };
    pick(0);
    return out;
}

std::vector<Partition> interlacings_above(const Partition& nu, long budget) {
    std::vector<Partition> out;
    if (budget < 0) return out;
    std::vector<int> mu;
    // mu_1 >= nu_1 >= mu_2 >= nu_2 >= ...; mu has at most l(nu)+1 parts.
    std::function<void(std::size_t, long)> pick = [&](std::size_t i, long left) {
        if (i > nu.length() + 1) {
            out.emplace_back(Partition(mu));
            return;
        }
        int lo = nu.part(i);
        int hi = i == 1 ? static_cast<int>(nu.part(1) + left)
                        : nu.part(i - 1);
        for (int v = lo; v <= hi; ++v) {
            long cost = v - nu.part(i);
            if (cost > left) break;
            if (v == 0) {
                // mu stops here; larger choices of this part continue below
                out.emplace_back(Partition(mu));
                continue;
            }
            mu.push_back(v);
            pick(i + 1, left - cost);
            mu.pop_back();
        }
    };
    pick(1, budget);
    return out;
}

namespace {

// Determinant by cofactor expansion; entries are exact polynomials and the
// matrices are tiny.
MPoly det(std::vector<std::vector<MPoly>>& m) {
    std::size_t n = m.size();
    if (n == 0) return MPoly::constant(1);
    if (n == 1) return m[0][0];
    MPoly acc;
    for (std::size_t r = 0; r < n; ++r) {
        if (m[r][0].is_zero()) continue;
        std::vector<std::vector<MPoly>> minor;
        minor.reserve(n - 1);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r) continue;
            minor.emplace_back(m[i].begin() + 1, m[i].end());
        }
        MPoly term = m[r][0] * det(minor);
        if (r % 2 == 1) term = -term;
        acc += term;
    }
    return acc;
}

}  // namespace

MPoly schur_bialternant(const VarTable* vt, const Partition& mu, const VarSet& vars) {
    std::size_t n = vars.size();
    if (mu.length() > n) return MPoly::zero_over(vt);
    if (n == 0) return MPoly::constant(1);
    std::vector<std::vector<MPoly>> alt(n, std::vector<MPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            long e = mu.part(j + 1) - static_cast<long>(j + 1) + static_cast<long>(n);
            alt[i][j] = MPoly::var_pow2(vt, vars[i], 2 * e);
        }
    MPoly num = det(alt);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            MPoly d = MPoly::variable(vt, vars[i]) - MPoly::variable(vt, vars[j]);
            num = divide_exact(num, d, vars[i]);
        }
    return num;
}

MPoly schur_tableaux(const VarTable* vt, const Partition& mu, const VarSet& vars) {
    int n = static_cast<int>(vars.size());
    MPoly acc = MPoly::zero_over(vt);
    if (mu.empty()) return MPoly::constant(1);
    if (static_cast<int>(mu.length()) > n) return acc;
    // Fill row by row; rows weakly increase, columns strictly increase.
    std::vector<std::vector<int>> tab(mu.length());
    std::vector<long> content(static_cast<std::size_t>(n), 0);
    std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t r, std::size_t c) {
        if (r == mu.length()) {
            Monomial m;
            for (std::size_t v = 0; v < content.size(); ++v)
                if (content[v] != 0) m.emplace_back(vars[v].index, 2 * content[v]);
            // vars may be registered in any order; normalize
            std::sort(m.begin(), m.end());
            acc.add_term(std::move(m), Rat(1));
            return;
        }
        if (c == static_cast<std::size_t>(mu.part(r + 1))) {
            fill(r + 1, 0);
            return;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, tab[r][c - 1]);
        if (r > 0) lo = std::max(lo, tab[r - 1][c] + 1);
        for (int v = lo; v <= n; ++v) {
            tab[r].push_back(v);
            ++content[static_cast<std::size_t>(v - 1)];
            fill(r, c + 1);
            --content[static_cast<std::size_t>(v - 1)];
            tab[r].pop_back();
        }
    };
    fill(0, 0);
    return acc;
}

MPoly schur_branch(const VarTable* vt, const Partition& mu, const VarSet& vars) {
    if (vars.empty()) return mu.empty() ? MPoly::constant(1) : MPoly::zero_over(vt);
    VarSet rest(vars.begin(), vars.end() - 1);
    VarId xn = vars.back();
    MPoly acc = MPoly::zero_over(vt);
    for (const Partition& nu : interlacings_below(mu)) {
        MPoly inner = schur_branch(vt, nu, rest);
        if (inner.is_zero()) continue;
        acc += skew_schur_single(vt, mu, nu, xn) * inner;
    }
    return acc;
}

MPoly skew_schur(const VarTable* vt, const Partition& mu, const Partition& nu, const VarSet& vars) {
    if (vars.empty()) return mu == nu ? MPoly::constant(1) : MPoly::zero_over(vt);
    VarSet rest(vars.begin(), vars.end() - 1);
    VarId xn = vars.back();
    MPoly acc = MPoly::zero_over(vt);
    for (const Partition& rho : interlacings_below(mu)) {
        MPoly inner = skew_schur(vt, rho, nu, rest);
        if (inner.is_zero()) continue;
        acc += skew_schur_single(vt, mu, rho, xn) * inner;
    }
    return acc;
}

}  // namespace phasebox
