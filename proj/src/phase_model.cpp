#include "phasebox/phase_model.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace phasebox {

long OccupationVector::particles() const {
    long s = 0;
    for (int v : n) s += v;
    return s;
}

long OccupationVector::suffix_sum(int i) const {
    long s = 0;
    for (std::size_t k = std::max(i, 0); k < n.size(); ++k) s += n[k];
    return s;
}

OccupationVector zero_occupation(int sites) {
    if (sites < 0) throw std::invalid_argument("zero_occupation: negative site count");
    return OccupationVector{std::vector<int>(static_cast<std::size_t>(sites) + 1, 0)};
}

PhaseVector PhaseVector::basis(OccupationVector occ) { return basis(std::move(occ), MPoly::constant(1)); }

PhaseVector PhaseVector::basis(OccupationVector occ, MPoly coeff) {
    PhaseVector v;
    v.add(occ, std::move(coeff));
    return v;
}

void PhaseVector::add_all(const PhaseVector& o) {
    for (const auto& [occ, c] : o.terms_) add(occ, c);
}

void PhaseVector::add(const OccupationVector& occ, MPoly c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(occ, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::vector<std::pair<MPoly, int>> apply_local(const LocalOp& op, int n_i) {
    if (n_i < 0) throw std::invalid_argument("apply_local: negative occupation");
    switch (op.kind) {
        case LocalOp::Lower:
            if (n_i == 0) return {};
            return {{MPoly::constant(1), n_i - 1}};
        case LocalOp::Raise:
            return {{MPoly::constant(1), n_i + 1}};
        case LocalOp::Proj:
            if (n_i == 0) return {{MPoly::constant(1), 0}};
            return {};
        case LocalOp::Scalar:
            return {{op.scalar, n_i}};
    }
    return {};
}

Partition occupation_to_partition(const OccupationVector& occ) {
    std::vector<int> mult(occ.n.begin() + 1, occ.n.end());
    return Partition::from_multiplicities(mult);
}

OccupationVector occupation_from_partition(const Partition& nu, long particles, int sites) {
    if (static_cast<long>(nu.length()) > particles)
        throw std::domain_error("occupation_from_partition: more parts than particles");
    if (!nu.empty() && nu.part(1) > sites)
        throw std::domain_error("occupation_from_partition: part exceeds site bound");
    OccupationVector occ = zero_occupation(sites);
    std::vector<int> mult = nu.multiplicities(sites);
    for (int i = 1; i <= sites; ++i) occ.n[static_cast<std::size_t>(i)] = mult[static_cast<std::size_t>(i - 1)];
    occ.n[0] = static_cast<int>(particles - static_cast<long>(nu.length()));
    return occ;
}

bool admissible(const OccupationVector& m, const OccupationVector& n) {
    if (m.sites() != n.sites()) throw std::invalid_argument("admissible: mismatched site counts");
    if (m.suffix_sum(0) - n.suffix_sum(0) != 1) return false;
    for (int i = 0; i <= m.sites(); ++i) {
        long d = m.suffix_sum(i) - n.suffix_sum(i);
        if (d < 0 || d > 1) return false;
    }
    return true;
}

namespace {

// Enumerate occupations m admissible to n together with the weight exponent
// sum_i i (m_i - n_i). The suffix-sum differences d_i = sum_{k>=i}(m_k - n_k)
// form a bit string with d_0 = 1, d_{M+1} = 0; m_i = n_i + d_i - d_{i+1}.
void for_each_admissible(const OccupationVector& n,
                         const std::function<void(const OccupationVector&, long)>& fn) {
    int m_sites = n.sites();
    OccupationVector m = n;
    std::function<void(int, int, long)> rec = [&](int i, int d_next, long exp_acc) {
        if (i == 0) {
            int delta = 1 - d_next;
            int ni = n.n[0];
            if (ni + delta < 0) return;
            m.n[0] = ni + delta;
            fn(m, exp_acc);
            m.n[0] = ni;
            return;
        }
        for (int d = 0; d <= 1; ++d) {
            int delta = d - d_next;
            int ni = n.n[static_cast<std::size_t>(i)];
            if (ni + delta < 0) continue;
            m.n[static_cast<std::size_t>(i)] = ni + delta;
            rec(i - 1, d, exp_acc + static_cast<long>(i) * delta);
            m.n[static_cast<std::size_t>(i)] = ni;
        }
    };
    rec(m_sites, 0, 0);
}

PhaseVector expand_admissible(const VarTable* vt, const PhaseVector& state, VarId x) {
    PhaseVector out;
    for (const auto& [occ, coeff] : state.terms()) {
        for_each_admissible(occ, [&](const OccupationVector& m, long e) {
            out.add(m, coeff * MPoly::var_pow2(vt, x, 2 * e));
        });
    }
    return out;
}

void check_integer_exponents(const PhaseVector& v, const char* who) {
    for (const auto& [occ, coeff] : v.terms())
        if (!coeff.has_integer_exponents())
            throw std::logic_error(std::string(who) + ": half-integer exponent survived");
}

}  // namespace

PhaseVector apply_B_direct(const VarTable* vt, const PhaseVector& state, VarId x) {
    return expand_admissible(vt, state, x);
}

PhaseVector apply_C_dual(const VarTable* vt, const PhaseVector& state, VarId x) {
    return expand_admissible(vt, state, x);
}

namespace {

// Auxiliary-space expansion of the monodromy matrix over one sector.
// kets: entry (1,2) of L_M .. L_0, local actions per the representation;
// bras: entry (2,1) with the argument inverted, actions mirrored.
PhaseVector transfer_corner(const VarTable* vt, const PhaseVector& state, VarId x, bool dual) {
    PhaseVector out;
    MPoly half_up = MPoly::var_pow2(vt, x, dual ? -1 : 1);
    MPoly half_down = MPoly::var_pow2(vt, x, dual ? 1 : -1);
    for (const auto& [occ, coeff] : state.terms()) {
        int m_sites = occ.sites();
        // aux component 0 <-> index 1, component 1 <-> index 2
        std::array<PhaseVector, 2> cur;
        cur[1] = PhaseVector::basis(occ);
        auto shift_site = [&](const PhaseVector& v, int site, int delta) {
            PhaseVector r;
            for (const auto& [o, c] : v.terms()) {
                int ni = o.n[static_cast<std::size_t>(site)];
                if (ni + delta < 0) continue;
                OccupationVector o2 = o;
                o2.n[static_cast<std::size_t>(site)] = ni + delta;
                r.add(o2, c);
            }
            return r;
        };
        auto scale = [&](const PhaseVector& v, const MPoly& s) {
            PhaseVector r;
            for (const auto& [o, c] : v.terms()) r.add(o, c * s);
            return r;
        };
        // Kets walk entry (1,2) of L_M..L_0 site-by-site; bras walk entry
        // (2,1) with the argument inverted. The transposition and the
        // swapped dual actions cancel, so both reduce to the same sweep with
        // only the scalar exponents flipped.
        for (int step = 0; step <= m_sites; ++step) {
            int site = dual ? m_sites - step : step;
            std::array<PhaseVector, 2> nxt;
            nxt[0] = scale(cur[0], half_down);
            nxt[0].add_all(shift_site(cur[1], site, +1));
            nxt[1] = shift_site(cur[0], site, -1);
            nxt[1].add_all(scale(cur[1], half_up));
            cur = std::move(nxt);
        }
        MPoly norm = MPoly::var_pow2(vt, x, m_sites) * coeff;
        for (const auto& [o, c] : cur[0].terms()) out.add(o, c * norm);
    }
    return out;
}

}  // namespace

PhaseVector apply_B_transfer(const VarTable* vt, const PhaseVector& state, VarId x) {
    PhaseVector out = transfer_corner(vt, state, x, false);
    check_integer_exponents(out, "apply_B_transfer");
    return out;
}

PhaseVector apply_C_transfer(const VarTable* vt, const PhaseVector& state, VarId x) {
    PhaseVector out = transfer_corner(vt, state, x, true);
    check_integer_exponents(out, "apply_C_transfer");
    return out;
}

MPoly inner(const PhaseVector& dual, const PhaseVector& ket) {
    MPoly acc;
    if (!dual.terms().empty() && !ket.terms().empty()) {
        int sd = dual.terms().begin()->first.sites();
        int sk = ket.terms().begin()->first.sites();
        if (sd != sk) throw std::invalid_argument("inner: mismatched site counts");
    }
    for (const auto& [occ, c] : dual.terms()) {
        auto it = ket.terms().find(occ);
        if (it != ket.terms().end()) acc += c * it->second;
    }
    return acc;
}

namespace {

MPoly sector_op_factor(const VarTable* vt, int sites, const VarSet& cs, const VarSet& bs) {
    PhaseVector ket = PhaseVector::basis(zero_occupation(sites));
    for (std::size_t l = bs.size(); l >= 1; --l) ket = apply_B_direct(vt, ket, bs[l - 1]);
    PhaseVector bra = PhaseVector::basis(zero_occupation(sites));
    for (std::size_t i = 0; i < cs.size(); ++i) bra = apply_C_dual(vt, bra, cs[i]);
    return inner(bra, ket);
}

MPoly sector_pp_factor(const VarTable* vt, int sites, const VarSet& cs, const VarSet& bs) {
    int n = static_cast<int>(cs.size());
    MPoly acc = MPoly::zero_over(vt);
    for_each_boxed_plane_partition(Box{n, n, sites}, [&](const PlanePartition& pp) {
        std::vector<Partition> s = slices(pp).padded(n);
        auto w = [&](int i) { return s[static_cast<std::size_t>(i + n)].weight(); };
        Monomial m;
        for (int i = 1; i <= n; ++i) {
            long asc = w(-i + 1) - w(-i);
            long desc = w(i - 1) - w(i);
            if (asc != 0) m = mono_mul(m, Monomial{{cs[static_cast<std::size_t>(i - 1)].index, 2 * asc}});
            if (desc != 0) m = mono_mul(m, Monomial{{bs[static_cast<std::size_t>(i - 1)].index, 2 * desc}});
        }
        acc.add_term(std::move(m), Rat(1));
    });
    return acc;
}

MPoly sector_schur_factor(const VarTable* vt, int sites, const VarSet& cs, const VarSet& bs) {
    int n = static_cast<int>(cs.size());
    MPoly acc = MPoly::zero_over(vt);
    for (const Partition& mu : partitions_in_box(n, sites))
        acc += schur_bialternant(vt, mu, cs) * schur_bialternant(vt, mu, bs);
    return acc;
}

void check_scalar_sizes(const VarSet& xs, const VarSet& ys, const VarSet& zs, const VarSet& vs) {
    if (xs.empty() || ys.empty() || xs.size() != zs.size() || ys.size() != vs.size())
        throw std::invalid_argument("scalar product: need N1,N2 >= 1 with matching variable sets");
}

}  // namespace

MPoly scalar_product_op(const VarTable* vt, int m1_sites, int m2_sites, const VarSet& xs,
                        const VarSet& ys, const VarSet& zs, const VarSet& vs) {
    check_scalar_sizes(xs, ys, zs, vs);
    return sector_op_factor(vt, m1_sites, xs, zs) * sector_op_factor(vt, m2_sites, ys, vs);
}

MPoly scalar_product_pp(const VarTable* vt, int m1_sites, int m2_sites, const VarSet& xs,
                        const VarSet& ys, const VarSet& zs, const VarSet& vs) {
    check_scalar_sizes(xs, ys, zs, vs);
    return sector_pp_factor(vt, m1_sites, xs, zs) * sector_pp_factor(vt, m2_sites, ys, vs);
}

MPoly scalar_product_schur(const VarTable* vt, int m1_sites, int m2_sites, const VarSet& xs,
                           const VarSet& ys, const VarSet& zs, const VarSet& vs) {
    check_scalar_sizes(xs, ys, zs, vs);
    return sector_schur_factor(vt, m1_sites, xs, zs) * sector_schur_factor(vt, m2_sites, ys, vs);
}

// ---- RTT diagnostic ---------------------------------------------------------

namespace {

void opsum_add(OpSum& s, OpWord w, MPoly c) {
    if (c.is_zero()) return;
    auto [it, inserted] = s.try_emplace(std::move(w), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) s.erase(it);
    }
}

OpSum opsum_scale(const OpSum& s, const MPoly& c) {
    OpSum out;
    for (const auto& [w, coeff] : s) opsum_add(out, w, coeff * c);
    return out;
}

OpSum opsum_mul(const OpSum& a, const OpSum& b) {
    OpSum out;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            OpWord w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            opsum_add(out, std::move(w), ca * cb);
        }
    return out;
}

void opsum_sub(OpSum& a, const OpSum& b) {
    for (const auto& [w, c] : b) opsum_add(a, w, -c);
}

// Rewrite against the algebra relations: phi phi^dag = phi^dag phi + pi,
// phi pi = 0, pi phi^dag = 0.
OpSum opsum_reduce(const OpSum& in) {
    OpSum out;
    std::vector<std::pair<OpWord, MPoly>> work(in.begin(), in.end());
    while (!work.empty()) {
        auto [w, c] = work.back();
        work.pop_back();
        bool rewritten = false;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            if (w[i] == SiteOp::Lower && w[i + 1] == SiteOp::Raise) {
                OpWord swapped = w;
                swapped[i] = SiteOp::Raise;
                swapped[i + 1] = SiteOp::Lower;
                OpWord proj(w.begin(), w.begin() + static_cast<long>(i));
                proj.push_back(SiteOp::Proj);
                proj.insert(proj.end(), w.begin() + static_cast<long>(i) + 2, w.end());
                work.emplace_back(std::move(swapped), c);
                work.emplace_back(std::move(proj), c);
                rewritten = true;
                break;
            }
            if ((w[i] == SiteOp::Lower && w[i + 1] == SiteOp::Proj) ||
                (w[i] == SiteOp::Proj && w[i + 1] == SiteOp::Raise)) {
                rewritten = true;  // relation kills the word
                break;
            }
        }
        if (!rewritten) opsum_add(out, std::move(w), c);
    }
    return out;
}

std::map<int, MPoly> opsum_apply(const OpSum& s, int n) {
    std::map<int, MPoly> out;
    for (const auto& [w, c] : s) {
        int cur = n;
        bool dead = false;
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            switch (*it) {
                case SiteOp::Lower:
                    if (cur == 0) dead = true;
                    else --cur;
                    break;
                case SiteOp::Raise:
                    ++cur;
                    break;
                case SiteOp::Proj:
                    if (cur != 0) dead = true;
                    break;
            }
            if (dead) break;
        }
        if (dead) continue;
        auto [it2, ins] = out.try_emplace(cur, c);
        if (!ins) {
            it2->second += c;
            if (it2->second.is_zero()) out.erase(it2);
        }
    }
    return out;
}

using SymMatrix2 = std::array<std::array<OpSum, 2>, 2>;

SymMatrix2 l_matrix_sym(const VarTable* vt, VarId x, bool scalar_only) {
    SymMatrix2 l;
    opsum_add(l[0][0], OpWord{}, MPoly::var_pow2(vt, x, -1));
    opsum_add(l[1][1], OpWord{}, MPoly::var_pow2(vt, x, 1));
    if (!scalar_only) {
        opsum_add(l[0][1], OpWord{SiteOp::Raise}, MPoly::constant(1));
        opsum_add(l[1][0], OpWord{SiteOp::Lower}, MPoly::constant(1));
    }
    return l;
}

using SymMatrix4 = std::array<std::array<OpSum, 4>, 4>;

SymMatrix4 tensor(const SymMatrix2& a, const SymMatrix2& b) {
    SymMatrix4 t;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) t[2 * i + j][2 * k + l] = opsum_mul(a[i][k], b[j][l]);
    return t;
}

SymMatrix4 r_times(const RMatrix& r, const SymMatrix4& t) {
    SymMatrix4 out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) {
                if (r[i][k].is_zero()) continue;
                for (const auto& [w, c] : opsum_scale(t[k][j], r[i][k])) opsum_add(out[i][j], w, c);
            }
    return out;
}

SymMatrix4 times_r(const SymMatrix4& t, const RMatrix& r) {
    SymMatrix4 out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) {
                if (r[k][j].is_zero()) continue;
                for (const auto& [w, c] : opsum_scale(t[i][k], r[k][j])) opsum_add(out[i][j], w, c);
            }
    return out;
}

RttReport rtt_core(const VarTable* vt, const RMatrix& r, VarId x, VarId y, int max_n,
                   bool scalar_only) {
    SymMatrix2 lx = l_matrix_sym(vt, x, scalar_only);
    SymMatrix2 ly = l_matrix_sym(vt, y, scalar_only);
    SymMatrix4 lhs = r_times(r, tensor(lx, ly));
    SymMatrix4 rhs = times_r(tensor(ly, lx), r);
    RttReport rep;
    rep.symbolic_zero = true;
    rep.state_zero = true;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            OpSum diff = lhs[i][j];
            opsum_sub(diff, rhs[i][j]);
            for (int n = 0; n <= max_n; ++n) {
                auto img = opsum_apply(diff, n);
                if (!img.empty()) {
                    rep.state_zero = false;
                    rep.state_residuals.push_back(RttStateResidual{i, j, n, std::move(img)});
                }
            }
            rep.symbolic_residual[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                opsum_reduce(diff);
            if (!rep.symbolic_residual[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                     .empty())
                rep.symbolic_zero = false;
        }
    rep.completed = true;
    return rep;
}

}  // namespace

RMatrix standard_r_matrix(const VarTable* vt, VarId x, VarId y) {
    RMatrix r{};
    MPoly xp = MPoly::variable(vt, x);
    MPoly yp = MPoly::variable(vt, y);
    MPoly s = MPoly::var_pow2(vt, x, 1) * MPoly::var_pow2(vt, y, 1);
    r[0][0] = xp;
    r[1][2] = s;
    r[2][1] = s;
    r[2][2] = xp - yp;
    r[3][3] = xp;
    return r;
}

RMatrix identity_r_matrix() {
    RMatrix r{};
    for (int i = 0; i < 4; ++i) r[i][i] = MPoly::constant(1);
    return r;
}

RttReport verify_rtt(const VarTable* vt, const RMatrix& r, VarId x, VarId y, int max_n) {
    return rtt_core(vt, r, x, y, max_n, false);
}

RttReport verify_rtt_scalar_l(const VarTable* vt, const RMatrix& r, VarId x, VarId y) {
    return rtt_core(vt, r, x, y, 0, true);
}

std::string opword_str(const OpWord& w) {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += "*";
        switch (w[i]) {
            case SiteOp::Lower: s += "phi"; break;
            case SiteOp::Raise: s += "phi_dag"; break;
            case SiteOp::Proj: s += "pi"; break;
        }
    }
    return s;
}

}  // namespace phasebox
