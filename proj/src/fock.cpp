#include "phasebox/fock.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "phasebox/schur.hpp"

namespace phasebox {

long sector_energy2(const SectorState& s) {
    return 2 * s.lambda.weight() + static_cast<long>(s.charge) * s.charge;
}

long energy2(const FockState& s) { return sector_energy2(s.psi) + sector_energy2(s.phi); }

FockState fock_vacuum() { return FockState{}; }

MayaSector to_maya(const SectorState& s) {
    MayaSector m;
    long l = static_cast<long>(s.lambda.length());
    long c = s.charge;
    // Empty slots e_i = 2c + 2(lambda_i - i) + 1, strictly decreasing;
    // beyond i = l they are the consecutive odd tail below 2c - 2l - 1.
    std::set<int> empty_head;
    for (long i = 1; i <= l; ++i) {
        long e = 2 * c + 2 * (s.lambda.part(static_cast<std::size_t>(i)) - i) + 1;
        if (e > 0)
            m.emp_pos.insert(static_cast<int>(e));
        else
            empty_head.insert(static_cast<int>(e));
    }
    long tail_start = 2 * c - 2 * l - 1;  // every odd <= this is empty
    for (long i = l + 1; tail_start + 2 * (l + 1 - i) > 0; ++i)
        m.emp_pos.insert(static_cast<int>(2 * c - 2 * i + 1));
    for (long d = -1; d > tail_start; d -= 2)
        if (!empty_head.count(static_cast<int>(d))) m.occ_neg.insert(static_cast<int>(d));
    return m;
}

SectorState from_maya(const MayaSector& m) {
    long c = static_cast<long>(m.emp_pos.size()) - static_cast<long>(m.occ_neg.size());
    std::vector<int> parts;
    long i = 0;
    auto emit = [&](long e2) -> bool {
        ++i;
        long lam2 = e2 - 2 * c + 2 * i - 1;
        if (lam2 % 2 != 0 || lam2 < 0) throw std::logic_error("from_maya: inconsistent slot set");
        long lam = lam2 / 2;
        if (lam == 0) return false;
        parts.push_back(static_cast<int>(lam));
        return true;
    };
    for (auto it = m.emp_pos.rbegin(); it != m.emp_pos.rend(); ++it)
        if (!emit(*it)) return SectorState{static_cast<int>(c), Partition(std::move(parts))};
    for (long d = -1;; d -= 2) {
        if (m.occ_neg.count(static_cast<int>(d))) continue;
        if (!emit(d)) break;
    }
    return SectorState{static_cast<int>(c), Partition(std::move(parts))};
}

namespace {

bool slot_occupied(const MayaSector& m, int d2) {
    return d2 > 0 ? m.emp_pos.count(d2) == 0 : m.occ_neg.count(d2) > 0;
}

// Number of occupied slots strictly below d2.
long crossings_below(const MayaSector& m, int d2) {
    long count = 0;
    for (int a : m.occ_neg)
        if (a < d2) ++count;
    if (d2 > 0) {
        count += (d2 - 1) / 2;  // positive odds below d2
        for (int b : m.emp_pos)
            if (b < d2) --count;
    }
    return count;
}

// creator = true inserts, false removes; returns the crossing sign.
std::optional<int> apply_slot(MayaSector& m, int d2, bool creator) {
    bool occ = slot_occupied(m, d2);
    if (creator == occ) return std::nullopt;
    int sign = crossings_below(m, d2) % 2 == 0 ? 1 : -1;
    if (creator) {
        if (d2 > 0)
            m.emp_pos.erase(d2);
        else
            m.occ_neg.insert(d2);
    } else {
        if (d2 > 0)
            m.emp_pos.insert(d2);
        else
            m.occ_neg.erase(d2);
    }
    return sign;
}

}  // namespace

std::optional<std::pair<int, FockState>> apply_mode(const ModeOp& op, const FockState& state) {
    const SectorState& sec = op.phi_sector ? state.phi : state.psi;
    MayaSector m = to_maya(sec);
    // psi_m annihilates slot -m; psi*_n creates slot n.
    int slot = op.starred ? op.index2 : -op.index2;
    auto sign = apply_slot(m, slot, op.starred);
    if (!sign) return std::nullopt;
    FockState out = state;
    (op.phi_sector ? out.phi : out.psi) = from_maya(m);
    return std::make_pair(*sign, out);
}

FockVector FockVector::basis(const FockState& s, long bound2) {
    FockVector v(bound2);
    v.add(s, MPoly::constant(1));
    return v;
}

void FockVector::add(const FockState& s, MPoly c) {
    MPoly t = truncate2(c, bound2_);
    if (t.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(s, t);
    if (!inserted) {
        it->second += t;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void FockVector::add_all(const FockVector& o) {
    for (const auto& [s, c] : o.terms_) add(s, c);
}

void FockVector::sub_all(const FockVector& o) {
    for (const auto& [s, c] : o.terms_) add(s, -c);
}

MPoly FockVector::coeff(const FockState& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? MPoly{} : it->second;
}

FockVector apply_mode(const ModeOp& op, const FockVector& v) {
    FockVector out(v.bound2());
    for (const auto& [s, c] : v.terms()) {
        auto r = apply_mode(op, s);
        if (!r) continue;
        out.add(r->second, r->first == 1 ? c : -c);
    }
    return out;
}

FockVector apply_H(int n, bool tilde, const FockVector& v) {
    if (n == 0) throw std::invalid_argument("apply_H: n must be nonzero");
    FockVector out(v.bound2());
    for (const auto& [s, c] : v.terms()) {
        const SectorState& sec = tilde ? s.phi : s.psi;
        MayaSector maya = to_maya(sec);
        int lo = (maya.occ_neg.empty() ? -1 : *maya.occ_neg.begin()) - 2 * std::abs(n) - 2;
        int hi = (maya.emp_pos.empty() ? 1 : *maya.emp_pos.rbegin()) + 2 * std::abs(n) + 2;
        for (int j2 = lo; j2 <= hi; j2 += 2) {
            int dst = j2 + 2 * n;
            if (!slot_occupied(maya, j2) || slot_occupied(maya, dst)) continue;
            MayaSector work = maya;
            auto s1 = apply_slot(work, dst, true);
            auto s2 = apply_slot(work, j2, false);
            if (!s1 || !s2) throw std::logic_error("apply_H: slot bookkeeping failed");
            FockState ns = s;
            (tilde ? ns.phi : ns.psi) = from_maya(work);
            out.add(ns, (*s1) * (*s2) == 1 ? c : -c);
        }
    }
    return out;
}

namespace {

// index2 of psi_{m_i} in the ket construction: m_i = -(mu_i - i) - 1/2.
int ket_mode_index2(const Partition& mu, long i) {
    return static_cast<int>(-2 * (mu.part(static_cast<std::size_t>(i)) - i) - 1);
}
// index2 of psi*_{m_i} in the bra construction: m_i = (mu_i - i) + 1/2.
int bra_mode_index2(const Partition& mu, long i) {
    return static_cast<int>(2 * (mu.part(static_cast<std::size_t>(i)) - i) + 1);
}

}  // namespace

FockVector state_from_2partition(const Partition& mu1, const Partition& mu2, int l1, int l2,
                                 long bound2) {
    if (l1 > 0 || l2 > 0 || -static_cast<long>(l1) < static_cast<long>(mu1.length()) ||
        -static_cast<long>(l2) < static_cast<long>(mu2.length()))
        throw std::domain_error("state_from_2partition: need -l_j >= l(mu^j), l_j <= 0");
    // Textual order: psi modes, phi modes, Psi_{l1}, Phi_{l2}; applied
    // right-to-left to |vac>.
    std::vector<ModeOp> ops;
    for (long i = 1; i <= -static_cast<long>(l1); ++i) ops.push_back(ModeOp::psi(ket_mode_index2(mu1, i)));
    for (long i = 1; i <= -static_cast<long>(l2); ++i) ops.push_back(ModeOp::phi(ket_mode_index2(mu2, i)));
    for (long k = l1; k <= -1; ++k) ops.push_back(ModeOp::psi_star(static_cast<int>(2 * k + 1)));
    for (long k = l2; k <= -1; ++k) ops.push_back(ModeOp::phi_star(static_cast<int>(2 * k + 1)));

    FockVector cur = FockVector::basis(fock_vacuum(), bound2);
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        cur = apply_mode(*it, cur);
        if (cur.is_zero()) throw std::logic_error("state_from_2partition: construction vanished");
    }
    return cur;
}

std::vector<ModeOp> dual_ops_for_2partition(const Partition& mu1, const Partition& mu2, int l1,
                                            int l2) {
    if (l1 > 0 || l2 > 0 || -static_cast<long>(l1) < static_cast<long>(mu1.length()) ||
        -static_cast<long>(l2) < static_cast<long>(mu2.length()))
        throw std::domain_error("dual_ops_for_2partition: need -l_j >= l(mu^j), l_j <= 0");
    std::vector<ModeOp> ops;
    // Psi*_{l1} = psi_{1/2} ... psi_{-l1-1/2}, then the phi twin, then the
    // starred mode strings in decreasing i.
    for (long k = 0; k < -static_cast<long>(l1); ++k) ops.push_back(ModeOp::psi(static_cast<int>(2 * k + 1)));
    for (long k = 0; k < -static_cast<long>(l2); ++k) ops.push_back(ModeOp::phi(static_cast<int>(2 * k + 1)));
    for (long i = -static_cast<long>(l2); i >= 1; --i) ops.push_back(ModeOp::phi_star(bra_mode_index2(mu2, i)));
    for (long i = -static_cast<long>(l1); i >= 1; --i) ops.push_back(ModeOp::psi_star(bra_mode_index2(mu1, i)));
    return ops;
}

Series pairing(const std::vector<ModeOp>& dual_ops, const FockVector& ket) {
    FockVector cur = ket;
    for (auto it = dual_ops.rbegin(); it != dual_ops.rend(); ++it) cur = apply_mode(*it, cur);
    return Series::with_bound2(cur.coeff(fock_vacuum()), ket.bound2());
}

namespace {

FockVector scale_vec(const FockVector& v, const MPoly& m) {
    FockVector out(v.bound2());
    for (const auto& [s, c] : v.terms()) out.add(s, c * m);
    return out;
}

void check_gamma_arg(const MPoly& m, const char* who) {
    if (!m.is_monomial() || m.terms().begin()->second != 1 || mono_deg2(m.terms().begin()->first) <= 0)
        throw std::domain_error(std::string(who) +
                                ": vertex argument must be a monomial of positive degree");
}

}  // namespace

FockVector apply_vertex(const FockVector& in, bool minus, const MPoly& z_mono, const MPoly& v_mono,
                        int coeff_sign) {
    check_gamma_arg(z_mono, "apply_vertex");
    check_gamma_arg(v_mono, "apply_vertex");
    long zdeg2 = z_mono.degree2();
    long vdeg2 = v_mono.degree2();
    // The minimum coefficient degree of a term decides which H_{-n} can
    // still contribute under the truncation; filtering before the sweep
    // keeps the exponential loop off dead weight.
    auto min_deg2 = [](const MPoly& c) { return mono_deg2(c.terms().begin()->first); };
    auto apply_x = [&](const FockVector& v) {
        FockVector out(v.bound2());
        long max_energy = 0;
        for (const auto& [s, c] : v.terms())
            max_energy = std::max(max_energy,
                                  std::max(static_cast<long>(s.psi.lambda.weight()),
                                           static_cast<long>(s.phi.lambda.weight())));
        long nz = minus ? (zdeg2 > 0 ? v.bound2() / zdeg2 : 0) : max_energy;
        long nv = minus ? (vdeg2 > 0 ? v.bound2() / vdeg2 : 0) : max_energy;
        auto run_family = [&](bool tilde, long n_max, const MPoly& mono, long mono_deg2) {
            for (long n = 1; n <= n_max; ++n) {
                const FockVector* src = &v;
                FockVector sub(v.bound2());
                if (minus) {
                    for (const auto& [s, c] : v.terms())
                        if (min_deg2(c) + n * mono_deg2 <= v.bound2()) sub.add(s, c);
                    if (sub.is_zero()) break;
                    src = &sub;
                }
                MPoly coeff = mono.pow(static_cast<unsigned long>(n)) * rat(coeff_sign, n);
                FockVector h =
                    apply_H(minus ? -static_cast<int>(n) : static_cast<int>(n), tilde, *src);
                out.add_all(scale_vec(h, coeff));
            }
        };
        run_family(false, nz, z_mono, zdeg2);
        run_family(true, nv, v_mono, vdeg2);
        return out;
    };
    FockVector total = in;
    FockVector cur = in;
    for (long k = 1;; ++k) {
        cur = apply_x(cur);
        // 1/k! accumulated one factor at a time
        cur = scale_vec(cur, MPoly::constant(rat(1, k)));
        if (cur.is_zero()) break;
        for (const auto& [s, c] : cur.terms()) total.add(s, c);
    }
    return total;
}

FockVector gamma_plus_oracle(const VarTable* vt, VarId z, VarId v, const FockVector& state) {
    return apply_vertex(state, false, MPoly::variable(vt, z), MPoly::variable(vt, v));
}

FockVector gamma_minus_oracle(const VarTable* vt, VarId z, VarId v, const FockVector& state) {
    return apply_vertex(state, true, MPoly::variable(vt, z), MPoly::variable(vt, v));
}

FockVector gamma_interlacing(const VarTable* vt, VarId z, VarId v, const TwoPartition& chi,
                             bool minus, long bound2) {
    FockVector acc(bound2);
    auto add_term = [&](const Partition& p1, const Partition& p2, long dz, long dv) {
        MPoly coeff = MPoly::var_pow2(vt, z, 2 * dz) * MPoly::var_pow2(vt, v, 2 * dv);
        int l1 = -static_cast<int>(p1.length()) - 1;
        int l2 = -static_cast<int>(p2.length()) - 1;
        FockVector st = state_from_2partition(p1, p2, l1, l2, bound2);
        acc.add_all(scale_vec(st, coeff));
    };
    if (!minus) {
        for (const Partition& nu1 : interlacings_below(chi.first))
            for (const Partition& nu2 : interlacings_below(chi.second))
                add_term(nu1, nu2, chi.first.weight() - nu1.weight(),
                         chi.second.weight() - nu2.weight());
    } else {
        long budget = bound2 / 2;
        for (const Partition& mu1 : interlacings_above(chi.first, budget))
            for (const Partition& mu2 : interlacings_above(chi.second, budget))
                add_term(mu1, mu2, mu1.weight() - chi.first.weight(),
                         mu2.weight() - chi.second.weight());
    }
    return acc;
}

std::vector<SectorState> sector_states_up_to_energy2(long bound2) {
    std::vector<SectorState> out;
    for (long c = 0; c * c <= bound2; c = c > 0 ? -c : -c + 1) {
        long wmax = (bound2 - c * c) / 2;
        for (const Partition& lam : partitions_in_box(static_cast<int>(wmax), static_cast<int>(wmax)))
            if (lam.weight() <= wmax) out.push_back(SectorState{static_cast<int>(c), lam});
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<FockState> fock_states_up_to_energy2(long bound2) {
    std::vector<FockState> out;
    for (const SectorState& a : sector_states_up_to_energy2(bound2))
        for (const SectorState& b : sector_states_up_to_energy2(bound2 - sector_energy2(a)))
            out.push_back(FockState{a, b});
    std::sort(out.begin(), out.end());
    return out;
}

ConjugationReport conjugation_check(const std::string& kind, const VarTable* vt, VarId z, VarId v,
                                    int max_deg) {
    long bound2 = 2 * static_cast<long>(max_deg);
    bool is_phi = kind == "phi" || kind == "phi_star";
    bool is_star = kind == "psi_star" || kind == "phi_star";
    if (!is_phi && kind != "psi" && kind != "psi_star")
        throw std::invalid_argument("conjugation_check: unknown kind " + kind);
    VarId arg = is_phi ? v : z;
    MPoly zm = MPoly::variable(vt, z);
    MPoly vm = MPoly::variable(vt, v);
    ConjugationReport rep;
    for (const FockState& s : fock_states_up_to_energy2(std::min<long>(bound2, 4))) {
        for (int index2 = -5; index2 <= 5; index2 += 2) {
            ModeOp base = is_phi ? (is_star ? ModeOp::phi_star(index2) : ModeOp::phi(index2))
                                 : (is_star ? ModeOp::psi_star(index2) : ModeOp::psi(index2));
            FockVector in = FockVector::basis(s, bound2);
            FockVector lhs, rhs;
            if (!is_star) {
                // Gamma_+ psi_i Gamma_+^{-1} = sum_{n>=0} z^n psi_{i+n}
                lhs = apply_vertex(apply_mode(base, apply_vertex(in, false, zm, vm, -1)), false,
                                   zm, vm, 1);
                rhs = FockVector(bound2);
                for (long n = 0; 2 * n <= bound2; ++n) {
                    ModeOp shifted = base;
                    shifted.index2 = index2 + 2 * static_cast<int>(n);
                    FockVector t = apply_mode(shifted, in);
                    for (const auto& [st, c] : t.terms())
                        rhs.add(st, c * MPoly::var_pow2(vt, arg, 2 * n));
                }
            } else {
                // Gamma_- psi*_i Gamma_-^{-1} = psi*_i - z psi*_{i-1}
                lhs = apply_vertex(apply_mode(base, apply_vertex(in, true, zm, vm, -1)), true, zm,
                                   vm, 1);
                rhs = apply_mode(base, in);
                ModeOp lowered = base;
                lowered.index2 = index2 - 2;
                FockVector t = apply_mode(lowered, in);
                for (const auto& [st, c] : t.terms())
                    rhs.add(st, c * (-MPoly::variable(vt, arg)));
            }
            ++rep.cases;
            if (!(lhs == rhs)) rep.all_equal = false;
        }
    }
    return rep;
}

}  // namespace phasebox
