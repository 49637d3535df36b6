#include "phasebox/suites.hpp"

#include <functional>
#include <sstream>

#include "phasebox/fock.hpp"
#include "phasebox/schur.hpp"

namespace phasebox::suites {

namespace {

// Reports built over suite-local variable tables must not leak live
// polynomials; the verdict and discrepancy strings carry everything needed.
IdentityReport strip(IdentityReport rep) {
    rep.lhs = MPoly{};
    rep.rhs = MPoly{};
    return rep;
}

IdentityReport check(std::string name, bool ok, std::string detail = "") {
    IdentityReport rep;
    rep.name = std::move(name);
    rep.equal = ok;
    if (!ok) {
        IdentityReport::Discrepancy d;
        d.monomial = detail.empty() ? "mismatch" : std::move(detail);
        rep.discrepancy = std::move(d);
    }
    return rep;
}

std::vector<OccupationVector> occupations_up_to(int sites, int max_particles) {
    std::vector<OccupationVector> out;
    OccupationVector cur = zero_occupation(sites);
    std::function<void(int, int)> rec = [&](int site, int left) {
        if (site > sites) {
            out.push_back(cur);
            return;
        }
        for (int k = 0; k <= left; ++k) {
            cur.n[static_cast<std::size_t>(site)] = k;
            rec(site + 1, left - k);
        }
        cur.n[static_cast<std::size_t>(site)] = 0;
    };
    rec(0, max_particles);
    return out;
}

std::vector<TwoPartition> two_partitions_up_to(long max_weight) {
    std::vector<TwoPartition> out;
    int w = static_cast<int>(max_weight);
    for (const Partition& a : partitions_in_box(w, w)) {
        if (a.weight() > max_weight) continue;
        for (const Partition& b : partitions_in_box(w, w)) {
            if (a.weight() + b.weight() > max_weight) continue;
            out.push_back(TwoPartition{a, b});
        }
    }
    return out;
}

}  // namespace

std::vector<IdentityReport> macmahon(bool corrupt) {
    std::vector<IdentityReport> out;
    std::vector<Box> boxes;
    for (int n = 0; n <= 3; ++n)
        for (int l = 0; l <= 3; ++l)
            for (int m = 0; m <= 3; ++m) boxes.push_back(Box{n, l, m});
    boxes.push_back(Box{4, 4, 4});
    for (const Box& b : boxes) {
        VarTable vt;
        VarId q = vt.intern("q");
        IdentityReport rep = verify_macmahon(&vt, q, b);
        std::ostringstream name;
        name << "macmahon_" << b.n_rows << "x" << b.n_cols << "x" << b.max_entry;
        rep.name = name.str();
        if (corrupt && b.n_rows == 1 && b.n_cols == 1 && b.max_entry == 1) {
            rep = compare_polys(rep.name + "_corrupted",
                                macmahon_box(&vt, q, b) + MPoly::variable(&vt, q), rep.rhs);
        }
        out.push_back(strip(std::move(rep)));
    }
    return out;
}

std::vector<IdentityReport> routes() {
    std::vector<IdentityReport> out;
    for (int n1 = 1; n1 <= 2; ++n1)
        for (int n2 = 1; n2 <= 2; ++n2)
            for (int m1 = 1; m1 <= 3; ++m1)
                for (int m2 = 1; m2 <= 3; ++m2) {
                    VarTable vt;
                    VarSet xs, ys, zs, vs;
                    for (int i = 1; i <= n1; ++i) xs.push_back(vt.intern("x" + std::to_string(i)));
                    for (int i = 1; i <= n2; ++i) ys.push_back(vt.intern("y" + std::to_string(i)));
                    for (int i = 1; i <= n1; ++i) zs.push_back(vt.intern("z" + std::to_string(i)));
                    for (int i = 1; i <= n2; ++i) vs.push_back(vt.intern("v" + std::to_string(i)));
                    MPoly op = scalar_product_op(&vt, m1, m2, xs, ys, zs, vs);
                    MPoly pp = scalar_product_pp(&vt, m1, m2, xs, ys, zs, vs);
                    MPoly sc = scalar_product_schur(&vt, m1, m2, xs, ys, zs, vs);
                    std::ostringstream name;
                    name << "routes_n1=" << n1 << "_n2=" << n2 << "_m1=" << m1 << "_m2=" << m2;
                    out.push_back(check(name.str(), op == pp && op == sc,
                                        op == pp ? "op vs schur" : "op vs pp"));
                }
    return out;
}

std::vector<IdentityReport> schur_consistency() {
    std::vector<IdentityReport> out;
    for (int n = 1; n <= 3; ++n) {
        VarTable vt;
        VarSet vars;
        for (int i = 1; i <= n; ++i) vars.push_back(vt.intern("x" + std::to_string(i)));
        bool ok = true;
        std::string bad;
        for (const Partition& mu : partitions_in_box(3, 4)) {
            MPoly b = schur_bialternant(&vt, mu, vars);
            MPoly t = schur_tableaux(&vt, mu, vars);
            MPoly r = schur_branch(&vt, mu, vars);
            if (!(b == t && b == r)) {
                ok = false;
                std::ostringstream os;
                os << "mu=(";
                for (std::size_t i = 0; i < mu.parts().size(); ++i)
                    os << (i ? "," : "") << mu.parts()[i];
                os << ")";
                bad = os.str();
                break;
            }
        }
        out.push_back(check("schur_consistency_n=" + std::to_string(n), ok, bad));
    }
    return out;
}

std::vector<IdentityReport> bb_commute() {
    std::vector<IdentityReport> out;
    for (int m_sites = 0; m_sites <= 3; ++m_sites) {
        VarTable vt;
        VarId x = vt.intern("x"), y = vt.intern("y");
        bool ok_b = true, ok_c = true;
        for (const OccupationVector& occ : occupations_up_to(m_sites, 2)) {
            PhaseVector s = PhaseVector::basis(occ);
            if (!(apply_B_direct(&vt, apply_B_direct(&vt, s, x), y) ==
                  apply_B_direct(&vt, apply_B_direct(&vt, s, y), x)))
                ok_b = false;
            if (!(apply_C_dual(&vt, apply_C_dual(&vt, s, x), y) ==
                  apply_C_dual(&vt, apply_C_dual(&vt, s, y), x)))
                ok_c = false;
        }
        out.push_back(check("bb_commute_M=" + std::to_string(m_sites), ok_b));
        out.push_back(check("cc_commute_M=" + std::to_string(m_sites), ok_c));
    }
    return out;
}

std::vector<IdentityReport> lemma34() {
    std::vector<IdentityReport> out;
    for (int m_sites = 0; m_sites <= 3; ++m_sites) {
        VarTable vt;
        VarId x = vt.intern("x");
        bool ok_b = true, ok_c = true;
        for (const OccupationVector& occ : occupations_up_to(m_sites, 3)) {
            PhaseVector s = PhaseVector::basis(occ);
            if (!(apply_B_direct(&vt, s, x) == apply_B_transfer(&vt, s, x))) ok_b = false;
            if (!(apply_C_dual(&vt, s, x) == apply_C_transfer(&vt, s, x))) ok_c = false;
        }
        out.push_back(check("b_direct_vs_transfer_M=" + std::to_string(m_sites), ok_b));
        out.push_back(check("c_dual_vs_transfer_M=" + std::to_string(m_sites), ok_c));
    }
    return out;
}

std::vector<IdentityReport> fock_algebra() {
    std::vector<IdentityReport> out;
    std::vector<FockState> states = fock_states_up_to_energy2(8);
    auto mode_vec = [&](const ModeOp& op, const FockVector& v) { return apply_mode(op, v); };

    bool anti_ok = true;
    bool cross_ok = true;
    for (int m2 = -7; m2 <= 7; m2 += 2)
        for (int n2 = -7; n2 <= 7; n2 += 2) {
            for (const FockState& s : states) {
                FockVector v = FockVector::basis(s, 0);
                auto anti = [&](const ModeOp& a, const ModeOp& b) {
                    FockVector r = mode_vec(a, mode_vec(b, v));
                    r.add_all(mode_vec(b, mode_vec(a, v)));
                    return r;
                };
                // {psi_m, psi_n} = 0, {psi*_m, psi*_n} = 0 (squares included),
                // {psi_m, psi*_n} = delta_{m+n,0}
                if (!anti(ModeOp::psi(m2), ModeOp::psi(n2)).is_zero()) anti_ok = false;
                if (!anti(ModeOp::psi_star(m2), ModeOp::psi_star(n2)).is_zero()) anti_ok = false;
                FockVector mixed = anti(ModeOp::psi(m2), ModeOp::psi_star(n2));
                FockVector expect(0);
                if (m2 + n2 == 0) expect.add(s, MPoly::constant(1));
                if (!(mixed == expect)) anti_ok = false;
                // cross-sector commutators vanish
                auto comm = [&](const ModeOp& a, const ModeOp& b) {
                    FockVector r = mode_vec(a, mode_vec(b, v));
                    r.sub_all(mode_vec(b, mode_vec(a, v)));
                    return r;
                };
                if (!comm(ModeOp::psi(m2), ModeOp::phi(n2)).is_zero()) cross_ok = false;
                if (!comm(ModeOp::psi(m2), ModeOp::phi_star(n2)).is_zero()) cross_ok = false;
                if (!comm(ModeOp::psi_star(m2), ModeOp::phi(n2)).is_zero()) cross_ok = false;
                if (!comm(ModeOp::psi_star(m2), ModeOp::phi_star(n2)).is_zero()) cross_ok = false;
            }
        }
    out.push_back(check("fermion_anticommutators", anti_ok));
    out.push_back(check("cross_sector_commutation", cross_ok));

    bool ortho_ok = true;
    std::vector<TwoPartition> chis = two_partitions_up_to(3);
    for (const TwoPartition& a : chis)
        for (const TwoPartition& b : chis) {
            int l1 = -static_cast<int>(std::max(a.first.length(), b.first.length())) - 1;
            int l2 = -static_cast<int>(std::max(a.second.length(), b.second.length())) - 1;
            FockVector ket = state_from_2partition(b.first, b.second, l1, l2, 0);
            Series p = pairing(dual_ops_for_2partition(a.first, a.second, l1, l2), ket);
            Rat expect = (a == b) ? Rat(1) : Rat(0);
            if (!(p.poly() == MPoly::constant(expect))) ortho_ok = false;
        }
    out.push_back(check("two_partition_orthonormality", ortho_ok));
    return out;
}

std::vector<IdentityReport> heisenberg() {
    std::vector<IdentityReport> out;
    for (bool tilde : {false, true}) {
        bool ok = true;
        for (const FockState& s : fock_states_up_to_energy2(8)) {
            FockVector v = FockVector::basis(s, 0);
            for (int m = -3; m <= 3; ++m)
                for (int n = -3; n <= 3; ++n) {
                    if (m == 0 || n == 0) continue;
                    FockVector lhs = apply_H(m, tilde, apply_H(n, tilde, v));
                    lhs.sub_all(apply_H(n, tilde, apply_H(m, tilde, v)));
                    FockVector expect(0);
                    if (m + n == 0) expect.add(s, MPoly::constant(Rat(m)));
                    if (!(lhs == expect)) ok = false;
                }
        }
        out.push_back(check(std::string("heisenberg_") + (tilde ? "phi" : "psi"), ok));
    }
    return out;
}

std::vector<IdentityReport> gamma_interlacing_equiv(long max_weight, long max_deg) {
    std::vector<IdentityReport> out;
    VarTable vt;
    VarId z = vt.intern("z"), v = vt.intern("v");
    long bound2 = 2 * max_deg;
    bool plus_ok = true, minus_ok = true;
    for (const TwoPartition& chi : two_partitions_up_to(max_weight)) {
        int l1 = -static_cast<int>(chi.first.length()) - 1;
        int l2 = -static_cast<int>(chi.second.length()) - 1;
        FockVector base = state_from_2partition(chi.first, chi.second, l1, l2, bound2);
        if (!(gamma_plus_oracle(&vt, z, v, base) ==
              gamma_interlacing(&vt, z, v, chi, false, bound2)))
            plus_ok = false;
        if (!(gamma_minus_oracle(&vt, z, v, base) ==
              gamma_interlacing(&vt, z, v, chi, true, bound2)))
            minus_ok = false;
    }
    out.push_back(check("gamma_plus_closed_form", plus_ok));
    out.push_back(check("gamma_minus_closed_form", minus_ok));
    return out;
}

std::vector<IdentityReport> gamma_commutation(long max_deg) {
    std::vector<IdentityReport> out;
    VarTable vt;
    VarId z = vt.intern("z"), v = vt.intern("v"), x = vt.intern("x"), y = vt.intern("y");
    long bound2 = 2 * max_deg;
    FockVector vac = FockVector::basis(fock_vacuum(), bound2);
    FockVector pm = gamma_plus_oracle(&vt, z, v, gamma_minus_oracle(&vt, x, y, vac));
    Series prod = geometric_series(MPoly::variable(&vt, z) * MPoly::variable(&vt, x), max_deg) *
                  geometric_series(MPoly::variable(&vt, v) * MPoly::variable(&vt, y), max_deg);
    out.push_back(strip(compare_polys("gamma_vacuum_product", pm.coeff(fock_vacuum()), prod.poly())));

    // (Gamma_+ Gamma_- - prod * Gamma_- Gamma_+) |vac> against low-energy duals
    FockVector mp = gamma_minus_oracle(&vt, x, y, gamma_plus_oracle(&vt, z, v, vac));
    bool comm_ok = true;
    for (const TwoPartition& chi : two_partitions_up_to(3)) {
        int l1 = -static_cast<int>(chi.first.length()) - 1;
        int l2 = -static_cast<int>(chi.second.length()) - 1;
        auto dual = dual_ops_for_2partition(chi.first, chi.second, l1, l2);
        Series a = pairing(dual, pm);
        Series predicted = prod * pairing(dual, mp);
        if (!(Series::with_bound2(predicted.poly(), bound2) ==
              Series::with_bound2(a.poly(), bound2)))
            comm_ok = false;
    }
    out.push_back(check("gamma_commutation_duals", comm_ok));
    return out;
}

std::vector<IdentityReport> stabilization(long max_deg) {
    std::vector<IdentityReport> out;
    VarTable vt;
    VarId z = vt.intern("z"), v = vt.intern("v");
    long bound2 = 2 * max_deg;
    bool ok = true;
    for (const Partition& nu : partitions_in_box(3, 3)) {
        if (nu.weight() > 3) continue;
        for (int m_sites : {static_cast<int>(max_deg), static_cast<int>(max_deg) + 2}) {
            OccupationVector occ =
                occupation_from_partition(nu, static_cast<long>(nu.length()), m_sites);
            PhaseVector bout = apply_B_direct(&vt, PhaseVector::basis(occ), z);
            std::map<Partition, MPoly> phase_side;
            for (const auto& [m_occ, c] : bout.terms())
                phase_side[occupation_to_partition(m_occ)] = c;
            FockVector gout =
                gamma_interlacing(&vt, z, v, TwoPartition{nu, Partition{}}, true, bound2);
            for (const Partition& mu : interlacings_above(nu, max_deg)) {
                if (mu.weight() > max_deg) continue;
                int l1 = -static_cast<int>(mu.length()) - 1;
                Series fock_coeff = pairing(dual_ops_for_2partition(mu, Partition{}, l1, -1), gout);
                auto it = phase_side.find(mu);
                MPoly phase_coeff = it == phase_side.end() ? MPoly{} : it->second;
                if (!(phase_coeff == fock_coeff.poly())) ok = false;
            }
        }
    }
    out.push_back(check("stabilization_b_vs_gamma_minus", ok));
    return out;
}

std::vector<IdentityReport> box_columns(long max_deg) {
    std::vector<IdentityReport> out;
    for (int n1 = 1; n1 <= 2; ++n1)
        for (int n2 = 1; n2 <= 2; ++n2) {
            VarTable vt;
            VarId p = vt.intern("p"), q = vt.intern("q");
            IdentityReport rep = verify_box_columns(&vt, p, q, n1, n2, max_deg);
            rep.name = "box_columns_n1=" + std::to_string(n1) + "_n2=" + std::to_string(n2);
            out.push_back(strip(std::move(rep)));
        }
    return out;
}

std::vector<IdentityReport> uc_limit(long max_deg) {
    std::vector<IdentityReport> out;
    VarTable vt;
    VarId p = vt.intern("p"), q = vt.intern("q");
    out.push_back(strip(verify_uc_limit(&vt, p, q, max_deg)));

    // single-factor coefficients against enumerated plane-partition counts
    Series single(MPoly::constant(1), max_deg);
    for (long n = 1; n <= max_deg; ++n)
        single *= geometric_series(MPoly::var_pow2(&vt, p, 2 * n), max_deg)
                      .pow(static_cast<unsigned long>(n));
    std::vector<long> counts = plane_partition_counts(static_cast<int>(max_deg));
    MPoly expected = MPoly::zero_over(&vt);
    for (long n = 0; n <= max_deg; ++n)
        expected += MPoly::var_pow2(&vt, p, 2 * n) *
                    MPoly::constant(Rat(counts[static_cast<std::size_t>(n)]));
    out.push_back(strip(compare_polys("uc_single_factor_counts", single.poly(), expected)));
    return out;
}

std::vector<IdentityReport> specialized_vertex(long max_deg) {
    std::vector<IdentityReport> out;
    for (int n = 1; n <= 2; ++n) {
        VarTable vt;
        VarId p = vt.intern("p"), q = vt.intern("q");
        IdentityReport rep = verify_specialized_vertex(&vt, p, q, n, max_deg);
        rep.name = "specialized_vertex_n=" + std::to_string(n);
        out.push_back(strip(std::move(rep)));
    }
    return out;
}

RttDiagnostic rtt_diagnostic() {
    VarTable vt;
    VarId x = vt.intern("x"), y = vt.intern("y");
    RttReport rep = verify_rtt(&vt, standard_r_matrix(&vt, x, y), x, y, 3);
    RttDiagnostic out;
    out.completed = rep.completed;
    out.symbolic_zero = rep.symbolic_zero;
    out.state_zero = rep.state_zero;
    out.state_residual_entries = rep.state_residuals.size();
    std::ostringstream os;
    os << "rtt diagnostic: completed=" << (rep.completed ? "yes" : "no")
       << " symbolic_zero=" << (rep.symbolic_zero ? "yes" : "no")
       << " state_zero=" << (rep.state_zero ? "yes" : "no") << "\n";
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const OpSum& sum =
                rep.symbolic_residual[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (sum.empty()) continue;
            os << "  entry (" << i + 1 << "," << j + 1 << "):";
            for (const auto& [w, c] : sum) os << "  [" << to_string(c) << "] * " << opword_str(w);
            os << "\n";
        }
    os << "  state-level nonzero entries: " << rep.state_residuals.size() << "\n";
    out.summary = os.str();
    return out;
}

}  // namespace phasebox::suites
