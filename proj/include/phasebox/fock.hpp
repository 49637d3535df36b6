#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "phasebox/mpoly.hpp"
#include "phasebox/partition.hpp"

namespace phasebox {

// One charged fermion sector in canonical (charge, partition) form. The Maya
// picture underneath: half-integer slots (stored doubled, so odd integers),
// the charge-c vacuum occupies every slot above c, and the partition encodes
// the finite deviation. Signs never live here; canonical states fold them
// into coefficients.
struct SectorState {
    int charge = 0;
    Partition lambda;

    friend bool operator==(const SectorState&, const SectorState&) = default;
    friend auto operator<=>(const SectorState&, const SectorState&) = default;
};

// Doubled energy: 2|lambda| + charge^2 (the charge-c vacuum sits at c^2/2).
long sector_energy2(const SectorState& s);

struct FockState {
    SectorState psi, phi;

    friend bool operator==(const FockState&, const FockState&) = default;
    friend auto operator<=>(const FockState&, const FockState&) = default;
};

long energy2(const FockState& s);
FockState fock_vacuum();

// Explicit slot sets of one sector: occupied negative slots and empty
// positive slots, both doubled odd integers.
struct MayaSector {
    std::set<int> occ_neg;
    std::set<int> emp_pos;
};

MayaSector to_maya(const SectorState& s);
SectorState from_maya(const MayaSector& m);

// A single fermion mode; index is the doubled half-integer subscript.
struct ModeOp {
    bool phi_sector = false;
    bool starred = false;
    int index2 = 0;  // odd

    static ModeOp psi(int index2) { return {false, false, index2}; }
    static ModeOp psi_star(int index2) { return {false, true, index2}; }
    static ModeOp phi(int index2) { return {true, false, index2}; }
    static ModeOp phi_star(int index2) { return {true, true, index2}; }
};

// Maya insertion/deletion with the crossing-parity sign; nullopt when the
// target slot is already occupied/empty. Cross-sector application carries no
// sign.
std::optional<std::pair<int, FockState>> apply_mode(const ModeOp& op, const FockState& state);

class FockVector {
public:
    FockVector() = default;
    explicit FockVector(long bound2) : bound2_(bound2) {}
    static FockVector basis(const FockState& s, long bound2);

    long bound2() const { return bound2_; }
    const std::map<FockState, MPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(const FockState& s, MPoly c);  // truncates to bound2, drops zeros
    void add_all(const FockVector& o);
    void sub_all(const FockVector& o);
    MPoly coeff(const FockState& s) const;

    bool operator==(const FockVector& o) const { return terms_ == o.terms_; }

private:
    std::map<FockState, MPoly> terms_;
    long bound2_ = 0;
};

FockVector apply_mode(const ModeOp& op, const FockVector& v);

// H_n (tilde = false) or its phi-sector twin, n != 0: moves one particle by
// n slots; only finitely many bilinear terms act on a Maya state.
FockVector apply_H(int n, bool tilde, const FockVector& v);

// Right state for a 2-partition (charge (0,0)): the mode product applied to
// |l1,l2>; requires -l_j >= l(mu^j). The result is a single canonical state
// with sign folded into the coefficient, independent of the l_j choice.
FockVector state_from_2partition(const Partition& mu1, const Partition& mu2, int l1, int l2,
                                 long bound2);
// Operator string S with <chi| = <vac| S, per the dual construction.
std::vector<ModeOp> dual_ops_for_2partition(const Partition& mu1, const Partition& mu2, int l1,
                                            int l2);

// <vac| (product of ops) |ket>: apply the ops right-to-left to the ket and
// read off the vacuum coefficient.
Series pairing(const std::vector<ModeOp>& dual_ops, const FockVector& ket);

// exp(sum_n (z^n/n) H_{±n} + (v^n/n) H~_{±n}) with arbitrary monomial
// arguments (half-integer powers welcome). minus=false applies the lowering
// family (terminates exactly); minus=true raises and is truncated by the
// vector's coefficient bound. coeff_sign = -1 gives the inverse operator.
FockVector apply_vertex(const FockVector& in, bool minus, const MPoly& z_mono, const MPoly& v_mono,
                        int coeff_sign = 1);

FockVector gamma_plus_oracle(const VarTable* vt, VarId z, VarId v, const FockVector& state);
FockVector gamma_minus_oracle(const VarTable* vt, VarId z, VarId v, const FockVector& state);

// Closed-form interlacing sums; must equal the exponential oracles.
// plus: sum over nu ≺ mu componentwise of z^{|mu1|-|nu1|} v^{|mu2|-|nu2|} |nu>.
// minus: ascending sum truncated by the coefficient bound.
FockVector gamma_interlacing(const VarTable* vt, VarId z, VarId v, const TwoPartition& chi,
                             bool minus, long bound2);

// Mode-by-mode conjugation identities of the vertex operators, verified on a
// basis of low-energy states.
struct ConjugationReport {
    int cases = 0;
    bool all_equal = true;
};
ConjugationReport conjugation_check(const std::string& kind, const VarTable* vt, VarId z, VarId v,
                                    int max_deg);

// All sector states with doubled energy <= bound2 (charges bounded by the
// energy offset).
std::vector<SectorState> sector_states_up_to_energy2(long bound2);
std::vector<FockState> fock_states_up_to_energy2(long bound2);

}  // namespace phasebox
