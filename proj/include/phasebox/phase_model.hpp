#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "phasebox/mpoly.hpp"
#include "phasebox/partition.hpp"
#include "phasebox/schur.hpp"

namespace phasebox {

// Occupation numbers n_0..n_M of one sector of the two-site model.
struct OccupationVector {
    std::vector<int> n;

    int sites() const { return static_cast<int>(n.size()) - 1; }  // M
    long particles() const;
    // sum_{k >= i} n_k
    long suffix_sum(int i) const;

    friend bool operator==(const OccupationVector&, const OccupationVector&) = default;
    friend auto operator<=>(const OccupationVector&, const OccupationVector&) = default;
};

OccupationVector zero_occupation(int sites);

// Formal linear combination of basis vectors of one sector, with exact
// polynomial coefficients. Bras and kets share this representation; which one
// is meant is determined by the operation applied.
class PhaseVector {
public:
    using Terms = std::map<OccupationVector, MPoly>;

    PhaseVector() = default;
    static PhaseVector basis(OccupationVector occ);
    static PhaseVector basis(OccupationVector occ, MPoly coeff);

    void add(const OccupationVector& occ, MPoly c);
    void add_all(const PhaseVector& o);
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool operator==(const PhaseVector& o) const { return terms_ == o.terms_; }

private:
    Terms terms_;
};

// Site-local operator symbols of the phase algebra.
struct LocalOp {
    enum Kind { Scalar, Lower, Raise, Proj } kind = Scalar;
    MPoly scalar;  // for Kind::Scalar, a monomial

    static LocalOp lower() { return {Lower, {}}; }
    static LocalOp raise() { return {Raise, {}}; }
    static LocalOp proj() { return {Proj, {}}; }
    static LocalOp times(MPoly m) { return {Scalar, std::move(m)}; }
};

// Action on a single occupation number: list of (coefficient, new n_i).
std::vector<std::pair<MPoly, int>> apply_local(const LocalOp& op, int n_i);

// nu = (1^{n_1} ... M^{n_M}); site-0 particles are dropped.
Partition occupation_to_partition(const OccupationVector& occ);
// Inverse once the particle count N fixes n_0. l(nu) <= N and nu_1 <= M
// required.
OccupationVector occupation_from_partition(const Partition& nu, long particles, int sites);

// Partial-sum admissibility (the relation a creation operator connects).
bool admissible(const OccupationVector& m, const OccupationVector& n);

// Normalized creation operator acting on kets, by direct enumeration of
// admissible successors with weight prod_i x^{i(m_i - n_i)}.
PhaseVector apply_B_direct(const VarTable* vt, const PhaseVector& state, VarId x);
// Same operator through the site-by-site monodromy expansion (auxiliary-space
// dynamic programming, normalization x^{M/2} folded in); equals
// apply_B_direct exactly.
PhaseVector apply_B_transfer(const VarTable* vt, const PhaseVector& state, VarId x);
// Normalized annihilation operator, acting on bras: the combinatorial mirror
// of apply_B_direct (it raises dual occupation numbers).
PhaseVector apply_C_dual(const VarTable* vt, const PhaseVector& state, VarId x);
// Cross-check route for C: runs the monodromy expansion with inverted
// argument and multiplies by x^{M/2}.
PhaseVector apply_C_transfer(const VarTable* vt, const PhaseVector& state, VarId x);

// Delta pairing of a bra and a ket expansion.
MPoly inner(const PhaseVector& dual, const PhaseVector& ket);

// <0| prod C2(y) prod C1(x) prod B1(z) prod B2(v) |0> by operator
// composition; the two sectors factor.
MPoly scalar_product_op(const VarTable* vt, int m1_sites, int m2_sites, const VarSet& xs,
                        const VarSet& ys, const VarSet& zs, const VarSet& vs);
// Same polynomial as a sum over pairs of boxed plane partitions with
// telescoping slice weights: pi^j runs over B(N_j, N_j, M_j) and contributes
// prod_i x_i^{|pi_{-i+1}| - |pi_{-i}|} z_i^{|pi_{i-1}| - |pi_i|} (and the
// y/v mirror for the second sector).
MPoly scalar_product_pp(const VarTable* vt, int m1_sites, int m2_sites, const VarSet& xs,
                        const VarSet& ys, const VarSet& zs, const VarSet& vs);
// Same polynomial as sums of products of Schur functions over boxed shapes.
MPoly scalar_product_schur(const VarTable* vt, int m1_sites, int m2_sites, const VarSet& xs,
                           const VarSet& ys, const VarSet& zs, const VarSet& vs);

// ---- RTT diagnostic -------------------------------------------------------

// Words over the site-local generators; leftmost factor applied last.
enum class SiteOp { Lower, Raise, Proj };
using OpWord = std::vector<SiteOp>;
using OpSum = std::map<OpWord, MPoly>;  // formal operator-valued polynomial

struct RttStateResidual {
    int row = 0, col = 0;  // 4x4 entry
    int n_in = 0;          // occupation the entry difference was applied to
    std::map<int, MPoly> out;  // nonzero image
};

struct RttReport {
    bool completed = false;
    // R(x,y)(L(x) ⊗ L(y)) - (L(y) ⊗ L(x))R(x,y), entrywise after reduction
    // against the algebra relations; empty maps mean the identity holds.
    std::array<std::array<OpSum, 4>, 4> symbolic_residual{};
    std::vector<RttStateResidual> state_residuals;
    bool symbolic_zero = false;
    bool state_zero = false;
};

using RMatrix = std::array<std::array<MPoly, 4>, 4>;

// The R-matrix in the form used throughout, with x^{1/2}y^{1/2} entries.
RMatrix standard_r_matrix(const VarTable* vt, VarId x, VarId y);
RMatrix identity_r_matrix();

// Diagnostic only: computes the residual of the bilinear exchange relation on
// one site, both symbolically and on occupation states n <= max_n.
RttReport verify_rtt(const VarTable* vt, const RMatrix& r, VarId x, VarId y, int max_n = 3);
// Variant with the raise/lower entries of L zeroed out; the residual is then
// a plain polynomial identity check.
RttReport verify_rtt_scalar_l(const VarTable* vt, const RMatrix& r, VarId x, VarId y);

std::string opword_str(const OpWord& w);

}  // namespace phasebox
