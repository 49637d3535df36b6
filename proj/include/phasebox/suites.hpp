#pragma once

#include <string>
#include <vector>

#include "phasebox/genfun.hpp"
#include "phasebox/phase_model.hpp"

namespace phasebox::suites {

// Each suite returns one report per aggregated check; `equal` is the verdict
// and the discrepancy slot carries a short description on failure.

// Boxed product formula vs enumeration, all boxes N,L,M <= 3 plus (4,4,4).
// corrupt injects a deliberate off-by-one into one closed form (negative-path
// hook for the CLI contract test).
std::vector<IdentityReport> macmahon(bool corrupt = false);
// Three-route scalar products, N1,N2 in {1,2}, M1,M2 in {1,2,3}.
std::vector<IdentityReport> routes();
// Bialternant = tableau sum = branching for mu inside a 3x4 box, n <= 3.
std::vector<IdentityReport> schur_consistency();
// Commuting creation family and its annihilation mirror.
std::vector<IdentityReport> bb_commute();
// Direct combinatorial action against the monodromy expansion.
std::vector<IdentityReport> lemma34();
// Fermion anticommutators, squares, cross-sector commutation, orthonormality.
std::vector<IdentityReport> fock_algebra();
// [H_m, H_n] = m delta_{m+n,0}, both sectors.
std::vector<IdentityReport> heisenberg();
// Interlacing closed forms against the exponential oracles.
std::vector<IdentityReport> gamma_interlacing_equiv(long max_weight, long max_deg);
// Vacuum expectation of Gamma_+ Gamma_- against the geometric product, plus
// the commutation relation checked against low-energy duals.
std::vector<IdentityReport> gamma_commutation(long max_deg);
// Lattice creation operators stabilize to the vertex-operator action.
std::vector<IdentityReport> stabilization(long max_deg);
std::vector<IdentityReport> box_columns(long max_deg);
std::vector<IdentityReport> uc_limit(long max_deg);
std::vector<IdentityReport> specialized_vertex(long max_deg);

// Residual diagnostic for the bilinear exchange relation; reported, never
// gated.
struct RttDiagnostic {
    bool completed = false;
    bool symbolic_zero = false;
    bool state_zero = false;
    std::size_t state_residual_entries = 0;
    std::string summary;  // human-readable residual listing
};
RttDiagnostic rtt_diagnostic();

}  // namespace phasebox::suites
