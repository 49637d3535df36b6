#pragma once

#include <vector>

#include "phasebox/mpoly.hpp"
#include "phasebox/partition.hpp"

namespace phasebox {

// Ordered list of distinct variables {x_1, ..., x_n}.
using VarSet = std::vector<VarId>;

// Single-variable skew Schur function: x^{|mu|-|nu|} when nu interlaces mu,
// zero otherwise.
MPoly skew_schur_single(const VarTable* vt, const Partition& mu, const Partition& nu, VarId x);

// det(x_i^{mu_j - j + n}) / prod_{i<j}(x_i - x_j), by exact polynomial
// division. Returns 0 when l(mu) > n (the tableau definition forces this
// convention, and it makes the branching sum finite).
MPoly schur_bialternant(const VarTable* vt, const Partition& mu, const VarSet& vars);

// Independent oracle: sum over semistandard tableaux of shape mu with entries
// in 1..n of the content monomial.
MPoly schur_tableaux(const VarTable* vt, const Partition& mu, const VarSet& vars);

// Branching rule: sum_nu s_{mu/nu}(x_n) * s_nu(x_1..x_{n-1}), evaluated
// recursively; a third independent route to the same polynomial.
MPoly schur_branch(const VarTable* vt, const Partition& mu, const VarSet& vars);

// Multivariate skew Schur via iterated branching (used by the CLI).
MPoly skew_schur(const VarTable* vt, const Partition& mu, const Partition& nu, const VarSet& vars);

// All partitions interlaced below mu (mu ≻ nu).
std::vector<Partition> interlacings_below(const Partition& mu);
// All partitions mu interlaced above nu (mu ≻ nu) with |mu| - |nu| <= budget.
std::vector<Partition> interlacings_above(const Partition& nu, long budget);

}  // namespace phasebox
