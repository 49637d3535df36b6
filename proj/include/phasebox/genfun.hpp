#pragma once

#include <optional>
#include <string>

#include "phasebox/mpoly.hpp"
#include "phasebox/partition.hpp"

namespace phasebox {

struct IdentityReport {
    struct Discrepancy {
        std::string monomial;
        Rat lhs, rhs;
    };

    std::string name;
    MPoly lhs, rhs;
    bool equal = false;
    std::optional<Discrepancy> discrepancy;  // first in term order, when unequal
};

IdentityReport compare_polys(std::string name, const MPoly& lhs, const MPoly& rhs);

// Product formula for the boxed generating function sum_{pi in B} q^{|pi|};
// the rational product simplifies to a polynomial and the division is exact.
MPoly macmahon_box(const VarTable* vt, VarId q, const Box& box);

// Product formula against brute-force enumeration, coefficient by
// coefficient. Sizes must stay brute-force feasible.
IdentityReport verify_macmahon(const VarTable* vt, VarId q, const Box& box);

// prod_n (1-p^n)^{-n} prod_m (1-q^m)^{-m} truncated to total degree max_deg.
Series uc_product_truncated(const VarTable* vt, VarId p, VarId q, long max_deg);

// Truncated product against the sum over pairs of plane partitions of
// bounded weight.
IdentityReport verify_uc_limit(const VarTable* vt, VarId p, VarId q, long max_deg);

// Weight counts of plane partitions up to max_n, from the enumeration oracle.
std::vector<long> plane_partition_counts(int max_n);

// Column-bounded identity: plane partitions with base inside N_j x N_j against
// prod_{i,l<=N_j} (1 - p^{l+i-1})^{-1} (and the q mirror), to degree max_deg.
IdentityReport verify_box_columns(const VarTable* vt, VarId p, VarId q, int n1, int n2,
                                  long max_deg);

// Vacuum expectation of the specialized vertex-operator product
// Gamma_+(p^{N-1/2},q^{N-1/2})...Gamma_+(p^{1/2},q^{1/2})
// Gamma_-(p^{1/2},q^{1/2})...Gamma_-(p^{N-1/2},q^{N-1/2})
// against prod_{i,l<=N} (1-p^{l+i-1})^{-1} (and the q mirror), to degree
// max_deg. Half-integer powers ride on the doubled exponents; the final
// comparison re-checks integrality.
IdentityReport verify_specialized_vertex(const VarTable* vt, VarId p, VarId q, int n,
                                         long max_deg);

}  // namespace phasebox
