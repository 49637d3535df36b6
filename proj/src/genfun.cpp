#include "phasebox/genfun.hpp"

#include <stdexcept>

#include "phasebox/fock.hpp"

namespace phasebox {

IdentityReport compare_polys(std::string name, const MPoly& lhs, const MPoly& rhs) {
    IdentityReport rep;
    rep.name = std::move(name);
    rep.lhs = lhs;
    rep.rhs = rhs;
    MPoly diff = lhs - rhs;
    rep.equal = diff.is_zero();
    if (!rep.equal) {
        const auto& [mono, c] = *diff.terms().begin();
        IdentityReport::Discrepancy d;
        d.monomial = mono_str(lhs.vars() ? lhs.vars() : rhs.vars(), mono);
        auto coeff_of = [&](const MPoly& p) {
            auto it = p.terms().find(mono);
            return it == p.terms().end() ? Rat(0) : it->second;
        };
        d.lhs = coeff_of(lhs);
        d.rhs = coeff_of(rhs);
        rep.discrepancy = d;
    }
    return rep;
}

MPoly macmahon_box(const VarTable* vt, VarId q, const Box& box) {
    if (box.n_rows < 0 || box.n_cols < 0 || box.max_entry < 0)
        throw std::invalid_argument("macmahon_box: negative box");
    MPoly num = MPoly::constant(1);
    MPoly den = MPoly::constant(1);
    for (int i = 1; i <= box.n_rows; ++i)
        for (int j = 1; j <= box.n_cols; ++j) {
            num *= MPoly::constant(1) - MPoly::var_pow2(vt, q, 2 * (i + j + box.max_entry - 1));
            den *= MPoly::constant(1) - MPoly::var_pow2(vt, q, 2 * (i + j - 1));
        }
    return divide_exact(num, den, q);
}

IdentityReport verify_macmahon(const VarTable* vt, VarId q, const Box& box) {
    long cells = static_cast<long>(box.n_rows) * box.n_cols * box.max_entry;
    if (cells > 64) throw std::invalid_argument("verify_macmahon: box too large for brute force");
    MPoly sum = MPoly::zero_over(vt);
    for_each_boxed_plane_partition(box, [&](const PlanePartition& pp) {
        sum += MPoly::var_pow2(vt, q, 2 * pp.weight());
    });
    return compare_polys("macmahon_box", macmahon_box(vt, q, box), sum);
}

Series uc_product_truncated(const VarTable* vt, VarId p, VarId q, long max_deg) {
    if (max_deg < 0) throw std::invalid_argument("uc_product_truncated: negative degree");
    Series acc(MPoly::constant(1), max_deg);
    for (long n = 1; n <= max_deg; ++n) {
        Series geo_p = geometric_series(MPoly::var_pow2(vt, p, 2 * n), max_deg);
        Series geo_q = geometric_series(MPoly::var_pow2(vt, q, 2 * n), max_deg);
        acc *= geo_p.pow(static_cast<unsigned long>(n));
        acc *= geo_q.pow(static_cast<unsigned long>(n));
    }
    return acc;
}

IdentityReport verify_uc_limit(const VarTable* vt, VarId p, VarId q, long max_deg) {
    std::vector<PlanePartition> pps = plane_partitions_of_weight_at_most(static_cast<int>(max_deg));
    MPoly sum = MPoly::zero_over(vt);
    for (const PlanePartition& a : pps)
        for (const PlanePartition& b : pps) {
            if (a.weight() + b.weight() > max_deg) continue;
            sum += MPoly::var_pow2(vt, p, 2 * a.weight()) * MPoly::var_pow2(vt, q, 2 * b.weight());
        }
    return compare_polys("uc_limit", uc_product_truncated(vt, p, q, max_deg).poly(), sum);
}

std::vector<long> plane_partition_counts(int max_n) {
    std::vector<long> counts(static_cast<std::size_t>(max_n) + 1, 0);
    for (const PlanePartition& pp : plane_partitions_of_weight_at_most(max_n))
        ++counts[static_cast<std::size_t>(pp.weight())];
    return counts;
}

namespace {

Series column_product(const VarTable* vt, VarId p, int n, long max_deg) {
    Series acc(MPoly::constant(1), max_deg);
    for (int i = 1; i <= n; ++i)
        for (int l = 1; l <= n; ++l)
            acc *= geometric_series(MPoly::var_pow2(vt, p, 2 * (l + i - 1)), max_deg);
    return acc;
}

MPoly column_sum(const VarTable* vt, VarId p, int n, long max_deg) {
    MPoly sum = MPoly::zero_over(vt);
    Box base{n, n, static_cast<int>(max_deg)};
    for_each_boxed_plane_partition(base, [&](const PlanePartition& pp) {
        if (pp.weight() <= max_deg) sum += MPoly::var_pow2(vt, p, 2 * pp.weight());
    });
    return sum;
}

}  // namespace

IdentityReport verify_box_columns(const VarTable* vt, VarId p, VarId q, int n1, int n2,
                                  long max_deg) {
    Series lhs = Series(column_sum(vt, p, n1, max_deg), max_deg) *
                 Series(column_sum(vt, q, n2, max_deg), max_deg);
    Series rhs = column_product(vt, p, n1, max_deg) * column_product(vt, q, n2, max_deg);
    return compare_polys("box_columns", lhs.poly(), rhs.poly());
}

IdentityReport verify_specialized_vertex(const VarTable* vt, VarId p, VarId q, int n,
                                         long max_deg) {
    long bound2 = 2 * max_deg;
    FockVector state = FockVector::basis(fock_vacuum(), bound2);
    // Rightmost factor first: Gamma_-(p^{N-1/2}, q^{N-1/2}) down to 1/2, then
    // the Gamma_+ string from 1/2 up to N-1/2.
    for (int i = n; i >= 1; --i)
        state = apply_vertex(state, true, MPoly::var_pow2(vt, p, 2 * i - 1),
                             MPoly::var_pow2(vt, q, 2 * i - 1));
    for (int i = 1; i <= n; ++i)
        state = apply_vertex(state, false, MPoly::var_pow2(vt, p, 2 * i - 1),
                             MPoly::var_pow2(vt, q, 2 * i - 1));
    MPoly lhs = state.coeff(fock_vacuum());
    if (!lhs.has_integer_exponents())
        throw std::logic_error("verify_specialized_vertex: half-integer exponent survived");
    Series rhs = column_product(vt, p, n, max_deg) * column_product(vt, q, n, max_deg);
    return compare_polys("specialized_vertex", lhs, rhs.poly());
}

}  // namespace phasebox
