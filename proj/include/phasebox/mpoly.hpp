#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "phasebox/rational.hpp"

namespace phasebox {

// Variables are interned symbols in an append-only table. One table is
// created per computation context; polynomials built over different tables
// never mix (mismatch is a usage error).
struct VarId {
    uint32_t index = UINT32_MAX;
    bool valid() const { return index != UINT32_MAX; }
    friend bool operator==(VarId a, VarId b) { return a.index == b.index; }
    friend auto operator<=>(VarId a, VarId b) { return a.index <=> b.index; }
};

class VarTable {
public:
    VarId intern(std::string_view name);
    std::optional<VarId> find(std::string_view name) const;
    const std::string& name(VarId v) const;
    uint32_t size() const { return static_cast<uint32_t>(names_.size()); }

private:
    std::vector<std::string> names_;
    std::map<std::string, uint32_t, std::less<>> index_;
};

// Sparse exponent vector. Exponents are stored doubled so that half-integer
// powers (x^{1/2} and friends) stay in exact integer arithmetic; entry
// (v, e2) means v^(e2/2). Entries sorted by variable index, no zeros.
using Monomial = std::vector<std::pair<uint32_t, long>>;

long mono_deg2(const Monomial& m);
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_pow(const Monomial& m, unsigned long k);

// Graded order: lower total (doubled) degree first; within a degree the
// monomial with the larger exponent at the first differing variable comes
// first. Fixed once for reproducible serialization.
struct MonoOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

class MPoly {
public:
    using Terms = std::map<Monomial, Rat, MonoOrder>;

    MPoly() = default;  // zero
    static MPoly constant(Rat c);
    static MPoly constant(long c) { return constant(Rat(c)); }
    static MPoly zero_over(const VarTable* vt);
    static MPoly variable(const VarTable* vt, VarId v);
    // v^(e2/2)
    static MPoly var_pow2(const VarTable* vt, VarId v, long e2);
    static MPoly monomial(const VarTable* vt, Monomial m, Rat c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_value() const;  // 0 for zero polynomial
    bool is_monomial() const { return terms_.size() == 1; }
    // requires !is_zero()
    long degree2() const;
    bool has_integer_exponents() const;
    long var_degree2(VarId v) const;  // max exponent of v across terms

    const VarTable* vars() const { return vars_; }
    const Terms& terms() const { return terms_; }

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const MPoly& o);
    MPoly& operator*=(const Rat& c);
    friend MPoly operator+(MPoly a, const MPoly& b) { a += b; return a; }
    friend MPoly operator-(MPoly a, const MPoly& b) { a -= b; return a; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(MPoly a, const Rat& c) { a *= c; return a; }
    MPoly operator-() const;
    bool operator==(const MPoly& o) const;

    MPoly pow(unsigned long k) const;

    // Exact evaluation. Odd doubled exponents need an exact square root of
    // the assigned value; a non-square there is a domain error, as is a
    // missing variable.
    Rat eval(const std::map<VarId, Rat>& assignment) const;
    // Substitute a single variable by a rational, keeping the rest symbolic.
    MPoly substitute(VarId v, const Rat& value) const;

    void add_term(Monomial m, Rat c);  // accumulate, dropping zeros

private:
    static const VarTable* unify(const VarTable* a, const VarTable* b);

    const VarTable* vars_ = nullptr;  // null until a variable appears
    Terms terms_;
};

// Drop every term of total doubled degree > bound2.
MPoly truncate2(const MPoly& p, long bound2);

std::string mono_str(const VarTable* vt, const Monomial& m);
std::string to_string(const MPoly& p);

// Total-degree-truncated power series: an MPoly with non-negative exponents
// plus a degree bound; arithmetic re-truncates. The bound is stored doubled
// to line up with Monomial exponents.
class Series {
public:
    Series() = default;
    Series(MPoly p, long bound);  // bound in ordinary degree units
    static Series with_bound2(MPoly p, long bound2);

    long bound2() const { return bound2_; }
    const MPoly& poly() const { return poly_; }
    bool is_zero() const { return poly_.is_zero(); }

    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    Series& operator*=(const Series& o);
    friend Series operator+(Series a, const Series& b) { a += b; return a; }
    friend Series operator-(Series a, const Series& b) { a -= b; return a; }
    friend Series operator*(Series a, const Series& b) { a *= b; return a; }
    bool operator==(const Series& o) const;

    Series pow(unsigned long k) const;
    // Keep only terms with exponent of v at most cap (doubled: 2*cap).
    Series capped_var(VarId v, long cap) const;

private:
    static void check_nonnegative(const MPoly& p);

    MPoly poly_;
    long bound2_ = 0;
};

// sum_{k >= 0, deg(m^k) <= bound} m^k for a monomial m with coefficient 1 and
// positive total degree; multiplying by (1 - m) and truncating gives 1.
Series geometric_series(const MPoly& m, long bound);

// Univariate-style exact division: treat a and b as polynomials in main_var
// whose leading coefficient (in b) must be a nonzero constant. A nonzero
// remainder is an internal error, not a user error.
MPoly divide_exact(const MPoly& a, const MPoly& b, VarId main_var);

}  // namespace phasebox
