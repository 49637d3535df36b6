#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace phasebox {

// Exact coefficient field: arbitrary-precision rationals via GMP.
// mpq_class canonical form is the contract everywhere: lowest terms,
// positive denominator, zero stored as 0/1.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat_from_strings(const std::string& num, const std::string& den) {
    Int n(num, 10), d(den, 10);
    if (d == 0) throw std::domain_error("rat: zero denominator");
    Rat r(n, d);
    r.canonicalize();
    return r;
}

// base^exp with exp possibly negative (base must be nonzero then).
inline Rat rat_pow(const Rat& base, long exp) {
    if (exp == 0) return Rat(1);
    bool neg = exp < 0;
    unsigned long e = neg ? static_cast<unsigned long>(-exp) : static_cast<unsigned long>(exp);
    if (neg && base == 0) throw std::domain_error("rat_pow: zero base with negative exponent");
    Int num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), e);
    Rat r = neg ? Rat(den, num) : Rat(num, den);
    r.canonicalize();
    return r;
}

// Exact square root of a perfect-square rational, nullopt otherwise.
inline std::optional<Rat> rat_sqrt(const Rat& r) {
    if (r < 0) return std::nullopt;
    const Int& num = r.get_num();
    const Int& den = r.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    Int sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    Rat s(sn, sd);
    s.canonicalize();
    return s;
}

inline std::string rat_str(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

}  // namespace phasebox
