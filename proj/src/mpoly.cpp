#include "phasebox/mpoly.hpp"

#include <algorithm>
#include <climits>
#include <sstream>
#include <stdexcept>

namespace phasebox {

VarId VarTable::intern(std::string_view name) {
    auto it = index_.find(name);
    if (it != index_.end()) return VarId{it->second};
    uint32_t idx = static_cast<uint32_t>(names_.size());
    names_.emplace_back(name);
    index_.emplace(std::string(name), idx);
    return VarId{idx};
}

std::optional<VarId> VarTable::find(std::string_view name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return VarId{it->second};
}

const std::string& VarTable::name(VarId v) const {
    if (!v.valid() || v.index >= names_.size())
        throw std::invalid_argument("VarTable::name: unknown variable id");
    return names_[v.index];
}

long mono_deg2(const Monomial& m) {
    long d = 0;
    for (const auto& [v, e] : m) d += e;
    return d;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) {
            out.push_back(a[i++]);
        } else if (a[i].first > b[j].first) {
            out.push_back(b[j++]);
        } else {
            long e = a[i].second + b[j].second;
            if (e != 0) out.emplace_back(a[i].first, e);
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back(b[j]);
    return out;
}

Monomial mono_pow(const Monomial& m, unsigned long k) {
    Monomial out;
    if (k == 0) return out;
    out.reserve(m.size());
    for (const auto& [v, e] : m) out.emplace_back(v, e * static_cast<long>(k));
    return out;
}

bool MonoOrder::operator()(const Monomial& a, const Monomial& b) const {
    long da = mono_deg2(a), db = mono_deg2(b);
    if (da != db) return da < db;
    // Same degree: compare exponents variable by variable in registration
    // order; larger exponent at the first difference sorts earlier.
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        uint32_t va = i < a.size() ? a[i].first : UINT32_MAX;
        uint32_t vb = j < b.size() ? b[j].first : UINT32_MAX;
        uint32_t v = std::min(va, vb);
        long ea = (va == v) ? a[i].second : 0;
        long eb = (vb == v) ? b[j].second : 0;
        if (ea != eb) return ea > eb;
        if (va == v) ++i;
        if (vb == v) ++j;
    }
    return false;
}

const VarTable* MPoly::unify(const VarTable* a, const VarTable* b) {
    if (a == nullptr) return b;
    if (b == nullptr) return a;
    if (a != b) throw std::invalid_argument("MPoly: mismatched variable registries");
    return a;
}

MPoly MPoly::constant(Rat c) {
    MPoly p;
    if (c != 0) p.terms_.emplace(Monomial{}, std::move(c));
    return p;
}

MPoly MPoly::zero_over(const VarTable* vt) {
    MPoly p;
    p.vars_ = vt;
    return p;
}

MPoly MPoly::variable(const VarTable* vt, VarId v) { return var_pow2(vt, v, 2); }

MPoly MPoly::var_pow2(const VarTable* vt, VarId v, long e2) {
    if (vt == nullptr || !v.valid() || v.index >= vt->size())
        throw std::invalid_argument("MPoly::var_pow2: variable not in registry");
    MPoly p;
    p.vars_ = vt;
    if (e2 == 0)
        p.terms_.emplace(Monomial{}, Rat(1));
    else
        p.terms_.emplace(Monomial{{v.index, e2}}, Rat(1));
    return p;
}

MPoly MPoly::monomial(const VarTable* vt, Monomial m, Rat c) {
    MPoly p;
    if (!m.empty()) {
        if (vt == nullptr) throw std::invalid_argument("MPoly::monomial: registry required");
        p.vars_ = vt;
    } else {
        p.vars_ = vt;
    }
    if (c != 0) p.terms_.emplace(std::move(m), std::move(c));
    return p;
}

bool MPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rat MPoly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    if (!is_constant()) throw std::logic_error("MPoly::constant_value: not constant");
    return terms_.begin()->second;
}

long MPoly::degree2() const {
    if (terms_.empty()) throw std::logic_error("MPoly::degree2: zero polynomial");
    // Graded order: the last term has the highest total degree.
    return mono_deg2(terms_.rbegin()->first);
}

bool MPoly::has_integer_exponents() const {
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m)
            if (e % 2 != 0) return false;
    return true;
}

long MPoly::var_degree2(VarId v) const {
    long best = 0;
    for (const auto& [m, c] : terms_)
        for (const auto& [vi, e] : m)
            if (vi == v.index) best = std::max(best, e);
    return best;
}

void MPoly::add_term(Monomial m, Rat c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MPoly& MPoly::operator+=(const MPoly& o) {
    vars_ = unify(vars_, o.vars_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    vars_ = unify(vars_, o.vars_);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly out;
    out.vars_ = MPoly::unify(a.vars_, b.vars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(mono_mul(ma, mb), ca * cb);
    return out;
}

MPoly& MPoly::operator*=(const MPoly& o) {
    *this = *this * o;
    return *this;
}

MPoly& MPoly::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

MPoly MPoly::operator-() const {
    MPoly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

bool MPoly::operator==(const MPoly& o) const {
    unify(vars_, o.vars_);
    return terms_ == o.terms_;
}

MPoly MPoly::pow(unsigned long k) const {
    MPoly out = MPoly::constant(1);
    out.vars_ = vars_;
    MPoly base = *this;
    while (k > 0) {
        if (k & 1UL) out *= base;
        k >>= 1UL;
        if (k > 0) base *= base;
    }
    return out;
}

Rat MPoly::eval(const std::map<VarId, Rat>& assignment) const {
    std::map<uint32_t, Rat> sqrt_cache;
    Rat total(0);
    for (const auto& [m, c] : terms_) {
        Rat term = c;
        for (const auto& [v, e2] : m) {
            auto it = assignment.find(VarId{v});
            if (it == assignment.end())
                throw std::invalid_argument("MPoly::eval: missing variable " +
                                            (vars_ ? vars_->name(VarId{v}) : std::string("?")));
            const Rat& val = it->second;
            if (e2 % 2 == 0) {
                term *= rat_pow(val, e2 / 2);
            } else {
                auto sit = sqrt_cache.find(v);
                if (sit == sqrt_cache.end()) {
                    auto s = rat_sqrt(val);
                    if (!s)
                        throw std::domain_error(
                            "MPoly::eval: half-integer exponent needs a perfect-square value");
                    sit = sqrt_cache.emplace(v, *s).first;
                }
                term *= rat_pow(sit->second, e2);
            }
        }
        total += term;
    }
    return total;
}

MPoly MPoly::substitute(VarId v, const Rat& value) const {
    MPoly out;
    out.vars_ = vars_;
    for (const auto& [m, c] : terms_) {
        Monomial rest;
        Rat coeff = c;
        bool dead = false;
        for (const auto& [vi, e2] : m) {
            if (vi == v.index) {
                if (e2 % 2 != 0) {
                    auto s = rat_sqrt(value);
                    if (!s)
                        throw std::domain_error(
                            "MPoly::substitute: half-integer exponent needs a perfect square");
                    coeff *= rat_pow(*s, e2);
                } else {
                    coeff *= rat_pow(value, e2 / 2);
                }
                if (coeff == 0) dead = true;
            } else {
                rest.emplace_back(vi, e2);
            }
        }
        if (!dead) out.add_term(std::move(rest), coeff);
    }
    return out;
}

MPoly truncate2(const MPoly& p, long bound2) {
    MPoly out;
    for (const auto& [m, c] : p.terms()) {
        if (mono_deg2(m) <= bound2) out.add_term(m, c);
    }
    out += MPoly::zero_over(p.vars());
    return out;
}

std::string mono_str(const VarTable* vt, const Monomial& m) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, e2] : m) {
        if (!first) os << "*";
        first = false;
        os << (vt ? vt->name(VarId{v}) : "v" + std::to_string(v));
        if (e2 == 2) continue;
        if (e2 % 2 == 0) {
            os << "^" << (e2 / 2);
        } else {
            os << "^(" << e2 << "/2)";
        }
    }
    if (first) os << "1";
    return os.str();
}

std::string to_string(const MPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (m.empty()) {
            os << rat_str(a);
        } else if (a == 1) {
            os << mono_str(p.vars(), m);
        } else {
            os << rat_str(a) << "*" << mono_str(p.vars(), m);
        }
    }
    return os.str();
}

void Series::check_nonnegative(const MPoly& p) {
    for (const auto& [m, c] : p.terms())
        for (const auto& [v, e] : m)
            if (e < 0) throw std::invalid_argument("Series: negative exponent");
}

Series::Series(MPoly p, long bound) {
    if (bound < 0) throw std::invalid_argument("Series: negative degree bound");
    check_nonnegative(p);
    bound2_ = 2 * bound;
    poly_ = truncate2(p, bound2_);
}

Series Series::with_bound2(MPoly p, long bound2) {
    if (bound2 < 0) throw std::invalid_argument("Series: negative degree bound");
    check_nonnegative(p);
    Series s;
    s.bound2_ = bound2;
    s.poly_ = truncate2(p, bound2);
    return s;
}

Series& Series::operator+=(const Series& o) {
    bound2_ = std::min(bound2_, o.bound2_);
    poly_ += o.poly_;
    poly_ = truncate2(poly_, bound2_);
    return *this;
}

Series& Series::operator-=(const Series& o) {
    bound2_ = std::min(bound2_, o.bound2_);
    poly_ -= o.poly_;
    poly_ = truncate2(poly_, bound2_);
    return *this;
}

Series& Series::operator*=(const Series& o) {
    bound2_ = std::min(bound2_, o.bound2_);
    poly_ = truncate2(poly_ * o.poly_, bound2_);
    return *this;
}

bool Series::operator==(const Series& o) const {
    return bound2_ == o.bound2_ && poly_ == o.poly_;
}

Series Series::pow(unsigned long k) const {
    Series out = Series::with_bound2(MPoly::constant(1), bound2_);
    for (unsigned long i = 0; i < k; ++i) out *= *this;
    return out;
}

Series Series::capped_var(VarId v, long cap) const {
    MPoly kept;
    for (const auto& [m, c] : poly_.terms()) {
        long e = 0;
        for (const auto& [vi, e2] : m)
            if (vi == v.index) e = e2;
        if (e <= 2 * cap) kept.add_term(m, c);
    }
    kept += MPoly::zero_over(poly_.vars());
    return Series::with_bound2(kept, bound2_);
}

Series geometric_series(const MPoly& m, long bound) {
    if (!m.is_monomial() || m.terms().begin()->second != 1)
        throw std::invalid_argument("geometric_series: need a monomial with coefficient 1");
    const Monomial& mono = m.terms().begin()->first;
    long d2 = mono_deg2(mono);
    if (d2 <= 0) throw std::domain_error("geometric_series: monomial must have positive degree");
    long bound2 = 2 * bound;
    MPoly acc;
    for (long k = 0; k * d2 <= bound2; ++k) acc.add_term(mono_pow(mono, k), Rat(1));
    acc += MPoly::zero_over(m.vars());
    return Series::with_bound2(acc, bound2);
}

MPoly divide_exact(const MPoly& a, const MPoly& b, VarId main_var) {
    if (b.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
    // Split b by the power of main_var; the top coefficient must be constant.
    long db = 0;
    for (const auto& [m, c] : b.terms()) {
        for (const auto& [v, e] : m)
            if (v == main_var.index) db = std::max(db, e);
    }
    Rat lead;
    bool lead_found = false;
    for (const auto& [m, c] : b.terms()) {
        long e = 0;
        for (const auto& [v, ex] : m)
            if (v == main_var.index) e = ex;
        if (e == db) {
            if (lead_found || m.size() > (e != 0 ? 1u : 0u))
                throw std::logic_error("divide_exact: leading coefficient not constant");
            lead = c;
            lead_found = true;
        }
    }
    MPoly rem = a;
    MPoly quot;
    auto var_deg = [&](const MPoly& p) {
        long d = LONG_MIN;
        for (const auto& [m, c] : p.terms()) {
            long e = 0;
            for (const auto& [v, ex] : m)
                if (v == main_var.index) e = ex;
            d = std::max(d, e);
        }
        return d;
    };
    while (!rem.is_zero()) {
        long da = var_deg(rem);
        if (da < db) throw std::logic_error("divide_exact: nonzero remainder");
        // Collect the coefficient of main_var^da in rem.
        MPoly top;
        for (const auto& [m, c] : rem.terms()) {
            long e = 0;
            Monomial rest;
            for (const auto& [v, ex] : m) {
                if (v == main_var.index)
                    e = ex;
                else
                    rest.emplace_back(v, ex);
            }
            if (e == da) top.add_term(std::move(rest), c);
        }
        MPoly shift = da == db
                          ? MPoly::constant(1)
                          : MPoly::var_pow2(a.vars() ? a.vars() : b.vars(), main_var, da - db);
        MPoly qterm = top * shift;
        qterm *= Rat(1) / lead;
        quot += qterm;
        rem -= qterm * b;
    }
    return quot;
}

}  // namespace phasebox
