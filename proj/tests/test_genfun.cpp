#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "phasebox/genfun.hpp"
#include "phasebox/serialize.hpp"

using namespace phasebox;

TEST_CASE("boxed product formula, small boxes") {
    VarTable vt;
    VarId q = vt.intern("q");
    MPoly qq = MPoly::variable(&vt, q);
    CHECK(macmahon_box(&vt, q, Box{1, 1, 1}) == MPoly::constant(1) + qq);
    CHECK(macmahon_box(&vt, q, Box{2, 1, 0}) == MPoly::constant(1));
    CHECK(macmahon_box(&vt, q, Box{0, 3, 3}) == MPoly::constant(1));

    // coefficient sum at q = 1 counts the boxed plane partitions
    MPoly b222 = macmahon_box(&vt, q, Box{2, 2, 2});
    CHECK(b222.eval({{q, Rat(1)}}) == Rat(20));

    // symmetry of the box in all three directions
    CHECK(macmahon_box(&vt, q, Box{2, 3, 1}) == macmahon_box(&vt, q, Box{3, 1, 2}));
}

TEST_CASE("division by the denominator product stays exact up to 6^3") {
    VarTable vt;
    VarId q = vt.intern("q");
    // divide_exact throws on a nonzero remainder, so completion is the check;
    // on top of that the coefficients must be positive integers
    for (int n = 1; n <= 6; ++n)
        for (int l = 1; l <= 6; ++l)
            for (int m = 1; m <= 6; ++m) {
                MPoly gf = macmahon_box(&vt, q, Box{n, l, m});
                for (const auto& [mono, c] : gf.terms()) {
                    CHECK(c > 0);
                    CHECK(c.get_den() == 1);
                }
            }
}

TEST_CASE("verify_macmahon") {
    VarTable vt;
    VarId q = vt.intern("q");
    CHECK(verify_macmahon(&vt, q, Box{1, 1, 1}).equal);
    CHECK(verify_macmahon(&vt, q, Box{2, 2, 2}).equal);
    CHECK(verify_macmahon(&vt, q, Box{3, 3, 3}).equal);
    CHECK_THROWS_AS(verify_macmahon(&vt, q, Box{5, 5, 5}), std::invalid_argument);
}

TEST_CASE("discrepancy reporting") {
    VarTable vt;
    VarId q = vt.intern("q");
    MPoly a = MPoly::constant(1) + MPoly::variable(&vt, q);
    MPoly b = MPoly::constant(1) + MPoly::variable(&vt, q) * MPoly::constant(2);
    IdentityReport rep = compare_polys("demo", a, b);
    CHECK(!rep.equal);
    REQUIRE(rep.discrepancy.has_value());
    CHECK(rep.discrepancy->monomial == "q");
    CHECK(rep.discrepancy->lhs == Rat(1));
    CHECK(rep.discrepancy->rhs == Rat(2));

    Json j = identity_report_to_json(rep);
    CHECK(j["name"] == "demo");
    CHECK(j["equal"] == false);
    CHECK(j["discrepancy"]["monomial"] == "q");
    Json jok = identity_report_to_json(compare_polys("ok", a, a));
    CHECK(jok["discrepancy"].is_null());
}

TEST_CASE("pair generating function truncation") {
    VarTable vt;
    VarId p = vt.intern("p"), q = vt.intern("q");
    Series s = uc_product_truncated(&vt, p, q, 3);
    // single-variable coefficients 1, 1, 3, 6
    MPoly pp = MPoly::variable(&vt, p);
    auto coeff_of = [&](const MPoly& poly, const Monomial& m) {
        auto it = poly.terms().find(m);
        return it == poly.terms().end() ? Rat(0) : it->second;
    };
    CHECK(coeff_of(s.poly(), {}) == Rat(1));
    CHECK(coeff_of(s.poly(), {{p.index, 2}}) == Rat(1));
    CHECK(coeff_of(s.poly(), {{p.index, 4}}) == Rat(3));
    CHECK(coeff_of(s.poly(), {{p.index, 6}}) == Rat(6));
    // cross coefficients factor
    CHECK(coeff_of(s.poly(), {{p.index, 2}, {q.index, 4}}) == Rat(3));
    CHECK(uc_product_truncated(&vt, p, q, 0).poly() == MPoly::constant(1));
}

TEST_CASE("verify_uc_limit") {
    VarTable vt;
    VarId p = vt.intern("p"), q = vt.intern("q");
    CHECK(verify_uc_limit(&vt, p, q, 0).equal);
    CHECK(verify_uc_limit(&vt, p, q, 5).equal);
}

TEST_CASE("plane partition counts from the enumeration oracle") {
    auto counts = plane_partition_counts(6);
    CHECK(counts == std::vector<long>{1, 1, 3, 6, 13, 24, 48});
}

TEST_CASE("verify_box_columns") {
    VarTable vt;
    VarId p = vt.intern("p"), q = vt.intern("q");
    // 1x1 base: both sides are the truncated geometric product
    IdentityReport r11 = verify_box_columns(&vt, p, q, 1, 1, 6);
    CHECK(r11.equal);
    Series geo = geometric_series(MPoly::variable(&vt, p), 6) *
                 geometric_series(MPoly::variable(&vt, q), 6);
    CHECK(r11.rhs == geo.poly());
    CHECK(verify_box_columns(&vt, p, q, 2, 1, 6).equal);

    // truncation consistency: degree-D coefficients agree between D and D+1
    IdentityReport d5 = verify_box_columns(&vt, p, q, 2, 2, 5);
    IdentityReport d6 = verify_box_columns(&vt, p, q, 2, 2, 6);
    CHECK(d5.equal);
    CHECK(d6.equal);
    CHECK(truncate2(d6.lhs, 2 * 5) == d5.lhs);
}

TEST_CASE("verify_specialized_vertex") {
    VarTable vt;
    VarId p = vt.intern("p"), q = vt.intern("q");
    IdentityReport r0 = verify_specialized_vertex(&vt, p, q, 1, 0);
    CHECK(r0.equal);
    CHECK(r0.lhs == MPoly::constant(1));
    IdentityReport r1 = verify_specialized_vertex(&vt, p, q, 1, 4);
    CHECK(r1.equal);
    Series geo = geometric_series(MPoly::variable(&vt, p), 4) *
                 geometric_series(MPoly::variable(&vt, q), 4);
    CHECK(r1.rhs == geo.poly());
}
