#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "phasebox/phase_model.hpp"
#include "phasebox/serialize.hpp"

using namespace phasebox;

namespace {

struct Ctx {
    VarTable vt;
    VarId x, y;
    Ctx() : x(vt.intern("x")), y(vt.intern("y")) {}
    MPoly var(VarId v) { return MPoly::variable(&vt, v); }
};

OccupationVector occ(std::vector<int> n) { return OccupationVector{std::move(n)}; }

std::vector<OccupationVector> all_occupations(int sites, int max_particles) {
    std::vector<OccupationVector> out;
    OccupationVector cur = zero_occupation(sites);
    std::function<void(int, int)> rec = [&](int site, int left) {
        if (site > sites) {
            out.push_back(cur);
            return;
        }
        for (int k = 0; k <= left; ++k) {
            cur.n[static_cast<std::size_t>(site)] = k;
            rec(site + 1, left - k);
        }
        cur.n[static_cast<std::size_t>(site)] = 0;
    };
    rec(0, max_particles);
    return out;
}

}  // namespace

TEST_CASE("local operator actions") {
    auto lower0 = apply_local(LocalOp::lower(), 0);
    CHECK(lower0.empty());
    auto raise2 = apply_local(LocalOp::raise(), 2);
    REQUIRE(raise2.size() == 1);
    CHECK(raise2[0].second == 3);
    CHECK(raise2[0].first == MPoly::constant(1));
    auto proj0 = apply_local(LocalOp::proj(), 0);
    REQUIRE(proj0.size() == 1);
    CHECK(proj0[0].second == 0);
    CHECK(apply_local(LocalOp::proj(), 1).empty());
    Ctx c;
    auto scal = apply_local(LocalOp::times(c.var(c.x)), 5);
    CHECK(scal[0].first == c.var(c.x));
    CHECK(scal[0].second == 5);
}

TEST_CASE("occupation <-> partition maps") {
    CHECK(occupation_to_partition(occ({0, 1, 1})) == Partition({2, 1}));
    CHECK(occupation_to_partition(occ({3, 0, 0})) == Partition{});
    CHECK(occupation_to_partition(occ({0, 0, 2, 1})) == Partition({3, 2, 2}));

    CHECK(occupation_from_partition(Partition({2, 1}), 3, 2) == occ({1, 1, 1}));
    CHECK(occupation_from_partition(Partition{}, 0, 5) == occ({0, 0, 0, 0, 0, 0}));
    CHECK_THROWS_AS(occupation_from_partition(Partition({3}), 1, 2), std::domain_error);
    CHECK_THROWS_AS(occupation_from_partition(Partition({1, 1}), 1, 2), std::domain_error);
    // round trip with the particle count preserved
    for (const OccupationVector& n : all_occupations(3, 3)) {
        Partition nu = occupation_to_partition(n);
        CHECK(occupation_from_partition(nu, n.particles(), n.sites()) == n);
    }
}

TEST_CASE("admissibility") {
    CHECK(admissible(occ({0, 1, 0}), occ({0, 0, 0})));
    CHECK(!admissible(occ({0, 1, 1}), occ({0, 0, 0})));
    CHECK(!admissible(occ({1, 0, 1}), occ({0, 1, 1})));
    CHECK(admissible(occ({1, 0, 0}), occ({0, 0, 0})));
    CHECK_THROWS_AS(admissible(occ({1, 0}), occ({1, 0, 0})), std::invalid_argument);
}

TEST_CASE("creation operator, direct form") {
    Ctx c;
    PhaseVector vac = PhaseVector::basis(zero_occupation(2));
    PhaseVector out = apply_B_direct(&c.vt, vac, c.x);
    PhaseVector expect;
    expect.add(occ({1, 0, 0}), MPoly::constant(1));
    expect.add(occ({0, 1, 0}), c.var(c.x));
    expect.add(occ({0, 0, 1}), c.var(c.x).pow(2));
    CHECK(out == expect);

    PhaseVector s01 = PhaseVector::basis(occ({0, 1}));
    PhaseVector out01 = apply_B_direct(&c.vt, s01, c.x);
    PhaseVector expect01;
    expect01.add(occ({1, 1}), MPoly::constant(1));
    expect01.add(occ({0, 2}), c.var(c.x));
    CHECK(out01 == expect01);

    // single site: B just adds a particle at site 0
    PhaseVector k3 = PhaseVector::basis(occ({3}));
    PhaseVector outk = apply_B_direct(&c.vt, k3, c.x);
    PhaseVector expectk;
    expectk.add(occ({4}), MPoly::constant(1));
    CHECK(outk == expectk);
}

TEST_CASE("transfer expansion agrees with the direct action") {
    Ctx c;
    // hand-checked 2-site case
    PhaseVector s = PhaseVector::basis(occ({0, 0}));
    PhaseVector expect;
    expect.add(occ({1, 0}), MPoly::constant(1));
    expect.add(occ({0, 1}), c.var(c.x));
    CHECK(apply_B_transfer(&c.vt, s, c.x) == expect);

    for (int sites = 0; sites <= 3; ++sites)
        for (const OccupationVector& n : all_occupations(sites, 3)) {
            PhaseVector b = PhaseVector::basis(n);
            CHECK(apply_B_direct(&c.vt, b, c.x) == apply_B_transfer(&c.vt, b, c.x));
            CHECK(apply_C_dual(&c.vt, b, c.x) == apply_C_transfer(&c.vt, b, c.x));
        }
}

TEST_CASE("creation raises the particle count by one") {
    Ctx c;
    for (int sites = 0; sites <= 3; ++sites)
        for (const OccupationVector& n : all_occupations(sites, 2)) {
            PhaseVector out = apply_B_direct(&c.vt, PhaseVector::basis(n), c.x);
            for (const auto& [m, coeff] : out.terms()) CHECK(m.particles() == n.particles() + 1);
        }
}

TEST_CASE("dual annihilation mirrors the creation action") {
    Ctx c;
    PhaseVector vac = PhaseVector::basis(zero_occupation(2));
    PhaseVector out = apply_C_dual(&c.vt, vac, c.x);
    PhaseVector expect;
    expect.add(occ({1, 0, 0}), MPoly::constant(1));
    expect.add(occ({0, 1, 0}), c.var(c.x));
    expect.add(occ({0, 0, 1}), c.var(c.x).pow(2));
    CHECK(out == expect);
    PhaseVector k = PhaseVector::basis(occ({5}));
    PhaseVector outk = apply_C_dual(&c.vt, k, c.x);
    REQUIRE(outk.terms().size() == 1);
    CHECK(outk.terms().begin()->first == occ({6}));
}

TEST_CASE("commuting families") {
    Ctx c;
    for (int sites = 0; sites <= 3; ++sites)
        for (const OccupationVector& n : all_occupations(sites, 2)) {
            PhaseVector b = PhaseVector::basis(n);
            CHECK(apply_B_direct(&c.vt, apply_B_direct(&c.vt, b, c.x), c.y) ==
                  apply_B_direct(&c.vt, apply_B_direct(&c.vt, b, c.y), c.x));
            CHECK(apply_C_dual(&c.vt, apply_C_dual(&c.vt, b, c.x), c.y) ==
                  apply_C_dual(&c.vt, apply_C_dual(&c.vt, b, c.y), c.x));
        }
}

TEST_CASE("outputs interlace the input under the partition map") {
    Ctx c;
    for (int sites = 1; sites <= 3; ++sites)
        for (const OccupationVector& n : all_occupations(sites, 2)) {
            Partition nu = occupation_to_partition(n);
            PhaseVector out = apply_B_direct(&c.vt, PhaseVector::basis(n), c.x);
            for (const auto& [m, coeff] : out.terms()) {
                Partition mu = occupation_to_partition(m);
                CHECK(interlaces(mu, nu));
                CHECK(mu.fits_box(static_cast<int>(n.particles()) + 1, sites));
            }
        }
}

TEST_CASE("coefficients are single-variable skew Schur values") {
    Ctx c;
    for (int sites = 1; sites <= 3; ++sites)
        for (const OccupationVector& n : all_occupations(sites, 2)) {
            Partition nu = occupation_to_partition(n);
            PhaseVector out = apply_B_direct(&c.vt, PhaseVector::basis(n), c.x);
            for (const auto& [m, coeff] : out.terms()) {
                Partition mu = occupation_to_partition(m);
                CHECK(coeff == skew_schur_single(&c.vt, mu, nu, c.x));
            }
        }
}

TEST_CASE("delta pairing") {
    Ctx c;
    PhaseVector a = PhaseVector::basis(occ({1, 0}));
    PhaseVector b = PhaseVector::basis(occ({0, 1}));
    CHECK(inner(a, a) == MPoly::constant(1));
    CHECK(inner(a, b).is_zero());
    // bilinearity
    PhaseVector lc;
    lc.add(occ({1, 0}), c.var(c.x));
    lc.add(occ({0, 1}), MPoly::constant(2));
    PhaseVector rc;
    rc.add(occ({1, 0}), c.var(c.y));
    rc.add(occ({0, 1}), MPoly::constant(3));
    CHECK(inner(lc, rc) == c.var(c.x) * c.var(c.y) + MPoly::constant(6));
    CHECK_THROWS_AS(inner(a, PhaseVector::basis(occ({1, 0, 0}))), std::invalid_argument);
}

TEST_CASE("scalar products at the smallest size") {
    VarTable vt;
    VarSet xs{vt.intern("x1")}, ys{vt.intern("y1")}, zs{vt.intern("z1")}, vs{vt.intern("v1")};
    MPoly x1 = MPoly::variable(&vt, xs[0]), y1 = MPoly::variable(&vt, ys[0]);
    MPoly z1 = MPoly::variable(&vt, zs[0]), v1 = MPoly::variable(&vt, vs[0]);
    MPoly expect = (MPoly::constant(1) + x1 * z1) * (MPoly::constant(1) + y1 * v1);
    CHECK(scalar_product_op(&vt, 1, 1, xs, ys, zs, vs) == expect);
    CHECK(scalar_product_pp(&vt, 1, 1, xs, ys, zs, vs) == expect);
    CHECK(scalar_product_schur(&vt, 1, 1, xs, ys, zs, vs) == expect);
}

TEST_CASE("scalar product vanishes to 1 with the creation variables at zero") {
    VarTable vt;
    VarSet xs{vt.intern("x1"), vt.intern("x2")}, ys{vt.intern("y1")};
    VarSet zs{vt.intern("z1"), vt.intern("z2")}, vs{vt.intern("v1")};
    MPoly s = scalar_product_op(&vt, 2, 3, xs, ys, zs, vs);
    for (VarId z : zs) s = s.substitute(z, Rat(0));
    for (VarId v : vs) s = s.substitute(v, Rat(0));
    CHECK(s == MPoly::constant(1));
}

TEST_CASE("single-sector factor is the boxed Cauchy sum") {
    VarTable vt;
    VarSet xs{vt.intern("x1")}, ys{vt.intern("y1")}, zs{vt.intern("z1")}, vs{vt.intern("v1")};
    MPoly s = scalar_product_op(&vt, 2, 1, xs, ys, zs, vs);
    for (VarId v : {ys[0], vs[0]}) s = s.substitute(v, Rat(0));
    MPoly xz = MPoly::variable(&vt, xs[0]) * MPoly::variable(&vt, zs[0]);
    CHECK(s == MPoly::constant(1) + xz + xz.pow(2));
}

TEST_CASE("slice-weight route counts boxed pairs at all variables one") {
    VarTable vt;
    VarSet xs{vt.intern("x1")}, ys{vt.intern("y1")}, zs{vt.intern("z1")}, vs{vt.intern("v1")};
    MPoly s = scalar_product_pp(&vt, 1, 1, xs, ys, zs, vs);
    std::map<VarId, Rat> ones{{xs[0], Rat(1)}, {ys[0], Rat(1)}, {zs[0], Rat(1)}, {vs[0], Rat(1)}};
    CHECK(s.eval(ones) == Rat(4));  // 2 x 2 boxed plane partitions
}

TEST_CASE("schur route factor at N = 2, M = 1") {
    VarTable vt;
    VarSet xs{vt.intern("x1"), vt.intern("x2")}, ys{vt.intern("y1")};
    VarSet zs{vt.intern("z1"), vt.intern("z2")}, vs{vt.intern("v1")};
    MPoly s = scalar_product_schur(&vt, 1, 1, xs, ys, zs, vs);
    for (VarId v : {ys[0], vs[0]}) s = s.substitute(v, Rat(0));
    // three shapes inside [2,1]: ∅, (1), (1,1)
    MPoly x1 = MPoly::variable(&vt, xs[0]), x2 = MPoly::variable(&vt, xs[1]);
    MPoly z1 = MPoly::variable(&vt, zs[0]), z2 = MPoly::variable(&vt, zs[1]);
    CHECK(s == MPoly::constant(1) + (x1 + x2) * (z1 + z2) + x1 * x2 * z1 * z2);
}

TEST_CASE("scalar product is symmetric in each variable family") {
    VarTable vt;
    VarSet xs{vt.intern("x1"), vt.intern("x2")}, ys{vt.intern("y1")};
    VarSet zs{vt.intern("z1"), vt.intern("z2")}, vs{vt.intern("v1")};
    MPoly a = scalar_product_op(&vt, 2, 2, xs, ys, zs, vs);
    MPoly b = scalar_product_op(&vt, 2, 2, {xs[1], xs[0]}, ys, zs, vs);
    MPoly c = scalar_product_op(&vt, 2, 2, xs, ys, {zs[1], zs[0]}, vs);
    CHECK(a == b);
    CHECK(a == c);
}

TEST_CASE("usage errors in the scalar products") {
    VarTable vt;
    VarSet xs{vt.intern("x1")}, ys{vt.intern("y1")}, zs{vt.intern("z1")}, vs{vt.intern("v1")};
    CHECK_THROWS_AS(scalar_product_op(&vt, 1, 1, {}, ys, {}, vs), std::invalid_argument);
    CHECK_THROWS_AS(scalar_product_op(&vt, 1, 1, xs, ys, {}, vs), std::invalid_argument);
}

TEST_CASE("rtt diagnostic shapes") {
    Ctx c;
    // identity R with equal arguments: both sides coincide exactly
    RttReport same = verify_rtt(&c.vt, identity_r_matrix(), c.x, c.x, 2);
    CHECK(same.completed);
    CHECK(same.symbolic_zero);
    CHECK(same.state_zero);

    // printed R: completes and reports residuals proportional to pi and
    // (x - y)^2-type combinations; nothing is asserted about their values
    RttReport printed = verify_rtt(&c.vt, standard_r_matrix(&c.vt, c.x, c.y), c.x, c.y, 3);
    CHECK(printed.completed);
    CHECK(!printed.symbolic_zero);
    bool saw_proj = false;
    for (const auto& row : printed.symbolic_residual)
        for (const auto& entry : row)
            for (const auto& [w, coeff] : entry)
                for (SiteOp op : w)
                    if (op == SiteOp::Proj) saw_proj = true;
    CHECK(saw_proj);

    // scalar L entries reduce the check to a polynomial identity
    RttReport scal = verify_rtt_scalar_l(&c.vt, standard_r_matrix(&c.vt, c.x, c.y), c.x, c.y);
    CHECK(scal.completed);
    for (const auto& r : scal.state_residuals) CHECK(r.out.size() >= 1);
}

TEST_CASE("phase vector json") {
    Ctx c;
    PhaseVector v;
    v.add(occ({1, 0}), c.var(c.x) + MPoly::constant(1));
    v.add(occ({0, 1}), MPoly::constant(rat(1, 2)));
    Json j = phase_vector_to_json(v);
    CHECK(j["terms"].size() == 2);
    PhaseVector back = phase_vector_from_json(j, c.vt);
    CHECK(back == v);
}
