#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "innertwist/examples.hpp"

#include <algorithm>

using namespace innertwist;

namespace {

Report full_suite(const CqtExample& ex) {
    Report rep;
    auto hopf = ex.bialgebra.as_hopf();
    REQUIRE(hopf);
    rep.append(run_checks(check_hopf(*hopf, ex.name)));
    rep.append(run_checks(check_central_axioms(ex.bialgebra, ex.name)));
    rep.append(run_checks(check_derived_sigma_identities(ex.bialgebra,
                                                         ex.name)));
    rep.append(run_checks(check_schauenburg(ex.bialgebra, ex.name)));
    rep.append(run_checks(check_cqt_all(ex.bialgebra, ex.pairing, ex.name)));
    return rep;
}

} // namespace

TEST_CASE("group algebras: full verification at several orders") {
    for (auto [n, k] : std::vector<std::pair<long, long>>{
             {1, 0}, {2, 0}, {2, 1}, {3, 1}, {4, 3}}) {
        auto ex = build_group_algebra_cqt(n, k);
        CAPTURE(ex.name);
        auto rep = full_suite(ex);
        CHECK(rep.all_passed());
        CHECK(rep.skips() == 0);
    }

    auto sign = build_group_algebra_cqt(2, 1);
    auto f = sign.bialgebra.bialgebra.ctx->field();
    CHECK(sign.pairing.matrix().at(0, 3) == CycScalar::from_int(f, -1));
    CHECK(sign.pairing.matrix().at(0, 1) == CycScalar::one(f));

    CHECK_THROWS_AS(build_group_algebra_cqt(0, 0), StructuralError);
    CHECK_THROWS_AS(build_group_algebra_cqt(3, 3), StructuralError);
    CHECK_THROWS_AS(build_group_algebra_cqt(3, -1), StructuralError);
}

TEST_CASE("group algebra of order three: the u functional in closed form") {
    auto ex = build_group_algebra_cqt(3, 1);
    auto q = make_cqt(ex.bialgebra, ex.pairing);
    REQUIRE(q);
    auto u = compute_u(*q);
    auto f = ex.bialgebra.bialgebra.ctx->field();
    // u(g^i) = zeta^{-i^2}: [1, zeta^2, zeta^2] at order 3
    CHECK(u.matrix().at(0, 0) == CycScalar::one(f));
    CHECK(u.matrix().at(0, 1) == CycScalar::root(f, 2));
    CHECK(u.matrix().at(0, 2) == CycScalar::root(f, 2));

    auto s2 = antipode_square_via_u(*q);
    CHECK(s2 == ex.bialgebra.bialgebra.ctx->identity(ex.bialgebra.carrier()));
}

TEST_CASE("exterior line: every coefficient is admissible") {
    for (long alpha : {0L, 2L, -1L}) {
        auto ex = build_exterior_line(alpha);
        CAPTURE(ex.name);
        auto rep = full_suite(ex);
        CHECK(rep.all_passed());
        CHECK(rep.skips() == 0);
        CHECK(is_commutative(ex.bialgebra));

        // braided-commutative, so the opposite antipode is the antipode
        auto s_bar = opposite_antipode(ex.bialgebra);
        REQUIRE(s_bar);
        CHECK(*s_bar == *ex.bialgebra.antipode);
    }
}

TEST_CASE("four-dimensional algebra: solved antipode squares to "
          "conjugation") {
    auto cb = build_sweedler();
    REQUIRE(cb.antipode);
    auto ctx = cb.bialgebra.ctx;
    auto f = ctx->field();
    const auto& H = cb.carrier();

    // S: 1 -> 1, g -> g, x -> -gx, gx -> x
    Mat s(f, 4, 4);
    s.at(0, 0) = CycScalar::one(f);
    s.at(1, 1) = CycScalar::one(f);
    s.at(3, 2) = CycScalar::from_int(f, -1);
    s.at(2, 3) = CycScalar::one(f);
    CHECK(*cb.antipode == ctx->morphism(H, H, s));

    // S^2 = conjugation by g = diag(1, 1, -1, -1), not the identity
    Mat conj(f, 4, 4);
    conj.at(0, 0) = CycScalar::one(f);
    conj.at(1, 1) = CycScalar::one(f);
    conj.at(2, 2) = CycScalar::from_int(f, -1);
    conj.at(3, 3) = CycScalar::from_int(f, -1);
    auto s2 = *cb.antipode * *cb.antipode;
    CHECK(s2 == ctx->morphism(H, H, conj));
    CHECK(s2 != ctx->identity(H));

    CHECK_FALSE(is_commutative(cb));

    auto hopf = cb.as_hopf();
    REQUIRE(hopf);
    CHECK(run_checks(check_hopf(*hopf, "H4")).all_passed());
    CHECK(run_checks(check_central_axioms(cb, "H4")).all_passed());
}

TEST_CASE("pairing search: exact solution sets") {
    // one-dimensional: the only pairing is the forced unit entry
    auto point = build_group_algebra_cqt(1, 0);
    auto only = cqt_ansatz_solver(point.bialgebra,
                                  full_support(point.bialgebra.carrier()));
    REQUIRE(only.size() == 1);
    CHECK(only[0] == point.pairing);

    // k[Z/2]: exactly the two bicharacters of Z/2, r(g,g) = +-1
    auto kz2 = build_group_algebra_cqt(2, 1);
    auto sols = cqt_ansatz_solver(kz2.bialgebra,
                                  full_support(kz2.bialgebra.carrier()));
    REQUIRE(sols.size() == 2);
    auto f2 = kz2.bialgebra.bialgebra.ctx->field();
    std::vector<CycScalar> corners{sols[0].matrix().at(0, 3),
                                   sols[1].matrix().at(0, 3)};
    CHECK(std::count(corners.begin(), corners.end(), CycScalar::one(f2)) ==
          1);
    CHECK(std::count(corners.begin(), corners.end(),
                     CycScalar::from_int(f2, -1)) == 1);
    // the exterior line admits exactly the palette's three coefficients
    auto line = build_exterior_line(5);
    auto odd = cqt_ansatz_solver(line.bialgebra,
                                 full_support(line.bialgebra.carrier()));
    REQUIRE(odd.size() == 3);
    auto fl = line.bialgebra.bialgebra.ctx->field();
    std::vector<CycScalar> alphas;
    for (const auto& r : odd) alphas.push_back(r.matrix().at(0, 3));
    for (long v : {0L, 1L, -1L})
        CHECK(std::count(alphas.begin(), alphas.end(),
                         CycScalar::from_int(fl, v)) == 1);

    CHECK_THROWS_AS(
        cqt_ansatz_solver(kz2.bialgebra, SupportPattern{{"1", "nope"}}),
        StructuralError);
}

TEST_CASE("pairing search: the family on the four-dimensional algebra") {
    auto cb = build_sweedler();
    auto f = cb.bialgebra.ctx->field();
    auto sols = cqt_ansatz_solver(cb, sweedler_support());
    REQUIRE(sols.size() == 3);

    // the one-parameter family: sign pairing on group-likes, odd block
    // (x(x)x, x(x)gx, gx(x)x, gx(x)gx) = (t, t, -t, t) for t in {0, 1, -1}
    std::vector<CycScalar> params;
    for (const auto& r : sols) {
        CHECK(r.matrix().at(0, 5) == CycScalar::from_int(f, -1));
        const CycScalar& t = r.matrix().at(0, 10);
        CHECK(r.matrix().at(0, 11) == t);
        CHECK(r.matrix().at(0, 14) == CycScalar::from_int(f, -1) * t);
        CHECK(r.matrix().at(0, 15) == t);
        params.push_back(t);
        CHECK(run_checks(check_cqt_all(cb, r, "found")).all_passed());
    }
    for (long v : {0L, 1L, -1L})
        CHECK(std::count(params.begin(), params.end(),
                         CycScalar::from_int(f, v)) == 1);
}
