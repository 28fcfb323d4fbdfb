#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "innertwist/cqt.hpp"

using namespace innertwist;

namespace {

Mat sparse(const FieldPtr& f, long rows, long cols,
           std::vector<std::tuple<long, long, long>> entries) {
    Mat m(f, rows, cols);
    for (auto [r, c, v] : entries) m.at(r, c) = CycScalar::from_int(f, v);
    return m;
}

// k[Z/n] = k{1, g, ..., g^{n-1}}, trivially graded, g group-like,
// S(g^i) = g^{-i}.
HopfAlgebra kzn(const ContextPtr& ctx, long n) {
    auto f = ctx->field();
    std::vector<BasisVector> basis;
    for (long i = 0; i < n; ++i)
        basis.push_back({i == 0 ? "1" : "g" + std::to_string(i), {}});
    auto B = GradedObject::simple("B", std::move(basis));
    Mat mult(f, n, n * n);
    Mat delta(f, n * n, n);
    Mat counit(f, 1, n);
    Mat antipode(f, n, n);
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n; ++j)
            mult.at((i + j) % n, i * n + j) = CycScalar::one(f);
        delta.at(i * n + i, i) = CycScalar::one(f);
        counit.at(0, i) = CycScalar::one(f);
        antipode.at((n - i) % n, i) = CycScalar::one(f);
    }
    Bialgebra b(ctx, B, ctx->morphism(B.tensor(B), B, mult),
                ctx->morphism(GradedObject(), B, sparse(f, n, 1, {{0, 0, 1}})),
                ctx->morphism(B, B.tensor(B), delta),
                ctx->morphism(B, GradedObject(), counit));
    return HopfAlgebra(b, ctx->morphism(B, B, antipode));
}

// The exterior algebra on one odd generator in super vector spaces:
// k{1, v}, v odd, primitive, v^2 = 0, S(v) = -v.
HopfAlgebra exterior_line(const ContextPtr& ctx, const std::string& v) {
    auto f = ctx->field();
    auto L = GradedObject::simple(v, {{"1", {0}}, {v, {1}}});
    auto mult = GradedMorphism(
        L.tensor(L), L, sparse(f, 2, 4, {{0, 0, 1}, {1, 1, 1}, {1, 2, 1}}));
    auto unit = GradedMorphism(GradedObject(), L, sparse(f, 2, 1, {{0, 0, 1}}));
    auto delta = GradedMorphism(
        L, L.tensor(L), sparse(f, 4, 2, {{0, 0, 1}, {1, 1, 1}, {2, 1, 1}}));
    auto counit =
        GradedMorphism(L, GradedObject(), sparse(f, 1, 2, {{0, 0, 1}}));
    auto antipode =
        GradedMorphism(L, L, sparse(f, 2, 2, {{0, 0, 1}, {1, 1, -1}}));
    return HopfAlgebra(Bialgebra(ctx, L, mult, unit, delta, counit), antipode);
}

ContextPtr super_context() {
    auto f = CyclotomicField::make(2);
    GradingGroup g({2});
    return make_context(f, g, Bicharacter::from_exponents(f, g, {{1}}));
}

CentralBialgebra with_flip(const HopfAlgebra& h) {
    return CentralBialgebra(
        h.bialgebra,
        HalfBraiding::tautological(h.bialgebra.ctx, h.bialgebra.carrier),
        h.antipode);
}

// r(g^i (x) g^j) = zeta^{k*i*j} on k[Z/n].
GradedMorphism power_pairing(const ContextPtr& ctx, const GradedObject& B,
                             long n, long k) {
    auto f = ctx->field();
    Mat row(f, 1, n * n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            row.at(0, i * n + j) =
                CycScalar::root(f, ((k * i * j) % n + n) % n);
    return ctx->morphism(B.tensor(B), GradedObject(), row);
}

const CheckResult* find(const Report& r, const std::string& anchor) {
    for (const CheckResult& c : r.results())
        if (c.anchor == anchor) return &c;
    return nullptr;
}

} // namespace

TEST_CASE("trivial pairing is coquasitriangular and yields the flip") {
    auto ctx = make_trivial_context(4);
    auto cb = with_flip(kzn(ctx, 2));
    auto r = cb.bialgebra.counit.tensor(cb.bialgebra.counit);

    auto report = run_checks(check_cqt_all(cb, r, "B"));
    INFO(report.render_text());
    CHECK(report.all_passed());
    CHECK(report.skips() == 0);
    CHECK(report.results().size() == 22);

    auto q = make_cqt(cb, r);
    REQUIRE(q.has_value());
    CHECK(q->r_star == r);
    CHECK(r_sigma_commute(*q));
    CHECK(*q->u == cb.bialgebra.counit);
    CHECK(*q->u_star == cb.bialgebra.counit);
    CHECK(yang_baxter_operator(*q) ==
          ctx->braiding(cb.carrier(), cb.carrier()));
}

TEST_CASE("bicharacter pairing on k[Z/3]: full suite and closed forms") {
    auto ctx = make_trivial_context(3);
    auto f = ctx->field();
    auto cb = with_flip(kzn(ctx, 3));
    auto B = cb.carrier();
    auto r = power_pairing(ctx, B, 3, 1);

    auto report = run_checks(check_cqt_all(cb, r, "k[Z/3]"));
    INFO(report.render_text());
    CHECK(report.all_passed());
    CHECK(report.skips() == 0);

    auto q = make_cqt(cb, r);
    REQUIRE(q.has_value());

    // r*(g^i (x) g^j) = zeta^{-ij}
    CHECK(q->r_star == power_pairing(ctx, B, 3, -1));
    // u(g^i) = zeta^{-i^2}, u*(g^i) = zeta^{+i^2}
    Mat u_row(f, 1, 3), us_row(f, 1, 3);
    for (long i = 0; i < 3; ++i) {
        u_row.at(0, i) = CycScalar::root(f, ((-i * i) % 3 + 3) % 3);
        us_row.at(0, i) = CycScalar::root(f, (i * i) % 3);
    }
    CHECK(*q->u == ctx->morphism(B, GradedObject(), u_row));
    CHECK(*q->u_star == ctx->morphism(B, GradedObject(), us_row));

    // everything is group-like, so the Yang-Baxter operator collapses to
    // sigma = flip, and both antipode composites are S itself (S^2 = id)
    CHECK(yang_baxter_operator(*q) == ctx->braiding(B, B));
    CHECK(antipode_square_via_u(*q) == ctx->identity(B));
    CHECK(antipode_inverse_via_u(*q) == *cb.antipode);
    CHECK(r_sigma_commute(*q));
}

TEST_CASE("sign pairing on k[Z/2]: R equals the flip, +1 on g (x) g") {
    auto ctx = make_trivial_context(4);
    auto f = ctx->field();
    auto cb = with_flip(kzn(ctx, 2));
    auto B = cb.carrier();
    Mat row(f, 1, 4);
    for (long i = 0; i < 2; ++i)
        for (long j = 0; j < 2; ++j)
            row.at(0, 2 * i + j) = CycScalar::from_int(f, i * j == 1 ? -1 : 1);
    auto r = ctx->morphism(B.tensor(B), GradedObject(), row);

    auto report = run_checks(check_cqt_all(cb, r, "k[Z/2] sign"));
    INFO(report.render_text());
    CHECK(report.all_passed());

    auto q = make_cqt(cb, r);
    REQUIRE(q.has_value());
    auto op = yang_baxter_operator(*q);
    CHECK(op == ctx->braiding(B, B));
    // the pairing scalars cancel on group-likes: entry at (g (x) g) is +1
    CHECK(op.matrix().at(3, 3) == CycScalar::one(f));
    CHECK(op.matrix().at(1, 2) == CycScalar::one(f));
    CHECK(op.matrix().at(2, 1) == CycScalar::one(f));

    // with the trivial grading the flip slides past any pairing...
    CHECK(r_sigma_commute(*q));
    // ...but a twisted half-braiding sigma(g^i (x) g^j) = (-1)^{ij} g^j (x) g^i
    // does not: the sign meets r on one side only.
    auto twisted = CentralBialgebra(
        cb.bialgebra,
        HalfBraiding::from_components(
            ctx, B,
            {{"B", ctx->morphism(B.tensor(B), B.tensor(B),
                                 sparse(f, 4, 4,
                                        {{0, 0, 1},
                                         {2, 1, 1},
                                         {1, 2, 1},
                                         {3, 3, -1}}))}}),
        cb.antipode);
    auto tq = make_cqt(twisted, r);
    REQUIRE(tq.has_value());
    CHECK(!r_sigma_commute(*tq));
}

TEST_CASE("a non-bicharacter pairing fails exactly CQT2") {
    auto ctx = make_trivial_context(3);
    auto f = ctx->field();
    auto cb = with_flip(kzn(ctx, 3));
    auto B = cb.carrier();
    Mat row(f, 1, 9);
    for (long i = 0; i < 3; ++i)
        for (long j = 0; j < 3; ++j)
            row.at(0, 3 * i + j) = CycScalar::root(f, (i + j) % 3);
    auto r = ctx->morphism(B.tensor(B), GradedObject(), row);

    auto report = run_checks(check_cqt(cb, r, "bad"));
    INFO(report.render_text());
    CHECK(find(report, "CQT1")->status == CheckStatus::Pass);
    CHECK(find(report, "CQT2a")->status == CheckStatus::Fail);
    CHECK(find(report, "CQT2b")->status == CheckStatus::Fail);
    CHECK(find(report, "CQT3")->status == CheckStatus::Pass);
}

TEST_CASE("a corrupted pairing against the unit is caught") {
    auto ctx = make_trivial_context(3);
    auto f = ctx->field();
    auto cb = with_flip(kzn(ctx, 3));
    auto B = cb.carrier();
    auto r = power_pairing(ctx, B, 3, 1);
    Mat row = r.matrix();
    row.at(0, 1) = CycScalar::root(f, 1); // r(1 (x) g) = zeta, not 1
    auto bad = ctx->morphism(B.tensor(B), GradedObject(), row);

    auto report = run_checks(check_cqt_all(cb, bad, "corrupted"));
    INFO(report.render_text());
    CHECK(!report.all_passed());
    CHECK(find(report, "unit pairings (r)")->status == CheckStatus::Fail);
}

TEST_CASE("exterior line: the odd self-pairing passes the full suite") {
    auto ctx = super_context();
    auto f = ctx->field();
    auto cb = with_flip(exterior_line(ctx, "v"));
    auto L = cb.carrier();
    Mat row(f, 1, 4);
    row.at(0, 0) = CycScalar::one(f);
    row.at(0, 3) = CycScalar::from_int(f, 3); // r(v (x) v) = 3
    auto r = ctx->morphism(L.tensor(L), GradedObject(), row);

    auto report = run_checks(check_cqt_all(cb, r, "Lambda(v)"));
    INFO(report.render_text());
    CHECK(report.all_passed());
    CHECK(report.skips() == 0);

    auto q = make_cqt(cb, r);
    REQUIRE(q.has_value());
    CHECK(q->r_star == r);               // sign of sigma cancels r_inv's -3
    CHECK(r_sigma_commute(*q));          // r is even, so no sign survives
    CHECK(*q->u == cb.bialgebra.counit); // S^2 = id here
    CHECK(antipode_square_via_u(*q) == ctx->identity(L));
}

TEST_CASE("a pairing with no convolution inverse fails CQT3 and skips") {
    auto ctx = make_trivial_context(4);
    auto cb = with_flip(kzn(ctx, 2));
    auto B = cb.carrier();
    auto zero = ctx->zero_morphism(B.tensor(B), GradedObject());

    CHECK(!make_cqt(cb, zero).has_value());
    auto report = run_checks(check_cqt_all(cb, zero, "zero"));
    INFO(report.render_text());
    CHECK(report.results().size() == 22);
    CHECK(report.failures() == 1);
    CHECK(report.skips() == 18);
    CHECK(find(report, "CQT3")->status == CheckStatus::Fail);
    CHECK(find(report, "CQT3")->detail == "r is not *-invertible");
    CHECK(find(report, "YBE")->status == CheckStatus::Skip);
}

TEST_CASE("without an antipode the Hopf-level checks skip visibly") {
    auto ctx = make_trivial_context(4);
    auto h = kzn(ctx, 2);
    CentralBialgebra cb(h.bialgebra,
                        HalfBraiding::tautological(ctx, h.bialgebra.carrier));
    auto r = cb.bialgebra.counit.tensor(cb.bialgebra.counit);

    auto report = run_checks(check_cqt_all(cb, r, "no S"));
    INFO(report.render_text());
    CHECK(report.failures() == 0);
    CHECK(report.skips() == 9);
    CHECK(find(report, "Lemma rrs (i)")->status == CheckStatus::Skip);
    CHECK(find(report, "Lemma rrs (iii)")->status == CheckStatus::Pass);
    CHECK(find(report, "S^2 theorem")->status == CheckStatus::Skip);

    auto q = make_cqt(cb, r);
    REQUIRE(q.has_value());
    CHECK(!q->u.has_value());
    CHECK_THROWS_AS(compute_u(*q), StructuralError);
    CHECK_THROWS_AS(antipode_square_via_u(*q), StructuralError);
}

TEST_CASE("the bialgebra-level subset omits antipode checks entirely") {
    auto ctx = make_trivial_context(3);
    auto cb = with_flip(kzn(ctx, 3));
    auto r = power_pairing(ctx, cb.carrier(), 3, 1);

    auto report = run_checks(check_cqt_all(cb, r, "subset", false));
    INFO(report.render_text());
    CHECK(report.all_passed());
    CHECK(report.results().size() == 13);
    CHECK(find(report, "S^2 theorem") == nullptr);
    CHECK(find(report, "Lemma rrs (i)") == nullptr);
    CHECK(find(report, "Lemma rrs (iii)") != nullptr);
    CHECK(find(report, "YBE") != nullptr);
}

TEST_CASE("pairing type mismatches are structural errors") {
    auto ctx = make_trivial_context(4);
    auto cb = with_flip(kzn(ctx, 2));
    CHECK_THROWS_AS(make_cqt(cb, cb.bialgebra.counit), StructuralError);
    CHECK_THROWS_AS(check_cqt(cb, cb.bialgebra.mult, "bad type"),
                    StructuralError);
}
