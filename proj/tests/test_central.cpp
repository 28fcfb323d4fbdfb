#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "innertwist/central.hpp"

using namespace innertwist;

namespace {

Mat sparse(const FieldPtr& f, long rows, long cols,
           std::vector<std::tuple<long, long, long>> entries) {
    Mat m(f, rows, cols);
    for (auto [r, c, v] : entries) m.at(r, c) = CycScalar::from_int(f, v);
    return m;
}

// k[Z/2] = k{1, g}, trivially graded, g group-like, S = id.
HopfAlgebra kz2(const ContextPtr& ctx) {
    auto f = ctx->field();
    auto B = GradedObject::simple("B", {{"1", {}}, {"g", {}}});
    auto mult = GradedMorphism(
        B.tensor(B), B,
        sparse(f, 2, 4, {{0, 0, 1}, {1, 1, 1}, {1, 2, 1}, {0, 3, 1}}));
    auto unit = GradedMorphism(GradedObject(), B, sparse(f, 2, 1, {{0, 0, 1}}));
    auto delta = GradedMorphism(B, B.tensor(B),
                                sparse(f, 4, 2, {{0, 0, 1}, {3, 1, 1}}));
    auto counit = GradedMorphism(B, GradedObject(),
                                 sparse(f, 1, 2, {{0, 0, 1}, {0, 1, 1}}));
    return HopfAlgebra(Bialgebra(ctx, B, mult, unit, delta, counit),
                       ctx->identity(B));
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

const CheckResult* find(const Report& r, const std::string& anchor) {
    for (const CheckResult& c : r.results())
        if (c.anchor == anchor) return &c;
    return nullptr;
}

} // namespace

TEST_CASE("tautological half-braiding on k[Z/2] passes the central suite") {
    auto ctx = make_trivial_context(4);
    auto cb = with_flip(kz2(ctx));
    CHECK(cb.innertwist() == ctx->braiding(cb.carrier(), cb.carrier()));

    auto axioms = run_checks(check_central_axioms(cb, "B"));
    INFO(axioms.render_text());
    CHECK(axioms.all_passed());
    CHECK(axioms.results().size() == 5);

    auto derived = run_checks(check_derived_sigma_identities(cb, "B"));
    INFO(derived.render_text());
    CHECK(derived.all_passed());
    CHECK(derived.results().size() == 5);

    CHECK(run_checks(check_schauenburg(cb, "B")).all_passed());
    CHECK(is_commutative(cb));
}

TEST_CASE("hexagon extension and explicit components agree") {
    auto ctx = make_trivial_context(4);
    auto h = kz2(ctx);
    auto B = h.bialgebra.carrier;
    auto sigma = HalfBraiding::tautological(ctx, B);

    CHECK(sigma.at(GradedObject()) == ctx->identity(B));
    auto id_b = ctx->identity(B);
    CHECK(sigma.at(B.tensor(B)) ==
          id_b.tensor(sigma.at(B)) * sigma.at(B).tensor(id_b));

    auto expl = HalfBraiding::from_components(ctx, B,
                                              {{"B", ctx->braiding(B, B)}});
    CHECK(expl.at(B) == sigma.at(B));
    CHECK(expl.at(B.tensor(B)) == sigma.at(B.tensor(B)));

    auto M = GradedObject::simple("M", {{"m", {}}});
    CHECK_THROWS_AS(expl.at(M), StructuralError);
    CHECK_THROWS_AS(HalfBraiding::from_components(
                        ctx, B, {{"B", ctx->identity(B)}})
                        .at(B),
                    StructuralError);
}

TEST_CASE("exterior line is braided-commutative and central") {
    auto ctx = super_context();
    auto h = exterior_line(ctx, "v");
    auto report = run_checks(check_hopf(h, "L"));
    INFO(report.render_text());
    CHECK(report.all_passed());

    auto cb = with_flip(h);
    CHECK(run_checks(check_central_axioms(cb, "L")).all_passed());
    CHECK(run_checks(check_derived_sigma_identities(cb, "L")).all_passed());
    CHECK(run_checks(check_schauenburg(cb, "L")).all_passed());
    CHECK(is_commutative(cb));
}

TEST_CASE("opposite antipodes agree with S on commutative examples") {
    auto trivial = make_trivial_context(4);
    for (auto cb : {with_flip(kz2(trivial)),
                    with_flip(exterior_line(super_context(), "v"))}) {
        auto sbar = opposite_antipode(cb);
        auto sbar_alt = opposite_antipode_alt(cb);
        REQUIRE(sbar.has_value());
        REQUIRE(sbar_alt.has_value());
        CHECK(*sbar == *cb.antipode);
        CHECK(*sbar_alt == *cb.antipode);

        // S-bar really is the antipode of the opposite-product bialgebra
        auto op = opposite_product(cb);
        CHECK(op.bialgebra.mult == cb.bialgebra.mult); // commutative
        auto oph = HopfAlgebra(op.bialgebra, *sbar);
        CHECK(run_checks(check_hopf(oph, "B-op")).all_passed());
        auto opalt = opposite_product_alt(cb);
        auto opalth = HopfAlgebra(opalt.bialgebra, *sbar_alt);
        CHECK(run_checks(check_hopf(opalth, "B-op'")).all_passed());

        // the two opposites undo each other
        CHECK(opposite_product_alt(op).bialgebra.mult == cb.bialgebra.mult);
        CHECK(opposite_product(opalt).bialgebra.mult == cb.bialgebra.mult);
    }
}

TEST_CASE("corrupting one half-braiding entry trips Z1/Z5 but not Z4") {
    auto ctx = make_trivial_context(4);
    auto h = kz2(ctx);
    auto B = h.bialgebra.carrier;
    Mat m = ctx->braiding(B, B).matrix();
    long gg = B.tensor(B).index_of({1, 1});
    m.at(gg, gg) = CycScalar::from_int(ctx->field(), 2);
    auto bad = CentralBialgebra(
        h.bialgebra,
        HalfBraiding::from_components(
            ctx, B, {{"B", GradedMorphism(B.tensor(B), B.tensor(B), m)}}),
        h.antipode);

    // left multiplication by g commutes with any natural sigma
    auto by_g = GradedMorphism(B, B,
                               sparse(ctx->field(), 2, 2, {{1, 0, 1}, {0, 1, 1}}));
    auto report = run_checks(check_central_axioms(
        bad, "B", {bad.bialgebra.as_coalgebra()}, {{"g.", by_g}}));
    INFO(report.render_text());
    CHECK(find(report, "Z1")->status == CheckStatus::Fail);
    CHECK(find(report, "Z2")->status == CheckStatus::Fail);
    CHECK(find(report, "Z2")->detail.find("g.") != std::string::npos);
    CHECK(find(report, "Z3")->status == CheckStatus::Pass); // still invertible
    CHECK(find(report, "Z4")->status == CheckStatus::Pass);
    CHECK(find(report, "Z5")->status == CheckStatus::Fail);
}

TEST_CASE("tensor product of central bialgebras") {
    auto ctx = make_trivial_context(4);
    auto a = with_flip(kz2(ctx));
    auto t = tensor_central_bialgebra(a, a);
    CHECK(t.carrier().dim() == 4);
    auto report = run_checks(check_bialgebra(t.bialgebra, "B(x)B"));
    INFO(report.render_text());
    CHECK(report.all_passed());
    CHECK(run_checks(check_central_axioms(t, "B(x)B")).all_passed());
    REQUIRE(t.antipode.has_value());
    CHECK(run_checks(check_hopf(*t.as_hopf(), "B(x)B")).all_passed());

    auto sctx = super_context();
    auto v = with_flip(exterior_line(sctx, "v"));
    auto w = with_flip(exterior_line(sctx, "w"));
    auto vw = tensor_central_bialgebra(v, w);
    CHECK(run_checks(check_bialgebra(vw.bialgebra, "v(x)w")).all_passed());
    CHECK(run_checks(check_central_axioms(vw, "v(x)w")).all_passed());
    CHECK(run_checks(check_hopf(*vw.as_hopf(), "v(x)w")).all_passed());
    CHECK(run_checks(check_derived_sigma_identities(vw, "v(x)w")).all_passed());

    // with tautological half-braidings the product is the braided tensor
    // bialgebra
    auto plain = tensor_bialgebra(v.bialgebra, w.bialgebra);
    CHECK(vw.bialgebra.mult == plain.mult);
    CHECK(vw.bialgebra.delta == plain.delta);
}

TEST_CASE("missing antipode turns antipode-dependent checks into skips") {
    auto ctx = make_trivial_context(4);
    auto h = kz2(ctx);
    auto cb = CentralBialgebra(
        h.bialgebra, HalfBraiding::tautological(ctx, h.bialgebra.carrier));
    auto derived = run_checks(check_derived_sigma_identities(cb, "B"));
    CHECK(derived.all_passed()); // skips don't fail
    CHECK(derived.skips() == 1);
    CHECK(find(derived, "S-sigma commute")->status == CheckStatus::Skip);
    auto sch = run_checks(check_schauenburg(cb, "B"));
    CHECK(sch.skips() == 1);
    CHECK(!opposite_antipode(cb).has_value());
}

TEST_CASE("structural mismatches are rejected") {
    auto ctx = make_trivial_context(4);
    auto h = kz2(ctx);
    auto M = GradedObject::simple("M", {{"m", {}}});
    CHECK_THROWS_AS(CentralBialgebra(h.bialgebra,
                                     HalfBraiding::tautological(ctx, M)),
                    StructuralError);
    auto other = super_context();
    CHECK_THROWS_AS(
        tensor_half_braiding(
            HalfBraiding::tautological(ctx, h.bialgebra.carrier),
            HalfBraiding::tautological(other, GradedObject::simple(
                                                  "L", {{"1", {0}}}))),
        StructuralError);
}
