#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "innertwist/hopf.hpp"

using namespace innertwist;

namespace {

Mat sparse(const FieldPtr& f, long rows, long cols,
           std::vector<std::tuple<long, long, long>> entries) {
    Mat m(f, rows, cols);
    for (auto [r, c, v] : entries) m.at(r, c) = CycScalar::from_int(f, v);
    return m;
}

// The group algebra k[Z/2] = k{1, g}, trivially graded, with its usual Hopf
// structure (g group-like, S = id since g^-1 = g).
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
    Bialgebra b(ctx, B, mult, unit, delta, counit);
    return HopfAlgebra(b, ctx->identity(B));
}

// The coalgebra of the exterior line in super vector spaces: k{1, v} with v
// odd and primitive.
Coalgebra exterior_line_coalgebra(const ContextPtr& ctx, const std::string& v) {
    auto f = ctx->field();
    auto L = GradedObject::simple(v, {{"1", {0}}, {v, {1}}});
    auto delta = GradedMorphism(
        L, L.tensor(L), sparse(f, 4, 2, {{0, 0, 1}, {1, 1, 1}, {2, 1, 1}}));
    auto counit =
        GradedMorphism(L, GradedObject(), sparse(f, 1, 2, {{0, 0, 1}}));
    return Coalgebra(ctx, L, delta, counit);
}

bool all_pass(const CheckList& checks) {
    return run_checks(checks).all_passed();
}

const CheckResult* find(const Report& r, const std::string& anchor) {
    for (const CheckResult& c : r.results())
        if (c.anchor == anchor) return &c;
    return nullptr;
}

} // namespace

TEST_CASE("group algebra k[Z/2] is a Hopf algebra") {
    auto ctx = make_trivial_context(4);
    auto h = kz2(ctx);
    auto report = run_checks(check_hopf(h, "B"));
    INFO(report.render_text());
    CHECK(report.all_passed());
    CHECK(report.results().size() == 10);
}

TEST_CASE("solve_antipode recovers the antipode and detects its absence") {
    auto ctx = make_trivial_context(4);
    auto h = kz2(ctx);
    auto s = solve_antipode(h.bialgebra);
    REQUIRE(s.has_value());
    CHECK(*s == h.antipode);

    // the idempotent-monoid bialgebra k{1, s | s^2 = s, s group-like} has no
    // antipode: S(s)s = 1 would make s invertible
    auto f = ctx->field();
    auto M = GradedObject::simple("M", {{"1", {}}, {"s", {}}});
    Bialgebra nohopf(
        ctx, M,
        GradedMorphism(M.tensor(M), M,
                       sparse(f, 2, 4, {{0, 0, 1}, {1, 1, 1}, {1, 2, 1}, {1, 3, 1}})),
        GradedMorphism(GradedObject(), M, sparse(f, 2, 1, {{0, 0, 1}})),
        GradedMorphism(M, M.tensor(M), sparse(f, 4, 2, {{0, 0, 1}, {3, 1, 1}})),
        GradedMorphism(M, GradedObject(), sparse(f, 1, 2, {{0, 0, 1}, {0, 1, 1}})));
    CHECK(all_pass(check_bialgebra(nohopf, "M")));
    CHECK(!solve_antipode(nohopf).has_value());
}

TEST_CASE("corrupted comultiplication is diagnosed, not rejected") {
    auto ctx = make_trivial_context(4);
    auto h = kz2(ctx);
    Bialgebra bad = h.bialgebra;
    bad.delta.matrix().at(0, 1) =
        bad.delta.matrix().at(0, 1) + CycScalar::one(ctx->field());
    auto report = run_checks(check_bialgebra(bad, "B"));
    CHECK(report.failures() > 0);
    auto* counit = find(report, "counit");
    REQUIRE(counit != nullptr);
    CHECK(counit->status == CheckStatus::Fail);
    CHECK(counit->detail.find("g") != std::string::npos);
}

TEST_CASE("braided tensor coalgebra on two exterior lines") {
    auto f = CyclotomicField::make(2);
    GradingGroup g({2});
    auto ctx = make_context(f, g, Bicharacter::from_exponents(f, g, {{1}}));
    auto cv = exterior_line_coalgebra(ctx, "v");
    auto cw = exterior_line_coalgebra(ctx, "w");
    auto cvw = tensor_coalgebra(cv, cw);
    CHECK(all_pass(check_coalgebra(cvw, "v(x)w")));

    // the braiding inserts the super sign: delta(v (x) w) contains
    // -(1 (x) w)(x)(v (x) 1)
    long row = cvw.carrier.tensor(cvw.carrier).index_of({0, 1, 1, 0});
    long col = cvw.carrier.index_of({1, 1});
    CHECK(cvw.delta.matrix().at(row, col) == CycScalar::from_int(f, -1));

    // iterating in either association gives the same threefold coalgebra
    auto left = tensor_coalgebra(cvw, cv);
    auto right = tensor_coalgebra(cv, tensor_coalgebra(cw, cv));
    CHECK(left.delta == right.delta);
    CHECK(left.counit == right.counit);
    CHECK(all_pass(check_coalgebra(left, "v(x)w(x)v")));
}

TEST_CASE("convolution algebra") {
    auto ctx = make_trivial_context(4);
    auto h = kz2(ctx);
    auto c = h.bialgebra.as_coalgebra();
    auto a = h.bialgebra.as_algebra();
    auto f = ctx->field();
    auto id = ctx->identity(h.bialgebra.carrier);

    // S * id = unit counit = id * S
    auto eta_eps = h.bialgebra.unit * h.bialgebra.counit;
    CHECK(convolve(c, a, h.antipode, id) == eta_eps);
    CHECK(convolve(c, a, id, h.antipode) == eta_eps);

    // counit is the convolution unit, also against morphism-valued factors
    CHECK(convolve(c, a, h.bialgebra.counit, id) == id);
    CHECK(convolve(c, a, id, h.bialgebra.counit) == id);

    // the sign character is convolution-invertible (it squares to counit)
    auto chi = GradedMorphism(h.bialgebra.carrier, GradedObject(),
                              sparse(f, 1, 2, {{0, 0, 1}, {0, 1, -1}}));
    CHECK(convolve(c, a, chi, chi) == h.bialgebra.counit);
    auto inv = convolution_inverse(c, chi);
    REQUIRE(inv.has_value());
    CHECK(*inv == chi);

    // a functional vanishing on a group-like has no convolution inverse
    auto degenerate = GradedMorphism(h.bialgebra.carrier, GradedObject(),
                                     sparse(f, 1, 2, {{0, 0, 1}}));
    CHECK(!convolution_inverse(c, degenerate).has_value());

    // convolution inverse of the counit is the counit
    auto epsinv = convolution_inverse(c, h.bialgebra.counit);
    REQUIRE(epsinv.has_value());
    CHECK(*epsinv == h.bialgebra.counit);
}

TEST_CASE("type validation at construction") {
    auto ctx = make_trivial_context(4);
    auto h = kz2(ctx);
    auto B = h.bialgebra.carrier;
    // counit with the wrong target type
    CHECK_THROWS_AS(Coalgebra(ctx, B, h.bialgebra.delta, ctx->identity(B)),
                    StructuralError);
    // multiplication with the wrong source
    CHECK_THROWS_AS(Algebra(ctx, B, h.bialgebra.unit, h.bialgebra.unit),
                    StructuralError);
}
