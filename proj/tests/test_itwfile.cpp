#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "innertwist/examples.hpp"
#include "innertwist/itwfile.hpp"

using namespace innertwist;

namespace {

int line_of(const std::string& text) {
    try {
        parse_structure_text(text);
    } catch (const ParseError& e) {
        return e.line;
    }
    return -1;
}

} // namespace

TEST_CASE("empty and near-empty files") {
    auto s = parse_structure_text("");
    CHECK(!s.ctx);
    CHECK(s.objects.empty());
    CHECK(s.morphisms.empty());
    CHECK(!s.bialgebra);

    s = parse_structure_text("# only a comment\n\n");
    CHECK(!s.ctx);

    s = parse_structure_text("field 5\n");
    REQUIRE(s.ctx);
    CHECK(s.ctx->field()->order() == 5);
    CHECK(s.ctx->group().rank() == 0);
}

TEST_CASE("the shipped demo equals the programmatic builder") {
    auto s = parse_structure_file(DATA_DIR "/kz3.itw");
    REQUIRE(s.bialgebra);
    REQUIRE(s.pairing);
    REQUIRE(s.bialgebra->antipode);

    auto ex = build_group_algebra_cqt(3, 1);
    const Bialgebra& lhs = s.bialgebra->bialgebra;
    const Bialgebra& rhs = ex.bialgebra.bialgebra;
    CHECK(lhs.carrier == rhs.carrier);
    CHECK(lhs.mult == rhs.mult);
    CHECK(lhs.unit == rhs.unit);
    CHECK(lhs.delta == rhs.delta);
    CHECK(lhs.counit == rhs.counit);
    CHECK(*s.bialgebra->antipode == *ex.bialgebra.antipode);
    CHECK(*s.pairing == ex.pairing);
    CHECK(s.bialgebra->innertwist() == ex.bialgebra.innertwist());
    CHECK(s.bialgebra_name == "B");
}

TEST_CASE("graded declarations: super line round trip") {
    const char* text =
        "field 2\n"
        "group 2\n"
        "chi 1\n"
        "object L\n"
        "basis 1 0\n"
        "basis v 1\n"
        "morphism m L*L -> L\n"
        "entry 0 0 1\n"
        "entry 1 1 1\n"
        "entry 1 2 1\n"
        "morphism u I -> L\n"
        "entry 0 0 1\n"
        "morphism d L -> L*L\n"
        "entry 0 0 1\n"
        "entry 1 1 1\n"
        "entry 2 1 1\n"
        "morphism e L -> I\n"
        "entry 0 0 1\n"
        "morphism S L -> L\n"
        "entry 0 0 1\n"
        "entry 1 1 -1\n"
        "morphism r L*L -> I\n"
        "entry 0 0 1\n"
        "entry 0 3 2\n"
        "bialgebra L mult=m unit=u delta=d counit=e\n"
        "antipode S\n"
        "cqt r\n";
    auto s = parse_structure_text(text);
    REQUIRE(s.bialgebra);
    auto ex = build_exterior_line(2);
    CHECK(s.bialgebra->bialgebra.carrier == ex.bialgebra.carrier());
    CHECK(s.bialgebra->bialgebra.mult == ex.bialgebra.bialgebra.mult);
    CHECK(s.bialgebra->bialgebra.delta == ex.bialgebra.bialgebra.delta);
    CHECK(*s.bialgebra->antipode == *ex.bialgebra.antipode);
    CHECK(*s.pairing == ex.pairing);
    // the context braids v (x) v to -v (x) v
    auto L = s.bialgebra->carrier();
    auto f = s.ctx->field();
    CHECK(s.ctx->braiding(L, L).matrix().at(3, 3) ==
          CycScalar::from_int(f, -1));
}

TEST_CASE("scalar expressions reach the matrix") {
    const char* text =
        "field 12\n"
        "object P\n"
        "basis p\n"
        "morphism f P -> P\n"
        "entry 0 0 (1/2 + z^3) * z^-3 - 1/2 * z^9   # comments allowed here\n";
    auto s = parse_structure_text(text);
    auto f = s.ctx->field();
    // z^-3 = z^9 at order 12, so the value is z^9/2 + 1 - z^9/2 = 1
    CHECK(s.morphisms.at("f").matrix().at(0, 0) == CycScalar::one(f));
}

TEST_CASE("errors carry their source location") {
    // syntax: unknown directive
    CHECK(line_of("fields 3\n") == 1);
    // field after object
    CHECK(line_of("field 2\nobject A\nbasis a\nfield 3\n") == 4);
    // basis arity vs group rank
    CHECK(line_of("field 2\ngroup 2\nobject A\nbasis a\n") == 4);
    // unknown object in a morphism type
    CHECK(line_of("field 2\nobject A\nbasis a\nmorphism f A -> Q\n") == 4);
    // entry out of range
    CHECK(line_of("field 2\nobject A\nbasis a\n"
                  "morphism f A -> A\nentry 0 1 1\n") == 5);
    // entry set twice
    CHECK(line_of("field 2\nobject A\nbasis a\nmorphism f A -> A\n"
                  "entry 0 0 1\nentry 0 0 2\n") == 6);
    // unknown morphism name in the bialgebra directive
    CHECK(line_of("field 2\nobject A\nbasis a\nmorphism f A -> A\n"
                  "bialgebra A mult=f unit=f delta=f counit=f\n") == 5);
    // 'sigma' only supports the flip
    CHECK(line_of("field 2\nsigma fancy\n") == 2);
    // object with no basis vectors: reported at its declaration
    CHECK(line_of("field 2\nobject A\nobject B\nbasis b\n") == 2);

    // unreadable file is a structural error, not a parse error
    CHECK_THROWS_AS(parse_structure_file("/nonexistent.itw"),
                    StructuralError);
}

TEST_CASE("a non-grade-preserving entry is a semantic error naming it") {
    const char* text =
        "field 2\n"
        "group 2\n"
        "object L\n"
        "basis even 0\n"
        "basis odd 1\n"
        "morphism f L -> L\n"
        "entry 1 0 1\n";
    try {
        parse_structure_text(text);
        FAIL("expected a ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 7);
        std::string msg = e.what();
        CHECK(msg.find("entry (1, 0)") != std::string::npos);
        CHECK(msg.find("grading") != std::string::npos);
    }

    // a zero entry between different degrees is fine; making it nonzero
    // afterwards still trips the grading check
    const char* zero =
        "field 2\ngroup 2\nobject L\nbasis even 0\nbasis odd 1\n"
        "morphism f L -> L\nentry 1 0 0\nentry 1 0 1\n";
    CHECK(line_of(zero) == 8);
}

TEST_CASE("scalar parse errors point at the offending column") {
    try {
        parse_structure_text("field 3\nobject P\nbasis p\n"
                             "morphism f P -> P\nentry 0 0 1 + &\n");
        FAIL("expected a ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 5);
        // the '&' sits at 1-based column 15 of "entry 0 0 1 + &"
        CHECK(e.column == 15);
    }
}
