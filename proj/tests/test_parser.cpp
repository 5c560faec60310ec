#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qrs/parser.hpp"

using namespace qrs;

namespace {

std::mt19937 rng(90210);

Laurent random_coeff() {
    std::uniform_int_distribution<int> nt(1, 3), ex(-3, 3), num(-6, 6), den(1, 4);
    Laurent out;
    int n = nt(rng);
    for (int i = 0; i < n; ++i)
        out += Laurent::monomial(Rational(num(rng), den(rng)), Exp{ex(rng), ex(rng), 0, 0});
    return out;
}

PBWElement random_element(const Presentation& p) {
    std::uniform_int_distribution<int> nt(0, 3), e(0, 2);
    PBWElement out;
    int n = nt(rng);
    for (int i = 0; i < n; ++i) {
        ExpVec m(p.ngens(), 0);
        for (auto& x : m) x = e(rng);
        out.add_term(m, random_coeff());
    }
    return out;
}

}  // namespace

TEST_CASE("worked examples") {
    const Presentation& v = build_presentation(Algebra::V);
    CHECK(normal_form(parse("e1*e2 - r^2*e2*e1", v), v).str(v) == "X2");
    FreeElement sq = parse("(r+s)^2", v);
    REQUIRE(sq.terms().size() == 1);
    CHECK(sq.terms().begin()->first.empty());
    CHECK(sq.terms().begin()->second ==
          Laurent::rs(2, 0) + Laurent::rs(1, 1, Rational(2)) + Laurent::rs(0, 2));
    try {
        parse("e1 +* e2", v);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position == 4);
    }
}

TEST_CASE("unknown symbols are per-algebra") {
    const Presentation& u = build_presentation(Algebra::U);
    CHECK_THROWS_AS(parse("Z", u), UnknownSymbol);
    CHECK_THROWS_AS(parse("X4", u), UnknownSymbol);
    const Presentation& v = build_presentation(Algebra::V);
    CHECK(!parse("Z", v).is_zero());
    CHECK_THROWS_AS(parse("X3p", v), UnknownSymbol);
}

TEST_CASE("grammar corners") {
    const Presentation& v = build_presentation(Algebra::V);
    CHECK(parse("  - r ^ -2 * X1 ", v) ==
          FreeElement::word(-Laurent::rs(-2, 0), {0}));
    CHECK(normal_form(parse("1/2*Z - 1/2*Z", v), v).is_zero());
    CHECK_THROWS_AS(parse("X1^-1", v), ParseError);
    CHECK_THROWS_AS(parse("(r+s)^-1", v), ParseError);
    CHECK_THROWS_AS(parse("(e1", v), ParseError);
    CHECK_THROWS_AS(parse("3/0", v), ParseError);
    CHECK_THROWS_AS(parse("", v), ParseError);
    CHECK(parse("X1^0", v) == FreeElement::word(Laurent(1), {}));
    // derived names expand to their PBW values
    CHECK(normal_form(parse("Zp", v), v) == derived_element("Zp", v).value);
    CHECK(normal_form(parse("W", v), v) == derived_element("W", v).value);
}

TEST_CASE("coefficient print/parse round-trips") {
    const Presentation& v = build_presentation(Algebra::V);
    for (int it = 0; it < 1200; ++it) {
        Laurent c = random_coeff();
        FreeElement back = parse(c.str(), v);
        if (c.is_zero()) {
            CHECK(back.is_zero());
            continue;
        }
        REQUIRE(back.terms().size() == 1);
        CHECK(back.terms().begin()->second == c);
    }
}

TEST_CASE("element print/parse round-trips in both algebras") {
    for (Algebra a : {Algebra::U, Algebra::V}) {
        const Presentation& p = build_presentation(a);
        for (int it = 0; it < 600; ++it) {
            PBWElement x = random_element(p);
            PBWElement back = normal_form(parse(x.str(p), p), p);
            CHECK(back == x);
        }
    }
}
