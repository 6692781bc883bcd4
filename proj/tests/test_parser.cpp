#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"

using namespace recip;

TEST_CASE("parses the standard examples") {
    BiPoly p = parse_poly("y^2 - x^3 + x");
    CHECK(p.coeff(0, 2) == Rat(1));
    CHECK(p.coeff(3, 0) == Rat(-1));
    CHECK(p.coeff(1, 0) == Rat(1));
    CHECK(p.terms().size() == 3);

    p = parse_poly("x^3 + y^3 - 1");
    CHECK(p.coeff(3, 0) == Rat(1));
    CHECK(p.coeff(0, 3) == Rat(1));
    CHECK(p.coeff(0, 0) == Rat(-1));
    CHECK(p.terms().size() == 3);
}

TEST_CASE("rational coefficients, parentheses, explicit products") {
    BiPoly p = parse_poly("1/2 * x * y - (x + 2/3) * y^2");
    CHECK(p.coeff(1, 1) == Rat(1, 2));
    CHECK(p.coeff(1, 2) == Rat(-1));
    CHECK(p.coeff(0, 2) == Rat(-2, 3));

    CHECK(parse_poly("-(x - y)") == parse_poly("y - x"));
    CHECK(parse_poly("x^0") == BiPoly::constant(Rat(1)));
}

TEST_CASE("syntax errors carry a 1-based position inside the input") {
    try {
        parse_poly("x^");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.position == 3);
    }
    const std::vector<std::string> bad = {"", "x y", "2x", "x^-1", "x^(2)", "(x", "x +", "z + 1",
                                          "x ^ 1/2", "*x"};
    for (const auto& s : bad) {
        try {
            parse_poly(s);
            FAIL("expected SyntaxError on: ", s);
        } catch (const SyntaxError& e) {
            CHECK(e.position >= 1);
            CHECK(e.position <= s.size() + 1);
        }
    }
}

TEST_CASE("oversized exponents are rejected, not wrapped") {
    CHECK_THROWS_AS(parse_poly("x^4294967296"), SyntaxError);
    CHECK_THROWS_AS(parse_poly("x^99999999999999999999"), SyntaxError);
}

TEST_CASE("canonical formatting") {
    CHECK(format_poly(BiPoly()) == "0");
    CHECK(format_poly(parse_poly("y^2 - x^3")) == "-x^3 + y^2");
    CHECK(format_poly(parse_poly("y - 1/2 * x")) == "-1/2*x + y");
    CHECK(format_poly(parse_poly("x * y")) == "x*y");
}

TEST_CASE("property: parse(format(p)) == p on random polynomials") {
    auto res = testsupport::prop_parser_roundtrip();
    INFO(res.first_failure);
    CHECK(res.cases >= 200);
    CHECK(res.failures == 0);
}
