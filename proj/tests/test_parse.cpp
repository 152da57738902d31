#include <vector>

#include "doctest.h"
#include "ratsearch/parse.hpp"

using namespace ratsearch;

namespace {
const VarListPtr XY = make_vars({"x", "y"});

Rat ev(const Polynomial& f, long x, long y) { return f.evaluate({Rat(x), Rat(y)}); }
}  // namespace

TEST_CASE("basic expressions evaluate correctly") {
    Polynomial f = parse_poly("x^4 + y^4 - 1", XY);
    CHECK(ev(f, 0, 1) == 0);
    CHECK(ev(f, 1, 1) == 1);
    CHECK(ev(f, 2, 0) == 15);
    CHECK(f.degree() == 4);

    Polynomial g = parse_poly("3*x^2*y - 1/2*y + 7", XY);
    CHECK(g.evaluate({Rat(1), Rat(2)}) == Rat(12));
    CHECK(g.evaluate({Rat(0), Rat(1)}) == Rat(13, 2));

    Polynomial h = parse_poly("-x + (y - 2)*(y + 2)", XY);
    CHECK(ev(h, 3, 2) == -3);
    CHECK(ev(h, 0, 3) == 5);
}

TEST_CASE("unary minus and nesting") {
    CHECK(parse_poly("-x", XY) == -Polynomial::variable(XY, "x"));
    CHECK(parse_poly("(-x + 1)^2", XY) == parse_poly("x^2 - 2*x + 1", XY));
    CHECK(parse_poly("- (x*y)", XY) == parse_poly("0 - x*y", XY));
    // unary minus is only legal at the head of an expression
    CHECK_THROWS_AS(parse_poly("x - - 1", XY), SyntaxError);
}

TEST_CASE("rational literals") {
    Polynomial f = parse_poly("2/4", XY);
    CHECK(f.constant_value() == Rat(1, 2));
    CHECK_THROWS_AS(parse_poly("1/0", XY), SyntaxError);
}

TEST_CASE("syntax errors carry offsets") {
    CHECK_THROWS_AS(parse_poly("x +", XY), SyntaxError);
    CHECK_THROWS_AS(parse_poly("(x", XY), SyntaxError);
    CHECK_THROWS_AS(parse_poly("x^", XY), SyntaxError);
    CHECK_THROWS_AS(parse_poly("", XY), SyntaxError);
    CHECK_THROWS_AS(parse_poly("x 1", XY), SyntaxError);
    try {
        parse_poly("x + $", XY);
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.offset == 4);
    }
}

TEST_CASE("unknown variables are rejected by name") {
    CHECK_THROWS_AS(parse_poly("x + z", XY), WrongVariablesError);
    CHECK_THROWS_AS(parse_equation("t^2 - 2"), WrongVariablesError);
}

TEST_CASE("equation rejects the zero polynomial") {
    CHECK_THROWS_AS(parse_equation("x - x"), ZeroPolynomialError);
    CHECK(parse_equation("x^4 + y^4 - 1").degree() == 4);
}

TEST_CASE("printer emits the grammar and round-trips") {
    std::vector<std::string> cases = {
        "x^4 + y^4 - 1",
        "-x^2 + 3*x*y - 5",
        "1/2*x^3 - 7/3",
        "x",
        "0",
        "-1",
        "x^2*y^2 + x*y + 1",
    };
    for (const auto& s : cases) {
        Polynomial f = parse_poly(s, XY);
        CHECK(f.str() == s);
        if (!f.is_zero()) CHECK(parse_poly(f.str(), XY) == f);
    }
    // terms print in descending lex order regardless of input order
    CHECK(parse_poly("1 + y + x", XY).str() == "x + y + 1");
    CHECK(parse_poly("y^4 + x^4 - 1", XY).str() == "x^4 + y^4 - 1");
}

TEST_CASE("polynomial algebra basics") {
    Polynomial f = parse_poly("x^2 - y", XY);
    CHECK(f.derivative("x") == parse_poly("2*x", XY));
    CHECK(f.derivative("y") == parse_poly("-1", XY));
    CHECK(f.pow(2) == parse_poly("x^4 - 2*x^2*y + y^2", XY));
    CHECK((f - f).is_zero());
    CHECK(f.degree_in(0) == 2);
    CHECK(f.degree_in(1) == 1);

    Polynomial hom = f.homogenize("w");
    CHECK(hom.is_homogeneous());
    CHECK(hom.vars()->at(0) == "w");
    CHECK(hom.dehomogenize("w", Rat(1)) == f);

    Polynomial prim = parse_poly("1/2*x + 1/3", XY).primitive();
    CHECK(prim == parse_poly("3*x + 2", XY));
    Polynomial prim2 = parse_poly("-2*x - 4", XY).primitive();
    CHECK(prim2 == parse_poly("x + 2", XY));

    // substitution: x := x + 2*y
    std::map<std::string, Polynomial> bind{{"x", parse_poly("x + 2*y", XY)}};
    CHECK(f.substitute(bind, XY) == parse_poly("x^2 + 4*x*y + 4*y^2 - y", XY));
}
