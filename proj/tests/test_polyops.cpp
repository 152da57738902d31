#include "doctest.h"
#include "ratsearch/parse.hpp"
#include "ratsearch/polyops.hpp"
#include "testutil.hpp"

using namespace ratsearch;
using testutil::Lcg;

namespace {
const VarListPtr XY = make_vars({"x", "y"});
Polynomial pxy(const std::string& s) { return parse_poly(s, XY); }
}  // namespace

TEST_CASE("exact division") {
    CHECK(exact_div(pxy("x^2 - y^2"), pxy("x - y")) == pxy("x + y"));
    CHECK(exact_div(pxy("x^3*y + x*y"), pxy("x*y")) == pxy("x^2 + 1"));
    CHECK(exact_div(Polynomial::zero(XY), pxy("x")) == Polynomial::zero(XY));
    CHECK(exact_div(pxy("3*x"), pxy("2")) == pxy("3/2*x"));
    CHECK_THROWS_AS(exact_div(pxy("x^2 + y"), pxy("x + 1")), InternalError);
    CHECK_THROWS_AS(exact_div(pxy("x"), Polynomial::zero(XY)), InternalError);
}

TEST_CASE("multivariate gcd of planted products") {
    Polynomial a = pxy("x + y");
    Polynomial b = pxy("x - y");
    Polynomial c = pxy("x^2 + y^2 + 1");
    CHECK(poly_gcd(a * c, b * c) == c);
    CHECK(poly_gcd(a * b, a * c) == a);
    CHECK(poly_gcd(a, b) == pxy("1"));
    CHECK(poly_gcd(a * a * b, a * b * b) == a * b);
    // scalar content is normalized away
    CHECK(poly_gcd(pxy("2*x + 2*y") * c, pxy("4*x - 4*y") * c) == c);
    // one argument constant
    CHECK(poly_gcd(pxy("7"), a) == pxy("1"));
    // zero argument: the other, primitive
    CHECK(poly_gcd(Polynomial::zero(XY), pxy("2*x + 2*y")) == pxy("x + y"));
    CHECK_THROWS_AS(poly_gcd(Polynomial::zero(XY), Polynomial::zero(XY)),
                    ZeroPolynomialError);
}

TEST_CASE("multivariate gcd on random planted triples") {
    Lcg rng(31337);
    const VarListPtr& V = XY;
    auto rand_poly = [&](int deg, int terms) {
        Polynomial f(V);
        for (int t = 0; t < terms; ++t) {
            Monomial m(2);
            int d = static_cast<int>(rng.range(0, deg));
            m.e[0] = static_cast<unsigned>(rng.range(0, d));
            m.e[1] = static_cast<unsigned>(d) - m.e[0];
            f.add_term(m, Rat(rng.range(-4, 4)));
        }
        return f;
    };
    int done = 0;
    for (int it = 0; done < 12; ++it) {
        REQUIRE(it < 100);
        Polynomial a = rand_poly(2, 3), b = rand_poly(2, 3), c = rand_poly(2, 3);
        if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
        ++done;
        Polynomial g = poly_gcd(a * c, b * c);
        // the gcd divides both inputs exactly
        CHECK(exact_div(a * c, g) * g == a * c);
        CHECK(exact_div(b * c, g) * g == b * c);
        // and the planted factor divides the gcd
        CHECK(poly_gcd(g, c.primitive()) == c.primitive());
    }
}

TEST_CASE("squarefree part") {
    Polynomial a = pxy("x + y - 1");
    Polynomial b = pxy("x^2 + y^2 - 2");
    CHECK(squarefree_part(a * a * b) == (a * b).primitive());
    CHECK(squarefree_part(a * a * a) == a);
    CHECK(squarefree_part(a * b) == (a * b).primitive());
    CHECK(squarefree_part(pxy("4")) == pxy("1"));
    CHECK(squarefree_part(pxy("x^2*y^2")) == pxy("x*y"));
    CHECK_THROWS_AS(squarefree_part(Polynomial::zero(XY)), ZeroPolynomialError);
    // scalar multiples collapse to the primitive form
    CHECK(squarefree_part(a * a * Rat(9, 4)) == a);
}
