#include <algorithm>
#include <vector>

#include "doctest.h"
#include "ratsearch/groebner.hpp"
#include "ratsearch/parse.hpp"
#include "testutil.hpp"

using namespace ratsearch;
using testutil::Lcg;

namespace {

const VarListPtr XY = make_vars({"x", "y"});
const VarListPtr XYZ = make_vars({"x", "y", "z"});

Polynomial pxy(const std::string& s) { return parse_poly(s, XY); }
Polynomial pxyz(const std::string& s) { return parse_poly(s, XYZ); }

// random sparse polynomial over vars with bounded degree and coefficients
Polynomial random_poly(Lcg& rng, const VarListPtr& vars, int max_deg, long cmax, int terms) {
    Polynomial f(vars);
    for (int t = 0; t < terms; ++t) {
        Monomial m(vars->size());
        int budget = static_cast<int>(rng.range(0, max_deg));
        for (std::size_t i = 0; i < vars->size() && budget > 0; ++i) {
            int e = static_cast<int>(rng.range(0, budget));
            m.e[i] = static_cast<unsigned>(e);
            budget -= e;
        }
        long c = rng.range(-cmax, cmax);
        f.add_term(m, Rat(c));
    }
    return f;
}

bool in_ideal(const Polynomial& f, const std::vector<Polynomial>& gb, const MonomialOrder& ord) {
    return normal_form(f, gb, ord).is_zero();
}

// brute-force dimension: for a finite variety sample this is unusable, so
// instead verify against the independent-set definition recomputed from a
// *lex* basis (a different order must give the same dimension)
int dimension_via_lex(const std::vector<Polynomial>& gens) {
    const VarListPtr& vars = gens.front().vars();
    MonomialOrder ord = MonomialOrder::lex(vars);
    std::vector<Polynomial> gb = groebner_basis(gens, ord);
    if (gb.empty()) return static_cast<int>(vars->size());
    for (const Polynomial& g : gb)
        if (g.is_constant()) return -1;
    std::size_t n = vars->size();
    std::vector<Monomial> lts;
    for (const Polynomial& g : gb) {
        Monomial best = g.terms().begin()->first;
        for (const auto& [m, c] : g.terms())
            if (ord.greater(m, best)) best = m;
        lts.push_back(best);
    }
    int best_size = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool independent = true;
        for (const Monomial& m : lts) {
            bool inside = true;
            for (std::size_t i = 0; i < n && inside; ++i)
                if (m.e[i] > 0 && !(mask & (1u << i))) inside = false;
            if (inside) {
                independent = false;
                break;
            }
        }
        if (independent) best_size = std::max(best_size, __builtin_popcount(mask));
    }
    return best_size;
}

}  // namespace

TEST_CASE("groebner basis of a principal ideal is its primitive generator") {
    MonomialOrder ord = MonomialOrder::grevlex(XY);
    auto gb = groebner_basis({pxy("2*x^2 - 2*y"), pxy("3*x^2 - 3*y")}, ord);
    REQUIRE(gb.size() == 1);
    CHECK(gb[0] == pxy("x^2 - y"));
}

TEST_CASE("unit and zero ideals") {
    MonomialOrder ord = MonomialOrder::grevlex(XY);
    auto unit = groebner_basis({pxy("x"), pxy("x + 1")}, ord);
    REQUIRE(unit.size() == 1);
    CHECK(unit[0] == pxy("1"));

    auto zero = groebner_basis({Polynomial::zero(XY)}, ord);
    CHECK(zero.empty());
}

TEST_CASE("textbook lex basis") {
    // I = <x^2 + y^2 - 1, x - y>: lex basis should eliminate x
    MonomialOrder ord = MonomialOrder::lex(XY);
    auto gb = groebner_basis({pxy("x^2 + y^2 - 1"), pxy("x - y")}, ord);
    REQUIRE(gb.size() == 2);
    // sorted ascending by leading monomial: the pure-y element first
    CHECK(gb[0] == pxy("2*y^2 - 1"));
    CHECK(gb[1] == pxy("x - y"));
}

TEST_CASE("normal form is a two-sided membership test") {
    MonomialOrder ord = MonomialOrder::grevlex(XYZ);
    std::vector<Polynomial> gens{pxyz("x*y - z"), pxyz("y^2 - z")};
    auto gb = groebner_basis(gens, ord);
    // members reduce to zero
    CHECK(in_ideal(gens[0], gb, ord));
    CHECK(in_ideal(gens[1], gb, ord));
    CHECK(in_ideal(gens[0] * pxyz("x + y + 3") - gens[1] * pxyz("z^2"), gb, ord));
    // x is visibly not in the ideal (nothing of degree <= 1 vanishes)
    CHECK_FALSE(in_ideal(pxyz("x"), gb, ord));
    // the normal form is idempotent
    Polynomial h = pxyz("x^3*y + y^3 - z - 7");
    Polynomial r = normal_form(h, gb, ord);
    CHECK(normal_form(r, gb, ord) == r);
    CHECK(in_ideal(h - r, gb, ord));
}

TEST_CASE("random ideals: generators and S-polynomials reduce to zero") {
    Lcg rng(5150101);
    int done = 0;
    for (int it = 0; done < 25; ++it) {
        REQUIRE(it < 200);
        std::vector<Polynomial> gens;
        int k = static_cast<int>(rng.range(1, 3));
        for (int i = 0; i < k; ++i) gens.push_back(random_poly(rng, XYZ, 3, 5, 3));
        bool nonzero = false;
        for (const auto& g : gens) nonzero = nonzero || !g.is_zero();
        if (!nonzero) continue;
        ++done;
        MonomialOrder ord = MonomialOrder::grevlex(XYZ);
        auto gb = groebner_basis(gens, ord);
        for (const auto& g : gens) CHECK(in_ideal(g, gb, ord));
        // Buchberger criterion: every S-polynomial of the basis reduces to 0
        for (std::size_t i = 0; i < gb.size(); ++i)
            for (std::size_t j = i + 1; j < gb.size(); ++j) {
                Monomial mi = gb[i].terms().begin()->first, mj = gb[j].terms().begin()->first;
                for (const auto& [m, c] : gb[i].terms())
                    if (ord.greater(m, mi)) mi = m;
                for (const auto& [m, c] : gb[j].terms())
                    if (ord.greater(m, mj)) mj = m;
                Monomial l = Monomial::lcm(mi, mj);
                Rat ci, cj;
                for (const auto& [m, c] : gb[i].terms())
                    if (m == mi) ci = c;
                for (const auto& [m, c] : gb[j].terms())
                    if (m == mj) cj = c;
                Polynomial s = gb[i] * Polynomial::term(XYZ, Rat(1) / ci, l / mi) -
                               gb[j] * Polynomial::term(XYZ, Rat(1) / cj, l / mj);
                CHECK(in_ideal(s, gb, ord));
            }
        // dimension is order-independent
        CHECK(dimension(gens) == dimension_via_lex(gens));
    }
}

TEST_CASE("elimination ideal") {
    // x = t^2, y = t^3: eliminating t gives x^3 - y^2
    const VarListPtr TXY = make_vars({"t", "x", "y"});
    auto elim = elimination_ideal(
        {parse_poly("x - t^2", TXY), parse_poly("y - t^3", TXY)}, {"t"});
    REQUIRE(elim.size() == 1);
    CHECK(elim[0] == pxy("x^3 - y^2"));
    CHECK(*elim[0].vars() == *XY);

    // eliminating x from <x^2 + y^2 - 1, x - y> leaves the primitive integer
    // form of the y-eliminant
    auto elim2 = elimination_ideal({pxy("x^2 + y^2 - 1"), pxy("x - y")}, {"x"});
    REQUIRE(elim2.size() == 1);
    CHECK(elim2[0] == parse_poly("2*y^2 - 1", make_vars({"y"})));
    CHECK(elim2[0].monic_lex() ==
          parse_poly("y^2 - 1/2", make_vars({"y"})).monic_lex());
}

TEST_CASE("saturation removes a component") {
    // <x*y> : y^inf = <x>
    auto sat = saturate({pxy("x*y")}, pxy("y"));
    REQUIRE(sat.size() == 1);
    CHECK(sat[0] == pxy("x"));

    // <x^2*y - x*y> : x^inf = <y*(x - 1)> : x^inf ... = <x*y - y>
    auto sat2 = saturate({pxy("x^2*y - x*y")}, pxy("x"));
    REQUIRE(sat2.size() == 1);
    CHECK(sat2[0] == pxy("x*y - y"));

    // saturating by something already invertible leaves the ideal alone
    auto sat3 = saturate({pxy("x - 1")}, pxy("y"));
    REQUIRE(sat3.size() == 1);
    CHECK(sat3[0] == pxy("x - 1"));
}

TEST_CASE("dimension examples") {
    CHECK(dimension({pxyz("x")}) == 2);                      // a plane in 3-space
    CHECK(dimension({pxyz("x"), pxyz("y")}) == 1);           // a line
    CHECK(dimension({pxyz("x"), pxyz("y"), pxyz("z")}) == 0);  // a point
    CHECK(dimension({pxyz("1")}) == -1);                     // empty
    CHECK(dimension({Polynomial::zero(XYZ)}) == 3);          // everything
    CHECK(dimension({pxy("x^2 + y^2 - 1")}) == 1);           // a curve
    CHECK(dimension({pxy("x^2 + y^2 - 1"), pxy("x - y")}) == 0);
}

TEST_CASE("standard monomial count") {
    MonomialOrder ord = MonomialOrder::lex(XY);
    auto gb = groebner_basis({pxy("x^2 - 2"), pxy("y - x")}, ord);
    CHECK(standard_monomial_count(gb, ord) == 2);
    auto gb2 = groebner_basis({pxy("x^2 - 2"), pxy("y^3 - y")}, ord);
    CHECK(standard_monomial_count(gb2, ord) == 6);
    auto gb3 = groebner_basis({pxy("x"), pxy("y")}, ord);
    CHECK(standard_monomial_count(gb3, ord) == 1);
    auto gb4 = groebner_basis({pxy("1")}, ord);
    CHECK(standard_monomial_count(gb4, ord) == 0);
}

TEST_CASE("solve: pure rational system") {
    // x^2 = 1, y = x + 1 -> (1, 2), (-1, 0) listed lex ascending
    auto sol = solve_zero_dim({pxy("x^2 - 1"), pxy("y - x - 1")});
    REQUIRE(sol.rational.size() == 2);
    CHECK(sol.rational[0].coords == std::vector<Rat>{Rat(-1), Rat(0)});
    CHECK(sol.rational[1].coords == std::vector<Rat>{Rat(1), Rat(2)});
    CHECK(sol.quadratic.empty());
    CHECK(sol.higher_degree == 0);
}

TEST_CASE("solve: conjugate quadratic pair with linear coordinates") {
    // x^2 = 2, y = x: the pair (alpha, alpha) with alpha^2 = 2
    auto sol = solve_zero_dim({pxy("x^2 - 2"), pxy("y - x")});
    CHECK(sol.rational.empty());
    REQUIRE(sol.quadratic.size() == 1);
    const VarListPtr T = make_vars({"t"});
    CHECK(sol.quadratic[0].min_poly == parse_poly("t^2 - 2", T));
    REQUIRE(sol.quadratic[0].coords.size() == 2);
    CHECK(sol.quadratic[0].coords[0] == parse_poly("t", T));
    CHECK(sol.quadratic[0].coords[1] == parse_poly("t", T));
    CHECK(sol.higher_degree == 0);
}

TEST_CASE("solve: imaginary pair and a rational point together") {
    // (x^2 + 1)(x - 3) = 0, y = 0
    auto sol = solve_zero_dim({pxy("(x^2 + 1)*(x - 3)"), pxy("y")});
    REQUIRE(sol.rational.size() == 1);
    CHECK(sol.rational[0].coords == std::vector<Rat>{Rat(3), Rat(0)});
    REQUIRE(sol.quadratic.size() == 1);
    const VarListPtr T = make_vars({"t"});
    CHECK(sol.quadratic[0].min_poly == parse_poly("t^2 + 1", T));
    CHECK(sol.quadratic[0].coords[0] == parse_poly("t", T));
    CHECK(sol.quadratic[0].coords[1] == Polynomial::zero(T));
    CHECK(sol.higher_degree == 0);
}

TEST_CASE("solve: higher-degree residue is counted, not resolved") {
    // x^3 = 2 contributes three conjugate solutions as a count of 3
    auto sol = solve_zero_dim({pxy("x^3 - 2"), pxy("y - 1")});
    CHECK(sol.rational.empty());
    CHECK(sol.quadratic.empty());
    CHECK(sol.higher_degree == 3);
}

TEST_CASE("solve: two points over the same quadratic root stay unresolved") {
    // x^2 = 2 and y^2 = 3: four points, pairwise not linear over one root
    auto sol = solve_zero_dim({pxy("x^2 - 2"), pxy("y^2 - 3")});
    CHECK(sol.rational.empty());
    CHECK(sol.quadratic.empty());
    CHECK(sol.higher_degree == 4);
}

TEST_CASE("solve: empty system") {
    auto sol = solve_zero_dim({pxy("x^2 + 1"), pxy("x^2 + 2")});
    CHECK(sol.rational.empty());
    CHECK(sol.quadratic.empty());
    CHECK(sol.higher_degree == 0);
}

TEST_CASE("solve: multiplicity in the eliminant does not duplicate points") {
    auto sol = solve_zero_dim({pxy("(x - 1)^2"), pxy("y - x")});
    REQUIRE(sol.rational.size() == 1);
    CHECK(sol.rational[0].coords == std::vector<Rat>{Rat(1), Rat(1)});
}

TEST_CASE("solve: non-zero-dimensional input is rejected") {
    CHECK_THROWS_AS(solve_zero_dim({pxy("x - y")}), InputError);
    CHECK_THROWS_AS(solve_zero_dim({Polynomial::zero(XY)}), InputError);
}

TEST_CASE("solve: three variables, mixed outcome") {
    // z = 2, y^2 = z, x = y + 1
    auto sol = solve_zero_dim({pxyz("z - 2"), pxyz("y^2 - z"), pxyz("x - y - 1")});
    CHECK(sol.rational.empty());
    REQUIRE(sol.quadratic.size() == 1);
    const VarListPtr T = make_vars({"t"});
    // least variable z is rational (2), y generates the quadratic step
    // ordering of solve is bottom-up, so the pair presents x, y, z over t
    CHECK(sol.quadratic[0].min_poly == parse_poly("t^2 - 2", T));
    CHECK(sol.quadratic[0].coords[0] == parse_poly("t + 1", T));
    CHECK(sol.quadratic[0].coords[1] == parse_poly("t", T));
    CHECK(sol.quadratic[0].coords[2] == parse_poly("2", T));
    CHECK(sol.higher_degree == 0);
}
