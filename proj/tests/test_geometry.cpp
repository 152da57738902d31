#include <variant>

#include "doctest.h"
#include "ratsearch/geometry.hpp"
#include "ratsearch/parse.hpp"

using namespace ratsearch;

namespace {

PlaneCurve curve(const std::string& text) { return PlaneCurve(parse_equation(text)); }

const VarListPtr& wxyz() {
    static const VarListPtr v = make_vars({"w", "x", "y", "z"});
    return v;
}

}  // namespace

TEST_CASE("plane curve normalization") {
    PlaneCurve c1 = curve("2*x^2 - 2*y^2");
    CHECK(c1.poly() == parse_equation("x^2 - y^2"));
    CHECK(c1.degree() == 2);

    // squarefree part is taken at construction
    PlaneCurve c2 = curve("x^2 + 2*x*y + y^2");
    CHECK(c2.poly() == parse_equation("x + y"));

    // sign pinned by the lex-leading coefficient
    PlaneCurve c3 = curve("-x^3 - y");
    CHECK(c3.poly() == parse_equation("x^3 + y"));

    CHECK_THROWS_AS(PlaneCurve(parse_poly("3", make_vars({"x", "y"}))), InputError);
    CHECK_THROWS_AS(PlaneCurve(Polynomial::variable(make_vars({"x"}), "x")), InputError);
}

TEST_CASE("leading form, regularity, shear") {
    PlaneCurve f = curve("x^4 + y^4 - 1");
    CHECK(f.leading_form() == parse_poly("x^4 + y^4", f.poly().vars()));
    CHECK(f.is_x_regular());

    PlaneCurve g = curve("y^2 - x^5 - 1");
    CHECK(g.poly() == parse_equation("x^5 - y^2 + 1"));
    CHECK(!g.is_x_regular());
    CHECK(smallest_regularizing_shear(g) == 1);

    PlaneCurve sheared = shear_curve(g, 1);
    CHECK(sheared.is_x_regular());
    CHECK(sheared.degree() == 5);
    // (0, 1) on g corresponds to (-1, 1) on the sheared model
    CHECK(g.contains(Rat(0), Rat(1)));
    CHECK(sheared.contains(Rat(-1), Rat(1)));

    // chain transport for a pure shear
    MapChain chain{ShearLink{1}};
    ReducedPoint img(Int(-1), Int(1), Int(1));
    CHECK(pullback_chain(img, chain) == ReducedPoint(Int(0), Int(1), Int(1)));
    CHECK(*forward_chain(ReducedPoint(Int(0), Int(1), Int(1)), chain) == img);
}

TEST_CASE("puncture lift builds the displayed equations") {
    PlaneCurve f = curve("x^4 + y^4 - 1");
    SpaceCurve c1 = puncture_lift(f, Rat(1));
    CHECK(c1.g1 == parse_poly("x^4 + y^4 - w^4", wxyz()));
    CHECK(c1.g2 == parse_poly("(x - w)*z - w^2", wxyz()));

    SpaceCurve c0 = puncture_lift(f, Rat(0));
    CHECK(c0.g2 == parse_poly("x*z - w^2", wxyz()));
}

TEST_CASE("puncture bijection at small height") {
    PlaneCurve f = curve("x^4 + y^4 - 17");
    Rat p(2);
    SpaceCurve c = puncture_lift(f, p);

    // route one: plane solutions with x != p
    long plane_count = 0;
    // route two: the same points must satisfy both space equations with the
    // determined z, each exactly once
    long space_count = 0;
    PointEnumerator en{Int(10)};
    while (auto pt = en.next()) {
        if (!f.contains(*pt)) continue;
        if (pt->x() == p) continue;
        ++plane_count;
        Rat z = Rat(1) / (pt->x() - p);
        if (c.g1.evaluate({Rat(1), pt->x(), pt->y(), z}) == 0 &&
            c.g2.evaluate({Rat(1), pt->x(), pt->y(), z}) == 0)
            ++space_count;
    }
    CHECK(plane_count == space_count);
    CHECK(plane_count == 6);  // 8 integer points, minus (2, +-1) on the fiber x = 2
}

TEST_CASE("boundary points") {
    PlaneCurve f = curve("x^4 + y^4 - 1");
    auto b = boundary_points(puncture_lift(f, Rat(1)));
    REQUIRE(b.size() == 1);
    CHECK(b[0] == ProjPoint3(Int(0), Int(0), Int(0), Int(1)));

    PlaneCurve g = curve("x^4 + y^4 + 1");
    auto bg = boundary_points(puncture_lift(g, Rat(0)));
    REQUIRE(bg.size() == 1);
    CHECK(bg[0] == ProjPoint3(Int(0), Int(0), Int(0), Int(1)));

    // rational directions from the leading form x^4 - y^4
    PlaneCurve h = curve("x^4 - y^4 + 1");
    auto bh = boundary_points(puncture_lift(h, Rat(0)));
    REQUIRE(bh.size() == 3);
    CHECK(bh[0] == ProjPoint3(Int(0), Int(0), Int(0), Int(1)));
    CHECK(bh[1] == ProjPoint3(Int(0), Int(1), Int(-1), Int(0)));
    CHECK(bh[2] == ProjPoint3(Int(0), Int(1), Int(1), Int(0)));

    // missing x^d contributes the direction (1 : 0)
    PlaneCurve k = curve("x^3*y + y^4 + 1");
    auto bk = boundary_points(puncture_lift(k, Rat(0)));
    REQUIRE(bk.size() == 3);
    CHECK(bk[0] == ProjPoint3(Int(0), Int(0), Int(0), Int(1)));
    CHECK(bk[1] == ProjPoint3(Int(0), Int(1), Int(-1), Int(0)));
    CHECK(bk[2] == ProjPoint3(Int(0), Int(1), Int(0), Int(0)));

    // boundary line w = x = 0 is rejected
    PlaneCurve bad = curve("y^2 - x^5 - 1");
    CHECK_THROWS_AS(boundary_points(puncture_lift(bad, Rat(0))), DegenerateBoundaryError);
}

TEST_CASE("secant system vanishes on the known collinear pair") {
    PlaneCurve f = curve("x^4 + y^4 - 1");
    SpaceCurve c = puncture_lift(f, Rat(1));
    CandidateCenter m{Rat(-2), Rat(-2)};
    auto gens = secant_system(c, m);
    REQUIRE(gens.size() == 8);

    // the line through (-1, 0, -1/2) and (0, 1, -1) meets w = 0 at (0:-2:-2:1)
    std::vector<Rat> s{Rat(-1), Rat(0), Rat(-1) / 2, Rat(0), Rat(1), Rat(-1)};
    for (const auto& g : gens) CHECK(g.evaluate(s) == 0);

    // swapping the two points is also a solution
    std::vector<Rat> sw{Rat(0), Rat(1), Rat(-1), Rat(-1), Rat(0), Rat(-1) / 2};
    for (const auto& g : gens) CHECK(g.evaluate(sw) == 0);

    // equal rows kill every minor regardless of curve membership
    std::vector<Rat> diag{Rat(7), Rat(3), Rat(5), Rat(7), Rat(3), Rat(5)};
    for (std::size_t i = 4; i < 8; ++i) CHECK(gens[i].evaluate(diag) == 0);
}

TEST_CASE("diagonal saturation keeps off-diagonal components only") {
    VarListPtr sv = make_vars({"x", "y", "z", "xp", "yp", "zp"});
    Polynomial dx = Polynomial::variable(sv, "x") - Polynomial::variable(sv, "xp");
    Polynomial dy = Polynomial::variable(sv, "y") - Polynomial::variable(sv, "yp");
    Polynomial dz = Polynomial::variable(sv, "z") - Polynomial::variable(sv, "zp");

    // the diagonal ideal itself saturates to the unit ideal
    auto sat = saturate_off_diagonal({dx, dy, dz});
    REQUIRE(sat.size() == 1);
    CHECK(sat[0].is_constant());

    // a principal ideal supported on x = xp survives: no component lies in
    // the full diagonal
    auto keep = saturate_off_diagonal({dx});
    REQUIRE(keep.size() == 1);
    CHECK(keep[0] == dx);
}

TEST_CASE("screen: degenerate centers") {
    PlaneCurve f = curve("x^4 + y^4 - 1");
    SpaceCurve c = puncture_lift(f, Rat(1));

    // (0 : 0 : 0 : 1) always lies on C
    auto v0 = screen_center(c, CandidateCenter{Rat(0), Rat(0)});
    REQUIRE(std::holds_alternative<DegenerateCenter>(v0));
    CHECK(std::get<DegenerateCenter>(v0).reason == "center on C");

    // irregular boundary rejects every center
    PlaneCurve bad = curve("y^2 - x^5 - 1");
    SpaceCurve cb = puncture_lift(bad, Rat(0));
    auto vb = screen_center(cb, CandidateCenter{Rat(2), Rat(3)});
    REQUIRE(std::holds_alternative<DegenerateCenter>(vb));
    CHECK(std::get<DegenerateCenter>(vb).reason == "degenerate boundary line");

    // center collinear with two rational boundary points
    PlaneCurve h = curve("x^4 - y^4 + 1");
    SpaceCurve ch = puncture_lift(h, Rat(0));
    auto vh = screen_center(ch, CandidateCenter{Rat(1), Rat(1)});
    REQUIRE(std::holds_alternative<DegenerateCenter>(vh));
    CHECK(std::get<DegenerateCenter>(vh).reason ==
          "center on a line joining rational boundary points");
}

TEST_CASE("screen: rational secant pair is detected") {
    PlaneCurve f = curve("x^4 + y^4 - 1");
    SpaceCurve c = puncture_lift(f, Rat(1));
    auto v = screen_center(c, CandidateCenter{Rat(-2), Rat(-2)});
    REQUIRE(std::holds_alternative<RationalSecant>(v));
    const RationalSecant& w = std::get<RationalSecant>(v);
    REQUIRE(w.points.size() == 2);
    // both witness points satisfy both space equations
    for (const ProjPoint3& pt : w.points) {
        std::vector<Rat> at{Rat(pt.w()), Rat(pt.x()), Rat(pt.y()), Rat(pt.z())};
        CHECK(c.g1.evaluate(at) == 0);
        CHECK(c.g2.evaluate(at) == 0);
    }
}

TEST_CASE("screen: conjugate quadratic secant is detected") {
    // (sqrt2, sqrt2) and (-sqrt2, -sqrt2) lie on the curve; punctured at p = 1
    // their space lift is collinear with (0 : 1 : 1 : 1)
    PlaneCurve f = curve("x^4 + y^4 - 8");
    SpaceCurve c = puncture_lift(f, Rat(1));
    auto v = screen_center(c, CandidateCenter{Rat(1), Rat(1)});
    REQUIRE(std::holds_alternative<RationalSecant>(v));
    const RationalSecant& w = std::get<RationalSecant>(v);
    CHECK(w.points.empty());
    REQUIRE(w.pair.has_value());
    CHECK(w.pair->min_poly.degree() == 2);
}

TEST_CASE("find center, project, and transport points on the quartic fixture") {
    PlaneCurve f = curve("x^4 + y^4 - 1");
    SpaceCurve c = puncture_lift(f, Rat(1));

    CHECK_THROWS_AS(find_center(c, 0), CandidateCapExceeded);

    // irregular curves never yield a safe center, so a tiny cap trips fast
    SpaceCurve cb = puncture_lift(curve("y^2 - x^5 - 1"), Rat(0));
    CHECK_THROWS_AS(find_center(cb, 1), CandidateCapExceeded);

    CandidateCenter m = find_center(c, 10000);
    // regression anchor: the first candidate in enumeration order is safe
    CHECK(m.a == Rat(-1));
    CHECK(m.b == Rat(-1));
    BirationalStep step = project_from_center(c, m);
    CHECK(step.image.degree() <= 8);
    CHECK(step.m_int[2] > 0);

    // every known point with x != 1 projects onto the image and lifts back
    std::vector<ReducedPoint> pts{ReducedPoint(Int(-1), Int(0), Int(1)),
                                  ReducedPoint(Int(0), Int(1), Int(1)),
                                  ReducedPoint(Int(0), Int(-1), Int(1))};
    for (const ReducedPoint& pt : pts) {
        ReducedPoint img = forward_point(step, pt);
        CHECK(step.image.contains(img));
        auto lifted = lift_point(img, step);
        REQUIRE(lifted.has_value());
        CHECK(*lifted == ProjPoint3::from_rationals(Rat(1), pt.x(), pt.y(),
                                                    Rat(1) / (pt.x() - Rat(1))));
        // chain transport agrees
        MapChain chain{step};
        CHECK(pullback_chain(img, chain) == pt);
        CHECK(*forward_chain(pt, chain) == img);
    }

    // the punctured fiber point dies under forward transport
    MapChain chain{step};
    CHECK(!forward_chain(ReducedPoint(Int(1), Int(0), Int(1)), chain).has_value());
    CHECK_THROWS_AS(forward_point(step, ReducedPoint(Int(1), Int(0), Int(1))), InputError);

    // off-curve and off-image inputs are rejected
    CHECK_THROWS_AS(forward_point(step, ReducedPoint(Int(5), Int(5), Int(1))), InputError);
    CHECK_THROWS_AS(lift_point(ReducedPoint(Int(10), Int(11), Int(3)), step), NotOnImageError);
}
