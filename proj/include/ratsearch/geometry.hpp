#ifndef RATSEARCH_GEOMETRY_HPP
#define RATSEARCH_GEOMETRY_HPP

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ratsearch/groebner.hpp"
#include "ratsearch/point.hpp"
#include "ratsearch/polynomial.hpp"

namespace ratsearch {

// A plane curve f(x, y) = 0.  Construction normalizes to the squarefree
// primitive integer model with positive lex-leading coefficient.
class PlaneCurve {
  public:
    explicit PlaneCurve(const Polynomial& f, bool genus_at_least_two = true);

    const Polynomial& poly() const { return f_; }
    int degree() const { return degree_; }
    bool genus_at_least_two() const { return genus_flag_; }

    // degree-d homogeneous part of f
    Polynomial leading_form() const;

    // true when the leading form has a nonzero y^d coefficient; a false here
    // means the punctured model would carry the whole line w = x = 0 and the
    // curve must be sheared first
    bool is_x_regular() const;

    bool contains(const Rat& x, const Rat& y) const;
    bool contains(const ReducedPoint& pt) const { return contains(pt.x(), pt.y()); }

    bool operator==(const PlaneCurve& o) const { return f_ == o.f_; }

  private:
    Polynomial f_;  // over exactly (x, y)
    int degree_;
    bool genus_flag_;
};

// image of F under x -> x + c*y (the inverse substitution maps image points
// (u, v) back to (u + c*v, v))
PlaneCurve shear_curve(const PlaneCurve& F, unsigned c);

// smallest c >= 1 whose shear makes the curve x-regular
unsigned smallest_regularizing_shear(const PlaneCurve& F);

// The punctured curve embedded in P^3: plane model sent off to infinity
// along the fiber x = p.
struct SpaceCurve {
    Polynomial g1;      // homogenized f over (w, x, y, z), z-free
    Polynomial g2;      // (x - p*w)*z - w^2
    Rat p;              // puncture abscissa
    PlaneCurve source;  // the plane curve this lifts
};

// Affine solutions of {f = 0, (x - p)z = 1} biject with plane solutions
// having x != p via z = 1/(x - p).
SpaceCurve puncture_lift(const PlaneCurve& F, const Rat& p);

// Rational points of C on the plane at infinity {w = 0}: always (0:0:0:1),
// plus (0:a:b:0) for each rational root (a:b) of the leading form.  Throws
// DegenerateBoundaryError when the boundary contains the line w = x = 0.
std::vector<ProjPoint3> boundary_points(const SpaceCurve& C);

// a candidate projection center m = (0 : a : b : 1) on the chart z != 0 of
// the plane at infinity
struct CandidateCenter {
    Rat a, b;
};

// Ideal in (x, y, z, xp, yp, zp) cutting out ordered pairs of affine points
// of C collinear with the center: both curve memberships plus the four 3x3
// minors of the matrix with rows (1,x,y,z), (1,xp,yp,zp), (0,a,b,1).
// Callers must saturate off the diagonal afterwards.
std::vector<Polynomial> secant_system(const SpaceCurve& C, const CandidateCenter& m);

// I : (x-xp, y-yp, z-zp)^inf, computed as the intersection of the three
// single-polynomial saturations; removes exactly the diagonal components.
std::vector<Polynomial> saturate_off_diagonal(const std::vector<Polynomial>& gens);

struct SafeCenter {};
struct RationalSecant {
    // either two rational points of C, or a quadratically conjugate pair
    std::vector<ProjPoint3> points;
    std::optional<QuadraticPairSolution> pair;
};
struct PositiveDimensional {};
struct DegenerateCenter {
    std::string reason;
};
using ScreenVerdict = std::variant<SafeCenter, RationalSecant, PositiveDimensional, DegenerateCenter>;

// Full screening pipeline for one candidate center: degeneracy checks, the
// saturated secant system's dimension and solutions, and secant lines
// through rational boundary points.  SafeCenter means no line through m
// secant to C is rational.
ScreenVerdict screen_center(const SpaceCurve& C, const CandidateCenter& m);

// first SafeCenter in enumeration order over candidates (a, b) = (p/r, q/r);
// throws CandidateCapExceeded after `candidate_cap` screened candidates
CandidateCenter find_center(const SpaceCurve& C, unsigned long candidate_cap);

// One projection step C -> D from a safe center, recorded completely enough
// to transport points both ways.
struct BirationalStep {
    CandidateCenter center;
    std::array<Int, 3> m_int;  // primitive integer rep of (a, b, 1), last entry > 0
    std::array<std::array<Rat, 4>, 4> basis_change;  // columns e1, e2, e3, m
    Polynomial model;   // squarefree homogeneous image model h(c1, c2, c3)
    PlaneCurve image;   // h dehomogenized at c1 = 1, renamed to (x, y)
    SpaceCurve source;
};

// substitutes the basis change into (g1, g2), eliminates the fiber
// coordinate, and dehomogenizes the squarefree image model at the line at
// infinity (the image of the plane w = 0)
BirationalStep project_from_center(const SpaceCurve& C, const CandidateCenter& m);

// image of an affine source point with x != p under the projection
ReducedPoint forward_point(const BirationalStep& step, const ReducedPoint& P);

// unique rational point of C on the line through m over the image point Q;
// absent when every intersection point on that line is irrational.  Throws
// NotOnImageError / AmbiguousLiftError.
std::optional<ProjPoint3> lift_point(const ReducedPoint& Q, const BirationalStep& step);

struct ShearLink {
    unsigned c;
};
using ChainLink = std::variant<ShearLink, BirationalStep>;
using MapChain = std::vector<ChainLink>;

// transports a point of the latest image curve back to the original plane
// curve, lifting through every step in reverse
ReducedPoint pullback_chain(const ReducedPoint& P, const MapChain& chain);

// transports an original-curve point forward; absent when the point lies on
// a punctured fiber along the way
std::optional<ReducedPoint> forward_chain(const ReducedPoint& P, const MapChain& chain);

}  // namespace ratsearch

#endif
