#include "ratsearch/geometry.hpp"

#include <algorithm>

#include "geometry_detail.hpp"
#include "ratsearch/errors.hpp"
#include "ratsearch/polyops.hpp"
#include "ratsearch/upoly.hpp"
#include "secant_cert.hpp"

namespace ratsearch {

namespace {

const VarListPtr& xy_vars() {
    static const VarListPtr v = make_vars({"x", "y"});
    return v;
}

const VarListPtr& wxyz_vars() {
    static const VarListPtr v = make_vars({"w", "x", "y", "z"});
    return v;
}

const VarListPtr& secant_vars() {
    static const VarListPtr v = make_vars({"x", "y", "z", "xp", "yp", "zp"});
    return v;
}

const VarListPtr& c_vars() {
    static const VarListPtr v = make_vars({"c1", "c2", "c3", "c4"});
    return v;
}

const VarListPtr& t_var() {
    static const VarListPtr v = make_vars({"t"});
    return v;
}

// (c2, c3) -> (x, y), positionally
Polynomial rename_to_xy(const Polynomial& f) {
    Polynomial r(xy_vars());
    for (const auto& [m, c] : f.terms()) {
        Monomial n(2);
        n.e[0] = m.e[0];
        n.e[1] = m.e[1];
        r.add_term(n, c);
    }
    return r;
}

bool proj_less(const ProjPoint3& a, const ProjPoint3& b) {
    for (int i = 0; i < 4; ++i)
        if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
    return false;
}

}  // namespace

PlaneCurve::PlaneCurve(const Polynomial& f, bool genus_at_least_two)
    : f_(f), degree_(0), genus_flag_(genus_at_least_two) {
    if (*f.vars() != *xy_vars()) throw InputError("plane curve must live in variables (x, y)");
    if (f.is_zero()) throw ZeroPolynomialError("plane curve needs a nonzero polynomial");
    if (f.is_constant()) throw InputError("plane curve needs a non-constant polynomial");
    f_ = squarefree_part(f);
    degree_ = f_.degree();
}

Polynomial PlaneCurve::leading_form() const {
    Polynomial r(f_.vars());
    unsigned d = static_cast<unsigned>(degree_);
    for (const auto& [m, c] : f_.terms())
        if (m.degree() == d) r.add_term(m, c);
    return r;
}

bool PlaneCurve::is_x_regular() const {
    Monomial yd(2);
    yd.e[1] = static_cast<unsigned>(degree_);
    return f_.terms().count(yd) > 0;
}

bool PlaneCurve::contains(const Rat& x, const Rat& y) const {
    return f_.evaluate({x, y}) == 0;
}

PlaneCurve shear_curve(const PlaneCurve& F, unsigned c) {
    Polynomial x = Polynomial::variable(xy_vars(), "x");
    Polynomial y = Polynomial::variable(xy_vars(), "y");
    Polynomial g = F.poly().substitute({{"x", x + y * Rat(static_cast<long>(c))}}, xy_vars());
    return PlaneCurve(g, F.genus_at_least_two());
}

unsigned smallest_regularizing_shear(const PlaneCurve& F) {
    Polynomial lf = F.leading_form();
    for (unsigned c = 1;; ++c)
        if (lf.evaluate({Rat(static_cast<long>(c)), Rat(1)}) != 0) return c;
}

SpaceCurve puncture_lift(const PlaneCurve& F, const Rat& p) {
    Polynomial g1 = F.poly().homogenize("w").with_vars(wxyz_vars());
    Polynomial w = Polynomial::variable(wxyz_vars(), "w");
    Polynomial x = Polynomial::variable(wxyz_vars(), "x");
    Polynomial z = Polynomial::variable(wxyz_vars(), "z");
    Polynomial g2 = (x - w * p) * z - w * w;
    return SpaceCurve{g1, g2, p, F};
}

std::vector<ProjPoint3> boundary_points(const SpaceCurve& C) {
    const PlaneCurve& F = C.source;
    if (!F.is_x_regular())
        throw DegenerateBoundaryError("boundary contains the line w = x = 0; shear the curve first");

    std::vector<ProjPoint3> out;
    out.emplace_back(Int(0), Int(0), Int(0), Int(1));

    Polynomial lf = F.leading_form();
    // directions (a : 1): rational roots of the restricted leading form
    for (const Rat& a : rational_roots(lf.dehomogenize("y", Rat(1))))
        out.push_back(ProjPoint3::from_rationals(Rat(0), a, Rat(1), Rat(0)));
    // the direction (1 : 0) exactly when x^d is absent
    Monomial xd(2);
    xd.e[0] = static_cast<unsigned>(F.degree());
    if (lf.terms().count(xd) == 0) out.emplace_back(Int(0), Int(1), Int(0), Int(0));

    std::sort(out.begin(), out.end(), proj_less);
    return out;
}

std::vector<Polynomial> secant_system(const SpaceCurve& C, const CandidateCenter& m) {
    const VarListPtr& sv = secant_vars();
    Polynomial x = Polynomial::variable(sv, "x");
    Polynomial y = Polynomial::variable(sv, "y");
    Polynomial z = Polynomial::variable(sv, "z");
    Polynomial xp = Polynomial::variable(sv, "xp");
    Polynomial yp = Polynomial::variable(sv, "yp");
    Polynomial zp = Polynomial::variable(sv, "zp");
    Polynomial one = Polynomial::constant(sv, 1);
    Polynomial pc = Polynomial::constant(sv, C.p);

    const Polynomial& f = C.source.poly();
    Polynomial f1 = f.with_vars(sv);
    Polynomial f2 = f.substitute({{"x", xp}, {"y", yp}}, sv);
    Polynomial e1 = (x - pc) * z - one;
    Polynomial e2 = (xp - pc) * zp - one;

    const Rat& a = m.a;
    const Rat& b = m.b;
    // 3x3 minors of rows (1,x,y,z), (1,xp,yp,zp), (0,a,b,1)
    Polynomial m012 = (xp - x) * b + (y - yp) * a;
    Polynomial m013 = xp - zp * a - x + z * a;
    Polynomial m023 = yp - zp * b - y + z * b;
    Polynomial m123 = x * (yp - zp * b) - y * (xp - zp * a) + z * (xp * b - yp * a);

    return {f1, e1, f2, e2, m012, m013, m023, m123};
}

std::vector<Polynomial> saturate_off_diagonal(const std::vector<Polynomial>& gens) {
    if (gens.empty()) throw InputError("saturate_off_diagonal: no generators");
    const VarListPtr& sv = gens.front().vars();
    Polynomial dx = Polynomial::variable(sv, "x") - Polynomial::variable(sv, "xp");
    Polynomial dy = Polynomial::variable(sv, "y") - Polynomial::variable(sv, "yp");
    Polynomial dz = Polynomial::variable(sv, "z") - Polynomial::variable(sv, "zp");
    std::vector<Polynomial> sx = saturate(gens, dx);
    std::vector<Polynomial> sy = saturate(gens, dy);
    std::vector<Polynomial> sz = saturate(gens, dz);
    return ideal_intersection(ideal_intersection(sx, sy), sz);
}

namespace {

// largest source degree the six-variable secant solve handles in reasonable
// time; larger models go through the modular certificate instead
constexpr int kExactScreenDegreeMax = 6;

// exact re-evaluation of a claimed affine secant pair
void check_affine_witness(const SpaceCurve& C, const CandidateCenter& m,
                          const std::vector<Rat>& s) {
    for (const Polynomial& g : secant_system(C, m))
        if (g.evaluate(s) != 0) throw InternalError("secant witness fails the defining system");
}

}  // namespace

ScreenVerdict screen_center(const SpaceCurve& C, const CandidateCenter& m) {
    const Rat& a = m.a;
    const Rat& b = m.b;

    // degeneracy: the center must not lie on C
    Rat g1m = C.g1.evaluate({Rat(0), a, b, Rat(1)});
    Rat g2m = C.g2.evaluate({Rat(0), a, b, Rat(1)});
    if (g1m == 0 && g2m == 0) return DegenerateCenter{"center on C"};

    // a boundary line makes every center unscreenable: the line itself meets
    // any candidate secant analysis with infinitely many rational points
    if (!C.source.is_x_regular()) return DegenerateCenter{"degenerate boundary line"};

    std::vector<ProjPoint3> bpts = boundary_points(C);
    for (std::size_t i = 0; i < bpts.size(); ++i) {
        for (std::size_t j = i + 1; j < bpts.size(); ++j) {
            // collinearity of m, B_i, B_j inside {w = 0} with coordinates (x, y, z)
            const auto& u = bpts[i].c;
            const auto& v = bpts[j].c;
            Int d1 = u[2] * v[3] - u[3] * v[2];
            Int d2 = u[1] * v[3] - u[3] * v[1];
            Int d3 = u[1] * v[2] - u[2] * v[1];
            Rat det = a * Rat(d1) - b * Rat(d2) + Rat(d3);
            if (det == 0)
                return DegenerateCenter{"center on a line joining rational boundary points"};
        }
    }

    if (C.source.degree() <= kExactScreenDegreeMax) {
        // affine secant pairs: saturate the minor system off the diagonal
        std::vector<Polynomial> sat = saturate_off_diagonal(secant_system(C, m));
        if (dimension(sat) >= 1) return PositiveDimensional{};

        ZeroDimSolution sols = solve_zero_dim(sat);
        if (!sols.rational.empty()) {
            const std::vector<Rat>& s = sols.rational.front().coords;
            check_affine_witness(C, m, s);
            RationalSecant w;
            w.points.push_back(ProjPoint3::from_rationals(Rat(1), s[0], s[1], s[2]));
            w.points.push_back(ProjPoint3::from_rationals(Rat(1), s[3], s[4], s[5]));
            return w;
        }
        if (!sols.quadratic.empty()) {
            RationalSecant w;
            w.pair = sols.quadratic.front();
            return w;
        }
    } else {
        // past the exact range, a per-prime certificate replaces the solve;
        // it never certifies an unsafe center and at worst rejects a safe one
        ScreenVerdict v = screen_center_modular(C, m);
        if (!std::holds_alternative<SafeCenter>(v)) return v;
    }

    // secant lines through a rational boundary point: restrict both
    // generators to the line t*B + m and look for a second rational point
    for (const ProjPoint3& B : bpts) {
        Polynomial t = Polynomial::variable(t_var(), "t");
        std::map<std::string, Polynomial> bind{
            {"w", Polynomial::zero(t_var())},
            {"x", t * Rat(B.x()) + Polynomial::constant(t_var(), a)},
            {"y", t * Rat(B.y()) + Polynomial::constant(t_var(), b)},
            {"z", t * Rat(B.z()) + Polynomial::constant(t_var(), 1)},
        };
        Polynomial u1 = C.g1.substitute(bind, t_var());
        Polynomial u2 = C.g2.substitute(bind, t_var());
        if (u1.is_zero() && u2.is_zero())
            return DegenerateCenter{"line through a boundary point lies on C"};
        Polynomial g = u1.is_zero() ? u2 : (u2.is_zero() ? u1 : univariate_gcd(u1, u2));
        if (g.is_constant()) continue;
        std::vector<Rat> roots = rational_roots(g);
        if (roots.empty()) continue;
        const Rat& t0 = roots.front();
        RationalSecant w;
        w.points.push_back(B);
        w.points.push_back(ProjPoint3::from_rationals(Rat(0), t0 * Rat(B.x()) + a,
                                                      t0 * Rat(B.y()) + b, t0 * Rat(B.z()) + 1));
        return w;
    }

    return SafeCenter{};
}

CandidateCenter find_center(const SpaceCurve& C, unsigned long candidate_cap) {
    if (!C.source.genus_at_least_two())
        throw InputError("find_center needs the genus flag asserted on the source curve");
    PointEnumerator en{Int(candidate_cap)};
    for (unsigned long tried = 0; tried < candidate_cap; ++tried) {
        std::optional<ReducedPoint> pt = en.next();
        if (!pt) break;
        CandidateCenter m{pt->x(), pt->y()};
        if (std::holds_alternative<SafeCenter>(screen_center(C, m))) return m;
    }
    throw CandidateCapExceeded("no safe center among the first " +
                               std::to_string(candidate_cap) + " candidates");
}

namespace {

struct ProjectionSetup {
    Int m1, m2, m3;
    Polynomial G1, G2;  // the curve generators in the projection frame
};

ProjectionSetup projection_setup(const SpaceCurve& C, const CandidateCenter& m) {
    Int l = lcm(den(m.a), den(m.b));
    Int m1 = num(m.a) * (l / den(m.a));
    Int m2 = num(m.b) * (l / den(m.b));
    Int m3 = l;
    Int g = gcd3(m1, m2, m3);
    m1 /= g;
    m2 /= g;
    m3 /= g;

    const VarListPtr& cv = c_vars();
    Polynomial c1 = Polynomial::variable(cv, "c1");
    Polynomial c2 = Polynomial::variable(cv, "c2");
    Polynomial c3 = Polynomial::variable(cv, "c3");
    Polynomial c4 = Polynomial::variable(cv, "c4");
    std::map<std::string, Polynomial> bind{
        {"w", c1},
        {"x", c2 + c4 * Rat(m1)},
        {"y", c3 + c4 * Rat(m2)},
        {"z", c4 * Rat(m3)},
    };
    return ProjectionSetup{m1, m2, m3, C.g1.substitute(bind, cv), C.g2.substitute(bind, cv)};
}

BirationalStep finish_projection(const SpaceCurve& C, const CandidateCenter& m,
                                 const ProjectionSetup& su, Polynomial h) {
    if (h.is_constant()) throw DegenerateProjection("projection eliminant is constant");
    h = squarefree_part(h).with_vars(make_vars({"c1", "c2", "c3"}));
    if (h.dehomogenize("c1", Rat(0)).is_zero())
        throw DegenerateProjection("image contains the line at infinity");

    Polynomial f1 = rename_to_xy(h.dehomogenize("c1", Rat(1)));

    BirationalStep step{m,
                        {su.m1, su.m2, su.m3},
                        {},
                        h,
                        PlaneCurve(f1, C.source.genus_at_least_two()),
                        C};
    step.basis_change[0][0] = Rat(1);
    step.basis_change[1][1] = Rat(1);
    step.basis_change[2][2] = Rat(1);
    step.basis_change[1][3] = Rat(su.m1);
    step.basis_change[2][3] = Rat(su.m2);
    step.basis_change[3][3] = Rat(su.m3);
    return step;
}

// coefficient list of f along c4, constant term first
std::vector<Polynomial> c4_coefficients(const Polynomial& f) {
    const VarListPtr& cv = f.vars();
    std::vector<Polynomial> out;
    for (const auto& [mon, c] : f.terms()) {
        unsigned k = mon.e[3];
        while (out.size() <= k) out.push_back(Polynomial::zero(cv));
        Monomial n(mon);
        n.e[3] = 0;
        out[k].add_term(n, c);
    }
    if (out.empty()) out.push_back(Polynomial::zero(f.vars()));
    return out;
}

}  // namespace

BirationalStep project_from_center(const SpaceCurve& C, const CandidateCenter& m) {
    ProjectionSetup su = projection_setup(C, m);

    // the puncture generator is at most quadratic in c4, so the image arises
    // as a c4-resultant with no fraction-field detour:
    //   G2 -> m1 m3 c4^2 + m3 (c2 - p c1) c4 - c1^2
    const VarListPtr& cv = c_vars();
    Polynomial c1 = Polynomial::variable(cv, "c1");
    Polynomial c2 = Polynomial::variable(cv, "c2");
    Polynomial L = (c2 - c1 * C.p) * Rat(su.m3);
    Polynomial B0 = Polynomial::zero(cv) - c1 * c1;
    std::vector<Polynomial> A = c4_coefficients(su.G1);
    while (A.size() < 2) A.push_back(Polynomial::zero(cv));

    Polynomial R3 = Polynomial::zero(cv);
    if (su.m1 != 0) {
        // quadratic divisor with constant lead: reduce A and read the
        // resultant off the linear remainder u c4 + v as u^2 B0 - u v L + b2 v^2
        Int m13 = su.m1 * su.m3;
        Rat b2(m13);
        Rat ib2 = Rat(1) / b2;
        for (std::size_t k = A.size(); k-- > 2;) {
            if (A[k].is_zero()) continue;
            Polynomial t = A[k] * ib2;
            A[k - 1] = A[k - 1] - t * L;
            A[k - 2] = A[k - 2] - t * B0;
        }
        R3 = A[1] * A[1] * B0 - A[1] * A[0] * L + A[0] * A[0] * b2;
    } else {
        // linear divisor L c4 - c1^2: substitute and clear denominators
        std::size_t dA = A.size();
        while (dA > 1 && A[dA - 1].is_zero()) --dA;
        Polynomial c1sq = c1 * c1;
        Polynomial pw_num = Polynomial::constant(cv, 1);
        std::vector<Polynomial> nums{pw_num};
        for (std::size_t k = 1; k < dA; ++k) nums.push_back(nums.back() * c1sq);
        Polynomial pw_den = Polynomial::constant(cv, 1);
        std::vector<Polynomial> dens{pw_den};
        for (std::size_t k = 1; k < dA; ++k) dens.push_back(dens.back() * L);
        for (std::size_t k = 0; k < dA; ++k)
            R3 = R3 + A[k] * nums[k] * dens[dA - 1 - k];
    }
    if (R3.is_zero()) throw EliminationNotPrincipal("projection eliminated to the zero ideal");
    return finish_projection(C, m, su, R3.primitive());
}

BirationalStep project_from_center_elimination(const SpaceCurve& C, const CandidateCenter& m) {
    ProjectionSetup su = projection_setup(C, m);
    std::vector<Polynomial> elim = elimination_ideal({su.G1, su.G2}, {"c4"});
    if (elim.empty()) throw EliminationNotPrincipal("projection eliminated to the zero ideal");
    Polynomial h = elim.front();
    for (std::size_t i = 1; i < elim.size(); ++i) h = poly_gcd(h, elim[i]);
    if (h.is_constant() && elim.size() > 1)
        throw EliminationNotPrincipal("projection elimination ideal has constant gcd");
    return finish_projection(C, m, su, h);
}

ReducedPoint forward_point(const BirationalStep& step, const ReducedPoint& P) {
    const SpaceCurve& C = step.source;
    Rat x0 = P.x(), y0 = P.y();
    if (x0 == C.p) throw InputError("fiber point has no affine image");
    if (!C.source.contains(x0, y0)) throw InputError("point is not on the source curve");
    Rat z0 = Rat(1) / (x0 - C.p);
    Rat X = x0 - make_rat(step.m_int[0], step.m_int[2]) * z0;
    Rat Y = y0 - make_rat(step.m_int[1], step.m_int[2]) * z0;
    if (!step.image.contains(X, Y)) throw InternalError("projected point misses the image curve");
    return reduce_point(X, Y);
}

std::optional<ProjPoint3> lift_point(const ReducedPoint& Q, const BirationalStep& step) {
    Rat X = Q.x(), Y = Q.y();
    if (!step.image.contains(X, Y)) throw NotOnImageError("point is not on the image curve");

    // the fiber line (1, X, Y, 0) + t*m, excluding only m itself
    Polynomial t = Polynomial::variable(t_var(), "t");
    std::map<std::string, Polynomial> bind{
        {"w", Polynomial::constant(t_var(), 1)},
        {"x", t * Rat(step.m_int[0]) + Polynomial::constant(t_var(), X)},
        {"y", t * Rat(step.m_int[1]) + Polynomial::constant(t_var(), Y)},
        {"z", t * Rat(step.m_int[2])},
    };
    Polynomial u1 = step.source.g1.substitute(bind, t_var());
    Polynomial u2 = step.source.g2.substitute(bind, t_var());
    // u2(t) has constant term -1, so it is never identically zero; u1 can
    // vanish only when the plane curve contains the projected line
    Polynomial g = u1.is_zero() ? u2 : univariate_gcd(u1, u2);
    if (g.is_constant()) throw InternalError("image point has an empty fiber");

    std::vector<Rat> roots = rational_roots(g);
    if (roots.empty()) return std::nullopt;
    if (roots.size() >= 2)
        throw AmbiguousLiftError("two rational curve points over one image point");
    const Rat& t0 = roots.front();
    Rat lx = X + Rat(step.m_int[0]) * t0;
    Rat ly = Y + Rat(step.m_int[1]) * t0;
    Rat lz = Rat(step.m_int[2]) * t0;
    if (step.source.g1.evaluate({Rat(1), lx, ly, lz}) != 0 ||
        step.source.g2.evaluate({Rat(1), lx, ly, lz}) != 0)
        throw InternalError("lifted point fails the curve equations");
    return ProjPoint3::from_rationals(Rat(1), lx, ly, lz);
}

ReducedPoint pullback_chain(const ReducedPoint& P, const MapChain& chain) {
    ReducedPoint cur = P;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        if (const ShearLink* s = std::get_if<ShearLink>(&*it)) {
            cur = reduce_point(cur.x() + cur.y() * Rat(static_cast<long>(s->c)), cur.y());
        } else {
            const BirationalStep& step = std::get<BirationalStep>(*it);
            std::optional<ProjPoint3> lifted = lift_point(cur, step);
            if (!lifted) throw MissingLiftError("image point has no rational lift");
            if (lifted->w() == 0) throw InternalError("affine point lifted to infinity");
            cur = reduce_point(make_rat(lifted->x(), lifted->w()),
                               make_rat(lifted->y(), lifted->w()));
        }
    }
    return cur;
}

std::optional<ReducedPoint> forward_chain(const ReducedPoint& P, const MapChain& chain) {
    ReducedPoint cur = P;
    for (const ChainLink& link : chain) {
        if (const ShearLink* s = std::get_if<ShearLink>(&link)) {
            cur = reduce_point(cur.x() - cur.y() * Rat(static_cast<long>(s->c)), cur.y());
        } else {
            const BirationalStep& step = std::get<BirationalStep>(link);
            if (cur.x() == step.source.p) return std::nullopt;
            cur = forward_point(step, cur);
        }
    }
    return cur;
}

}  // namespace ratsearch
