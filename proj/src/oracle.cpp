#include "ratsearch/oracle.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ratsearch/scan.hpp"

namespace ratsearch {

namespace {

// every exponent even and every coefficient positive, with a positive
// constant term: such a polynomial is bounded below by that constant, so
// the curve has no points at any height
bool positive_definite_shape(const Polynomial& f) {
    bool has_const = false;
    for (const auto& [m, c] : f.terms()) {
        if (m.e[0] % 2 != 0 || m.e[1] % 2 != 0) return false;
        if (c < 0) return false;
        if (m.degree() == 0) has_const = true;
    }
    return has_const;
}

// requires f == a*x^2 + b*y^2 - c with integer a, b, c > 0
std::array<Int, 3> conic_coefficients(const PlaneCurve& F) {
    const char* msg = "Holzer oracle needs a conic a*x^2 + b*y^2 = c with positive a, b, c";
    if (F.degree() != 2) throw OracleShapeMismatch(msg);
    Int a = 0, b = 0, c = 0;
    for (const auto& [m, coef] : F.poly().terms()) {
        if (m.e[0] == 2 && m.e[1] == 0) a = num(coef);
        else if (m.e[0] == 0 && m.e[1] == 2) b = num(coef);
        else if (m.degree() == 0) c = -num(coef);
        else throw OracleShapeMismatch(msg);
    }
    if (a < 1 || b < 1 || c < 1) throw OracleShapeMismatch(msg);
    return {a, b, c};
}

}  // namespace

PointListOracle::PointListOracle(std::vector<ReducedPoint> pts) : points(std::move(pts)) {
    std::sort(points.begin(), points.end(), point_order_less);
    points.erase(std::unique(points.begin(), points.end()), points.end());
}

OracleVerdict decide(const PlaneCurve& F, const OracleSpec& spec) {
    OracleVerdict v{false, std::nullopt};
    if (const auto* hb = std::get_if<HeightBoundOracle>(&spec)) {
        if (hb->bound < 1) throw InputError("height bound must be >= 1");
        if (!positive_definite_shape(F.poly())) {
            if (!hb->bound.fits_ulong_p()) throw InputError("height bound too large to scan");
            if (auto pt = PointScan(F).first(hb->bound.get_ui())) {
                v.answer = true;
                v.witness = *pt;
            }
        }
    } else if (const auto* pl = std::get_if<PointListOracle>(&spec)) {
        for (const ReducedPoint& pt : pl->points) {
            if (F.contains(pt)) {
                v.answer = true;
                v.witness = pt;
                break;
            }
        }
    } else {
        std::array<Int, 3> abc = conic_coefficients(F);
        if (auto pt = holzer_decide(abc[0], abc[1], abc[2])) {
            v.answer = true;
            v.witness = *pt;
        }
    }
    if (v.witness && !F.contains(*v.witness)) throw InternalError("oracle witness fails the equation");
    return v;
}

Int holzer_bound(const Int& a, const Int& b, const Int& c) {
    Int m = a * b;
    Int ac = a * c;
    Int bc = b * c;
    if (ac > m) m = ac;
    if (bc > m) m = bc;
    return sqrt(m);  // truncated integer square root
}

std::optional<ReducedPoint> holzer_decide(const Int& a, const Int& b, const Int& c) {
    if (a < 1 || b < 1 || c < 1) throw InputError("holzer_decide needs positive integers");
    Int S = holzer_bound(a, b, c);
    std::optional<ReducedPoint> best;
    for (Int r = 1; r <= S; ++r) {
        Int rhs = c * r * r;
        for (Int p = 0; p <= S; ++p) {
            Int rem = rhs - a * p * p;
            if (rem < 0) break;
            if (rem % b != 0) continue;
            Int q2 = rem / b;
            Int q = sqrt(q2);
            if (q * q != q2 || q > S) continue;
            if (gcd3(p, q, r) != 1) continue;
            ReducedPoint pt;
            pt.p = p; pt.q = q; pt.r = r;
            // minimal height, then smallest r, p, q
            if (!best) { best = pt; continue; }
            Int hn = height(pt), hb = height(*best);
            bool better = hn < hb ||
                          (hn == hb && (pt.r < best->r ||
                                        (pt.r == best->r && (pt.p < best->p ||
                                                             (pt.p == best->p && pt.q < best->q)))));
            if (better) best = pt;
        }
    }
    return best;
}

std::vector<ReducedPoint> read_point_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open point list: " + path);
    std::vector<ReducedPoint> out;
    std::string line;
    unsigned long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        Int p, q, r;
        if (!(ls >> p)) {
            std::string rest;
            if (ls.clear(), ls >> rest) {
                throw InputError("point list line " + std::to_string(lineno) + ": expected `p q r`");
            }
            continue;  // blank or comment-only line
        }
        std::string trail;
        if (!(ls >> q >> r) || (ls >> trail)) {
            throw InputError("point list line " + std::to_string(lineno) + ": expected `p q r`");
        }
        out.emplace_back(p, q, r);
    }
    return out;
}

}  // namespace ratsearch
