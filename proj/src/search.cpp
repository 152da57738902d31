#include "ratsearch/search.hpp"

#include <algorithm>
#include <map>

#include "ratsearch/scan.hpp"
#include "ratsearch/upoly.hpp"

namespace ratsearch {

namespace {

// ordered set insert in enumeration order
void insert_point(std::vector<ReducedPoint>& pts, const ReducedPoint& pt) {
    auto it = std::lower_bound(pts.begin(), pts.end(), pt, point_order_less);
    if (it != pts.end() && *it == pt) return;
    pts.insert(it, pt);
}

}  // namespace

std::vector<Rat> solve_fiber(const PlaneCurve& F, const Rat& p) {
    static const VarListPtr yvar = make_vars({"y"});
    std::map<std::string, Polynomial> bind;
    bind.emplace("x", Polynomial::constant(yvar, p));
    Polynomial fy = F.poly().substitute(bind, yvar);
    if (fy.is_zero()) throw VerticalComponentError("curve contains the line x = " + p.get_str());
    if (fy.degree() == 0) return {};
    return rational_roots(fy);
}

std::optional<ReducedPoint> find_first_solution(const PlaneCurve& F, unsigned long cap) {
    if (cap < 1) throw InputError("height cap must be >= 1");
    return PointScan(F).first(cap);
}

SearchReport search_all(const PlaneCurve& F, const SearchConfig& config) {
    if (!F.genus_at_least_two()) throw InputError("search needs an asserted genus >= 2 curve");
    if (config.first_solution_height_cap < 1 || config.candidate_cap < 1 ||
        config.max_iterations < 1)
        throw InputError("caps must be >= 1");

    SearchReport rep;
    PlaneCurve cur = F;
    MapChain chain;

    // A point-list oracle is answered from the verified list transported into
    // the current model, so its emptiness is exactly the remaining-points
    // question and the known count shrinks by each removed fiber.
    std::optional<std::vector<ReducedPoint>> working;
    if (const auto* pl = std::get_if<PointListOracle>(&config.oracle)) {
        working.emplace();
        for (const ReducedPoint& pt : pl->points)
            if (F.contains(pt)) working->push_back(pt);
    }

    for (unsigned iter = 0;; ++iter) {
        bool yes = working ? !working->empty() : decide(cur, config.oracle).answer;
        if (!yes) break;
        if (iter >= config.max_iterations) {
            rep.status = SearchStatus::CapExceeded;
            rep.exhausted_cap = CapKind::Iterations;
            break;
        }

        // puncturing needs an x-regular model; shear before picking a point
        if (!cur.is_x_regular()) {
            unsigned c = smallest_regularizing_shear(cur);
            if (working)
                for (ReducedPoint& pt : *working)
                    pt = reduce_point(pt.x() - Rat((long)c) * pt.y(), pt.y());
            chain.push_back(ShearLink{c});
            cur = shear_curve(cur, c);
        }

        // with a verified list in hand the minimal survivor IS the first
        // solution on the current model, so the height scan is redundant
        std::optional<ReducedPoint> first;
        if (working) {
            ReducedPoint best =
                *std::min_element(working->begin(), working->end(), point_order_less);
            if (height(best) <= Int(static_cast<unsigned long>(config.first_solution_height_cap)))
                first = best;
        } else {
            first = find_first_solution(cur, config.first_solution_height_cap);
        }
        if (!first) {
            // the oracle still says YES: report the inconsistency, never hide it
            rep.status = SearchStatus::CapExceeded;
            rep.exhausted_cap = CapKind::FirstSolution;
            break;
        }
        Rat p = first->x();

        std::vector<Rat> ys = solve_fiber(cur, p);
        std::vector<ReducedPoint> fiber;
        for (const Rat& y : ys) fiber.push_back(reduce_point(p, y));
        if (fiber.empty()) throw InternalError("found point missing from its own fiber");

        for (const ReducedPoint& fp : fiber) {
            ReducedPoint orig = fp;
            try {
                orig = pullback_chain(fp, chain);
            } catch (const InternalError&) {
                throw;
            } catch (const Error&) {
                if (config.strict_lift) throw;
                continue;  // tolerant mode drops the anomalous point
            }
            if (!F.contains(orig)) throw InternalError("pulled-back point fails the original equation");
            insert_point(rep.points, orig);
        }

        // fiber points die at the puncture; when nothing else is left on a
        // verified list, the next decision is already NO and the projection
        // step would only be thrown away, so it is skipped
        if (working) {
            std::vector<ReducedPoint> left;
            for (const ReducedPoint& pt : *working)
                if (pt.x() != p) left.push_back(pt);
            *working = std::move(left);
            if (working->empty()) {
                rep.iterations.push_back(
                    IterationRecord{cur, p, fiber, std::nullopt, std::nullopt});
                break;
            }
        }

        SpaceCurve C = puncture_lift(cur, p);
        CandidateCenter center = find_center(C, config.candidate_cap);
        BirationalStep step = project_from_center(C, center);

        rep.iterations.push_back(IterationRecord{cur, p, fiber, center, step.image});

        // every surviving known point maps over to the image model
        if (working) {
            std::vector<ReducedPoint> next;
            for (const ReducedPoint& pt : *working) next.push_back(forward_point(step, pt));
            std::sort(next.begin(), next.end(), point_order_less);
            next.erase(std::unique(next.begin(), next.end()), next.end());
            *working = std::move(next);
        }

        chain.push_back(step);
        cur = step.image;
    }

    if (rep.status == SearchStatus::Complete && !rep.points.empty()) {
        Int mh = 0;
        for (const ReducedPoint& pt : rep.points) {
            Int h = height(pt);
            if (h > mh) mh = h;
        }
        rep.max_height = mh;
    }
    return rep;
}

std::optional<Int> max_height(const SearchReport& report) {
    if (report.status != SearchStatus::Complete)
        throw InputError("max height needs a complete report");
    if (report.points.empty()) return std::nullopt;
    Int mh = 0;
    for (const ReducedPoint& pt : report.points) {
        Int h = height(pt);
        if (h > mh) mh = h;
    }
    return mh;
}

}  // namespace ratsearch
