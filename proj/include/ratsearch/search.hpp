#ifndef RATSEARCH_SEARCH_HPP
#define RATSEARCH_SEARCH_HPP

#include <optional>
#include <vector>

#include "ratsearch/geometry.hpp"
#include "ratsearch/oracle.hpp"

namespace ratsearch {

struct SearchConfig {
    OracleSpec oracle;
    unsigned long first_solution_height_cap = 10000;
    unsigned long candidate_cap = 10000;
    unsigned max_iterations = 8;
    bool strict_lift = false;  // lift anomalies become hard failures
};

// one loop body: the model it ran on, the abscissa punctured away, the fiber
// points removed with it, and the projection taken afterwards. The last
// round of a list-oracle run skips the projection once the verified list is
// exhausted, so center and image are absent there.
struct IterationRecord {
    PlaneCurve curve;
    Rat p;
    std::vector<ReducedPoint> fiber_points;  // on `curve`, x = p, ascending y
    std::optional<CandidateCenter> center;
    std::optional<PlaneCurve> image;
};

enum class SearchStatus { Complete, CapExceeded };
enum class CapKind { FirstSolution, Iterations };

struct SearchReport {
    SearchStatus status = SearchStatus::Complete;
    std::optional<CapKind> exhausted_cap;    // set iff status is CapExceeded
    std::vector<ReducedPoint> points;        // on the original curve, enumeration order
    std::vector<IterationRecord> iterations;
    std::optional<Int> max_height;           // largest height, when complete and nonempty
};

// all rational y with F(p, y) = 0, ascending; errors if the curve contains
// the whole vertical line x = p
std::vector<Rat> solve_fiber(const PlaneCurve& F, const Rat& p);

// first point in height-then-lex order satisfying F, up to the cap
std::optional<ReducedPoint> find_first_solution(const PlaneCurve& F, unsigned long cap);

// Alternates oracle decisions with exhaustive search: each YES finds the
// smallest remaining point, reports its whole fiber, and sends that fiber
// off to infinity through a puncture-and-project step, so the next round
// runs on a curve with strictly fewer rational points.
SearchReport search_all(const PlaneCurve& F, const SearchConfig& config);

// the largest solution height; demands a complete report, absent when the
// solution set is empty
std::optional<Int> max_height(const SearchReport& report);

}  // namespace ratsearch

#endif
