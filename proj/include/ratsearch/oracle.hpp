#ifndef RATSEARCH_ORACLE_HPP
#define RATSEARCH_ORACLE_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ratsearch/geometry.hpp"
#include "ratsearch/point.hpp"

namespace ratsearch {

// Answer of one decision call.  A witness, when present, satisfies the
// queried equation exactly (asserted on every call).
struct OracleVerdict {
    bool answer;
    std::optional<ReducedPoint> witness;
};

// YES iff a solution of height <= bound exists.  The caller asserts that the
// bound dominates the curve's minimal solution height; that premise cannot be
// checked here and is the documented trust boundary.
struct HeightBoundOracle {
    Int bound;
};

// Test-harness oracle: answers from a caller-supplied solution list.  Every
// listed point is re-verified, so a wrong list can only cause a premature NO,
// never a false point.  Completeness of the list is the caller's claim.
struct PointListOracle {
    std::vector<ReducedPoint> points;  // enumeration order, deduplicated
    explicit PointListOracle(std::vector<ReducedPoint> pts);
};

// decides conics a*x^2 + b*y^2 = c with positive integer coefficients via
// the Holzer height bound; rejects every other curve shape
struct HolzerOracle {};

using OracleSpec = std::variant<HeightBoundOracle, PointListOracle, HolzerOracle>;

OracleVerdict decide(const PlaneCurve& F, const OracleSpec& spec);

// floor(sqrt(max(ab, ac, bc))), the Holzer search box
Int holzer_bound(const Int& a, const Int& b, const Int& c);

// Minimal-height solution of a*p^2 + b*q^2 = c*r^2 with p, q >= 0, r >= 1,
// gcd 1 and all entries within the Holzer box; ties broken by smallest
// (r, p, q).  Absence is a sound NO.  Inputs must be positive.
std::optional<ReducedPoint> holzer_decide(const Int& a, const Int& b, const Int& c);

// point-list file: one `p q r` triple of decimal integers per line,
// blank lines and `#` comments allowed
std::vector<ReducedPoint> read_point_list(const std::string& path);

}  // namespace ratsearch

#endif
