#ifndef RATSEARCH_SCAN_HPP
#define RATSEARCH_SCAN_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ratsearch/geometry.hpp"
#include "ratsearch/point.hpp"

namespace ratsearch {

// Height-shell scanner for the rational points of a plane curve.  Clears
// denominators once into the integer form G(p, q, r) = r^d f(p/r, q/r) and
// walks each shell with a single-prime root sieve before any exact check,
// so results match the plain enumerate-and-evaluate route exactly.
class PointScan {
  public:
    explicit PointScan(const PlaneCurve& F);

    // curve points of height exactly h, sorted by (p, q, r)
    std::vector<ReducedPoint> shell(unsigned long h) const;

    // first curve point of height <= cap in enumeration order
    std::optional<ReducedPoint> first(unsigned long cap) const;

    // every curve point of height <= bound, in enumeration order
    std::vector<ReducedPoint> up_to(unsigned long bound) const;

  private:
    bool exact_zero(const Int& p, const Int& q, const Int& r) const;

    struct Term {
        unsigned i, j, k;  // exponents of p, q, r
        Int c;
        std::uint64_t cmod;
    };
    std::vector<Term> terms_;
    unsigned degree_;
};

}  // namespace ratsearch

#endif
