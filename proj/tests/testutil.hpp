#ifndef RATSEARCH_TESTUTIL_HPP
#define RATSEARCH_TESTUTIL_HPP

#include <cstdint>
#include <vector>

#include "ratsearch/polynomial.hpp"

namespace ratsearch::testutil {

// fixed-constant LCG so every run sees the same cases on every platform
class Lcg {
  public:
    explicit Lcg(std::uint64_t seed) : state_(seed) {}

    std::uint64_t raw() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return state_ >> 16;
    }

    // uniform in [lo, hi]
    long range(long lo, long hi) {
        return lo + static_cast<long>(raw() % static_cast<std::uint64_t>(hi - lo + 1));
    }

  private:
    std::uint64_t state_;
};

// random univariate polynomial of exact degree deg with coefficients in
// [-cmax, cmax] (leading coefficient nonzero)
inline Polynomial random_upoly(Lcg& rng, const VarListPtr& vars, const std::string& var, int deg,
                               long cmax) {
    std::vector<Rat> cs(static_cast<std::size_t>(deg) + 1, Rat(0));
    for (int i = 0; i < deg; ++i) cs[static_cast<std::size_t>(i)] = Rat(rng.range(-cmax, cmax));
    long lead = 0;
    while (lead == 0) lead = rng.range(-cmax, cmax);
    cs[static_cast<std::size_t>(deg)] = Rat(lead);
    return Polynomial::from_univariate(vars, var, cs);
}

}  // namespace ratsearch::testutil

#endif
