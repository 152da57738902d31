#ifndef RATSEARCH_INTFACTOR_HPP
#define RATSEARCH_INTFACTOR_HPP

#include <utility>
#include <vector>

#include "ratsearch/rational.hpp"

namespace ratsearch {

// prime factorization of |n| (n != 0), sorted by prime
std::vector<std::pair<Int, unsigned>> factorize(const Int& n);

// all positive divisors of |n|, sorted ascending
std::vector<Int> divisors(const Int& n);

// the ascending sequence 2, 3, 5, ...; index is 0-based
unsigned long nth_prime(std::size_t i);

}  // namespace ratsearch

#endif
