#ifndef RATSEARCH_POLYOPS_HPP
#define RATSEARCH_POLYOPS_HPP

#include "ratsearch/polynomial.hpp"

namespace ratsearch {

// exact multivariate quotient f / d; throws InternalError when d does not
// divide f
Polynomial exact_div(const Polynomial& f, const Polynomial& d);

// gcd over Q in any number of variables, primitive integer normalized:
// the least common multiple is read off as the single generator of an
// elimination ideal, and the gcd follows by exact division
Polynomial poly_gcd(const Polynomial& f, const Polynomial& g);

// primitive product of the distinct irreducible factors of f:
// f / gcd(f, every first partial derivative)
Polynomial squarefree_part(const Polynomial& f);

}  // namespace ratsearch

#endif
