#ifndef RATSEARCH_UPOLY_HPP
#define RATSEARCH_UPOLY_HPP

#include <vector>

#include "ratsearch/polynomial.hpp"

namespace ratsearch {

// monic gcd of two polynomials that are univariate in one shared variable
// (other ambient variables may exist but must not occur)
Polynomial univariate_gcd(const Polynomial& f, const Polynomial& g);

// all rational roots of a nonzero univariate polynomial, sorted ascending;
// found through divisor pairs of the primitive integer form (rational root
// theorem), with a sound mod-q no-root prefilter
std::vector<Rat> rational_roots(const Polynomial& f);

// exact quotient f / d of univariate polynomials; throws InternalError if d
// does not divide f
Polynomial univariate_exact_div(const Polynomial& f, const Polynomial& d);

// monic product of the distinct irreducible factors: f / gcd(f, f')
Polynomial univariate_squarefree_part(const Polynomial& f);

struct UniFactor {
    Polynomial factor;      // monic irreducible over Q
    unsigned multiplicity;
};

struct FactorLowDegreeResult {
    std::vector<UniFactor> factors;  // degree <= max_deg, sorted (degree, coeffs)
    Polynomial cofactor;             // monic; no factor of degree <= max_deg
};

// Splits off all monic irreducible factors of degree <= max_deg (max_deg is
// 1 or 2) with multiplicities.  Linear factors come from rational roots;
// quadratic factors come from factoring the squarefree cofactor modulo the
// smallest prime keeping it squarefree, Hensel-lifting past the coefficient
// bound for degree-2 divisors, and certifying each single lifted quadratic
// and each product of two lifted linears by exact trial division.
// Guarantee: product of factors (with multiplicity) times cofactor equals
// the monic normalization of f.
FactorLowDegreeResult factor_low_degree(const Polynomial& f, int max_deg);

}  // namespace ratsearch

#endif
