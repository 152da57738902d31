#ifndef RATSEARCH_GROEBNER_HPP
#define RATSEARCH_GROEBNER_HPP

#include <vector>

#include "ratsearch/order.hpp"
#include "ratsearch/polynomial.hpp"

namespace ratsearch {

// remainder of f on multivariate division by basis (deterministic: the
// order-greatest reducible term is cancelled against the first matching
// basis element)
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& ord);

// reduced Groebner basis: pairwise minimal leading terms, fully tail-reduced,
// every element primitive integer with positive leading coefficient, sorted
// by ascending leading monomial.  Zero ideal gives an empty basis.
std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens,
                                       const MonomialOrder& ord);

// generators of the ideal with `eliminate` projected away, re-expressed over
// the ambient list minus those variables
std::vector<Polynomial> elimination_ideal(const std::vector<Polynomial>& gens,
                                          const std::vector<std::string>& eliminate);

// saturation I : g^inf via a fresh inverse variable
std::vector<Polynomial> saturate(const std::vector<Polynomial>& gens, const Polynomial& g);

// generators of A ∩ B via the fresh-parameter trick t*A + (1-t)*B
std::vector<Polynomial> ideal_intersection(const std::vector<Polynomial>& a,
                                           const std::vector<Polynomial>& b);

// Krull dimension of the vanishing set: -1 for the unit ideal, nvars for the
// zero ideal, otherwise the largest variable subset independent modulo the
// leading-term ideal
int dimension(const std::vector<Polynomial>& gens);

// number of monomials outside the leading-term ideal of a reduced basis
// (finite exactly when the ideal is zero-dimensional)
unsigned standard_monomial_count(const std::vector<Polynomial>& gb, const MonomialOrder& ord);

struct RationalSolution {
    std::vector<Rat> coords;  // aligned with the ambient variable list
};

// A conjugate pair of solutions over Q(alpha), alpha a root of min_poly.
struct QuadraticPairSolution {
    Polynomial min_poly;             // monic irreducible quadratic in "t"
    std::vector<Polynomial> coords;  // over {"t"}, each of degree <= 1
};

struct ZeroDimSolution {
    std::vector<RationalSolution> rational;        // sorted lex ascending
    std::vector<QuadraticPairSolution> quadratic;  // sorted (min_poly, coords)
    unsigned higher_degree = 0;  // residue count of unresolved solutions
};

// Full solution structure of a zero-dimensional system: every rational
// point, every conjugate quadratic pair whose coordinates stay linear over
// the extension, and a standard-monomial count for whatever remains.
ZeroDimSolution solve_zero_dim(const std::vector<Polynomial>& gens);

}  // namespace ratsearch

#endif
