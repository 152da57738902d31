#ifndef RATSEARCH_SRC_SECANT_CERT_HPP
#define RATSEARCH_SRC_SECANT_CERT_HPP

// Safe-center screening for degrees where the exact six-variable solve is
// out of reach. The secant condition through a center (0 : a : b : 1) is
// folded into one plane-curve companion polynomial, and a pass of fixed
// small primes then certifies "no affine secant pair" by scanning every
// residue abscissa and every quadratic-conjugate abscissa class.

#include "ratsearch/geometry.hpp"

namespace ratsearch {

// pullback of the curve along the secant involution through (0 : a : b : 1):
// (a(x-p))^d * f(x', y') where (x', y') is the second intersection of the
// member line through (x, y, 1/(x-p)) with the puncture quadric
Polynomial partner_pullback(const Polynomial& f, const Rat& p, const Rat& a, const Rat& b);

// the pullback with its forced part removed: subtract (a(x-p))^d f and divide
// by (x-p)^2 + a, whose locus is where the involution degenerates to the
// identity. Off that locus, a curve point is a secant endpoint iff the
// companion vanishes there too. Zero iff the involution maps the curve to
// itself.
Polynomial secant_companion(const Polynomial& f, const Rat& p, const Rat& a, const Rat& b);

// certificate-based replacement for the affine-pair part of screen_center:
// SafeCenter only with a full per-prime certificate (or when a = 0, where no
// line through the center meets the affine chart twice); PositiveDimensional
// when the companion shares a factor with the curve; DegenerateCenter with a
// "no modular safety certificate" reason when every prime declines, which
// over-rejects but never under-rejects
ScreenVerdict screen_center_modular(const SpaceCurve& C, const CandidateCenter& m);

}  // namespace ratsearch

#endif
