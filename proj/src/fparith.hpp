#ifndef RATSEARCH_SRC_FPARITH_HPP
#define RATSEARCH_SRC_FPARITH_HPP

// Dense univariate arithmetic over F_p on machine words, p < 2^31.
// Coefficient vectors are indexed by exponent and keep no trailing zeros.

#include <cstdint>
#include <vector>

#include "ratsearch/errors.hpp"
#include "ratsearch/rational.hpp"

namespace ratsearch {
namespace fpx {

using FP = std::vector<std::uint64_t>;

inline void fp_trim(FP& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline std::uint64_t fp_inv(std::uint64_t a, std::uint64_t p) {
    // extended Euclid on machine words
    std::int64_t t = 0, nt = 1, r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
    while (nr != 0) {
        std::int64_t q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    if (r != 1) throw InternalError("fp_inv: not invertible");
    return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(p) : t);
}

inline std::uint64_t fp_from_int_scalar(const Int& c, std::uint64_t p) {
    return mpz_fdiv_ui(c.get_mpz_t(), static_cast<unsigned long>(p));
}

// numerator times inverse denominator; caller must keep p away from den(c)
inline std::uint64_t fp_from_rat_scalar(const Rat& c, std::uint64_t p) {
    std::uint64_t n = fp_from_int_scalar(num(c), p);
    std::uint64_t d = fp_from_int_scalar(den(c), p);
    if (d == 0) throw InternalError("fp_from_rat_scalar: denominator vanishes mod p");
    return n * fp_inv(d, p) % p;
}

inline FP fp_from_int(const std::vector<Int>& f, std::uint64_t p) {
    FP r;
    r.reserve(f.size());
    for (const Int& c : f) r.push_back(fp_from_int_scalar(c, p));
    fp_trim(r);
    return r;
}

inline FP fp_mul(const FP& a, const FP& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    FP r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    fp_trim(r);
    return r;
}

inline FP fp_divrem(FP& a, const FP& b, std::uint64_t p) {
    if (b.empty()) throw InternalError("fp division by zero");
    FP q;
    std::uint64_t inv = fp_inv(b.back(), p);
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, 0);
    while (a.size() >= b.size() && !a.empty()) {
        std::uint64_t c = a.back() * inv % p;
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) {
            std::uint64_t sub = c * b[i] % p;
            a[shift + i] = (a[shift + i] + p - sub) % p;
        }
        fp_trim(a);
        if (a.empty()) break;
        if (a.size() > shift + b.size() - 1) throw InternalError("fp_divrem: no progress");
    }
    fp_trim(q);
    return q;
}

inline FP fp_gcd(FP a, FP b, std::uint64_t p) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        fp_divrem(a, b, p);
        std::swap(a, b);
    }
    if (!a.empty()) {
        std::uint64_t inv = fp_inv(a.back(), p);
        for (auto& c : a) c = c * inv % p;
    }
    return a;
}

inline FP fp_monic(FP f, std::uint64_t p) {
    fp_trim(f);
    if (f.empty()) return f;
    std::uint64_t inv = fp_inv(f.back(), p);
    for (auto& c : f) c = c * inv % p;
    return f;
}

// x^(p^e) mod f by square-and-multiply
inline FP fp_powmod_x(const FP& f, std::uint64_t p, unsigned e) {
    Int exp = ipow(Int(static_cast<unsigned long>(p)), e);
    FP result{1};
    FP sq{0, 1};  // x
    {
        FP tmp = sq;
        fp_divrem(tmp, f, p);
        sq = tmp;
    }
    for (std::size_t bit = 0; bit < mpz_sizeinbase(exp.get_mpz_t(), 2); ++bit) {
        if (mpz_tstbit(exp.get_mpz_t(), bit)) {
            FP tmp = fp_mul(result, sq, p);
            fp_divrem(tmp, f, p);
            result = tmp;
        }
        FP tmp = fp_mul(sq, sq, p);
        fp_divrem(tmp, f, p);
        sq = tmp;
    }
    fp_trim(result);
    return result;
}

inline std::uint64_t fp_eval(const FP& f, std::uint64_t x, std::uint64_t p) {
    std::uint64_t acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = (acc * x + f[i]) % p;
    return acc;
}

inline FP fp_derivative(const FP& f, std::uint64_t p) {
    FP d;
    for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * (i % p) % p);
    fp_trim(d);
    return d;
}

// Lagrange interpolation through distinct sample points
inline FP fp_interpolate(const std::vector<std::uint64_t>& xs,
                         const std::vector<std::uint64_t>& ys, std::uint64_t p) {
    if (xs.size() != ys.size()) throw InternalError("fp_interpolate: size mismatch");
    FP acc;                 // running interpolant
    FP basis{1};            // prod (x - xs[i]) over processed points
    for (std::size_t i = 0; i < xs.size(); ++i) {
        // Newton form: acc += basis * (ys[i] - acc(xs[i])) / basis(xs[i])
        std::uint64_t want = ys[i] % p;
        std::uint64_t have = fp_eval(acc, xs[i], p);
        std::uint64_t scale = (want + p - have) % p * fp_inv(fp_eval(basis, xs[i], p), p) % p;
        if (scale != 0) {
            if (acc.size() < basis.size()) acc.resize(basis.size(), 0);
            for (std::size_t j = 0; j < basis.size(); ++j)
                acc[j] = (acc[j] + scale * basis[j]) % p;
        }
        FP lin{(p - xs[i] % p) % p, 1};
        basis = fp_mul(basis, lin, p);
    }
    fp_trim(acc);
    return acc;
}

}  // namespace fpx
}  // namespace ratsearch

#endif
