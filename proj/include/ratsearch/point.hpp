#ifndef RATSEARCH_POINT_HPP
#define RATSEARCH_POINT_HPP

#include <array>
#include <optional>
#include <string>

#include "ratsearch/errors.hpp"
#include "ratsearch/rational.hpp"

namespace ratsearch {

// An affine rational plane point (p/r, q/r) stored as the unique integer
// triple with gcd(p, q, r) = 1 and r >= 1.
struct ReducedPoint {
    Int p, q, r;

    ReducedPoint() : p(0), q(0), r(1) {}

    ReducedPoint(Int pp, Int qq, Int rr) : p(std::move(pp)), q(std::move(qq)), r(std::move(rr)) {
        if (r == 0) throw InputError("reduced point needs r != 0");
        if (r < 0) { p = -p; q = -q; r = -r; }
        Int g = gcd3(p, q, r);
        if (g > 1) { p /= g; q /= g; r /= g; }
    }

    Rat x() const { return make_rat(p, r); }
    Rat y() const { return make_rat(q, r); }

    bool operator==(const ReducedPoint& o) const { return p == o.p && q == o.q && r == o.r; }
    bool operator!=(const ReducedPoint& o) const { return !(*this == o); }
};

inline ReducedPoint reduce_point(const Rat& x, const Rat& y) {
    Int r = lcm(den(x), den(y));
    Int p = num(x) * (r / den(x));
    Int q = num(y) * (r / den(y));
    return ReducedPoint(p, q, r);  // lcm construction already yields gcd 1
}

inline Int height(const ReducedPoint& pt) {
    Int h = abs(pt.p);
    Int aq = abs(pt.q);
    if (aq > h) h = aq;
    if (pt.r > h) h = pt.r;
    return h;
}

// height of a single rational: max(|num|, den)
inline Int height(const Rat& q) {
    Int h = abs(num(q));
    if (den(q) > h) h = den(q);
    return h;
}

// sorts by (height, p, q, r): the enumeration order
inline bool point_order_less(const ReducedPoint& a, const ReducedPoint& b) {
    Int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    if (a.p != b.p) return a.p < b.p;
    if (a.q != b.q) return a.q < b.q;
    return a.r < b.r;
}

// A point of P^3 with integer coordinates (w : x : y : z), gcd 1, first
// nonzero coordinate positive.
struct ProjPoint3 {
    std::array<Int, 4> c;  // w, x, y, z

    ProjPoint3() : c{Int(0), Int(0), Int(0), Int(0)} {}

    ProjPoint3(Int w, Int x, Int y, Int z) : c{std::move(w), std::move(x), std::move(y), std::move(z)} {
        canonicalize();
    }

    static ProjPoint3 from_rationals(const Rat& w, const Rat& x, const Rat& y, const Rat& z) {
        Int l = lcm(lcm(den(w), den(x)), lcm(den(y), den(z)));
        return ProjPoint3(num(w) * (l / den(w)), num(x) * (l / den(x)),
                          num(y) * (l / den(y)), num(z) * (l / den(z)));
    }

    void canonicalize() {
        Int g = gcd(gcd(c[0], c[1]), gcd(c[2], c[3]));
        if (g == 0) throw InputError("projective point cannot be all zero");
        for (auto& v : c) v /= g;
        for (const auto& v : c) {
            if (v != 0) {
                if (v < 0) for (auto& u : c) u = -u;
                break;
            }
        }
    }

    const Int& w() const { return c[0]; }
    const Int& x() const { return c[1]; }
    const Int& y() const { return c[2]; }
    const Int& z() const { return c[3]; }

    bool operator==(const ProjPoint3& o) const { return c == o.c; }
    bool operator!=(const ProjPoint3& o) const { return !(*this == o); }

    std::string str() const {
        return "(" + c[0].get_str() + ":" + c[1].get_str() + ":" + c[2].get_str() + ":" + c[3].get_str() + ")";
    }
};

// Emits every reduced triple of height <= h_max, ordered by ascending height
// and, within a height, by lexicographic (p, q, r).  The cursor is exactly
// the last emitted triple, so enumeration can resume from any point.
class PointEnumerator {
  public:
    explicit PointEnumerator(const Int& h_max) : h_max_(h_max), started_(false) {}

    // resume: continue strictly after `last`
    PointEnumerator(const Int& h_max, const ReducedPoint& last)
        : h_max_(h_max), started_(true), h_(height(last)), p_(last.p), q_(last.q), r_(last.r) {}

    std::optional<ReducedPoint> next() {
        while (advance()) {
            if (r_ < 1 || r_ > h_) continue;
            Int m = abs(p_);
            if (abs(q_) > m) m = abs(q_);
            if (r_ > m) m = r_;
            if (m != h_) continue;
            if (gcd3(p_, q_, r_) != 1) continue;
            ReducedPoint pt;
            pt.p = p_; pt.q = q_; pt.r = r_;
            return pt;
        }
        return std::nullopt;
    }

  private:
    // steps the raw (h, p, q, r) cursor once; false when past h_max
    bool advance() {
        if (!started_) {
            started_ = true;
            if (h_max_ < 1) return false;
            h_ = 1; p_ = -1; q_ = -1; r_ = 1;
            return true;
        }
        r_ += 1;
        if (r_ <= h_) return true;
        r_ = 1;
        q_ += 1;
        if (q_ <= h_) return true;
        q_ = -h_;
        p_ += 1;
        if (p_ <= h_) return true;
        h_ += 1;
        if (h_ > h_max_) return false;
        p_ = -h_; q_ = -h_; r_ = 1;
        return true;
    }

    Int h_max_;
    bool started_;
    Int h_, p_, q_, r_;
};

}  // namespace ratsearch

#endif
