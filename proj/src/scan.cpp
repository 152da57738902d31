#include "ratsearch/scan.hpp"

#include <algorithm>

namespace ratsearch {

namespace {

constexpr std::uint64_t M = 251;

std::uint64_t mod_int(const Int& v) {
    return mpz_fdiv_ui(v.get_mpz_t(), M);
}

std::uint64_t mod_long(long v) {
    long r = v % (long)M;
    if (r < 0) r += (long)M;
    return (std::uint64_t)r;
}

// powers[0..n] of base mod M
void pow_table_mod(std::uint64_t base, unsigned n, std::vector<std::uint64_t>& out) {
    out.resize(n + 1);
    out[0] = 1;
    for (unsigned i = 1; i <= n; ++i) out[i] = out[i - 1] * base % M;
}

void pow_table_int(const Int& base, unsigned n, std::vector<Int>& out) {
    out.resize(n + 1);
    out[0] = 1;
    for (unsigned i = 1; i <= n; ++i) out[i] = out[i - 1] * base;
}

}  // namespace

PointScan::PointScan(const PlaneCurve& F) {
    const Polynomial& f = F.poly();
    degree_ = (unsigned)F.degree();
    for (const auto& [mono, coef] : f.terms()) {
        Term t;
        t.i = mono.e[0];
        t.j = mono.e[1];
        t.k = degree_ - t.i - t.j;
        t.c = num(coef);  // curve polynomials carry integer coefficients
        t.cmod = mod_int(t.c);
        terms_.push_back(std::move(t));
    }
}

bool PointScan::exact_zero(const Int& p, const Int& q, const Int& r) const {
    std::vector<Int> pp, pq, pr;
    pow_table_int(p, degree_, pp);
    pow_table_int(q, degree_, pq);
    pow_table_int(r, degree_, pr);
    Int acc = 0;
    for (const Term& t : terms_) acc += t.c * pp[t.i] * pq[t.j] * pr[t.k];
    return acc == 0;
}

std::vector<ReducedPoint> PointScan::shell(unsigned long h) const {
    std::vector<ReducedPoint> out;
    if (h == 0) return out;
    const long H = (long)h;
    std::vector<std::uint64_t> pw_p, pw_r, pw_q;
    std::vector<std::uint64_t> cj(degree_ + 1);
    bool root[M];

    auto try_point = [&](long p, long q, long r) {
        Int ip(p), iq(q), ir(r);
        if (gcd3(ip, iq, ir) != 1) return;
        if (!exact_zero(ip, iq, ir)) return;
        ReducedPoint pt;
        pt.p = ip; pt.q = iq; pt.r = ir;
        out.push_back(std::move(pt));
    };

    for (long p = -H; p <= H; ++p) {
        for (long r = 1; r <= H; ++r) {
            bool edge = (r == H) || (p == H) || (p == -H);
            if (edge) {
                // height h is already pinned by p or r: sieve the whole q range
                pow_table_mod(mod_long(p), degree_, pw_p);
                pow_table_mod(mod_long(r), degree_, pw_r);
                std::fill(cj.begin(), cj.end(), 0);
                for (const Term& t : terms_)
                    cj[t.j] = (cj[t.j] + t.cmod * pw_p[t.i] % M * pw_r[t.k]) % M;
                for (std::uint64_t qm = 0; qm < M; ++qm) {
                    std::uint64_t acc = 0;
                    for (unsigned j = degree_ + 1; j-- > 0;) acc = (acc * qm + cj[j]) % M;
                    root[qm] = (acc == 0);
                }
                for (long q = -H; q <= H; ++q)
                    if (root[mod_long(q)]) try_point(p, q, r);
            } else {
                // interior pair: only |q| = h reaches this shell
                pow_table_mod(mod_long(p), degree_, pw_p);
                pow_table_mod(mod_long(r), degree_, pw_r);
                for (long q : {-H, H}) {
                    pow_table_mod(mod_long(q), degree_, pw_q);
                    std::uint64_t acc = 0;
                    for (const Term& t : terms_)
                        acc = (acc + t.cmod * pw_p[t.i] % M * pw_q[t.j] % M * pw_r[t.k]) % M;
                    if (acc == 0) try_point(p, q, r);
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), point_order_less);
    return out;
}

std::optional<ReducedPoint> PointScan::first(unsigned long cap) const {
    for (unsigned long h = 1; h <= cap; ++h) {
        std::vector<ReducedPoint> s = shell(h);
        if (!s.empty()) return s.front();
    }
    return std::nullopt;
}

std::vector<ReducedPoint> PointScan::up_to(unsigned long bound) const {
    std::vector<ReducedPoint> out;
    for (unsigned long h = 1; h <= bound; ++h) {
        std::vector<ReducedPoint> s = shell(h);
        out.insert(out.end(), s.begin(), s.end());
    }
    return out;
}

}  // namespace ratsearch
