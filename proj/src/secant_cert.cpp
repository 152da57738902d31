#include "secant_cert.hpp"

#include <array>
#include <cstdint>

#include "fparith.hpp"
#include "ratsearch/intfactor.hpp"
#include "ratsearch/polyops.hpp"

namespace ratsearch {

namespace {

using fpx::FP;

// ten fixed primes spread over [2000, 5000]; one clean scan at any of them
// is a complete certificate, the others only absorb unlucky reductions
const std::vector<std::uint64_t>& cert_primes() {
    static const std::vector<std::uint64_t> ps = [] {
        std::vector<std::uint64_t> out;
        std::size_t i = 0;
        for (unsigned long target = 2000; target <= 4700; target += 300) {
            while (nth_prime(i) < target) ++i;
            out.push_back(nth_prime(i));
        }
        return out;
    }();
    return ps;
}

// dense y-major grid mod q: rows[j][i] holds the x^i y^j coefficient
using Grid = std::vector<FP>;

Grid reduce_grid(const Polynomial& f, std::uint64_t q) {
    Grid g;
    for (const auto& [mon, c] : f.terms()) {
        unsigned i = mon.e[0], j = mon.e[1];
        if (g.size() <= j) g.resize(j + 1);
        if (g[j].size() <= i) g[j].resize(i + 1, 0);
        g[j][i] = fpx::fp_from_int_scalar(num(c), q);
    }
    return g;
}

FP eval_rows(const Grid& g, std::uint64_t xh, std::uint64_t q) {
    FP out(g.size(), 0);
    for (std::size_t j = 0; j < g.size(); ++j) out[j] = fpx::fp_eval(g[j], xh, q);
    fpx::fp_trim(out);
    return out;
}

// GF(q^2) as r + s*w with w^2 = D a fixed non-residue
struct F2 {
    std::uint64_t r, s;
};

struct Fq2 {
    std::uint64_t q, D;
    bool is0(F2 a) const { return a.r == 0 && a.s == 0; }
    F2 add(F2 a, F2 b) const { return {(a.r + b.r) % q, (a.s + b.s) % q}; }
    F2 sub(F2 a, F2 b) const { return {(a.r + q - b.r) % q, (a.s + q - b.s) % q}; }
    F2 mul(F2 a, F2 b) const {
        return {(a.r * b.r + a.s * b.s % q * D) % q, (a.r * b.s + a.s * b.r) % q};
    }
    F2 inv(F2 a) const {
        std::uint64_t n = (a.r * a.r % q + (q - a.s * a.s % q) * D) % q;
        std::uint64_t ni = fpx::fp_inv(n, q);
        return {a.r * ni % q, (q - a.s) % q * ni % q};
    }
};

using F2P = std::vector<F2>;

void f2_trim(F2P& f, const Fq2& K) {
    while (!f.empty() && K.is0(f.back())) f.pop_back();
}

F2P f2_rem(F2P a, const F2P& b, const Fq2& K) {
    F2 il = K.inv(b.back());
    while (a.size() >= b.size()) {
        F2 c = K.mul(a.back(), il);
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = K.sub(a[shift + i], K.mul(c, b[i]));
        f2_trim(a, K);
    }
    return a;
}

bool f2_gcd_constant(F2P a, F2P b, const Fq2& K) {
    f2_trim(a, K);
    f2_trim(b, K);
    while (!b.empty()) {
        a = f2_rem(std::move(a), b, K);
        std::swap(a, b);
    }
    return a.size() == 1;
}

F2P eval_rows2(const Grid& g, F2 xh, const Fq2& K) {
    F2P out(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) {
        F2 acc{0, 0};
        for (std::size_t i = g[j].size(); i-- > 0;) acc = K.add(K.mul(acc, xh), F2{g[j][i], 0});
        out[j] = acc;
    }
    f2_trim(out, K);
    return out;
}

// One prime, full certificate. Needs: the center data reduces, the leading
// binary forms of curve and companion keep degree and share no projective
// root (so rational and quadratic points still reduce into the affine
// chart), and then no abscissa in GF(q) and none in the norm-constrained
// part of GF(q^2) carries a common root of curve and companion.
bool certified_at_prime(const Polynomial& Fint, const Polynomial& Gint, const Rat& p,
                        const Rat& a, const Rat& b, int d, std::uint64_t q) {
    if (mpz_divisible_ui_p(den(p).get_mpz_t(), static_cast<unsigned long>(q)) ||
        mpz_divisible_ui_p(den(a).get_mpz_t(), static_cast<unsigned long>(q)) ||
        mpz_divisible_ui_p(den(b).get_mpz_t(), static_cast<unsigned long>(q)))
        return false;
    std::uint64_t ab = fpx::fp_from_rat_scalar(a, q);
    std::uint64_t pb = fpx::fp_from_rat_scalar(p, q);
    if (ab == 0) return false;

    const int dg = Gint.degree();
    std::vector<std::uint64_t> ft(static_cast<std::size_t>(d) + 1, 0);
    std::vector<std::uint64_t> gt(static_cast<std::size_t>(dg) + 1, 0);
    for (const auto& [mon, c] : Fint.terms())
        if (static_cast<int>(mon.e[0] + mon.e[1]) == d)
            ft[mon.e[0]] = fpx::fp_from_int_scalar(num(c), q);
    for (const auto& [mon, c] : Gint.terms())
        if (static_cast<int>(mon.e[0] + mon.e[1]) == dg)
            gt[mon.e[0]] = fpx::fp_from_int_scalar(num(c), q);
    if (ft[0] == 0) return false;  // the y^d coefficient must stay visible
    if (ft[static_cast<std::size_t>(d)] == 0 && gt[static_cast<std::size_t>(dg)] == 0)
        return false;  // shared direction (1 : 0)
    FP fT = ft, gT = gt;
    fpx::fp_trim(fT);
    fpx::fp_trim(gT);
    if (gT.empty()) return false;  // companion degree collapsed mod q
    if (fpx::fp_gcd(fT, gT, q).size() != 1) return false;  // shared finite direction

    Grid Fq = reduce_grid(Fint, q);
    Grid Gq = reduce_grid(Gint, q);

    // every rational secant endpoint reduces to an affine common root
    for (std::uint64_t xh = 0; xh < q; ++xh) {
        FP fy = eval_rows(Fq, xh, q);
        FP gy = eval_rows(Gq, xh, q);
        if (fpx::fp_gcd(fy, gy, q).size() != 1) return false;
    }

    // quadratic-conjugate pairs satisfy Norm(x - p) = -a, so inert reductions
    // land on the norm conic (u - p)^2 - D v^2 = -a with v != 0; the v = 0
    // classes were already covered by the GF(q) pass
    std::vector<std::uint64_t> sqrt_tab(q, q);
    for (std::uint64_t v = 0; v <= q / 2; ++v) sqrt_tab[v * v % q] = v;
    std::uint64_t D = 2;
    while (D < q && sqrt_tab[D] != q) ++D;
    if (D >= q) return false;
    Fq2 K{q, D};
    std::uint64_t Dinv = fpx::fp_inv(D, q);
    for (std::uint64_t u = 0; u < q; ++u) {
        std::uint64_t U = (u + q - pb) % q;
        std::uint64_t vv = (U * U + ab) % q * Dinv % q;
        if (vv == 0) continue;
        std::uint64_t v = sqrt_tab[vv];
        if (v == q) continue;
        F2 xh{u, v};
        F2P fy = eval_rows2(Fq, xh, K);
        F2P gy = eval_rows2(Gq, xh, K);
        if (!f2_gcd_constant(std::move(fy), std::move(gy), K)) return false;
    }
    return true;
}

}  // namespace

Polynomial partner_pullback(const Polynomial& f, const Rat& p, const Rat& a, const Rat& b) {
    const VarListPtr& V = f.vars();
    const int d = f.degree();
    Polynomial x = Polynomial::variable(V, "x");
    Polynomial y = Polynomial::variable(V, "y");
    Polynomial xm = x - Polynomial::constant(V, p);
    Polynomial Nx = xm * p - Polynomial::constant(V, a);
    Polynomial Ny = xm * y * a - (xm * xm + Polynomial::constant(V, a)) * b;

    std::vector<Polynomial> pNx{Polynomial::constant(V, 1)};
    std::vector<Polynomial> pxm{Polynomial::constant(V, 1)};
    std::vector<Polynomial> pNy{Polynomial::constant(V, 1)};
    std::vector<Rat> pa{Rat(1)};
    for (int i = 1; i <= d; ++i) {
        pNx.push_back(pNx.back() * Nx);
        pxm.push_back(pxm.back() * xm);
        pNy.push_back(pNy.back() * Ny);
        pa.push_back(pa.back() * a);
    }

    // gather the x-dependence per y-row first, so the only bivariate products
    // are the d + 1 row sums against the involution powers
    Polynomial G = Polynomial::zero(V);
    for (int j = 0; j <= d; ++j) {
        Polynomial Uj = Polynomial::zero(V);
        bool any = false;
        for (const auto& [mon, c] : f.terms()) {
            if (static_cast<int>(mon.e[1]) != j) continue;
            unsigned i = mon.e[0];
            Uj = Uj + pNx[i] * pxm[static_cast<std::size_t>(d - j) - i] * c;
            any = true;
        }
        if (!any) continue;
        G = G + Uj * pNy[static_cast<std::size_t>(j)] * pa[static_cast<std::size_t>(d - j)];
    }
    return G;
}

Polynomial secant_companion(const Polynomial& f, const Rat& p, const Rat& a, const Rat& b) {
    const VarListPtr& V = f.vars();
    const int d = f.degree();
    Polynomial xm = Polynomial::variable(V, "x") - Polynomial::constant(V, p);
    Polynomial axm = xm * a;
    Polynomial lead = Polynomial::constant(V, 1);
    for (int i = 0; i < d; ++i) lead = lead * axm;
    Polynomial R = partner_pullback(f, p, a, b) - lead * f;
    if (R.is_zero()) return R;
    return exact_div(R, xm * xm + Polynomial::constant(V, a));
}

ScreenVerdict screen_center_modular(const SpaceCurve& C, const CandidateCenter& m) {
    const Polynomial& f = C.source.poly();
    const int d = C.source.degree();

    // with a = 0 the member line through an affine point meets the puncture
    // quadric only there: (x + ta - p)(z + t) = 1 collapses to t(x - p) = 0
    if (m.a == 0) return SafeCenter{};

    Polynomial comp = secant_companion(f, C.p, m.a, m.b);
    if (comp.is_zero()) return PositiveDimensional{};
    if (!poly_gcd(f, comp).is_constant()) return PositiveDimensional{};
    if (comp.degree() != 2 * d - 2) return DegenerateCenter{"no modular safety certificate"};

    Polynomial Gint = comp.primitive();
    for (std::uint64_t q : cert_primes())
        if (certified_at_prime(f, Gint, C.p, m.a, m.b, d, q)) return SafeCenter{};
    return DegenerateCenter{"no modular safety certificate"};
}

}  // namespace ratsearch
