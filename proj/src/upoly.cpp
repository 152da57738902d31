#include "ratsearch/upoly.hpp"

#include <algorithm>
#include <cstdint>

#include "fparith.hpp"
#include "ratsearch/errors.hpp"
#include "ratsearch/intfactor.hpp"

namespace ratsearch {

namespace {

using namespace fpx;

// dense coefficient vectors, index = exponent, no trailing zeros
using QP = std::vector<Rat>;
using ZP = std::vector<Int>;

void trim(QP& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int deg(const QP& f) { return static_cast<int>(f.size()) - 1; }

QP mul(const QP& a, const QP& b) {
    if (a.empty() || b.empty()) return {};
    QP r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

// in-place remainder, returns quotient; b nonzero
QP divrem(QP& a, const QP& b) {
    if (b.empty()) throw InternalError("univariate division by zero");
    QP q;
    if (deg(a) >= deg(b)) q.assign(a.size() - b.size() + 1, Rat(0));
    while (deg(a) >= deg(b)) {
        Rat c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        trim(a);
    }
    trim(q);
    return q;
}

bool divides_exactly(const QP& d, const QP& f, QP& quotient) {
    QP r = f;
    quotient = divrem(r, d);
    return r.empty();
}

// scale to primitive integer content with positive leading coefficient
QP primitive(const QP& f) {
    if (f.empty()) return f;
    Int l(1), g(0);
    for (const Rat& c : f) l = lcm(l, den(c));
    for (const Rat& c : f) g = gcd(g, num(c) * (l / den(c)));
    Rat s = make_rat(l, g);
    if (f.back() < 0) s = -s;
    QP r(f);
    for (Rat& c : r) c *= s;
    return r;
}

QP monic(const QP& f) {
    if (f.empty()) return f;
    QP r(f);
    Rat inv = Rat(1) / f.back();
    for (Rat& c : r) c *= inv;
    return r;
}

QP derivative(const QP& f) {
    QP r;
    for (std::size_t i = 1; i < f.size(); ++i) r.push_back(f[i] * Rat(static_cast<long>(i)));
    trim(r);
    return r;
}

// monic gcd; keeps remainders primitive to curb coefficient growth
QP gcd_qp(QP a, QP b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        divrem(a, b);
        a = primitive(a);
        std::swap(a, b);
    }
    return monic(a);
}

ZP to_int(const QP& f) {
    QP p = primitive(f);
    ZP r;
    r.reserve(p.size());
    for (const Rat& c : p) r.push_back(num(c));
    return r;
}

QP to_rat(const ZP& f) {
    QP r;
    r.reserve(f.size());
    for (const Int& c : f) r.push_back(Rat(c));
    return r;
}

// --- single-variable extraction -------------------------------------------

// index of the unique used variable, or -1 if constant
int single_var(const Polynomial& f) {
    int found = -1;
    for (std::size_t i = 0; i < f.nvars(); ++i) {
        if (!f.uses_var(static_cast<int>(i))) continue;
        if (found >= 0) throw InputError("expected a univariate polynomial");
        found = static_cast<int>(i);
    }
    return found;
}

QP dense_coeffs(const Polynomial& f, int var) {
    QP out(static_cast<std::size_t>(std::max(f.degree_in(var), 0)) + 1, Rat(0));
    if (f.is_zero()) return {};
    for (const auto& [m, c] : f.terms()) out[m.e[static_cast<std::size_t>(var)]] = c;
    trim(out);
    return out;
}

Polynomial rebuild(const VarListPtr& vars, int var, const QP& f) {
    return Polynomial::from_univariate(vars, (*vars)[static_cast<std::size_t>(var)], f);
}

// --- Z/p^k arithmetic for Hensel lifting -----------------------------------

ZP zp_reduce(const ZP& f, const Int& m) {
    ZP r;
    r.reserve(f.size());
    for (const Int& c : f) {
        Int v = c % m;
        if (v < 0) v += m;
        r.push_back(v);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

ZP zp_mul(const ZP& a, const ZP& b, const Int& m) {
    if (a.empty() || b.empty()) return {};
    ZP r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % m;
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

ZP from_fp(const FP& f) {
    ZP r;
    r.reserve(f.size());
    for (auto c : f) r.push_back(Int(static_cast<unsigned long>(c)));
    return r;
}

// centered representative in (-m/2, m/2]
ZP zp_center(const ZP& f, const Int& m) {
    ZP r = zp_reduce(f, m);
    Int half = m / 2;
    for (Int& c : r)
        if (c > half) c -= m;
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// Lifts H = A*B (mod p) with A monic, gcd(A,B) = 1 mod p, to mod p^k.
// Returns the lifted monic A.
ZP hensel_lift(const ZP& H, const FP& A0, const FP& B0, std::uint64_t p, unsigned k) {
    // Bezout: s*A0 + t*B0 = 1 in F_p[x]
    FP s, t;
    {
        FP r0 = A0, r1 = B0;
        FP s0{1}, s1{}, t0{}, t1{1};
        while (!r1.empty()) {
            FP rr = r0;
            FP q = fp_divrem(rr, r1, p);
            auto comb = [&](const FP& u0, const FP& u1) {
                FP qu = fp_mul(q, u1, p);
                FP res = u0;
                if (res.size() < qu.size()) res.resize(qu.size(), 0);
                for (std::size_t i = 0; i < qu.size(); ++i) res[i] = (res[i] + p - qu[i]) % p;
                fp_trim(res);
                return res;
            };
            FP ns = comb(s0, s1), nt = comb(t0, t1);
            r0 = r1; r1 = rr;
            s0 = s1; s1 = ns;
            t0 = t1; t1 = nt;
        }
        if (r0.size() != 1) throw InternalError("hensel: factors not coprime mod p");
        std::uint64_t inv = fp_inv(r0[0], p);
        for (auto& c : s0) c = c * inv % p;
        for (auto& c : t0) c = c * inv % p;
        s = s0;
        t = t0;
    }

    ZP A = from_fp(A0), B = from_fp(B0);
    Int pj(static_cast<unsigned long>(p));
    for (unsigned j = 1; j < k; ++j) {
        Int pj1 = pj * static_cast<unsigned long>(p);
        // e = (H - A*B) / p^j mod p
        ZP prod = zp_mul(A, B, pj1);
        ZP e;
        {
            ZP diff = H;
            if (diff.size() < prod.size()) diff.resize(prod.size(), Int(0));
            for (std::size_t i = 0; i < prod.size(); ++i) diff[i] -= prod[i];
            for (Int& c : diff) {
                c %= pj1;
                if (c < 0) c += pj1;
                if (c % pj != 0) throw InternalError("hensel: defect not divisible");
                c /= pj;
            }
            while (!diff.empty() && diff.back() == 0) diff.pop_back();
            e = diff;
        }
        FP efp = fp_from_int(e, p);
        // deltaA = t*e mod A0 ; deltaB = (e - B0*deltaA)/A0
        FP te = fp_mul(t, efp, p);
        FP dA = te;
        fp_divrem(dA, A0, p);
        FP numa = fp_mul(B0, dA, p);
        FP rest = efp;
        if (rest.size() < numa.size()) rest.resize(numa.size(), 0);
        for (std::size_t i = 0; i < numa.size(); ++i) rest[i] = (rest[i] + p - numa[i]) % p;
        fp_trim(rest);
        FP dB = fp_divrem(rest, A0, p);
        if (!rest.empty()) throw InternalError("hensel: correction not divisible");
        // A += p^j dA ; B += p^j dB
        auto add_scaled = [&](ZP& f, const FP& d) {
            if (f.size() < d.size()) f.resize(d.size(), Int(0));
            for (std::size_t i = 0; i < d.size(); ++i)
                f[i] = (f[i] + pj * static_cast<unsigned long>(d[i])) % pj1;
            while (!f.empty() && f.back() == 0) f.pop_back();
        };
        A = zp_reduce(A, pj1);
        B = zp_reduce(B, pj1);
        add_scaled(A, dA);
        add_scaled(B, dB);
        pj = pj1;
    }
    return A;
}

// primitive part of an integer polynomial (positive leading coefficient)
ZP zp_primitive(const ZP& f) {
    ZP r = f;
    while (!r.empty() && r.back() == 0) r.pop_back();
    if (r.empty()) return r;
    Int g(0);
    for (const Int& c : r) g = gcd(g, c);
    if (r.back() < 0) g = -g;
    for (Int& c : r) c /= g;
    return r;
}

}  // namespace

Polynomial univariate_gcd(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() && g.is_zero()) throw ZeroPolynomialError("univariate_gcd(0, 0)");
    if (*f.vars() != *g.vars()) throw InputError("univariate_gcd: ambient lists differ");
    int vf = f.is_zero() ? -1 : single_var(f);
    int vg = g.is_zero() ? -1 : single_var(g);
    if (vf >= 0 && vg >= 0 && vf != vg)
        throw InputError("univariate_gcd: polynomials use different variables");
    int v = vf >= 0 ? vf : vg;
    if (v < 0) return Polynomial::constant(f.vars(), 1);  // both constants, not both zero
    QP r = gcd_qp(dense_coeffs(f, v), dense_coeffs(g, v));
    return rebuild(f.vars(), v, r);
}

std::vector<Rat> rational_roots(const Polynomial& f) {
    if (f.is_zero()) throw ZeroPolynomialError("rational_roots: zero polynomial");
    int v = single_var(f);
    if (v < 0) return {};
    QP q = dense_coeffs(f, v);
    std::vector<Rat> roots;
    std::size_t val = 0;
    while (val < q.size() && q[val] == 0) ++val;
    if (val > 0) {
        roots.push_back(Rat(0));
        q.erase(q.begin(), q.begin() + static_cast<long>(val));
    }
    if (deg(q) < 1) {
        return roots;
    }
    ZP P = to_int(q);
    std::size_t n = P.size() - 1;
    if (n == 1) {
        roots.push_back(make_rat(-P[0], P[1]));
        std::sort(roots.begin(), roots.end());
        return roots;
    }

    // squarefree reduction keeps the root set and makes residues simple mod p
    ZP S = P;
    {
        QP a = to_rat(P);
        QP g = gcd_qp(a, derivative(a));
        if (deg(g) >= 1) {
            QP r = a;
            QP quo = divrem(r, g);
            if (!r.empty()) throw InternalError("rational_roots: squarefree division failed");
            S = to_int(quo);
        }
    }

    // a prime that keeps S squarefree with the same degree
    std::uint64_t p = 0;
    FP sp;
    for (std::size_t pi = 26;; ++pi) {  // primes from 103 up
        std::uint64_t cand = nth_prime(pi);
        if (mpz_divisible_ui_p(S.back().get_mpz_t(), cand)) continue;
        FP hp = fp_from_int(S, cand);
        FP dp;
        for (std::size_t i = 1; i < hp.size(); ++i) dp.push_back(hp[i] * (i % cand) % cand);
        fp_trim(dp);
        if (dp.empty()) continue;
        if (fp_gcd(hp, dp, cand).size() != 1) continue;
        p = cand;
        sp = hp;
        break;
    }

    // any rational root u/w has w | lc(S), a unit mod p, so it leaves a residue
    std::vector<std::uint64_t> res;
    for (std::uint64_t x = 0; x < p; ++x)
        if (fp_eval(sp, x, p) == 0) res.push_back(x);
    if (res.empty()) {
        std::sort(roots.begin(), roots.end());
        return roots;
    }

    // a primitive linear factor w*x - u of S has max(|u|, |w|) <= 2 ||S||_2
    Int norm2(0);
    for (const Int& c : S) norm2 += c * c;
    Int M = 2 * (isqrt(norm2) + 1);
    Int target = 2 * M * M + 1;
    unsigned levels = 0;
    {
        Int pk(static_cast<unsigned long>(p));
        while (pk < target) {
            pk *= pk;
            ++levels;
        }
    }

    ZP dS;
    for (std::size_t i = 1; i < S.size(); ++i) dS.push_back(S[i] * static_cast<unsigned long>(i));
    auto eval_mod = [](const ZP& g, const Int& at, const Int& mod) {
        Int acc(0);
        for (std::size_t i = g.size(); i-- > 0;) {
            acc = (acc * at + g[i]) % mod;
        }
        if (acc < 0) acc += mod;
        return acc;
    };

    for (std::uint64_t r0 : res) {
        // Newton iteration doubling precision, inverse of S' carried along
        Int m(static_cast<unsigned long>(p));
        Int x(static_cast<unsigned long>(r0));
        Int inv(static_cast<unsigned long>(fp_inv(fp_eval(fp_from_int(dS, p), r0, p), p)));
        for (unsigned l = 0; l < levels; ++l) {
            m = m * m;
            Int fx = eval_mod(S, x, m);
            x = (x - fx * inv) % m;
            if (x < 0) x += m;
            Int dx = eval_mod(dS, x, m);
            Int corr = dx * inv % m;
            corr = 2 - corr;
            inv = inv * corr % m;
            if (inv < 0) inv += m;
        }
        // rational reconstruction of u/w with |u|, |w| <= M from x mod m
        Int r = x, rp = m, t(1), tp(0);
        while (r > M) {
            Int quo = rp / r;
            Int nr = rp - quo * r;
            Int nt = tp - quo * t;
            rp = r;
            r = nr;
            tp = t;
            t = nt;
        }
        if (t == 0) continue;
        if (t < 0) {
            t = -t;
            r = -r;
        }
        if (t > M) continue;
        Int g = gcd(r, t);
        if (g > 1) {
            r /= g;
            t /= g;
        }
        // exact confirmation on the input coefficients
        Int acc(0);
        for (std::size_t i = P.size(); i-- > 0;) acc = acc * r + P[i] * ipow(t, n - i);
        if (acc == 0) roots.push_back(make_rat(r, t));
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

Polynomial univariate_exact_div(const Polynomial& f, const Polynomial& d) {
    if (d.is_zero()) throw InternalError("univariate_exact_div: zero divisor");
    if (*f.vars() != *d.vars()) throw InputError("univariate_exact_div: ambient lists differ");
    int vf = f.is_zero() ? -1 : single_var(f);
    int vd = d.is_constant() ? -1 : single_var(d);
    if (vf >= 0 && vd >= 0 && vf != vd)
        throw InputError("univariate_exact_div: polynomials use different variables");
    int v = vf >= 0 ? vf : (vd >= 0 ? vd : 0);
    if (f.is_zero()) return f;
    QP a = dense_coeffs(f, v);
    QP b = d.is_constant() ? QP{d.constant_value()} : dense_coeffs(d, v);
    QP q = divrem(a, b);
    if (!a.empty()) throw InternalError("univariate_exact_div: remainder is nonzero");
    return rebuild(f.vars(), v, q);
}

Polynomial univariate_squarefree_part(const Polynomial& f) {
    if (f.is_zero()) throw ZeroPolynomialError("univariate_squarefree_part: zero polynomial");
    int v = single_var(f);
    if (v < 0) return Polynomial::constant(f.vars(), 1);
    QP a = monic(dense_coeffs(f, v));
    QP g = gcd_qp(a, derivative(a));
    QP r = a;
    QP quo = divrem(r, g);
    if (!r.empty()) throw InternalError("squarefree part: gcd does not divide");
    return rebuild(f.vars(), v, monic(quo));
}

FactorLowDegreeResult factor_low_degree(const Polynomial& f, int max_deg) {
    if (f.is_zero()) throw ZeroPolynomialError("factor_low_degree: zero polynomial");
    if (max_deg < 1 || max_deg > 2) throw InputError("factor_low_degree: max_deg must be 1 or 2");
    const VarListPtr& vars = f.vars();
    int v = single_var(f);
    FactorLowDegreeResult out;
    if (v < 0) {
        out.cofactor = Polynomial::constant(vars, 1);
        return out;
    }
    QP cof = monic(dense_coeffs(f, v));
    std::vector<std::pair<QP, unsigned>> got;

    for (const Rat& r : rational_roots(f)) {
        QP lin{-r, Rat(1)};
        unsigned m = 0;
        QP quo;
        while (divides_exactly(lin, cof, quo)) {
            cof = quo;
            ++m;
        }
        if (m == 0) throw InternalError("factor_low_degree: reported root does not divide");
        got.emplace_back(lin, m);
    }

    if (max_deg == 2 && deg(cof) >= 2) {
        std::vector<QP> quad_candidates;
        if (deg(cof) == 2) {
            quad_candidates.push_back(cof);  // no rational roots left: irreducible
        } else if (deg(cof) >= 4) {
            // distinct quadratic factors live in the squarefree part
            QP sq = cof;
            {
                QP g = gcd_qp(cof, derivative(cof));
                QP q;
                if (!divides_exactly(g, cof, q)) throw InternalError("squarefree division failed");
                sq = q;
            }
            ZP H = to_int(sq);
            Int L = H.back();

            // smallest prime keeping H squarefree (and degree) mod p
            std::uint64_t p = 0;
            for (std::size_t pi = 0;; ++pi) {
                std::uint64_t cand = nth_prime(pi);
                if (mpz_divisible_ui_p(L.get_mpz_t(), cand)) continue;
                FP hp = fp_from_int(H, cand);
                FP dp = hp;
                {  // derivative mod p
                    FP d;
                    for (std::size_t i = 1; i < hp.size(); ++i)
                        d.push_back(hp[i] * (i % cand) % cand);
                    fp_trim(d);
                    dp = d;
                }
                if (dp.empty()) continue;
                FP g = fp_gcd(hp, dp, cand);
                if (g.size() == 1) {
                    p = cand;
                    break;
                }
            }

            // factor H mod p into linear and quadratic irreducibles
            FP hp = fp_monic(fp_from_int(H, p), p);
            std::vector<FP> linfac, quadfac;
            for (std::uint64_t x = 0; x < p; ++x) {
                if (fp_eval(hp, x, p) == 0) {
                    FP lin{(p - x) % p, 1};
                    FP rem = hp;
                    FP q = fp_divrem(rem, lin, p);
                    if (!rem.empty()) throw InternalError("fp root division failed");
                    hp = q;
                    linfac.push_back(lin);
                }
            }
            if (hp.size() > 1) {
                // quadratic part via gcd with x^(p^2) - x
                FP frob2 = fp_powmod_x(hp, p, 2);
                // frob2 - x
                FP diff = frob2;
                if (diff.size() < 2) diff.resize(2, 0);
                diff[1] = (diff[1] + p - 1) % p;
                fp_trim(diff);
                // empty diff: hp divides x^(p^2) - x, all factors have degree <= 2
                FP d2 = diff.empty() ? hp : fp_gcd(hp, diff, p);
                if (d2.size() == 3) {
                    quadfac.push_back(fp_monic(d2, p));
                } else if (d2.size() > 3) {
                    // split by scanning monic quadratics; only irreducible ones divide
                    FP rest = d2;
                    for (std::uint64_t u = 0; u < p && rest.size() > 1; ++u) {
                        for (std::uint64_t w = 0; w < p && rest.size() > 1; ++w) {
                            FP cand{w, u, 1};
                            FP rem = rest;
                            FP q = fp_divrem(rem, cand, p);
                            if (rem.empty()) {
                                quadfac.push_back(cand);
                                rest = q;
                            }
                        }
                    }
                }
            }

            if (!linfac.empty() || !quadfac.empty()) {
                // lift each factor of interest past the degree-2 divisor bound
                Int norm2(0);
                for (const Int& c : H) norm2 += c * c;
                Int bound = 4 * (isqrt(norm2) + 1) * 2 + 1;  // > 2 * 4 * ||H||_2
                unsigned k = 1;
                Int pk(static_cast<unsigned long>(p));
                while (pk <= bound) {
                    pk *= static_cast<unsigned long>(p);
                    ++k;
                }

                FP hmodp = fp_monic(fp_from_int(H, p), p);
                std::uint64_t lmod = mpz_fdiv_ui(L.get_mpz_t(), p);
                ZP Hk = zp_reduce(H, pk);
                auto lift_one = [&](const FP& fac) {
                    FP rem = hmodp;
                    FP cofp = fp_divrem(rem, fac, p);
                    if (!rem.empty()) throw InternalError("modular factor does not divide");
                    // restore the true leading coefficient on the cofactor side
                    for (auto& c : cofp) c = c * lmod % p;
                    return hensel_lift(Hk, fac, cofp, p, k);
                };

                std::vector<ZP> lifted_lin, lifted_quad;
                for (const FP& lf : linfac) lifted_lin.push_back(lift_one(lf));
                for (const FP& qf : quadfac) lifted_quad.push_back(lift_one(qf));

                std::vector<QP> cands;
                auto push_cand = [&](const ZP& a) {
                    ZP scaled;
                    scaled.reserve(a.size());
                    for (const Int& c : a) scaled.push_back(c * L % pk);
                    ZP cand = zp_primitive(zp_center(scaled, pk));
                    if (cand.size() == 3) cands.push_back(monic(to_rat(cand)));
                };
                for (const ZP& qf : lifted_quad) push_cand(qf);
                for (std::size_t i = 0; i < lifted_lin.size(); ++i)
                    for (std::size_t j = i + 1; j < lifted_lin.size(); ++j)
                        push_cand(zp_mul(lifted_lin[i], lifted_lin[j], pk));
                std::sort(cands.begin(), cands.end(), [](const QP& a, const QP& b) {
                    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
                });
                cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
                quad_candidates = cands;
            }
        }

        for (const QP& cand : quad_candidates) {
            unsigned m = 0;
            QP quo;
            while (divides_exactly(cand, cof, quo)) {
                cof = quo;
                ++m;
            }
            if (m > 0) got.emplace_back(cand, m);
        }
    }

    std::sort(got.begin(), got.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return std::lexicographical_compare(a.first.begin(), a.first.end(), b.first.begin(),
                                            b.first.end());
    });

    // postcondition: factors * cofactor reassemble the monic input
    {
        QP check = cof;
        for (const auto& [fac, m] : got)
            for (unsigned i = 0; i < m; ++i) check = mul(check, fac);
        QP want = monic(dense_coeffs(f, v));
        if (check != want) throw InternalError("factor_low_degree: reconstruction failed");
    }

    for (const auto& [fac, m] : got) out.factors.push_back({rebuild(vars, v, fac), m});
    out.cofactor = rebuild(vars, v, cof);
    return out;
}

}  // namespace ratsearch
