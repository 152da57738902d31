#include "ratsearch/polyops.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#include "fparith.hpp"
#include "ratsearch/errors.hpp"
#include "ratsearch/groebner.hpp"
#include "ratsearch/intfactor.hpp"

namespace ratsearch {

namespace {

using namespace fpx;

// ---- integer univariate helpers, index = exponent ----

using ZU = std::vector<Int>;

void utrim(ZU& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

ZU uprim(ZU f) {
    utrim(f);
    if (f.empty()) return f;
    Int g(0);
    for (const Int& c : f) g = gcd(g, c);
    if (f.back() < 0) g = -g;
    for (Int& c : f) c /= g;
    return f;
}

ZU umul(const ZU& a, const ZU& b) {
    if (a.empty() || b.empty()) return {};
    ZU r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    utrim(r);
    return r;
}

// pseudo-remainder of a by b, in place
void uprem(ZU& a, const ZU& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Int la = a.back();
        const Int& lb = b.back();
        std::size_t k = a.size() - b.size();
        ZU next(a.size() - 1, Int(0));
        for (std::size_t j = 0; j + 1 < a.size(); ++j) {
            next[j] = lb * a[j];
            if (j >= k) next[j] -= la * b[j - k];
        }
        a = std::move(next);
        utrim(a);
    }
}

// primitive positive-lead gcd by pseudo-remainder Euclid
ZU ugcd(ZU a, ZU b) {
    a = uprim(std::move(a));
    b = uprim(std::move(b));
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        uprem(a, b);
        a = uprim(std::move(a));
        std::swap(a, b);
    }
    return a;
}

// gcd in Z[u] keeping the integer content
ZU ugcd_full(const ZU& a, const ZU& b) {
    Int ca(0), cb(0);
    for (const Int& c : a) ca = gcd(ca, c);
    for (const Int& c : b) cb = gcd(cb, c);
    Int cc = gcd(ca, cb);
    ZU g = ugcd(a, b);
    for (Int& c : g) c *= cc;
    return g;
}

ZU udiv_exact(const ZU& a, const ZU& b) {
    if (b.empty()) throw InternalError("udiv_exact: zero divisor");
    ZU r = a;
    ZU q;
    if (r.size() >= b.size()) q.assign(r.size() - b.size() + 1, Int(0));
    while (r.size() >= b.size() && !r.empty()) {
        Int c = r.back() / b.back();
        if (c * b.back() != r.back()) throw InternalError("udiv_exact: leading term not divisible");
        std::size_t k = r.size() - b.size();
        q[k] = c;
        for (std::size_t i = 0; i < b.size(); ++i) r[k + i] -= c * b[i];
        utrim(r);
    }
    if (!r.empty()) throw InternalError("udiv_exact: remainder is nonzero");
    return q;
}

// ---- integer bivariate, outer index = exponent of the secondary variable ----

using ZB = std::vector<ZU>;

void btrim(ZB& f) {
    while (!f.empty() && f.back().empty()) f.pop_back();
}

ZU bcontent(const ZB& f) {
    ZU g;
    for (const ZU& row : f) g = ugcd(g, row);
    return g;
}

ZB bdiv_content(const ZB& f, const ZU& c) {
    ZB r;
    r.reserve(f.size());
    for (const ZU& row : f) r.push_back(row.empty() ? ZU{} : udiv_exact(row, c));
    return r;
}

// zero pseudo-remainder in the secondary variable = divisibility over Q(u)
bool bdivides(ZB a, const ZB& b) {
    btrim(a);
    if (b.empty() || b.back().empty()) throw InternalError("bdivides: zero divisor");
    const ZU& lb = b.back();
    while (a.size() >= b.size() && !a.empty()) {
        ZU la = a.back();
        std::size_t k = a.size() - b.size();
        ZB next(a.size() - 1);
        for (std::size_t j = 0; j + 1 < a.size(); ++j) {
            next[j] = umul(lb, a[j]);
            if (j >= k && j - k < b.size() - 1) {
                ZU sub = umul(la, b[j - k]);
                if (next[j].size() < sub.size()) next[j].resize(sub.size(), Int(0));
                for (std::size_t i = 0; i < sub.size(); ++i) next[j][i] -= sub[i];
                utrim(next[j]);
            }
        }
        a = std::move(next);
        btrim(a);
    }
    return a.empty();
}

int bdeg_u(const ZB& f) {
    int d = -1;
    for (const ZU& row : f) d = std::max(d, static_cast<int>(row.size()) - 1);
    return d;
}

// f must have integer coefficients
ZB to_biv(const Polynomial& f, int ui, int vi) {
    ZB out;
    for (const auto& [m, c] : f.terms()) {
        std::size_t j = m.e[static_cast<std::size_t>(vi)];
        std::size_t i = m.e[static_cast<std::size_t>(ui)];
        if (out.size() <= j) out.resize(j + 1);
        if (out[j].size() <= i) out[j].resize(i + 1, Int(0));
        out[j][i] = num(c);
    }
    for (ZU& row : out) utrim(row);
    btrim(out);
    return out;
}

Polynomial from_biv(const VarListPtr& vars, int ui, int vi, const ZB& f) {
    Polynomial out(vars);
    for (std::size_t j = 0; j < f.size(); ++j) {
        for (std::size_t i = 0; i < f[j].size(); ++i) {
            if (f[j][i] == 0) continue;
            Monomial m(vars->size());
            m.e[static_cast<std::size_t>(ui)] = static_cast<unsigned>(i);
            m.e[static_cast<std::size_t>(vi)] = static_cast<unsigned>(j);
            out.add_term(m, Rat(f[j][i]));
        }
    }
    return out;
}

Polynomial from_uni(const VarListPtr& vars, int ui, const ZU& f) {
    Polynomial out(vars);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        Monomial m(vars->size());
        m.e[static_cast<std::size_t>(ui)] = static_cast<unsigned>(i);
        out.add_term(m, Rat(f[i]));
    }
    return out;
}

// centered CRT merge of grids: x ≡ old (mod mod_old), x ≡ img (mod p)
void crt_merge(ZB& acc, const Int& mod_old, const std::vector<FP>& img, std::uint64_t p) {
    Int mod_new = mod_old * static_cast<unsigned long>(p);
    std::uint64_t minv = fp_inv(fp_from_int_scalar(mod_old, p), p);
    std::size_t rows = std::max(acc.size(), img.size());
    acc.resize(rows);
    Int half = mod_new / 2;
    for (std::size_t j = 0; j < rows; ++j) {
        std::size_t cols = std::max(acc[j].size(), j < img.size() ? img[j].size() : 0);
        acc[j].resize(cols, Int(0));
        for (std::size_t i = 0; i < cols; ++i) {
            std::uint64_t want = (j < img.size() && i < img[j].size()) ? img[j][i] : 0;
            std::uint64_t have = fp_from_int_scalar(acc[j][i], p);
            std::uint64_t t = (want + p - have) % p * minv % p;
            Int x = acc[j][i] + mod_old * static_cast<unsigned long>(t);
            x %= mod_new;
            if (x < 0) x += mod_new;
            if (x > half) x -= mod_new;
            acc[j][i] = x;
        }
    }
}

// Modular gcd of bivariate integer polynomials that are primitive in the
// secondary variable.  Returns the primitive gcd, or an empty ZB meaning
// the gcd is constant.
ZB biv_gcd_primitive(const ZB& A, const ZB& B) {
    ZU gamma = ugcd_full(A.back(), B.back());
    int bound_u = std::min(bdeg_u(A), bdeg_u(B)) + (static_cast<int>(gamma.size()) - 1);
    std::size_t need = static_cast<std::size_t>(bound_u) + 1;

    int degv_best = std::numeric_limits<int>::max();
    ZB acc;
    Int modulus(1);

    for (std::size_t pi = 5000, tried = 0; tried < 64; ++pi) {
        std::uint64_t p = nth_prime(pi);
        // degree-preserving reduction required on both leading rows
        std::vector<FP> Ap, Bp;
        Ap.reserve(A.size());
        Bp.reserve(B.size());
        for (const ZU& row : A) Ap.push_back(fp_from_int(row, p));
        for (const ZU& row : B) Bp.push_back(fp_from_int(row, p));
        if (Ap.back().size() != A.back().size() || Bp.back().size() != B.back().size()) continue;
        FP gp = fp_from_int(gamma, p);
        ++tried;

        std::vector<std::uint64_t> xs;
        std::vector<FP> hs;  // normalized pointwise gcds, coefficients in v
        int dmin = std::numeric_limits<int>::max();
        for (std::uint64_t u = 0; u < p && xs.size() < need; ++u) {
            if (fp_eval(Ap.back(), u, p) == 0 || fp_eval(Bp.back(), u, p) == 0) continue;
            FP av, bv;
            av.reserve(Ap.size());
            bv.reserve(Bp.size());
            for (const FP& row : Ap) av.push_back(fp_eval(row, u, p));
            for (const FP& row : Bp) bv.push_back(fp_eval(row, u, p));
            fp_trim(av);
            fp_trim(bv);
            FP h = fp_gcd(std::move(av), std::move(bv), p);
            int d = static_cast<int>(h.size()) - 1;
            if (d == 0) return {};  // primitive parts are coprime
            if (d < dmin) {
                dmin = d;
                xs.clear();
                hs.clear();
            }
            if (d == dmin) {
                std::uint64_t scale = fp_eval(gp, u, p);
                for (auto& c : h) c = c * scale % p;
                xs.push_back(u);
                hs.push_back(std::move(h));
            }
        }
        if (xs.size() < need) continue;  // not enough sample points at this prime

        if (dmin > degv_best) continue;  // unlucky prime
        if (dmin < degv_best) {
            degv_best = dmin;
            acc.clear();
            modulus = 1;
        }

        // interpolate each v-coefficient as a polynomial in u
        std::vector<FP> img(static_cast<std::size_t>(dmin) + 1);
        for (std::size_t j = 0; j <= static_cast<std::size_t>(dmin); ++j) {
            std::vector<std::uint64_t> ys;
            ys.reserve(xs.size());
            for (const FP& h : hs) ys.push_back(j < h.size() ? h[j] : 0);
            img[j] = fp_interpolate(xs, ys, p);
        }

        if (modulus == 1) {
            acc.assign(img.size(), ZU{});
            modulus = 1;
        }
        crt_merge(acc, modulus, img, p);
        modulus *= static_cast<unsigned long>(p);

        ZB cand = acc;
        btrim(cand);
        if (cand.empty()) continue;
        ZU cont = bcontent(cand);
        if (!cont.empty()) cand = bdiv_content(cand, cont);
        if (!cand.back().empty() && cand.back().back() < 0)
            for (ZU& row : cand)
                for (Int& c : row) c = -c;
        if (bdivides(A, cand) && bdivides(B, cand)) return cand;
    }
    throw InternalError("biv_gcd_primitive: no stable modular image");
}

// gcd through the two-variable modular route; inputs use exactly the
// variables ui and vi and have integer coefficients
Polynomial poly_gcd_biv(const Polynomial& f, const Polynomial& g, int ui, int vi) {
    ZB A = to_biv(f, ui, vi);
    ZB B = to_biv(g, ui, vi);
    ZU ca = bcontent(A);
    ZU cb = bcontent(B);
    ZB Ap = bdiv_content(A, ca);
    ZB Bp = bdiv_content(B, cb);
    ZU cont = ugcd(ca, cb);

    Polynomial cpart = from_uni(f.vars(), ui, cont);
    if (Ap.size() == 1 || Bp.size() == 1) {
        // one input is free of the secondary variable after content removal
        return cpart.primitive();
    }
    ZB prim = biv_gcd_primitive(Ap, Bp);
    if (prim.empty()) return cpart.primitive();
    return (cpart * from_biv(f.vars(), ui, vi, prim)).primitive();
}

}  // namespace

Polynomial exact_div(const Polynomial& f, const Polynomial& d) {
    if (d.is_zero()) throw InternalError("exact_div: zero divisor");
    if (*f.vars() != *d.vars()) throw InputError("exact_div: ambient lists differ");
    if (f.is_zero()) return f;
    // single-divisor division: with one divisor, cancelling the lex-leading
    // term either succeeds at every step or the division is not exact
    const Monomial& dlt = d.lex_leading_monomial();
    const Rat& dlc = d.lex_leading_coeff();
    Polynomial p = f;
    Polynomial q(f.vars());
    while (!p.is_zero()) {
        const Monomial& m = p.lex_leading_monomial();
        if (!dlt.divides(m)) throw InternalError("exact_div: division is not exact");
        Rat c = p.lex_leading_coeff() / dlc;
        Monomial t = m / dlt;
        q.add_term(t, c);
        p = p - d * Polynomial::term(f.vars(), c, t);
    }
    return q;
}

Polynomial poly_gcd(const Polynomial& f, const Polynomial& g) {
    if (*f.vars() != *g.vars()) throw InputError("poly_gcd: ambient lists differ");
    if (f.is_zero() && g.is_zero()) throw ZeroPolynomialError("poly_gcd(0, 0)");
    if (f.is_zero()) return g.primitive();
    if (g.is_zero()) return f.primitive();
    if (f.is_constant() || g.is_constant()) return Polynomial::constant(f.vars(), 1);

    // variables actually in play
    std::vector<int> used;
    for (std::size_t i = 0; i < f.nvars(); ++i)
        if (f.uses_var(static_cast<int>(i)) || g.uses_var(static_cast<int>(i)))
            used.push_back(static_cast<int>(i));

    Polynomial fp_ = f.primitive();
    Polynomial gp_ = g.primitive();

    if (used.size() == 1) {
        int v = used[0];
        ZU a, b;
        for (const auto& [m, c] : fp_.terms()) {
            std::size_t i = m.e[static_cast<std::size_t>(v)];
            if (a.size() <= i) a.resize(i + 1, Int(0));
            a[i] = num(c);
        }
        for (const auto& [m, c] : gp_.terms()) {
            std::size_t i = m.e[static_cast<std::size_t>(v)];
            if (b.size() <= i) b.resize(i + 1, Int(0));
            b[i] = num(c);
        }
        return from_uni(f.vars(), v, ugcd(std::move(a), std::move(b))).primitive();
    }
    if (used.size() == 2) return poly_gcd_biv(fp_, gp_, used[0], used[1]);

    // lcm(f, g) generates <t*f, (1-t)*g> with t eliminated
    const VarListPtr& vars = f.vars();
    std::string fresh = "t";
    for (int k = 0; var_index(*vars, fresh) >= 0; ++k) fresh = "t" + std::to_string(k);
    VarList ext{fresh};
    ext.insert(ext.end(), vars->begin(), vars->end());
    VarListPtr evars = make_vars(std::move(ext));

    Polynomial t = Polynomial::variable(evars, fresh);
    Polynomial one = Polynomial::constant(evars, 1);
    std::vector<Polynomial> gens{t * f.with_vars(evars), (one - t) * g.with_vars(evars)};
    std::vector<Polynomial> elim = elimination_ideal(gens, {fresh});
    if (elim.size() != 1)
        throw EliminationNotPrincipal("poly_gcd: lcm ideal gave " +
                                      std::to_string(elim.size()) + " generators");
    Polynomial lcm_fg = elim.front().with_vars(vars);
    return exact_div(f * g, lcm_fg).primitive();
}

Polynomial squarefree_part(const Polynomial& f) {
    if (f.is_zero()) throw ZeroPolynomialError("squarefree_part: zero polynomial");
    if (f.is_constant()) return Polynomial::constant(f.vars(), 1);

    // a homogeneous input is a scaled copy of its dehomogenization, so strip
    // one variable, recurse, and restore degrees; this keeps the gcds below
    // in as few variables as possible
    int used = 0, first_used = -1;
    for (std::size_t i = 0; i < f.nvars(); ++i)
        if (f.uses_var(static_cast<int>(i))) {
            ++used;
            if (first_used < 0) first_used = static_cast<int>(i);
        }
    if (used >= 2 && f.is_homogeneous()) {
        const std::string& v = (*f.vars())[static_cast<std::size_t>(first_used)];
        Polynomial s = squarefree_part(f.dehomogenize(v, Rat(1))).homogenize(v);
        if (f.dehomogenize(v, Rat(0)).is_zero())
            s = s * Polynomial::variable(s.vars(), v);
        return s.with_vars(f.vars()).primitive();
    }

    Polynomial g = f;
    for (const auto& name : *f.vars()) {
        Polynomial d = f.derivative(name);
        if (d.is_zero()) continue;
        g = poly_gcd(g, d);
        if (g.is_constant()) break;
    }
    if (g.is_constant()) return f.primitive();
    return exact_div(f, g).primitive();
}

}  // namespace ratsearch
