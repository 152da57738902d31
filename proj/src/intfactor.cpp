#include "ratsearch/intfactor.hpp"

#include <algorithm>
#include <map>

#include "ratsearch/errors.hpp"

namespace ratsearch {

namespace {

constexpr unsigned long kSieveLimit = 100000;

const std::vector<unsigned long>& small_primes() {
    static const std::vector<unsigned long> primes = [] {
        std::vector<bool> comp(kSieveLimit + 1, false);
        std::vector<unsigned long> ps;
        for (unsigned long i = 2; i <= kSieveLimit; ++i) {
            if (comp[i]) continue;
            ps.push_back(i);
            for (unsigned long j = i * i; j <= kSieveLimit; j += i) comp[j] = true;
        }
        return ps;
    }();
    return primes;
}

bool probable_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

// Brent's cycle variant of Pollard rho with a fixed parameter schedule, so
// the whole factorization is reproducible.
Int brent_rho(const Int& n) {
    if (n % 2 == 0) return Int(2);
    for (unsigned long c = 1;; ++c) {
        Int y(2), m(128), g(1), r(1), q(1), x, ys;
        while (g == 1) {
            x = y;
            for (Int i(0); i < r; ++i) y = (y * y + c) % n;
            Int k(0);
            while (k < r && g == 1) {
                ys = y;
                Int lim = r - k;
                if (m < lim) lim = m;
                for (Int i(0); i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                g = gcd(q, n);
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                g = gcd(abs(x - ys), n);
            }
        }
        if (g != n) return g;
        // cycle degenerated; retry with the next increment
    }
}

void factor_rec(const Int& n, std::map<Int, unsigned>& out) {
    if (n == 1) return;
    if (probable_prime(n)) {
        out[n] += 1;
        return;
    }
    Int d = brent_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

std::vector<std::pair<Int, unsigned>> factorize(const Int& n_in) {
    Int n = abs(n_in);
    if (n == 0) throw InputError("factorize: zero");
    std::map<Int, unsigned> acc;
    for (unsigned long p : small_primes()) {
        if (n == 1) break;
        Int pp(p);
        if (pp * pp > n) break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            acc[pp] += 1;
            n /= pp;
        }
    }
    if (n > 1) {
        if (probable_prime(n)) {
            acc[n] += 1;
        } else {
            factor_rec(n, acc);
        }
    }
    return {acc.begin(), acc.end()};
}

std::vector<Int> divisors(const Int& n) {
    Int m = abs(n);
    if (m == 0) throw InputError("divisors: zero");
    std::vector<Int> out{Int(1)};
    if (m > 1) {
        for (const auto& [p, e] : factorize(m)) {
            std::size_t base = out.size();
            Int pk(1);
            for (unsigned k = 1; k <= e; ++k) {
                pk *= p;
                for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

unsigned long nth_prime(std::size_t i) {
    const auto& ps = small_primes();
    if (i < ps.size()) return ps[i];
    throw InternalError("prime table exhausted");
}

}  // namespace ratsearch
