#include "ratsearch/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "ratsearch/errors.hpp"
#include "ratsearch/upoly.hpp"

namespace ratsearch {

namespace {

// order-leading term by full scan (the term map is lex-sorted, which only
// matches the lex order)
std::pair<Monomial, Rat> leading(const Polynomial& p, const MonomialOrder& ord) {
    if (p.is_zero()) throw InternalError("leading term of zero polynomial");
    auto it = p.terms().begin();
    const Monomial* best = &it->first;
    const Rat* bc = &it->second;
    for (++it; it != p.terms().end(); ++it) {
        if (ord.greater(it->first, *best)) {
            best = &it->first;
            bc = &it->second;
        }
    }
    return {*best, *bc};
}

// primitive integer scalar multiple with positive order-leading coefficient
Polynomial normalize(const Polynomial& p, const MonomialOrder& ord) {
    if (p.is_zero()) return p;
    Polynomial q = p.primitive();
    if (leading(q, ord).second < 0) q = -q;
    return q;
}

struct Entry {
    Polynomial p;
    Monomial lt;
    Rat lc;
};

Entry make_entry(const Polynomial& p, const MonomialOrder& ord) {
    auto [m, c] = leading(p, ord);
    return {p, m, c};
}

Polynomial nf(const Polynomial& f, const std::vector<Entry>& basis, const MonomialOrder& ord) {
    Polynomial p = f;
    Polynomial rem(f.vars());
    while (!p.is_zero()) {
        auto [m, c] = leading(p, ord);
        bool reduced = false;
        for (const Entry& b : basis) {
            if (!b.lt.divides(m)) continue;
            p = p - b.p * Polynomial::term(p.vars(), c / b.lc, m / b.lt);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.add_term(m, c);
            p.add_term(m, -c);
        }
    }
    return rem;
}

std::vector<Entry> buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& ord) {
    std::vector<Entry> basis;
    for (const Polynomial& g : gens) {
        if (*g.vars() != *ord.vars())
            throw InputError("groebner_basis: generator has wrong ambient list");
        Polynomial n = normalize(g, ord);
        if (!n.is_zero()) basis.push_back(make_entry(n, ord));
    }

    // pending S-pairs keyed for the normal strategy: lcm degree, then index
    using Key = std::tuple<unsigned, std::size_t, std::size_t>;
    std::set<Key> queue;
    std::set<std::pair<std::size_t, std::size_t>> pending;
    auto push_pair = [&](std::size_t i, std::size_t j) {
        Monomial l = Monomial::lcm(basis[i].lt, basis[j].lt);
        queue.emplace(l.degree(), i, j);
        pending.emplace(i, j);
    };
    for (std::size_t j = 1; j < basis.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) push_pair(i, j);

    while (!queue.empty()) {
        auto [d, i, j] = *queue.begin();
        queue.erase(queue.begin());
        pending.erase({i, j});
        (void)d;

        const Monomial l = Monomial::lcm(basis[i].lt, basis[j].lt);
        if (basis[i].lt.coprime(basis[j].lt)) continue;

        // chain criterion: some third leading term divides the lcm and both
        // connecting pairs are already treated
        bool skip = false;
        for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == i || k == j) continue;
            if (!basis[k].lt.divides(l)) continue;
            auto a = std::minmax(i, k);
            auto b = std::minmax(j, k);
            if (!pending.count({a.first, a.second}) && !pending.count({b.first, b.second}))
                skip = true;
        }
        if (skip) continue;

        Polynomial s =
            basis[i].p * Polynomial::term(ord.vars(), Rat(1) / basis[i].lc, l / basis[i].lt) -
            basis[j].p * Polynomial::term(ord.vars(), Rat(1) / basis[j].lc, l / basis[j].lt);
        Polynomial h = normalize(nf(s, basis, ord), ord);
        if (h.is_zero()) continue;
        basis.push_back(make_entry(h, ord));
        for (std::size_t k = 0; k + 1 < basis.size(); ++k) push_pair(k, basis.size() - 1);
    }
    return basis;
}

std::vector<Polynomial> reduce_basis(std::vector<Entry> basis, const MonomialOrder& ord) {
    // minimalize: drop any element whose leading term another one divides
    std::vector<Entry> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            if (!basis[j].lt.divides(basis[i].lt)) continue;
            // break ties between equal leading terms by keeping the first
            if (basis[j].lt == basis[i].lt && j > i) continue;
            redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // tail-reduce each element against the others
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Entry> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial r = normalize(nf(minimal[i].p, others, ord), ord);
        if (!r.is_zero()) out.push_back(r);
    }

    std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.cmp(leading(a, ord).first, leading(b, ord).first) < 0;
    });
    return out;
}

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& ord) {
    if (*f.vars() != *ord.vars()) throw InputError("normal_form: wrong ambient list");
    std::vector<Entry> entries;
    for (const Polynomial& b : basis)
        if (!b.is_zero()) entries.push_back(make_entry(b, ord));
    return nf(f, entries, ord);
}

std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens,
                                       const MonomialOrder& ord) {
    return reduce_basis(buchberger(gens, ord), ord);
}

std::vector<Polynomial> elimination_ideal(const std::vector<Polynomial>& gens,
                                          const std::vector<std::string>& eliminate) {
    if (gens.empty()) throw InputError("elimination_ideal: no generators");
    const VarListPtr& vars = gens.front().vars();
    MonomialOrder ord = MonomialOrder::block(vars, eliminate);
    std::vector<Polynomial> gb = groebner_basis(gens, ord);

    VarList keep;
    for (const auto& name : *vars)
        if (std::find(eliminate.begin(), eliminate.end(), name) == eliminate.end())
            keep.push_back(name);
    VarListPtr target = make_vars(std::move(keep));

    std::vector<Polynomial> out;
    for (const Polynomial& g : gb) {
        bool pure = true;
        for (const auto& name : eliminate) {
            int idx = var_index(*vars, name);
            if (g.uses_var(idx)) {
                pure = false;
                break;
            }
        }
        if (pure) out.push_back(g.with_vars(target));
    }
    return out;
}

std::vector<Polynomial> saturate(const std::vector<Polynomial>& gens, const Polynomial& g) {
    if (gens.empty()) throw InputError("saturate: no generators");
    const VarListPtr& vars = gens.front().vars();
    if (*g.vars() != *vars) throw InputError("saturate: divisor has wrong ambient list");
    if (g.is_zero()) throw ZeroPolynomialError("saturate: zero divisor");

    std::string fresh = "s";
    for (int k = 0; var_index(*vars, fresh) >= 0; ++k) fresh = "s" + std::to_string(k);
    VarList ext{fresh};
    ext.insert(ext.end(), vars->begin(), vars->end());
    VarListPtr evars = make_vars(std::move(ext));

    std::vector<Polynomial> egens;
    for (const Polynomial& f : gens) egens.push_back(f.with_vars(evars));
    Polynomial u = Polynomial::variable(evars, fresh);
    egens.push_back(Polynomial::constant(evars, 1) - u * g.with_vars(evars));

    std::vector<Polynomial> elim = elimination_ideal(egens, {fresh});
    // elimination lands on vars minus nothing else; restore the caller's list
    std::vector<Polynomial> out;
    for (const Polynomial& f : elim) out.push_back(f.with_vars(vars));
    return out;
}

std::vector<Polynomial> ideal_intersection(const std::vector<Polynomial>& a,
                                           const std::vector<Polynomial>& b) {
    if (a.empty() || b.empty()) throw InputError("ideal_intersection: no generators");
    const VarListPtr& vars = a.front().vars();
    for (const Polynomial& f : b)
        if (*f.vars() != *vars) throw InputError("ideal_intersection: mixed ambient lists");

    std::string fresh = "s";
    for (int k = 0; var_index(*vars, fresh) >= 0; ++k) fresh = "s" + std::to_string(k);
    VarList ext{fresh};
    ext.insert(ext.end(), vars->begin(), vars->end());
    VarListPtr evars = make_vars(std::move(ext));

    Polynomial u = Polynomial::variable(evars, fresh);
    Polynomial v = Polynomial::constant(evars, 1) - u;
    std::vector<Polynomial> egens;
    for (const Polynomial& f : a) egens.push_back(u * f.with_vars(evars));
    for (const Polynomial& f : b) egens.push_back(v * f.with_vars(evars));

    std::vector<Polynomial> elim = elimination_ideal(egens, {fresh});
    std::vector<Polynomial> out;
    for (const Polynomial& f : elim) out.push_back(f.with_vars(vars));
    return out;
}

int dimension(const std::vector<Polynomial>& gens) {
    if (gens.empty()) throw InputError("dimension: no generators");
    const VarListPtr& vars = gens.front().vars();
    std::size_t n = vars->size();
    MonomialOrder ord = MonomialOrder::grevlex(vars);
    std::vector<Polynomial> gb = groebner_basis(gens, ord);
    if (gb.empty()) return static_cast<int>(n);
    for (const Polynomial& g : gb)
        if (g.is_constant()) return -1;

    std::vector<Monomial> lts;
    for (const Polynomial& g : gb) lts.push_back(leading(g, ord).first);

    // a subset S is independent when no leading term lives entirely inside S
    int best = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (size <= best) continue;
        bool independent = true;
        for (const Monomial& m : lts) {
            bool inside = true;
            for (std::size_t i = 0; i < n && inside; ++i)
                if (m.e[i] > 0 && !(mask & (1u << i))) inside = false;
            if (inside) {
                independent = false;
                break;
            }
        }
        if (independent) best = size;
    }
    return best;
}

unsigned standard_monomial_count(const std::vector<Polynomial>& gb, const MonomialOrder& ord) {
    if (gb.empty()) throw InputError("standard_monomial_count: zero ideal is infinite");
    std::size_t n = ord.vars()->size();
    std::vector<Monomial> lts;
    for (const Polynomial& g : gb) {
        if (g.is_constant()) return 0;  // unit ideal
        lts.push_back(leading(g, ord).first);
    }

    // per-variable caps from pure-power leading terms
    std::vector<unsigned> cap(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        bool found = false;
        for (const Monomial& m : lts) {
            bool pure = m.e[i] > 0;
            for (std::size_t j = 0; j < n && pure; ++j)
                if (j != i && m.e[j] > 0) pure = false;
            if (pure) {
                found = true;
                if (cap[i] == 0 || m.e[i] < cap[i]) cap[i] = m.e[i];
            }
        }
        if (!found)
            throw InputError("standard_monomial_count: ideal is not zero-dimensional");
    }

    unsigned count = 0;
    Monomial cur(n);
    // odometer over the box below the caps
    for (;;) {
        bool divisible = false;
        for (const Monomial& m : lts) {
            if (m.divides(cur)) {
                divisible = true;
                break;
            }
        }
        if (!divisible) ++count;
        std::size_t i = 0;
        while (i < n) {
            if (++cur.e[i] < cap[i]) break;
            cur.e[i] = 0;
            ++i;
        }
        if (i == n) break;
    }
    return count;
}

namespace {

// recursive core of solve_zero_dim over the current ambient list
void solve_rec(const std::vector<Polynomial>& gens, ZeroDimSolution& out) {
    static const VarListPtr tvar = make_vars({"t"});
    const VarListPtr& vars = gens.front().vars();
    std::size_t n = vars->size();
    MonomialOrder ord = MonomialOrder::lex(vars);
    std::vector<Polynomial> gb = groebner_basis(gens, ord);
    if (gb.empty()) throw InputError("solve_zero_dim: zero ideal is not zero-dimensional");
    for (const Polynomial& g : gb)
        if (g.is_constant()) return;  // no solutions

    const std::string& least = vars->back();
    int least_idx = static_cast<int>(n) - 1;

    // locate the unique eliminant: the basis element using only the least
    // variable
    const Polynomial* eliminant = nullptr;
    for (const Polynomial& g : gb) {
        bool pure = true;
        for (int i = 0; i < static_cast<int>(n) - 1 && pure; ++i)
            if (g.uses_var(i)) pure = false;
        if (!pure) continue;
        if (eliminant) throw InternalError("solve_zero_dim: two univariate eliminants");
        eliminant = &g;
    }
    if (!eliminant) throw InputError("solve_zero_dim: ideal is not zero-dimensional");

    auto split = factor_low_degree(univariate_squarefree_part(*eliminant), 2);

    for (const auto& [fac, mult] : split.factors) {
        (void)mult;  // squarefree input: every multiplicity is 1
        if (fac.degree() == 1) {
            Rat r = -fac.univariate_coeffs(least)[0];
            if (n == 1) {
                out.rational.push_back({{r}});
                continue;
            }
            std::vector<Polynomial> spec;
            for (const Polynomial& g : gb) {
                Polynomial s = g.dehomogenize(least, r);
                if (!s.is_zero()) spec.push_back(s);
            }
            if (spec.empty()) throw InternalError("solve_zero_dim: fiber collapsed to zero");
            ZeroDimSolution sub;
            solve_rec(spec, sub);
            for (auto& sol : sub.rational) {
                sol.coords.push_back(r);
                out.rational.push_back(std::move(sol));
            }
            for (auto& pair : sub.quadratic) {
                pair.coords.push_back(Polynomial::constant(tvar, r));
                out.quadratic.push_back(std::move(pair));
            }
            out.higher_degree += sub.higher_degree;
        } else {
            // conjugate pair candidate: adjoin the quadratic and ask whether
            // every other coordinate collapses to a linear expression in it
            std::vector<Polynomial> jgens = gb;
            jgens.push_back(fac);
            std::vector<Polynomial> jgb = groebner_basis(jgens, ord);
            bool linear = true;
            std::vector<Polynomial> coords;
            for (std::size_t i = 0; i + 1 < n && linear; ++i) {
                Polynomial h = normal_form(Polynomial::variable(vars, (*vars)[i]), jgb, ord);
                // must live in Q[least] with degree <= 1
                bool ok = true;
                for (int k = 0; k < static_cast<int>(n) - 1 && ok; ++k)
                    if (h.uses_var(k)) ok = false;
                if (!ok || h.degree_in(least_idx) > 1) {
                    linear = false;
                    break;
                }
                auto cs = h.univariate_coeffs(least);
                cs.resize(2, Rat(0));
                coords.push_back(Polynomial::from_univariate(tvar, "t", cs));
            }
            if (linear) {
                QuadraticPairSolution pair;
                auto cs = fac.univariate_coeffs(least);
                pair.min_poly = Polynomial::from_univariate(tvar, "t", cs);
                pair.coords = std::move(coords);
                pair.coords.push_back(Polynomial::variable(tvar, "t"));
                out.quadratic.push_back(std::move(pair));
            } else {
                out.higher_degree += standard_monomial_count(jgb, ord);
            }
        }
    }

    if (!split.cofactor.is_constant()) {
        std::vector<Polynomial> jgens = gb;
        jgens.push_back(split.cofactor);
        std::vector<Polynomial> jgb = groebner_basis(jgens, ord);
        out.higher_degree += standard_monomial_count(jgb, ord);
    }
}

}  // namespace

ZeroDimSolution solve_zero_dim(const std::vector<Polynomial>& gens) {
    if (gens.empty()) throw InputError("solve_zero_dim: no generators");
    ZeroDimSolution out;
    solve_rec(gens, out);
    std::sort(out.rational.begin(), out.rational.end(),
              [](const RationalSolution& a, const RationalSolution& b) {
                  return a.coords < b.coords;
              });
    std::sort(out.quadratic.begin(), out.quadratic.end(),
              [](const QuadraticPairSolution& a, const QuadraticPairSolution& b) {
                  if (a.min_poly != b.min_poly) return a.min_poly < b.min_poly;
                  return std::lexicographical_compare(
                      a.coords.begin(), a.coords.end(), b.coords.begin(), b.coords.end());
              });
    return out;
}

}  // namespace ratsearch
