#ifndef RATSEARCH_POLYNOMIAL_HPP
#define RATSEARCH_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ratsearch/monomial.hpp"
#include "ratsearch/rational.hpp"

namespace ratsearch {

// Multivariate polynomial over Q with a fixed ambient variable list.  Terms
// are kept in a map ordered lex-descending, so begin() is the lex-leading
// term; that leading coefficient anchors the canonical (primitive integer,
// positive leading coefficient) normal form.
class Polynomial {
  public:
    using TermMap = std::map<Monomial, Rat, LexGreater>;

    Polynomial() : vars_(make_vars({})) {}
    explicit Polynomial(VarListPtr vars) : vars_(std::move(vars)) {}

    static Polynomial zero(VarListPtr vars) { return Polynomial(std::move(vars)); }

    static Polynomial constant(VarListPtr vars, const Rat& c) {
        Polynomial f(std::move(vars));
        if (c != 0) f.terms_[Monomial(f.nvars())] = c;
        return f;
    }

    static Polynomial variable(VarListPtr vars, const std::string& name) {
        int i = var_index(*vars, name);
        if (i < 0) throw InputError("variable " + name + " not in ambient list");
        Polynomial f(std::move(vars));
        Monomial m(f.nvars());
        m.e[static_cast<std::size_t>(i)] = 1;
        f.terms_[m] = 1;
        return f;
    }

    static Polynomial term(VarListPtr vars, const Rat& c, const Monomial& m) {
        Polynomial f(std::move(vars));
        if (c != 0) f.terms_[m] = c;
        return f;
    }

    const VarListPtr& vars() const { return vars_; }
    std::size_t nvars() const { return vars_->size(); }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }

    Rat constant_value() const {
        if (terms_.empty()) return Rat(0);
        auto it = terms_.find(Monomial(nvars()));
        return it == terms_.end() ? Rat(0) : it->second;
    }

    // total degree; -1 marks the zero polynomial
    int degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree()));
        return d;
    }

    int degree_in(int var) const {
        int d = -1;
        for (const auto& [m, c] : terms_)
            d = std::max(d, static_cast<int>(m.e[static_cast<std::size_t>(var)]));
        return terms_.empty() ? -1 : d;
    }

    bool uses_var(int var) const {
        for (const auto& [m, c] : terms_)
            if (m.e[static_cast<std::size_t>(var)] > 0) return true;
        return false;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        unsigned d = terms_.begin()->first.degree();
        for (const auto& [m, c] : terms_)
            if (m.degree() != d) return false;
        return true;
    }

    void add_term(const Monomial& m, const Rat& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial operator-() const {
        Polynomial r(*this);
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    Polynomial operator+(const Polynomial& g) const {
        check_same_vars(g);
        Polynomial r(*this);
        for (const auto& [m, c] : g.terms_) r.add_term(m, c);
        return r;
    }

    Polynomial operator-(const Polynomial& g) const {
        check_same_vars(g);
        Polynomial r(*this);
        for (const auto& [m, c] : g.terms_) r.add_term(m, -c);
        return r;
    }

    Polynomial operator*(const Polynomial& g) const {
        check_same_vars(g);
        Polynomial r(vars_);
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : g.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    Polynomial operator*(const Rat& s) const {
        Polynomial r(vars_);
        if (s == 0) return r;
        for (const auto& [m, c] : terms_) r.terms_[m] = c * s;
        return r;
    }

    Polynomial pow(unsigned e) const {
        Polynomial r = constant(vars_, 1);
        for (unsigned i = 0; i < e; ++i) r = r * (*this);
        return r;
    }

    bool operator==(const Polynomial& g) const {
        return *vars_ == *g.vars_ && terms_ == g.terms_;
    }
    bool operator!=(const Polynomial& g) const { return !(*this == g); }

    // deterministic total order for sorting polynomial lists
    bool operator<(const Polynomial& g) const {
        auto a = terms_.begin(), b = g.terms_.begin();
        for (; a != terms_.end() && b != g.terms_.end(); ++a, ++b) {
            int c = lex_cmp(a->first, b->first);
            if (c != 0) return c < 0;
            if (a->second != b->second) return a->second < b->second;
        }
        return a == terms_.end() && b != g.terms_.end();
    }

    // lex-leading data (normalization anchor, independent of any basis order)
    const Monomial& lex_leading_monomial() const {
        if (terms_.empty()) throw InternalError("leading term of zero polynomial");
        return terms_.begin()->first;
    }
    const Rat& lex_leading_coeff() const {
        if (terms_.empty()) throw InternalError("leading coeff of zero polynomial");
        return terms_.begin()->second;
    }

    // integer-primitive scalar multiple with positive lex-leading coefficient
    Polynomial primitive() const {
        if (terms_.empty()) return *this;
        Int l(1), g(0);
        for (const auto& [m, c] : terms_) l = lcm(l, den(c));
        for (const auto& [m, c] : terms_) g = gcd(g, num(c) * (l / den(c)));
        Rat scale = make_rat(l, g);
        if (lex_leading_coeff() < 0) scale = -scale;
        return (*this) * scale;
    }

    // monic w.r.t. the lex-leading coefficient
    Polynomial monic_lex() const {
        if (terms_.empty()) return *this;
        return (*this) * (Rat(1) / lex_leading_coeff());
    }

    Rat evaluate(const std::vector<Rat>& values) const {
        if (values.size() != nvars()) throw InputError("evaluate: wrong number of values");
        // cache powers per variable
        std::vector<std::vector<Rat>> pw(nvars());
        for (std::size_t i = 0; i < nvars(); ++i) pw[i].push_back(Rat(1));
        Rat acc(0);
        for (const auto& [m, c] : terms_) {
            Rat t = c;
            for (std::size_t i = 0; i < nvars(); ++i) {
                unsigned e = m.e[i];
                auto& p = pw[i];
                while (p.size() <= e) p.push_back(p.back() * values[i]);
                if (e > 0) t *= p[e];
            }
            acc += t;
        }
        return acc;
    }

    // simultaneous substitution; unmapped variables must exist in the target
    // ambient list and are carried over unchanged
    Polynomial substitute(const std::map<std::string, Polynomial>& bind, const VarListPtr& target) const {
        std::vector<Polynomial> images;
        images.reserve(nvars());
        for (const auto& name : *vars_) {
            auto it = bind.find(name);
            if (it != bind.end()) {
                if (*it->second.vars() != *target)
                    throw InputError("substitute: binding for " + name + " has wrong ambient list");
                images.push_back(it->second);
            } else {
                images.push_back(Polynomial::variable(target, name));
            }
        }
        Polynomial acc = Polynomial::zero(target);
        // cache powers of each image lazily
        std::vector<std::vector<Polynomial>> pw(nvars());
        for (std::size_t i = 0; i < nvars(); ++i) pw[i].push_back(Polynomial::constant(target, 1));
        for (const auto& [m, c] : terms_) {
            Polynomial t = Polynomial::constant(target, c);
            for (std::size_t i = 0; i < nvars(); ++i) {
                unsigned e = m.e[i];
                auto& p = pw[i];
                while (p.size() <= e) p.push_back(p.back() * images[i]);
                if (e > 0) t = t * p[e];
            }
            acc = acc + t;
        }
        return acc;
    }

    Polynomial derivative(const std::string& name) const {
        int i = var_index(*vars_, name);
        if (i < 0) throw InputError("derivative: unknown variable " + name);
        Polynomial r(vars_);
        for (const auto& [m, c] : terms_) {
            unsigned e = m.e[static_cast<std::size_t>(i)];
            if (e == 0) continue;
            Monomial n(m);
            n.e[static_cast<std::size_t>(i)] = e - 1;
            r.add_term(n, c * Rat(static_cast<long>(e)));
        }
        return r;
    }

    // inserts `name` as the new first (lex-greatest) variable and pads every
    // term to total degree deg(f)
    Polynomial homogenize(const std::string& name) const {
        if (terms_.empty()) throw ZeroPolynomialError("homogenize: zero polynomial");
        if (var_index(*vars_, name) >= 0) throw InputError("homogenize: variable " + name + " already present");
        VarList nv;
        nv.reserve(nvars() + 1);
        nv.push_back(name);
        nv.insert(nv.end(), vars_->begin(), vars_->end());
        VarListPtr target = make_vars(std::move(nv));
        unsigned d = static_cast<unsigned>(degree());
        Polynomial r(target);
        for (const auto& [m, c] : terms_) {
            Monomial n(nvars() + 1);
            n.e[0] = d - m.degree();
            for (std::size_t i = 0; i < nvars(); ++i) n.e[i + 1] = m.e[i];
            r.terms_[n] = c;
        }
        return r;
    }

    // substitutes var := value and removes it from the ambient list
    Polynomial dehomogenize(const std::string& name, const Rat& value) const {
        int idx = var_index(*vars_, name);
        if (idx < 0) throw InputError("dehomogenize: unknown variable " + name);
        VarList nv;
        nv.reserve(nvars() - 1);
        for (std::size_t i = 0; i < nvars(); ++i)
            if (static_cast<int>(i) != idx) nv.push_back((*vars_)[i]);
        VarListPtr target = make_vars(std::move(nv));
        Polynomial r(target);
        std::vector<Rat> pw{Rat(1)};
        for (const auto& [m, c] : terms_) {
            unsigned e = m.e[static_cast<std::size_t>(idx)];
            while (pw.size() <= e) pw.push_back(pw.back() * value);
            Monomial n(nvars() - 1);
            std::size_t j = 0;
            for (std::size_t i = 0; i < nvars(); ++i)
                if (static_cast<int>(i) != idx) n.e[j++] = m.e[i];
            r.add_term(n, c * pw[e]);
        }
        return r;
    }

    // re-expresses the polynomial over `target`, which must contain every
    // variable actually used
    Polynomial with_vars(const VarListPtr& target) const {
        std::vector<int> where(nvars(), -1);
        for (std::size_t i = 0; i < nvars(); ++i) {
            where[i] = var_index(*target, (*vars_)[i]);
            if (where[i] < 0 && uses_var(static_cast<int>(i)))
                throw InputError("with_vars: target list lacks used variable " + (*vars_)[i]);
        }
        Polynomial r(target);
        for (const auto& [m, c] : terms_) {
            Monomial n(target->size());
            for (std::size_t i = 0; i < nvars(); ++i)
                if (m.e[i] > 0) n.e[static_cast<std::size_t>(where[i])] = m.e[i];
            r.terms_[n] = c;
        }
        return r;
    }

    // dense coefficient vector (index = exponent); every other variable must
    // be absent
    std::vector<Rat> univariate_coeffs(const std::string& name) const {
        int idx = var_index(*vars_, name);
        if (idx < 0) throw InputError("univariate_coeffs: unknown variable " + name);
        for (std::size_t i = 0; i < nvars(); ++i)
            if (static_cast<int>(i) != idx && uses_var(static_cast<int>(i)))
                throw InputError("univariate_coeffs: polynomial is not univariate in " + name);
        std::vector<Rat> out(static_cast<std::size_t>(std::max(degree_in(static_cast<int>(idx)), 0)) + 1, Rat(0));
        if (terms_.empty()) return {};
        for (const auto& [m, c] : terms_) out[m.e[static_cast<std::size_t>(idx)]] = c;
        return out;
    }

    static Polynomial from_univariate(const VarListPtr& vars, const std::string& name,
                                      const std::vector<Rat>& coeffs) {
        int idx = var_index(*vars, name);
        if (idx < 0) throw InputError("from_univariate: unknown variable " + name);
        Polynomial r(vars);
        for (std::size_t e = 0; e < coeffs.size(); ++e) {
            if (coeffs[e] == 0) continue;
            Monomial m(vars->size());
            m.e[static_cast<std::size_t>(idx)] = static_cast<unsigned>(e);
            r.terms_[m] = coeffs[e];
        }
        return r;
    }

    std::string str() const;  // grammar-compatible rendering (parse.cpp)

  private:
    void check_same_vars(const Polynomial& g) const {
        if (vars_ != g.vars_ && *vars_ != *g.vars_)
            throw InputError("polynomial arithmetic requires identical ambient variable lists");
    }

    VarListPtr vars_;
    TermMap terms_;
};

inline Polynomial operator*(const Rat& s, const Polynomial& f) { return f * s; }

}  // namespace ratsearch

#endif
