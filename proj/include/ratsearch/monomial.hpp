#ifndef RATSEARCH_MONOMIAL_HPP
#define RATSEARCH_MONOMIAL_HPP

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "ratsearch/errors.hpp"

namespace ratsearch {

// Ambient variable list.  Position in the list is lex significance: earlier
// variables are greater.  Shared by value; lists are tiny (<= 8 names).
using VarList = std::vector<std::string>;
using VarListPtr = std::shared_ptr<const VarList>;

inline VarListPtr make_vars(std::initializer_list<std::string> names) {
    return std::make_shared<const VarList>(names);
}

inline VarListPtr make_vars(VarList names) {
    return std::make_shared<const VarList>(std::move(names));
}

inline int var_index(const VarList& vars, const std::string& name) {
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return static_cast<int>(i);
    return -1;
}

// Exponent vector over a fixed ambient list.
struct Monomial {
    std::vector<unsigned> e;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e(nvars, 0u) {}

    unsigned degree() const {
        unsigned d = 0;
        for (unsigned x : e) d += x;
        return d;
    }

    bool is_one() const {
        return std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
    }

    bool divides(const Monomial& m) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& m) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += m.e[i];
        return r;
    }

    // exact quotient; caller guarantees divisibility
    Monomial operator/(const Monomial& m) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= m.e[i];
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
        return r;
    }

    bool coprime(const Monomial& m) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0 && m.e[i] > 0) return false;
        return true;
    }

    bool operator==(const Monomial& m) const { return e == m.e; }
    bool operator!=(const Monomial& m) const { return e != m.e; }
};

// plain lex on the exponent vector (list order = significance)
inline int lex_cmp(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.e.size(); ++i) {
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
    }
    return 0;
}

// map comparator putting the lex-greatest monomial first
struct LexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return lex_cmp(a, b) > 0; }
};

}  // namespace ratsearch

#endif
