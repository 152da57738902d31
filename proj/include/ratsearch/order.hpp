#ifndef RATSEARCH_ORDER_HPP
#define RATSEARCH_ORDER_HPP

#include <vector>

#include "ratsearch/monomial.hpp"

namespace ratsearch {

// Monomial order over a fixed ambient list.  A permutation lets any subset
// of variables take priority without rewriting polynomials; the block order
// is the product of two graded-reverse-lex segments, which makes the first
// segment an elimination block.
class MonomialOrder {
  public:
    static MonomialOrder lex(VarListPtr vars) {
        return MonomialOrder(Kind::Lex, std::move(vars), {}, 0);
    }

    static MonomialOrder grevlex(VarListPtr vars) {
        return MonomialOrder(Kind::Grevlex, std::move(vars), {}, 0);
    }

    // eliminates `front`: every monomial touching a front variable sorts
    // above every monomial that avoids them all
    static MonomialOrder block(VarListPtr vars, const std::vector<std::string>& front) {
        std::vector<std::size_t> perm;
        std::vector<bool> taken(vars->size(), false);
        for (const auto& name : front) {
            int i = var_index(*vars, name);
            if (i < 0) throw InputError("block order: unknown variable " + name);
            if (taken[static_cast<std::size_t>(i)])
                throw InputError("block order: duplicate variable " + name);
            taken[static_cast<std::size_t>(i)] = true;
            perm.push_back(static_cast<std::size_t>(i));
        }
        std::size_t cut = perm.size();
        for (std::size_t i = 0; i < vars->size(); ++i)
            if (!taken[i]) perm.push_back(i);
        return MonomialOrder(Kind::Block, std::move(vars), std::move(perm), cut);
    }

    const VarListPtr& vars() const { return vars_; }

    // -1, 0, or 1 as a <, ==, > b
    int cmp(const Monomial& a, const Monomial& b) const {
        switch (kind_) {
            case Kind::Lex:
                return lex_cmp(a, b);
            case Kind::Grevlex:
                return grevlex_segment(a, b, nullptr, 0, a.e.size());
            case Kind::Block: {
                int c = grevlex_segment(a, b, &perm_, 0, cut_);
                if (c != 0) return c;
                return grevlex_segment(a, b, &perm_, cut_, perm_.size());
            }
        }
        return 0;
    }

    bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }

  private:
    enum class Kind { Lex, Grevlex, Block };

    MonomialOrder(Kind k, VarListPtr vars, std::vector<std::size_t> perm, std::size_t cut)
        : kind_(k), vars_(std::move(vars)), perm_(std::move(perm)), cut_(cut) {}

    // graded reverse lex restricted to positions [lo, hi) of the (optionally
    // permuted) exponent vector
    static int grevlex_segment(const Monomial& a, const Monomial& b,
                               const std::vector<std::size_t>* perm, std::size_t lo,
                               std::size_t hi) {
        unsigned da = 0, db = 0;
        for (std::size_t i = lo; i < hi; ++i) {
            std::size_t p = perm ? (*perm)[i] : i;
            da += a.e[p];
            db += b.e[p];
        }
        if (da != db) return da < db ? -1 : 1;
        for (std::size_t i = hi; i-- > lo;) {
            std::size_t p = perm ? (*perm)[i] : i;
            if (a.e[p] != b.e[p]) return a.e[p] < b.e[p] ? 1 : -1;
        }
        return 0;
    }

    Kind kind_;
    VarListPtr vars_;
    std::vector<std::size_t> perm_;
    std::size_t cut_;
};

}  // namespace ratsearch

#endif
