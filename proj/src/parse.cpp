#include "ratsearch/parse.hpp"

#include <cctype>

#include "ratsearch/errors.hpp"

namespace ratsearch {

namespace {

class Parser {
  public:
    Parser(const std::string& text, VarListPtr vars) : s_(text), vars_(std::move(vars)) {}

    Polynomial run() {
        Polynomial f = expr();
        skip_ws();
        if (pos_ != s_.size()) throw SyntaxError("unexpected trailing input", pos_);
        return f;
    }

  private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Polynomial expr() {
        bool neg = eat('-');
        Polynomial acc = term();
        if (neg) acc = -acc;
        for (;;) {
            if (eat('+')) {
                acc = acc + term();
            } else if (eat('-')) {
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (eat('*')) acc = acc * factor();
        return acc;
    }

    Polynomial factor() {
        Polynomial b = base();
        if (eat('^')) {
            std::size_t at = pos_;
            Int e = read_uint();
            if (e > 4096) throw SyntaxError("exponent too large", at);
            return b.pow(static_cast<unsigned>(e.get_ui()));
        }
        return b;
    }

    Polynomial base() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial f = expr();
            if (!eat(')')) throw SyntaxError("expected ')'", pos_);
            return f;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int n = read_uint();
            if (eat('/')) {
                std::size_t at = pos_;
                Int d = read_uint();
                if (d == 0) throw SyntaxError("zero denominator", at);
                return Polynomial::constant(vars_, make_rat(n, d));
            }
            return Polynomial::constant(vars_, Rat(n));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t at = pos_;
            std::string name;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                name += s_[pos_++];
            if (var_index(*vars_, name) < 0)
                throw WrongVariablesError("unknown variable '" + name + "' at offset " + std::to_string(at));
            return Polynomial::variable(vars_, name);
        }
        throw SyntaxError("expected variable, number, or '('", pos_);
    }

    Int read_uint() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw SyntaxError("expected unsigned integer", pos_);
        std::string digits;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            digits += s_[pos_++];
        return Int(digits);
    }

    const std::string& s_;
    VarListPtr vars_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(const std::string& text, const VarListPtr& vars) {
    return Parser(text, vars).run();
}

Polynomial parse_equation(const std::string& text) {
    static const VarListPtr xy = make_vars({"x", "y"});
    Polynomial f = parse_poly(text, xy);
    if (f.is_zero()) throw ZeroPolynomialError("equation is the zero polynomial");
    return f;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < nvars(); ++i) {
            if (m.e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += (*vars_)[i];
            if (m.e[i] > 1) mono += "^" + std::to_string(m.e[i]);
        }
        if (mono.empty()) {
            out += to_string(a);
        } else if (a == 1) {
            out += mono;
        } else {
            out += to_string(a) + "*" + mono;
        }
    }
    return out;
}

}  // namespace ratsearch
