#ifndef RATSEARCH_PARSE_HPP
#define RATSEARCH_PARSE_HPP

#include <string>

#include "ratsearch/polynomial.hpp"

namespace ratsearch {

// Parses the shared polynomial grammar:
//   expr     := ['-'] term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ('^' uint)?
//   base     := variable | rational | '(' expr ')'
//   rational := uint ('/' uint)?
//   variable := [a-zA-Z][a-zA-Z0-9_]*
// Whitespace is insignificant; unary minus is legal at the head of an
// expression and directly after '('.  Unknown variables raise
// WrongVariablesError; malformed text raises SyntaxError with a byte offset.
Polynomial parse_poly(const std::string& text, const VarListPtr& vars);

// Equation in x and y only, read as "expr = 0"; rejects the zero polynomial.
Polynomial parse_equation(const std::string& text);

}  // namespace ratsearch

#endif
