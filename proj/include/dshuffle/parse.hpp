// Text syntax for elements, used by the command line.
//
//   expr     := term (('+' | '-') term)*
//   term     := unary (['*'] unary)*      juxtaposition multiplies: e0e1 = e0*e1
//   unary    := '-' unary | power
//   power    := primary ('^' ['-'] digits)?
//   primary  := rational | letter | '(' expr ')'
//   rational := digits ('/' digits)?
//   letter   := e0 | e1 | y<n> | X0 | X1 | Y<n>+ | Y<n>-
//
// e0, e1 and y<n> = -e0^{n-1}e1 live in the de Rham series algebra; X0, X1 and
// Y<n>+- = (X0^s-1)^{n-1} X0^s (1-X1^s) in the group algebra of F2. Mixing the
// two sides is an error. Negative powers are allowed on group words only.
#pragma once

#include <stdexcept>
#include <string>

#include "dshuffle/betti_side.hpp"
#include "dshuffle/series.hpp"

namespace dshuffle {

struct ParseError : std::invalid_argument {
  ParseError(const std::string& text, size_t pos, const std::string& why);
};

enum class Side { Scalar, DR, Betti };

struct Element {
  Side side = Side::Scalar;
  Q scalar;
  Series<Q> dr;
  betti::GroupAlg b;
};

Element parse_element(const std::string& text, int n);
// Force a side; scalars are promoted.
Series<Q> parse_dr(const std::string& text, int n);
betti::GroupAlg parse_betti(const std::string& text);
Q parse_rational(const std::string& text);

}  // namespace dshuffle
