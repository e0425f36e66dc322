#pragma once

#include <memory>
#include <string_view>
#include <vector>

#include "betabranch/algebraic/polynomial.hpp"
#include "betabranch/error.hpp"

namespace betabranch::algebraic {

/// Parsed arithmetic expression over one variable with rational literals.
struct Expr {
  enum class Kind { Number, Variable, Add, Sub, Mul, Div, Neg, Pow };
  Kind kind;
  Rational value;    // Number
  long exponent = 0;  // Pow
  std::size_t column = 0;
  std::unique_ptr<Expr> lhs;
  std::unique_ptr<Expr> rhs;
};

/// Grammar: sums/differences of products/quotients; unary minus; integer powers
/// (`^` binds tighter than unary minus); implicit multiplication ("2x^2",
/// "(q+1)(q-1)"); decimal or integer literals. `vars` lists accepted variable names.
std::unique_ptr<Expr> parse_expression(std::string_view text, const std::vector<std::string_view>& vars);

/// Evaluates an expression in any ring-like value type. `lift` embeds literals,
/// `divide` implements '/', `invert` handles negative powers.
template <class V, class Lift, class Divide>
V evaluate_expression(const Expr& e, const V& variable, Lift&& lift, Divide&& divide) {
  switch (e.kind) {
    case Expr::Kind::Number: return lift(e.value);
    case Expr::Kind::Variable: return variable;
    case Expr::Kind::Neg: return lift(Rational(0)) - evaluate_expression(*e.lhs, variable, lift, divide);
    case Expr::Kind::Add:
      return evaluate_expression(*e.lhs, variable, lift, divide) + evaluate_expression(*e.rhs, variable, lift, divide);
    case Expr::Kind::Sub:
      return evaluate_expression(*e.lhs, variable, lift, divide) - evaluate_expression(*e.rhs, variable, lift, divide);
    case Expr::Kind::Mul:
      return evaluate_expression(*e.lhs, variable, lift, divide) * evaluate_expression(*e.rhs, variable, lift, divide);
    case Expr::Kind::Div:
      return divide(evaluate_expression(*e.lhs, variable, lift, divide),
                    evaluate_expression(*e.rhs, variable, lift, divide), e.column);
    case Expr::Kind::Pow: {
      V base = evaluate_expression(*e.lhs, variable, lift, divide);
      V acc = lift(Rational(1));
      long n = e.exponent < 0 ? -e.exponent : e.exponent;
      for (long i = 0; i < n; ++i) acc = acc * base;
      if (e.exponent < 0) acc = divide(lift(Rational(1)), acc, e.column);
      return acc;
    }
  }
  return lift(Rational(0));
}

/// Rational-coefficient polynomial in `var` (division only by nonzero constants).
RatPolynomial parse_rational_polynomial(std::string_view text, const std::vector<std::string_view>& vars = {"x", "q"});

/// Integer polynomial from either the human form "x^6-x^4-x^3-2x^2-x-1", the
/// ascending coefficient list "[-1,-1,-2,-1,-1,0,1]", or a relation
/// "x^6=x^4+x^3+2x^2+x+1" (moved to one side). Rational input is made primitive.
IntPolynomial parse_polynomial(std::string_view text);

/// "3/2", "-7", "1.25".
Rational parse_rational(std::string_view text);

}  // namespace betabranch::algebraic
