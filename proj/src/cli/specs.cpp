#include "betabranch/cli/specs.hpp"

#include <cctype>

#include "betabranch/algebraic/parse.hpp"
#include "betabranch/constants/registry.hpp"
#include "betabranch/error.hpp"
#include "betabranch/expansions/dynamics.hpp"

namespace betabranch::cli {

using algebraic::FieldElement;
using algebraic::Rational;
using algebraic::RealAlgebraic;

namespace {

bool looks_rational(std::string_view text) {
  if (text.empty()) return false;
  for (char c : text)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '.' || c == '-' || c == ' ')) return false;
  return true;
}

bool is_name(std::string_view text) {
  if (text.empty() || !std::isalpha(static_cast<unsigned char>(text.front()))) return false;
  for (char c : text)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return text != "x";
}

RealAlgebraic polynomial_root(std::string_view text) {
  const auto at = text.find('@');
  const algebraic::IntPolynomial p = algebraic::parse_polynomial(text.substr(0, at));
  Rational lo(1), hi(2);
  if (at != std::string_view::npos) {
    const std::string_view range = text.substr(at + 1);
    const auto comma = range.find(',');
    if (comma == std::string_view::npos) throw ParseError("expected '@lo,hi' after the polynomial", at + 2);
    lo = algebraic::parse_rational(range.substr(0, comma));
    hi = algebraic::parse_rational(range.substr(comma + 1));
    if (!(lo < hi)) throw Error(ErrorKind::InvalidArgument, "empty root interval in '" + std::string(text) + "'");
  }
  const auto roots = algebraic::isolate_real_roots(p, lo, hi);
  const std::string where = "(" + lo.get_str() + ", " + hi.get_str() + ")";
  if (roots.empty())
    throw Error(ErrorKind::BaseOutOfRange, "'" + std::string(text) + "' has no root in " + where);
  if (roots.size() > 1) {
    std::string list;
    for (const auto& r : roots) list += (list.empty() ? "" : ", ") + algebraic::to_decimal(r, 6);
    throw Error(ErrorKind::InvalidArgument, "'" + std::string(text) + "' has " + std::to_string(roots.size()) +
                                                " roots in " + where + " (" + list + "); select one with @lo,hi");
  }
  return roots.front();
}

}  // namespace

BaseSpec parse_base_spec(std::string_view text) {
  if (text.empty()) throw ParseError("empty base", 1);
  if (is_name(text)) {
    return {std::string(text), expansions::Base(constants::lookup(text).value)};
  }
  if (looks_rational(text))
    return {std::string(text), expansions::Base(RealAlgebraic::from_rational(algebraic::parse_rational(text)))};
  return {std::string(text), expansions::Base(polynomial_root(text))};
}

FieldElement parse_point_spec(const expansions::Base& base, std::string_view text) {
  if (text.substr(0, 5) == "word:") {
    try {
      return expansions::eval_word(base, expansions::EventuallyPeriodicWord::parse(text.substr(5)));
    } catch (const ParseError& e) {
      throw ParseError(e.message(), e.column() + 5);
    }
  }
  if (text.substr(0, 3) == "fe:") {
    std::unique_ptr<algebraic::Expr> expr;
    try {
      expr = algebraic::parse_expression(text.substr(3), {"q"});
    } catch (const ParseError& e) {
      throw ParseError(e.message(), e.column() + 3);
    }
    return algebraic::evaluate_expression<FieldElement>(
        *expr, base.q(), [&](const Rational& r) { return base.element(r); },
        [](const FieldElement& a, const FieldElement& b, std::size_t column) {
          if (b.is_zero()) throw ParseError("division by zero", column + 3);
          return a / b;
        });
  }
  throw ParseError("expected a point of the form 'word:PRE|PER' or 'fe:<expression in q>'", 1);
}

}  // namespace betabranch::cli
