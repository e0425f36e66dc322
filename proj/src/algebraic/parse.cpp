#include "betabranch/algebraic/parse.hpp"

#include <cctype>
#include <string>

namespace betabranch::algebraic {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string_view>& vars) : s_(text), vars_(vars) {}

  std::unique_ptr<Expr> parse() {
    auto e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_ + 1); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool starts_primary() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return c == '(' || std::isalpha(static_cast<unsigned char>(c));
  }

  static std::unique_ptr<Expr> node(Expr::Kind k, std::size_t col, std::unique_ptr<Expr> l = nullptr,
                                    std::unique_ptr<Expr> r = nullptr) {
    auto e = std::make_unique<Expr>();
    e->kind = k;
    e->column = col;
    e->lhs = std::move(l);
    e->rhs = std::move(r);
    return e;
  }

  std::unique_ptr<Expr> expr() {
    auto lhs = term();
    while (true) {
      if (peek('+')) {
        std::size_t col = ++pos_;
        lhs = node(Expr::Kind::Add, col, std::move(lhs), term());
      } else if (peek('-')) {
        std::size_t col = ++pos_;
        lhs = node(Expr::Kind::Sub, col, std::move(lhs), term());
      } else {
        return lhs;
      }
    }
  }

  std::unique_ptr<Expr> term() {
    auto lhs = unary();
    while (true) {
      if (peek('*')) {
        std::size_t col = ++pos_;
        lhs = node(Expr::Kind::Mul, col, std::move(lhs), unary());
      } else if (peek('/')) {
        std::size_t col = ++pos_;
        lhs = node(Expr::Kind::Div, col, std::move(lhs), unary());
      } else if (starts_primary()) {
        lhs = node(Expr::Kind::Mul, pos_ + 1, std::move(lhs), power());
      } else {
        return lhs;
      }
    }
  }

  std::unique_ptr<Expr> unary() {
    if (peek('-')) {
      std::size_t col = ++pos_;
      return node(Expr::Kind::Neg, col, unary());
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  std::unique_ptr<Expr> power() {
    auto base = primary();
    if (peek('^')) {
      std::size_t col = ++pos_;
      skip();
      bool neg = false;
      if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected integer exponent");
      if (pos_ - start > 6) fail("exponent too large");
      auto e = node(Expr::Kind::Pow, col, std::move(base));
      e->exponent = std::stol(std::string(s_.substr(start, pos_ - start)));
      if (neg) e->exponent = -e->exponent;
      return e;
    }
    return base;
  }

  std::unique_ptr<Expr> primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const std::size_t col = pos_ + 1;
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      auto e = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string_view name = s_.substr(start, pos_ - start);
      for (auto v : vars_)
        if (v == name) return node(Expr::Kind::Variable, col);
      pos_ = start;
      fail("unknown variable '" + std::string(name) + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::unique_ptr<Expr> number() {
    const std::size_t col = pos_ + 1;
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string digits(s_.substr(start, pos_ - start));
    BigInt den = 1;
    if (pos_ < s_.size() && s_[pos_] == '.') {
      ++pos_;
      std::size_t fstart = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      digits += std::string(s_.substr(fstart, pos_ - fstart));
      mpz_ui_pow_ui(den.get_mpz_t(), 10, pos_ - fstart);
    }
    if (digits.empty()) fail("malformed number");
    auto e = node(Expr::Kind::Number, col);
    e->value = Rational(BigInt(digits), den);
    e->value.canonicalize();
    return e;
  }

  std::string_view s_;
  const std::vector<std::string_view>& vars_;
  std::size_t pos_ = 0;
};

RatPolynomial divide_by_constant(const RatPolynomial& a, const RatPolynomial& b, std::size_t column) {
  if (b.degree() != 0) throw ParseError("division by a non-constant polynomial", column);
  return a * Rational(1 / b.coeffs()[0]);
}

}  // namespace

std::unique_ptr<Expr> parse_expression(std::string_view text, const std::vector<std::string_view>& vars) {
  return Parser(text, vars).parse();
}

RatPolynomial parse_rational_polynomial(std::string_view text, const std::vector<std::string_view>& vars) {
  auto e = parse_expression(text, vars);
  return evaluate_expression<RatPolynomial>(
      *e, RatPolynomial::x(), [](const Rational& r) { return RatPolynomial::constant(r); }, divide_by_constant);
}

IntPolynomial parse_polynomial(std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t");
  if (first != std::string_view::npos && text[first] == '[') {
    std::size_t close = text.find(']', first);
    if (close == std::string_view::npos) throw ParseError("missing ']'", text.size() + 1);
    if (text.find_first_not_of(" \t", close + 1) != std::string_view::npos)
      throw ParseError("trailing input after ']'", close + 2);
    std::vector<BigInt> coeffs;
    std::size_t pos = first + 1;
    while (pos < close) {
      std::size_t comma = text.find(',', pos);
      if (comma == std::string_view::npos || comma > close) comma = close;
      std::string item(text.substr(pos, comma - pos));
      std::size_t a = item.find_first_not_of(" \t"), b = item.find_last_not_of(" \t");
      if (a == std::string::npos) throw ParseError("empty coefficient", pos + 1);
      item = item.substr(a, b - a + 1);
      std::size_t sign = (item[0] == '-' || item[0] == '+') ? 1 : 0;
      if (item.size() == sign || item.find_first_not_of("0123456789", sign) != std::string::npos)
        throw ParseError("coefficient is not an integer: '" + item + "'", pos + a + 1);
      if (item[0] == '+') item.erase(0, 1);
      coeffs.emplace_back(item);
      pos = comma + 1;
    }
    IntPolynomial p(std::move(coeffs));
    if (p.is_zero()) throw ParseError("zero polynomial", first + 1);
    return p;
  }
  RatPolynomial p;
  std::size_t eq = text.find('=');
  if (eq != std::string_view::npos) {
    RatPolynomial lhs = parse_rational_polynomial(text.substr(0, eq));
    RatPolynomial rhs;
    try {
      rhs = parse_rational_polynomial(text.substr(eq + 1));
    } catch (const ParseError& e) {
      throw ParseError(e.message(), eq + 1 + e.column());
    }
    p = lhs - rhs;
  } else {
    p = parse_rational_polynomial(text);
  }
  if (p.is_zero()) throw ParseError("zero polynomial", 1);
  // Keep the printed orientation (leading coefficient sign) but clear denominators.
  IntPolynomial out = primitive_part(p);
  return p.leading() < 0 ? -out : out;
}

Rational parse_rational(std::string_view text) {
  auto e = parse_expression(text, {});
  return evaluate_expression<Rational>(
      *e, Rational(0), [](const Rational& r) { return r; },
      [](const Rational& a, const Rational& b, std::size_t column) {
        if (b == 0) throw ParseError("division by zero", column);
        return Rational(a / b);
      });
}

}  // namespace betabranch::algebraic
