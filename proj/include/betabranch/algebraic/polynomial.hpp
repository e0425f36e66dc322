#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace betabranch::algebraic {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Dense univariate polynomial, coefficients in ascending degree order.
/// The zero polynomial has no coefficients; otherwise the leading coefficient is nonzero.
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const T& c) { return Polynomial(std::vector<T>{c}); }
  static Polynomial monomial(const T& c, std::size_t degree) {
    std::vector<T> v(degree + 1, T(0));
    v[degree] = c;
    return Polynomial(std::move(v));
  }
  static Polynomial x() { return monomial(T(1), 1); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::size_t size() const { return c_.size(); }
  const std::vector<T>& coeffs() const { return c_; }
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  const T& leading() const { return c_.back(); }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const T& s) {
    if (s == 0) {
      c_.clear();
      return *this;
    }
    for (auto& v : c_) v *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return Polynomial(std::move(r));
  }

  /// Horner evaluation in any ring that accepts multiplication/addition by T.
  template <class U>
  U evaluate(const U& at) const {
    U acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc = acc * at;
      acc = acc + U(*it);
    }
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<T> c_;
};

using IntPolynomial = Polynomial<BigInt>;
using RatPolynomial = Polynomial<Rational>;

RatPolynomial to_rational(const IntPolynomial& p);

/// gcd of the coefficients (non-negative); zero for the zero polynomial.
BigInt content(const IntPolynomial& p);

/// Divides out the content and makes the leading coefficient positive.
IntPolynomial primitive_part(const IntPolynomial& p);

/// Clears denominators, then returns the primitive part.
IntPolynomial primitive_part(const RatPolynomial& p);

/// Quotient and remainder over Q. Throws on division by zero.
std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b);

/// Monic gcd over Q (zero if both are zero).
RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b);

/// Primitive gcd over Z[x] with positive leading coefficient.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

struct ExtendedGcd {
  RatPolynomial g;  // monic
  RatPolynomial s;
  RatPolynomial t;  // s*a + t*b == g
};
ExtendedGcd extended_gcd(const RatPolynomial& a, const RatPolynomial& b);

/// p / gcd(p, p'), primitive.
IntPolynomial square_free_part(const IntPolynomial& p);

/// Exact division in Z[x]; nullopt unless g divides f with an integral quotient.
std::optional<IntPolynomial> exact_quotient(const IntPolynomial& f, const IntPolynomial& g);

/// Sign (-1, 0, 1) of p(r).
int sign_at(const IntPolynomial& p, const Rational& r);
Rational evaluate(const IntPolynomial& p, const Rational& r);
Rational evaluate(const RatPolynomial& p, const Rational& r);

/// Human form, highest degree first, e.g. "x^6-x^4-x^3-2x^2-x-1".
std::string to_string(const IntPolynomial& p, std::string_view var = "x");
std::string to_string(const RatPolynomial& p, std::string_view var = "x");

/// Ascending coefficient list form, e.g. "[-1,-1,-2,-1,-1,0,1]".
std::string to_coeff_list(const IntPolynomial& p);

}  // namespace betabranch::algebraic
