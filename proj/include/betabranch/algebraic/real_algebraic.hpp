#pragma once

#include <compare>
#include <string>
#include <vector>

#include "betabranch/algebraic/interval.hpp"
#include "betabranch/algebraic/polynomial.hpp"

namespace betabranch::algebraic {

/// Exact real algebraic number: a square-free primitive integer polynomial and
/// a rational interval [lo, hi] containing exactly one of its real roots.
/// lo == hi only for rationals, whose polynomial is then linear.
class RealAlgebraic {
 public:
  /// Validates the invariants (square-free input is made primitive; Sturm count on [lo, hi] must be 1).
  RealAlgebraic(IntPolynomial polynomial, Rational lo, Rational hi);

  static RealAlgebraic from_rational(const Rational& r);

  const IntPolynomial& polynomial() const { return poly_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Interval interval() const { return {lo_, hi_}; }
  bool is_exact() const { return lo_ == hi_; }

  /// One bisection step; collapses to an exact rational if the midpoint is the root.
  void bisect();

 private:
  struct Unchecked {};
  RealAlgebraic(IntPolynomial polynomial, Rational lo, Rational hi, Unchecked);
  friend std::vector<RealAlgebraic> isolate_real_roots(const IntPolynomial&, const Rational&, const Rational&);

  IntPolynomial poly_;
  Rational lo_;
  Rational hi_;
  int sign_lo_ = 0;  // sign of poly_ at lo_ (nonzero unless exact)
};

/// One RealAlgebraic per distinct real root of p in the open interval (lo, hi),
/// increasing, with pairwise disjoint isolating intervals inside (lo, hi).
/// The square-free part of p is used as the defining polynomial.
std::vector<RealAlgebraic> isolate_real_roots(const IntPolynomial& p, const Rational& lo, const Rational& hi);

/// All real roots (Cauchy bound).
std::vector<RealAlgebraic> isolate_real_roots(const IntPolynomial& p);

/// Same number with hi - lo <= eps.
RealAlgebraic refine(const RealAlgebraic& a, const Rational& eps);

/// Exact ordering. Equality is decided by a common root of gcd(minpolys) in the
/// intersection of the isolating intervals, inequality by refining until disjoint.
std::strong_ordering compare(const RealAlgebraic& a, const RealAlgebraic& b);
std::strong_ordering compare(const RealAlgebraic& a, const Rational& r);

inline bool operator==(const RealAlgebraic& a, const RealAlgebraic& b) { return compare(a, b) == 0; }
inline std::strong_ordering operator<=>(const RealAlgebraic& a, const RealAlgebraic& b) { return compare(a, b); }

/// Irreducible factor of the defining polynomial that vanishes at a.
IntPolynomial minimal_polynomial(const RealAlgebraic& a);

/// Correctly rounded (half away from zero) decimal with `digits` fractional digits.
std::string to_decimal(const RealAlgebraic& a, int digits);

/// Round-half-away-from-zero decimal rendering of a rational.
std::string rational_to_decimal(const Rational& r, int digits);

/// Cauchy root bound: every real root lies in (-B, B).
Rational root_bound(const IntPolynomial& p);

}  // namespace betabranch::algebraic
