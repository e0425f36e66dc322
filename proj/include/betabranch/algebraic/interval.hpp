#pragma once

#include <algorithm>

#include "betabranch/algebraic/polynomial.hpp"

namespace betabranch::algebraic {

/// Closed rational interval [lo, hi] with exact endpoint arithmetic.
struct Interval {
  Rational lo;
  Rational hi;

  Interval() = default;
  Interval(const Rational& v) : lo(v), hi(v) {}  // NOLINT: implicit point interval
  Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {}

  Rational width() const { return hi - lo; }
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
  bool contains_zero() const { return lo <= 0 && hi >= 0; }

  /// -1 / +1 when the interval excludes zero, 0 when it straddles or touches it.
  int sign() const {
    if (lo > 0) return 1;
    if (hi < 0) return -1;
    return 0;
  }

  friend Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
  friend Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
  friend Interval operator*(const Interval& a, const Interval& b) {
    if (a.lo >= 0 && b.lo >= 0) return {a.lo * b.lo, a.hi * b.hi};
    Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
  }
};

/// Interval Horner enclosure of p over x.
template <class T>
Interval enclose(const Polynomial<T>& p, const Interval& x) {
  Interval acc(Rational(0));
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc = acc * x;
    acc.lo += *it;
    acc.hi += *it;
  }
  return acc;
}

}  // namespace betabranch::algebraic
