#pragma once

#include <vector>

#include "betabranch/algebraic/polynomial.hpp"

namespace betabranch::algebraic {

/// Sturm chain of a square-free integer polynomial (each member scaled to a
/// primitive integer polynomial by a positive factor, so signs are preserved).
class SturmSequence {
 public:
  explicit SturmSequence(const IntPolynomial& square_free);

  /// Sign variations of the chain evaluated at r (zeros skipped).
  int variations(const Rational& r) const;

  /// Number of distinct roots in (a, b], valid for any a < b.
  int count_half_open(const Rational& a, const Rational& b) const;

  /// Number of distinct roots in [a, b].
  int count_closed(const Rational& a, const Rational& b) const;

  const IntPolynomial& polynomial() const { return chain_.front(); }

 private:
  std::vector<IntPolynomial> chain_;
};

}  // namespace betabranch::algebraic
