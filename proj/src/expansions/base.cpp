#include "betabranch/expansions/base.hpp"

#include "betabranch/error.hpp"

namespace betabranch::expansions {

namespace {

RealAlgebraic root_in_1_2(const algebraic::IntPolynomial& p) {
  return algebraic::isolate_real_roots(p, Rational(1), Rational(2)).at(0);
}

const RealAlgebraic& checked(const RealAlgebraic& q) {
  if (compare(q, Rational(1)) <= 0 || compare(q, Rational(2)) >= 0)
    throw Error(ErrorKind::BaseOutOfRange, "base must satisfy 1 < q < 2, got " + algebraic::to_decimal(q, 6));
  return q;
}

}  // namespace

const RealAlgebraic& golden_ratio() {
  static const RealAlgebraic g = root_in_1_2(algebraic::IntPolynomial({-1, -1, 1}));
  return g;
}

const RealAlgebraic& q_f_value() {
  static const RealAlgebraic g = root_in_1_2(algebraic::IntPolynomial({-1, 1, -2, 1}));
  return g;
}

const RealAlgebraic& q_2_value() {
  static const RealAlgebraic g = root_in_1_2(algebraic::IntPolynomial({-1, -1, -2, 0, 1}));
  return g;
}

const RealAlgebraic& q_aleph0_value() {
  static const RealAlgebraic g = root_in_1_2(algebraic::IntPolynomial({-1, -1, -2, -1, -1, 0, 1}));
  return g;
}

Base::Base(const RealAlgebraic& q)
    : value_(checked(q)),
      field_(value_),
      q_(field_.generator()),
      switch_lo_(q_.inverse()),
      switch_hi_((q_ * (q_ - Rational(1))).inverse()),
      upper_((q_ - Rational(1)).inverse()) {
  above_golden_ = compare(value_, golden_ratio()) > 0;
  const auto c = compare(value_, q_f_value());
  above_qf_ = c > 0;
  below_qf_ = c < 0;
}

}  // namespace betabranch::expansions
