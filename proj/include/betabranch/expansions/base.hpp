#pragma once

#include <string>

#include "betabranch/algebraic/number_field.hpp"
#include "betabranch/algebraic/real_algebraic.hpp"

namespace betabranch::expansions {

using algebraic::FieldElement;
using algebraic::NumberField;
using algebraic::Rational;
using algebraic::RealAlgebraic;

/// A base q in (1, 2) together with the field Q(q) and the landmark points of
/// the dynamics: 1/q, 1/(q(q-1)) (the switch region ends) and 1/(q-1).
class Base {
 public:
  /// Throws Error(BaseOutOfRange) unless 1 < q < 2 exactly.
  explicit Base(const RealAlgebraic& q);

  const RealAlgebraic& value() const { return value_; }
  const NumberField& field() const { return field_; }

  const FieldElement& q() const { return q_; }
  const FieldElement& switch_lo() const { return switch_lo_; }  // 1/q
  const FieldElement& switch_hi() const { return switch_hi_; }  // 1/(q(q-1))
  const FieldElement& upper() const { return upper_; }          // 1/(q-1)

  FieldElement element(const Rational& r) const { return field_.from_rational(r); }

  /// (1+sqrt5)/2 < q <= q_f, the range where the unique-expansion set has an explicit description.
  bool in_golden_to_qf() const { return above_golden_ && !above_qf_; }
  bool above_golden() const { return above_golden_; }
  /// q < q_f.
  bool below_qf() const { return below_qf_; }

  /// Decimal approximation of q.
  std::string approx(int digits = 5) const { return algebraic::to_decimal(value_, digits); }

 private:
  RealAlgebraic value_;
  NumberField field_;
  FieldElement q_;
  FieldElement switch_lo_;
  FieldElement switch_hi_;
  FieldElement upper_;
  bool above_golden_ = false;
  bool above_qf_ = false;
  bool below_qf_ = false;
};

/// (1+sqrt5)/2 as the root of x^2-x-1 in (1, 2).
const RealAlgebraic& golden_ratio();
/// q_f, the root of x^3-2x^2+x-1 in (1, 2).
const RealAlgebraic& q_f_value();
/// q_2, the root of x^4-2x^2-x-1 in (1, 2).
const RealAlgebraic& q_2_value();
/// q_aleph0, the root of x^6-x^4-x^3-2x^2-x-1 in (1, 2).
const RealAlgebraic& q_aleph0_value();

}  // namespace betabranch::expansions
