#pragma once

#include <compare>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "betabranch/algebraic/interval.hpp"
#include "betabranch/algebraic/real_algebraic.hpp"

namespace betabranch::algebraic {

class FieldElement;

/// The real number field Q(g) for a real algebraic generator g, embedded in R.
/// Cheap to copy: copies share the minimal polynomial, the reduction table and
/// a refinement cache of the generator's isolating interval.
class NumberField {
 public:
  /// Computes the minimal polynomial of the generator (irreducible factor of its defining polynomial).
  explicit NumberField(const RealAlgebraic& generator);

  int degree() const;
  const IntPolynomial& minimal_polynomial() const;
  const RealAlgebraic& generator_value() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement generator() const;
  FieldElement from_rational(const Rational& r) const;
  FieldElement from_polynomial(const RatPolynomial& p) const;

  /// Isolating interval of the generator with width <= 2^-bits.
  Interval generator_enclosure(unsigned bits) const;

  /// Same embedded field: identical data, or same minimal polynomial and same root.
  friend bool operator==(const NumberField& a, const NumberField& b);

 private:
  friend class FieldElement;
  struct Data;
  std::shared_ptr<Data> data_;
};

/// Element of a NumberField as its canonical representative: the polynomial in
/// the generator of degree < field degree, coefficients in lowest terms.
/// Equal elements of one field have equal representatives.
class FieldElement {
 public:
  FieldElement(NumberField field, RatPolynomial rep);

  const NumberField& field() const { return field_; }
  const RatPolynomial& polynomial() const { return rep_; }
  const std::vector<Rational>& rep() const { return rep_.coeffs(); }

  bool is_zero() const { return rep_.is_zero(); }
  /// True iff the element lies in Q (representative of degree <= 0).
  bool is_rational() const { return rep_.degree() <= 0; }
  Rational rational_value() const;  // requires is_rational()

  FieldElement inverse() const;  // throws Error(InverseOfZero)

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const;

  friend FieldElement operator+(const FieldElement& a, const Rational& r);
  friend FieldElement operator-(const FieldElement& a, const Rational& r);
  friend FieldElement operator*(const FieldElement& a, const Rational& r);

  /// Same field and identical canonical representatives.
  friend bool operator==(const FieldElement& a, const FieldElement& b);

  /// Rational interval containing the value, from interval evaluation on the generator enclosure.
  Interval enclosure(unsigned bits) const;

  /// Exact sign, refining the generator interval until the enclosure excludes zero.
  int sign() const;

 private:
  NumberField field_;
  RatPolynomial rep_;
};

enum class FieldOp { Add, Sub, Mul, Inv };

/// Dispatching form of the field operations; `b` is ignored for Inv.
FieldElement field_arith(FieldOp op, const FieldElement& a, const FieldElement* b = nullptr);

/// Exact ordering. Same field: sign of the difference. Different fields: via
/// each element's own minimal polynomial and isolating interval.
std::strong_ordering compare(const FieldElement& a, const FieldElement& b);
std::strong_ordering compare(const FieldElement& a, const Rational& r);

inline bool operator<(const FieldElement& a, const FieldElement& b) { return compare(a, b) < 0; }
inline bool operator<=(const FieldElement& a, const FieldElement& b) { return compare(a, b) <= 0; }
inline bool operator>(const FieldElement& a, const FieldElement& b) { return compare(a, b) > 0; }
inline bool operator>=(const FieldElement& a, const FieldElement& b) { return compare(a, b) >= 0; }

/// The element as a standalone real algebraic number (characteristic polynomial + isolation).
RealAlgebraic to_real_algebraic(const FieldElement& a);

std::string to_decimal(const FieldElement& a, int digits);

/// Exact representative rendered as a polynomial in `var`, e.g. "q^2-1/2*q+3".
std::string to_string(const FieldElement& a, std::string_view var = "q");

/// Strict weak order on canonical representatives (for deterministic maps/sets).
struct RepLess {
  bool operator()(const FieldElement& a, const FieldElement& b) const;
};

}  // namespace betabranch::algebraic
