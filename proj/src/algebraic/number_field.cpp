#include "betabranch/algebraic/number_field.hpp"

#include <mutex>
#include <stdexcept>

#include "betabranch/algebraic/sturm.hpp"
#include "betabranch/error.hpp"

namespace betabranch::algebraic {

struct NumberField::Data {
  IntPolynomial minpoly;
  RatPolynomial modulus;  // monic minpoly
  RealAlgebraic generator;
  int degree;
  std::vector<RatPolynomial> powers;  // x^(degree + i) mod modulus, i = 0 .. degree - 2

  std::mutex mu;
  RealAlgebraic refined;  // guarded by mu

  Data(IntPolynomial m, RealAlgebraic g)
      : minpoly(std::move(m)),
        modulus(to_rational(minpoly) * Rational(1 / Rational(minpoly.leading()))),
        generator(std::move(g)),
        degree(minpoly.degree()),
        refined(generator) {
    if (degree >= 2) {
      RatPolynomial p = RatPolynomial::monomial(1, static_cast<std::size_t>(degree));
      p = divmod(p, modulus).second;
      powers.push_back(p);
      for (int i = 1; i <= degree - 2; ++i) {
        p = divmod(p * RatPolynomial::x(), modulus).second;
        powers.push_back(p);
      }
    }
  }

  RatPolynomial reduce(const RatPolynomial& p) const {
    if (p.degree() < degree) return p;
    if (p.degree() > 2 * degree - 2) return divmod(p, modulus).second;
    std::vector<Rational> low(static_cast<std::size_t>(degree), Rational(0));
    for (int i = 0; i < degree; ++i) low[i] = p.coeff(static_cast<std::size_t>(i));
    RatPolynomial acc(std::move(low));
    for (int i = degree; i <= p.degree(); ++i) {
      const Rational& c = p.coeffs()[i];
      if (c != 0) acc += powers[i - degree] * c;
    }
    return acc;
  }
};

namespace {

RealAlgebraic with_minimal_polynomial(const RealAlgebraic& g) {
  IntPolynomial m = minimal_polynomial(g);
  if (m.degree() == 1) return RealAlgebraic::from_rational(g.is_exact() ? g.lo() : Rational(-m.coeffs()[0], m.coeffs()[1]));
  return RealAlgebraic(m, g.lo(), g.hi());
}

}  // namespace

NumberField::NumberField(const RealAlgebraic& generator) {
  RealAlgebraic g = with_minimal_polynomial(generator);
  IntPolynomial m = g.polynomial();
  data_ = std::make_shared<Data>(std::move(m), std::move(g));
}

int NumberField::degree() const { return data_->degree; }
const IntPolynomial& NumberField::minimal_polynomial() const { return data_->minpoly; }
const RealAlgebraic& NumberField::generator_value() const { return data_->generator; }

FieldElement NumberField::zero() const { return FieldElement(*this, RatPolynomial()); }
FieldElement NumberField::one() const { return FieldElement(*this, RatPolynomial::constant(1)); }
FieldElement NumberField::generator() const { return FieldElement(*this, RatPolynomial::x()); }
FieldElement NumberField::from_rational(const Rational& r) const {
  return FieldElement(*this, RatPolynomial::constant(r));
}
FieldElement NumberField::from_polynomial(const RatPolynomial& p) const { return FieldElement(*this, p); }

Interval NumberField::generator_enclosure(unsigned bits) const {
  Rational eps(BigInt(1), BigInt(1) << bits);
  std::lock_guard lock(data_->mu);
  RealAlgebraic& r = data_->refined;
  while (r.hi() - r.lo() > eps) r.bisect();
  if (r.is_exact()) return r.interval();
  // Round outward to the requested dyadic grid so operand sizes stay proportional
  // to `bits` even after earlier calls refined the cached interval much further.
  const BigInt scale = BigInt(1) << (bits + 1);
  BigInt lo_num, hi_num;
  const Rational lo_scaled = r.lo() * scale;
  const Rational hi_scaled = r.hi() * scale;
  mpz_fdiv_q(lo_num.get_mpz_t(), lo_scaled.get_num_mpz_t(), lo_scaled.get_den_mpz_t());
  mpz_cdiv_q(hi_num.get_mpz_t(), hi_scaled.get_num_mpz_t(), hi_scaled.get_den_mpz_t());
  Rational lo(lo_num, scale), hi(hi_num, scale);
  lo.canonicalize();
  hi.canonicalize();
  return {lo, hi};
}

bool operator==(const NumberField& a, const NumberField& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->minpoly == b.data_->minpoly && a.data_->generator == b.data_->generator;
}

FieldElement::FieldElement(NumberField field, RatPolynomial rep) : field_(std::move(field)), rep_(std::move(rep)) {
  rep_ = field_.data_->reduce(rep_);
}

namespace {

void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (!(a.field() == b.field())) throw Error(ErrorKind::FieldMismatch, "operands live in different number fields");
}

}  // namespace

Rational FieldElement::rational_value() const {
  if (!is_rational()) throw std::logic_error("FieldElement::rational_value on an irrational element");
  return rep_.coeff(0);
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorKind::InverseOfZero, "inverse of zero field element");
  auto eg = extended_gcd(rep_, field_.data_->modulus);
  if (eg.g.degree() != 0) throw std::logic_error("FieldElement::inverse: modulus not irreducible");
  return FieldElement(field_, eg.s);
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return FieldElement(a.field_, a.rep_ + b.rep_);
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return FieldElement(a.field_, a.rep_ - b.rep_);
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return FieldElement(a.field_, a.rep_ * b.rep_);
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return a * b.inverse();
}
FieldElement FieldElement::operator-() const { return FieldElement(field_, -rep_); }

FieldElement operator+(const FieldElement& a, const Rational& r) {
  return FieldElement(a.field_, a.rep_ + RatPolynomial::constant(r));
}
FieldElement operator-(const FieldElement& a, const Rational& r) {
  return FieldElement(a.field_, a.rep_ - RatPolynomial::constant(r));
}
FieldElement operator*(const FieldElement& a, const Rational& r) { return FieldElement(a.field_, a.rep_ * r); }

bool operator==(const FieldElement& a, const FieldElement& b) { return a.field_ == b.field_ && a.rep_ == b.rep_; }

Interval FieldElement::enclosure(unsigned bits) const {
  if (is_rational()) return Interval(rep_.coeff(0));
  return enclose(rep_, field_.generator_enclosure(bits));
}

int FieldElement::sign() const {
  if (is_rational()) return sgn(rep_.coeff(0));
  for (unsigned bits = 64;; bits *= 2) {
    int s = enclosure(bits).sign();
    if (s != 0) return s;
  }
}

FieldElement field_arith(FieldOp op, const FieldElement& a, const FieldElement* b) {
  if (op == FieldOp::Inv) return a.inverse();
  if (b == nullptr) throw std::invalid_argument("field_arith: binary operation needs two operands");
  switch (op) {
    case FieldOp::Add: return a + *b;
    case FieldOp::Sub: return a - *b;
    case FieldOp::Mul: return a * *b;
    case FieldOp::Inv: break;
  }
  return a.inverse();
}

namespace {

/// Characteristic polynomial of multiplication by a (Faddeev-LeVerrier over Q).
RatPolynomial characteristic_polynomial(const FieldElement& a) {
  const int n = a.field().degree();
  using Matrix = std::vector<std::vector<Rational>>;
  Matrix A(n, std::vector<Rational>(n, Rational(0)));
  FieldElement col = a;
  const FieldElement q = a.field().generator();
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) A[i][j] = col.polynomial().coeff(static_cast<std::size_t>(i));
    col = col * q;
  }
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  Matrix M(n, std::vector<Rational>(n, Rational(0)));
  for (int k = 1; k <= n; ++k) {
    Matrix AM(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) {
        if (A[i][l] == 0) continue;
        for (int j = 0; j < n; ++j) AM[i][j] += A[i][l] * M[l][j];
      }
    for (int i = 0; i < n; ++i) AM[i][i] += c[n - k + 1];
    M = std::move(AM);
    Rational tr = 0;
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) tr += A[i][l] * M[l][i];
    c[n - k] = -tr / k;
  }
  return RatPolynomial(std::move(c));
}

}  // namespace

RealAlgebraic to_real_algebraic(const FieldElement& a) {
  if (a.is_rational()) return RealAlgebraic::from_rational(a.rational_value());
  IntPolynomial sf = square_free_part(primitive_part(characteristic_polynomial(a)));
  SturmSequence sturm(sf);
  for (unsigned bits = 64;; bits *= 2) {
    Interval e = a.enclosure(bits);
    if (sturm.count_closed(e.lo, e.hi) == 1) return RealAlgebraic(sf, e.lo, e.hi);
  }
}

std::strong_ordering compare(const FieldElement& a, const Rational& r) {
  int s = (a - r).sign();
  return s < 0 ? std::strong_ordering::less : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::strong_ordering compare(const FieldElement& a, const FieldElement& b) {
  if (a.field() == b.field()) {
    int s = (a - b).sign();
    return s < 0 ? std::strong_ordering::less : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }
  if (b.is_rational()) return compare(a, b.rational_value());
  if (a.is_rational()) return 0 <=> compare(b, a.rational_value());
  return compare(to_real_algebraic(a), to_real_algebraic(b));
}

std::string to_decimal(const FieldElement& a, int digits) {
  if (digits < 1) throw std::invalid_argument("to_decimal: digits must be >= 1");
  if (a.is_rational()) return rational_to_decimal(a.rational_value(), digits);
  for (unsigned bits = 64;; bits *= 2) {
    Interval e = a.enclosure(bits);
    std::string lo = rational_to_decimal(e.lo, digits);
    if (lo == rational_to_decimal(e.hi, digits)) return lo;
  }
}

std::string to_string(const FieldElement& a, std::string_view var) { return to_string(a.polynomial(), var); }

bool RepLess::operator()(const FieldElement& a, const FieldElement& b) const {
  const auto& x = a.rep();
  const auto& y = b.rep();
  if (x.size() != y.size()) return x.size() < y.size();
  for (std::size_t i = 0; i < x.size(); ++i) {
    int c = cmp(x[i], y[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

}  // namespace betabranch::algebraic
