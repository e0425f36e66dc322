#include "betabranch/algebraic/real_algebraic.hpp"

#include <stdexcept>

#include "betabranch/algebraic/factor.hpp"
#include "betabranch/algebraic/sturm.hpp"

namespace betabranch::algebraic {

namespace {

IntPolynomial linear_for(const Rational& r) {
  return IntPolynomial(std::vector<BigInt>{-r.get_num(), r.get_den()});
}

}  // namespace

RealAlgebraic::RealAlgebraic(IntPolynomial polynomial, Rational lo, Rational hi)
    : poly_(square_free_part(polynomial)), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (poly_.degree() < 1) throw std::invalid_argument("RealAlgebraic: polynomial must have degree >= 1");
  if (lo_ > hi_) throw std::invalid_argument("RealAlgebraic: lo > hi");
  SturmSequence sturm(poly_);
  if (sturm.count_closed(lo_, hi_) != 1)
    throw std::invalid_argument("RealAlgebraic: interval does not isolate exactly one root of " + to_string(poly_));
  if (sign_at(poly_, lo_) == 0) {
    hi_ = lo_;
  } else if (sign_at(poly_, hi_) == 0) {
    lo_ = hi_;
  }
  if (lo_ == hi_) {
    poly_ = linear_for(lo_);
  } else {
    sign_lo_ = sign_at(poly_, lo_);
  }
}

RealAlgebraic::RealAlgebraic(IntPolynomial polynomial, Rational lo, Rational hi, Unchecked)
    : poly_(std::move(polynomial)), lo_(std::move(lo)), hi_(std::move(hi)) {
  sign_lo_ = lo_ == hi_ ? 0 : sign_at(poly_, lo_);
}

RealAlgebraic RealAlgebraic::from_rational(const Rational& r) { return RealAlgebraic(linear_for(r), r, r, Unchecked{}); }

void RealAlgebraic::bisect() {
  if (lo_ == hi_) return;
  Rational mid = (lo_ + hi_) / 2;
  int s = sign_at(poly_, mid);
  if (s == 0) {
    lo_ = hi_ = mid;
    poly_ = linear_for(mid);
    sign_lo_ = 0;
  } else if (s == sign_lo_) {
    lo_ = std::move(mid);
  } else {
    hi_ = std::move(mid);
  }
}

Rational root_bound(const IntPolynomial& p) {
  if (p.degree() < 1) return 1;
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rational r(abs(p.coeffs()[i]), abs(p.leading()));
    r.canonicalize();
    if (r > m) m = r;
  }
  return m + 1;
}

namespace {

void isolate_rec(const SturmSequence& s, const Rational& a, const Rational& b, int va, int vb,
                 std::vector<std::pair<Rational, Rational>>& out) {
  const int n = va - vb;
  if (n <= 0) return;
  if (n == 1) {
    out.emplace_back(a, b);
    return;
  }
  Rational m = (a + b) / 2;
  for (unsigned j = 2; sign_at(s.polynomial(), m) == 0; ++j) {
    Rational step(b - a);
    step /= BigInt(1) << j;
    m = (a + b) / 2 + step;
  }
  const int vm = s.variations(m);
  isolate_rec(s, a, m, va, vm, out);
  isolate_rec(s, m, b, vm, vb, out);
}

}  // namespace

std::vector<RealAlgebraic> isolate_real_roots(const IntPolynomial& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
  std::vector<RealAlgebraic> result;
  IntPolynomial sf = square_free_part(p);
  if (sf.degree() < 1 || !(lo < hi)) return result;
  SturmSequence sturm(sf);
  const Rational bound = root_bound(sf);
  Rational a = lo < -bound ? Rational(-bound) : lo;
  Rational b = hi > bound ? bound : hi;
  if (!(a < b)) return result;
  // Open range: step off endpoints that are themselves roots.
  if (sign_at(sf, a) == 0) {
    Rational d = (b - a) / 2;
    while (sign_at(sf, a + d) == 0 || sturm.count_half_open(a, a + d) != 0) d /= 2;
    a += d;
  }
  if (sign_at(sf, b) == 0) {
    Rational d = (b - a) / 2;
    while (sign_at(sf, b - d) == 0 || sturm.count_half_open(b - d, b) != 1) d /= 2;
    b -= d;
  }
  std::vector<std::pair<Rational, Rational>> spans;
  isolate_rec(sturm, a, b, sturm.variations(a), sturm.variations(b), spans);
  for (auto& [l, h] : spans) result.push_back(RealAlgebraic(sf, l, h, RealAlgebraic::Unchecked{}));
  for (std::size_t i = 0; i + 1 < result.size(); ++i) {
    while (!(result[i].hi() < result[i + 1].lo())) {
      result[i].bisect();
      result[i + 1].bisect();
    }
  }
  return result;
}

std::vector<RealAlgebraic> isolate_real_roots(const IntPolynomial& p) {
  Rational b = root_bound(p) + 1;
  return isolate_real_roots(p, -b, b);
}

RealAlgebraic refine(const RealAlgebraic& a, const Rational& eps) {
  if (eps <= 0) throw std::invalid_argument("refine: eps must be positive");
  RealAlgebraic r = a;
  while (r.hi() - r.lo() > eps) r.bisect();
  return r;
}

std::strong_ordering compare(const RealAlgebraic& a, const Rational& r) {
  RealAlgebraic x = a;
  while (true) {
    if (r < x.lo()) return std::strong_ordering::greater;
    if (r > x.hi()) return std::strong_ordering::less;
    if (x.is_exact() || sign_at(x.polynomial(), r) == 0) return std::strong_ordering::equal;
    x.bisect();
  }
}

std::strong_ordering compare(const RealAlgebraic& a, const RealAlgebraic& b) {
  if (a.is_exact()) {
    auto c = compare(b, a.lo());
    return 0 <=> c;
  }
  if (b.is_exact()) return compare(a, b.lo());
  const Rational l = a.lo() > b.lo() ? a.lo() : b.lo();
  const Rational h = a.hi() < b.hi() ? a.hi() : b.hi();
  if (l <= h) {
    IntPolynomial g = gcd(a.polynomial(), b.polynomial());
    if (g.degree() >= 1 && SturmSequence(g).count_closed(l, h) >= 1) return std::strong_ordering::equal;
  }
  RealAlgebraic x = a, y = b;
  while (true) {
    if (x.hi() < y.lo()) return std::strong_ordering::less;
    if (y.hi() < x.lo()) return std::strong_ordering::greater;
    if (x.hi() - x.lo() >= y.hi() - y.lo())
      x.bisect();
    else
      y.bisect();
  }
}

IntPolynomial minimal_polynomial(const RealAlgebraic& a) {
  if (a.polynomial().degree() == 1) return a.polynomial();
  for (const auto& f : factor_square_free(a.polynomial())) {
    if (SturmSequence(f).count_closed(a.lo(), a.hi()) == 1) return f;
  }
  throw std::logic_error("minimal_polynomial: no factor vanishes on the isolating interval");
}

namespace {

BigInt round_half_away(const Rational& v) {
  Rational t = abs(v) + Rational(1, 2);
  BigInt n;
  mpz_fdiv_q(n.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
  return v < 0 ? BigInt(-n) : n;
}

std::string render_scaled(const BigInt& n, int digits) {
  std::string s = BigInt(abs(n)).get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits + 1) - s.size(), '0');
  if (digits > 0) s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  return (n < 0 ? "-" : "") + s;
}

BigInt pow10(int digits) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  return p;
}

}  // namespace

std::string rational_to_decimal(const Rational& r, int digits) {
  if (digits < 0) throw std::invalid_argument("to_decimal: digits must be >= 0");
  return render_scaled(round_half_away(r * pow10(digits)), digits);
}

std::string to_decimal(const RealAlgebraic& a, int digits) {
  if (digits < 1) throw std::invalid_argument("to_decimal: digits must be >= 1");
  const BigInt scale = pow10(digits);
  RealAlgebraic x = a;
  while (true) {
    if (x.is_exact()) return rational_to_decimal(x.lo(), digits);
    BigInt nl = round_half_away(x.lo() * scale);
    BigInt nh = round_half_away(x.hi() * scale);
    if (nl == nh) return render_scaled(nl, digits);
    if ((x.hi() - x.lo()) * scale < 1) {
      // At most one rounding boundary inside; the value may sit exactly on it.
      for (int side : {-1, 1}) {
        Rational boundary(Rational(nl) + Rational(side, 2));
        boundary /= scale;
        if (x.interval().contains(boundary) && sign_at(x.polynomial(), boundary) == 0)
          return rational_to_decimal(boundary, digits);
      }
    }
    x.bisect();
  }
}

}  // namespace betabranch::algebraic
