#include "betabranch/algebraic/polynomial.hpp"

#include <sstream>
#include <stdexcept>
#include <type_traits>

namespace betabranch::algebraic {

RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<Rational> v;
  v.reserve(p.size());
  for (const auto& c : p.coeffs()) v.emplace_back(c);
  return RatPolynomial(std::move(v));
}

BigInt content(const IntPolynomial& p) {
  BigInt g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  BigInt g = content(p);
  if (p.leading() < 0) g = -g;
  std::vector<BigInt> v(p.coeffs());
  for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(v));
}

IntPolynomial primitive_part(const RatPolynomial& p) {
  if (p.is_zero()) return {};
  BigInt l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<BigInt> v;
  v.reserve(p.size());
  for (const auto& c : p.coeffs()) {
    BigInt n = l / c.get_den();
    v.emplace_back(n * c.get_num());
  }
  return primitive_part(IntPolynomial(std::move(v)));
}

std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {RatPolynomial(), a};
  std::vector<Rational> r(a.coeffs());
  std::vector<Rational> q(a.size() - b.size() + 1, Rational(0));
  const Rational inv_lead = 1 / b.leading();
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    if (r[i] == 0) continue;
    Rational f = r[i] * inv_lead;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeffs()[j];
  }
  r.resize(db);
  return {RatPolynomial(std::move(q)), RatPolynomial(std::move(r))};
}

namespace {

RatPolynomial make_monic(const RatPolynomial& p) {
  if (p.is_zero()) return p;
  return p * Rational(1 / p.leading());
}

}  // namespace

RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b) {
  RatPolynomial x = a, y = b;
  while (!y.is_zero()) {
    auto r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return make_monic(x);
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  return primitive_part(gcd(to_rational(a), to_rational(b)));
}

ExtendedGcd extended_gcd(const RatPolynomial& a, const RatPolynomial& b) {
  RatPolynomial r0 = a, r1 = b;
  RatPolynomial s0 = RatPolynomial::constant(1), s1;
  RatPolynomial t0, t1 = RatPolynomial::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    RatPolynomial s2 = s0 - q * s1;
    RatPolynomial t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rational inv = 1 / r0.leading();
  return {r0 * inv, s0 * inv, t0 * inv};
}

IntPolynomial square_free_part(const IntPolynomial& p) {
  if (p.degree() <= 0) return primitive_part(p);
  RatPolynomial rp = to_rational(p);
  RatPolynomial g = gcd(rp, rp.derivative());
  return primitive_part(divmod(rp, g).first);
}

std::optional<IntPolynomial> exact_quotient(const IntPolynomial& f, const IntPolynomial& g) {
  if (g.is_zero()) return std::nullopt;
  if (f.is_zero()) return IntPolynomial();
  if (f.degree() < g.degree()) return std::nullopt;
  std::vector<BigInt> r(f.coeffs());
  std::vector<BigInt> q(f.size() - g.size() + 1, BigInt(0));
  const int dg = g.degree();
  for (int i = f.degree(); i >= dg; --i) {
    if (r[i] == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), g.leading().get_mpz_t())) return std::nullopt;
    BigInt c = r[i] / g.leading();
    q[i - dg] = c;
    for (int j = 0; j <= dg; ++j) r[i - dg + j] -= c * g.coeffs()[j];
  }
  for (int i = 0; i < dg; ++i)
    if (r[i] != 0) return std::nullopt;
  return IntPolynomial(std::move(q));
}

Rational evaluate(const IntPolynomial& p, const Rational& r) {
  // Homogeneous Horner over Z: p(n/d) * d^deg.
  if (p.is_zero()) return 0;
  const BigInt& n = r.get_num();
  const BigInt& d = r.get_den();
  BigInt acc = p.leading();
  BigInt dpow = 1;
  for (int i = p.degree() - 1; i >= 0; --i) {
    dpow *= d;
    acc = acc * n + p.coeffs()[i] * dpow;
  }
  Rational out(acc, dpow);
  out.canonicalize();
  return out;
}

Rational evaluate(const RatPolynomial& p, const Rational& r) {
  Rational acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * r + *it;
  return acc;
}

int sign_at(const IntPolynomial& p, const Rational& r) {
  if (p.is_zero()) return 0;
  const BigInt& n = r.get_num();
  const BigInt& d = r.get_den();
  BigInt acc = p.leading();
  BigInt dpow = 1;
  for (int i = p.degree() - 1; i >= 0; --i) {
    dpow *= d;
    acc = acc * n + p.coeffs()[i] * dpow;
  }
  return sgn(acc);
}

namespace {

template <class T>
std::string render(const Polynomial<T>& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    T c = p.coeffs()[i];
    if (c == 0) continue;
    bool neg = c < 0;
    if (neg) c = -c;
    if (neg)
      os << "-";
    else if (!first)
      os << "+";
    first = false;
    if (c != 1 || i == 0) {
      os << c;
      if constexpr (std::is_same_v<T, Rational>) {
        if (i >= 1 && c.get_den() != 1) os << "*";
      }
    }
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

}  // namespace

std::string to_string(const IntPolynomial& p, std::string_view var) { return render(p, var); }
std::string to_string(const RatPolynomial& p, std::string_view var) { return render(p, var); }

std::string to_coeff_list(const IntPolynomial& p) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p.coeffs()[i];
  os << "]";
  return os.str();
}

}  // namespace betabranch::algebraic
