#include "betabranch/algebraic/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace betabranch::algebraic {

namespace {

// ---- polynomials over F_p, p a small odd prime -------------------------------

using Coef = std::int64_t;
using ModPoly = std::vector<Coef>;

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const ModPoly& a) { return static_cast<int>(a.size()) - 1; }

Coef mod(Coef v, Coef p) {
  v %= p;
  return v < 0 ? v + p : v;
}

Coef inverse_mod(Coef a, Coef p) {
  Coef r = 1, b = mod(a, p), e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

ModPoly sub(ModPoly a, const ModPoly& b, Coef p) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = mod(a[i] - b[i], p);
  trim(a);
  return a;
}

ModPoly add(ModPoly a, const ModPoly& b, Coef p) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = mod(a[i] + b[i], p);
  trim(a);
  return a;
}

ModPoly mul(const ModPoly& a, const ModPoly& b, Coef p) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b, Coef p) {
  if (b.empty()) throw std::domain_error("mod-p division by zero");
  if (deg(a) < deg(b)) return {{}, a};
  ModPoly r = a;
  ModPoly q(a.size() - b.size() + 1, 0);
  const Coef inv = inverse_mod(b.back(), p);
  const int db = deg(b);
  for (int i = deg(a); i >= db; --i) {
    if (r[i] == 0) continue;
    Coef f = r[i] * inv % p;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] = mod(r[i - db + j] - f * b[j], p);
  }
  r.resize(db);
  trim(r);
  trim(q);
  return {q, r};
}

ModPoly monic(ModPoly a, Coef p) {
  if (a.empty()) return a;
  Coef inv = inverse_mod(a.back(), p);
  for (auto& c : a) c = c * inv % p;
  return a;
}

ModPoly gcd(ModPoly a, ModPoly b, Coef p) {
  while (!b.empty()) {
    ModPoly r = divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a), p);
}

/// s*a + t*b == 1 (a, b coprime).
std::pair<ModPoly, ModPoly> bezout(const ModPoly& a, const ModPoly& b, Coef p) {
  ModPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    ModPoly s2 = sub(s0, mul(q, s1, p), p);
    ModPoly t2 = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (deg(r0) != 0) throw std::logic_error("bezout: factors not coprime");
  Coef inv = inverse_mod(r0[0], p);
  for (auto& c : s0) c = c * inv % p;
  for (auto& c : t0) c = c * inv % p;
  return {s0, t0};
}

ModPoly powmod(ModPoly base, const BigInt& e, const ModPoly& m, Coef p) {
  ModPoly result{1};
  base = divmod(base, m, p).second;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = divmod(mul(result, result, p), m, p).second;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = divmod(mul(result, base, p), m, p).second;
  }
  return result;
}

ModPoly reduce(const IntPolynomial& f, Coef p) {
  ModPoly r;
  r.reserve(f.size());
  for (const auto& c : f.coeffs()) r.push_back(static_cast<Coef>(mpz_fdiv_ui(c.get_mpz_t(), p)));
  trim(r);
  return r;
}

IntPolynomial lift_coeffs(const ModPoly& a) {
  std::vector<BigInt> v;
  v.reserve(a.size());
  for (auto c : a) v.emplace_back(static_cast<long>(c));
  return IntPolynomial(std::move(v));
}

/// Cantor-Zassenhaus equal-degree splitting of a monic product of degree-d irreducibles.
void split_equal_degree(const ModPoly& g, int d, Coef p, std::mt19937_64& rng, std::vector<ModPoly>& out) {
  if (deg(g) == d) {
    out.push_back(g);
    return;
  }
  BigInt e;
  mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<Coef> dist(0, p - 1);
  while (true) {
    ModPoly a(deg(g), 0);
    for (auto& c : a) c = dist(rng);
    trim(a);
    if (deg(a) < 1) continue;
    ModPoly b = sub(powmod(a, e, g, p), ModPoly{1}, p);
    ModPoly h = gcd(b, g, p);
    if (deg(h) > 0 && deg(h) < deg(g)) {
      split_equal_degree(h, d, p, rng, out);
      split_equal_degree(divmod(g, h, p).first, d, p, rng, out);
      return;
    }
  }
}

/// Monic irreducible factors of a monic square-free polynomial over F_p.
std::vector<ModPoly> factor_mod_p(ModPoly f, Coef p) {
  std::vector<ModPoly> out;
  std::mt19937_64 rng(0x5eed + static_cast<unsigned long>(p));
  const ModPoly x{0, 1};
  ModPoly h = x;
  for (int d = 1; 2 * d <= deg(f); ++d) {
    h = powmod(h, BigInt(static_cast<long>(p)), f, p);
    ModPoly g = gcd(sub(h, x, p), f, p);
    if (deg(g) > 0) {
      split_equal_degree(g, d, p, rng, out);
      f = divmod(f, g, p).first;
      h = divmod(h, f, p).second;
    }
  }
  if (deg(f) > 0) out.push_back(monic(f, p));
  return out;
}

// ---- Hensel lifting over Z / p^k ----------------------------------------------

IntPolynomial reduce_mod(const IntPolynomial& a, const BigInt& m) {
  std::vector<BigInt> v(a.coeffs());
  for (auto& c : v) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  return IntPolynomial(std::move(v));
}

IntPolynomial product_mod_p(const std::vector<ModPoly>& fs, std::size_t from, std::size_t to, Coef p) {
  ModPoly acc{1};
  for (std::size_t i = from; i < to; ++i) acc = mul(acc, fs[i], p);
  return lift_coeffs(acc);
}

/// F monic with F == prod(factors) mod p; returns monic lifts with F == prod mod p^k.
std::vector<IntPolynomial> hensel_lift(const IntPolynomial& F, const std::vector<ModPoly>& factors, Coef p,
                                       unsigned k) {
  if (factors.size() == 1) return {F};
  const std::size_t half = factors.size() / 2;
  std::vector<ModPoly> left(factors.begin(), factors.begin() + half);
  std::vector<ModPoly> right(factors.begin() + half, factors.end());
  ModPoly a = reduce(product_mod_p(factors, 0, half, p), p);
  ModPoly b = reduce(product_mod_p(factors, half, factors.size(), p), p);
  auto [s, t] = bezout(a, b, p);

  IntPolynomial G = lift_coeffs(a), H = lift_coeffs(b);
  BigInt m = p;
  const BigInt P(static_cast<long>(p));
  for (unsigned j = 1; j < k; ++j) {
    BigInt next = m * P;
    IntPolynomial diff = reduce_mod(F - G * H, next);
    std::vector<BigInt> ev(diff.coeffs());
    for (auto& c : ev) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    ModPoly e = reduce(IntPolynomial(std::move(ev)), p);
    auto [q, dG] = divmod(mul(t, e, p), a, p);
    ModPoly dH = add(mul(s, e, p), mul(q, b, p), p);
    G += lift_coeffs(dG) * m;
    H += lift_coeffs(dH) * m;
    m = next;
  }
  auto l = hensel_lift(G, left, p, k);
  auto r = hensel_lift(H, right, p, k);
  l.insert(l.end(), r.begin(), r.end());
  return l;
}

IntPolynomial symmetric(const IntPolynomial& a, const BigInt& m) {
  const BigInt half = m / 2;
  std::vector<BigInt> v(a.coeffs());
  for (auto& c : v) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  return IntPolynomial(std::move(v));
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t r = idx.size();
  for (std::size_t i = r; i-- > 0;) {
    if (idx[i] < n - r + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

constexpr Coef kPrimes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67,
                            71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149};

}  // namespace

std::vector<IntPolynomial> factor_square_free(const IntPolynomial& input) {
  IntPolynomial f = primitive_part(input);
  if (f.degree() < 1) throw std::invalid_argument("factor_square_free: degree < 1");
  if (f.degree() == 1) return {f};

  // Pick the admissible prime (square-free image, lc invertible) with the fewest factors.
  Coef best_p = 0;
  std::vector<ModPoly> best;
  int tried = 0;
  for (Coef p : kPrimes) {
    if (mpz_fdiv_ui(f.leading().get_mpz_t(), p) == 0) continue;
    ModPoly fp = monic(reduce(f, p), p);
    ModPoly dfp;
    for (std::size_t i = 1; i < fp.size(); ++i) dfp.push_back(fp[i] * static_cast<Coef>(i) % p);
    trim(dfp);
    if (dfp.empty() || deg(gcd(fp, dfp, p)) != 0) continue;
    auto fs = factor_mod_p(fp, p);
    if (best_p == 0 || fs.size() < best.size()) {
      best_p = p;
      best = std::move(fs);
    }
    if (best.size() == 1 || ++tried == 5) break;
  }
  if (best_p == 0) throw std::runtime_error("factor_square_free: no admissible prime (input not square-free?)");
  if (best.size() == 1) return {f};

  // Mignotte: every factor has coefficients bounded by 2^n * ||f||_2.
  BigInt norm2 = 0;
  for (const auto& c : f.coeffs()) norm2 += c * c;
  BigInt norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  norm += 1;
  BigInt bound = norm << static_cast<unsigned long>(f.degree());
  bound *= 2 * abs(f.leading());
  const BigInt P(static_cast<long>(best_p));
  BigInt M = P;
  unsigned k = 1;
  while (M <= bound) {
    M *= P;
    ++k;
  }

  // Monic image of f modulo p^k.
  BigInt lc_inv;
  mpz_invert(lc_inv.get_mpz_t(), f.leading().get_mpz_t(), M.get_mpz_t());
  IntPolynomial F = reduce_mod(f * lc_inv, M);
  std::vector<IntPolynomial> lifted = hensel_lift(F, best, best_p, k);

  std::vector<IntPolynomial> result;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    do {
      IntPolynomial cand = IntPolynomial::constant(f.leading());
      for (auto i : idx) cand = reduce_mod(cand * lifted[i], M);
      cand = primitive_part(symmetric(cand, M));
      if (auto q = exact_quotient(f, cand)) {
        result.push_back(cand);
        f = primitive_part(*q);
        std::vector<IntPolynomial> rest;
        for (std::size_t i = 0, j = 0; i < lifted.size(); ++i) {
          if (j < idx.size() && idx[j] == i) {
            ++j;
            continue;
          }
          rest.push_back(lifted[i]);
        }
        lifted = std::move(rest);
        found = true;
        break;
      }
    } while (next_combination(idx, lifted.size()));
    if (!found) ++s;
  }
  if (f.degree() >= 1) result.push_back(f);
  std::sort(result.begin(), result.end(), [](const IntPolynomial& a, const IntPolynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.coeffs() < b.coeffs();
  });
  return result;
}

}  // namespace betabranch::algebraic
