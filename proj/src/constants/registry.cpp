#include "betabranch/constants/registry.hpp"

#include <charconv>

#include "betabranch/algebraic/parse.hpp"
#include "betabranch/error.hpp"

namespace betabranch::constants {

namespace {

using algebraic::Rational;

/// The root in (1, 2) whose 5-digit rounding is `approx`, or the only root there when approx is empty.
NamedBase make(std::string name, std::string relation, std::string approx) {
  IntPolynomial p = algebraic::parse_polynomial(relation);
  const auto roots = algebraic::isolate_real_roots(p, Rational(1), Rational(2));
  for (const auto& r : roots) {
    const std::string d = algebraic::to_decimal(r, 5);
    if (approx.empty() ? roots.size() == 1 : d == approx)
      return {std::move(name), std::move(relation), std::move(p), approx.empty() ? d : approx, r};
  }
  throw std::logic_error("no root of " + relation + " in (1, 2) matches " + (approx.empty() ? "uniquely" : approx));
}

}  // namespace

const std::vector<NamedBase>& registry() {
  static const std::vector<NamedBase> r = [] {
    std::vector<NamedBase> v;
    v.push_back(make("golden", "x^2=x+1", "1.61803"));
    v.push_back(make("q_2", "x^4=2x^2+x+1", "1.71064"));
    v.push_back(make("q_f", "x^3=2x^2-x+1", "1.75488"));
    v.push_back(make("q_aleph0", "x^6=x^4+x^3+2x^2+x+1", "1.64541"));
    v.push_back(make("r1", "x^6=x^5+2x^4-x^3-x^2+1", "1.69765"));
    v.push_back(make("r2", "x^5=x^4+x^3+x-1", "1.68042"));
    v.push_back(make("r3", "x^5=2x^3+x^2+1", "1.67602"));
    v.push_back(make("r4", "x^6=2x^4+x^3+1", "1.65462"));
    v.push_back(make("r5", "x^5=x^3+x^2+2x+2", "1.66184"));
    return v;
  }();
  return r;
}

NamedBase alpha(unsigned k) {
  if (k < 3) throw Error(ErrorKind::InvalidArgument, "alpha_k is defined for k >= 3");
  auto pw = [](unsigned e) { return e == 1 ? std::string("x") : "x^" + std::to_string(e); };
  const std::string relation = pw(k + 4) + "=" + pw(k + 3) + "+" + pw(k + 2) + "+" + pw(k) + "-x^2-1";
  return make("alpha_" + std::to_string(k), relation, "");
}

NamedBase lookup(std::string_view name) {
  for (const auto& b : registry())
    if (b.name == name) return b;
  for (std::string_view prefix : {"alpha_", "alpha"}) {
    if (name.substr(0, prefix.size()) != prefix) continue;
    std::string_view digits = name.substr(prefix.size());
    unsigned k = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty()) return alpha(k);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown base name '" + std::string(name) + "'");
}

const std::vector<NamedBase>& sample_bases() {
  static const std::vector<NamedBase> s = [] {
    std::vector<NamedBase> v;
    v.push_back(make("s1", "20x^2-20x-21", ""));
    v.push_back(make("s2", "3x^2-8", ""));
    v.push_back(make("s3", "10x^2-27", ""));
    v.push_back(make("s4", "100x^2-100x-101", ""));
    v.push_back(make("s5", "8x^2-21", ""));
    return v;
  }();
  return s;
}

}  // namespace betabranch::constants
