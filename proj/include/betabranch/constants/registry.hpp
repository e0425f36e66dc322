#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "betabranch/algebraic/real_algebraic.hpp"

namespace betabranch::constants {

using algebraic::IntPolynomial;
using algebraic::RealAlgebraic;

/// A distinguished base: its defining relation as printed, the polynomial with
/// the relation moved to one side, a reference decimal and the exact root in (1, 2).
struct NamedBase {
  std::string name;
  std::string relation;
  IntPolynomial polynomial;
  std::string approx;
  RealAlgebraic value;
};

/// golden, q_2, q_f, q_aleph0 and the auxiliary roots r1..r5, in that order.
const std::vector<NamedBase>& registry();

/// alpha_k (k >= 3): the root in (1, 2) of x^{k+4} = x^{k+3} + x^{k+2} + x^k - x^2 - 1.
/// Throws Error(InvalidArgument) for k < 3.
NamedBase alpha(unsigned k);

/// A registry name, or "alpha_K" / "alphaK". Throws Error(InvalidArgument) if unknown.
NamedBase lookup(std::string_view name);

/// Quadratic bases strictly between (1+sqrt5)/2 and q_aleph0, used as sample points
/// of that interval: roots of 20x^2-20x-21, 3x^2-8, 10x^2-27, 100x^2-100x-101, 8x^2-21.
const std::vector<NamedBase>& sample_bases();

}  // namespace betabranch::constants
