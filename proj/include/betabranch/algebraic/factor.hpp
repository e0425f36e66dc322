#pragma once

#include <vector>

#include "betabranch/algebraic/polynomial.hpp"

namespace betabranch::algebraic {

/// Irreducible factors over Z of a square-free polynomial of degree >= 1, each
/// primitive with positive leading coefficient. Their product equals
/// primitive_part(p). Zassenhaus: factor modulo a small prime, Hensel-lift
/// past the Mignotte bound, recombine.
std::vector<IntPolynomial> factor_square_free(const IntPolynomial& p);

}  // namespace betabranch::algebraic
