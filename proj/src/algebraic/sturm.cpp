#include "betabranch/algebraic/sturm.hpp"

#include <stdexcept>

namespace betabranch::algebraic {

SturmSequence::SturmSequence(const IntPolynomial& square_free) {
  if (square_free.is_zero()) throw std::invalid_argument("Sturm sequence of the zero polynomial");
  chain_.push_back(square_free);
  if (square_free.degree() == 0) return;
  chain_.push_back(primitive_part(square_free.derivative()) * BigInt(sgn(square_free.leading())));
  RatPolynomial prev = to_rational(chain_[0]);
  RatPolynomial cur = to_rational(chain_[1]);
  while (cur.degree() > 0) {
    RatPolynomial rem = -divmod(prev, cur).second;
    if (rem.is_zero()) break;
    // Positive rescaling keeps the sign pattern: primitive_part may flip the sign, undo it.
    IntPolynomial scaled = primitive_part(rem);
    if ((scaled.leading() > 0) != (rem.leading() > 0)) scaled = -scaled;
    chain_.push_back(scaled);
    prev = std::move(cur);
    cur = to_rational(chain_.back());
  }
}

int SturmSequence::variations(const Rational& r) const {
  int count = 0;
  int last = 0;
  for (const auto& p : chain_) {
    int s = sign_at(p, r);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int SturmSequence::count_half_open(const Rational& a, const Rational& b) const {
  if (!(a < b)) return 0;
  return variations(a) - variations(b);
}

int SturmSequence::count_closed(const Rational& a, const Rational& b) const {
  if (a > b) return 0;
  int at_a = sign_at(chain_.front(), a) == 0 ? 1 : 0;
  if (a == b) return at_a;
  return at_a + count_half_open(a, b);
}

}  // namespace betabranch::algebraic
