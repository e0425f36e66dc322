#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "betabranch/branching/classify.hpp"

namespace betabranch::branching {

using expansions::UniqueEntry;

/// Points of J_q whose image under T_0 or T_1 has a unique expansion, for
/// (1+sqrt5)/2 < q < q_f, as words d.u with values, sorted by value. Family
/// indices are enumerated until a monotonicity certificate shows that no further
/// preimage can meet J_q. Throws Error(BaseOutOfRange) outside the range and
/// Error(EnumerationBound) if the certificate needs a family index above max_index.
std::vector<UniqueEntry> p_q_set(const Base& base, std::size_t max_index = 256);

/// {1 0^j (01)^inf, 0 1^j (10)^inf : 1 <= j <= k}, sorted by value.
std::vector<UniqueEntry> u_k_set(const Base& base, std::size_t k);

struct Membership {
  enum class Kind { In, NotIn, Unknown };
  Kind kind = Kind::Unknown;
  std::optional<UniqueEntry> witness;  // In: the first null infinite point of P_q
  struct Check {
    UniqueEntry point;
    Verdict verdict;
    std::size_t states;
    bool complete;
  };
  std::vector<Check> checks;  // one per examined point of P_q, in order
};

std::string_view to_string(Membership::Kind k);

/// Decides whether q has a point with exactly countably many expansions by
/// testing the points of P_q for the null infinite property, for q in
/// [q_aleph0, q_f) with q != q_2. Stops at the first Yes.
/// Throws Error(BaseOutOfRange) outside that set.
Membership b_aleph0_membership(const Base& base, std::size_t max_states);

}  // namespace betabranch::branching
