#pragma once

#include <cstddef>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "betabranch/expansions/base.hpp"
#include "betabranch/expansions/word.hpp"

namespace betabranch::expansions {

/// Position of a point relative to I_q = [0, 1/(q-1)] and the closed switch
/// region S_q = [1/q, 1/(q(q-1))].
enum class Region { BelowSwitch, Switch, AboveSwitch, OutOfRange };

std::string_view to_string(Region r);

/// T_d(x) = q x - d.
FieldElement t_map(const Base& base, Digit d, const FieldElement& x);

/// Applies T_{w_1}, then T_{w_2}, and so on.
FieldElement apply_word(const Base& base, const Word& w, const FieldElement& x);

Region region(const Base& base, const FieldElement& x);

/// 0 <= x <= 1/(q-1).
bool in_interval(const Base& base, const FieldElement& x);

/// Exact value of sum_i w_i q^-i.
FieldElement eval_word(const Base& base, const EventuallyPeriodicWord& w);

/// Value of a finite word followed by zeros.
FieldElement eval_finite(const Base& base, const Word& w);

enum class ExpansionMode { Greedy, Lazy };

/// First n digits of the greedy (largest) or lazy (smallest) expansion of x.
/// Throws Error(OutOfRange) if x is not in I_q.
Word greedy_lazy(const Base& base, const FieldElement& x, std::size_t n, ExpansionMode mode);

struct HitSwitch {
  Word prefix;          // minimal word a with a(x) in S_q
  FieldElement point;   // a(x)
};
struct Cycle {
  Word prefix;               // transient part before the orbit enters its cycle
  std::size_t cycle_length;  // period of the forced orbit
  Word cycle;                // digits along one turn of the cycle
};
struct Truncated {
  Word prefix;
};
using ForcedOrbit = std::variant<HitSwitch, Cycle, Truncated>;

/// Follows the only admissible digit while the orbit stays outside S_q, until
/// it lands in S_q, repeats an exact state, or max_steps digits were emitted.
/// Throws Error(OutOfRange) if x is not in I_q.
ForcedOrbit follow_forced(const Base& base, const FieldElement& x, std::size_t max_steps);

struct Uniqueness {
  enum class Kind { Unique, NotUnique, Unknown };
  Kind kind;
  Word witness;  // for NotUnique: the forced word leading into S_q
};

std::string_view to_string(Uniqueness::Kind k);

Uniqueness is_unique(const Base& base, const FieldElement& x, std::size_t max_steps);

struct UniqueEntry {
  EventuallyPeriodicWord word;
  FieldElement value;
};

/// Points with a unique expansion for (1+sqrt5)/2 < q <= q_f, sorted by value:
/// 0, 1/(q-1), (1^k(10)^inf) and (0^k(01)^inf) for 0 <= k <= k_max.
/// Throws Error(BaseOutOfRange) outside that range.
std::vector<UniqueEntry> u_family(const Base& base, std::size_t k_max);

/// J_q = [(q+q^2)/(q^4-1), (1+q^3)/(q^4-1)].
std::pair<FieldElement, FieldElement> j_interval(const Base& base);

/// Iterates T_1 o T_0 (digits "01") below J_q and T_0 o T_1 (digits "10") above
/// it until the point lands in J_q. Returns the applied word and landing point.
/// Throws Error(BaseOutOfRange) unless (1+sqrt5)/2 < q <= q_f, Error(NotInSwitch) unless x in S_q.
std::pair<Word, FieldElement> map_into_J(const Base& base, const FieldElement& x);

}  // namespace betabranch::expansions
