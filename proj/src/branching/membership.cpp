#include "betabranch/branching/membership.hpp"

#include <algorithm>

#include "betabranch/error.hpp"

namespace betabranch::branching {

using algebraic::Rational;
using expansions::EventuallyPeriodicWord;

std::string_view to_string(Membership::Kind k) {
  switch (k) {
    case Membership::Kind::In: return "In";
    case Membership::Kind::NotIn: return "NotIn";
    case Membership::Kind::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

void sort_by_value(std::vector<UniqueEntry>& v) {
  std::sort(v.begin(), v.end(), [](const UniqueEntry& a, const UniqueEntry& b) { return a.value < b.value; });
}

UniqueEntry entry(const Base& base, Word pre, Word per) {
  EventuallyPeriodicWord w(std::move(pre), std::move(per));
  return {w, expansions::eval_word(base, w)};
}

/// d followed by the digits of u.
UniqueEntry preimage(const Base& base, Digit d, const UniqueEntry& u) {
  Word pre{d};
  pre.insert(pre.end(), u.word.preperiod().begin(), u.word.preperiod().end());
  EventuallyPeriodicWord w(std::move(pre), u.word.period());
  FieldElement v = (u.value + Rational(d)) * base.switch_lo();
  return {w, v};
}

}  // namespace

std::vector<UniqueEntry> p_q_set(const Base& base, std::size_t max_index) {
  if (!base.above_golden() || !base.below_qf())
    throw Error(ErrorKind::BaseOutOfRange, "P_q is computed for (1+sqrt5)/2 < q < q_f, got q = " + base.approx(6));
  const auto [lo, hi] = expansions::j_interval(base);
  std::vector<UniqueEntry> out;
  auto consider = [&](const UniqueEntry& u) {
    for (Digit d : {Digit{0}, Digit{1}}) {
      UniqueEntry p = preimage(base, d, u);
      if (p.value >= lo && p.value <= hi) out.push_back(std::move(p));
    }
  };
  consider(entry(base, {}, {0}));
  consider(entry(base, {}, {1}));

  // 1^k(10)^inf increases to 1/(q-1); once even its T_0-preimage is above J_q, so are all later ones.
  bool ones_done = false;
  // 0^k(01)^inf decreases to 0; once even its T_1-preimage is below J_q, so are all later ones.
  bool zeros_done = false;
  for (std::size_t k = 0; !(ones_done && zeros_done); ++k) {
    if (k > max_index)
      throw Error(ErrorKind::EnumerationBound,
                  "P_q certificate not reached within family index " + std::to_string(max_index));
    if (!ones_done) {
      UniqueEntry u = entry(base, Word(k, 1), {1, 0});
      if (u.value * base.switch_lo() > hi)
        ones_done = true;
      else
        consider(u);
    }
    if (!zeros_done) {
      UniqueEntry u = entry(base, Word(k, 0), {0, 1});
      if ((u.value + Rational(1)) * base.switch_lo() < lo)
        zeros_done = true;
      else
        consider(u);
    }
  }
  sort_by_value(out);
  out.erase(std::unique(out.begin(), out.end(), [](const UniqueEntry& a, const UniqueEntry& b) { return a.value == b.value; }),
            out.end());
  return out;
}

std::vector<UniqueEntry> u_k_set(const Base& base, std::size_t k) {
  std::vector<UniqueEntry> out;
  for (std::size_t j = 1; j <= k; ++j) {
    Word a{1};
    a.insert(a.end(), j, 0);
    out.push_back(entry(base, a, {0, 1}));
    Word b{0};
    b.insert(b.end(), j, 1);
    out.push_back(entry(base, b, {1, 0}));
  }
  sort_by_value(out);
  return out;
}

Membership b_aleph0_membership(const Base& base, std::size_t max_states) {
  const bool at_or_above_aleph0 = compare(base.value(), expansions::q_aleph0_value()) >= 0;
  if (!at_or_above_aleph0 || !base.below_qf())
    throw Error(ErrorKind::BaseOutOfRange,
                "membership is decided for q_aleph0 <= q < q_f, got q = " + base.approx(6));
  if (base.value() == expansions::q_2_value())
    throw Error(ErrorKind::BaseOutOfRange, "q = q_2 is excluded from the membership criterion");

  Membership m;
  bool any_unknown = false;
  for (const UniqueEntry& p : p_q_set(base)) {
    const StateGraph g = build_state_graph(base, p.value, max_states);
    const Verdict v = is_null_infinite(g);
    m.checks.push_back({p, v, g.states.size(), g.complete});
    if (v == Verdict::Yes) {
      m.kind = Membership::Kind::In;
      m.witness = p;
      return m;
    }
    if (v == Verdict::Unknown) any_unknown = true;
  }
  m.kind = any_unknown ? Membership::Kind::Unknown : Membership::Kind::NotIn;
  return m;
}

}  // namespace betabranch::branching
