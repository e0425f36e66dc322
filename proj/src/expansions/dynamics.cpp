#include "betabranch/expansions/dynamics.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "betabranch/error.hpp"

namespace betabranch::expansions {

std::string_view to_string(Region r) {
  switch (r) {
    case Region::BelowSwitch: return "BelowSwitch";
    case Region::Switch: return "Switch";
    case Region::AboveSwitch: return "AboveSwitch";
    case Region::OutOfRange: return "OutOfRange";
  }
  return "?";
}

std::string_view to_string(Uniqueness::Kind k) {
  switch (k) {
    case Uniqueness::Kind::Unique: return "Unique";
    case Uniqueness::Kind::NotUnique: return "NotUnique";
    case Uniqueness::Kind::Unknown: return "Unknown";
  }
  return "?";
}

FieldElement t_map(const Base& base, Digit d, const FieldElement& x) {
  FieldElement y = base.q() * x;
  return d == 0 ? y : y - Rational(1);
}

FieldElement apply_word(const Base& base, const Word& w, const FieldElement& x) {
  FieldElement y = x;
  for (Digit d : w) y = t_map(base, d, y);
  return y;
}

Region region(const Base& base, const FieldElement& x) {
  if (x.sign() < 0 || compare(x, base.upper()) > 0) return Region::OutOfRange;
  if (compare(x, base.switch_lo()) < 0) return Region::BelowSwitch;
  if (compare(x, base.switch_hi()) > 0) return Region::AboveSwitch;
  return Region::Switch;
}

bool in_interval(const Base& base, const FieldElement& x) { return x.sign() >= 0 && compare(x, base.upper()) <= 0; }

namespace {

void require_in_interval(const Base& base, const FieldElement& x) {
  if (!in_interval(base, x))
    throw Error(ErrorKind::OutOfRange, "point " + algebraic::to_decimal(x, 6) + " is outside [0, 1/(q-1)]");
}

/// sum_{i=1}^{n} w_i q^{n-i}, the integer-polynomial numerator of a finite word.
FieldElement horner(const Base& base, const Word& w) {
  FieldElement acc = base.field().zero();
  for (Digit d : w) {
    acc = acc * base.q();
    if (d) acc = acc + Rational(1);
  }
  return acc;
}

FieldElement q_power(const Base& base, std::size_t n) {
  FieldElement p = base.field().one();
  for (std::size_t i = 0; i < n; ++i) p = p * base.q();
  return p;
}

}  // namespace

FieldElement eval_finite(const Base& base, const Word& w) { return horner(base, w) / q_power(base, w.size()); }

FieldElement eval_word(const Base& base, const EventuallyPeriodicWord& w) {
  const Word& pre = w.preperiod();
  const Word& per = w.period();
  // q^-m (sum pre_i q^{m-i} + S_per / (q^p - 1)) with S_per = sum per_j q^{p-j}.
  FieldElement tail = horner(base, per) / (q_power(base, per.size()) - Rational(1));
  return (horner(base, pre) + tail) / q_power(base, pre.size());
}

Word greedy_lazy(const Base& base, const FieldElement& x, std::size_t n, ExpansionMode mode) {
  require_in_interval(base, x);
  Word out;
  out.reserve(n);
  FieldElement y = x;
  for (std::size_t i = 0; i < n; ++i) {
    Digit d;
    if (mode == ExpansionMode::Greedy)
      d = compare(y, base.switch_lo()) >= 0 ? 1 : 0;
    else
      d = compare(y, base.switch_hi()) <= 0 ? 0 : 1;
    out.push_back(d);
    y = t_map(base, d, y);
  }
  return out;
}

ForcedOrbit follow_forced(const Base& base, const FieldElement& x, std::size_t max_steps) {
  require_in_interval(base, x);
  std::map<FieldElement, std::size_t, algebraic::RepLess> seen;
  Word prefix;
  FieldElement y = x;
  while (true) {
    const Region r = region(base, y);
    if (r == Region::Switch) return HitSwitch{prefix, y};
    auto [it, fresh] = seen.emplace(y, prefix.size());
    if (!fresh) {
      const std::size_t start = it->second;
      Word cycle(prefix.begin() + static_cast<std::ptrdiff_t>(start), prefix.end());
      prefix.resize(start);
      return Cycle{prefix, cycle.size(), cycle};
    }
    if (prefix.size() >= max_steps) return Truncated{prefix};
    const Digit d = r == Region::BelowSwitch ? 0 : 1;
    prefix.push_back(d);
    y = t_map(base, d, y);
  }
}

Uniqueness is_unique(const Base& base, const FieldElement& x, std::size_t max_steps) {
  ForcedOrbit f = follow_forced(base, x, max_steps);
  if (std::holds_alternative<Cycle>(f)) return {Uniqueness::Kind::Unique, {}};
  if (auto* h = std::get_if<HitSwitch>(&f)) return {Uniqueness::Kind::NotUnique, h->prefix};
  return {Uniqueness::Kind::Unknown, {}};
}

std::vector<UniqueEntry> u_family(const Base& base, std::size_t k_max) {
  if (!base.in_golden_to_qf())
    throw Error(ErrorKind::BaseOutOfRange,
                "the unique-expansion family is only described for (1+sqrt5)/2 < q <= q_f, got q = " + base.approx(6));
  std::vector<UniqueEntry> out;
  auto add = [&](Word pre, Word per) {
    EventuallyPeriodicWord w(std::move(pre), std::move(per));
    out.push_back({w, eval_word(base, w)});
  };
  add({}, {0});
  add({}, {1});
  for (std::size_t k = 0; k <= k_max; ++k) {
    add(Word(k, 1), {1, 0});
    add(Word(k, 0), {0, 1});
  }
  std::sort(out.begin(), out.end(), [](const UniqueEntry& a, const UniqueEntry& b) { return a.value < b.value; });
  return out;
}

std::pair<FieldElement, FieldElement> j_interval(const Base& base) {
  const FieldElement& q = base.q();
  const FieldElement q2 = q * q;
  const FieldElement denom = (q2 * q2 - Rational(1)).inverse();
  FieldElement lo = (q + q2) * denom;
  FieldElement hi = (q2 * q + Rational(1)) * denom;
  if (base.in_golden_to_qf() && (lo < base.switch_lo() || hi > base.switch_hi()))
    throw std::logic_error("J_q is not contained in S_q");
  return {lo, hi};
}

std::pair<Word, FieldElement> map_into_J(const Base& base, const FieldElement& x) {
  if (!base.in_golden_to_qf())
    throw Error(ErrorKind::BaseOutOfRange, "map_into_J needs (1+sqrt5)/2 < q <= q_f, got q = " + base.approx(6));
  if (region(base, x) != Region::Switch)
    throw Error(ErrorKind::NotInSwitch, "point " + algebraic::to_decimal(x, 6) + " is not in the switch region");
  const auto [lo, hi] = j_interval(base);
  Word w;
  FieldElement y = x;
  while (true) {
    if (y < lo) {
      w.insert(w.end(), {0, 1});
      y = t_map(base, 1, t_map(base, 0, y));
    } else if (y > hi) {
      w.insert(w.end(), {1, 0});
      y = t_map(base, 0, t_map(base, 1, y));
    } else {
      return {w, y};
    }
  }
}

}  // namespace betabranch::expansions
