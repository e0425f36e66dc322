#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "betabranch/algebraic/parse.hpp"
#include "betabranch/constants/registry.hpp"
#include "betabranch/error.hpp"
#include "betabranch/expansions/dynamics.hpp"
#include "random_field.hpp"

using namespace betabranch;
using namespace betabranch::expansions;
using algebraic::FieldElement;
using algebraic::Rational;
using algebraic::RealAlgebraic;

namespace {

Base named(const char* name) { return Base(constants::lookup(name).value); }

Word random_word(std::mt19937_64& rng, std::size_t min_len, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::bernoulli_distribution bit(0.5);
  Word w(len(rng));
  for (auto& d : w) d = bit(rng) ? 1 : 0;
  return w;
}

/// Uniform point of S_q of the form 1/q + t (1/(q(q-1)) - 1/q) with rational t in [0, 1].
FieldElement switch_point(const Base& base, const Rational& t) {
  return base.switch_lo() + (base.switch_hi() - base.switch_lo()) * t;
}

}  // namespace

TEST_CASE("eventually periodic words are canonical") {
  CHECK(to_string(EventuallyPeriodicWord({1, 0, 1, 0}, {1, 0})) == "|10");
  CHECK(to_string(EventuallyPeriodicWord({}, {1, 0, 1, 0})) == "|10");
  CHECK(to_string(EventuallyPeriodicWord({0}, {1, 1})) == "0|1");
  CHECK(to_string(EventuallyPeriodicWord({1, 1, 0}, {0, 1})) == "110|01");
  CHECK(EventuallyPeriodicWord({1}, {0, 1}) == EventuallyPeriodicWord({}, {1, 0}));
  CHECK(EventuallyPeriodicWord::parse("0111|10") == EventuallyPeriodicWord({0, 1, 1, 1}, {1, 0}));
  const auto w = EventuallyPeriodicWord::parse("011|10");
  CHECK(w.at(0) == 0);
  CHECK(w.at(3) == 1);
  CHECK(w.at(4) == 0);
  CHECK(to_string(w.prefix(7)) == "0111010");
  CHECK(to_string(power(parse_word("10"), 3)) == "101010");
}

TEST_CASE("word parsing rejects malformed input") {
  CHECK_THROWS_AS(EventuallyPeriodicWord::parse("0101"), ParseError);
  CHECK_THROWS_AS(EventuallyPeriodicWord::parse("01|"), ParseError);
  CHECK_THROWS_AS(EventuallyPeriodicWord::parse("02|1"), ParseError);
  CHECK_THROWS_AS(EventuallyPeriodicWord({0}, {}), Error);
  CHECK_THROWS_AS(EventuallyPeriodicWord({}, {2}), Error);
}

TEST_CASE("bases must lie strictly between 1 and 2") {
  CHECK_THROWS_AS(Base(RealAlgebraic::from_rational(Rational(2))), Error);
  CHECK_THROWS_AS(Base(RealAlgebraic::from_rational(Rational(1))), Error);
  const Base b(RealAlgebraic::from_rational(Rational(3, 2)));
  CHECK(b.switch_lo() == b.element(Rational(2, 3)));
  CHECK(b.switch_hi() == b.element(Rational(4, 3)));
  CHECK(b.upper() == b.element(Rational(2)));
  CHECK_FALSE(b.above_golden());
  CHECK(named("q_aleph0").in_golden_to_qf());
  CHECK(named("q_f").in_golden_to_qf());
  CHECK_FALSE(named("q_f").below_qf());
  CHECK_FALSE(named("golden").above_golden());
}

TEST_CASE("greedy and lazy expansions at the golden ratio") {
  const Base g = named("golden");
  CHECK(to_string(greedy_lazy(g, g.element(1), 5, ExpansionMode::Greedy)) == "11000");
  CHECK(to_string(greedy_lazy(g, g.element(1), 5, ExpansionMode::Lazy)) == "01111");
  CHECK_THROWS_AS(greedy_lazy(g, g.element(-1), 5, ExpansionMode::Greedy), Error);
  // Every finite greedy prefix undershoots by at most the tail bound q^-n/(q-1).
  const FieldElement x = g.element(Rational(1, 2));
  const Word w = greedy_lazy(g, x, 12, ExpansionMode::Greedy);
  const FieldElement rest = x - eval_finite(g, w);
  CHECK(rest.sign() >= 0);
  FieldElement qn = g.element(1);
  for (int i = 0; i < 12; ++i) qn = qn * g.q();
  CHECK(compare(rest * qn, g.upper()) <= 0);
}

TEST_CASE("word values") {
  const Base g = named("golden");
  CHECK(eval_word(g, EventuallyPeriodicWord::parse("|0")) == g.element(0));
  CHECK(eval_word(g, EventuallyPeriodicWord::parse("|1")) == g.upper());
  CHECK(eval_word(g, EventuallyPeriodicWord::parse("|10")) == g.element(1));
  CHECK(eval_finite(g, parse_word("11")) == g.element(1));
}

TEST_CASE("shift identity for random words (property)") {
  std::mt19937_64 rng(7);
  for (const char* name : {"golden", "q_aleph0", "q_2", "q_f"}) {
    const Base b = named(name);
    for (int trial = 0; trial < 40; ++trial) {
      const Word pre = random_word(rng, 0, 6);
      const Word per = random_word(rng, 1, 5);
      const EventuallyPeriodicWord w(pre, per);
      const FieldElement v = eval_word(b, w);
      CHECK(in_interval(b, v));
      // (d w)_q = (d + (w)_q) / q, so T_{w_0} undoes the leading digit.
      Word full = pre;
      full.insert(full.end(), per.begin(), per.end());
      const EventuallyPeriodicWord shifted(Word(full.begin() + 1, full.end()), per);
      CHECK(t_map(b, full.front(), v) == eval_word(b, shifted));
      CHECK(apply_word(b, pre, v) == eval_word(b, EventuallyPeriodicWord({}, per)));
    }
  }
}

TEST_CASE("regions of the switch dynamics") {
  const Base b = named("q_aleph0");
  CHECK(region(b, b.element(0)) == Region::BelowSwitch);
  CHECK(region(b, b.switch_lo()) == Region::Switch);
  CHECK(region(b, b.switch_hi()) == Region::Switch);
  CHECK(region(b, b.upper()) == Region::AboveSwitch);
  CHECK(region(b, b.element(-1)) == Region::OutOfRange);
  CHECK(region(b, b.upper() + Rational(1, 1000)) == Region::OutOfRange);
}

TEST_CASE("forced orbits and uniqueness") {
  const Base g = named("golden");
  const auto orbit = follow_forced(g, g.element(0), 10);
  REQUIRE(std::holds_alternative<Cycle>(orbit));
  CHECK(to_string(std::get<Cycle>(orbit).cycle) == "0");
  CHECK(is_unique(g, g.element(0), 10).kind == Uniqueness::Kind::Unique);
  CHECK(is_unique(g, g.upper(), 10).kind == Uniqueness::Kind::Unique);
  CHECK(is_unique(g, g.element(Rational(1, 2)), 10).kind == Uniqueness::Kind::NotUnique);
  const auto hit = follow_forced(g, g.element(Rational(1, 10)), 50);
  REQUIRE(std::holds_alternative<HitSwitch>(hit));
  CHECK(region(g, std::get<HitSwitch>(hit).point) == Region::Switch);
}

TEST_CASE("unique-expansion family is sorted and unique") {
  const Base b = named("q_aleph0");
  const auto family = u_family(b, 3);
  CHECK(family.size() == 10);
  for (std::size_t i = 0; i + 1 < family.size(); ++i) CHECK(family[i].value < family[i + 1].value);
  for (const auto& e : family) {
    CHECK(eval_word(b, e.word) == e.value);
    CHECK(is_unique(b, e.value, 200).kind == Uniqueness::Kind::Unique);
  }
  CHECK(u_family(b, 0).size() == 4);
  CHECK_THROWS_AS(u_family(Base(RealAlgebraic::from_rational(Rational(3, 2))), 2), Error);
}

TEST_CASE("J_q lies inside the switch region") {
  for (const char* name : {"q_aleph0", "q_2", "q_f", "r1", "r2", "r3", "r4", "r5"}) {
    const Base b = named(name);
    const auto [lo, hi] = j_interval(b);
    const FieldElement q4m1 = b.q() * b.q() * b.q() * b.q() - Rational(1);
    CHECK(lo == (b.q() + b.q() * b.q()) / q4m1);
    CHECK(hi == (b.q() * b.q() * b.q() + Rational(1)) / q4m1);
    CHECK(region(b, lo) == Region::Switch);
    CHECK(region(b, hi) == Region::Switch);
  }
}

TEST_CASE("period-four and scaling identities at every registry base (property)") {
  std::mt19937_64 rng(99);
  for (const auto& nb : constants::registry()) {
    const Base b(nb.value);
    const auto [lo, hi] = j_interval(b);
    CHECK(t_map(b, 1, t_map(b, 0, lo)) == hi);
    CHECK(t_map(b, 0, t_map(b, 1, hi)) == lo);
    const FieldElement q2 = b.q() * b.q();
    const FieldElement a = (q2 - Rational(1)).inverse();
    const FieldElement c = b.q() * a;
    for (int i = 0; i < 50; ++i) {
      const FieldElement y = testing::random_element(b.field(), rng);
      CHECK(t_map(b, 1, t_map(b, 0, y)) - a == q2 * (y - a));
      CHECK(c - t_map(b, 0, t_map(b, 1, y)) == q2 * (c - y));
    }
  }
}

TEST_CASE("map_into_J lands in J_q with alternating digit pairs") {
  for (const char* name : {"q_aleph0", "q_f", "r4"}) {
    const Base b = named(name);
    const auto [lo, hi] = j_interval(b);
    for (int i = 0; i <= 40; ++i) {
      const FieldElement x = switch_point(b, Rational(i, 40));
      const auto [word, y] = map_into_J(b, x);
      CHECK(word.size() % 2 == 0);
      for (std::size_t k = 0; k + 1 < word.size(); k += 2) CHECK(word[k] != word[k + 1]);
      CHECK(apply_word(b, word, x) == y);
      CHECK(lo <= y);
      CHECK(y <= hi);
    }
  }
  const Base b = named("q_aleph0");
  CHECK_THROWS_AS(map_into_J(b, b.element(Rational(1, 10))), Error);
  const Base low(RealAlgebraic::from_rational(Rational(3, 2)));
  CHECK_THROWS_AS(map_into_J(low, low.switch_lo()), Error);
}
