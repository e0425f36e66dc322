#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <set>

#include "betabranch/branching/classify.hpp"
#include "betabranch/branching/membership.hpp"
#include "betabranch/branching/serialize.hpp"
#include "betabranch/branching/state_graph.hpp"
#include "betabranch/branching/tree.hpp"
#include "betabranch/constants/registry.hpp"
#include "betabranch/error.hpp"
#include "betabranch/expansions/dynamics.hpp"

using namespace betabranch;
using namespace betabranch::branching;
using algebraic::FieldElement;
using algebraic::Rational;
using algebraic::RealAlgebraic;
using expansions::Base;
using expansions::EventuallyPeriodicWord;
using expansions::Region;
using expansions::Word;

namespace {

Base named(const char* name) { return Base(constants::lookup(name).value); }

Cardinality classify_adjacency(const std::vector<std::vector<std::size_t>>& adj) {
  return PathClassifier(adj).classify(0);
}

/// All words of length n whose every prefix keeps the orbit inside I_q, by exhaustive search.
std::set<Word> brute_force_prefixes(const Base& b, const FieldElement& x, std::size_t n) {
  std::set<Word> out;
  for (std::size_t bits = 0; bits < (std::size_t{1} << n); ++bits) {
    Word w;
    FieldElement y = x;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      const expansions::Digit d = (bits >> (n - 1 - i)) & 1;
      w.push_back(d);
      y = expansions::t_map(b, d, y);
      ok = expansions::in_interval(b, y);
    }
    if (ok) out.insert(w);
  }
  return out;
}

}  // namespace

TEST_CASE("state graphs at the golden ratio") {
  const Base g = named("golden");
  const StateGraph one = build_state_graph(g, g.element(1), 100);
  CHECK(one.complete);
  CHECK(one.states.size() == 4);
  CHECK(classify_paths(one) == Cardinality::countably_infinite());
  CHECK(classify_expansions(g, g.element(Rational(1, 2)), 100) == Cardinality::uncountable());
  CHECK(classify_expansions(g, g.element(0), 100) == Cardinality::finite(1));
  CHECK_THROWS_AS(build_state_graph(g, g.element(-1), 100), Error);
  CHECK_THROWS_AS(build_state_graph(g, g.element(1), 0), Error);
}

TEST_CASE("edges follow the maps and branch exactly in the switch region") {
  for (const char* name : {"golden", "q_aleph0", "q_f", "alpha_4"}) {
    const Base b = named(name);
    const auto [lo, hi] = expansions::j_interval(b);
    for (const FieldElement& x : {lo, hi, b.element(1), b.switch_lo()}) {
      const StateGraph g = build_state_graph(b, x, 5000);
      if (!g.complete) continue;
      for (std::size_t s = 0; s < g.states.size(); ++s) {
        CHECK((g.edges[s].size() == 2) == (g.regions[s] == Region::Switch));
        CHECK(g.regions[s] == expansions::region(b, g.states[s]));
        for (const Edge& e : g.edges[s]) CHECK(g.states[e.target] == expansions::t_map(b, e.digit, g.states[s]));
      }
    }
  }
}

TEST_CASE("path classifier on hand-built graphs") {
  CHECK(classify_adjacency({{0}}) == Cardinality::finite(1));
  CHECK(classify_adjacency({{}}) == Cardinality::finite(0));
  CHECK(classify_adjacency({{0, 1}, {1}}) == Cardinality::countably_infinite());
  CHECK(classify_adjacency({{0, 0}}) == Cardinality::uncountable());
  CHECK(classify_adjacency({{1, 2}, {1}, {2}}) == Cardinality::finite(2));
  CHECK(classify_adjacency({{1, 1}, {1}}) == Cardinality::finite(2));
  CHECK(classify_adjacency({{1}, {0, 2}, {2}}) == Cardinality::countably_infinite());
  CHECK(classify_adjacency({{1}, {0, 2}, {2, 2}}) == Cardinality::uncountable());
  CHECK(classify_adjacency({{1, 2}, {3, 3}, {3}, {3}}) == Cardinality::finite(3));
  // A cycle whose only exit leads to a dead end is not productive.
  CHECK(classify_adjacency({{1}, {0, 2}, {}}) == Cardinality::finite(1));
}

TEST_CASE("incomplete graphs classify as Unknown") {
  const Base b(RealAlgebraic::from_rational(Rational(3, 2)));
  const StateGraph g = build_state_graph(b, b.element(1), 200);
  CHECK_FALSE(g.complete);
  CHECK(g.states.size() == 200);
  CHECK(classify_paths(g).kind == Cardinality::Kind::Unknown);
  const Cardinality c = classify_expansions(b, b.element(1), 200);
  CHECK(c.kind == Cardinality::Kind::Unknown);
  CHECK(c.reason.find("state limit 200") != std::string::npos);
  CHECK(is_null_infinite(g) == Verdict::Unknown);
}

TEST_CASE("null infinite points at q_aleph0") {
  const Base b = named("q_aleph0");
  const auto [lo, hi] = expansions::j_interval(b);
  CHECK(is_null_infinite(b, lo, 1000) == Verdict::Yes);
  CHECK(is_null_infinite(b, hi, 1000) == Verdict::Yes);
  const Base g = named("golden");
  CHECK(is_null_infinite(g, g.element(Rational(1, 2)), 1000) == Verdict::No);
  CHECK(is_null_infinite(g, g.element(0), 1000) == Verdict::No);
}

TEST_CASE("admissible prefixes agree with exhaustive search") {
  for (const char* name : {"golden", "q_aleph0", "q_2"}) {
    const Base b = named(name);
    const auto [lo, hi] = expansions::j_interval(b);
    for (const FieldElement& x : {lo, hi, b.element(1), b.element(Rational(1, 3))}) {
      const auto got = enumerate_prefixes(b, x, 11);
      CHECK(std::is_sorted(got.begin(), got.end()));
      CHECK(std::set<Word>(got.begin(), got.end()) == brute_force_prefixes(b, x, 11));
    }
  }
  const Base b = named("q_aleph0");
  CHECK(enumerate_prefixes(b, expansions::j_interval(b).first, 30).size() == 16);
  CHECK_THROWS_AS(enumerate_prefixes(named("golden"), named("golden").element(Rational(1, 2)), 40, 100), Error);
}

TEST_CASE("branching tree export") {
  const Base g = named("golden");
  const TreeExport t = export_tree(g, g.element(Rational(1, 2)), TreeMode::Continuum, 5, 1000);
  CHECK(t.leaf_count() == 32);
  CHECK(t.nodes.front().level == 0);
  const TreeExport full = export_tree(g, g.element(Rational(1, 2)), TreeMode::Full, 3, 1000);
  CHECK(full.leaf_count() == 8);

  const Base b = named("q_aleph0");
  const TreeExport inf = export_tree(b, expansions::j_interval(b).second, TreeMode::Infinite, 4, 1000);
  CHECK(inf.classification == Cardinality::countably_infinite());
  for (const TreeNode& n : inf.nodes)
    if (n.end != TreeNode::End::Pruned) CHECK(n.cardinality.is_infinite());

  CHECK(parse_tree_mode("continuum") == TreeMode::Continuum);
  CHECK_THROWS_AS(parse_tree_mode("sideways"), Error);
  const Base low(RealAlgebraic::from_rational(Rational(3, 2)));
  CHECK_THROWS_AS(export_tree(low, low.element(1), TreeMode::Infinite, 3, 50), Error);
  CHECK_NOTHROW(export_tree(low, low.element(1), TreeMode::Full, 3, 50));
}

TEST_CASE("serialization") {
  for (const Cardinality& c : {Cardinality::finite(0), Cardinality::finite(BigInt("123456789012345678901234567890")),
                               Cardinality::countably_infinite(), Cardinality::uncountable(),
                               Cardinality::unknown("incomplete graph")})
    CHECK(cardinality_from_json(to_json(c)) == c);
  CHECK_THROWS_AS(cardinality_from_json(nlohmann::json{{"kind", "Several"}}), Error);
  CHECK(to_string(Cardinality::finite(3)) == "Finite(3)");

  const Base g = named("golden");
  const StateGraph one = build_state_graph(g, g.element(1), 100);
  const auto j = to_json(one);
  CHECK(j["states"].size() == 4);
  CHECK(j["classification"]["kind"] == "CountablyInfinite");
  CHECK(to_dot(one).find("digraph") == 0);
  const auto t = export_tree(g, g.element(Rational(1, 2)), TreeMode::Continuum, 2, 100);
  CHECK(to_json(t)["leaves"] == 4);
  CHECK(to_dot(t).find("->") != std::string::npos);
}

TEST_CASE("P_q and U_{k,q}") {
  const Base b = named("q_aleph0");
  std::set<std::string> words;
  for (const auto& e : p_q_set(b)) {
    words.insert(expansions::to_string(e.word));
    CHECK(expansions::eval_word(b, e.word) == e.value);
  }
  CHECK(words == std::set<std::string>{"1000|01", "01|10", "100|01", "011|10", "10|01", "0111|10"});
  CHECK(u_k_set(b, 3).size() == 6);
  CHECK_THROWS_AS(p_q_set(named("golden")), Error);
  CHECK_THROWS_AS(p_q_set(b, 0), Error);
}

TEST_CASE("membership for the alpha family") {
  for (const char* name : {"alpha_4", "alpha_5"}) {
    const Base b = named(name);
    const Membership m = b_aleph0_membership(b, 5000);
    CHECK(m.kind == Membership::Kind::In);
    REQUIRE(m.witness.has_value());
    CHECK(is_null_infinite(b, m.witness->value, 5000) == Verdict::Yes);
  }
  CHECK_THROWS_AS(b_aleph0_membership(named("q_2"), 1000), Error);
  CHECK_THROWS_AS(b_aleph0_membership(named("golden"), 1000), Error);
  CHECK_THROWS_AS(b_aleph0_membership(named("q_f"), 1000), Error);
}

TEST_CASE("state limit from the environment") {
  ::setenv("BETA_BRANCH_MAX_STATES", "1234", 1);
  CHECK(default_max_states() == 1234);
  ::unsetenv("BETA_BRANCH_MAX_STATES");
  CHECK(default_max_states() == 20000);
}
