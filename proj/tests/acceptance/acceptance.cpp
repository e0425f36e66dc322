#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "betabranch/algebraic/parse.hpp"
#include "betabranch/algebraic/real_algebraic.hpp"
#include "betabranch/branching/classify.hpp"
#include "betabranch/branching/membership.hpp"
#include "betabranch/branching/state_graph.hpp"
#include "betabranch/branching/tree.hpp"
#include "betabranch/constants/registry.hpp"
#include "betabranch/constants/verify.hpp"
#include "betabranch/error.hpp"
#include "betabranch/expansions/dynamics.hpp"
#include "random_field.hpp"

using namespace betabranch;
using algebraic::FieldElement;
using algebraic::Rational;
using algebraic::RealAlgebraic;
using branching::Cardinality;
using branching::Verdict;
using constants::Outcome;
using expansions::Base;
using expansions::EventuallyPeriodicWord;
using expansions::Word;

namespace {

/// Collects failure messages for one criterion.
class Check {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++count_;
  }
  bool ok() const { return count_ == 0; }
  std::string summary() const {
    std::string s;
    for (const auto& f : failures_) s += (s.empty() ? "" : "; ") + f;
    if (count_ > failures_.size()) s += "; ... " + std::to_string(count_) + " failures in total";
    return s;
  }
  std::string detail;

 private:
  std::vector<std::string> failures_;
  std::size_t count_ = 0;
};

Base named(const std::string& name) { return Base(constants::lookup(name).value); }

FieldElement word_value(const Base& b, const char* word) {
  return expansions::eval_word(b, EventuallyPeriodicWord::parse(word));
}

// 1. Printed decimals of the distinguished bases.
void decimals(Check& c) {
  const std::vector<std::pair<const char*, const char*>> printed{
      {"x^4=2x^2+x+1", "1.71064"},          {"x^3=2x^2-x+1", "1.75488"},   {"x^6=x^4+x^3+2x^2+x+1", "1.64541"},
      {"x^6=x^5+2x^4-x^3-x^2+1", "1.69765"}, {"x^5=x^4+x^3+x-1", "1.68042"}, {"x^5=2x^3+x^2+1", "1.67602"},
      {"x^6=2x^4+x^3+1", "1.65462"},         {"x^5=x^3+x^2+2x+2", "1.66184"}};
  for (const auto& [relation, digits] : printed) {
    const auto roots = algebraic::isolate_real_roots(algebraic::parse_polynomial(relation), Rational(1), Rational(2));
    c.require(roots.size() == 1, std::string(relation) + " has one root in (1, 2)");
    if (roots.size() != 1) continue;
    const std::string got = algebraic::to_decimal(roots.front(), 5);
    c.require(got == digits, std::string(relation) + ": " + got + " != " + digits);
    bool registered = false;
    for (const auto& nb : constants::registry())
      if (nb.approx == digits) registered = compare(nb.value, roots.front()) == 0;
    c.require(registered, std::string("registry entry for ") + digits);
  }
}

/// The first n digits of every word in the families P^inf, P^k A, P^k B.
std::set<Word> family_prefixes(const std::string& period, const char* a, const char* b, std::size_t n) {
  std::set<Word> out;
  const EventuallyPeriodicWord cycle = EventuallyPeriodicWord::parse(("|" + period).c_str());
  out.insert(cycle.prefix(n));
  for (std::size_t k = 0; k * period.size() <= n; ++k) {
    for (const char* tail : {a, b}) {
      const EventuallyPeriodicWord t = EventuallyPeriodicWord::parse(tail);
      Word w;
      for (std::size_t i = 0; i < k; ++i)
        for (char ch : period) w.push_back(ch == '1');
      for (std::size_t i = 0; w.size() < n; ++i) w.push_back(t.at(i));
      w.resize(n);
      out.insert(w);
    }
  }
  return out;
}

// 2. The two J endpoints at q_aleph0.
void endpoints_at_q_aleph0(Check& c) {
  const Base b = named("q_aleph0");
  const auto [lo, hi] = expansions::j_interval(b);
  c.require(lo == word_value(b, "|0110"), "left endpoint is (0110)^inf");
  c.require(hi == word_value(b, "|1001"), "right endpoint is (1001)^inf");
  const std::vector<std::tuple<FieldElement, std::string, const char*, const char*>> cases{
      {lo, "0110", "1000|01", "010111|10"}, {hi, "1001", "0111|10", "101000|01"}};
  for (const auto& [x, period, a, tail_b] : cases) {
    const auto g = branching::build_state_graph(b, x, 500);
    c.require(g.complete && g.states.size() < 500, "complete graph under 500 states for (" + period + ")^inf");
    c.require(branching::classify_paths(g) == Cardinality::countably_infinite(),
              "CountablyInfinite for (" + period + ")^inf");
    c.require(branching::is_null_infinite(g) == Verdict::Yes, "null infinite for (" + period + ")^inf");
    const auto prefixes = branching::enumerate_prefixes(b, x, 30);
    c.require(std::set<Word>(prefixes.begin(), prefixes.end()) == family_prefixes(period, a, tail_b, 30),
              "length-30 prefixes of (" + period + ")^inf match the families");
    c.detail += (c.detail.empty() ? "" : ", ") + std::to_string(g.states.size()) + " states, " +
                std::to_string(prefixes.size()) + " prefixes";
  }
}

// 3. Boundary identities at q_aleph0.
void boundary_identities(Check& c) {
  const Base b = named("q_aleph0");
  const auto [lo, hi] = expansions::j_interval(b);
  c.require(expansions::t_map(b, 0, hi) == word_value(b, "111|10"), "T_0(J_hi) = (111(10)^inf)_q");
  c.require(expansions::t_map(b, 1, lo) == word_value(b, "000|01"), "T_1(J_lo) = (000(01)^inf)_q");
  const auto reports = constants::verify_prop_branching_points(b, "q_aleph0");
  for (const auto& r : reports) {
    const bool boundary = r.id == "branching-points-2" || r.id == "branching-points-3";
    c.require(r.outcome == (boundary ? Outcome::EqualityBoundary : Outcome::Holds),
              r.id + " is " + std::string(constants::to_string(r.outcome)));
  }
}

/// The base named in brackets at the end of a window description.
std::string window_end(const std::string& window) {
  const auto open = window.rfind('[');
  const auto close = window.rfind(']');
  if (open == std::string::npos || close == std::string::npos || close < open) return {};
  return window.substr(open + 1, close - open - 1);
}

std::vector<constants::VerificationReport> window_reports(const Base& b, const std::string& name) {
  auto all = constants::verify_prop_branching_points(b, name);
  for (auto&& part : {constants::verify_lemma_sequence_bounds(b, name), constants::verify_prop_first_half(b, name)})
    all.insert(all.end(), part.begin(), part.end());
  return all;
}

// 4. Windows of validity.
void windows(Check& c) {
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& s = constants::sample_bases()[i];
    for (const auto& r : window_reports(Base(s.value), s.name))
      c.require(r.outcome == Outcome::Holds, s.name + " " + r.id + " is " + std::string(constants::to_string(r.outcome)));
  }
  std::size_t failing_groups = 0;
  for (const char* name : {"q_2", "r4"}) {
    const Base b = named(name);
    // Items sharing a window form one group.
    std::map<std::pair<std::string, std::string>, std::vector<const constants::VerificationReport*>> groups;
    const auto reports = window_reports(b, name);
    for (const auto& r : reports) {
      const std::string family = r.id.substr(0, r.id.rfind('-'));
      groups[{family, r.window}].push_back(&r);
    }
    for (const auto& [key, members] : groups) {
      const std::string end = window_end(key.second);
      c.require(!end.empty(), "window of " + key.first + " names its end point");
      if (end.empty()) continue;
      const bool extends_above = compare(constants::lookup(end).value, b.value()) > 0;
      std::size_t holding = 0;
      for (const auto* r : members) holding += r->outcome == Outcome::Holds;
      if (extends_above) {
        c.require(holding == members.size(), std::string(name) + ": " + key.first + " up to " + end + " must hold");
      } else {
        c.require(holding < members.size(), std::string(name) + ": " + key.first + " up to " + end + " must fail");
        ++failing_groups;
      }
    }
  }
  c.detail = std::to_string(failing_groups) + " groups outside their window fail";
}

// 5. No null-infinite witness below q_aleph0.
void no_witness_below_q_aleph0(Check& c) {
  std::size_t checked = 0;
  for (const auto& s : constants::sample_bases()) {
    const Base b(s.value);
    std::vector<FieldElement> points;
    for (const auto& e : branching::p_q_set(b)) points.push_back(e.value);
    const auto [lo, hi] = expansions::j_interval(b);
    points.push_back(lo);
    points.push_back(hi);
    for (const auto& e : expansions::u_family(b, 6)) points.push_back(e.value);
    for (const auto& x : points) {
      const Verdict v = branching::is_null_infinite(b, x, 5000);
      c.require(v != Verdict::Yes, s.name + ": null-infinite witness found");
      ++checked;
    }
    try {
      const auto m = branching::b_aleph0_membership(b, 5000);
      c.require(m.kind != branching::Membership::Kind::In, s.name + ": membership In");
    } catch (const Error& e) {
      c.require(e.kind() == ErrorKind::BaseOutOfRange, s.name + ": unexpected error " + e.what());
    }
  }
  c.detail = std::to_string(checked) + " points at " + std::to_string(constants::sample_bases().size()) + " bases";
}

// 6. The alpha family.
void alpha_family(Check& c) {
  c.require(compare(constants::alpha(3).value, constants::lookup("q_aleph0").value) == 0, "alpha_3 = q_aleph0");
  for (unsigned k = 3; k < 10; ++k)
    c.require(compare(constants::alpha(k).value, constants::alpha(k + 1).value) < 0,
              "alpha_" + std::to_string(k) + " < alpha_" + std::to_string(k + 1));
  c.require(compare(constants::alpha(10).value, constants::lookup("q_f").value) < 0, "alpha_10 < q_f");
  for (unsigned k = 3; k <= 6; ++k) {
    const Base b(constants::alpha(k).value);
    const FieldElement& q = b.q();
    std::vector<FieldElement> pow{b.element(1)};
    for (unsigned i = 1; i <= k + 4; ++i) pow.push_back(pow.back() * q);
    c.require(pow[k + 4] == pow[k + 3] + pow[k + 2] + pow[k] - pow[2] - Rational(1),
              "defining identity at alpha_" + std::to_string(k));
    std::set<FieldElement, algebraic::RepLess> p, u;
    for (const auto& e : branching::p_q_set(b)) p.insert(e.value);
    for (const auto& e : branching::u_k_set(b, k)) u.insert(e.value);
    c.require(p == u && p.size() == 2 * k, "P_q = U_{k,q} at alpha_" + std::to_string(k));
  }
  for (unsigned k : {4u, 5u}) {
    const auto m = branching::b_aleph0_membership(Base(constants::alpha(k).value), 5000);
    c.require(m.kind == branching::Membership::Kind::In, "alpha_" + std::to_string(k) + " is in B_aleph0");
  }
}

// 7. Golden ratio.
void golden_ratio(Check& c) {
  const Base g = named("golden");
  const auto one = branching::build_state_graph(g, g.element(1), 100);
  c.require(one.complete && one.states.size() == 4, "graph of 1 has 4 states");
  c.require(branching::classify_paths(one) == Cardinality::countably_infinite(), "1 is CountablyInfinite");
  const FieldElement half = g.element(Rational(1, 2));
  c.require(branching::classify_expansions(g, half, 100) == Cardinality::uncountable(), "1/2 is Uncountable");
  const auto tree = branching::export_tree(g, half, branching::TreeMode::Continuum, 5, 1000);
  c.require(tree.leaf_count() == 32, "continuum tree has 32 leaves, got " + std::to_string(tree.leaf_count()));
}

using Adjacency = std::vector<std::vector<std::size_t>>;

/// Number of walks of length n from the start vertex.
std::uint64_t walk_count(const Adjacency& adj, std::size_t n) {
  std::vector<std::uint64_t> ways(adj.size(), 0);
  ways[0] = 1;
  for (std::size_t step = 0; step < n; ++step) {
    std::vector<std::uint64_t> next(adj.size(), 0);
    for (std::size_t v = 0; v < adj.size(); ++v)
      for (std::size_t t : adj[v]) next[t] += ways[v];
    ways = std::move(next);
  }
  std::uint64_t total = 0;
  for (auto w : ways) total += w;
  return total;
}

/// True if some vertex reachable from the start has two closed walks of equal length n <= 40.
bool exponential_returns(const Adjacency& adj) {
  std::vector<bool> seen(adj.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t t : adj[v])
      if (!seen[t]) seen[t] = true, stack.push_back(t);
  }
  for (std::size_t u = 0; u < adj.size(); ++u) {
    if (!seen[u]) continue;
    std::vector<std::uint64_t> ways(adj.size(), 0);
    ways[u] = 1;
    for (std::size_t n = 1; n <= 40; ++n) {
      std::vector<std::uint64_t> next(adj.size(), 0);
      for (std::size_t v = 0; v < adj.size(); ++v)
        for (std::size_t t : adj[v]) next[t] += ways[v];
      ways = std::move(next);
      if (ways[u] >= 2) return true;
    }
  }
  return false;
}

/// Census oracle: with out-degree at least 1 every walk extends to an infinite path.
Cardinality census(const Adjacency& adj) {
  if (exponential_returns(adj)) return Cardinality::uncountable();
  const std::uint64_t p40 = walk_count(adj, 40);
  if (p40 == walk_count(adj, 32)) return Cardinality::finite(algebraic::BigInt(std::to_string(p40)));
  return Cardinality::countably_infinite();
}

branching::StateGraph as_state_graph(const Adjacency& adj) {
  const algebraic::NumberField field(RealAlgebraic::from_rational(Rational(3, 2)));
  branching::StateGraph g;
  for (std::size_t v = 0; v < adj.size(); ++v) {
    g.states.push_back(field.from_rational(Rational(static_cast<long>(v))));
    g.regions.push_back(adj[v].size() == 2 ? expansions::Region::Switch : expansions::Region::BelowSwitch);
    std::vector<branching::Edge> edges;
    for (std::size_t i = 0; i < adj[v].size(); ++i)
      edges.push_back({static_cast<expansions::Digit>(adj[v].size() == 2 ? i : 0), adj[v][i]});
    g.edges.push_back(std::move(edges));
    g.index.emplace(g.states.back(), v);
  }
  g.start = 0;
  g.complete = true;
  return g;
}

// 8. Path classifier against the census oracle.
void path_classifier(Check& c) {
  std::mt19937_64 rng(0xB5E7A);
  std::map<std::string, std::size_t> classes;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
    const double branch = std::uniform_real_distribution<double>(0.0, 0.6)(rng);
    std::uniform_int_distribution<std::size_t> vertex(0, n - 1);
    Adjacency adj(n);
    for (auto& out : adj) {
      out.push_back(vertex(rng));
      if (std::bernoulli_distribution(branch)(rng)) out.push_back(vertex(rng));
    }
    const Cardinality expected = census(adj);
    const Cardinality got = branching::classify_paths(as_state_graph(adj));
    ++classes[std::string(branching::kind_name(expected.kind))];
    c.require(got == expected, "graph " + std::to_string(trial) + ": " + branching::to_string(got) +
                                   " != " + branching::to_string(expected));
  }
  for (const auto& [kind, count] : classes) c.detail += (c.detail.empty() ? "" : ", ") + kind + " " + std::to_string(count);
}

// 9. Period-four and scaling identities.
void identity_suites(Check& c) {
  std::mt19937_64 rng(424242);
  for (const auto& nb : constants::registry()) {
    const Base b(nb.value);
    const FieldElement q2 = b.q() * b.q();
    const FieldElement a = (q2 - Rational(1)).inverse();
    const FieldElement top = b.q() * a;
    std::vector<FieldElement> points;
    for (int i = 0; i < 50; ++i) {
      const FieldElement y = testing::random_element(b.field(), rng);
      c.require(expansions::t_map(b, 1, expansions::t_map(b, 0, y)) - a == q2 * (y - a), nb.name + " scaling about a");
      c.require(top - expansions::t_map(b, 0, expansions::t_map(b, 1, y)) == q2 * (top - y),
                nb.name + " scaling about q a");
      Rational t(i + 1, 51);
      points.push_back(a + (top - a) * t);
    }
    for (const auto& r : constants::verify_identities(b, nb.name, points))
      c.require(r.outcome == Outcome::Holds, nb.name + " " + r.id);
  }
}

// 10. Funnel into J.
void funnel(Check& c) {
  std::size_t longest = 0;
  for (const char* name : {"q_aleph0", "q_f"}) {
    const Base b = named(name);
    const auto [jlo, jhi] = expansions::j_interval(b);
    const FieldElement a = (b.q() * b.q() - Rational(1)).inverse();
    const FieldElement width = b.switch_hi() - b.switch_lo();
    const FieldElement gap_lo = b.switch_lo() - a;
    const FieldElement gap_hi = b.q() * a - b.switch_hi();
    const double gap = std::min(gap_lo.enclosure(64).lo.get_d(), gap_hi.enclosure(64).lo.get_d());
    const double size = width.enclosure(64).hi.get_d();
    const double q_lower = b.q().enclosure(64).lo.get_d();
    const std::size_t bound =
        2 * static_cast<std::size_t>(std::ceil(std::log(size / gap) / (2 * std::log(q_lower)))) + 4;
    for (int i = 0; i < 100; ++i) {
      const FieldElement x = b.switch_lo() + width * Rational(i, 99);
      const auto [word, y] = expansions::map_into_J(b, x);
      c.require(word.size() <= bound, std::string(name) + ": word length " + std::to_string(word.size()) +
                                          " exceeds " + std::to_string(bound));
      c.require(compare(jlo, y) <= 0 && compare(y, jhi) <= 0, std::string(name) + ": landing point outside J");
      c.require(expansions::apply_word(b, word, x) == y, std::string(name) + ": landing point is w(x)");
      longest = std::max(longest, word.size());
    }
  }
  c.detail = "longest word " + std::to_string(longest);
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    std::function<void(Check&)> run;
    double limit_seconds;  // 0 for no limit
  };
  const std::vector<Criterion> criteria{
      {1, "constants match printed decimals", decimals, 1.0},
      {2, "J endpoints at q_aleph0", endpoints_at_q_aleph0, 5.0},
      {3, "boundary identities at q_aleph0", boundary_identities, 0},
      {4, "windows of the inequality lists", windows, 0},
      {5, "no null-infinite witness below q_aleph0", no_witness_below_q_aleph0, 0},
      {6, "alpha family", alpha_family, 30.0},
      {7, "golden ratio desk checks", golden_ratio, 0},
      {8, "path classifier against census oracle", path_classifier, 0},
      {9, "period-four and scaling identities", identity_suites, 0},
      {10, "funnel into J", funnel, 0},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.limit_seconds > 0)
      c.require(seconds < cr.limit_seconds, "took " + std::to_string(seconds) + " s");
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", seconds);
    std::cout << (c.ok() ? "PASS" : "FAIL") << "  " << cr.number << "  " << cr.name << "  (" << timing;
    if (!c.detail.empty()) std::cout << "; " << c.detail;
    std::cout << ")";
    if (!c.ok()) std::cout << "  " << c.summary();
    std::cout << "\n";
    failed += !c.ok();
  }
  return failed == 0 ? 0 : 1;
}
