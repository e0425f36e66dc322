#include "betabranch/branching/state_graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <string>

#include "betabranch/error.hpp"

namespace betabranch::branching {

std::optional<std::size_t> StateGraph::find(const FieldElement& x) const {
  auto it = index.find(x);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

std::size_t StateGraph::branching_count() const {
  return static_cast<std::size_t>(
      std::count_if(edges.begin(), edges.end(), [](const std::vector<Edge>& e) { return e.size() == 2; }));
}

std::vector<std::vector<std::size_t>> StateGraph::adjacency() const {
  std::vector<std::vector<std::size_t>> adj(states.size());
  for (std::size_t s = 0; s < states.size(); ++s)
    for (const Edge& e : edges[s]) adj[s].push_back(e.target);
  return adj;
}

StateGraph build_state_graph(const Base& base, const FieldElement& x, std::size_t max_states) {
  if (max_states == 0) throw Error(ErrorKind::InvalidArgument, "max_states must be positive");
  const Region r0 = expansions::region(base, x);
  if (r0 == Region::OutOfRange)
    throw Error(ErrorKind::OutOfRange, "point " + algebraic::to_decimal(x, 6) + " is outside [0, 1/(q-1)]");

  StateGraph g;
  auto add = [&](const FieldElement& y, Region r) {
    g.index.emplace(y, g.states.size());
    g.states.push_back(y);
    g.regions.push_back(r);
    g.edges.emplace_back();
    return g.states.size() - 1;
  };
  g.start = add(x, r0);

  std::deque<std::size_t> queue{g.start};
  while (!queue.empty()) {
    const std::size_t s = queue.front();
    queue.pop_front();
    std::vector<Digit> digits;
    switch (g.regions[s]) {
      case Region::BelowSwitch: digits = {0}; break;
      case Region::AboveSwitch: digits = {1}; break;
      case Region::Switch: digits = {0, 1}; break;
      case Region::OutOfRange: break;
    }
    std::vector<Edge> out;
    bool blocked = false;
    for (Digit d : digits) {
      FieldElement y = expansions::t_map(base, d, g.states[s]);
      if (auto it = g.index.find(y); it != g.index.end()) {
        out.push_back({d, it->second});
        continue;
      }
      if (g.states.size() >= max_states) {
        blocked = true;
        break;
      }
      const std::size_t t = add(y, expansions::region(base, y));
      queue.push_back(t);
      out.push_back({d, t});
    }
    if (blocked)
      g.frontier.push_back(s);
    else
      g.edges[s] = std::move(out);
  }
  std::sort(g.frontier.begin(), g.frontier.end());
  g.complete = g.frontier.empty();
  return g;
}

std::size_t default_max_states() {
  if (const char* env = std::getenv("BETA_BRANCH_MAX_STATES")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 20000;
}

std::vector<Word> enumerate_prefixes(const Base& base, const FieldElement& x, std::size_t n, std::size_t max_words) {
  if (!expansions::in_interval(base, x))
    throw Error(ErrorKind::OutOfRange, "point " + algebraic::to_decimal(x, 6) + " is outside [0, 1/(q-1)]");
  struct Item {
    Word word;
    FieldElement point;
  };
  std::vector<Item> layer{{Word{}, x}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Item> next;
    for (const Item& it : layer) {
      const Region r = expansions::region(base, it.point);
      for (Digit d : {Digit{0}, Digit{1}}) {
        if ((d == 0 && r == Region::AboveSwitch) || (d == 1 && r == Region::BelowSwitch)) continue;
        Word w = it.word;
        w.push_back(d);
        next.push_back({std::move(w), expansions::t_map(base, d, it.point)});
      }
    }
    if (next.size() > max_words)
      throw Error(ErrorKind::EnumerationBound,
                  "more than " + std::to_string(max_words) + " prefixes of length " + std::to_string(i + 1));
    layer = std::move(next);
  }
  std::vector<Word> out;
  out.reserve(layer.size());
  for (Item& it : layer) out.push_back(std::move(it.word));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace betabranch::branching
