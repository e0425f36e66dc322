#include "betabranch/branching/classify.hpp"

#include <algorithm>

namespace betabranch::branching {

std::string_view kind_name(Cardinality::Kind k) {
  switch (k) {
    case Cardinality::Kind::Finite: return "Finite";
    case Cardinality::Kind::CountablyInfinite: return "CountablyInfinite";
    case Cardinality::Kind::Uncountable: return "Uncountable";
    case Cardinality::Kind::Unknown: return "Unknown";
  }
  return "?";
}

std::string to_string(const Cardinality& c) {
  switch (c.kind) {
    case Cardinality::Kind::Finite: return "Finite(" + c.count.get_str() + ")";
    case Cardinality::Kind::Unknown: return "Unknown(" + c.reason + ")";
    default: return std::string(kind_name(c.kind));
  }
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "Yes";
    case Verdict::No: return "No";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

/// Iterative Tarjan; components come out sinks first (reverse topological order).
std::vector<std::vector<std::size_t>> strongly_connected_components(const std::vector<std::vector<std::size_t>>& adj) {
  const std::size_t n = adj.size();
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> components;
  std::size_t counter = 0;

  struct Frame {
    std::size_t v;
    std::size_t next_edge;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.next_edge < adj[f.v].size()) {
        const std::size_t w = adj[f.v][f.next_edge++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const std::size_t v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        std::vector<std::size_t> comp;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != v);
        components.push_back(std::move(comp));
      }
    }
  }
  return components;
}

int rank(const Cardinality& c) {
  switch (c.kind) {
    case Cardinality::Kind::Uncountable: return 2;
    case Cardinality::Kind::CountablyInfinite: return 1;
    default: return 0;
  }
}

bool has_paths(const Cardinality& c) { return c.kind != Cardinality::Kind::Finite || c.count > 0; }

}  // namespace

PathClassifier::PathClassifier(const std::vector<std::vector<std::size_t>>& adj) : result_(adj.size()) {
  const auto components = strongly_connected_components(adj);
  std::vector<std::size_t> comp_of(adj.size());
  for (std::size_t c = 0; c < components.size(); ++c)
    for (std::size_t v : components[c]) comp_of[v] = c;

  for (std::size_t c = 0; c < components.size(); ++c) {
    const auto& comp = components[c];
    std::size_t internal = 0;
    bool some_vertex_branches_inside = false;
    std::vector<std::size_t> exits;
    for (std::size_t v : comp) {
      std::size_t inside = 0;
      for (std::size_t w : adj[v]) {
        if (comp_of[w] == c)
          ++inside;
        else
          exits.push_back(w);
      }
      internal += inside;
      if (inside >= 2) some_vertex_branches_inside = true;
    }

    if (internal == 0) {
      // Transient vertex: sum over successors, all already classified.
      const std::size_t v = comp.front();
      Cardinality acc = Cardinality::finite(0);
      for (std::size_t w : adj[v]) {
        const Cardinality& r = result_[w];
        if (rank(r) > rank(acc))
          acc = r;
        else if (rank(r) == 0 && rank(acc) == 0)
          acc.count += r.count;
      }
      result_[v] = acc;
      continue;
    }

    Cardinality value;
    if (some_vertex_branches_inside) {
      value = Cardinality::uncountable();
    } else {
      value = Cardinality::finite(1);
      for (std::size_t w : exits) {
        const Cardinality& r = result_[w];
        if (!has_paths(r)) continue;
        Cardinality candidate = rank(r) == 2 ? r : Cardinality::countably_infinite();
        if (rank(candidate) > rank(value)) value = candidate;
      }
    }
    for (std::size_t v : comp) result_[v] = value;
  }
}

Cardinality classify_paths(const StateGraph& g) {
  if (!g.complete) return Cardinality::unknown("incomplete graph");
  return PathClassifier(g.adjacency()).classify(g.start);
}

Cardinality classify_expansions(const Base& base, const FieldElement& x, std::size_t max_states) {
  return classify_expansions(build_state_graph(base, x, max_states), max_states);
}

Cardinality classify_expansions(const StateGraph& g, std::size_t max_states) {
  if (!g.complete)
    return Cardinality::unknown("incomplete graph: state limit " + std::to_string(max_states) + " reached; " +
                                std::to_string(g.branching_count()) + " branching states found");
  return classify_paths(g);
}

Verdict is_null_infinite(const StateGraph& g) {
  if (!g.complete) return Verdict::Unknown;
  const PathClassifier pc(g.adjacency());
  if (pc.classify(g.start).kind != Cardinality::Kind::CountablyInfinite) return Verdict::No;
  std::vector<bool> seen(g.states.size(), false);
  std::vector<std::size_t> todo{g.start};
  seen[g.start] = true;
  while (!todo.empty()) {
    const std::size_t s = todo.back();
    todo.pop_back();
    const auto& out = g.edges[s];
    if (out.size() == 2 && pc.classify(out[0].target).kind != Cardinality::Kind::Finite &&
        pc.classify(out[1].target).kind != Cardinality::Kind::Finite)
      return Verdict::No;
    for (const Edge& e : out)
      if (!seen[e.target]) {
        seen[e.target] = true;
        todo.push_back(e.target);
      }
  }
  return Verdict::Yes;
}

Verdict is_null_infinite(const Base& base, const FieldElement& x, std::size_t max_states) {
  return is_null_infinite(build_state_graph(base, x, max_states));
}

}  // namespace betabranch::branching
