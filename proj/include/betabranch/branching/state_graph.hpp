#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "betabranch/expansions/dynamics.hpp"

namespace betabranch::branching {

using algebraic::FieldElement;
using expansions::Base;
using expansions::Digit;
using expansions::Region;
using expansions::Word;

struct Edge {
  Digit digit;
  std::size_t target;
};

/// Closure of a point under the digit maps that keep the orbit in I_q, with
/// states deduplicated by canonical representative. Every expanded state has
/// an edge for digit d iff T_d(state) is in I_q, listed in digit order.
struct StateGraph {
  std::vector<FieldElement> states;
  std::vector<Region> regions;
  std::vector<std::vector<Edge>> edges;
  std::size_t start = 0;
  bool complete = false;
  std::vector<std::size_t> frontier;  // discovered but unexpanded states (no edges recorded)

  std::optional<std::size_t> find(const FieldElement& x) const;
  /// Expanded states with two outgoing edges.
  std::size_t branching_count() const;
  /// Targets per state (parallel edges kept), the input of the path classifier.
  std::vector<std::vector<std::size_t>> adjacency() const;

  std::map<FieldElement, std::size_t, algebraic::RepLess> index;
};

/// Breadth-first closure from x, stopping once max_states states are known.
/// Throws Error(OutOfRange) if x is not in I_q, Error(InvalidArgument) if max_states is 0.
StateGraph build_state_graph(const Base& base, const FieldElement& x, std::size_t max_states);

/// 20000, or the value of BETA_BRANCH_MAX_STATES when set to a positive integer.
std::size_t default_max_states();

/// All length-n words along which the orbit of x stays in I_q, sorted
/// lexicographically. Computed directly from the maps, independent of any graph.
/// Throws Error(EnumerationBound) if more than max_words words are needed.
std::vector<Word> enumerate_prefixes(const Base& base, const FieldElement& x, std::size_t n,
                                     std::size_t max_words = 1'000'000);

}  // namespace betabranch::branching
