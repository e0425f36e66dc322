#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "betabranch/branching/state_graph.hpp"

namespace betabranch::branching {

using algebraic::BigInt;

/// Cardinality of a set of infinite paths (equivalently, of expansions).
/// Uncountable always means the cardinality of the continuum.
struct Cardinality {
  enum class Kind { Finite, CountablyInfinite, Uncountable, Unknown };
  Kind kind = Kind::Unknown;
  BigInt count;        // Finite only
  std::string reason;  // Unknown only

  static Cardinality finite(BigInt k) { return {Kind::Finite, std::move(k), {}}; }
  static Cardinality countably_infinite() { return {Kind::CountablyInfinite, 0, {}}; }
  static Cardinality uncountable() { return {Kind::Uncountable, 0, {}}; }
  static Cardinality unknown(std::string reason) { return {Kind::Unknown, 0, std::move(reason)}; }

  bool is_infinite() const { return kind == Kind::CountablyInfinite || kind == Kind::Uncountable; }

  friend bool operator==(const Cardinality&, const Cardinality&) = default;
};

/// "Finite", "CountablyInfinite", "Uncountable", "Unknown".
std::string_view kind_name(Cardinality::Kind k);
/// "Finite(3)", "CountablyInfinite", "Uncountable", "Unknown(reason)".
std::string to_string(const Cardinality& c);

/// Counts infinite paths from every vertex of a finite directed multigraph.
/// Through the strongly connected components: a vertex reaching a component that
/// is not a simple cycle has uncountably many paths; otherwise one reaching a simple
/// cycle with a productive exit has countably many; otherwise the count is finite
/// and computed exactly. Results for all vertices are computed once.
class PathClassifier {
 public:
  explicit PathClassifier(const std::vector<std::vector<std::size_t>>& adjacency);

  const Cardinality& classify(std::size_t v) const { return result_.at(v); }
  std::size_t size() const { return result_.size(); }

 private:
  std::vector<Cardinality> result_;
};

/// Classification from the start state; Unknown("incomplete graph") unless g.complete.
Cardinality classify_paths(const StateGraph& g);

/// classify_paths(build_state_graph(base, x, max_states)). For an incomplete
/// graph the Unknown reason reports the branching states found so far.
Cardinality classify_expansions(const Base& base, const FieldElement& x, std::size_t max_states);
/// As above for a graph already built with the given state limit.
Cardinality classify_expansions(const StateGraph& g, std::size_t max_states);

enum class Verdict { Yes, No, Unknown };
std::string_view to_string(Verdict v);

/// Null infinite test on a graph: the start has countably many paths and every
/// reachable branching state has a successor with finitely many.
Verdict is_null_infinite(const StateGraph& g);
Verdict is_null_infinite(const Base& base, const FieldElement& x, std::size_t max_states);

}  // namespace betabranch::branching
