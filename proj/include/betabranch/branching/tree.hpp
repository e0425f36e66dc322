#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "betabranch/branching/classify.hpp"

namespace betabranch::branching {

/// full: bifurcate at every branching point. infinite: keep only branches with
/// infinitely many expansions. continuum: keep only branches with uncountably many.
enum class TreeMode { Full, Infinite, Continuum };
std::string_view to_string(TreeMode m);
/// "full", "infinite", "continuum"; throws Error(InvalidArgument) otherwise.
TreeMode parse_tree_mode(std::string_view text);

/// A horizontal segment of a branching tree: from its starting point it follows
/// the only kept digit until the next kept bifurcation.
struct TreeNode {
  enum class End {
    Bifurcation,  // two kept children follow
    Ray,          // infinite horizontal line (the orbit cycles with no further kept bifurcation)
    DepthLimit,   // not unrolled: the depth limit was reached
    Pruned,       // the starting point itself does not satisfy the mode
    Truncated,    // the segment exceeded the step budget (incomplete full-mode unrolling)
  };
  std::optional<Digit> via;  // digit taken at the parent's bifurcation
  std::size_t level = 0;     // number of bifurcations above this node
  Word path;                 // digits from the root point to the start of this node
  Word segment;              // digits along this node's horizontal line
  FieldElement start;        // point at the start of the node
  Cardinality cardinality;   // of the start point (Unknown when the graph is incomplete)
  End end = End::Ray;
  std::vector<std::size_t> children;  // digit 0 child first
};

std::string_view to_string(TreeNode::End e);

struct TreeExport {
  TreeMode mode;
  std::size_t depth;
  StateGraph graph;
  Cardinality classification;  // of the root point
  std::vector<TreeNode> nodes;  // nodes[0] is the root

  /// Nodes without children that were not pruned.
  std::size_t leaf_count() const;
};

/// Unrolls the branching tree of x down to `depth` bifurcation levels.
/// Throws Error(OutOfRange) if x is not in I_q and Error(IncompleteGraph) when the
/// mode needs classifications that an incomplete state graph cannot provide.
TreeExport export_tree(const Base& base, const FieldElement& x, TreeMode mode, std::size_t depth,
                       std::size_t max_states);

}  // namespace betabranch::branching
