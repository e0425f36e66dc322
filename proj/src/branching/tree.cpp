#include "betabranch/branching/tree.hpp"

#include <algorithm>
#include <set>

#include "betabranch/error.hpp"

namespace betabranch::branching {

std::string_view to_string(TreeMode m) {
  switch (m) {
    case TreeMode::Full: return "full";
    case TreeMode::Infinite: return "infinite";
    case TreeMode::Continuum: return "continuum";
  }
  return "?";
}

TreeMode parse_tree_mode(std::string_view text) {
  if (text == "full") return TreeMode::Full;
  if (text == "infinite") return TreeMode::Infinite;
  if (text == "continuum") return TreeMode::Continuum;
  throw Error(ErrorKind::InvalidArgument, "unknown tree mode '" + std::string(text) + "' (full|infinite|continuum)");
}

std::string_view to_string(TreeNode::End e) {
  switch (e) {
    case TreeNode::End::Bifurcation: return "bifurcation";
    case TreeNode::End::Ray: return "ray";
    case TreeNode::End::DepthLimit: return "depth-limit";
    case TreeNode::End::Pruned: return "pruned";
    case TreeNode::End::Truncated: return "truncated";
  }
  return "?";
}

std::size_t TreeExport::leaf_count() const {
  return static_cast<std::size_t>(std::count_if(nodes.begin(), nodes.end(), [](const TreeNode& n) {
    return n.children.empty() && n.end != TreeNode::End::Pruned;
  }));
}

namespace {

class Unroller {
 public:
  Unroller(const Base& base, TreeExport& out, std::size_t max_steps)
      : base_(base), out_(out), max_steps_(max_steps) {
    if (out_.graph.complete) classifier_.emplace(out_.graph.adjacency());
  }

  Cardinality cardinality_of(const FieldElement& y) const {
    if (!classifier_) return Cardinality::unknown("incomplete graph");
    auto idx = out_.graph.find(y);
    if (!idx) return Cardinality::unknown("point not in state graph");
    return classifier_->classify(*idx);
  }

  bool keep(const FieldElement& y) const {
    switch (out_.mode) {
      case TreeMode::Full: return true;
      case TreeMode::Infinite: return cardinality_of(y).is_infinite();
      case TreeMode::Continuum: return cardinality_of(y).kind == Cardinality::Kind::Uncountable;
    }
    return false;
  }

  void run(const FieldElement& x) {
    std::vector<std::size_t> todo{make_node(std::nullopt, 0, {}, x)};
    out_.nodes[0].end = keep(x) ? TreeNode::End::Ray : TreeNode::End::Pruned;
    while (!todo.empty()) {
      const std::size_t id = todo.back();
      todo.pop_back();
      if (out_.nodes[id].end == TreeNode::End::Pruned) continue;
      if (out_.nodes[id].level >= out_.depth) {
        out_.nodes[id].end = TreeNode::End::DepthLimit;
        continue;
      }
      unroll(id, todo);
    }
  }

 private:
  std::size_t make_node(std::optional<Digit> via, std::size_t level, Word path, const FieldElement& start) {
    TreeNode n{via, level, std::move(path), {}, start, cardinality_of(start), TreeNode::End::Ray, {}};
    out_.nodes.push_back(std::move(n));
    return out_.nodes.size() - 1;
  }

  void unroll(std::size_t id, std::vector<std::size_t>& todo) {
    FieldElement y = out_.nodes[id].start;
    Word segment;
    std::set<FieldElement, algebraic::RepLess> seen;
    while (true) {
      const Region r = expansions::region(base_, y);
      std::vector<std::pair<Digit, FieldElement>> kept;
      for (Digit d : {Digit{0}, Digit{1}}) {
        if ((d == 0 && r == Region::AboveSwitch) || (d == 1 && r == Region::BelowSwitch)) continue;
        FieldElement z = expansions::t_map(base_, d, y);
        if (keep(z)) kept.emplace_back(d, std::move(z));
      }
      if (kept.size() == 2) {
        out_.nodes[id].segment = segment;
        out_.nodes[id].end = TreeNode::End::Bifurcation;
        Word base_path = out_.nodes[id].path;
        base_path.insert(base_path.end(), segment.begin(), segment.end());
        const std::size_t level = out_.nodes[id].level + 1;
        std::vector<std::size_t> kids;
        for (auto& [d, z] : kept) {
          Word p = base_path;
          p.push_back(d);
          kids.push_back(make_node(d, level, std::move(p), z));
        }
        out_.nodes[id].children = kids;
        // Depth-first, digit 0 subtree first.
        todo.push_back(kids[1]);
        todo.push_back(kids[0]);
        return;
      }
      if (kept.empty()) {
        out_.nodes[id].segment = segment;
        out_.nodes[id].end = TreeNode::End::Pruned;
        return;
      }
      if (!seen.insert(y).second) {
        out_.nodes[id].segment = segment;
        out_.nodes[id].end = TreeNode::End::Ray;
        return;
      }
      if (segment.size() >= max_steps_) {
        out_.nodes[id].segment = segment;
        out_.nodes[id].end = TreeNode::End::Truncated;
        return;
      }
      segment.push_back(kept[0].first);
      y = kept[0].second;
    }
  }

  const Base& base_;
  TreeExport& out_;
  std::size_t max_steps_;
  std::optional<PathClassifier> classifier_;
};

}  // namespace

TreeExport export_tree(const Base& base, const FieldElement& x, TreeMode mode, std::size_t depth,
                       std::size_t max_states) {
  TreeExport out{mode, depth, build_state_graph(base, x, max_states), {}, {}};
  out.classification = classify_paths(out.graph);
  if (mode != TreeMode::Full && !out.graph.complete)
    throw Error(ErrorKind::IncompleteGraph, "the " + std::string(to_string(mode)) +
                                                " tree needs classifications, but the state graph stopped at " +
                                                std::to_string(max_states) + " states");
  Unroller(base, out, max_states).run(x);
  return out;
}

}  // namespace betabranch::branching
