#include "betabranch/branching/serialize.hpp"

#include <sstream>

#include "betabranch/error.hpp"

namespace betabranch::branching {

using nlohmann::json;

json to_json(const Cardinality& c) {
  json j{{"kind", kind_name(c.kind)}};
  if (c.kind == Cardinality::Kind::Finite) j["k"] = c.count.get_str();
  if (c.kind == Cardinality::Kind::Unknown) j["reason"] = c.reason;
  return j;
}

Cardinality cardinality_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw Error(ErrorKind::InvalidArgument, "cardinality JSON needs a string 'kind'");
  const std::string kind = j["kind"];
  if (kind == "Finite") {
    if (!j.contains("k") || !j["k"].is_string()) throw Error(ErrorKind::InvalidArgument, "Finite needs a string 'k'");
    BigInt k;
    if (k.set_str(j["k"].get<std::string>(), 10) != 0 || k < 0)
      throw Error(ErrorKind::InvalidArgument, "Finite count is not a non-negative integer");
    return Cardinality::finite(k);
  }
  if (kind == "CountablyInfinite") return Cardinality::countably_infinite();
  if (kind == "Uncountable") return Cardinality::uncountable();
  if (kind == "Unknown") return Cardinality::unknown(j.value("reason", std::string{}));
  throw Error(ErrorKind::InvalidArgument, "unknown cardinality kind '" + kind + "'");
}

namespace {

std::string rep(const FieldElement& x) { return algebraic::to_string(x, "q"); }

std::string label(const FieldElement& x) { return algebraic::to_decimal(x, 6) + "\\n" + rep(x); }

std::string dot_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

json to_json(const StateGraph& g) {
  json states = json::array();
  for (std::size_t s = 0; s < g.states.size(); ++s)
    states.push_back({{"rep", rep(g.states[s])},
                      {"region", expansions::to_string(g.regions[s])},
                      {"approx", algebraic::to_decimal(g.states[s], 6)}});
  json edges = json::array();
  for (std::size_t s = 0; s < g.states.size(); ++s)
    for (const Edge& e : g.edges[s]) edges.push_back({s, static_cast<int>(e.digit), e.target});
  return {{"states", states},
          {"edges", edges},
          {"start", g.start},
          {"complete", g.complete},
          {"frontier", g.frontier},
          {"classification", to_json(classify_paths(g))}};
}

json to_json(const TreeExport& t) {
  json j = to_json(t.graph);
  j["mode"] = to_string(t.mode);
  j["depth"] = t.depth;
  j["leaves"] = t.leaf_count();
  json nodes = json::array();
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const TreeNode& n = t.nodes[i];
    json node{{"id", i},
              {"level", n.level},
              {"path", expansions::to_string(n.path)},
              {"segment", expansions::to_string(n.segment)},
              {"rep", rep(n.start)},
              {"approx", algebraic::to_decimal(n.start, 6)},
              {"cardinality", to_json(n.cardinality)},
              {"end", to_string(n.end)},
              {"children", n.children}};
    if (n.via) node["via"] = static_cast<int>(*n.via);
    nodes.push_back(std::move(node));
  }
  j["nodes"] = std::move(nodes);
  return j;
}

std::string to_dot(const TreeExport& t) {
  std::ostringstream os;
  os << "digraph branching_tree {\n  rankdir=LR;\n  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const TreeNode& n = t.nodes[i];
    std::string text = label(n.start) + "\\n" + to_string(n.cardinality);
    if (!n.segment.empty()) text += "\\nline " + expansions::to_string(n.segment);
    text += "\\n" + std::string(to_string(n.end));
    os << "  n" << i << " [label=" << dot_string(text) << "];\n";
  }
  for (std::size_t i = 0; i < t.nodes.size(); ++i)
    for (std::size_t c : t.nodes[i].children)
      os << "  n" << i << " -> n" << c << " [label=\"" << static_cast<int>(*t.nodes[c].via) << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const StateGraph& g) {
  std::ostringstream os;
  os << "digraph state_graph {\n  node [shape=ellipse, fontname=\"monospace\"];\n";
  for (std::size_t s = 0; s < g.states.size(); ++s) {
    os << "  s" << s << " [label=" << dot_string(label(g.states[s])) << (s == g.start ? ", peripheries=2" : "") << "];\n";
  }
  for (std::size_t s = 0; s < g.states.size(); ++s)
    for (const Edge& e : g.edges[s])
      os << "  s" << s << " -> s" << e.target << " [label=\"" << static_cast<int>(e.digit) << "\"];\n";
  os << "}\n";
  return os.str();
}

json to_json(const UniqueEntry& e) {
  return {{"word", expansions::to_string(e.word)},
          {"rep", rep(e.value)},
          {"approx", algebraic::to_decimal(e.value, 6)}};
}

json to_json(const Membership& m) {
  json checks = json::array();
  for (const auto& c : m.checks)
    checks.push_back({{"point", to_json(c.point)},
                      {"null_infinite", to_string(c.verdict)},
                      {"states", c.states},
                      {"complete", c.complete}});
  json j{{"membership", to_string(m.kind)}, {"checks", checks}};
  if (m.witness) j["witness"] = to_json(*m.witness);
  return j;
}

}  // namespace betabranch::branching
