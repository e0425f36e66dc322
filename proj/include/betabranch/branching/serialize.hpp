#pragma once

#include <string>

#include "json.hpp"

#include "betabranch/branching/membership.hpp"
#include "betabranch/branching/tree.hpp"

namespace betabranch::branching {

/// {"kind": ..., "k": "3"} (k only for Finite, as a decimal string), {"reason": ...} for Unknown.
nlohmann::json to_json(const Cardinality& c);
/// Inverse of to_json(Cardinality); throws Error(InvalidArgument) on malformed input.
Cardinality cardinality_from_json(const nlohmann::json& j);

/// {states:[{rep, region, approx}], edges:[[from, digit, to]], start, complete, frontier, classification}.
nlohmann::json to_json(const StateGraph& g);

/// Graph JSON plus {mode, depth, leaves, nodes:[...]}.
nlohmann::json to_json(const TreeExport& t);

/// Tree as a DOT digraph: node label = 6-digit decimal and exact representative
/// of the node's starting point, edge label = digit.
std::string to_dot(const TreeExport& t);

/// State graph as a DOT digraph with the same labelling.
std::string to_dot(const StateGraph& g);

nlohmann::json to_json(const UniqueEntry& e);
nlohmann::json to_json(const Membership& m);

}  // namespace betabranch::branching
