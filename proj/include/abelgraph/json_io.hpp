#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "abelgraph/abel.hpp"
#include "abelgraph/balanced.hpp"

namespace abelgraph {

// Key order in emitted documents is meaningful (and covered by tests), so
// everything runs through the order-preserving flavor.
using Json = nlohmann::ordered_json;

DualGraph graph_from_json(const Json& j);
DualGraph parse_graph(const std::string& text);

// Canonical form: vertices and edges sorted by id, endpoint pairs sorted.
// Parsing the output reproduces the graph byte for byte.
Json graph_to_json(const DualGraph& g);
std::string serialize_graph(const DualGraph& g);

Multidegree multidegree_from_json(const DualGraph& g, const Json& j);
Json multidegree_to_json(const DualGraph& g, const Multidegree& m);

// Flat id -> degree map, the building block of the wrapped form above.
Json degree_map(const DualGraph& g, const Multidegree& m);

Json big_to_json(const BigInt& v);
std::string format_rational(const Rational& q);

Json class_group_to_json(const DualGraph& g);
Json balanced_to_json(const DualGraph& g, const BalancedSet& bs, const GeneralityReport* gen);
Json abel_image_to_json(const AbelImage& img);
Json fibers_to_json(const FiberPartition& fibers);
Json vine_to_json(const DualGraph& g, long long d, std::optional<long long> a0);
Json analysis_to_json(const DualGraph& g, const std::vector<long long>& degrees,
                      size_t base = 0);

std::string dump_report(const Json& j);  // indented, trailing newline

}  // namespace abelgraph
