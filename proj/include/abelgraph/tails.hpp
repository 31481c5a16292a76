#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "abelgraph/dual_graph.hpp"

namespace abelgraph {

// Non-loop edges whose removal disconnects the graph, in edge-index order.
// These are the separating nodes of the curve.
std::vector<size_t> bridge_edges(const DualGraph& g);

// Bridges of the subgraph induced on the vertices of `vmask`.
std::vector<size_t> bridge_edges_in_induced(const DualGraph& g, uint64_t vmask);

enum class TailSizeClass { small, half, large };

const char* tail_size_class_name(TailSizeClass c);

// One side of a bridge. The two sides of a bridge r are the tails generated
// by r; their genera add up to the genus of the whole curve.
struct Tail {
    const DualGraph* host = nullptr;
    size_t bridge = 0;    // edge index of the generating bridge
    uint64_t mask = 0;    // vertices on this side
    long long genus = 0;
    TailSizeClass size_class = TailSizeClass::small;
};

// Both tails of every bridge. Per bridge (ascending edge index), the side
// containing the smaller endpoint index comes first.
std::vector<Tail> tails(const DualGraph& g);

// The distinguished tail family used by the Abel map: all small tails, plus
// one tail of genus exactly g/2 when such a tail exists. For a stable graph
// at most one bridge can generate equal-genus sides; if several do, the input
// violates that uniqueness and MultipleHalfNodes is raised. The retained side
// of the half pair is the one with the lexicographically smallest vertex-id
// tuple. Result sorted by vertex-id tuple.
std::vector<Tail> small_tail_set(const DualGraph& g);

enum class TailRelation { equal, Q1subQ2, Q2subQ1, cover, disjoint };

const char* tail_relation_name(TailRelation r);

// How two tails sit relative to each other as subcurves. One of the five
// relations always applies; anything else would contradict the two-tail
// trichotomy and raises InvariantViolation.
TailRelation tail_pair_relation(const Tail& q1, const Tail& q2);

// Genus-0 loop-free vertices all of whose incident edges are bridges.
std::vector<size_t> separating_line_vertices(const DualGraph& g);

// Maximal connected genus-0 subcurves meeting their complement only in
// bridges: the connected components of the separating-line vertex set.
std::vector<Subcurve> separating_trees_of_lines(const DualGraph& g);

struct BlowUpResult {
    DualGraph graph;
    std::string exceptional_id;  // the inserted genus-0 vertex
    std::string edge_a_id;       // replaces the old edge, on the `a` side
    std::string edge_b_id;
};

// Replace edge r by a genus-0 vertex joined to both former endpoints (two
// parallel edges to the same vertex when r is a loop). Preserves arithmetic
// genus and connectivity; a stable graph becomes quasistable.
BlowUpResult blow_up(const DualGraph& g, size_t edge);
BlowUpResult blow_up(const DualGraph& g, const std::string& edge_id);

// Lexicographic order on the sorted vertex-index tuples encoded by two masks.
bool tuple_lex_less(uint64_t a, uint64_t b);

}  // namespace abelgraph
