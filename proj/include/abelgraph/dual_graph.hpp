#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "abelgraph/errors.hpp"

namespace abelgraph {

// Dual graph of a nodal curve. Vertices are irreducible components weighted
// by the geometric genus of their normalization; edges are the nodes, with a
// loop for a self-node of one component.
//
// Vertices and edges are stored sorted by id, so an index is a stable,
// canonical handle everywhere in the library.

struct VertexSpec {
    std::string id;
    int genus = 0;
};

struct EdgeSpec {
    std::string id;
    std::string end_a;
    std::string end_b;
};

struct Vertex {
    std::string id;
    int genus = 0;
};

struct Edge {
    std::string id;
    int a = 0;  // endpoint indices, a <= b; a == b for a loop
    int b = 0;
};

enum class Stability {
    stable,
    quasistable_not_stable,
    semistable_not_quasistable,
    not_semistable,
};

const char* stability_name(Stability s);

class DualGraph {
public:
    DualGraph(std::vector<VertexSpec> vertices, std::vector<EdgeSpec> edges);

    size_t vertex_count() const { return vertices_.size(); }
    size_t edge_count() const { return edges_.size(); }
    const Vertex& vertex(size_t i) const { return vertices_[i]; }
    const Edge& edge(size_t i) const { return edges_[i]; }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }

    int find_vertex(const std::string& id) const;
    int find_edge(const std::string& id) const;
    size_t vertex_index(const std::string& id) const;  // throws UnknownVertex
    size_t edge_index(const std::string& id) const;    // throws UnknownEdge

    // Arithmetic genus of the curve: sum of vertex genera plus the first
    // Betti number of the graph.
    long long genus() const { return genus_; }

    int genus(size_t v) const { return vertices_[v].genus; }

    int valence(size_t v) const { return valence_[v]; }  // loops count twice
    int loops_at(size_t v) const { return loops_[v]; }

    // Degree of the dualizing sheaf on component v: 2*genus(v) - 2 + valence.
    int vertex_weight(size_t v) const { return 2 * vertices_[v].genus - 2 + valence_[v]; }

    // Number of non-loop edges joining two distinct vertices.
    int multiplicity(size_t u, size_t w) const { return mult_[u][w]; }

    bool is_loop(size_t e) const { return edges_[e].a == edges_[e].b; }

    // Genus-0 vertex with no loops meeting the rest of the curve in exactly
    // two nodes. These are the components a blow-up inserts.
    bool is_exceptional(size_t v) const {
        return vertices_[v].genus == 0 && loops_[v] == 0 && valence_[v] == 2;
    }

    Stability stability() const { return stability_; }
    bool is_stable() const { return stability_ == Stability::stable; }
    bool is_semistable() const { return stability_ != Stability::not_semistable; }
    bool is_quasistable() const {
        return stability_ == Stability::stable || stability_ == Stability::quasistable_not_stable;
    }

private:
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::unordered_map<std::string, size_t> vertex_lookup_;
    std::unordered_map<std::string, size_t> edge_lookup_;
    std::vector<int> valence_;
    std::vector<int> loops_;
    std::vector<std::vector<int>> mult_;
    long long genus_ = 0;
    Stability stability_ = Stability::not_semistable;
};

// True when the vertices selected by `mask` induce a connected subgraph.
bool mask_connected(const DualGraph& g, uint64_t mask);

// A subcurve: a nonempty set of components, as a bitmask over vertex indices.
// Boundary size, weight and connectivity are computed on construction.
class Subcurve {
public:
    Subcurve(const DualGraph& host, uint64_t mask);

    static Subcurve of_ids(const DualGraph& host, const std::vector<std::string>& ids);

    const DualGraph& host() const { return *host_; }
    uint64_t mask() const { return mask_; }
    size_t size() const;
    bool contains(size_t v) const { return (mask_ >> v) & 1u; }
    bool full() const;
    bool proper() const { return !full(); }
    bool connected() const { return connected_; }

    // Number of nodes shared with the complementary subcurve (loops never
    // cross the boundary).
    int k() const { return k_; }

    // Sum of vertex weights; for connected Z this equals 2*genus(Z) - 2 + k.
    int weight() const { return weight_; }

    // Number of edges with both endpoints inside, loops included.
    int internal_edges() const { return internal_edges_; }

    // Arithmetic genus of the subcurve; requires connectivity.
    long long genus() const;

    Subcurve complement() const;
    std::vector<size_t> vertex_indices() const;
    std::vector<std::string> vertex_ids() const;

    bool operator==(const Subcurve& other) const {
        return host_ == other.host_ && mask_ == other.mask_;
    }

private:
    const DualGraph* host_;
    uint64_t mask_;
    int k_ = 0;
    int weight_ = 0;
    int internal_edges_ = 0;
    bool connected_ = false;
};

// Cap on vertex counts for operations that walk all 2^n vertex subsets.
size_t enumeration_limit();
void set_enumeration_limit(size_t limit);

// All connected subcurves in lexicographic order of their sorted vertex-id
// tuples. Throws LimitExceeded when the graph is too large to enumerate.
std::vector<Subcurve> connected_subcurves(const DualGraph& g, bool proper_only);

}  // namespace abelgraph
