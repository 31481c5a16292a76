#include "abelgraph/dual_graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>

namespace abelgraph {

namespace {

constexpr size_t kMaskCapacity = 63;

size_t g_enumeration_limit = 16;

}  // namespace

size_t enumeration_limit() { return g_enumeration_limit; }

void set_enumeration_limit(size_t limit) {
    if (limit == 0 || limit > kMaskCapacity)
        fail(ErrorCode::SpecError, "enumeration limit must be between 1 and 63");
    g_enumeration_limit = limit;
}

const char* stability_name(Stability s) {
    switch (s) {
        case Stability::stable: return "stable";
        case Stability::quasistable_not_stable: return "quasistableNotStable";
        case Stability::semistable_not_quasistable: return "semistableNotStable";
        case Stability::not_semistable: return "notSemistable";
    }
    return "unknown";
}

DualGraph::DualGraph(std::vector<VertexSpec> vertex_specs, std::vector<EdgeSpec> edge_specs) {
    if (vertex_specs.empty()) fail(ErrorCode::ParseError, "graph needs at least one vertex");
    if (vertex_specs.size() > kMaskCapacity)
        fail(ErrorCode::LimitExceeded, "at most 63 vertices are supported");

    std::sort(vertex_specs.begin(), vertex_specs.end(),
              [](const VertexSpec& x, const VertexSpec& y) { return x.id < y.id; });
    vertices_.reserve(vertex_specs.size());
    for (const VertexSpec& spec : vertex_specs) {
        if (spec.id.empty()) fail(ErrorCode::ParseError, "vertex id must be nonempty");
        if (spec.genus < 0) fail(ErrorCode::ParseError, "vertex genus must be nonnegative: " + spec.id);
        if (!vertex_lookup_.emplace(spec.id, vertices_.size()).second)
            fail(ErrorCode::DuplicateId, "vertex id: " + spec.id);
        vertices_.push_back({spec.id, spec.genus});
    }

    std::sort(edge_specs.begin(), edge_specs.end(),
              [](const EdgeSpec& x, const EdgeSpec& y) { return x.id < y.id; });
    edges_.reserve(edge_specs.size());
    for (const EdgeSpec& spec : edge_specs) {
        if (spec.id.empty()) fail(ErrorCode::ParseError, "edge id must be nonempty");
        if (!edge_lookup_.emplace(spec.id, edges_.size()).second)
            fail(ErrorCode::DuplicateId, "edge id: " + spec.id);
        int a = find_vertex(spec.end_a);
        int b = find_vertex(spec.end_b);
        if (a < 0) fail(ErrorCode::UnknownVertex, "edge " + spec.id + " endpoint " + spec.end_a);
        if (b < 0) fail(ErrorCode::UnknownVertex, "edge " + spec.id + " endpoint " + spec.end_b);
        if (a > b) std::swap(a, b);
        edges_.push_back({spec.id, a, b});
    }

    size_t n = vertices_.size();
    valence_.assign(n, 0);
    loops_.assign(n, 0);
    mult_.assign(n, std::vector<int>(n, 0));
    long long genus_sum = 0;
    for (const Vertex& v : vertices_) genus_sum += v.genus;
    for (const Edge& e : edges_) {
        if (e.a == e.b) {
            loops_[e.a] += 1;
            valence_[e.a] += 2;
        } else {
            valence_[e.a] += 1;
            valence_[e.b] += 1;
            mult_[e.a][e.b] += 1;
            mult_[e.b][e.a] += 1;
        }
    }
    genus_ = genus_sum + static_cast<long long>(edges_.size()) - static_cast<long long>(n) + 1;

    if (!mask_connected(*this, (1ull << n) - 1))
        fail(ErrorCode::Disconnected, "graph must be connected");

    // Degree of the dualizing sheaf, summed over components.
    long long total_weight = 0;
    for (size_t v = 0; v < n; ++v) total_weight += vertex_weight(v);
    require_invariant(total_weight == 2 * genus_ - 2, "vertex weights must sum to 2g-2");

    bool stable = true, semistable = true, adjacent_exceptionals = false;
    for (size_t v = 0; v < n; ++v) {
        if (vertices_[v].genus > 0) continue;
        if (valence_[v] < 3) stable = false;
        if (valence_[v] < 2) semistable = false;
    }
    for (const Edge& e : edges_) {
        if (e.a != e.b && is_exceptional(e.a) && is_exceptional(e.b)) adjacent_exceptionals = true;
    }
    if (!semistable)
        stability_ = Stability::not_semistable;
    else if (stable)
        stability_ = Stability::stable;
    else if (!adjacent_exceptionals)
        stability_ = Stability::quasistable_not_stable;
    else
        stability_ = Stability::semistable_not_quasistable;
}

int DualGraph::find_vertex(const std::string& id) const {
    auto it = vertex_lookup_.find(id);
    return it == vertex_lookup_.end() ? -1 : static_cast<int>(it->second);
}

size_t DualGraph::vertex_index(const std::string& id) const {
    auto it = vertex_lookup_.find(id);
    if (it == vertex_lookup_.end()) fail(ErrorCode::UnknownVertex, id);
    return it->second;
}

size_t DualGraph::edge_index(const std::string& id) const {
    auto it = edge_lookup_.find(id);
    if (it == edge_lookup_.end()) fail(ErrorCode::UnknownEdge, id);
    return it->second;
}

int DualGraph::find_edge(const std::string& id) const {
    auto it = edge_lookup_.find(id);
    return it == edge_lookup_.end() ? -1 : static_cast<int>(it->second);
}

bool mask_connected(const DualGraph& g, uint64_t mask) {
    if (mask == 0) return false;
    uint64_t start = mask & (~mask + 1);  // lowest set bit
    uint64_t seen = start;
    uint64_t frontier = start;
    while (frontier) {
        uint64_t next = 0;
        for (const Edge& e : g.edges()) {
            if (e.a == e.b) continue;
            uint64_t bit_a = 1ull << e.a, bit_b = 1ull << e.b;
            if (!(mask & bit_a) || !(mask & bit_b)) continue;
            if ((frontier & bit_a) && !(seen & bit_b)) next |= bit_b;
            if ((frontier & bit_b) && !(seen & bit_a)) next |= bit_a;
        }
        seen |= next;
        frontier = next;
    }
    return seen == mask;
}

Subcurve::Subcurve(const DualGraph& host, uint64_t mask) : host_(&host), mask_(mask) {
    if (mask == 0) fail(ErrorCode::EmptySet, "subcurve needs at least one vertex");
    uint64_t all = (1ull << host.vertex_count()) - 1;
    if (mask & ~all) fail(ErrorCode::UnknownVertex, "subcurve mask outside the vertex range");

    for (const Edge& e : host.edges()) {
        bool in_a = contains(e.a), in_b = contains(e.b);
        if (in_a && in_b)
            internal_edges_ += 1;
        else if (in_a != in_b)
            k_ += 1;
    }
    for (size_t v = 0; v < host.vertex_count(); ++v)
        if (contains(v)) weight_ += host.vertex_weight(v);
    connected_ = mask_connected(host, mask_);
}

Subcurve Subcurve::of_ids(const DualGraph& host, const std::vector<std::string>& ids) {
    uint64_t mask = 0;
    for (const std::string& id : ids) mask |= 1ull << host.vertex_index(id);
    return Subcurve(host, mask);
}

size_t Subcurve::size() const { return static_cast<size_t>(std::popcount(mask_)); }

bool Subcurve::full() const { return size() == host_->vertex_count(); }

long long Subcurve::genus() const {
    if (!connected_) fail(ErrorCode::NotConnected, "subcurve genus needs a connected subcurve");
    long long genus_sum = 0;
    for (size_t v = 0; v < host_->vertex_count(); ++v)
        if (contains(v)) genus_sum += host_->vertex(v).genus;
    return genus_sum + internal_edges_ - static_cast<long long>(size()) + 1;
}

Subcurve Subcurve::complement() const {
    uint64_t all = (1ull << host_->vertex_count()) - 1;
    uint64_t other = all & ~mask_;
    if (other == 0) fail(ErrorCode::EmptySet, "the full subcurve has an empty complement");
    return Subcurve(*host_, other);
}

std::vector<size_t> Subcurve::vertex_indices() const {
    std::vector<size_t> out;
    for (size_t v = 0; v < host_->vertex_count(); ++v)
        if (contains(v)) out.push_back(v);
    return out;
}

std::vector<std::string> Subcurve::vertex_ids() const {
    std::vector<std::string> out;
    for (size_t v : vertex_indices()) out.push_back(host_->vertex(v).id);
    return out;
}

namespace {

// Emitting each subset right before its extensions by larger indices yields
// lexicographic order on sorted vertex-id tuples (vertices are stored sorted).
void extend_subset(const DualGraph& g, uint64_t mask, size_t first_free, bool proper_only,
                   std::vector<Subcurve>& out) {
    if (mask != 0) {
        Subcurve sub(g, mask);
        bool keep = sub.connected() && (!proper_only || sub.proper());
        if (keep) out.push_back(sub);
    }
    for (size_t v = first_free; v < g.vertex_count(); ++v)
        extend_subset(g, mask | (1ull << v), v + 1, proper_only, out);
}

}  // namespace

std::vector<Subcurve> connected_subcurves(const DualGraph& g, bool proper_only) {
    if (g.vertex_count() > enumeration_limit())
        fail(ErrorCode::LimitExceeded,
             "graph has " + std::to_string(g.vertex_count()) + " vertices; enumeration limit is " +
                 std::to_string(enumeration_limit()));
    std::vector<Subcurve> out;
    extend_subset(g, 0, 0, proper_only, out);
    return out;
}

}  // namespace abelgraph
