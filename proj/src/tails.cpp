#include "abelgraph/tails.hpp"

#include <algorithm>
#include <functional>

#include "abelgraph/errors.hpp"

namespace abelgraph {

namespace {

// Tarjan lowlink over an explicit incidence list. Parallel edges are handled
// by skipping only the tree edge itself (by edge index), so a doubled edge is
// never reported as a bridge.
std::vector<size_t> bridges_impl(const DualGraph& g, uint64_t vmask) {
    const size_t n = g.vertex_count();
    std::vector<std::vector<std::pair<int, size_t>>> inc(n);  // (other endpoint, edge index)
    for (size_t e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (ed.a == ed.b) continue;
        if (!(vmask >> ed.a & 1) || !(vmask >> ed.b & 1)) continue;
        inc[ed.a].push_back({ed.b, e});
        inc[ed.b].push_back({ed.a, e});
    }

    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<size_t> out;
    int timer = 0;
    std::function<void(int, size_t)> dfs = [&](int v, size_t via) {
        disc[v] = low[v] = timer++;
        for (auto [w, e] : inc[v]) {
            if (e == via) continue;
            if (disc[w] < 0) {
                dfs(w, e);
                low[v] = std::min(low[v], low[w]);
                if (low[w] > disc[v]) out.push_back(e);
            } else {
                low[v] = std::min(low[v], disc[w]);
            }
        }
    };
    for (size_t v = 0; v < n; ++v)
        if ((vmask >> v & 1) && disc[v] < 0) dfs(static_cast<int>(v), g.edge_count());

    std::sort(out.begin(), out.end());
    return out;
}

uint64_t full_mask(const DualGraph& g) {
    return (g.vertex_count() == 64) ? ~0ull : (1ull << g.vertex_count()) - 1;
}

// Vertices reachable from `start` without crossing edge `cut`.
uint64_t side_of(const DualGraph& g, size_t cut, int start) {
    uint64_t seen = 1ull << start;
    std::vector<int> stack{start};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (size_t e = 0; e < g.edge_count(); ++e) {
            if (e == cut) continue;
            const Edge& ed = g.edge(e);
            if (ed.a == ed.b) continue;
            int other = -1;
            if (ed.a == v) other = ed.b;
            else if (ed.b == v) other = ed.a;
            if (other >= 0 && !(seen >> other & 1)) {
                seen |= 1ull << other;
                stack.push_back(other);
            }
        }
    }
    return seen;
}

TailSizeClass classify(long long tail_genus, long long g) {
    if (2 * tail_genus < g) return TailSizeClass::small;
    if (2 * tail_genus == g) return TailSizeClass::half;
    return TailSizeClass::large;
}

Tail make_tail(const DualGraph& g, size_t bridge, uint64_t mask) {
    Subcurve sc(g, mask);
    Tail t;
    t.host = &g;
    t.bridge = bridge;
    t.mask = mask;
    t.genus = sc.genus();
    t.size_class = classify(t.genus, g.genus());
    return t;
}

}  // namespace

std::vector<size_t> bridge_edges(const DualGraph& g) {
    return bridges_impl(g, full_mask(g));
}

std::vector<size_t> bridge_edges_in_induced(const DualGraph& g, uint64_t vmask) {
    return bridges_impl(g, vmask);
}

const char* tail_size_class_name(TailSizeClass c) {
    switch (c) {
        case TailSizeClass::small: return "small";
        case TailSizeClass::half: return "half";
        case TailSizeClass::large: return "large";
    }
    return "?";
}

const char* tail_relation_name(TailRelation r) {
    switch (r) {
        case TailRelation::equal: return "equal";
        case TailRelation::Q1subQ2: return "Q1subQ2";
        case TailRelation::Q2subQ1: return "Q2subQ1";
        case TailRelation::cover: return "cover";
        case TailRelation::disjoint: return "disjoint";
    }
    return "?";
}

std::vector<Tail> tails(const DualGraph& g) {
    std::vector<Tail> out;
    for (size_t e : bridge_edges(g)) {
        const Edge& ed = g.edge(e);
        uint64_t side_a = side_of(g, e, ed.a);
        uint64_t side_b = full_mask(g) & ~side_a;
        require_invariant(side_b == side_of(g, e, ed.b),
                          "bridge sides must partition the vertex set");
        Tail ta = make_tail(g, e, side_a);
        Tail tb = make_tail(g, e, side_b);
        require_invariant(ta.genus + tb.genus == g.genus(),
                          "tail genera must add up to the curve genus");
        out.push_back(ta);
        out.push_back(tb);
    }
    return out;
}

bool tuple_lex_less(uint64_t a, uint64_t b) {
    // The masks encode sorted index tuples. Bits below the lowest differing
    // position are shared, so both tuples open with the same elements; the
    // comparison is decided by what follows that common part.
    if (a == b) return false;
    uint64_t diff = a ^ b;
    uint64_t low = diff & (~diff + 1);
    uint64_t above = ~(low | (low - 1));
    if (a & low) {
        // a continues with the smaller element; a wins unless b has nothing
        // left, in which case b is a proper prefix of a.
        return (b & above) != 0;
    }
    return (a & above) == 0;
}

std::vector<Tail> small_tail_set(const DualGraph& g) {
    std::vector<Tail> all = tails(g);
    std::vector<Tail> small, half;
    for (const Tail& t : all) {
        if (t.size_class == TailSizeClass::small) small.push_back(t);
        else if (t.size_class == TailSizeClass::half) half.push_back(t);
    }

    if (!half.empty()) {
        // Halves come in pairs (the two sides of one bridge). More than one
        // generating bridge contradicts uniqueness of the half node.
        std::vector<size_t> gen;
        for (const Tail& t : half)
            if (std::find(gen.begin(), gen.end(), t.bridge) == gen.end()) gen.push_back(t.bridge);
        if (gen.size() > 1) {
            ErrorCode code = g.stability() == Stability::stable ? ErrorCode::InvariantViolation
                                                                : ErrorCode::MultipleHalfNodes;
            fail(code, "several nodes split the curve into equal-genus halves");
        }
        // Keep the side with the lexicographically smaller vertex tuple.
        const Tail* pick = &half[0];
        for (const Tail& t : half)
            if (tuple_lex_less(t.mask, pick->mask)) pick = &t;
        small.push_back(*pick);
    }

    std::sort(small.begin(), small.end(),
              [](const Tail& x, const Tail& y) { return tuple_lex_less(x.mask, y.mask); });
    return small;
}

TailRelation tail_pair_relation(const Tail& q1, const Tail& q2) {
    if (q1.host == nullptr || q1.host != q2.host)
        fail(ErrorCode::HostMismatch, "tails live on different graphs");
    const DualGraph& g = *q1.host;
    uint64_t full = full_mask(g);

    if (q1.mask == q2.mask) return TailRelation::equal;
    if ((q1.mask & ~q2.mask) == 0) return TailRelation::Q1subQ2;
    if ((q2.mask & ~q1.mask) == 0) return TailRelation::Q2subQ1;
    if ((q1.mask | q2.mask) == full) return TailRelation::cover;
    if ((q1.mask & q2.mask) == 0) return TailRelation::disjoint;
    // Partial overlap without covering the curve would contradict the
    // two-tail trichotomy.
    require_invariant(false, "tail pair fits no containment relation");
    return TailRelation::disjoint;  // unreachable
}

std::vector<size_t> separating_line_vertices(const DualGraph& g) {
    std::vector<size_t> bridges = bridge_edges(g);
    std::vector<char> is_bridge(g.edge_count(), 0);
    for (size_t e : bridges) is_bridge[e] = 1;

    std::vector<size_t> out;
    for (size_t v = 0; v < g.vertex_count(); ++v) {
        if (g.genus(v) != 0 || g.loops_at(v) != 0) continue;
        bool all_bridges = true;
        for (size_t e = 0; e < g.edge_count() && all_bridges; ++e) {
            const Edge& ed = g.edge(e);
            if (ed.a == static_cast<int>(v) || ed.b == static_cast<int>(v))
                all_bridges = is_bridge[e] != 0;
        }
        if (all_bridges) out.push_back(v);
    }
    return out;
}

std::vector<Subcurve> separating_trees_of_lines(const DualGraph& g) {
    std::vector<size_t> lines = separating_line_vertices(g);
    uint64_t line_mask = 0;
    for (size_t v : lines) line_mask |= 1ull << v;

    std::vector<Subcurve> out;
    uint64_t remaining = line_mask;
    while (remaining) {
        int start = __builtin_ctzll(remaining);
        // Grow the component of `start` inside the line set.
        uint64_t comp = 1ull << start;
        bool grew = true;
        while (grew) {
            grew = false;
            for (size_t e = 0; e < g.edge_count(); ++e) {
                const Edge& ed = g.edge(e);
                if (ed.a == ed.b) continue;
                uint64_t ma = 1ull << ed.a, mb = 1ull << ed.b;
                if ((ma & line_mask) && (mb & line_mask)) {
                    if ((comp & ma) && !(comp & mb)) { comp |= mb; grew = true; }
                    else if ((comp & mb) && !(comp & ma)) { comp |= ma; grew = true; }
                }
            }
        }
        Subcurve sc(g, comp);
        require_invariant(sc.genus() == 0, "separating tree must have genus 0");
        require_invariant(sc.internal_edges() + 1 == static_cast<int>(sc.size()),
                          "separating tree must be a tree");
        out.push_back(sc);
        remaining &= ~comp;
    }
    std::sort(out.begin(), out.end(), [](const Subcurve& x, const Subcurve& y) {
        return tuple_lex_less(x.mask(), y.mask());
    });
    return out;
}

BlowUpResult blow_up(const DualGraph& g, size_t edge) {
    if (edge >= g.edge_count()) fail(ErrorCode::UnknownEdge, "edge index out of range");
    const Edge& r = g.edge(edge);

    std::vector<VertexSpec> vs;
    for (size_t v = 0; v < g.vertex_count(); ++v)
        vs.push_back({g.vertex(v).id, g.vertex(v).genus});
    std::string exc_id = "E_" + r.id;
    while (g.find_vertex(exc_id) >= 0) exc_id += "'";
    vs.push_back({exc_id, 0});

    auto fresh_edge_id = [&](std::string base) {
        while (g.find_edge(base) >= 0) base += "'";
        return base;
    };
    std::string ea = fresh_edge_id(r.id + "__a");
    std::string eb = fresh_edge_id(r.id + "__b");

    std::vector<EdgeSpec> es;
    for (size_t e = 0; e < g.edge_count(); ++e) {
        if (e == edge) continue;
        const Edge& ed = g.edge(e);
        es.push_back({ed.id, g.vertex(ed.a).id, g.vertex(ed.b).id});
    }
    es.push_back({ea, g.vertex(r.a).id, exc_id});
    es.push_back({eb, g.vertex(r.b).id, exc_id});

    BlowUpResult out{DualGraph(vs, es), exc_id, ea, eb};
    require_invariant(out.graph.genus() == g.genus(), "blow-up must preserve genus");
    if (g.stability() == Stability::stable)
        require_invariant(out.graph.is_quasistable(), "blow-up of a stable graph is quasistable");
    return out;
}

BlowUpResult blow_up(const DualGraph& g, const std::string& edge_id) {
    int e = g.find_edge(edge_id);
    if (e < 0) fail(ErrorCode::UnknownEdge, "no edge named " + edge_id);
    return blow_up(g, static_cast<size_t>(e));
}

}  // namespace abelgraph
