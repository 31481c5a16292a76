#include "abelgraph/abel.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "abelgraph/lattice.hpp"

namespace abelgraph {

namespace {

void require_stable_host(const DualGraph& g) {
    if (!g.is_stable()) fail(ErrorCode::NotStable, "Abel map operations need a stable host");
    if (g.genus() < 2) fail(ErrorCode::GenusTooSmall, "Abel map operations need genus at least 2");
}

uint64_t full_mask(const DualGraph& g) { return (1ull << g.vertex_count()) - 1; }

}  // namespace

PointOnCurve PointOnCurve::smooth_point(std::string component, std::string label) {
    PointOnCurve p;
    p.kind = Kind::smooth;
    p.component = std::move(component);
    p.label = std::move(label);
    return p;
}

PointOnCurve PointOnCurve::at_node(std::string edge) {
    PointOnCurve p;
    p.kind = Kind::node;
    p.edge = std::move(edge);
    return p;
}

void validate_point(const DualGraph& g, const PointOnCurve& p) {
    if (p.kind == PointOnCurve::Kind::smooth) {
        if (g.find_vertex(p.component) < 0)
            fail(ErrorCode::UnknownPoint, "no component named " + p.component);
        if (p.label.empty()) fail(ErrorCode::ParseError, "smooth point needs a label");
        if (g.find_edge(p.label) >= 0)
            fail(ErrorCode::ParseError, "label " + p.label + " collides with a node name");
    } else {
        if (g.find_edge(p.edge) < 0) fail(ErrorCode::UnknownPoint, "no node named " + p.edge);
    }
}

bool point_in_tail(const Tail& q, const PointOnCurve& p) {
    const DualGraph& g = *q.host;
    if (p.kind == PointOnCurve::Kind::smooth)
        return (q.mask >> g.vertex_index(p.component)) & 1u;
    size_t e = g.edge_index(p.edge);
    if (e == q.bridge) return true;
    const Edge& ed = g.edge(e);
    return ((q.mask >> ed.a) & 1u) && ((q.mask >> ed.b) & 1u);
}

std::vector<Tail> small_tails_through(const DualGraph& g, const PointOnCurve& p) {
    validate_point(g, p);
    std::vector<Tail> chain;
    for (const Tail& q : small_tail_set(g))
        if (point_in_tail(q, p)) chain.push_back(q);
    std::sort(chain.begin(), chain.end(), [](const Tail& x, const Tail& y) {
        return std::popcount(x.mask) < std::popcount(y.mask);
    });
    for (size_t i = 0; i + 1 < chain.size(); ++i)
        require_invariant(tail_pair_relation(chain[i], chain[i + 1]) == TailRelation::Q1subQ2,
                          "family members through one point must be nested");
    return chain;
}

Multidegree abel_multidegree(const DualGraph& g, const PointOnCurve& p) {
    require_stable_host(g);
    validate_point(g, p);
    if (p.kind != PointOnCurve::Kind::smooth)
        fail(ErrorCode::SpecError, "the multidegree formula expects a smooth point");

    Multidegree out = Multidegree::zeros(g.vertex_count());
    out[g.vertex_index(p.component)] = 1;
    for (const Tail& q : small_tails_through(g, p)) out += tail_twister_multidegree(q);
    require_invariant(is_semibalanced(g, out), "Abel multidegrees are semibalanced");
    return out;
}

Multidegree abel_multidegree(const DualGraph& g, size_t component) {
    require_stable_host(g);
    if (component >= g.vertex_count())
        fail(ErrorCode::UnknownVertex, "component index out of range");
    return abel_multidegree(g, PointOnCurve::smooth_point(g.vertex(component).id));
}

AbelImage abel_image(const DualGraph& g, const PointOnCurve& p) {
    require_stable_host(g);
    validate_point(g, p);

    const bool is_node = p.kind == PointOnCurve::Kind::node;
    const size_t pe = is_node ? g.edge_index(p.edge) : 0;
    bool node_is_bridge = false;
    if (is_node) {
        std::vector<size_t> bridges = bridge_edges(g);
        node_is_bridge = std::binary_search(bridges.begin(), bridges.end(), pe);
    }
    const bool blow = is_node && !node_is_bridge;

    std::vector<Tail> chain = small_tails_through(g, p);
    std::vector<Tail> outer(chain.rbegin(), chain.rend());  // largest first
    const size_t m = outer.size();

    std::string exceptional, edge_a, edge_b;
    AbelImage img = [&] {
        if (!blow) return AbelImage{g};
        BlowUpResult b = blow_up(g, pe);
        exceptional = b.exceptional_id;
        return AbelImage{std::move(b.graph)};
    }();
    img.blown_up = blow;
    img.boundary = blow;
    img.exceptional = exceptional;
    if (is_node) img.node_edge = p.edge;
    img.one_general = is_d_general(g, 1).d_general;

    // Piece masks and divisor vertices are expressed in the image host's own
    // indexing, which differs from the input's after a blow-up.
    auto hidx = [&](size_t xv) { return img.host.vertex_index(g.vertex(xv).id); };
    auto hmask = [&](uint64_t xmask) {
        uint64_t out = 0;
        for (size_t v = 0; v < g.vertex_count(); ++v)
            if ((xmask >> v) & 1u) out |= 1ull << hidx(v);
        return out;
    };
    // Endpoint of the tail's generating node on the requested side.
    auto branch = [&](const Tail& q, bool inside) {
        const Edge& ed = g.edge(q.bridge);
        bool a_in = (q.mask >> ed.a) & 1u;
        require_invariant(a_in != bool((q.mask >> ed.b) & 1u),
                          "a generating node must straddle its tail");
        return static_cast<size_t>((a_in == inside) ? ed.a : ed.b);
    };

    for (const Tail& q : outer) img.cut_nodes.push_back(g.edge(q.bridge).id);

    if (m == 0) {
        require_invariant(!is_node || blow, "a separating node lies over its own tail");
        ImagePiece whole{hmask(full_mask(g)), {}};
        if (!is_node)
            whole.divisor.push_back({p.label, hidx(g.vertex_index(p.component)), 1});
        img.pieces.push_back(whole);
    } else {
        ImagePiece first{hmask(full_mask(g) & ~outer[0].mask), {}};
        first.divisor.push_back(
            {g.edge(outer[0].bridge).id, hidx(branch(outer[0], false)), 1});
        img.pieces.push_back(first);

        for (size_t i = 0; i + 1 < m; ++i) {
            ImagePiece piece{hmask(outer[i].mask & ~outer[i + 1].mask), {}};
            piece.divisor.push_back(
                {g.edge(outer[i + 1].bridge).id, hidx(branch(outer[i + 1], false)), 1});
            piece.divisor.push_back(
                {g.edge(outer[i].bridge).id, hidx(branch(outer[i], true)), -1});
            img.pieces.push_back(piece);
        }

        const Tail& innermost = outer[m - 1];
        ImagePiece last{hmask(innermost.mask), {}};
        if (!is_node) {
            last.divisor.push_back({p.label, hidx(g.vertex_index(p.component)), 1});
            last.divisor.push_back(
                {g.edge(innermost.bridge).id, hidx(branch(innermost, true)), -1});
        } else if (!blow) {
            // The node is the innermost generating node, so the final
            // divisor cancels to nothing.
            require_invariant(innermost.bridge == pe,
                              "a separating node generates the innermost family member");
        } else {
            last.divisor.push_back(
                {g.edge(innermost.bridge).id, hidx(branch(innermost, true)), -1});
        }
        img.pieces.push_back(last);
    }

    // Pieces must tile the original components, every divisor point must sit
    // on its piece, and each piece must be a connected subcurve.
    uint64_t covered = 0;
    for (const ImagePiece& piece : img.pieces) {
        require_invariant((covered & piece.mask) == 0, "pieces may only meet in cut nodes");
        covered |= piece.mask;
        require_invariant(mask_connected(img.host, piece.mask), "pieces must be connected");
        for (const DivisorTerm& t : piece.divisor)
            require_invariant((piece.mask >> t.vertex) & 1u,
                              "divisor points must lie on their piece");
    }
    require_invariant(covered == hmask(full_mask(g)), "pieces must cover the curve");

    Multidegree md = Multidegree::zeros(img.host.vertex_count());
    for (const ImagePiece& piece : img.pieces)
        for (const DivisorTerm& t : piece.divisor) md[t.vertex] += t.coeff;
    if (blow) md[img.host.vertex_index(exceptional)] += 1;
    img.multidegree = md;

    require_invariant(md.total() == 1, "degree-1 images have total degree 1");
    require_invariant(is_balanced(img.host, md), "image multidegrees are balanced");
    if (!is_node)
        require_invariant(md == abel_multidegree(g, PointOnCurve::smooth_point(p.component, p.label)),
                          "piecewise and twister multidegrees must agree");
    return img;
}

namespace {

// Distinct smooth points share labels freely across components, so make the
// carrying component part of a smooth term's identity. Node names stand on
// their own.
std::string term_key(const DualGraph& g, const DivisorTerm& t, const DualGraph& host) {
    if (g.find_edge(t.point) >= 0) return "n:" + t.point;
    return "s:" + host.vertex(t.vertex).id + ":" + t.point;
}

}  // namespace

bool abel_images_equal(const DualGraph& g, const PointOnCurve& a, const PointOnCurve& b) {
    require_stable_host(g);
    validate_point(g, a);
    validate_point(g, b);
    if (a == b) return true;

    std::vector<size_t> bridges = bridge_edges(g);
    auto nonseparating = [&](const PointOnCurve& p) {
        return p.kind == PointOnCurve::Kind::node &&
               !std::binary_search(bridges.begin(), bridges.end(), g.edge_index(p.edge));
    };
    bool na = nonseparating(a), nb = nonseparating(b);
    if (na || nb) {
        // A blown-up image never meets an image on the original host, and
        // two blow-ups agree only at the same node.
        return na && nb && a.edge == b.edge;
    }

    AbelImage ia = abel_image(g, a);
    AbelImage ib = abel_image(g, b);
    if (ia.multidegree != ib.multidegree) return false;

    // Common refinement: cut along both chains at once.
    std::vector<char> cut(g.edge_count(), 0);
    for (const std::string& id : ia.cut_nodes) cut[g.edge_index(id)] = 1;
    for (const std::string& id : ib.cut_nodes) cut[g.edge_index(id)] = 1;

    const size_t n = g.vertex_count();
    std::vector<int> comp(n, -1);
    int pieces = 0;
    for (size_t s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = pieces;
        std::vector<size_t> stack{s};
        while (!stack.empty()) {
            size_t v = stack.back();
            stack.pop_back();
            for (size_t e = 0; e < g.edge_count(); ++e) {
                if (cut[e] || g.is_loop(e)) continue;
                const Edge& ed = g.edge(e);
                size_t other;
                if (ed.a == static_cast<int>(v)) other = ed.b;
                else if (ed.b == static_cast<int>(v)) other = ed.a;
                else continue;
                if (comp[other] < 0) {
                    comp[other] = pieces;
                    stack.push_back(other);
                }
            }
        }
        ++pieces;
    }
    for (size_t e = 0; e < g.edge_count(); ++e)
        if (cut[e])
            require_invariant(comp[g.edge(e).a] != comp[g.edge(e).b],
                              "cut nodes must separate the refinement");

    auto gather = [&](const AbelImage& img) {
        std::vector<std::map<std::string, long long>> at(n);
        for (const ImagePiece& piece : img.pieces)
            for (const DivisorTerm& t : piece.divisor)
                at[t.vertex][term_key(g, t, img.host)] += t.coeff;
        return at;
    };
    auto ta = gather(ia), tb = gather(ib);

    std::vector<uint64_t> piece_mask(pieces, 0);
    for (size_t v = 0; v < n; ++v) piece_mask[comp[v]] |= 1ull << v;

    for (size_t v = 0; v < n; ++v) {
        std::map<std::string, long long> diff = ta[v];
        for (const auto& [key, c] : tb[v]) diff[key] -= c;
        bool same = std::all_of(diff.begin(), diff.end(),
                                [](const auto& kv) { return kv.second == 0; });
        if (same) continue;

        // The divisors differ on v, which is only harmless when v is a
        // separating line of its refinement piece: there a point's class
        // depends on nothing but its degree, already known to match.
        if (g.genus(v) != 0 || g.loops_at(v) != 0) return false;
        std::vector<size_t> pb = bridge_edges_in_induced(g, piece_mask[comp[v]]);
        for (size_t e = 0; e < g.edge_count(); ++e) {
            const Edge& ed = g.edge(e);
            if (g.is_loop(e) || cut[e]) continue;
            if (ed.a != static_cast<int>(v) && ed.b != static_cast<int>(v)) continue;
            if (comp[ed.a] != comp[v] || comp[ed.b] != comp[v]) continue;
            if (!std::binary_search(pb.begin(), pb.end(), e)) return false;
        }
    }
    return true;
}

FiberPartition abel_fibers(const DualGraph& g) {
    require_stable_host(g);
    if (!is_d_general(g, 1).d_general)
        fail(ErrorCode::Not1General, "fiber description needs degree 1 to be general");

    FiberPartition out;
    std::vector<char> v_used(g.vertex_count(), 0), e_used(g.edge_count(), 0);
    for (const Subcurve& tree : separating_trees_of_lines(g)) {
        FiberClass c;
        c.components = tree.vertex_ids();
        for (size_t v : tree.vertex_indices()) v_used[v] = 1;
        for (size_t e = 0; e < g.edge_count(); ++e) {
            const Edge& ed = g.edge(e);
            if (!tree.contains(ed.a) && !tree.contains(ed.b)) continue;
            require_invariant(!e_used[e], "a node cannot touch two separating trees");
            e_used[e] = 1;
            c.nodes.push_back(g.edge(e).id);
        }
        out.classes.push_back(std::move(c));
    }
    for (size_t v = 0; v < g.vertex_count(); ++v)
        if (!v_used[v]) out.classes.push_back({{g.vertex(v).id}, {}});
    for (size_t e = 0; e < g.edge_count(); ++e)
        if (!e_used[e]) out.classes.push_back({{}, {g.edge(e).id}});
    return out;
}

namespace {

void require_vine(const DualGraph& g, long long d) {
    if (g.vertex_count() != 2)
        fail(ErrorCode::NotTwoComponent, "closed forms apply to two-component hosts only");
    if (!g.is_stable()) fail(ErrorCode::NotStable, "vine host must be stable");
    if (g.genus() < 2) fail(ErrorCode::GenusTooSmall, "vine host must have genus at least 2");
    if (d < 1) fail(ErrorCode::SpecError, "total degree must be positive");
}

}  // namespace

VineInfo vine_info(const DualGraph& g, long long d) {
    require_vine(g, d);
    VineInfo info;
    info.d = d;
    info.delta = g.multiplicity(0, 1);
    info.lower_exact =
        Rational(d * g.vertex_weight(0), 2 * g.genus() - 2) - Rational(info.delta, 2);
    info.m = rational_ceil(info.lower_exact);
    info.strict = !is_integer(info.lower_exact);
    return info;
}

long long vine_r(const DualGraph& g, long long d, long long a) {
    VineInfo info = vine_info(g, d);
    if (a < 0 || a > d) fail(ErrorCode::SpecError, "the point split must lie between 0 and d");
    long long t = (a - info.m) % info.delta;
    return t < 0 ? t + info.delta : t;
}

Multidegree vine_abel_multidegree(const DualGraph& g, long long d, long long a0) {
    VineInfo info = vine_info(g, d);
    long long first = info.m + vine_r(g, d, a0);
    Multidegree out(std::vector<long long>{first, d - first});
    require_invariant(is_balanced(g, out), "the closed form must land on a balanced multidegree");
    return out;
}

VineBalanced bvine_set(const DualGraph& g, long long d) {
    VineInfo info = vine_info(g, d);
    VineBalanced out;
    for (long long i = 0; i < info.delta; ++i)
        out.set.push_back(Multidegree(std::vector<long long>{info.m + i, d - info.m - i}));

    std::vector<Multidegree> balanced = enumerate_balanced(g, d).balanced;
    out.equals_balanced = out.set == balanced;
    require_invariant(out.equals_balanced == info.strict,
                      "the candidate set exhausts the balanced set exactly when the bound is strict");
    require_invariant(out.equals_balanced == is_d_general(g, d).d_general,
                      "for two components, exhaustion and generality coincide");
    return out;
}

}  // namespace abelgraph
