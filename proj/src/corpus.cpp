#include "abelgraph/corpus.hpp"

#include <algorithm>

#include "abelgraph/balanced.hpp"
#include "abelgraph/lattice.hpp"
#include "abelgraph/tails.hpp"

namespace abelgraph {

namespace {

// Raw draws from the engine keep results identical across standard library
// implementations; uniform_int_distribution makes no such promise.
long long draw(std::mt19937_64& rng, long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % static_cast<uint64_t>(hi - lo + 1));
}

bool chance(std::mt19937_64& rng, double p) {
    return static_cast<double>(rng() >> 11) * 0x1p-53 < p;
}

std::string numbered_id(char prefix, int index, int total) {
    int width = 1;
    for (int t = total; t > 9; t /= 10) ++width;
    std::string digits = std::to_string(index);
    return prefix + std::string(width - digits.size(), '0') + digits;
}

}  // namespace

void validate_corpus_spec(const CorpusSpec& spec) {
    if (spec.count < 0) fail(ErrorCode::SpecError, "corpus count must be nonnegative");
    if (spec.genus_min < 2) fail(ErrorCode::SpecError, "corpus genus starts at 2");
    if (spec.genus_max < spec.genus_min) fail(ErrorCode::SpecError, "empty genus range");
    if (spec.vertices_min < 1) fail(ErrorCode::SpecError, "graphs need at least one vertex");
    if (spec.vertices_max < spec.vertices_min) fail(ErrorCode::SpecError, "empty vertex range");
    if (spec.vertices_max > 63) fail(ErrorCode::SpecError, "at most 63 vertices are supported");
    if (spec.edge_cap < 1) fail(ErrorCode::SpecError, "edge cap must be positive");
    if (spec.loop_probability < 0.0 || spec.loop_probability > 1.0)
        fail(ErrorCode::SpecError, "loop probability must lie in [0, 1]");
}

DualGraph random_stable_graph(std::mt19937_64& rng, const CorpusSpec& spec) {
    validate_corpus_spec(spec);
    for (int attempt = 0; attempt < 5000; ++attempt) {
        int n = static_cast<int>(draw(rng, spec.vertices_min, spec.vertices_max));
        int target_genus = static_cast<int>(draw(rng, spec.genus_min, spec.genus_max));
        int extra_cap = std::min(spec.edge_cap - (n - 1), target_genus);
        if (extra_cap < 0) continue;
        int extra = static_cast<int>(draw(rng, 0, extra_cap));

        // A spanning tree keeps the graph connected; each extra edge (loop
        // or parallel) raises the cycle genus by one.
        struct RawEdge { int a, b; };
        std::vector<RawEdge> edges;
        for (int v = 1; v < n; ++v)
            edges.push_back({static_cast<int>(draw(rng, 0, v - 1)), v});
        for (int i = 0; i < extra; ++i) {
            if (n == 1 || chance(rng, spec.loop_probability)) {
                int v = static_cast<int>(draw(rng, 0, n - 1));
                edges.push_back({v, v});
            } else {
                int u = static_cast<int>(draw(rng, 0, n - 1));
                int w = static_cast<int>(draw(rng, 0, n - 2));
                if (w >= u) ++w;
                edges.push_back({u, w});
            }
        }

        std::vector<int> valence(n, 0);
        for (const RawEdge& e : edges) {
            valence[e.a] += e.a == e.b ? 2 : 1;
            if (e.a != e.b) valence[e.b] += 1;
        }

        // Components short on valence must carry geometric genus to stay
        // stable; hand the rest of the genus budget out at random.
        int budget = target_genus - extra;
        std::vector<int> genus(n, 0);
        int needed = 0;
        for (int v = 0; v < n; ++v)
            if (valence[v] < 3) {
                genus[v] = 1;
                ++needed;
            }
        if (needed > budget) continue;
        for (int i = 0; i < budget - needed; ++i)
            genus[static_cast<int>(draw(rng, 0, n - 1))] += 1;

        std::vector<VertexSpec> vs;
        for (int v = 0; v < n; ++v) vs.push_back({numbered_id('C', v + 1, n), genus[v]});
        std::vector<EdgeSpec> es;
        for (size_t e = 0; e < edges.size(); ++e)
            es.push_back({numbered_id('e', static_cast<int>(e) + 1, static_cast<int>(edges.size())),
                          vs[edges[e].a].id, vs[edges[e].b].id});

        DualGraph g(vs, es);
        require_invariant(g.genus() == target_genus, "generator missed its genus target");
        require_invariant(g.is_stable(), "generator must produce stable graphs");
        return g;
    }
    fail(ErrorCode::SpecError, "corpus spec admits no stable graph");
}

std::vector<DualGraph> generate_corpus(const CorpusSpec& spec) {
    validate_corpus_spec(spec);
    std::mt19937_64 rng(spec.seed);
    std::vector<DualGraph> out;
    out.reserve(spec.count);
    for (int i = 0; i < spec.count; ++i) out.push_back(random_stable_graph(rng, spec));
    return out;
}

namespace {

struct CheckState {
    long long cases = 0;
    bool pass = true;
    std::string detail;

    void fail_on(const std::string& what) {
        if (pass) detail = what;
        pass = false;
    }
    SuiteCheck done(const std::string& name) {
        if (pass) detail = std::to_string(cases) + " cases";
        return {name, pass, detail};
    }
};

}  // namespace

std::vector<SuiteCheck> run_invariant_suite(const std::vector<DualGraph>& graphs) {
    CheckState weight_sum, adjunction, positive_weight, tail_split, trichotomy, twister_zero,
        order_vs_trees, reduction, bridge_side, blow_up_shape;

    for (size_t gi = 0; gi < graphs.size(); ++gi) {
        const DualGraph& g = graphs[gi];
        std::string tag = "graph " + std::to_string(gi);

        long long total = 0;
        for (size_t v = 0; v < g.vertex_count(); ++v) total += g.vertex_weight(v);
        weight_sum.cases += 1;
        if (total != 2 * g.genus() - 2) weight_sum.fail_on(tag);

        std::vector<Subcurve> subs = connected_subcurves(g, /*proper_only=*/true);
        for (const Subcurve& z : subs) {
            adjunction.cases += 1;
            if (z.weight() != 2 * z.genus() - 2 + z.k()) adjunction.fail_on(tag);
            positive_weight.cases += 1;
            if (z.weight() < 0 || (g.is_stable() && z.weight() == 0)) positive_weight.fail_on(tag);
        }

        std::vector<Tail> all_tails = tails(g);
        std::vector<size_t> bridges = bridge_edges(g);
        tail_split.cases += 1;
        if (all_tails.size() != 2 * bridges.size()) tail_split.fail_on(tag);
        for (size_t i = 0; i + 1 < all_tails.size(); i += 2) {
            tail_split.cases += 1;
            if (all_tails[i].genus + all_tails[i + 1].genus != g.genus()) tail_split.fail_on(tag);
        }
        for (const Tail& a : all_tails)
            for (const Tail& b : all_tails) {
                trichotomy.cases += 1;
                try {
                    tail_pair_relation(a, b);
                } catch (const Error&) {
                    trichotomy.fail_on(tag);
                }
            }

        std::mt19937_64 rng(0x5eed0000 + gi);
        for (int rep = 0; rep < 4; ++rep) {
            std::vector<long long> coeffs;
            for (size_t v = 0; v < g.vertex_count(); ++v) coeffs.push_back(draw(rng, -3, 3));
            twister_zero.cases += 1;
            if (twister_multidegree(g, coeffs).total() != 0) twister_zero.fail_on(tag);
        }
        for (const Tail& t : all_tails) {
            twister_zero.cases += 1;
            if (tail_twister_multidegree(t).total() != 0) twister_zero.fail_on(tag);
        }

        order_vs_trees.cases += 1;
        if (class_group(g).order != spanning_tree_count(g)) order_vs_trees.fail_on(tag);

        for (int rep = 0; rep < 3; ++rep) {
            std::vector<long long> d;
            for (size_t v = 0; v < g.vertex_count(); ++v) d.push_back(draw(rng, -5, 5));
            Multidegree m(d);
            Multidegree r1 = canonical_representative(g, m);
            std::vector<long long> coeffs;
            for (size_t v = 0; v < g.vertex_count(); ++v) coeffs.push_back(draw(rng, -2, 2));
            Multidegree shifted = m;
            shifted += twister_multidegree(g, coeffs);
            reduction.cases += 1;
            if (canonical_representative(g, shifted) != r1) reduction.fail_on(tag);
        }

        for (size_t e : bridges) {
            const Edge& ed = g.edge(e);
            uint64_t ends = (1ull << ed.a) | (1ull << ed.b);
            uint64_t side_a = 0;
            for (const Tail& t : all_tails)
                if (t.bridge == e && ((t.mask >> ed.a) & 1u)) side_a = t.mask;
            for (const Subcurve& z : subs) {
                if (z.mask() & ends) continue;
                bridge_side.cases += 1;
                bool one_side = (z.mask() & ~side_a) == 0 || (z.mask() & side_a) == 0;
                if (!one_side) bridge_side.fail_on(tag);
            }
        }

        for (size_t e = 0; e < g.edge_count(); ++e) {
            BlowUpResult b = blow_up(g, e);
            blow_up_shape.cases += 1;
            bool ok = b.graph.genus() == g.genus() &&
                      b.graph.vertex_count() == g.vertex_count() + 1 &&
                      b.graph.edge_count() == g.edge_count() + 1 &&
                      (!g.is_stable() || b.graph.is_quasistable());
            if (!ok) blow_up_shape.fail_on(tag);
        }
    }

    return {weight_sum.done("weight-sum"),
            adjunction.done("subcurve-adjunction"),
            positive_weight.done("subcurve-weight-sign"),
            tail_split.done("tail-genus-split"),
            trichotomy.done("tail-trichotomy"),
            twister_zero.done("twister-degree-zero"),
            order_vs_trees.done("group-order-vs-trees"),
            reduction.done("reduction-class-invariance"),
            bridge_side.done("bridge-avoidance-sides"),
            blow_up_shape.done("blow-up-shape")};
}

bool suite_passed(const std::vector<SuiteCheck>& checks) {
    return std::all_of(checks.begin(), checks.end(), [](const SuiteCheck& c) { return c.pass; });
}

}  // namespace abelgraph
