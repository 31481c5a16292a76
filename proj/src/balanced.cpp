#include "abelgraph/balanced.hpp"

#include <algorithm>
#include <numeric>

#include "abelgraph/tails.hpp"

namespace abelgraph {

namespace {

void require_semistable(const DualGraph& g) {
    if (!g.is_semistable()) fail(ErrorCode::NotSemistable, "host graph must be semistable");
    if (g.genus() < 2) fail(ErrorCode::GenusTooSmall, "host graph must have genus at least 2");
}

void require_quasistable(const DualGraph& g) {
    if (!g.is_quasistable()) fail(ErrorCode::NotQuasistable, "host graph must be quasistable");
    if (g.genus() < 2) fail(ErrorCode::GenusTooSmall, "host graph must have genus at least 2");
}

void require_stable(const DualGraph& g) {
    if (!g.is_stable()) fail(ErrorCode::NotStable, "host graph must be stable");
    if (g.genus() < 2) fail(ErrorCode::GenusTooSmall, "host graph must have genus at least 2");
}

BasicBounds bounds_of(const DualGraph& g, long long weight, long long k,
                      bool single_exceptional, long long d) {
    Rational upper = Rational(d * weight, 2 * g.genus() - 2) + Rational(k, 2);
    Rational lower = single_exceptional ? Rational(0) : upper - k;
    return {lower, upper};
}

}  // namespace

BasicBounds basic_bounds(const Subcurve& z, long long d) {
    const DualGraph& g = z.host();
    require_semistable(g);
    if (!z.connected()) fail(ErrorCode::NotConnected, "degree window needs a connected subcurve");
    if (!z.proper()) fail(ErrorCode::NotProper, "degree window needs a proper subcurve");
    bool single_exceptional = z.size() == 1 && g.is_exceptional(z.vertex_indices()[0]);
    return bounds_of(g, z.weight(), z.k(), single_exceptional, d);
}

BalanceChecker::BalanceChecker(const DualGraph& g, long long d) : g_(&g), d_(d) {
    require_semistable(g);
    boxes_.assign(g.vertex_count(), {0, 0});
    for (size_t v = 0; v < g.vertex_count(); ++v)
        if (g.is_exceptional(v)) exceptional_.push_back(v);

    for (const Subcurve& z : connected_subcurves(g, /*proper_only=*/true)) {
        bool single_exceptional = z.size() == 1 && g.is_exceptional(z.vertex_indices()[0]);
        BasicBounds b = bounds_of(g, z.weight(), z.k(), single_exceptional, d);
        Constraint c;
        c.mask = z.mask();
        c.lower = rational_ceil(b.lower);
        c.upper = rational_floor(b.upper);
        c.lower_exact = is_integer(b.lower);
        c.rest_exceptional = true;
        for (size_t v = 0; v < g.vertex_count(); ++v)
            if (!z.contains(v) && !g.is_exceptional(v)) c.rest_exceptional = false;
        constraints_.push_back(c);
        if (z.size() == 1) boxes_[z.vertex_indices()[0]] = {c.lower, c.upper};
    }
}

std::pair<long long, long long> BalanceChecker::vertex_box(size_t v) const { return boxes_[v]; }

bool BalanceChecker::semibalanced(const Multidegree& m) const {
    check_host(*g_, m);
    if (m.total() != d_) return false;
    bool low_ok = true, high_ok = true;
    for (const Constraint& c : constraints_) {
        long long s = m.degree_on(c.mask);
        if (s < c.lower) { low_ok = false; break; }
        if (s > c.upper) high_ok = false;
    }
    // Sitting above every lower bound forces sitting below every upper
    // bound; a candidate failing only upward would break that equivalence.
    require_invariant(!(low_ok && !high_ok),
                      "lower degree bounds must already enforce the upper ones");
    return low_ok;
}

bool BalanceChecker::balanced(const Multidegree& m) const {
    if (!semibalanced(m)) return false;
    for (size_t v : exceptional_)
        if (m[v] != 1) return false;
    return true;
}

bool BalanceChecker::stably_balanced(const Multidegree& m) const {
    if (!balanced(m)) return false;
    for (const Constraint& c : constraints_) {
        if (!c.lower_exact) continue;
        if (m.degree_on(c.mask) == c.lower && !c.rest_exceptional) return false;
    }
    return true;
}

bool is_semibalanced(const DualGraph& g, const Multidegree& m) {
    return BalanceChecker(g, m.total()).semibalanced(m);
}

bool is_balanced(const DualGraph& g, const Multidegree& m) {
    return BalanceChecker(g, m.total()).balanced(m);
}

bool is_stably_balanced(const DualGraph& g, const Multidegree& m) {
    return BalanceChecker(g, m.total()).stably_balanced(m);
}

namespace {

void enumerate_boxes(const BalanceChecker& checker, const std::vector<long long>& lo_suffix,
                     const std::vector<long long>& hi_suffix, size_t v, long long remaining,
                     Multidegree& current, BalancedSet& out) {
    const size_t n = current.size();
    if (v == n) {
        if (checker.balanced(current)) {
            out.balanced.push_back(current);
            if (checker.stably_balanced(current)) out.stably_balanced.push_back(current);
        }
        return;
    }
    auto [lo, hi] = checker.vertex_box(v);
    for (long long x = lo; x <= hi; ++x) {
        long long rest = remaining - x;
        if (rest < lo_suffix[v + 1] || rest > hi_suffix[v + 1]) continue;
        current[v] = x;
        enumerate_boxes(checker, lo_suffix, hi_suffix, v + 1, rest, current, out);
    }
    current[v] = 0;
}

}  // namespace

BalancedSet enumerate_balanced(const DualGraph& g, long long d) {
    require_quasistable(g);
    BalancedSet out;
    out.d = d;
    if (g.vertex_count() == 1) {
        out.balanced.push_back(Multidegree(std::vector<long long>{d}));
        out.stably_balanced = out.balanced;
        return out;
    }

    BalanceChecker checker(g, d);
    const size_t n = g.vertex_count();
    std::vector<long long> lo_suffix(n + 1, 0), hi_suffix(n + 1, 0);
    for (size_t v = n; v-- > 0;) {
        auto [lo, hi] = checker.vertex_box(v);
        lo_suffix[v] = lo_suffix[v + 1] + lo;
        hi_suffix[v] = hi_suffix[v + 1] + hi;
    }
    Multidegree current = Multidegree::zeros(n);
    enumerate_boxes(checker, lo_suffix, hi_suffix, 0, d, current, out);
    return out;
}

namespace {

ClassMapReport analyze_class_map(const DualGraph& g, const std::vector<Multidegree>& balanced,
                                 size_t base = 0) {
    ClassMapReport report;
    report.order = class_group(g).order;

    DharReducer reducer(g, base);
    std::map<std::vector<long long>, std::vector<Multidegree>> fibers;
    for (const Multidegree& b : balanced) {
        std::vector<long long> rep = b.values;
        reducer.reduce(rep);
        fibers[rep].push_back(b);
    }

    report.surjective = BigInt(fibers.size()) == report.order;
    report.injective = true;
    for (auto& [rep, members] : fibers) {
        if (members.size() != 1) report.injective = false;
        report.fibers.push_back({Multidegree(rep), members});
    }
    return report;
}

}  // namespace

ClassMapReport class_map_analysis(const DualGraph& g, long long d, size_t base) {
    require_stable(g);
    if (base >= g.vertex_count()) fail(ErrorCode::UnknownVertex, "base vertex out of range");
    return analyze_class_map(g, enumerate_balanced(g, d).balanced, base);
}

GeneralityReport is_d_general(const DualGraph& g, long long d) {
    require_stable(g);
    BalancedSet bs = enumerate_balanced(g, d);
    ClassMapReport analysis = analyze_class_map(g, bs.balanced);
    require_invariant(analysis.surjective, "balanced multidegrees must reach every class");

    bool bijective = analysis.surjective && analysis.injective;
    bool all_stable = bs.stably_balanced.size() == bs.balanced.size();
    require_invariant(bijective == all_stable,
                      "unique representatives and stably balanced sets must agree");

    GeneralityReport out;
    out.d_general = bijective;
    if (!out.d_general) {
        // Lexicographically first balanced multidegree that is not stably
        // balanced. Both lists are sorted, so scan in lockstep.
        size_t j = 0;
        for (const Multidegree& b : bs.balanced) {
            if (j < bs.stably_balanced.size() && bs.stably_balanced[j] == b) {
                ++j;
                continue;
            }
            out.witness = b;
            break;
        }
        require_invariant(out.witness.has_value(), "non-general degree needs a witness");
    }
    return out;
}

bool arithmetic_generality_criterion(long long g, long long d) {
    if (g < 2) fail(ErrorCode::GenusTooSmall, "criterion applies from genus 2 on");
    long long a = d - g + 1;
    if (a < 0) a = -a;
    return std::gcd(a, 2 * g - 2) == 1;
}

std::optional<Subcurve> sigma1_witness(const DualGraph& g) {
    require_stable(g);
    if (is_d_general(g, 1).d_general) return std::nullopt;
    for (const Subcurve& z : connected_subcurves(g, /*proper_only=*/true)) {
        if (z.weight() != g.genus() - 1) continue;
        if (z.k() % 2 == 0) continue;
        if (!z.complement().connected()) continue;
        return z;
    }
    require_invariant(false, "degree 1 not general, yet no odd half-weight subcurve found");
    return std::nullopt;  // unreachable
}

namespace {

std::string derived_edge_id(const std::string& e1, const std::string& e2) {
    // A blown-up edge leaves the pair stem__a / stem__b; contract back to the
    // stem. Any other pair keeps the smaller id.
    auto stem = [](const std::string& s, const char* suffix) -> std::string {
        size_t len = s.size();
        if (len >= 3 && s.compare(len - 3, 3, suffix) == 0) return s.substr(0, len - 3);
        return "";
    };
    std::string sa = stem(e1, "__a"), sb = stem(e2, "__b");
    if (!sa.empty() && sa == sb) return sa;
    sa = stem(e2, "__a");
    sb = stem(e1, "__b");
    if (!sa.empty() && sa == sb) return sa;
    return std::min(e1, e2);
}

}  // namespace

EquivalenceKey equivalence_key(const DualGraph& g, const Multidegree& m) {
    require_quasistable(g);
    check_host(g, m);
    if (!is_semibalanced(g, m))
        fail(ErrorCode::NotSemibalanced, "equivalence key needs a semibalanced multidegree");

    std::vector<char> contract(g.vertex_count(), 0);
    for (size_t v = 0; v < g.vertex_count(); ++v) {
        if (!g.is_exceptional(v)) continue;
        require_invariant(m[v] == 0 || m[v] == 1,
                          "semibalanced degrees on exceptional components are 0 or 1");
        if (m[v] == 0) contract[v] = 1;
    }

    std::vector<VertexSpec> vs;
    for (size_t v = 0; v < g.vertex_count(); ++v)
        if (!contract[v]) vs.push_back({g.vertex(v).id, g.vertex(v).genus});

    std::vector<EdgeSpec> es;
    std::vector<std::string> used_ids;
    for (size_t e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (contract[ed.a] || contract[ed.b]) continue;
        es.push_back({ed.id, g.vertex(ed.a).id, g.vertex(ed.b).id});
        used_ids.push_back(ed.id);
    }
    for (size_t v = 0; v < g.vertex_count(); ++v) {
        if (!contract[v]) continue;
        // The two edges at the contracted component merge into one edge
        // joining its neighbors (a loop when they coincide; quasistability
        // keeps those neighbors from being contracted themselves).
        std::vector<std::pair<std::string, int>> at;
        for (size_t e = 0; e < g.edge_count(); ++e) {
            const Edge& ed = g.edge(e);
            if (ed.a == static_cast<int>(v))
                at.push_back({ed.id, ed.b});
            else if (ed.b == static_cast<int>(v))
                at.push_back({ed.id, ed.a});
        }
        require_invariant(at.size() == 2, "exceptional components meet exactly two nodes");
        require_invariant(!contract[at[0].second] && !contract[at[1].second],
                          "adjacent exceptional components cannot both be contracted");
        std::string id = derived_edge_id(at[0].first, at[1].first);
        while (std::find(used_ids.begin(), used_ids.end(), id) != used_ids.end()) id += "'";
        used_ids.push_back(id);
        es.push_back({id, g.vertex(at[0].second).id, g.vertex(at[1].second).id});
    }

    EquivalenceKey key{DualGraph(vs, es), {}, {}};
    require_invariant(key.host.genus() == g.genus(), "contraction must preserve genus");
    require_invariant(key.host.is_quasistable(), "contraction must preserve quasistability");

    for (size_t v = 0; v < key.host.vertex_count(); ++v) {
        const std::string& id = key.host.vertex(v).id;
        long long deg = m[g.vertex_index(id)];
        if (key.host.is_exceptional(v)) {
            require_invariant(deg == 1, "surviving exceptional components carry degree 1");
            key.exceptional_ids.push_back(id);
        } else {
            key.degrees.push_back({id, deg});
        }
    }
    return key;
}

std::string EquivalenceKey::canonical_string() const {
    std::string s = "V";
    for (const Vertex& v : host.vertices())
        s += "|" + v.id + ":" + std::to_string(v.genus);
    s += "#E";
    for (const Edge& e : host.edges())
        s += "|" + e.id + ":" + host.vertex(e.a).id + ":" + host.vertex(e.b).id;
    s += "#D";
    for (const auto& [id, deg] : degrees) s += "|" + id + ":" + std::to_string(deg);
    s += "#X";
    for (const std::string& id : exceptional_ids) s += "|" + id;
    return s;
}

}  // namespace abelgraph
