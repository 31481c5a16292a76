#include "abelgraph/json_io.hpp"

#include <algorithm>

#include "abelgraph/lattice.hpp"

namespace abelgraph {

namespace {

const Json& expect_object(const Json& j, const char* what) {
    if (!j.is_object()) fail(ErrorCode::ParseError, std::string(what) + " must be an object");
    return j;
}

const Json& expect_array(const Json& j, const char* what) {
    if (!j.is_array()) fail(ErrorCode::ParseError, std::string(what) + " must be an array");
    return j;
}

const Json& field(const Json& j, const char* key, const char* what) {
    auto it = j.find(key);
    if (it == j.end())
        fail(ErrorCode::ParseError, std::string(what) + " is missing the key \"" + key + "\"");
    return *it;
}

void reject_extras(const Json& j, std::initializer_list<const char*> keys, const char* what) {
    for (const auto& [key, value] : j.items()) {
        bool known = std::any_of(keys.begin(), keys.end(),
                                 [&](const char* k) { return key == k; });
        if (!known)
            fail(ErrorCode::ParseError, std::string(what) + " has an unknown key \"" + key + "\"");
    }
}

long long expect_integer(const Json& j, const char* what) {
    if (!j.is_number_integer())
        fail(ErrorCode::ParseError, std::string(what) + " must be an integer");
    return j.get<long long>();
}

std::string expect_string(const Json& j, const char* what) {
    if (!j.is_string()) fail(ErrorCode::ParseError, std::string(what) + " must be a string");
    return j.get<std::string>();
}

}  // namespace

DualGraph graph_from_json(const Json& j) {
    expect_object(j, "graph");
    reject_extras(j, {"vertices", "edges"}, "graph");
    const Json& jv = expect_array(field(j, "vertices", "graph"), "\"vertices\"");
    const Json& je = expect_array(field(j, "edges", "graph"), "\"edges\"");

    std::vector<VertexSpec> vs;
    for (const Json& v : jv) {
        expect_object(v, "vertex");
        reject_extras(v, {"id", "genus"}, "vertex");
        long long genus = expect_integer(field(v, "genus", "vertex"), "vertex genus");
        if (genus < 0 || genus > 1'000'000)
            fail(ErrorCode::ParseError, "vertex genus out of range");
        vs.push_back({expect_string(field(v, "id", "vertex"), "vertex id"),
                      static_cast<int>(genus)});
    }

    std::vector<EdgeSpec> es;
    for (const Json& e : je) {
        expect_object(e, "edge");
        reject_extras(e, {"id", "ends"}, "edge");
        const Json& ends = expect_array(field(e, "ends", "edge"), "edge \"ends\"");
        if (ends.size() != 2)
            fail(ErrorCode::ParseError, "edge \"ends\" must list exactly two components");
        es.push_back({expect_string(field(e, "id", "edge"), "edge id"),
                      expect_string(ends[0], "edge endpoint"),
                      expect_string(ends[1], "edge endpoint")});
    }
    return DualGraph(std::move(vs), std::move(es));
}

DualGraph parse_graph(const std::string& text) {
    Json j = Json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) fail(ErrorCode::ParseError, "input is not valid JSON");
    return graph_from_json(j);
}

Json graph_to_json(const DualGraph& g) {
    Json jv = Json::array();
    for (const Vertex& v : g.vertices()) jv.push_back({{"id", v.id}, {"genus", v.genus}});
    Json je = Json::array();
    for (const Edge& e : g.edges()) {
        std::string a = g.vertex(e.a).id, b = g.vertex(e.b).id;
        je.push_back({{"id", e.id}, {"ends", Json::array({a, b})}});
    }
    return Json{{"vertices", jv}, {"edges", je}};
}

std::string serialize_graph(const DualGraph& g) { return dump_report(graph_to_json(g)); }

Multidegree multidegree_from_json(const DualGraph& g, const Json& j) {
    expect_object(j, "multidegree");
    reject_extras(j, {"values"}, "multidegree");
    const Json& values = expect_object(field(j, "values", "multidegree"), "\"values\"");

    Multidegree out = Multidegree::zeros(g.vertex_count());
    std::vector<char> seen(g.vertex_count(), 0);
    for (const auto& [key, value] : values.items()) {
        int v = g.find_vertex(key);
        if (v < 0) fail(ErrorCode::UnknownVertex, "multidegree names unknown component " + key);
        seen[v] = 1;
        out[v] = expect_integer(value, "multidegree entry");
    }
    for (size_t v = 0; v < g.vertex_count(); ++v)
        if (!seen[v])
            fail(ErrorCode::IndexMismatch,
                 "multidegree is missing component " + g.vertex(v).id);
    return out;
}

Json degree_map(const DualGraph& g, const Multidegree& m) {
    check_host(g, m);
    Json out = Json::object();
    for (size_t v = 0; v < g.vertex_count(); ++v) out[g.vertex(v).id] = m[v];
    return out;
}

Json multidegree_to_json(const DualGraph& g, const Multidegree& m) {
    return Json{{"values", degree_map(g, m)}};
}

Json big_to_json(const BigInt& v) {
    static const BigInt lo = std::numeric_limits<long long>::min();
    static const BigInt hi = std::numeric_limits<long long>::max();
    if (v >= lo && v <= hi) return Json(v.convert_to<long long>());
    return Json(v.str());
}

std::string format_rational(const Rational& q) {
    std::string s = std::to_string(q.numerator());
    if (q.denominator() != 1) s += "/" + std::to_string(q.denominator());
    return s;
}

Json class_group_to_json(const DualGraph& g) {
    ClassGroupInfo info = class_group(g);
    BigInt trees = spanning_tree_count(g);
    require_invariant(info.order == trees,
                      "group order and spanning tree count must agree");
    Json factors = Json::array();
    for (const BigInt& f : info.invariant_factors) factors.push_back(big_to_json(f));
    return Json{{"invariant_factors", factors},
                {"order", big_to_json(info.order)},
                {"spanning_trees", big_to_json(trees)}};
}

Json balanced_to_json(const DualGraph& g, const BalancedSet& bs, const GeneralityReport* gen) {
    Json b = Json::array();
    for (const Multidegree& m : bs.balanced) b.push_back(degree_map(g, m));
    Json bt = Json::array();
    for (const Multidegree& m : bs.stably_balanced) bt.push_back(degree_map(g, m));
    Json out{{"d", bs.d}, {"B", b}, {"B_tilde", bt}};
    if (gen != nullptr) {
        out["d_general"] = gen->d_general;
        out["witness"] = gen->witness ? degree_map(g, *gen->witness) : Json(nullptr);
    }
    return out;
}

Json abel_image_to_json(const AbelImage& img) {
    Json host;
    if (img.blown_up)
        host = Json{{"kind", "blowup"}, {"edge", img.node_edge}};
    else
        host = Json{{"kind", "stable"}};

    Json pieces = Json::array();
    for (const ImagePiece& piece : img.pieces) {
        Json vertices = Json::array();
        for (size_t v = 0; v < img.host.vertex_count(); ++v)
            if ((piece.mask >> v) & 1u) vertices.push_back(img.host.vertex(v).id);
        Json divisor = Json::array();
        for (const DivisorTerm& t : piece.divisor)
            divisor.push_back(Json::array({t.point, t.coeff}));
        pieces.push_back({{"vertices", vertices}, {"divisor", divisor}});
    }

    return Json{{"host", host},
                {"multidegree", degree_map(img.host, img.multidegree)},
                {"boundary", img.boundary},
                {"one_general", img.one_general},
                {"cut_nodes", img.cut_nodes},
                {"pieces", pieces}};
}

Json fibers_to_json(const FiberPartition& fibers) {
    Json classes = Json::array();
    for (const FiberClass& c : fibers.classes)
        classes.push_back({{"components", c.components}, {"nodes", c.nodes}});
    return Json{{"classes", classes}};
}

Json vine_to_json(const DualGraph& g, long long d, std::optional<long long> a0) {
    VineInfo info = vine_info(g, d);
    Json r = Json::array();
    for (long long a = 0; a <= d; ++a) r.push_back(vine_r(g, d, a));

    VineBalanced vb = bvine_set(g, d);
    Json set = Json::array();
    for (const Multidegree& m : vb.set) set.push_back(degree_map(g, m));

    Json out{{"d", d},
             {"delta", info.delta},
             {"m", info.m},
             {"m_exact", format_rational(info.lower_exact)},
             {"strict", info.strict},
             {"r", r},
             {"Bvine", set},
             {"equals_balanced", vb.equals_balanced},
             {"d_general", is_d_general(g, d).d_general}};
    if (a0) {
        out["a0"] = *a0;
        out["multidegree"] = degree_map(g, vine_abel_multidegree(g, d, *a0));
    }
    return out;
}

Json analysis_to_json(const DualGraph& g, const std::vector<long long>& degrees, size_t base) {
    if (g.genus() < 2) fail(ErrorCode::GenusTooSmall, "analysis needs genus at least 2");
    if (base >= g.vertex_count()) fail(ErrorCode::UnknownVertex, "base vertex out of range");

    Json weights = Json::object();
    for (size_t v = 0; v < g.vertex_count(); ++v)
        weights[g.vertex(v).id] = g.vertex_weight(v);
    Json summary{{"components", g.vertex_count()},
                 {"nodes", g.edge_count()},
                 {"genus", g.genus()},
                 {"stability", stability_name(g.stability())},
                 {"weights", weights}};

    Json jtails = Json::array();
    for (const Tail& t : tails(g)) {
        Subcurve side(g, t.mask);
        jtails.push_back({{"node", g.edge(t.bridge).id},
                          {"side", side.vertex_ids()},
                          {"genus", t.genus},
                          {"size", tail_size_class_name(t.size_class)}});
    }
    // On hosts that are only quasistable the family can be ambiguous when
    // several nodes halve the genus; report that instead of a list.
    Json jfamily;
    try {
        jfamily = Json::array();
        for (const Tail& t : small_tail_set(g)) {
            Subcurve side(g, t.mask);
            jfamily.push_back({{"node", g.edge(t.bridge).id},
                               {"side", side.vertex_ids()},
                               {"genus", t.genus}});
        }
    } catch (const Error& e) {
        if (e.code() != ErrorCode::MultipleHalfNodes) throw;
        jfamily = Json{{"reason", e.what()}};
    }

    Json lines = Json::array();
    for (size_t v : separating_line_vertices(g)) lines.push_back(g.vertex(v).id);
    Json trees = Json::array();
    for (const Subcurve& tree : separating_trees_of_lines(g)) trees.push_back(tree.vertex_ids());

    Json out{{"graph", summary},
             {"class_group", class_group_to_json(g)},
             {"tails", jtails},
             {"tail_family", jfamily},
             {"separating_lines", lines},
             {"separating_trees", trees}};

    if (g.is_quasistable()) {
        Json per_degree = Json::object();
        for (long long d : degrees) {
            BalancedSet bs = enumerate_balanced(g, d);
            if (g.is_stable()) {
                GeneralityReport gen = is_d_general(g, d);
                Json entry = balanced_to_json(g, bs, &gen);
                ClassMapReport cm = class_map_analysis(g, d, base);
                Json classes = Json::array();
                for (const ClassMapFiber& fiber : cm.fibers) {
                    Json members = Json::array();
                    for (const Multidegree& m : fiber.members) members.push_back(degree_map(g, m));
                    classes.push_back({{"representative", degree_map(g, fiber.representative)},
                                       {"members", members}});
                }
                entry["classes"] = classes;
                per_degree[std::to_string(d)] = entry;
            } else {
                per_degree[std::to_string(d)] = balanced_to_json(g, bs, nullptr);
            }
        }
        out["balanced"] = per_degree;
    } else {
        out["balanced"] = Json{{"reason", "host is not quasistable"}};
    }

    if (g.is_stable()) {
        bool general = is_d_general(g, 1).d_general;
        Json components = Json::object();
        for (size_t v = 0; v < g.vertex_count(); ++v)
            components[g.vertex(v).id] = degree_map(g, abel_multidegree(g, v));
        Json nodes = Json::object();
        for (size_t e = 0; e < g.edge_count(); ++e) {
            AbelImage img = abel_image(g, PointOnCurve::at_node(g.edge(e).id));
            nodes[g.edge(e).id] = Json{{"boundary", img.boundary},
                                       {"host", img.blown_up ? "blowup" : "stable"},
                                       {"multidegree", degree_map(img.host, img.multidegree)}};
        }
        out["abel"] = Json{{"one_general", general},
                           {"components", components},
                           {"nodes", nodes}};
        if (general)
            out["fibers"] = fibers_to_json(abel_fibers(g));
        else {
            std::optional<Subcurve> w = sigma1_witness(g);
            require_invariant(w.has_value(), "a non-general degree 1 needs a witness subcurve");
            out["fibers"] = Json{{"reason", "degree 1 is not general"},
                                 {"witness_subcurve", w->vertex_ids()}};
        }
    } else {
        out["abel"] = Json{{"reason", "host is not stable"}};
    }
    return out;
}

std::string dump_report(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace abelgraph
