// Command-line front end. Every subcommand reads a graph as JSON (file or
// stdin), runs one analysis, and prints a JSON report to stdout; --pretty
// switches to indented text. Exit codes: 0 success, 2 bad input, 3 broken
// theory invariant (a bug, not a usage error).

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "abelgraph/corpus.hpp"
#include "abelgraph/json_io.hpp"

namespace {

using namespace abelgraph;

std::string read_all(const std::string& path) {
    std::ostringstream ss;
    if (path.empty() || path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) fail(ErrorCode::ParseError, "cannot open " + path);
        ss << in.rdbuf();
    }
    return ss.str();
}

DualGraph load_graph(const std::string& path) { return parse_graph(read_all(path)); }

bool all_primitive(const Json& j) {
    for (const Json& item : j)
        if (!item.is_primitive()) return false;
    return true;
}

void render_text(const Json& j, std::ostream& os, int indent) {
    std::string pad(indent, ' ');
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            bool inline_value = value.is_primitive() || value.empty() ||
                                (value.is_array() && all_primitive(value));
            if (inline_value)
                os << pad << key << ": " << value.dump() << "\n";
            else {
                os << pad << key << ":\n";
                render_text(value, os, indent + 2);
            }
        }
    } else if (j.is_array()) {
        for (const Json& item : j) {
            if (item.is_primitive())
                os << pad << "- " << item.dump() << "\n";
            else {
                os << pad << "-\n";
                render_text(item, os, indent + 2);
            }
        }
    } else {
        os << pad << j.dump() << "\n";
    }
}

// Reports are built in full before anything reaches stdout, so a failure
// late in the computation never leaves a truncated document behind.
void emit(const Json& j, bool pretty) {
    if (pretty) {
        std::ostringstream os;
        render_text(j, os, 0);
        std::cout << os.str();
    } else {
        std::cout << dump_report(j);
    }
}

Json image_row(const AbelImage& img) { return abel_image_to_json(img); }

int run_corpus(const CorpusSpec& spec, const std::string& out_dir, bool pretty) {
    std::vector<DualGraph> graphs = generate_corpus(spec);

    Json files = Json::array();
    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        int width = 1;
        for (int t = spec.count; t > 10; t /= 10) ++width;
        for (size_t i = 0; i < graphs.size(); ++i) {
            std::string digits = std::to_string(i);
            std::string name =
                "graph-" + std::string(width - digits.size(), '0') + digits + ".json";
            std::ofstream out(std::filesystem::path(out_dir) / name, std::ios::binary);
            out << serialize_graph(graphs[i]);
            files.push_back(name);
        }
    }

    std::vector<SuiteCheck> checks = run_invariant_suite(graphs);
    Json jchecks = Json::array();
    for (const SuiteCheck& c : checks)
        jchecks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});

    if (!suite_passed(checks)) {
        for (const SuiteCheck& c : checks)
            if (!c.pass) std::cerr << "suite failure: " << c.name << " (" << c.detail << ")\n";
        return 3;
    }

    Json summary{{"count", static_cast<long long>(graphs.size())},
                 {"checks", jchecks},
                 {"pass", true}};
    if (!out_dir.empty()) {
        summary["out"] = out_dir;
        summary["files"] = files;
    }
    emit(summary, pretty);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    if (const char* env = std::getenv("ABELGRAPH_MAX_VERTICES")) {
        std::string s(env);
        size_t value = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec != std::errc() || ptr != s.data() + s.size() || value == 0) {
            std::cerr << "error: ABELGRAPH_MAX_VERTICES must be a positive integer\n";
            return 2;
        }
        set_enumeration_limit(value);
    }

    CLI::App app{"analyses of dual graphs of nodal curves"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "indented text instead of JSON");

    std::string graph_path = "-";
    std::vector<long long> degrees;
    std::string base_id;
    auto* analyze = app.add_subcommand("analyze", "full report on one graph");
    analyze->add_option("graph", graph_path, "graph JSON file, - for stdin");
    analyze->add_option("--degree", degrees, "total degrees for the balanced section");
    analyze->add_option("--base", base_id, "base component for class representatives");

    std::string component, label = "p", node_id;
    bool all_points = false;
    auto* abel = app.add_subcommand("abel", "image of the degree-1 map at a point");
    abel->add_option("graph", graph_path, "graph JSON file, - for stdin");
    auto* comp_opt = abel->add_option("--component", component, "smooth point on this component");
    abel->add_option("--label", label, "name for the smooth point")->needs(comp_opt);
    auto* node_opt = abel->add_option("--node", node_id, "the point is this node");
    auto* all_opt = abel->add_flag("--all", all_points, "one image per component and per node");
    comp_opt->excludes(node_opt)->excludes(all_opt);
    node_opt->excludes(all_opt);

    auto* fibers = app.add_subcommand("fibers", "partition of points by image");
    fibers->add_option("graph", graph_path, "graph JSON file, - for stdin");

    auto* class_group_cmd = app.add_subcommand("class-group", "degree class group");
    class_group_cmd->add_option("graph", graph_path, "graph JSON file, - for stdin");

    long long balanced_degree = 1;
    auto* balanced = app.add_subcommand("balanced", "balanced multidegrees of one degree");
    balanced->add_option("graph", graph_path, "graph JSON file, - for stdin");
    balanced->add_option("--degree", balanced_degree, "total degree");

    long long vine_degree = 0;
    long long vine_a0 = 0;
    auto* vine = app.add_subcommand("vine", "closed forms for two-component graphs");
    vine->add_option("graph", graph_path, "graph JSON file, - for stdin");
    vine->add_option("--degree", vine_degree, "total degree")->required();
    auto* a_opt = vine->add_option("--a", vine_a0, "points placed on the first component");

    CorpusSpec spec;
    std::string out_dir;
    auto* corpus = app.add_subcommand("corpus", "random stable graphs plus invariant suite");
    corpus->add_option("--seed", spec.seed, "generator seed");
    corpus->add_option("--count", spec.count, "number of graphs");
    corpus->add_option("--genus-min", spec.genus_min, "smallest genus");
    corpus->add_option("--genus-max", spec.genus_max, "largest genus");
    corpus->add_option("--vertices-min", spec.vertices_min, "fewest components");
    corpus->add_option("--vertices-max", spec.vertices_max, "most components");
    corpus->add_option("--edge-cap", spec.edge_cap, "most nodes per graph");
    corpus->add_option("--loop-prob", spec.loop_probability, "chance an extra node is a loop");
    corpus->add_option("--out", out_dir, "directory for the graph files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(analyze)) {
            DualGraph g = load_graph(graph_path);
            if (degrees.empty()) degrees.push_back(1);
            size_t base = base_id.empty() ? 0 : g.vertex_index(base_id);
            emit(analysis_to_json(g, degrees, base), pretty);
        } else if (app.got_subcommand(abel)) {
            DualGraph g = load_graph(graph_path);
            if (all_points) {
                Json components = Json::object();
                for (size_t v = 0; v < g.vertex_count(); ++v) {
                    PointOnCurve p = PointOnCurve::smooth_point(g.vertex(v).id, label);
                    components[g.vertex(v).id] = image_row(abel_image(g, p));
                }
                Json nodes = Json::object();
                for (size_t e = 0; e < g.edge_count(); ++e) {
                    PointOnCurve p = PointOnCurve::at_node(g.edge(e).id);
                    nodes[g.edge(e).id] = image_row(abel_image(g, p));
                }
                emit(Json{{"components", components}, {"nodes", nodes}}, pretty);
            } else if (!node_id.empty()) {
                emit(image_row(abel_image(g, PointOnCurve::at_node(node_id))), pretty);
            } else if (!component.empty()) {
                PointOnCurve p = PointOnCurve::smooth_point(component, label);
                emit(image_row(abel_image(g, p)), pretty);
            } else {
                fail(ErrorCode::ParseError, "pick a point: --component, --node or --all");
            }
        } else if (app.got_subcommand(fibers)) {
            emit(fibers_to_json(abel_fibers(load_graph(graph_path))), pretty);
        } else if (app.got_subcommand(class_group_cmd)) {
            emit(class_group_to_json(load_graph(graph_path)), pretty);
        } else if (app.got_subcommand(balanced)) {
            DualGraph g = load_graph(graph_path);
            BalancedSet bs = enumerate_balanced(g, balanced_degree);
            if (g.is_stable()) {
                GeneralityReport gen = is_d_general(g, balanced_degree);
                emit(balanced_to_json(g, bs, &gen), pretty);
            } else {
                emit(balanced_to_json(g, bs, nullptr), pretty);
            }
        } else if (app.got_subcommand(vine)) {
            DualGraph g = load_graph(graph_path);
            std::optional<long long> a0;
            if (a_opt->count() > 0) a0 = vine_a0;
            emit(vine_to_json(g, vine_degree, a0), pretty);
        } else if (app.got_subcommand(corpus)) {
            return run_corpus(spec, out_dir, pretty);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return is_invariant_violation(e.code()) ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
