#include <doctest.h>

#include "abelgraph/dual_graph.hpp"
#include "checks.hpp"
#include "fixtures.hpp"

using namespace abelgraph;
using checks::thrown_code;

TEST_CASE("vertices and edges are stored sorted by id") {
    DualGraph g({{"b", 1}, {"a", 2}}, {{"f", "b", "a"}, {"e", "a", "b"}});
    CHECK(g.vertex(0).id == "a");
    CHECK(g.vertex(1).id == "b");
    CHECK(g.edge(0).id == "e");
    CHECK(g.edge(1).id == "f");
    CHECK(g.vertex_index("a") == 0);
    CHECK(g.edge_index("f") == 1);
    CHECK(g.find_vertex("zzz") == -1);
    CHECK(g.find_edge("zzz") == -1);
    CHECK(g.edge(0).a == 0);  // endpoint indices normalized a <= b
    CHECK(g.edge(0).b == 1);
}

TEST_CASE("construction rejects malformed input") {
    CHECK(thrown_code([] { DualGraph({}, {}); }) == ErrorCode::ParseError);
    CHECK(thrown_code([] {
              DualGraph({{"a", 0}, {"a", 1}}, {});
          }) == ErrorCode::DuplicateId);
    CHECK(thrown_code([] {
              DualGraph({{"a", 0}}, {{"e", "a", "a"}, {"e", "a", "a"}});
          }) == ErrorCode::DuplicateId);
    CHECK(thrown_code([] {
              DualGraph({{"a", 0}}, {{"e", "a", "missing"}});
          }) == ErrorCode::UnknownVertex);
    CHECK(thrown_code([] {
              DualGraph({{"a", 1}, {"b", 1}}, {});
          }) == ErrorCode::Disconnected);
    CHECK(thrown_code([] { DualGraph({{"a", -1}}, {}); }) == ErrorCode::ParseError);
}

TEST_CASE("genus combines vertex genera and independent cycles") {
    CHECK(fixtures::single_genus2().genus() == 2);
    CHECK(fixtures::theta().genus() == 2);
    CHECK(fixtures::bridged_12().genus() == 3);
    CHECK(fixtures::double_12().genus() == 4);
    CHECK(fixtures::banana4().genus() == 3);
    CHECK(fixtures::star3().genus() == 3);
    CHECK(fixtures::looped().genus() == 3);
}

TEST_CASE("valence, loops and weights") {
    DualGraph g = fixtures::looped();
    CHECK(g.valence(0) == 2);
    CHECK(g.loops_at(0) == 1);
    CHECK(g.vertex_weight(0) == 4);  // 2g - 2 for genus 3

    DualGraph star = fixtures::star3();
    size_t x = star.vertex_index("X");
    CHECK(star.valence(x) == 3);
    CHECK(star.vertex_weight(x) == 1);
    CHECK(star.multiplicity(x, star.vertex_index("A")) == 1);
    CHECK(star.multiplicity(star.vertex_index("A"), star.vertex_index("B")) == 0);

    long long total = 0;
    for (size_t v = 0; v < star.vertex_count(); ++v) total += star.vertex_weight(v);
    CHECK(total == 2 * star.genus() - 2);
}

TEST_CASE("stability classification") {
    CHECK(fixtures::theta().stability() == Stability::stable);
    CHECK(fixtures::single_genus2().is_stable());
    CHECK(fixtures::dumbbell().is_stable());

    DualGraph blown = fixtures::dumbbell_blown();
    CHECK(blown.stability() == Stability::quasistable_not_stable);
    CHECK(blown.is_quasistable());
    CHECK(blown.is_semistable());
    CHECK_FALSE(blown.is_stable());
    CHECK(blown.is_exceptional(blown.vertex_index("E")));

    // Two adjacent exceptional components: semistable only.
    DualGraph ring({{"E1", 0}, {"E2", 0}}, {{"f1", "E1", "E2"}, {"f2", "E1", "E2"}});
    CHECK(ring.stability() == Stability::semistable_not_quasistable);
    CHECK_FALSE(ring.is_quasistable());

    // Rational component meeting the curve in a single node.
    DualGraph leaf({{"A", 0}, {"B", 2}}, {{"e", "A", "B"}});
    CHECK(leaf.stability() == Stability::not_semistable);
    CHECK_FALSE(leaf.is_semistable());
}

TEST_CASE("subcurve boundary, weight and genus") {
    DualGraph g = fixtures::star3();
    Subcurve xa = Subcurve::of_ids(g, {"X", "A"});
    CHECK(xa.k() == 2);
    CHECK(xa.connected());
    CHECK(xa.genus() == 1);
    CHECK(xa.weight() == 2 * xa.genus() - 2 + xa.k());
    CHECK(xa.internal_edges() == 1);

    Subcurve rest = xa.complement();
    CHECK(rest.k() == 2);
    CHECK_FALSE(rest.connected());
    CHECK(thrown_code([&] { rest.genus(); }) == ErrorCode::NotConnected);

    DualGraph lg = fixtures::looped();
    Subcurve loopy(lg, 1);
    CHECK(loopy.k() == 0);
    CHECK(loopy.internal_edges() == 1);
    CHECK(loopy.genus() == 3);
    CHECK_FALSE(loopy.proper());

    CHECK(thrown_code([&] { Subcurve(g, 0); }) == ErrorCode::EmptySet);
    CHECK(thrown_code([&] { Subcurve::of_ids(g, {"nope"}); }) == ErrorCode::UnknownVertex);
}

TEST_CASE("connected subcurve enumeration is complete and ordered") {
    DualGraph g = fixtures::star3();
    std::vector<Subcurve> proper = connected_subcurves(g, true);
    CHECK(proper.size() == 10);  // subsets containing X plus lone leaves, minus the whole
    std::vector<Subcurve> all = connected_subcurves(g, false);
    CHECK(all.size() == 11);

    for (const Subcurve& z : proper) {
        CHECK(z.connected());
        CHECK(z.proper());
    }

    // Lexicographic in the sorted vertex-id tuples, so {A,B,X} sorts before
    // the shorter {A,X}.
    CHECK(proper[0].vertex_ids() == std::vector<std::string>{"A"});
    CHECK(proper[1].vertex_ids() == std::vector<std::string>{"A", "B", "X"});
    CHECK(proper[2].vertex_ids() == std::vector<std::string>{"A", "C", "X"});
    CHECK(proper[3].vertex_ids() == std::vector<std::string>{"A", "X"});

    DualGraph th = fixtures::theta();
    CHECK(connected_subcurves(th, true).size() == 2);
    DualGraph lone = fixtures::single_genus2();
    CHECK(connected_subcurves(lone, true).empty());
}

TEST_CASE("enumeration limit guards subset walks") {
    size_t before = enumeration_limit();
    set_enumeration_limit(3);
    CHECK(thrown_code([] { connected_subcurves(fixtures::star3(), true); }) ==
          ErrorCode::LimitExceeded);
    set_enumeration_limit(before);
    CHECK(thrown_code([] { set_enumeration_limit(0); }) == ErrorCode::SpecError);
    CHECK(thrown_code([] { set_enumeration_limit(64); }) == ErrorCode::SpecError);
}

TEST_CASE("mask connectivity helper") {
    DualGraph g = fixtures::star3();
    uint64_t a = 1ull << g.vertex_index("A");
    uint64_t b = 1ull << g.vertex_index("B");
    uint64_t x = 1ull << g.vertex_index("X");
    CHECK(mask_connected(g, a | x));
    CHECK_FALSE(mask_connected(g, a | b));
    CHECK(mask_connected(g, a | b | x));
}
