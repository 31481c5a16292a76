#include <doctest.h>

#include <algorithm>

#include "abelgraph/abel.hpp"
#include "checks.hpp"
#include "fixtures.hpp"

using namespace abelgraph;
using checks::thrown_code;

namespace {

Multidegree md(std::vector<long long> v) { return Multidegree(std::move(v)); }

PointOnCurve at(const std::string& component, const std::string& label = "p") {
    return PointOnCurve::smooth_point(component, label);
}

PointOnCurve node(const std::string& edge) { return PointOnCurve::at_node(edge); }

std::vector<std::string> piece_ids(const AbelImage& img, size_t i) {
    return Subcurve(img.host, img.pieces[i].mask).vertex_ids();
}

}  // namespace

TEST_CASE("point validation") {
    DualGraph g = fixtures::bridged_12();
    validate_point(g, at("C1"));
    validate_point(g, node("e1"));
    CHECK(thrown_code([&] { validate_point(g, at("C9")); }) == ErrorCode::UnknownPoint);
    CHECK(thrown_code([&] { validate_point(g, node("e9")); }) == ErrorCode::UnknownPoint);
    CHECK(thrown_code([&] { validate_point(g, at("C1", "")); }) == ErrorCode::ParseError);
    CHECK(thrown_code([&] { validate_point(g, at("C1", "e1")); }) == ErrorCode::ParseError);
}

TEST_CASE("membership of points in tails") {
    DualGraph g = fixtures::bridged_12();
    std::vector<Tail> ts = tails(g);
    REQUIRE(ts.size() == 2);
    const Tail& side1 = ts[0];  // {C1}
    const Tail& side2 = ts[1];  // {C2}

    CHECK(point_in_tail(side1, at("C1")));
    CHECK_FALSE(point_in_tail(side1, at("C2")));
    // The generating node lies on both sides at once.
    CHECK(point_in_tail(side1, node("e1")));
    CHECK(point_in_tail(side2, node("e1")));

    DualGraph star = fixtures::star3();
    std::vector<Tail> st = tails(star);  // pairs per bridge, small side first
    CHECK(point_in_tail(st[1], node("eB")));       // both endpoints inside {B,C,X}
    CHECK_FALSE(point_in_tail(st[0], node("eB")));
}

TEST_CASE("family members through a point form a nested chain") {
    DualGraph g = fixtures::caterpillar();

    std::vector<Tail> chain = small_tails_through(g, at("A1"));
    REQUIRE(chain.size() == 2);
    CHECK(Subcurve(g, chain[0].mask).vertex_ids() == std::vector<std::string>{"A1"});
    CHECK(Subcurve(g, chain[1].mask).vertex_ids() == std::vector<std::string>{"A1", "A2", "X"});

    CHECK(small_tails_through(g, at("Y")).empty());
    CHECK(small_tails_through(g, node("m")).size() == 1);

    DualGraph star = fixtures::star3();
    CHECK(small_tails_through(star, at("X")).empty());
    CHECK(small_tails_through(star, at("A")).size() == 1);
}

TEST_CASE("multidegree of the degree-1 map") {
    DualGraph g = fixtures::bridged_12();
    CHECK(abel_multidegree(g, at("C1")) == md({0, 1}));
    CHECK(abel_multidegree(g, at("C2")) == md({0, 1}));
    CHECK(abel_multidegree(g, size_t{0}) == md({0, 1}));

    DualGraph theta = fixtures::theta();
    CHECK(abel_multidegree(theta, at("C1")) == md({1, 0}));
    CHECK(abel_multidegree(theta, at("C2")) == md({0, 1}));

    DualGraph star = fixtures::star3();
    Multidegree ex = md({0, 0, 0, 1});  // all of the curve maps through the center
    CHECK(abel_multidegree(star, at("A")) == ex);
    CHECK(abel_multidegree(star, at("X")) == ex);

    DualGraph cat = fixtures::caterpillar();
    CHECK(abel_multidegree(cat, at("A1")) == md({0, 0, 0, 0, 0, 1}));  // lands on Y

    CHECK(thrown_code([&] { abel_multidegree(g, node("e1")); }) == ErrorCode::SpecError);
    CHECK(thrown_code([&] { abel_multidegree(g, size_t{7}); }) == ErrorCode::UnknownVertex);
    CHECK(thrown_code([] {
              abel_multidegree(fixtures::dumbbell_blown(), size_t{0});
          }) == ErrorCode::NotStable);
}

TEST_CASE("image at a smooth point with no family member") {
    DualGraph g = fixtures::theta();
    AbelImage img = abel_image(g, at("C2"));
    CHECK_FALSE(img.blown_up);
    CHECK_FALSE(img.boundary);
    CHECK_FALSE(img.one_general);
    CHECK(img.multidegree == md({0, 1}));
    CHECK(img.cut_nodes.empty());
    REQUIRE(img.pieces.size() == 1);
    CHECK(piece_ids(img, 0) == std::vector<std::string>{"C1", "C2"});
    REQUIRE(img.pieces[0].divisor.size() == 1);
    CHECK(img.pieces[0].divisor[0].point == "p");
    CHECK(img.pieces[0].divisor[0].coeff == 1);
    CHECK(img.host.vertex(img.pieces[0].divisor[0].vertex).id == "C2");
}

TEST_CASE("image at a separating node") {
    DualGraph g = fixtures::bridged_12();
    AbelImage img = abel_image(g, node("e1"));
    CHECK_FALSE(img.blown_up);
    CHECK_FALSE(img.boundary);
    CHECK(img.one_general);
    CHECK(img.node_edge == "e1");
    CHECK(img.multidegree == md({0, 1}));
    CHECK(img.cut_nodes == std::vector<std::string>{"e1"});
    REQUIRE(img.pieces.size() == 2);
    CHECK(piece_ids(img, 0) == std::vector<std::string>{"C2"});
    REQUIRE(img.pieces[0].divisor.size() == 1);
    CHECK(img.pieces[0].divisor[0].point == "e1");
    CHECK(img.host.vertex(img.pieces[0].divisor[0].vertex).id == "C2");
    CHECK(piece_ids(img, 1) == std::vector<std::string>{"C1"});
    CHECK(img.pieces[1].divisor.empty());
}

TEST_CASE("image at a smooth point through a chain of length two") {
    DualGraph g = fixtures::caterpillar();
    AbelImage img = abel_image(g, at("A1"));
    CHECK(img.multidegree == md({0, 0, 0, 0, 0, 1}));
    CHECK(img.cut_nodes == std::vector<std::string>{"m", "a1"});
    REQUIRE(img.pieces.size() == 3);
    CHECK(piece_ids(img, 0) == std::vector<std::string>{"B1", "B2", "Y"});
    CHECK(piece_ids(img, 1) == std::vector<std::string>{"A2", "X"});
    CHECK(piece_ids(img, 2) == std::vector<std::string>{"A1"});

    REQUIRE(img.pieces[1].divisor.size() == 2);
    CHECK(img.pieces[1].divisor[0].point == "a1");
    CHECK(img.pieces[1].divisor[0].coeff == 1);
    CHECK(img.pieces[1].divisor[1].point == "m");
    CHECK(img.pieces[1].divisor[1].coeff == -1);
    REQUIRE(img.pieces[2].divisor.size() == 2);
    CHECK(img.pieces[2].divisor[0].point == "p");
    CHECK(img.pieces[2].divisor[1].point == "a1");
    CHECK(img.pieces[2].divisor[1].coeff == -1);
}

TEST_CASE("image at a nonseparating node lives on the blow-up") {
    DualGraph g = fixtures::theta();
    AbelImage img = abel_image(g, node("e1"));
    CHECK(img.blown_up);
    CHECK(img.boundary);
    CHECK(img.exceptional == "E_e1");
    CHECK(img.host.vertex_count() == 3);
    CHECK(img.host.is_quasistable());
    CHECK(img.multidegree == md({0, 0, 1}));  // degree sits on the inserted component
    CHECK(img.cut_nodes.empty());
    REQUIRE(img.pieces.size() == 1);
    CHECK(piece_ids(img, 0) == std::vector<std::string>{"C1", "C2"});
    CHECK(img.pieces[0].divisor.empty());

    // A self-node is never separating, so it also lands on the boundary.
    DualGraph loop = fixtures::looped();
    AbelImage limg = abel_image(loop, node("e1"));
    CHECK(limg.blown_up);
    CHECK(limg.one_general);
    CHECK(limg.multidegree == md({0, 1}));
}

TEST_CASE("boundary exactly at the non-bridges") {
    for (DualGraph g : {fixtures::theta(), fixtures::bridged_12(), fixtures::star3(),
                        fixtures::caterpillar(), fixtures::banana4(), fixtures::looped(),
                        fixtures::dumbbell()}) {
        std::vector<size_t> bridges = bridge_edges(g);
        for (size_t e = 0; e < g.edge_count(); ++e) {
            bool is_bridge = std::binary_search(bridges.begin(), bridges.end(), e);
            AbelImage img = abel_image(g, node(g.edge(e).id));
            CHECK(img.boundary == !is_bridge);
            CHECK(img.blown_up == !is_bridge);
        }
    }
}

TEST_CASE("images at different points compare symbolically") {
    DualGraph g = fixtures::bridged_12();
    CHECK(abel_images_equal(g, at("C1"), at("C1")));               // the same point
    CHECK_FALSE(abel_images_equal(g, at("C1"), at("C1", "q")));    // distinct points
    CHECK_FALSE(abel_images_equal(g, at("C1"), at("C2")));
    CHECK_FALSE(abel_images_equal(g, node("e1"), at("C1")));
    CHECK_FALSE(abel_images_equal(g, node("e1"), at("C2")));

    DualGraph star = fixtures::star3();
    CHECK(abel_images_equal(star, at("X"), node("eA")));
    CHECK(abel_images_equal(star, node("eA"), node("eB")));
    CHECK(abel_images_equal(star, at("X"), at("X", "q")));  // the center is one fiber
    CHECK_FALSE(abel_images_equal(star, at("A"), node("eA")));
    CHECK_FALSE(abel_images_equal(star, at("A"), at("B")));

    DualGraph cat = fixtures::caterpillar();
    CHECK(abel_images_equal(cat, node("m"), at("X")));
    CHECK(abel_images_equal(cat, at("X"), at("Y")));
    CHECK_FALSE(abel_images_equal(cat, node("m"), at("A1")));

    // Nonseparating nodes agree with nothing but themselves.
    DualGraph theta = fixtures::theta();
    CHECK(abel_images_equal(theta, node("e1"), node("e1")));
    CHECK_FALSE(abel_images_equal(theta, node("e1"), node("e2")));
    CHECK_FALSE(abel_images_equal(theta, node("e1"), at("C1")));
}

TEST_CASE("fiber partition of a one-general host") {
    DualGraph star = fixtures::star3();
    FiberPartition parts = abel_fibers(star);
    REQUIRE(parts.classes.size() == 4);
    CHECK(parts.classes[0].components == std::vector<std::string>{"X"});
    CHECK(parts.classes[0].nodes == std::vector<std::string>{"eA", "eB", "eC"});
    CHECK(parts.classes[1].components == std::vector<std::string>{"A"});
    CHECK(parts.classes[1].nodes.empty());

    DualGraph g = fixtures::bridged_12();
    FiberPartition simple = abel_fibers(g);
    REQUIRE(simple.classes.size() == 3);
    CHECK(simple.classes[0].components == std::vector<std::string>{"C1"});
    CHECK(simple.classes[2].components.empty());
    CHECK(simple.classes[2].nodes == std::vector<std::string>{"e1"});

    CHECK(thrown_code([] { abel_fibers(fixtures::theta()); }) == ErrorCode::Not1General);
}

TEST_CASE("closed forms on two-component hosts") {
    DualGraph g4 = fixtures::double_12();
    VineInfo info = vine_info(g4, 2);
    CHECK(info.delta == 2);
    CHECK(info.lower_exact == Rational(-1, 3));
    CHECK(info.m == 0);
    CHECK(info.strict);

    CHECK(vine_r(g4, 2, 0) == 0);
    CHECK(vine_r(g4, 2, 1) == 1);
    CHECK(vine_r(g4, 2, 2) == 0);
    CHECK(vine_abel_multidegree(g4, 2, 2) == md({0, 2}));
    CHECK(vine_abel_multidegree(g4, 2, 1) == md({1, 1}));

    DualGraph g5 = fixtures::banana4();
    CHECK(vine_abel_multidegree(g5, 2, 1) == md({1, 1}));
    // The split of the points is the split of the degrees.
    for (long long d = 1; d <= g5.genus(); ++d)
        for (long long a0 = 0; a0 <= d; ++a0)
            CHECK(vine_abel_multidegree(g5, d, a0) == md({a0, d - a0}));

    CHECK(thrown_code([] { vine_info(fixtures::star3(), 1); }) == ErrorCode::NotTwoComponent);
    CHECK(thrown_code([&] { vine_info(g4, 0); }) == ErrorCode::SpecError);
    CHECK(thrown_code([&] { vine_r(g4, 2, 5); }) == ErrorCode::SpecError);
}

TEST_CASE("candidate balanced sets on two-component hosts") {
    VineBalanced theta1 = bvine_set(fixtures::theta(), 1);
    REQUIRE(theta1.set.size() == 3);
    CHECK(theta1.set[0] == md({-1, 2}));
    CHECK(theta1.set[2] == md({1, 0}));
    CHECK_FALSE(theta1.equals_balanced);  // the balanced set has one more element

    VineBalanced g5 = bvine_set(fixtures::banana4(), 1);
    CHECK(g5.set.size() == 4);
    CHECK(g5.equals_balanced);

    CHECK(bvine_set(fixtures::double_12(), 2).equals_balanced);
    CHECK_FALSE(bvine_set(fixtures::dumbbell(), 1).equals_balanced);
}

TEST_CASE("equal-genus hosts with an odd number of nodes are never one-general") {
    for (int h : {1, 2}) {
        for (int delta : {1, 3, 5}) {
            DualGraph g = fixtures::vine(h, delta);
            GeneralityReport rep = is_d_general(g, 1);
            CHECK_FALSE(rep.d_general);
            REQUIRE(rep.witness.has_value());
            CHECK(*rep.witness == md({(1 - delta) / 2, (1 + delta) / 2}));
            CHECK_FALSE(bvine_set(g, 1).equals_balanced);
        }
    }
}

TEST_CASE("witness when a chain host fails to be one-general") {
    DualGraph g = fixtures::caterpillar();
    std::optional<Subcurve> w = sigma1_witness(g);
    REQUIRE(w.has_value());
    CHECK(w->vertex_ids() == std::vector<std::string>{"A1", "A2", "X"});
    CHECK(w->weight() == g.genus() - 1);
}

TEST_CASE("host preconditions") {
    CHECK(thrown_code([] {
              abel_image(fixtures::dumbbell_blown(), PointOnCurve::smooth_point("A"));
          }) == ErrorCode::NotStable);
    CHECK(thrown_code([] {
              DualGraph small({{"C", 1}}, {});
              abel_image(small, PointOnCurve::smooth_point("C"));
          }) == ErrorCode::GenusTooSmall);
}
