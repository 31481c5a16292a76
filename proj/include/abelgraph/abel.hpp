#pragma once

#include <optional>
#include <string>
#include <vector>

#include "abelgraph/balanced.hpp"
#include "abelgraph/tails.hpp"

namespace abelgraph {

// A point of the curve, named symbolically: either a smooth point sitting on
// one component, identified by a label, or a node, identified by its edge.
// Distinct labels on a component stand for distinct points in general
// position.
struct PointOnCurve {
    enum class Kind { smooth, node };

    Kind kind = Kind::smooth;
    std::string component;  // smooth points only
    std::string label;      // smooth points only
    std::string edge;       // nodes only

    static PointOnCurve smooth_point(std::string component, std::string label = "p");
    static PointOnCurve at_node(std::string edge);

    bool operator==(const PointOnCurve&) const = default;
};

// Rejects points that name unknown components or edges, empty labels, or
// labels colliding with an edge id (labels and node names share the
// namespace of divisor points).
void validate_point(const DualGraph& g, const PointOnCurve& p);

// Whether the point lies on the tail's subcurve. A node belongs when both
// endpoints are inside or when it is the tail's own generating node, which
// therefore lies on both sides at once.
bool point_in_tail(const Tail& q, const PointOnCurve& p);

// Members of the distinguished tail family lying over p, sorted innermost
// first. Any two members through one point are nested, and that is asserted.
std::vector<Tail> small_tails_through(const DualGraph& g, const PointOnCurve& p);

// Multidegree of the degree-1 Abel map at a smooth point of the component:
// the indicator of the component plus one tail twister for each family
// member through the point. Always semibalanced, which is asserted.
Multidegree abel_multidegree(const DualGraph& g, size_t component);
Multidegree abel_multidegree(const DualGraph& g, const PointOnCurve& p);

// One point of a piecewise divisor. The point is an edge id (one branch of
// that node) or a smooth point label; within its piece the carrying
// component is determined, and recorded for convenience.
struct DivisorTerm {
    std::string point;
    size_t vertex;
    long long coeff = 0;
};

struct ImagePiece {
    uint64_t mask;  // vertex set, as indices of the image host
    std::vector<DivisorTerm> divisor;
};

// Image of the degree-1 Abel map at a point, described explicitly: a host
// graph (the input, or its blow-up when the point is a nonseparating node),
// a balanced multidegree, and a decomposition of the host into subcurves
// glued along the cut nodes, each piece carrying a small divisor.
struct AbelImage {
    explicit AbelImage(DualGraph h) : host(std::move(h)) {}

    DualGraph host;
    bool blown_up = false;
    std::string node_edge;    // the input node, when the point is a node
    std::string exceptional;  // inserted component, when blown up
    bool boundary = false;    // equivalent to blown_up
    bool one_general = false; // whether degree 1 is general for the input
    Multidegree multidegree;
    std::vector<std::string> cut_nodes;  // outermost chain node first
    std::vector<ImagePiece> pieces;      // outermost piece first
};

AbelImage abel_image(const DualGraph& g, const PointOnCurve& p);

// Whether two points have the same Abel image, decided symbolically: equal
// multidegrees, then matching divisors over the common refinement by both
// cut-node sets, allowing divisor points to slide only along components that
// are separating lines of their piece.
bool abel_images_equal(const DualGraph& g, const PointOnCurve& a, const PointOnCurve& b);

struct FiberClass {
    std::vector<std::string> components;  // generic smooth points of these
    std::vector<std::string> nodes;
};

// The partition of the curve's points (generic smooth points per component,
// plus all nodes) into Abel map fibers. Requires degree 1 to be general;
// the nontrivial fibers are exactly the maximal separating trees of lines
// together with every node touching them.
struct FiberPartition {
    std::vector<FiberClass> classes;
};

FiberPartition abel_fibers(const DualGraph& g);

// Two-component hosts ("vines") admit closed forms for everything above.
struct VineInfo {
    long long d = 0;
    long long delta = 0;     // nodes joining the two components
    Rational lower_exact;    // exact lower degree bound of the first component
    long long m = 0;         // its ceiling
    bool strict = false;     // the bound is not an integer
};

VineInfo vine_info(const DualGraph& g, long long d);

// Residue (a - m) mod delta: how far the balanced representative of the
// class of (a, d - a) sits above the lower bound.
long long vine_r(const DualGraph& g, long long d, long long a);

// Closed form of the degree-d Abel image multidegree for the point choice
// putting a0 points on the first component. Asserted balanced.
Multidegree vine_abel_multidegree(const DualGraph& g, long long d, long long a0);

struct VineBalanced {
    std::vector<Multidegree> set;  // (m + i, d - m - i) for i < delta
    bool equals_balanced = false;  // coincides with the full balanced set
};

// The candidate set from the closed form, with the flag telling whether it
// exhausts the balanced multidegrees; that happens exactly when the lower
// bound is not an integer, and both readings of the flag are asserted.
VineBalanced bvine_set(const DualGraph& g, long long d);

}  // namespace abelgraph
