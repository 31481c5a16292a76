#pragma once

// Small hand-checked graphs shared by the test files. Expected values quoted
// in the tests were worked out on paper for exactly these graphs; change a
// fixture and those numbers go stale, so add new graphs instead.

#include "abelgraph/dual_graph.hpp"

namespace fixtures {

using abelgraph::DualGraph;

// One component of genus 2, no nodes.
inline DualGraph single_genus2() { return DualGraph({{"C1", 2}}, {}); }

// Two rational components joined by three nodes; genus 2, group of order 3.
inline DualGraph theta() {
    return DualGraph({{"C1", 0}, {"C2", 0}},
                     {{"e1", "C1", "C2"}, {"e2", "C1", "C2"}, {"e3", "C1", "C2"}});
}

// Genus 1 and genus 2 components joined by a single separating node; genus 3.
inline DualGraph bridged_12() {
    return DualGraph({{"C1", 1}, {"C2", 2}}, {{"e1", "C1", "C2"}});
}

// Genus 1 and genus 2 components joined by two nodes; genus 4.
inline DualGraph double_12() {
    return DualGraph({{"A", 1}, {"B", 2}}, {{"e1", "A", "B"}, {"e2", "A", "B"}});
}

// Two rational components joined by four nodes; genus 3.
inline DualGraph banana4() {
    return DualGraph({{"C1", 0}, {"C2", 0}},
                     {{"e1", "C1", "C2"}, {"e2", "C1", "C2"}, {"e3", "C1", "C2"}, {"e4", "C1", "C2"}});
}

// Rational center with three genus-1 leaves; genus 3, all edges separating.
inline DualGraph star3() {
    return DualGraph({{"A", 1}, {"B", 1}, {"C", 1}, {"X", 0}},
                     {{"eA", "X", "A"}, {"eB", "X", "B"}, {"eC", "X", "C"}});
}

// Two genus-1 components and one separating node; genus 2, both sides of
// the node have genus exactly half the total.
inline DualGraph dumbbell() {
    return DualGraph({{"A", 1}, {"B", 1}}, {{"e1", "A", "B"}});
}

// The dumbbell with its node blown up: quasistable but not stable, and both
// of its separating nodes produce half-genus sides.
inline DualGraph dumbbell_blown() {
    return DualGraph({{"A", 1}, {"B", 1}, {"E", 0}}, {{"e1", "A", "E"}, {"e2", "E", "B"}});
}

// Two components of equal genus h joined by delta nodes.
inline DualGraph vine(int h, int delta) {
    std::vector<abelgraph::EdgeSpec> edges;
    for (int i = 0; i < delta; ++i)
        edges.push_back({"e" + std::to_string(i + 1), "A", "B"});
    return DualGraph({{"A", h}, {"B", h}}, edges);
}

// Genus-2 component with a self-node; genus 3, the node is not separating.
inline DualGraph looped() {
    return DualGraph({{"C1", 2}}, {{"e1", "C1", "C1"}});
}

// Two rational centers, each holding two genus-1 leaves; genus 4. The tail
// family through a leaf point is a nested chain of length two.
inline DualGraph caterpillar() {
    return DualGraph({{"A1", 1}, {"A2", 1}, {"B1", 1}, {"B2", 1}, {"X", 0}, {"Y", 0}},
                     {{"a1", "X", "A1"},
                      {"a2", "X", "A2"},
                      {"m", "X", "Y"},
                      {"b1", "Y", "B1"},
                      {"b2", "Y", "B2"}});
}

}  // namespace fixtures
