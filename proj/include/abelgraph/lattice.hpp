#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "abelgraph/multidegree.hpp"
#include "abelgraph/tails.hpp"

namespace abelgraph {

using BigInt = boost::multiprecision::cpp_int;

// Intersection pairing of the components: entry (v,w) counts the nodes
// joining v and w for v != w, and the diagonal makes every row sum to zero.
// Loops contribute nothing. This is the negated graph Laplacian.
std::vector<std::vector<long long>> intersection_matrix(const DualGraph& g);

// Multidegree of the twister cutting along D: the matrix above applied to D.
Multidegree twister_multidegree(const DualGraph& g, const std::vector<long long>& d);

// Twister of a tail: -1 at the endpoint of the generating bridge inside the
// tail, +1 at the endpoint outside. Matches the matrix route applied to the
// tail's indicator vector, and that agreement is asserted.
Multidegree tail_twister_multidegree(const Tail& q);

struct ClassGroupInfo {
    std::vector<BigInt> invariant_factors;  // each > 1, consecutive ones divide
    BigInt order;                           // product of the factors
};

// Component group of the relative Picard scheme: integer multidegrees of
// total degree zero modulo twisters. Computed by Smith normal form of the
// pairing matrix with one vertex removed.
ClassGroupInfo class_group(const DualGraph& g);

// Counted by the matrix-tree determinant; equals the class group order.
BigInt spanning_tree_count(const DualGraph& g);

// Diagonal of the Smith normal form (nonnegative, divisibility chain),
// for callers that want the raw decomposition.
std::vector<BigInt> smith_normal_form(std::vector<std::vector<BigInt>> m);

BigInt integer_determinant(std::vector<std::vector<BigInt>> m);

// Reduction of divisors to a canonical representative with respect to a base
// vertex: after reduction every vertex except the base is nonnegative and no
// set avoiding the base can fire without going negative. Two multidegrees
// are twister-equivalent exactly when they reduce to the same vector.
//
// The reducer keeps its scratch buffers between calls, so reuse one instance
// when reducing many divisors on the same graph. Not safe to share across
// threads.
class DharReducer {
public:
    DharReducer(const DualGraph& g, size_t base);

    void reduce(std::vector<long long>& d);

private:
    void reverse_fire_layers(std::vector<long long>& d);
    // Burns from the base; returns false when everything burnt.
    bool fire_unburnt(std::vector<long long>& d);

    size_t n_;
    size_t base_;
    std::vector<std::vector<std::pair<int, int>>> nbrs_;  // (vertex, edge multiplicity)
    std::vector<int> dist_;
    int max_dist_ = 0;
    std::vector<char> burnt_;
    std::vector<int> count_;
    std::vector<int> queue_;
};

// Canonical representative of the class of `d`, reduced at the base vertex
// (by default the lexicographically smallest id, index 0).
Multidegree canonical_representative(const DualGraph& g, const Multidegree& d, size_t base = 0);

// Whether two multidegrees differ by a twister.
bool classes_equal(const DualGraph& g, const Multidegree& a, const Multidegree& b);

}  // namespace abelgraph
