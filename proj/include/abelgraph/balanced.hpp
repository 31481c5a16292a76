#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abelgraph/lattice.hpp"
#include "abelgraph/multidegree.hpp"
#include "abelgraph/rational.hpp"

namespace abelgraph {

struct BasicBounds {
    Rational lower;  // m_Z(d); degrees below this are forbidden
    Rational upper;  // M_Z(d)
};

// Degree window of a connected proper subcurve inside a total degree d:
// upper = d*w_Z/(2g-2) + k_Z/2 and lower = upper - k_Z, except that a single
// exceptional component gets lower 0. Host must be semistable of genus >= 2.
BasicBounds basic_bounds(const Subcurve& z, long long d);

// Evaluates the degree windows of all connected proper subcurves at once.
// Build one instance per (graph, total degree) pair and reuse it; the
// predicates below construct a throwaway instance per call.
class BalanceChecker {
public:
    BalanceChecker(const DualGraph& g, long long d);

    const DualGraph& host() const { return *g_; }
    long long total_degree() const { return d_; }

    bool semibalanced(const Multidegree& m) const;
    bool balanced(const Multidegree& m) const;
    bool stably_balanced(const Multidegree& m) const;

    // Integer degree window of the single vertex v.
    std::pair<long long, long long> vertex_box(size_t v) const;

private:
    struct Constraint {
        uint64_t mask;
        long long lower;  // smallest allowed integer degree
        long long upper;  // largest allowed integer degree
        bool lower_exact;       // the rational lower bound is an integer
        bool rest_exceptional;  // complement consists of exceptional vertices only
    };

    const DualGraph* g_;
    long long d_;
    std::vector<Constraint> constraints_;
    std::vector<size_t> exceptional_;
    std::vector<std::pair<long long, long long>> boxes_;
};

// A multidegree is semibalanced when every connected proper subcurve carries
// at least its lower window bound; staying under the upper bound then comes
// for free, and the agreement of the two readings is asserted. Balanced adds
// degree 1 on every exceptional component; stably balanced further forbids
// hitting the lower bound unless the complement is a union of exceptionals.
bool is_semibalanced(const DualGraph& g, const Multidegree& m);
bool is_balanced(const DualGraph& g, const Multidegree& m);
bool is_stably_balanced(const DualGraph& g, const Multidegree& m);

struct BalancedSet {
    long long d = 0;
    std::vector<Multidegree> balanced;         // lexicographically ascending
    std::vector<Multidegree> stably_balanced;  // subset of the above
};

// All balanced multidegrees of total degree d, with the stably balanced ones
// singled out. Host must be quasistable of genus >= 2.
BalancedSet enumerate_balanced(const DualGraph& g, long long d);

struct ClassMapFiber {
    Multidegree representative;        // canonical form shared by the members
    std::vector<Multidegree> members;  // balanced multidegrees mapping to it
};

struct ClassMapReport {
    BigInt order;
    bool surjective = false;  // guaranteed by theory; false flags a violation
    bool injective = false;
    std::vector<ClassMapFiber> fibers;  // sorted by representative
};

// How the balanced multidegrees of degree d distribute over the degree
// class group, with representatives reduced at the given base vertex.
// Host must be stable of genus >= 2.
ClassMapReport class_map_analysis(const DualGraph& g, long long d, size_t base = 0);

struct GeneralityReport {
    bool d_general = false;
    // A balanced multidegree that is not stably balanced, when one exists.
    std::optional<Multidegree> witness;
};

// d is general for the host when balanced representatives are unique in
// their classes; equivalently all balanced multidegrees are stably balanced.
// Both readings are computed and their agreement is asserted.
GeneralityReport is_d_general(const DualGraph& g, long long d);

// Sufficient arithmetic test: gcd(|d - g + 1|, 2g - 2) == 1.
bool arithmetic_generality_criterion(long long g, long long d);

// When degree 1 fails to be general, some connected proper subcurve of
// weight g-1 with odd boundary and connected complement witnesses the
// failure; returns the lexicographically first one, or nothing when degree 1
// is general. Host must be stable of genus >= 2.
std::optional<Subcurve> sigma1_witness(const DualGraph& g);

// Identity card of a semibalanced multidegree up to the equivalence that
// contracts degree-0 exceptional components: the contracted host, the
// degrees on its non-exceptional components, and the surviving exceptional
// components. Two pairs (host, multidegree) describe the same boundary point
// exactly when their keys coincide.
struct EquivalenceKey {
    DualGraph host;
    std::vector<std::pair<std::string, long long>> degrees;
    std::vector<std::string> exceptional_ids;

    std::string canonical_string() const;
    bool operator==(const EquivalenceKey& o) const {
        return canonical_string() == o.canonical_string();
    }
};

EquivalenceKey equivalence_key(const DualGraph& g, const Multidegree& m);

}  // namespace abelgraph
