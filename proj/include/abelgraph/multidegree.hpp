#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "abelgraph/dual_graph.hpp"

namespace abelgraph {

// Integer vector indexed like the host's vertices: the degree of a line
// bundle on each component. Plain data; operations validate sizes against
// their host graph and raise IndexMismatch on disagreement.
struct Multidegree {
    std::vector<long long> values;

    Multidegree() = default;
    explicit Multidegree(std::vector<long long> v) : values(std::move(v)) {}

    static Multidegree zeros(size_t n) { return Multidegree(std::vector<long long>(n, 0)); }

    size_t size() const { return values.size(); }
    long long& operator[](size_t i) { return values[i]; }
    long long operator[](size_t i) const { return values[i]; }

    long long total() const {
        return std::accumulate(values.begin(), values.end(), 0ll);
    }

    long long degree_on(uint64_t mask) const {
        long long s = 0;
        for (size_t v = 0; v < values.size(); ++v)
            if ((mask >> v) & 1u) s += values[v];
        return s;
    }

    Multidegree& operator+=(const Multidegree& o) {
        if (o.size() != size()) fail(ErrorCode::IndexMismatch, "multidegree sizes differ");
        for (size_t i = 0; i < values.size(); ++i) values[i] += o.values[i];
        return *this;
    }

    bool operator==(const Multidegree& o) const { return values == o.values; }
    bool operator<(const Multidegree& o) const { return values < o.values; }
};

inline void check_host(const DualGraph& g, const Multidegree& d) {
    if (d.size() != g.vertex_count())
        fail(ErrorCode::IndexMismatch, "multidegree does not match the vertex count");
}

}  // namespace abelgraph
