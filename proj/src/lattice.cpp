#include "abelgraph/lattice.hpp"

#include <algorithm>
#include <cstdlib>

namespace abelgraph {

std::vector<std::vector<long long>> intersection_matrix(const DualGraph& g) {
    const size_t n = g.vertex_count();
    std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
    for (size_t v = 0; v < n; ++v) {
        long long row = 0;
        for (size_t w = 0; w < n; ++w) {
            if (w == v) continue;
            m[v][w] = g.multiplicity(v, w);
            row += m[v][w];
        }
        m[v][v] = -row;
    }
    return m;
}

Multidegree twister_multidegree(const DualGraph& g, const std::vector<long long>& d) {
    if (d.size() != g.vertex_count())
        fail(ErrorCode::IndexMismatch, "twister coefficient vector does not match the vertex count");
    auto m = intersection_matrix(g);
    Multidegree out = Multidegree::zeros(g.vertex_count());
    for (size_t v = 0; v < g.vertex_count(); ++v)
        for (size_t w = 0; w < g.vertex_count(); ++w) out[v] += m[v][w] * d[w];
    require_invariant(out.total() == 0, "twister multidegrees have total degree zero");
    return out;
}

Multidegree tail_twister_multidegree(const Tail& q) {
    if (q.host == nullptr) fail(ErrorCode::HostMismatch, "tail has no host graph");
    const DualGraph& g = *q.host;
    const Edge& r = g.edge(q.bridge);
    bool a_inside = (q.mask >> r.a) & 1u;

    Multidegree out = Multidegree::zeros(g.vertex_count());
    out[a_inside ? r.a : r.b] = -1;
    out[a_inside ? r.b : r.a] = +1;

    // The tail's only boundary node is its bridge, so cutting along the tail
    // moves exactly one unit across that node.
    std::vector<long long> indicator(g.vertex_count(), 0);
    for (size_t v = 0; v < g.vertex_count(); ++v)
        if ((q.mask >> v) & 1u) indicator[v] = 1;
    require_invariant(twister_multidegree(g, indicator) == out,
                      "tail twister must match the pairing matrix route");
    return out;
}

std::vector<BigInt> smith_normal_form(std::vector<std::vector<BigInt>> m) {
    const size_t rows = m.size();
    const size_t cols = rows ? m[0].size() : 0;

    auto swap_rows = [&](size_t i, size_t j) { std::swap(m[i], m[j]); };
    auto swap_cols = [&](size_t i, size_t j) {
        for (size_t r = 0; r < rows; ++r) std::swap(m[r][i], m[r][j]);
    };

    size_t t = 0;
    while (t < rows && t < cols) {
        // Pick the nonzero entry of smallest magnitude as the pivot.
        size_t pi = t, pj = t;
        BigInt best = 0;
        for (size_t i = t; i < rows; ++i)
            for (size_t j = t; j < cols; ++j) {
                if (m[i][j] == 0) continue;
                BigInt a = abs(m[i][j]);
                if (best == 0 || a < best) { best = a; pi = i; pj = j; }
            }
        if (best == 0) break;
        swap_rows(t, pi);
        swap_cols(t, pj);

        bool leftovers = false;
        for (size_t i = t + 1; i < rows; ++i) {
            if (m[i][t] == 0) continue;
            BigInt q = m[i][t] / m[t][t];
            for (size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
            if (m[i][t] != 0) leftovers = true;
        }
        for (size_t j = t + 1; j < cols; ++j) {
            if (m[t][j] == 0) continue;
            BigInt q = m[t][j] / m[t][t];
            for (size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
            if (m[t][j] != 0) leftovers = true;
        }
        if (leftovers) continue;  // remainders became new, smaller pivot candidates

        // Row and column are clear; make sure the pivot divides the rest so
        // the diagonal forms a divisibility chain.
        bool fixed = false;
        for (size_t i = t + 1; i < rows && !fixed; ++i)
            for (size_t j = t + 1; j < cols && !fixed; ++j)
                if (m[i][j] % m[t][t] != 0) {
                    for (size_t c = 0; c < cols; ++c) m[t][c] += m[i][c];
                    fixed = true;
                }
        if (fixed) continue;
        ++t;
    }

    std::vector<BigInt> diag;
    for (size_t i = 0; i < std::min(rows, cols); ++i) diag.push_back(abs(m[i][i]));
    return diag;
}

BigInt integer_determinant(std::vector<std::vector<BigInt>> a) {
    const size_t n = a.size();
    if (n == 0) return 1;
    int sign = 1;
    BigInt prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            size_t swap_with = n;
            for (size_t i = k + 1; i < n; ++i)
                if (a[i][k] != 0) { swap_with = i; break; }
            if (swap_with == n) return 0;
            std::swap(a[k], a[swap_with]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                // Bareiss update: every division here is exact.
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

namespace {

// Pairing matrix with the base row and column removed, negated so the
// diagonal is positive.
std::vector<std::vector<BigInt>> reduced_laplacian(const DualGraph& g) {
    auto m = intersection_matrix(g);
    const size_t n = g.vertex_count();
    std::vector<std::vector<BigInt>> out;
    for (size_t i = 1; i < n; ++i) {
        std::vector<BigInt> row;
        for (size_t j = 1; j < n; ++j) row.push_back(-m[i][j]);
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace

ClassGroupInfo class_group(const DualGraph& g) {
    auto diag = smith_normal_form(reduced_laplacian(g));
    ClassGroupInfo info;
    info.order = 1;
    for (const BigInt& d : diag) {
        require_invariant(d != 0, "degree class group must be finite");
        info.order *= d;
        if (d > 1) info.invariant_factors.push_back(d);
    }
    return info;
}

BigInt spanning_tree_count(const DualGraph& g) {
    BigInt det = integer_determinant(reduced_laplacian(g));
    require_invariant(det > 0, "connected graphs have at least one spanning tree");
    return det;
}

DharReducer::DharReducer(const DualGraph& g, size_t base) : n_(g.vertex_count()), base_(base) {
    if (base >= n_) fail(ErrorCode::UnknownVertex, "base vertex index out of range");
    nbrs_.assign(n_, {});
    for (size_t v = 0; v < n_; ++v)
        for (size_t w = 0; w < n_; ++w)
            if (w != v && g.multiplicity(v, w) > 0)
                nbrs_[v].push_back({static_cast<int>(w), g.multiplicity(v, w)});

    dist_.assign(n_, -1);
    dist_[base_] = 0;
    queue_.clear();
    queue_.push_back(static_cast<int>(base_));
    for (size_t head = 0; head < queue_.size(); ++head) {
        int u = queue_[head];
        for (auto [w, mult] : nbrs_[u])
            if (dist_[w] < 0) {
                dist_[w] = dist_[u] + 1;
                queue_.push_back(w);
            }
    }
    max_dist_ = *std::max_element(dist_.begin(), dist_.end());
    burnt_.assign(n_, 0);
    count_.assign(n_, 0);
}

void DharReducer::reverse_fire_layers(std::vector<long long>& d) {
    // Outermost layer first: moving chips into layer k only touches layer
    // k-1, so vertices fixed on earlier rounds stay nonnegative.
    for (int k = max_dist_; k >= 1; --k) {
        long long need = 0;
        for (size_t v = 0; v < n_; ++v) {
            if (dist_[v] != k || d[v] >= 0) continue;
            long long gain = 0;
            for (auto [w, mult] : nbrs_[v])
                if (dist_[w] == k - 1) gain += mult;
            // gain >= 1: a BFS layer is reached from the previous one.
            need = std::max(need, (-d[v] + gain - 1) / gain);
        }
        if (need == 0) continue;
        for (size_t v = 0; v < n_; ++v) {
            if (dist_[v] != k) continue;
            for (auto [w, mult] : nbrs_[v])
                if (dist_[w] == k - 1) {
                    d[v] += need * mult;
                    d[w] -= need * mult;
                }
        }
    }
}

bool DharReducer::fire_unburnt(std::vector<long long>& d) {
    std::fill(burnt_.begin(), burnt_.end(), 0);
    std::fill(count_.begin(), count_.end(), 0);
    queue_.clear();
    burnt_[base_] = 1;
    queue_.push_back(static_cast<int>(base_));
    size_t burnt_total = 1;
    for (size_t head = 0; head < queue_.size(); ++head) {
        int u = queue_[head];
        for (auto [w, mult] : nbrs_[u]) {
            if (burnt_[w]) continue;
            count_[w] += mult;
            if (count_[w] > d[w]) {
                burnt_[w] = 1;
                ++burnt_total;
                queue_.push_back(w);
            }
        }
    }
    if (burnt_total == n_) return false;

    // Fire the surviving set once. For an unburnt v, count_ holds exactly
    // the number of edges from v to the burnt side.
    for (size_t v = 0; v < n_; ++v) {
        if (burnt_[v]) continue;
        d[v] -= count_[v];
        for (auto [w, mult] : nbrs_[v])
            if (burnt_[w]) d[w] += mult;
    }
    return true;
}

void DharReducer::reduce(std::vector<long long>& d) {
    reverse_fire_layers(d);
    while (fire_unburnt(d)) {
    }
}

Multidegree canonical_representative(const DualGraph& g, const Multidegree& d, size_t base) {
    check_host(g, d);
    DharReducer reducer(g, base);
    std::vector<long long> values = d.values;
    reducer.reduce(values);
    Multidegree out(values);
    require_invariant(out.total() == d.total(), "reduction must preserve the total degree");
    reducer.reduce(values);
    require_invariant(values == out.values, "reduction must be idempotent");
    return out;
}

bool classes_equal(const DualGraph& g, const Multidegree& a, const Multidegree& b) {
    if (a.size() != b.size()) fail(ErrorCode::HostMismatch, "multidegrees live on different hosts");
    check_host(g, a);
    if (a.total() != b.total())
        fail(ErrorCode::TotalDegreeMismatch, "multidegrees have different total degrees");
    DharReducer reducer(g, 0);
    std::vector<long long> ra = a.values, rb = b.values;
    reducer.reduce(ra);
    reducer.reduce(rb);
    return ra == rb;
}

}  // namespace abelgraph
