#pragma once

// Test-only reference implementations: small, slow and written directly
// from the definitions.  These stay independent of the library's solver
// paths so they can serve as oracles.

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "sparsehalf/andrasfai.hpp"
#include "sparsehalf/circle.hpp"
#include "sparsehalf/circle_rep.hpp"
#include "sparsehalf/graph.hpp"
#include "sparsehalf/rng.hpp"

namespace oracles {

using sparsehalf::BlowUp;
using sparsehalf::CircularArrangement;
using sparsehalf::CircularInterval;
using sparsehalf::CirclePoint;
using sparsehalf::EndpointMode;
using sparsehalf::Graph;
using sparsehalf::Rational;
using sparsehalf::Rng;
using sparsehalf::VertexSubset;

inline long long count_edges_among(const Graph& g, const std::vector<int>& vertices) {
    long long edges = 0;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (g.has_edge(vertices[i], vertices[j])) ++edges;
    return edges;
}

struct MinSubsetResult {
    long long min_edges;
    std::vector<int> witness;
};

// Full enumeration of all s-subsets in lexicographic order.
inline MinSubsetResult naive_min_edges_over_subsets(const Graph& g, int s) {
    const int n = g.vertex_count();
    std::vector<int> pick(s);
    std::iota(pick.begin(), pick.end(), 0);
    MinSubsetResult best{-1, {}};
    for (;;) {
        long long edges = count_edges_among(g, pick);
        if (best.min_edges < 0 || edges < best.min_edges) best = {edges, pick};
        // next combination
        int i = s - 1;
        while (i >= 0 && pick[i] == n - s + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < s; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (s == 0) best = {0, {}};
    return best;
}

struct NaiveIndependence {
    int size = 0;
    std::vector<int> witness;
};

// Full 2^n enumeration; witness is the lexicographically least maximizer.
inline NaiveIndependence naive_independence(const Graph& g) {
    const int n = g.vertex_count();
    NaiveIndependence best;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> members;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) members.push_back(v);
        if (count_edges_among(g, members) != 0) continue;
        int size = static_cast<int>(members.size());
        if (size > best.size || (size == best.size && size > 0 && members < best.witness))
            best = {size, members};
    }
    return best;
}

// Shortest odd closed walk via boolean adjacency powers; equals the
// shortest odd cycle length.
inline std::optional<int> naive_odd_girth(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return std::nullopt;
    std::vector<std::vector<char>> walk(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) walk[i][j] = g.has_edge(i, j) ? 1 : 0;
    for (int len = 1; len <= n; ++len) {
        if (len % 2 == 1) {
            for (int i = 0; i < n; ++i)
                if (walk[i][i]) return len;
        }
        std::vector<std::vector<char>> next(n, std::vector<char>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int m = 0; m < n; ++m)
                if (walk[i][m])
                    for (int j = 0; j < n; ++j)
                        if (g.has_edge(m, j)) next[i][j] = 1;
        walk = std::move(next);
    }
    return std::nullopt;
}

// Exhaustive homomorphism existence for tiny instances.
inline bool naive_homomorphism_exists(const Graph& g, const Graph& h) {
    const int n = g.vertex_count();
    const int m = h.vertex_count();
    if (n == 0) return true;
    if (m == 0) return false;
    std::vector<int> map(n, 0);
    for (;;) {
        bool ok = true;
        for (auto [u, v] : g.edges())
            if (!h.has_edge(map[u], map[v])) {
                ok = false;
                break;
            }
        if (ok) return true;
        int i = 0;
        while (i < n && map[i] == m - 1) map[i++] = 0;
        if (i == n) return false;
        ++map[i];
    }
}

// Independently written weighted point count (doubled), from the raw
// case analysis of the interval definition.
inline long long naive_weight_doubled(const CircularInterval& interval, const CirclePoint& p) {
    auto halves = [](EndpointMode m) {
        return m == EndpointMode::closed ? 2LL : m == EndpointMode::half ? 1LL : 0LL;
    };
    const Rational t = (p.value() - interval.start().value()).fractional();
    if (interval.is_full_circle())
        return t.is_zero() ? halves(interval.start_mode()) + halves(interval.end_mode()) : 2;
    const Rational len = (interval.end().value() - interval.start().value()).fractional();
    if (len.is_zero())
        return t.is_zero() ? std::min(halves(interval.start_mode()), halves(interval.end_mode())) : 0;
    if (t.is_zero()) return halves(interval.start_mode());
    if (t == len) return halves(interval.end_mode());
    return t < len ? 2 : 0;
}

inline long long naive_lambda_doubled(const CircularArrangement& arr,
                                      const CircularInterval& interval) {
    long long total = 0;
    for (int v = 0; v < arr.n(); ++v) total += naive_weight_doubled(interval, arr.position(v));
    return total;
}

// Random simple graph with edge probability ~ percent/100.
inline Graph random_graph(Rng& rng, int n, int percent) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.uniform(100) < percent) g.add_edge(u, v);
    return g;
}

// Random blow-up of F^k_d with multiplicities in [0, max_t]; at least two
// vertices in the result.
inline BlowUp random_blow_up(Rng& rng, int k, int d, int max_t) {
    const Graph base = sparsehalf::generalized_andrasfai(k, d);
    for (;;) {
        std::vector<int> mult(base.vertex_count());
        int total = 0;
        for (int& t : mult) {
            t = rng.uniform(max_t + 1);
            total += t;
        }
        if (total >= 2) return sparsehalf::blow_up(base, mult);
    }
}

// Random blow-up whose multiplicities are scaled by the least factor that
// makes divisor | n, rejecting anything above max_n vertices.
inline BlowUp random_scaled_blow_up(Rng& rng, int k, int d, int max_t, int divisor, int max_n) {
    for (;;) {
        BlowUp b = random_blow_up(rng, k, d, max_t);
        const int n0 = b.result.vertex_count();
        const int scale = divisor / std::gcd(n0, divisor);
        if (static_cast<long long>(scale) * n0 > max_n) continue;
        if (scale == 1) return b;
        std::vector<int> mult = b.multiplicities;
        for (int& t : mult) t *= scale;
        return sparsehalf::blow_up(b.base, mult);
    }
}

}  // namespace oracles
