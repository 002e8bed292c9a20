#pragma once

#include <cstdlib>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sparsehalf/graph.hpp"

namespace sparsehalf {

inline int generalized_andrasfai_order(int k, int d) { return (2 * k - 1) * (d - 1) + 2; }

// Generalised Andrasfai graph F^k_d: (2k-1)(d-1)+2 vertices, edge between
// i and j iff (k-1)(d-1)+1 <= |i-j| <= k(d-1)+1 in 1-based indexing.  The
// 1-based indices of the definition map to vertices 0..m-1 by subtracting
// one; the same shift is used everywhere in this library.  k = 2 gives
// the classical Andrasfai graph F_d (edge iff d <= |i-j| <= 2d-1); d = 1
// gives K_2 and d = 2 the odd cycle C_{2k+1}.
inline Graph generalized_andrasfai(int k, int d) {
    if (k < 2) throw std::invalid_argument("generalized_andrasfai: need k >= 2");
    if (d < 1) throw std::invalid_argument("generalized_andrasfai: need d >= 1");
    const int m = generalized_andrasfai_order(k, d);
    const int lo = (k - 1) * (d - 1) + 1;
    const int hi = k * (d - 1) + 1;
    Graph g(m);
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            int diff = j - i;
            if (diff >= lo && diff <= hi) g.add_edge(i, j);
        }
    }
    return g;
}

// Recognizes whether g is exactly F^k_d (in this library's vertex order)
// for the given k; returns d if so.
inline std::optional<int> andrasfai_parameter_d(const Graph& g, int k) {
    if (k < 2) return std::nullopt;
    const int m = g.vertex_count();
    if (m < 2 || (m - 2) % (2 * k - 1) != 0) return std::nullopt;
    const int d = (m - 2) / (2 * k - 1) + 1;
    if (g == generalized_andrasfai(k, d)) return d;
    return std::nullopt;
}

// Replacement of every base vertex i by an independent class of t_i
// vertices, with complete bipartite connections exactly between classes
// of adjacent base vertices.  Result vertices are ordered class by class
// in base-index order, so class i occupies a contiguous range.  A class
// multiplicity of 0 is allowed and simply removes that class.
struct BlowUp {
    Graph base;
    std::vector<int> multiplicities;
    Graph result;
    std::vector<int> class_of;  // result vertex -> base vertex

    // First result vertex of class i (class i is [class_start(i), class_start(i) + t_i)).
    int class_start(int base_vertex) const {
        int offset = 0;
        for (int i = 0; i < base_vertex; ++i) offset += multiplicities[i];
        return offset;
    }
};

inline BlowUp blow_up(const Graph& base, const std::vector<int>& multiplicities) {
    const int m = base.vertex_count();
    if (static_cast<int>(multiplicities.size()) != m)
        throw std::invalid_argument("blow_up: need one multiplicity per base vertex");
    for (int t : multiplicities)
        if (t < 0) throw std::invalid_argument("blow_up: negative multiplicity");

    const int n = std::accumulate(multiplicities.begin(), multiplicities.end(), 0);
    BlowUp b{base, multiplicities, Graph(n), {}};
    b.class_of.reserve(n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < multiplicities[i]; ++j) b.class_of.push_back(i);
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (base.has_edge(b.class_of[x], b.class_of[y])) b.result.add_edge(x, y);
    return b;
}

inline BlowUp balanced_blow_up(const Graph& base, int t) {
    if (t < 0) throw std::invalid_argument("balanced_blow_up: negative multiplicity");
    return blow_up(base, std::vector<int>(base.vertex_count(), t));
}

}  // namespace sparsehalf
