#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sparsehalf/andrasfai.hpp"
#include "sparsehalf/circle.hpp"
#include "sparsehalf/graph.hpp"

namespace sparsehalf {

// Exact placement of a graph's vertices on the unit circle such that two
// vertices are adjacent exactly when their central angle exceeds the
// fraction (k-1)/(2k-1) of a full turn.
class CircularArrangement {
public:
    CircularArrangement(int k, Graph graph, std::vector<CirclePoint> positions)
        : k_(k), graph_(std::move(graph)), positions_(std::move(positions)) {
        if (k_ < 2) throw std::invalid_argument("CircularArrangement: need k >= 2");
        if (static_cast<int>(positions_.size()) != graph_.vertex_count())
            throw std::invalid_argument("CircularArrangement: one position per vertex");
        sorted_order_.resize(positions_.size());
        std::iota(sorted_order_.begin(), sorted_order_.end(), 0);
        std::sort(sorted_order_.begin(), sorted_order_.end(),
                  [&](int a, int b) { return positions_[a] < positions_[b]; });
        for (std::size_t i = 1; i < sorted_order_.size(); ++i) {
            if (positions_[sorted_order_[i - 1]] == positions_[sorted_order_[i]])
                throw std::invalid_argument("CircularArrangement: positions must be distinct");
        }
    }

    int k() const { return k_; }
    int n() const { return graph_.vertex_count(); }
    const Graph& graph() const { return graph_; }
    const CirclePoint& position(int v) const { return positions_.at(v); }
    const std::vector<CirclePoint>& positions() const { return positions_; }
    const std::vector<int>& sorted_order() const { return sorted_order_; }

    // Adjacency threshold (k-1)/(2k-1).
    Rational angle_threshold() const { return Rational(k_ - 1, 2 * k_ - 1); }

    // Index into sorted_order of the first vertex at or clockwise after xi.
    int first_at_or_after(const CirclePoint& xi) const {
        int lo = 0, hi = n();
        while (lo < hi) {
            int mid = (lo + hi) / 2;
            if (positions_[sorted_order_[mid]].value() < xi.value()) lo = mid + 1;
            else hi = mid;
        }
        return lo == n() ? 0 : lo;
    }

    // Arrangement with every position shifted by -offset (the point at
    // `offset` moves to 0).  Vertex ids are unchanged.
    CircularArrangement rotated(const Rational& offset) const {
        std::vector<CirclePoint> shifted;
        shifted.reserve(positions_.size());
        for (const auto& p : positions_) shifted.push_back(p - offset);
        return {k_, graph_, std::move(shifted)};
    }

private:
    int k_;
    Graph graph_;
    std::vector<CirclePoint> positions_;
    std::vector<int> sorted_order_;
};

// Circle representation of a blow-up of F^k_d.  Class i (0-based) lives
// in [i/m, i/m + eps) with eps = 1/(2(2k-1)m); its j-th vertex sits at
// i/m + j*eps/t_i, which keeps all positions rational and arrangements
// canonical.
inline CircularArrangement represent_blow_up(const BlowUp& b, int k) {
    auto d = andrasfai_parameter_d(b.base, k);
    if (!d) throw std::invalid_argument("represent_blow_up: base graph is not an F^k_d instance");
    const int m = b.base.vertex_count();
    const Rational eps(1, 2 * (2 * k - 1) * m);
    std::vector<CirclePoint> positions;
    positions.reserve(b.result.vertex_count());
    for (int i = 0; i < m; ++i) {
        const int t = b.multiplicities[i];
        const CirclePoint center{Rational(i, m)};
        for (int j = 0; j < t; ++j) positions.push_back(center + eps * Rational(j, t));
    }
    return {k, b.result, std::move(positions)};
}

struct AnglePropertyResult {
    bool holds = true;
    std::optional<std::pair<int, int>> violating_pair;  // first in (i, j) lex order
};

// Exact check of both directions of the adjacency criterion over all pairs.
inline AnglePropertyResult verify_angle_property(const CircularArrangement& arr) {
    const Rational threshold = arr.angle_threshold();
    const int n = arr.n();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            bool wide = angle_fraction(arr.position(i), arr.position(j)) > threshold;
            if (wide != arr.graph().has_edge(i, j)) return {false, std::pair{i, j}};
        }
    }
    return {};
}

// Weighted vertex count lambda(I): interior vertices count 1, vertices on
// a closed endpoint 1, on a half endpoint 1/2, on an open endpoint 0.
inline HalfCount lambda_count(const CircularArrangement& arr, const CircularInterval& interval) {
    HalfCount total{};
    for (int v = 0; v < arr.n(); ++v) total += point_weight(interval, arr.position(v));
    return total;
}

// Vertices whose weight in the interval is nonzero.  Intended for
// intervals with closed/open endpoints, where membership is unweighted.
inline VertexSubset vertices_in(const CircularArrangement& arr, const CircularInterval& interval) {
    VertexSubset s(arr.n());
    for (int v = 0; v < arr.n(); ++v)
        if (point_weight(interval, arr.position(v)).twice > 0) s.add(v);
    return s;
}

// The vertex z closing the clockwise arc from xi that contains exactly
// floor(n/2) vertices, a vertex at xi itself included.  Unique because
// positions are distinct.
inline int z_xi(const CircularArrangement& arr, const CirclePoint& xi) {
    const int n = arr.n();
    if (n < 2) throw std::invalid_argument("z_xi: need n >= 2");
    int start = arr.first_at_or_after(xi);
    return arr.sorted_order()[(start + n / 2 - 1) % n];
}

// Counterclockwise analogue: the vertex z' such that the closed arc
// [z', xi] contains exactly floor(n/2) vertices.
inline int z_xi_ccw(const CircularArrangement& arr, const CirclePoint& xi) {
    const int n = arr.n();
    if (n < 2) throw std::invalid_argument("z_xi_ccw: need n >= 2");
    int start = arr.first_at_or_after(xi);
    // Last vertex at or counterclockwise before xi.
    int idx = start;
    if (arr.position(arr.sorted_order()[start]) != xi) idx = (start + n - 1) % n;
    return arr.sorted_order()[(idx - (n / 2 - 1) + n) % n];
}

}  // namespace sparsehalf
