#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "sparsehalf/andrasfai.hpp"
#include "sparsehalf/errors.hpp"
#include "sparsehalf/graph.hpp"

namespace sparsehalf {

// Edge-preserving vertex map between two graphs.
struct Homomorphism {
    Graph source;
    Graph target;
    std::vector<int> map;  // source vertex -> target vertex
};

inline bool verify_homomorphism(const Homomorphism& h) {
    if (static_cast<int>(h.map.size()) != h.source.vertex_count())
        throw std::out_of_range("verify_homomorphism: map size mismatch");
    for (int v : h.map)
        if (v < 0 || v >= h.target.vertex_count())
            throw std::out_of_range("verify_homomorphism: image vertex out of range");
    for (auto [u, v] : h.source.edges())
        if (!h.target.has_edge(h.map[u], h.map[v])) return false;
    return true;
}

struct HomCaps {
    int max_source_vertices = 40;
    int max_target_vertices = 40;
};

namespace detail {

struct HomSearch {
    const Graph& src;
    const Graph& tgt;
    std::vector<int> order;            // source vertices, branching order
    std::vector<int> order_position;   // source vertex -> index in order
    std::vector<int> assignment;       // source vertex -> target vertex or -1

    // Backtracking with forward checking: assigning v -> t intersects the
    // candidate set of each unassigned neighbour of v with N(t).  Source
    // vertices branch by descending degree, target candidates ascending,
    // so the first witness found is the canonical one.
    bool run(int depth, std::vector<BitRow>& candidates) {
        if (depth == static_cast<int>(order.size())) return true;
        int v = order[depth];
        for (int t : candidates[v].members()) {
            std::vector<std::pair<int, BitRow>> saved;
            bool ok = true;
            for (int u = 0; u < src.vertex_count(); ++u) {
                if (assignment[u] != -1 || !src.neighbors(v).test(u)) continue;
                saved.emplace_back(u, candidates[u]);
                candidates[u] &= tgt.neighbors(t);
                if (candidates[u].empty()) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                assignment[v] = t;
                if (run(depth + 1, candidates)) return true;
                assignment[v] = -1;
            }
            for (auto& [u, bits] : saved) candidates[u] = std::move(bits);
        }
        return false;
    }
};

}  // namespace detail

// Finds a homomorphism from g to h, or proves there is none (the search
// is exhaustive).  Deterministic: the returned map is the first one in
// the fixed branch order.
inline std::optional<Homomorphism> find_homomorphism(const Graph& g, const Graph& h,
                                                     const HomCaps& caps = {}) {
    if (g.vertex_count() > caps.max_source_vertices)
        throw CapExceeded("find_homomorphism: source exceeds cap");
    if (h.vertex_count() > caps.max_target_vertices)
        throw CapExceeded("find_homomorphism: target exceeds cap");
    if (g.vertex_count() > 0 && h.vertex_count() == 0) return std::nullopt;

    detail::HomSearch search{g, h};
    search.order.resize(g.vertex_count());
    std::iota(search.order.begin(), search.order.end(), 0);
    std::sort(search.order.begin(), search.order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    search.assignment.assign(g.vertex_count(), -1);

    std::vector<detail::BitRow> candidates(g.vertex_count());
    for (auto& row : candidates) {
        row = detail::BitRow(h.vertex_count());
        row.set_all();
    }
    if (!search.run(0, candidates)) return std::nullopt;
    return Homomorphism{g, h, search.assignment};
}

// Least d in [1, d_max] such that g is homomorphic to F^k_d.
inline std::optional<int> min_andrasfai_index(const Graph& g, int k, int d_max,
                                              const HomCaps& caps = {}) {
    for (int d = 1; d <= d_max; ++d) {
        if (find_homomorphism(g, generalized_andrasfai(k, d), caps)) return d;
    }
    return std::nullopt;
}

}  // namespace sparsehalf
