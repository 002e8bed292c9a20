#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <queue>
#include <vector>

#include "sparsehalf/errors.hpp"
#include "sparsehalf/graph.hpp"

namespace sparsehalf {

struct SearchCaps {
    int max_vertices = 64;
};

// Length of the shortest odd cycle; nullopt iff the graph is bipartite.
// BFS from every source: an edge joining two vertices of the same BFS
// layer closes an odd walk of length 2*dist+1, and the minimum such walk
// over all sources is the shortest odd cycle.
inline std::optional<int> odd_girth(const Graph& g) {
    const int n = g.vertex_count();
    int best = -1;
    std::vector<int> dist(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int u = 0; u < n; ++u) {
                if (g.neighbors(v).test(u) && dist[u] == -1) {
                    dist[u] = dist[v] + 1;
                    q.push(u);
                }
            }
        }
        for (int u = 0; u < n; ++u) {
            if (dist[u] == -1) continue;
            for (int v = u + 1; v < n; ++v) {
                if (dist[v] == dist[u] && g.neighbors(u).test(v)) {
                    int len = 2 * dist[u] + 1;
                    if (best == -1 || len < best) best = len;
                }
            }
        }
    }
    if (best == -1) return std::nullopt;
    return best;
}

namespace detail {

// Greedy clique cover of the candidate set: each clique can contribute at
// most one vertex to an independent set, so the cover size bounds what is
// still achievable.
inline int clique_cover_bound(const Graph& g, const BitRow& candidates) {
    std::vector<BitRow> commons;  // common neighborhood of each clique built so far
    for (int v : candidates.members()) {
        bool placed = false;
        for (auto& common : commons) {
            if (common.test(v)) {
                common &= g.neighbors(v);
                placed = true;
                break;
            }
        }
        if (!placed) commons.push_back(g.neighbors(v));
    }
    return static_cast<int>(commons.size());
}

struct MisSearch {
    const Graph& g;
    int best_size = -1;
    std::vector<int> best_members;
    bool collect_all = false;
    int target = -1;  // when collecting, only sets of exactly this size
    std::vector<std::vector<int>> found;

    // Include-first DFS over ascending vertex indices visits candidate
    // subsets in lexicographic order, so the first strict improvement is
    // the lexicographically least maximum independent set.
    void run(std::vector<int>& chosen, BitRow candidates) {
        int v = candidates.first();
        if (v == -1) {
            report(chosen);
            return;
        }
        int bound = static_cast<int>(chosen.size()) + clique_cover_bound(g, candidates);
        if (collect_all ? bound < target : bound <= best_size) return;
        // include v
        BitRow with = candidates;
        with.subtract(g.neighbors(v));
        with.reset(v);
        chosen.push_back(v);
        run(chosen, std::move(with));
        chosen.pop_back();
        // exclude v
        candidates.reset(v);
        run(chosen, std::move(candidates));
    }

    void report(const std::vector<int>& chosen) {
        if (collect_all) {
            if (static_cast<int>(chosen.size()) == target) found.push_back(chosen);
            return;
        }
        if (static_cast<int>(chosen.size()) > best_size) {
            best_size = static_cast<int>(chosen.size());
            best_members = chosen;
        }
    }
};

inline void require_cap(const Graph& g, const SearchCaps& caps, const char* who) {
    if (g.vertex_count() > caps.max_vertices)
        throw CapExceeded(std::string(who) + ": " + std::to_string(g.vertex_count()) +
                          " vertices exceed cap " + std::to_string(caps.max_vertices));
}

}  // namespace detail

struct IndependenceResult {
    int size = 0;
    VertexSubset witness;
};

// Exact independence number with the lexicographically least maximum
// independent set as witness.
inline IndependenceResult independence_number(const Graph& g, const SearchCaps& caps = {}) {
    detail::require_cap(g, caps, "independence_number");
    detail::MisSearch search{g};
    std::vector<int> chosen;
    detail::BitRow all(g.vertex_count());
    all.set_all();
    search.run(chosen, std::move(all));
    IndependenceResult result{search.best_size, VertexSubset(g.vertex_count())};
    for (int v : search.best_members) result.witness.add(v);
    return result;
}

// All maximum independent sets, each as a sorted vertex list, in
// lexicographic order.
inline std::vector<VertexSubset> all_maximum_independent_sets(const Graph& g,
                                                              const SearchCaps& caps = {}) {
    int alpha = independence_number(g, caps).size;
    detail::MisSearch search{g};
    search.collect_all = true;
    search.target = alpha;
    std::vector<int> chosen;
    detail::BitRow all(g.vertex_count());
    all.set_all();
    search.run(chosen, std::move(all));
    std::vector<VertexSubset> out;
    out.reserve(search.found.size());
    for (const auto& members : search.found) {
        VertexSubset s(g.vertex_count());
        for (int v : members) s.add(v);
        out.push_back(std::move(s));
    }
    return out;
}

namespace detail {

inline bool exists_independent_set(const Graph& g, BitRow candidates, int need) {
    if (need <= 0) return true;
    int v = candidates.first();
    if (v == -1) return false;
    if (clique_cover_bound(g, candidates) < need) return false;
    BitRow with = candidates;
    with.subtract(g.neighbors(v));
    with.reset(v);
    if (exists_independent_set(g, std::move(with), need - 1)) return true;
    candidates.reset(v);
    return exists_independent_set(g, std::move(candidates), need);
}

}  // namespace detail

// Lexicographically least independent set of exactly the given size, if any.
inline std::optional<VertexSubset> lex_min_independent_set(const Graph& g, int size) {
    const int n = g.vertex_count();
    if (size < 0 || size > n) return std::nullopt;
    detail::BitRow allowed(n);
    allowed.set_all();
    VertexSubset chosen(n);
    int picked = 0;
    for (int v = 0; v < n && picked < size; ++v) {
        if (!allowed.test(v)) continue;
        detail::BitRow rest = allowed;
        rest.subtract(g.neighbors(v));
        for (int u = 0; u <= v; ++u) rest.reset(u);
        if (detail::exists_independent_set(g, rest, size - picked - 1)) {
            chosen.add(v);
            ++picked;
            allowed = std::move(rest);
        } else {
            allowed.reset(v);
        }
    }
    if (picked < size) return std::nullopt;
    return chosen;
}

// Exact chromatic number via iterative deepening over the number of
// colours, with new-colour symmetry breaking.
inline int chromatic_number(const Graph& g, const SearchCaps& caps = {}) {
    detail::require_cap(g, caps, "chromatic_number");
    const int n = g.vertex_count();
    if (n == 0) return 0;
    if (g.edge_count() == 0) return 1;

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });

    std::vector<int> colour(n, -1);
    auto feasible = [&](auto&& self, int idx, int used, int limit) -> bool {
        if (idx == n) return true;
        int v = order[idx];
        int trial_max = std::min(used + 1, limit);
        for (int c = 0; c < trial_max; ++c) {
            bool clash = false;
            for (int u = 0; u < n; ++u) {
                if (colour[u] == c && g.neighbors(v).test(u)) {
                    clash = true;
                    break;
                }
            }
            if (clash) continue;
            colour[v] = c;
            if (self(self, idx + 1, std::max(used, c + 1), limit)) return true;
            colour[v] = -1;
        }
        return false;
    };

    for (int q = 2; q <= n; ++q) {
        std::fill(colour.begin(), colour.end(), -1);
        if (feasible(feasible, 0, 0, q)) return q;
    }
    return n;
}

}  // namespace sparsehalf
