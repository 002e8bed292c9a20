#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sparsehalf/circle_rep.hpp"
#include "sparsehalf/errors.hpp"
#include "sparsehalf/graph.hpp"
#include "sparsehalf/invariants.hpp"
#include "sparsehalf/rational.hpp"

namespace sparsehalf {

struct SearchBudget {
    int max_subset_vertices = 30;       // cap on n for the exhaustive subset search
    long long max_nodes = 100'000'000;  // cap on branch-and-bound node expansions
};

struct SubsetSearchResult {
    long long min_edges = 0;
    VertexSubset witness;
    long long nodes_explored = 0;
};

namespace detail {

// Branch and bound for the minimum number of edges induced by an
// s-subset.  Vertices are decided include-first in index order, so
// candidate subsets are visited in lexicographic order and the first
// strict improvement is the lexicographically least minimiser.  Pruning
// bound: edges already fixed, plus the r smallest degrees into the chosen
// set among remaining vertices, plus a Turan-type term r - alpha(suffix)
// for edges among the future picks themselves.
struct SubsetSearch {
    const Graph& g;
    int n;
    int s;
    long long max_nodes;
    long long nodes = 0;
    std::vector<int> suffix_alpha;

    long long best = -1;
    std::vector<int> best_members;
    std::vector<int> chosen;
    BitRow chosen_bits;
    std::vector<int> deg_buffer;

    SubsetSearch(const Graph& graph, int subset_size, long long node_budget)
        : g(graph), n(graph.vertex_count()), s(subset_size), max_nodes(node_budget),
          chosen_bits(graph.vertex_count()) {
        suffix_alpha.assign(n + 1, 0);
        BitRow suffix(n);
        std::vector<int> tmp;
        for (int i = n - 1; i >= 0; --i) {
            suffix.set(i);
            MisSearch mis{g};
            tmp.clear();
            mis.run(tmp, suffix);
            suffix_alpha[i] = mis.best_size;
        }
        deg_buffer.reserve(n);
    }

    void dfs(int idx, long long edges) {
        if (++nodes > max_nodes)
            throw BudgetExceeded("min_edges_over_subsets: node budget exhausted after " +
                                 std::to_string(max_nodes) + " expansions");
        const int r = s - static_cast<int>(chosen.size());
        if (r == 0) {
            if (best < 0 || edges < best) {
                best = edges;
                best_members = chosen;
            }
            return;
        }
        if (n - idx < r) return;
        if (best >= 0) {
            if (best == 0) return;
            long long bound = edges;
            deg_buffer.clear();
            for (int v = idx; v < n; ++v)
                deg_buffer.push_back(g.neighbors(v).count_and(chosen_bits));
            std::nth_element(deg_buffer.begin(), deg_buffer.begin() + (r - 1), deg_buffer.end());
            for (int i = 0; i < r; ++i) bound += deg_buffer[i];
            bound += std::max(0, r - suffix_alpha[idx]);
            if (bound >= best) return;
        }
        long long into_chosen = g.neighbors(idx).count_and(chosen_bits);
        chosen.push_back(idx);
        chosen_bits.set(idx);
        dfs(idx + 1, edges + into_chosen);
        chosen.pop_back();
        chosen_bits.reset(idx);
        dfs(idx + 1, edges);
    }
};

}  // namespace detail

// Exact global minimum of induced edges over all s-subsets, with the
// lexicographically least witness.  When an independent s-subset exists
// the answer is 0 and only a cheap decision search runs.
inline SubsetSearchResult min_edges_over_subsets(const Graph& g, int s,
                                                 const SearchBudget& budget = {}) {
    const int n = g.vertex_count();
    if (s < 0 || s > n)
        throw std::out_of_range("min_edges_over_subsets: subset size out of range");
    if (s == 0) return {0, VertexSubset(n), 0};

    if (auto independent = lex_min_independent_set(g, s))
        return {0, std::move(*independent), 0};

    if (n > budget.max_subset_vertices)
        throw BudgetExceeded("min_edges_over_subsets: " + std::to_string(n) +
                             " vertices exceed subset-search cap " +
                             std::to_string(budget.max_subset_vertices));

    detail::SubsetSearch search(g, s, budget.max_nodes);
    search.dfs(0, 0);
    SubsetSearchResult result{search.best, VertexSubset(n), search.nodes};
    for (int v : search.best_members) result.witness.add(v);
    return result;
}

// Outcome of an (alpha, beta)-density query.  dense means every subset of
// floor(alpha*n) vertices spans strictly more than beta*n^2 edges; the
// witness (present exactly when not dense) is a subset spanning at most
// beta*n^2.
struct DensityVerdict {
    Rational alpha;
    Rational beta;
    int s = 0;
    bool dense = false;
    long long min_edges = 0;
    std::optional<std::pair<VertexSubset, long long>> witness;
};

inline DensityVerdict is_dense(const Graph& g, const Rational& alpha, const Rational& beta,
                               const SearchBudget& budget = {}) {
    if (!(Rational(0) < alpha && alpha <= Rational(1)))
        throw std::invalid_argument("is_dense: need 0 < alpha <= 1");
    if (beta < Rational(0)) throw std::invalid_argument("is_dense: need beta >= 0");
    const long long n = g.vertex_count();
    const int s = static_cast<int>((alpha * Rational(n)).floor().get_si());
    auto result = min_edges_over_subsets(g, s, budget);
    DensityVerdict verdict{alpha, beta, s, false, result.min_edges, std::nullopt};
    // Strict comparison, never rounded: dense iff min_edges > beta * n^2.
    verdict.dense = Rational(result.min_edges) > beta * Rational(n * n);
    if (!verdict.dense) verdict.witness = std::pair{std::move(result.witness), result.min_edges};
    return verdict;
}

// One evaluated arc half: the floor(n/2) consecutive vertices clockwise
// from a starting vertex.
struct SweepStart {
    int start_vertex;
    int z_vertex;
    long long edges;
};

struct SweepReport {
    long long min_edges = 0;
    int witness_start = -1;
    int witness_z = -1;
    CircularInterval witness_interval;
    std::vector<SweepStart> per_start;  // in clockwise position order
};

// Evaluates the arc half [xi, z_xi] for xi at every vertex position and
// returns the sparsest.  Moving xi between consecutive vertices never
// changes the arc's vertex set, so vertex starts cover all distinct arc
// halves.  Ties break towards the least starting vertex index.
inline SweepReport arc_sweep(const CircularArrangement& arr) {
    const int n = arr.n();
    if (n < 2) throw std::invalid_argument("arc_sweep: need n >= 2");
    const auto& order = arr.sorted_order();
    const int window = n / 2;

    SweepReport report{0, -1, -1,
                       CircularInterval::closed(CirclePoint{}, CirclePoint{}), {}};
    for (int p = 0; p < n; ++p) {
        VertexSubset members(n);
        for (int j = 0; j < window; ++j) members.add(order[(p + j) % n]);
        const int start = order[p];
        const int z = order[(p + window - 1) % n];
        const long long edges = induced_edge_count(arr.graph(), members);
        report.per_start.push_back({start, z, edges});
        if (report.witness_start == -1 || edges < report.min_edges ||
            (edges == report.min_edges && start < report.witness_start)) {
            report.min_edges = edges;
            report.witness_start = start;
            report.witness_z = z;
        }
    }
    report.witness_interval = CircularInterval::closed(arr.position(report.witness_start),
                                                       arr.position(report.witness_z));
    return report;
}

// One row of the beta-table experiment: the exact minimum edge ratio of
// floor(alpha*n)-subsets, next to the two conjectured lower-bound curves
// (2a-1)/4 and (5a-2)/25.
struct BetaRow {
    std::string construction;
    int n = 0;
    Rational alpha;
    int s = 0;
    std::optional<long long> min_edges;
    std::optional<Rational> ratio;
    Rational eq1_target;
    Rational eq2_target;
    std::string error;  // empty on success
};

inline std::vector<BetaRow> beta_table(const std::vector<std::pair<std::string, Graph>>& constructions,
                                       const std::vector<Rational>& alphas,
                                       const SearchBudget& budget = {}) {
    std::vector<BetaRow> rows;
    for (const auto& [label, graph] : constructions) {
        const long long n = graph.vertex_count();
        for (const auto& alpha : alphas) {
            BetaRow row;
            row.construction = label;
            row.n = static_cast<int>(n);
            row.alpha = alpha;
            row.s = static_cast<int>((alpha * Rational(n)).floor().get_si());
            row.eq1_target = (alpha * Rational(2) - Rational(1)) / Rational(4);
            row.eq2_target = (alpha * Rational(5) - Rational(2)) / Rational(25);
            if (n == 0) {
                row.error = "empty graph";
                rows.push_back(std::move(row));
                continue;
            }
            try {
                auto result = min_edges_over_subsets(graph, row.s, budget);
                row.min_edges = result.min_edges;
                row.ratio = Rational(result.min_edges) / Rational(n * n);
            } catch (const BudgetExceeded& e) {
                row.error = e.what();
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

}  // namespace sparsehalf
