#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sparsehalf {

namespace detail {

// Fixed-size bit row over 64-bit words; the building block for adjacency
// rows and vertex subsets.
class BitRow {
public:
    BitRow() = default;
    explicit BitRow(int n) : n_(n), words_((n + 63) / 64, 0) {}

    int universe_size() const { return n_; }
    void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    int count_and(const BitRow& o) const {
        assert(n_ == o.n_);
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }

    BitRow& operator&=(const BitRow& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    BitRow& operator|=(const BitRow& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    BitRow& subtract(const BitRow& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    bool empty() const {
        for (std::uint64_t w : words_) if (w) return false;
        return true;
    }

    // Lowest set bit, or -1.
    int first() const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (words_[i]) return static_cast<int>(i) * 64 + std::countr_zero(words_[i]);
        }
        return -1;
    }

    void set_all() {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] = ~std::uint64_t{0};
        trim();
    }

    std::vector<int> members() const {
        std::vector<int> out;
        for (int i = 0; i < n_; ++i) if (test(i)) out.push_back(i);
        return out;
    }

    friend bool operator==(const BitRow& a, const BitRow& b) {
        return a.n_ == b.n_ && a.words_ == b.words_;
    }

private:
    void trim() {
        int extra = static_cast<int>(words_.size()) * 64 - n_;
        if (extra > 0 && !words_.empty()) words_.back() &= ~std::uint64_t{0} >> extra;
    }

    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace detail

// Subset of the vertices of an n-vertex graph.
class VertexSubset {
public:
    VertexSubset() = default;
    explicit VertexSubset(int n) : bits_(n) {}
    VertexSubset(int n, std::initializer_list<int> members) : bits_(n) {
        for (int v : members) add(v);
    }
    static VertexSubset all(int n) {
        VertexSubset s(n);
        s.bits_.set_all();
        return s;
    }

    int universe_size() const { return bits_.universe_size(); }
    int size() const { return bits_.count(); }
    bool contains(int v) const { return check(v), bits_.test(v); }
    void add(int v) { check(v); bits_.set(v); }
    void remove(int v) { check(v); bits_.reset(v); }
    std::vector<int> members() const { return bits_.members(); }

    const detail::BitRow& bits() const { return bits_; }
    detail::BitRow& bits() { return bits_; }

    friend bool operator==(const VertexSubset& a, const VertexSubset& b) {
        return a.bits_ == b.bits_;
    }

private:
    void check(int v) const {
        if (v < 0 || v >= bits_.universe_size())
            throw std::out_of_range("VertexSubset: vertex " + std::to_string(v) + " out of range");
    }
    detail::BitRow bits_;
};

// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
// Queries are pure; treat instances as immutable once built.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), rows_(n, detail::BitRow(n)) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    }

    int vertex_count() const { return n_; }

    void add_edge(int u, int v) {
        check(u);
        check(v);
        if (u == v) throw std::invalid_argument("Graph: no loops");
        rows_[u].set(v);
        rows_[v].set(u);
    }

    bool has_edge(int u, int v) const {
        check(u);
        check(v);
        return rows_[u].test(v);
    }

    int degree(int v) const {
        check(v);
        return rows_[v].count();
    }

    const detail::BitRow& neighbors(int v) const {
        check(v);
        return rows_[v];
    }

    long long edge_count() const {
        long long total = 0;
        for (int v = 0; v < n_; ++v) total += rows_[v].count();
        return total / 2;
    }

    // Sorted list of edges {u, v} with u < v.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (rows_[u].test(v)) out.emplace_back(u, v);
        return out;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.rows_ == b.rows_;
    }

private:
    void check(int v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("Graph: vertex " + std::to_string(v) + " out of range");
    }

    int n_ = 0;
    std::vector<detail::BitRow> rows_;
};

// Number of edges with both endpoints in the subset.
inline long long induced_edge_count(const Graph& g, const VertexSubset& subset) {
    if (subset.universe_size() != g.vertex_count())
        throw std::out_of_range("induced_edge_count: subset universe mismatch");
    long long doubled = 0;
    for (int v : subset.members()) doubled += g.neighbors(v).count_and(subset.bits());
    return doubled / 2;
}

inline bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u = 0; u < n; ++u) {
            if (!seen[u] && g.neighbors(v).test(u)) {
                seen[u] = 1;
                ++reached;
                stack.push_back(u);
            }
        }
    }
    return reached == n;
}

// --- named constructions ---------------------------------------------------

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

inline Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("complete_bipartite: need a, b >= 1");
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

// Kneser-style Petersen graph: vertices are the 2-subsets of {0..4} in
// lexicographic order, adjacent when disjoint.
inline Graph petersen_graph() {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) pairs.emplace_back(a, b);
    Graph g(10);
    for (int i = 0; i < 10; ++i) {
        for (int j = i + 1; j < 10; ++j) {
            auto [a, b] = pairs[i];
            auto [c, d] = pairs[j];
            if (a != c && a != d && b != c && b != d) g.add_edge(i, j);
        }
    }
    return g;
}

}  // namespace sparsehalf
