#include <catch2/catch_amalgamated.hpp>

#include "sparsehalf/andrasfai.hpp"
#include "sparsehalf/homomorphism.hpp"
#include "sparsehalf/invariants.hpp"

using namespace sparsehalf;

namespace {

// Independent construction of the classical Andrasfai graph straight from
// its definition: 3d-1 vertices, edge iff d <= |i-j| <= 2d-1 (1-based).
Graph classical_andrasfai(int d) {
    Graph g(3 * d - 1);
    for (int i = 1; i <= 3 * d - 1; ++i)
        for (int j = i + 1; j <= 3 * d - 1; ++j)
            if (j - i >= d && j - i <= 2 * d - 1) g.add_edge(i - 1, j - 1);
    return g;
}

bool is_cycle_of_length(const Graph& g, int len) {
    if (g.vertex_count() != len) return false;
    for (int v = 0; v < len; ++v)
        if (g.degree(v) != 2) return false;
    return is_connected(g);
}

}  // namespace

TEST_CASE("F(2,2) is the 5-cycle with the documented edges") {
    Graph g = generalized_andrasfai(2, 2);
    REQUIRE(g.vertex_count() == 5);
    auto expected = std::vector<std::pair<int, int>>{{0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}};
    CHECK(g.edges() == expected);
    CHECK(is_cycle_of_length(g, 5));
}

TEST_CASE("F(k,2) is the odd cycle C_{2k+1}") {
    for (int k = 2; k <= 5; ++k) CHECK(is_cycle_of_length(generalized_andrasfai(k, 2), 2 * k + 1));
}

TEST_CASE("F(3,3) has 12 vertices and is 3-regular") {
    Graph g = generalized_andrasfai(3, 3);
    CHECK(g.vertex_count() == 12);
    for (int v = 0; v < 12; ++v) CHECK(g.degree(v) == 3);
}

TEST_CASE("order, regularity and odd girth across the parameter grid") {
    for (int k = 2; k <= 5; ++k) {
        for (int d = 1; d <= 6; ++d) {
            Graph g = generalized_andrasfai(k, d);
            CHECK(g.vertex_count() == generalized_andrasfai_order(k, d));
            for (int v = 0; v < g.vertex_count(); ++v) CHECK(g.degree(v) == d);
            if (d == 1) {
                CHECK(g.vertex_count() == 2);
                CHECK(g.edge_count() == 1);  // K_2
                CHECK(!odd_girth(g).has_value());
            } else {
                CHECK(odd_girth(g) == 2 * k + 1);
            }
        }
    }
}

TEST_CASE("k = 2 recovers the classical family edge for edge") {
    for (int d = 1; d <= 6; ++d) CHECK(generalized_andrasfai(2, d) == classical_andrasfai(d));
}

TEST_CASE("parameter validation and recognition") {
    CHECK_THROWS_AS(generalized_andrasfai(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(generalized_andrasfai(2, 0), std::invalid_argument);
    CHECK(andrasfai_parameter_d(generalized_andrasfai(3, 4), 3) == 4);
    CHECK(!andrasfai_parameter_d(cycle_graph(6), 2).has_value());
    CHECK(!andrasfai_parameter_d(generalized_andrasfai(3, 4), 2).has_value());
    // K_2 is F^k_1 for every k
    CHECK(andrasfai_parameter_d(generalized_andrasfai(5, 1), 3) == 1);
}

TEST_CASE("balanced blow-up doubles classes") {
    BlowUp b = balanced_blow_up(generalized_andrasfai(2, 2), 2);
    CHECK(b.result.vertex_count() == 10);
    CHECK(b.result.edge_count() == 20);
    CHECK(b.class_of == std::vector<int>{0, 0, 1, 1, 2, 2, 3, 3, 4, 4});
    CHECK(b.class_start(3) == 6);
    CHECK(verify_homomorphism({b.result, b.base, b.class_of}));
}

TEST_CASE("zero multiplicity removes a class, t=1 is the identity blow-up") {
    Graph base = generalized_andrasfai(2, 2);
    BlowUp dropped = blow_up(base, {1, 1, 0, 1, 1});
    CHECK(dropped.result.vertex_count() == 4);
    CHECK(verify_homomorphism({dropped.result, base, dropped.class_of}));

    BlowUp same = balanced_blow_up(base, 1);
    CHECK(same.result == base);
    CHECK(same.class_of == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("blow-up edges follow the base adjacency exactly") {
    Graph base = generalized_andrasfai(3, 2);
    BlowUp b = blow_up(base, {2, 0, 1, 3, 1, 2, 1});
    for (int x = 0; x < b.result.vertex_count(); ++x)
        for (int y = x + 1; y < b.result.vertex_count(); ++y)
            CHECK(b.result.has_edge(x, y) == base.has_edge(b.class_of[x], b.class_of[y]));
    CHECK_THROWS_AS(blow_up(base, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(blow_up(base, {1, 1, 1, -1, 1, 1, 1}), std::invalid_argument);
}
