#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "oracles.hpp"
#include "sparsehalf/homomorphism.hpp"
#include "sparsehalf/invariants.hpp"

using namespace sparsehalf;

namespace {
Graph andrasfai(int d) { return generalized_andrasfai(2, d); }
}  // namespace

TEST_CASE("verify_homomorphism") {
    Graph c5 = cycle_graph(5);
    std::vector<int> identity(5);
    std::iota(identity.begin(), identity.end(), 0);
    CHECK(verify_homomorphism({c5, c5, identity}));
    // collapsing an edge's endpoints onto non-adjacent images fails
    CHECK(!verify_homomorphism({c5, c5, {0, 0, 1, 2, 3}}));
    CHECK_THROWS_AS(verify_homomorphism({c5, c5, {0, 1}}), std::out_of_range);
    CHECK_THROWS_AS(verify_homomorphism({c5, c5, {0, 1, 2, 3, 7}}), std::out_of_range);
}

TEST_CASE("found homomorphisms verify; absence matches brute force") {
    auto some = find_homomorphism(andrasfai(3), andrasfai(4));
    REQUIRE(some.has_value());
    CHECK(verify_homomorphism(*some));

    CHECK(!find_homomorphism(andrasfai(4), andrasfai(3)).has_value());

    auto fold = find_homomorphism(cycle_graph(7), cycle_graph(5));
    REQUIRE(fold.has_value());
    CHECK(verify_homomorphism(*fold));
    CHECK(oracles::naive_homomorphism_exists(cycle_graph(7), cycle_graph(5)));
    CHECK(!oracles::naive_homomorphism_exists(cycle_graph(5), cycle_graph(7)));
    CHECK(!find_homomorphism(cycle_graph(5), cycle_graph(7)).has_value());
}

TEST_CASE("existence agrees with brute force on random small instances") {
    Rng rng(71);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = oracles::random_graph(rng, 4 + rng.uniform(3), 45);
        Graph h = oracles::random_graph(rng, 3 + rng.uniform(3), 55);
        CHECK(find_homomorphism(g, h).has_value() == oracles::naive_homomorphism_exists(g, h));
    }
}

TEST_CASE("composition of found homomorphisms is a homomorphism") {
    auto gh = find_homomorphism(cycle_graph(9), cycle_graph(7));
    auto hk = find_homomorphism(cycle_graph(7), cycle_graph(5));
    REQUIRE(gh.has_value());
    REQUIRE(hk.has_value());
    std::vector<int> composed(gh->map.size());
    for (std::size_t v = 0; v < composed.size(); ++v) composed[v] = hk->map[gh->map[v]];
    CHECK(verify_homomorphism({cycle_graph(9), cycle_graph(5), composed}));
}

TEST_CASE("maps to K_2 exist exactly for bipartite graphs") {
    Graph k2 = generalized_andrasfai(2, 1);
    Rng rng(72);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = oracles::random_graph(rng, 4 + rng.uniform(5), 35);
        CHECK(find_homomorphism(g, k2).has_value() == !odd_girth(g).has_value());
    }
}

TEST_CASE("min_andrasfai_index") {
    CHECK(min_andrasfai_index(cycle_graph(5), 2, 5) == 2);
    CHECK(min_andrasfai_index(complete_bipartite(3, 3), 2, 5) == 1);
    CHECK(min_andrasfai_index(cycle_graph(7), 2, 5) == 2);
    CHECK(!min_andrasfai_index(cycle_graph(3), 2, 5).has_value());
}

TEST_CASE("caps are enforced") {
    HomCaps tight{4, 40};
    CHECK_THROWS_AS(find_homomorphism(cycle_graph(5), cycle_graph(5), tight), CapExceeded);
    HomCaps tight_target{40, 4};
    CHECK_THROWS_AS(find_homomorphism(cycle_graph(5), cycle_graph(5), tight_target), CapExceeded);
}
