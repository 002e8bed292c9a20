#include <catch2/catch_amalgamated.hpp>

#include <array>

#include "oracles.hpp"
#include "sparsehalf/circle_rep.hpp"
#include "sparsehalf/invariants.hpp"

using namespace sparsehalf;

namespace {
CirclePoint pt(long long num, long long den) { return CirclePoint(Rational(num, den)); }

CircularArrangement c5_blowup_t2() {
    return represent_blow_up(balanced_blow_up(generalized_andrasfai(2, 2), 2), 2);
}
}  // namespace

TEST_CASE("representation of F(2,2) with t = 1 sits on fifth roots") {
    auto arr = represent_blow_up(balanced_blow_up(generalized_andrasfai(2, 2), 1), 2);
    REQUIRE(arr.n() == 5);
    for (int v = 0; v < 5; ++v) CHECK(arr.position(v) == pt(v, 5));
    CHECK(verify_angle_property(arr).holds);
}

TEST_CASE("with t = 2 the first class occupies 0 and 1/60") {
    auto arr = c5_blowup_t2();
    // eps = 1/(2*3*5) = 1/30, within-class step eps/2 = 1/60
    CHECK(arr.position(0) == pt(0, 1));
    CHECK(arr.position(1) == pt(1, 60));
    CHECK(arr.position(2) == pt(1, 5));
    CHECK(arr.position(3) == pt(1, 5) + Rational(1, 60));
    CHECK(verify_angle_property(arr).holds);
}

TEST_CASE("hand-built fifth-roots arrangement satisfies the angle criterion") {
    Graph g = generalized_andrasfai(2, 2);
    std::vector<CirclePoint> roots;
    for (int v = 0; v < 5; ++v) roots.push_back(pt(v, 5));
    CircularArrangement arr(2, g, roots);
    auto result = verify_angle_property(arr);
    CHECK(result.holds);
    CHECK(!result.violating_pair.has_value());
}

TEST_CASE("a displaced vertex is reported as the first violating pair") {
    Graph g = generalized_andrasfai(2, 2);
    std::vector<CirclePoint> pos;
    for (int v = 0; v < 5; ++v) pos.push_back(pt(v, 5));
    pos[2] = pt(1, 10);  // too close to vertex 0 for an edge
    CircularArrangement arr(2, g, pos);
    auto result = verify_angle_property(arr);
    REQUIRE(!result.holds);
    CHECK(result.violating_pair == std::pair{0, 2});
}

TEST_CASE("representations of random blow-ups satisfy the angle criterion") {
    Rng rng(41);
    for (int k = 2; k <= 4; ++k) {
        for (int d = 1; d <= 4; ++d) {
            for (int trial = 0; trial < 5; ++trial) {
                BlowUp b = oracles::random_blow_up(rng, k, d, 3);
                CHECK(verify_angle_property(represent_blow_up(b, k)).holds);
            }
        }
    }
}

TEST_CASE("representation rejects a base that is not F^k_d") {
    BlowUp bad{cycle_graph(6), {1, 1, 1, 1, 1, 1}, cycle_graph(6), {0, 1, 2, 3, 4, 5}};
    CHECK_THROWS_AS(represent_blow_up(bad, 2), std::invalid_argument);
}

TEST_CASE("lambda counts on the t = 2 blow-up") {
    auto arr = c5_blowup_t2();
    CHECK(lambda_count(arr, CircularInterval::closed(pt(0, 1), pt(2, 5))) == HalfCount::whole(6));
    // anchored full circle with half endpoints counts n
    auto full = CircularInterval::full_circle(arr.position(0), EndpointMode::half, EndpointMode::half);
    CHECK(lambda_count(arr, full) == HalfCount::whole(10));
    // empty interval at a non-vertex point
    CHECK(lambda_count(arr, CircularInterval::closed(pt(1, 7), pt(1, 7))) == HalfCount::whole(0));
}

TEST_CASE("lambda agrees with the naive recount on random intervals") {
    Rng rng(42);
    auto arr = represent_blow_up(oracles::random_blow_up(rng, 3, 3, 3), 3);
    for (int trial = 0; trial < 200; ++trial) {
        auto modes = std::array{EndpointMode::closed, EndpointMode::open, EndpointMode::half};
        CircularInterval interval(rng.point(60), rng.point(60), modes[rng.uniform(3)],
                                  modes[rng.uniform(3)]);
        CHECK(lambda_count(arr, interval).twice == oracles::naive_lambda_doubled(arr, interval));
    }
}

TEST_CASE("z_xi closes the half arc") {
    auto arr = c5_blowup_t2();
    int z = z_xi(arr, pt(0, 1));
    CHECK(z == 4);  // first vertex of the third class
    CHECK(arr.position(z) == pt(2, 5));
    // z lands in the open middle arc when alpha < n/2
    Rational offset = pt(0, 1).forward_to(arr.position(z));
    CHECK(offset > Rational(1, 3));
    CHECK(offset < Rational(2, 3));

    auto single = represent_blow_up(balanced_blow_up(generalized_andrasfai(2, 2), 1), 2);
    int z5 = z_xi(single, pt(0, 1));
    CHECK(single.position(z5) == pt(1, 5));  // floor(5/2) = 2 vertices in [0, z]
}

TEST_CASE("the defining property of z_xi holds for random starting points") {
    Rng rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        int k = 2 + rng.uniform(3);
        auto arr = represent_blow_up(oracles::random_blow_up(rng, k, 1 + rng.uniform(3), 3), k);
        CirclePoint xi = rng.uniform(2) ? rng.point(89) : arr.position(rng.uniform(arr.n()));
        int z = z_xi(arr, xi);
        auto closed_arc = CircularInterval::closed(xi, arr.position(z));
        CHECK(lambda_count(arr, closed_arc) == HalfCount::whole(arr.n() / 2));
    }
}

TEST_CASE("z_xi_ccw closes the half arc from the other side") {
    Rng rng(44);
    for (int trial = 0; trial < 50; ++trial) {
        auto arr = represent_blow_up(oracles::random_blow_up(rng, 2, 2, 3), 2);
        CirclePoint xi = rng.uniform(2) ? rng.point(89) : arr.position(rng.uniform(arr.n()));
        int z = z_xi_ccw(arr, xi);
        CHECK(lambda_count(arr, CircularInterval::closed(arr.position(z), xi)) ==
              HalfCount::whole(arr.n() / 2));
    }
}

TEST_CASE("distinct positions are required") {
    Graph g(2);
    std::vector<CirclePoint> same{pt(1, 3), pt(1, 3)};
    CHECK_THROWS_AS(CircularArrangement(2, g, same), std::invalid_argument);
}
