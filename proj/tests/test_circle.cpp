#include <catch2/catch_amalgamated.hpp>

#include "sparsehalf/circle.hpp"
#include "sparsehalf/rng.hpp"

using namespace sparsehalf;

namespace {
CirclePoint pt(long long num, long long den) { return CirclePoint(Rational(num, den)); }
}  // namespace

TEST_CASE("angle_fraction takes the shorter arc") {
    CHECK(angle_fraction(pt(1, 10), pt(9, 10)) == Rational(1, 5));
    CHECK(angle_fraction(pt(0, 1), pt(1, 2)) == Rational(1, 2));
    // adjacency threshold for k = 2 is 1/3; 2/5 clears it
    CHECK(angle_fraction(pt(0, 1), pt(2, 5)) > Rational(1, 3));
}

TEST_CASE("angle_fraction is symmetric, zero on the diagonal, subadditive") {
    Rng rng(7);
    for (int i = 0; i < 300; ++i) {
        CirclePoint x = rng.point(60), y = rng.point(60), z = rng.point(60);
        CHECK(angle_fraction(x, y) == angle_fraction(y, x));
        CHECK(angle_fraction(x, x) == Rational(0));
        CHECK(angle_fraction(x, z) <= angle_fraction(x, y) + angle_fraction(y, z));
        CHECK(angle_fraction(x, y) <= Rational(1, 2));
        CHECK(angle_fraction(x, y) >= Rational(0));
    }
}

TEST_CASE("interval containment respects wraparound and endpoint modes") {
    auto wrap = CircularInterval::closed_open(pt(9, 10), pt(1, 5));
    CHECK(interval_contains(wrap, pt(0, 1)) == Containment::interior);
    CHECK(interval_contains(wrap, pt(1, 5)) == Containment::outside);
    CHECK(interval_contains(wrap, pt(9, 10)) == Containment::boundary_start);
    CHECK(interval_contains(wrap, pt(1, 2)) == Containment::outside);

    auto third = CircularInterval::closed(pt(0, 1), pt(1, 3));
    CHECK(interval_contains(third, pt(1, 3)) == Containment::boundary_end);

    auto full = CircularInterval::full_circle(pt(1, 4), EndpointMode::half, EndpointMode::half);
    CHECK(interval_contains(full, pt(3, 4)) == Containment::interior);
    CHECK(interval_contains(full, pt(1, 4)) == Containment::boundary_start);
}

TEST_CASE("interval lengths") {
    CHECK(interval_length(CircularInterval::closed_open(pt(9, 10), pt(1, 5))) == Rational(3, 10));
    // k = 3 threshold
    CHECK(interval_length(CircularInterval::closed(pt(0, 1), pt(2, 5))) == Rational(2, 5));
    CHECK(interval_length(CircularInterval::closed(pt(1, 7), pt(1, 7))) == Rational(0));
    CHECK(interval_length(CircularInterval::full_circle(pt(0, 1))) == Rational(1));
}

TEST_CASE("complementary intervals have lengths summing to one") {
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        CirclePoint a = rng.point(50), b = rng.point(50);
        if (a == b) continue;
        auto fwd = CircularInterval::closed_open(a, b);
        auto bwd = CircularInterval::closed_open(b, a);
        CHECK(fwd.length() + bwd.length() == Rational(1));
    }
}

TEST_CASE("point weights by endpoint mode") {
    auto closed = CircularInterval::closed(pt(0, 1), pt(1, 3));
    CHECK(point_weight(closed, pt(0, 1)) == HalfCount::whole(1));
    CHECK(point_weight(closed, pt(1, 6)) == HalfCount::whole(1));
    CHECK(point_weight(closed, pt(1, 3)) == HalfCount::whole(1));
    CHECK(point_weight(closed, pt(1, 2)) == HalfCount::whole(0));

    auto angled = CircularInterval::half_both(pt(0, 1), pt(1, 3));
    CHECK(point_weight(angled, pt(0, 1)) == HalfCount::halves(1));
    CHECK(point_weight(angled, pt(1, 3)) == HalfCount::halves(1));

    // full circle anchored at a point carries both endpoint weights there
    auto full = CircularInterval::full_circle(pt(1, 5), EndpointMode::half, EndpointMode::half);
    CHECK(point_weight(full, pt(1, 5)) == HalfCount::whole(1));
    CHECK(point_weight(full, pt(4, 5)) == HalfCount::whole(1));

    // degenerate single-point intervals: [x,x] is {x}, [x,x) is empty
    auto singleton = CircularInterval::closed(pt(2, 7), pt(2, 7));
    CHECK(point_weight(singleton, pt(2, 7)) == HalfCount::whole(1));
    auto empty = CircularInterval::closed_open(pt(2, 7), pt(2, 7));
    CHECK(point_weight(empty, pt(2, 7)) == HalfCount::whole(0));
}

TEST_CASE("half counts behave like exact half-integers") {
    HalfCount h = HalfCount::halves(3);
    CHECK(!h.is_integer());
    CHECK(h.to_rational() == Rational(3, 2));
    CHECK((h + HalfCount::halves(1)).whole_value() == 2);
    CHECK(HalfCount::whole(2).str() == "2");
    CHECK(HalfCount::halves(5).str() == "5/2");
}
