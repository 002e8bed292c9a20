#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <string>

#include "sparsehalf/rational.hpp"

namespace sparsehalf {

// A point on the unit circle R/Z, stored as an exact rational in [0, 1).
class CirclePoint {
public:
    CirclePoint() = default;
    explicit CirclePoint(const Rational& value) : v_(value.fractional()) {}

    const Rational& value() const { return v_; }

    CirclePoint operator+(const Rational& r) const { return CirclePoint(v_ + r); }
    CirclePoint operator-(const Rational& r) const { return CirclePoint(v_ - r); }

    // Clockwise (forward) distance from *this to dst, in [0, 1).
    Rational forward_to(const CirclePoint& dst) const { return (dst.v_ - v_).fractional(); }

    friend bool operator==(const CirclePoint& a, const CirclePoint& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const CirclePoint& a, const CirclePoint& b) {
        return a.v_ <=> b.v_;
    }

    std::string str() const { return v_.str(); }

private:
    Rational v_;  // in [0, 1)
};

// Smaller central angle between two points, as a fraction of the full
// turn: min((y-x) mod 1, (x-y) mod 1), always in [0, 1/2].
inline Rational angle_fraction(const CirclePoint& x, const CirclePoint& y) {
    Rational d = x.forward_to(y);
    if (d.is_zero()) return Rational(0);
    return min(d, Rational(1) - d);
}

// How an interval endpoint counts a vertex that lands exactly on it.
// "half" gives weight 1/2 and exists for the weighted counts lambda(<a,b>).
enum class EndpointMode { closed, open, half };

enum class Containment { outside, interior, boundary_start, boundary_end };

// Count in units of 1/2, kept exactly as a doubled integer.
struct HalfCount {
    std::int64_t twice = 0;

    static HalfCount whole(long long k) { return {2 * k}; }
    static HalfCount halves(long long h) { return {h}; }

    bool is_integer() const { return twice % 2 == 0; }
    long long whole_value() const {
        assert(is_integer());
        return twice / 2;
    }
    Rational to_rational() const { return Rational(twice, 2); }

    HalfCount operator+(HalfCount o) const { return {twice + o.twice}; }
    HalfCount operator-(HalfCount o) const { return {twice - o.twice}; }
    HalfCount& operator+=(HalfCount o) { twice += o.twice; return *this; }
    HalfCount& operator-=(HalfCount o) { twice -= o.twice; return *this; }
    friend bool operator==(HalfCount a, HalfCount b) = default;
    friend auto operator<=>(HalfCount a, HalfCount b) = default;

    std::string str() const {
        if (is_integer()) return std::to_string(twice / 2);
        return std::to_string(twice) + "/2";
    }
};

// An arc of the unit circle from start clockwise to end, with per-endpoint
// counting modes.  A full_circle interval covers everything; its start and
// end coincide at one anchor point whose modes still apply (this is what
// makes lambda(<x, x+1>) count the anchor vertex with weight 1/2 + 1/2).
class CircularInterval {
public:
    CircularInterval(CirclePoint start, CirclePoint end,
                     EndpointMode start_mode = EndpointMode::closed,
                     EndpointMode end_mode = EndpointMode::closed)
        : start_(start), end_(end), start_mode_(start_mode), end_mode_(end_mode) {}

    static CircularInterval full_circle(CirclePoint anchor,
                                        EndpointMode start_mode = EndpointMode::closed,
                                        EndpointMode end_mode = EndpointMode::open) {
        CircularInterval i(anchor, anchor, start_mode, end_mode);
        i.full_ = true;
        return i;
    }

    // [a, b]
    static CircularInterval closed(CirclePoint a, CirclePoint b) {
        return {a, b, EndpointMode::closed, EndpointMode::closed};
    }
    // (a, b)
    static CircularInterval open(CirclePoint a, CirclePoint b) {
        return {a, b, EndpointMode::open, EndpointMode::open};
    }
    // [a, b)
    static CircularInterval closed_open(CirclePoint a, CirclePoint b) {
        return {a, b, EndpointMode::closed, EndpointMode::open};
    }
    // (a, b]
    static CircularInterval open_closed(CirclePoint a, CirclePoint b) {
        return {a, b, EndpointMode::open, EndpointMode::closed};
    }
    // <a, b>  (both endpoints weighted 1/2)
    static CircularInterval half_both(CirclePoint a, CirclePoint b) {
        return {a, b, EndpointMode::half, EndpointMode::half};
    }
    // <a, b]
    static CircularInterval half_closed(CirclePoint a, CirclePoint b) {
        return {a, b, EndpointMode::half, EndpointMode::closed};
    }

    const CirclePoint& start() const { return start_; }
    const CirclePoint& end() const { return end_; }
    EndpointMode start_mode() const { return start_mode_; }
    EndpointMode end_mode() const { return end_mode_; }
    bool is_full_circle() const { return full_; }

    // (end - start) mod 1, or exactly 1 for the full circle.
    Rational length() const {
        if (full_) return Rational(1);
        return start_.forward_to(end_);
    }

private:
    CirclePoint start_, end_;
    EndpointMode start_mode_, end_mode_;
    bool full_ = false;
};

inline Rational interval_length(const CircularInterval& interval) { return interval.length(); }

namespace detail {
inline std::int64_t endpoint_halves(EndpointMode m) {
    switch (m) {
        case EndpointMode::closed: return 2;
        case EndpointMode::half: return 1;
        case EndpointMode::open: return 0;
    }
    return 0;
}
}  // namespace detail

// Exact counting weight of point p relative to interval, in halves:
// 0 outside, 2 interior, endpoint weight on a boundary.  On the full
// circle the anchor point carries both endpoint weights; on a degenerate
// single-point interval the two modes meet in one spot and the weaker
// one wins ([x,x] = {x} but [x,x) is empty).
inline HalfCount point_weight(const CircularInterval& interval, const CirclePoint& p) {
    const std::int64_t ws = detail::endpoint_halves(interval.start_mode());
    const std::int64_t we = detail::endpoint_halves(interval.end_mode());
    Rational offset = interval.start().forward_to(p);
    if (interval.is_full_circle()) {
        if (offset.is_zero()) return HalfCount::halves(ws + we);
        return HalfCount::whole(1);
    }
    Rational len = interval.length();
    if (len.is_zero()) {
        if (offset.is_zero()) return HalfCount::halves(ws < we ? ws : we);
        return HalfCount::whole(0);
    }
    if (offset.is_zero()) return HalfCount::halves(ws);
    if (offset == len) return HalfCount::halves(we);
    if (offset < len) return HalfCount::whole(1);
    return HalfCount::whole(0);
}

// Classifies p against the interval.  A point sitting exactly on an open
// endpoint is outside; on a closed or half endpoint it is a boundary.
// When start and end coincide (full circle or degenerate interval) the
// start classification wins if the start mode admits the point at all.
inline Containment interval_contains(const CircularInterval& interval, const CirclePoint& p) {
    if (point_weight(interval, p).twice == 0) return Containment::outside;
    Rational offset = interval.start().forward_to(p);
    const bool start_admits = detail::endpoint_halves(interval.start_mode()) > 0;
    if (interval.is_full_circle()) {
        if (!offset.is_zero()) return Containment::interior;
        return start_admits ? Containment::boundary_start : Containment::boundary_end;
    }
    Rational len = interval.length();
    if (len.is_zero()) {
        return start_admits ? Containment::boundary_start : Containment::boundary_end;
    }
    if (offset.is_zero()) return Containment::boundary_start;
    if (offset == len) return Containment::boundary_end;
    return Containment::interior;
}

}  // namespace sparsehalf
