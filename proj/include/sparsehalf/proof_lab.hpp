#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sparsehalf/circle.hpp"
#include "sparsehalf/circle_rep.hpp"
#include "sparsehalf/density.hpp"
#include "sparsehalf/graph.hpp"
#include "sparsehalf/invariants.hpp"
#include "sparsehalf/rational.hpp"

namespace sparsehalf {

// Machine check of one lemma instance.  Conditional statements are checked
// as implications whose hypothesis is the density assumption restricted to
// the arc halves the statement actually uses; implication_held is the
// quantity that must always come out true.
struct CheckReport {
    std::string check_id;
    bool hypotheses_held = false;
    bool conclusion_held = false;
    bool implication_held = false;
    std::vector<std::pair<std::string, std::string>> trace;

    void note(std::string name, std::string value) {
        trace.emplace_back(std::move(name), std::move(value));
    }
    void finish() { implication_held = !hypotheses_held || conclusion_held; }
};

enum class LemmaPart { i, ii, iii, iv, vi, u4 };

inline std::string lemma_part_name(LemmaPart part) {
    switch (part) {
        case LemmaPart::i: return "i";
        case LemmaPart::ii: return "ii";
        case LemmaPart::iii: return "iii";
        case LemmaPart::iv: return "iv";
        case LemmaPart::vi: return "vi";
        case LemmaPart::u4: return "u4";
    }
    return "?";
}

namespace detail {

// Edge count of the arc half [xi, z_xi] together with its closing vertex.
struct ArcHalf {
    int z;
    long long edges;
};

inline ArcHalf arc_half(const CircularArrangement& arr, const CirclePoint& xi) {
    int z = z_xi(arr, xi);
    auto members = vertices_in(arr, CircularInterval::closed(xi, arr.position(z)));
    return {z, induced_edge_count(arr.graph(), members)};
}

inline ArcHalf arc_half_ccw(const CircularArrangement& arr, const CirclePoint& xi) {
    int z = z_xi_ccw(arr, xi);
    auto members = vertices_in(arr, CircularInterval::closed(arr.position(z), xi));
    return {z, induced_edge_count(arr.graph(), members)};
}

inline Rational density_threshold(int k, long long n) {
    return Rational(n * n) / Rational(2 * (2 * k + 1) * (2 * k + 1));
}

}  // namespace detail

// Parts i-iii: interval statements, checked unconditionally (the
// hypothesis is just the interval-length condition of the part).
inline CheckReport check_useful_lemma(const CircularArrangement& arr, LemmaPart part,
                                      const CircularInterval& interval) {
    const int k = arr.k();
    const long long n = arr.n();
    const long long alpha = independence_number(arr.graph()).size;
    const Rational len = interval.length();

    CheckReport report;
    report.check_id = "lemma-" + lemma_part_name(part);
    report.note("n", std::to_string(n));
    report.note("alpha", std::to_string(alpha));
    report.note("interval_start", interval.start().str());
    report.note("interval_length", len.str());

    const HalfCount lambda = lambda_count(arr, interval);
    report.note("lambda", lambda.str());

    switch (part) {
        case LemmaPart::i: {
            report.hypotheses_held = len <= Rational(k - 1, 2 * k - 1);
            auto members = vertices_in(arr, interval).members();
            bool independent = true;
            for (std::size_t a = 0; a < members.size() && independent; ++a)
                for (std::size_t b = a + 1; b < members.size(); ++b)
                    if (arr.graph().has_edge(members[a], members[b])) {
                        independent = false;
                        break;
                    }
            report.note("members_independent", independent ? "true" : "false");
            report.conclusion_held =
                independent && lambda.to_rational() <= Rational(alpha);
            break;
        }
        case LemmaPart::ii: {
            report.hypotheses_held = len <= Rational(1, 2 * k - 1);
            Rational bound = Rational((2 * k - 3) * alpha - (k - 2) * n);
            report.note("bound", bound.str());
            report.conclusion_held = lambda.to_rational() <= bound;
            break;
        }
        case LemmaPart::iii: {
            report.hypotheses_held = len >= Rational(1, 2 * k - 1);
            Rational bound = Rational(n - 2 * alpha);
            report.note("bound", bound.str());
            report.conclusion_held = lambda.to_rational() >= bound;
            break;
        }
        default:
            throw std::invalid_argument("check_useful_lemma: parts iv/vi/u4 take a point, not an interval");
    }
    report.finish();
    return report;
}

// Parts iv, vi and u4: arc statements at a point xi.  These are the
// conditional parts; the density hypothesis is evaluated on exactly the
// arc halves used ([xi, z_xi], and for vi also the mirrored [z'_xi, xi]),
// together with alpha(G) < n/2, which global density would imply.  For
// u4 the trace additionally carries the running-sum claim over
// V_xi = V cap [xi, z_xi - (k-1)/(2k-1)) and its sign, which is part of
// the checked conclusion.
inline CheckReport check_useful_lemma(const CircularArrangement& arr, LemmaPart part,
                                      const CirclePoint& xi) {
    const int k = arr.k();
    const long long n = arr.n();
    if (n % (2 * (2 * k + 1)) != 0)
        throw std::invalid_argument("check_useful_lemma: need 2(2k+1) | n for parts iv/vi/u4");
    if (part != LemmaPart::iv && part != LemmaPart::vi && part != LemmaPart::u4)
        throw std::invalid_argument("check_useful_lemma: parts i-iii take an interval, not a point");

    const long long alpha = independence_number(arr.graph()).size;
    const Rational c(k - 1, 2 * k - 1);
    const Rational thr = detail::density_threshold(k, n);
    const bool alpha_small = 2 * alpha < n;

    CheckReport report;
    report.check_id = "lemma-" + lemma_part_name(part);
    report.note("n", std::to_string(n));
    report.note("alpha", std::to_string(alpha));
    report.note("xi", xi.str());
    report.note("density_threshold", thr.str());
    report.note("alpha_below_half", alpha_small ? "true" : "false");

    const auto arc = detail::arc_half(arr, xi);
    const CirclePoint z_pos = arr.position(arc.z);
    const bool arc_dense = Rational(arc.edges) > thr;
    report.note("z_xi_vertex", std::to_string(arc.z));
    report.note("z_xi_position", z_pos.str());
    report.note("arc_edges", std::to_string(arc.edges));
    report.note("arc_dense", arc_dense ? "true" : "false");

    switch (part) {
        case LemmaPart::u4: {
            report.hypotheses_held = arc_dense && alpha_small;
            const HalfCount a_side =
                lambda_count(arr, CircularInterval::closed_open(xi, z_pos - c));
            const HalfCount b_side =
                lambda_count(arr, CircularInterval::open_closed(xi + c, z_pos));
            const Rational rhs = Rational(2 * n, 2 * k + 1) - Rational(2) * b_side.to_rational();
            report.note("lambda_left_of_zc", a_side.str());
            report.note("lambda_right_of_c", b_side.str());
            report.note("u4_rhs", rhs.str());
            const bool display = a_side.to_rational() > rhs;
            report.note("u4_display_held", display ? "true" : "false");

            // Running-sum claim over V_xi.
            auto v_xi = vertices_in(arr, CircularInterval::closed_open(xi, z_pos - c)).members();
            Rational claim_sum(0);
            const Rational per_vertex = Rational((2 * k - 1) * n, 2 * (2 * k + 1));
            for (int x : v_xi) {
                const CirclePoint px = arr.position(x);
                claim_sum += lambda_count(arr, CircularInterval::half_both(px, px + c)).to_rational();
                claim_sum -= per_vertex;
            }
            const bool claim = claim_sum < Rational(0);
            report.note("claim31a_sum", claim_sum.str());
            report.note("claim31a_held", claim ? "true" : "false");

            report.conclusion_held = display && claim;
            break;
        }
        case LemmaPart::iv: {
            const HalfCount at_c = lambda_count(arr, CircularInterval::closed(xi, xi + c));
            const bool pinned = at_c.to_rational() == Rational(alpha);
            report.note("lambda_xi_to_c", at_c.str());
            report.note("independent_arc_pinned", pinned ? "true" : "false");
            report.hypotheses_held = pinned && arc_dense && alpha_small;
            const HalfCount lhs =
                lambda_count(arr, CircularInterval::closed_open(xi, z_pos - c));
            const Rational rhs =
                Rational(2 * alpha) - Rational((2 * k - 1) * n, 2 * k + 1);
            report.note("iv_lhs", lhs.str());
            report.note("iv_rhs", rhs.str());
            report.conclusion_held = lhs.to_rational() > rhs;
            break;
        }
        case LemmaPart::vi: {
            const auto mirror = detail::arc_half_ccw(arr, xi);
            const bool mirror_dense = Rational(mirror.edges) > thr;
            report.note("z_prime_vertex", std::to_string(mirror.z));
            report.note("mirror_arc_edges", std::to_string(mirror.edges));
            report.note("mirror_arc_dense", mirror_dense ? "true" : "false");
            report.hypotheses_held = arc_dense && mirror_dense && alpha_small;

            const Rational w(1, 2 * k - 1);
            const HalfCount lhs =
                lambda_count(arr, CircularInterval::open(xi - w, xi + w));
            const HalfCount far_side =
                lambda_count(arr, CircularInterval::open(xi + c, xi - c));
            const Rational rhs =
                Rational(4 * n, 2 * k + 1) - Rational(2) * far_side.to_rational();
            report.note("vi_lhs", lhs.str());
            report.note("lambda_far_arc", far_side.str());
            report.note("vi_rhs", rhs.str());
            report.conclusion_held = lhs.to_rational() > rhs;
            break;
        }
        default:
            break;
    }
    report.finish();
    return report;
}

struct PartitionIdentityResult {
    bool equal = false;
    HalfCount lhs;
    HalfCount rhs;
};

// Unconditional circle-partition identity, evaluated in exact half-integer
// arithmetic:
//   sum_x [ lambda(<x-c, x>) + lambda(<x, x+c>) ]
//     = sum_x [ lambda(<x, x+1>) - lambda(<x+c, x+k/(2k-1)>) ]
// with c = (k-1)/(2k-1).
inline PartitionIdentityResult partition_identity_check(const CircularArrangement& arr) {
    const int k = arr.k();
    const Rational c(k - 1, 2 * k - 1);
    const Rational w(1, 2 * k - 1);
    HalfCount lhs{}, rhs{};
    for (int v = 0; v < arr.n(); ++v) {
        const CirclePoint x = arr.position(v);
        lhs += lambda_count(arr, CircularInterval::half_both(x - c, x));
        lhs += lambda_count(arr, CircularInterval::half_both(x, x + c));
        rhs += lambda_count(arr, CircularInterval::full_circle(x, EndpointMode::half,
                                                               EndpointMode::half));
        rhs -= lambda_count(arr, CircularInterval::half_both(x + c, x + c + w));
    }
    return {lhs == rhs, lhs, rhs};
}

// Orbit of the map xi -> z_xi - (k-1)/(2k-1) on V* = { xi : xi + c in V }.
struct WindingTrace {
    CirclePoint start;                // x(0), on the cycle
    std::vector<CirclePoint> points;  // x(0), ..., x(m); x(m) == x(0)
    int period = 0;                   // m >= 2
    long long winding = 0;            // full turns per period, >= 1
};

inline WindingTrace winding_trace(const CircularArrangement& arr, const CirclePoint& x0) {
    const int k = arr.k();
    const Rational c(k - 1, 2 * k - 1);
    const long long n = arr.n();
    const long long alpha = independence_number(arr.graph()).size;
    if (2 * alpha >= n)
        throw std::domain_error("winding_trace: need alpha(G) < n/2");
    {
        bool member = false;
        const CirclePoint image = x0 + c;
        for (int v = 0; v < arr.n() && !member; ++v) member = arr.position(v) == image;
        if (!member) throw std::invalid_argument("winding_trace: x0 + (k-1)/(2k-1) must be a vertex");
    }

    std::vector<CirclePoint> seq{x0};
    std::map<CirclePoint, int> first_seen{{x0, 0}};
    for (;;) {
        const CirclePoint cur = seq.back();
        const CirclePoint next = arr.position(z_xi(arr, cur)) - c;
        if (next == cur)
            throw std::domain_error("winding_trace: fixed point (alpha too close to n/2)");
        auto [it, inserted] = first_seen.try_emplace(next, static_cast<int>(seq.size()));
        seq.push_back(next);
        if (!inserted) {
            const int cycle_start = it->second;
            WindingTrace trace;
            trace.start = seq[cycle_start];
            trace.points.assign(seq.begin() + cycle_start, seq.end());
            trace.period = static_cast<int>(trace.points.size()) - 1;
            Rational total(0);
            for (int i = 0; i < trace.period; ++i)
                total += trace.points[i].forward_to(trace.points[i + 1]);
            // Total displacement around a closed orbit is a whole number of turns.
            if (!total.is_integer())
                throw std::logic_error("winding_trace: non-integer winding");
            trace.winding = total.floor().get_si();
            return trace;
        }
    }
}

// Geometry of the (2k-1)-gon construction: after rotating a maximum
// independent set into [0, (k-1)/(2k-1)], places b_k at z_0 and completes
// a regular (2k-1)-gon.  The identity lambda((z_0, z')) = alpha(G) and
// the inequality (g2) are unconditional; (g1) and (g3) are implications
// under the localized arc-density hypothesis.
struct Prop32Report {
    int k = 0;
    long long n = 0;
    long long alpha = 0;
    Rational rotation_offset;   // original position rotated to 0
    int start_vertex = -1;      // vertex at 0 after rotation
    int z0 = -1;                // lambda([0, z0]) = n/2
    int z_prime = -1;           // lambda([z', c]) = n/2
    std::vector<CirclePoint> b;  // b_0..b_{2k-2}, rotated coordinates

    long long lambda_z0_zprime = 0;
    bool identity_held = false;

    long long g2_lhs = 0;
    long long g2_rhs = 0;
    bool g2_held = false;

    bool g1_hypotheses_held = false;
    bool g1_conclusion_held = false;
    bool g1_implication_held = false;

    bool g3_applicable = false;  // the gon argument needs k >= 4
    bool g3_hypotheses_held = false;
    bool g3_conclusion_held = false;
    bool g3_implication_held = false;

    std::vector<CircularInterval> family_even;  // I_0
    std::vector<CircularInterval> family_odd;   // I_1
    std::vector<std::pair<std::string, std::string>> trace;
};

inline Prop32Report prop32_geometry(const CircularArrangement& input) {
    const int k = input.k();
    const long long n = input.n();
    if (n % 2 != 0)
        throw std::invalid_argument("prop32_geometry: needs even n (z' closes a half arc)");
    const auto independence = independence_number(input.graph());
    const long long alpha = independence.size;
    if (2 * alpha >= n) throw std::domain_error("prop32_geometry: needs alpha(G) < n/2");

    // Deterministic rotation: among all maximum independent sets, take the
    // minimal covering arc whose start has the least vertex index.
    int start_vertex = -1;
    Rational best_arc_len;
    for (const auto& mis : all_maximum_independent_sets(input.graph())) {
        auto members = mis.members();
        std::sort(members.begin(), members.end(), [&](int a, int b) {
            return input.position(a) < input.position(b);
        });
        const int count = static_cast<int>(members.size());
        Rational largest_gap(-1);
        int arc_start = -1;
        for (int i = 0; i < count; ++i) {
            int next = (i + 1) % count;
            Rational gap = input.position(members[i]).forward_to(input.position(members[next]));
            if (count == 1) gap = Rational(1);
            if (gap > largest_gap ||
                (gap == largest_gap && members[next] < arc_start)) {
                largest_gap = gap;
                arc_start = members[next];
            }
        }
        if (start_vertex == -1 || arc_start < start_vertex) {
            start_vertex = arc_start;
            best_arc_len = Rational(1) - largest_gap;
        }
    }
    if (best_arc_len > Rational(k - 1, 2 * k - 1))
        throw std::logic_error("prop32_geometry: maximum independent set not inside an arc of length (k-1)/(2k-1)");

    Prop32Report report;
    report.k = k;
    report.n = n;
    report.alpha = alpha;
    report.start_vertex = start_vertex;
    report.rotation_offset = input.position(start_vertex).value();

    const CircularArrangement arr = input.rotated(report.rotation_offset);
    const CirclePoint origin{Rational(0)};
    const Rational c(k - 1, 2 * k - 1);
    const CirclePoint c_point = origin + c;

    const HalfCount pinned = lambda_count(arr, CircularInterval::closed(origin, c_point));
    if (pinned.to_rational() != Rational(alpha))
        throw std::logic_error("prop32_geometry: rotated arc [0, c] does not pin alpha vertices");

    report.z0 = z_xi(arr, origin);
    report.z_prime = z_xi_ccw(arr, c_point);
    const CirclePoint z0_pos = arr.position(report.z0);
    const CirclePoint zp_pos = arr.position(report.z_prime);

    // [b_k, b_0] is the leftmost length-c subinterval of [z_0, z'].
    if (z0_pos.forward_to(zp_pos) < c)
        throw std::logic_error("prop32_geometry: [z_0, z'] shorter than (k-1)/(2k-1)");
    const int gon = 2 * k - 1;
    report.b.resize(gon);
    for (int i = 0; i < gon; ++i)
        report.b[i] = z0_pos + Rational(((i - k) % gon + gon) % gon, gon);

    auto note = [&](std::string name, std::string value) {
        report.trace.emplace_back(std::move(name), std::move(value));
    };
    note("alpha", std::to_string(alpha));
    note("n", std::to_string(n));
    note("rotation_offset", report.rotation_offset.str());
    note("z0_position", z0_pos.str());
    note("z_prime_position", zp_pos.str());

    // Identity lambda((z_0, z')) == alpha.
    report.lambda_z0_zprime =
        lambda_count(arr, CircularInterval::open(z0_pos, zp_pos)).whole_value();
    report.identity_held = report.lambda_z0_zprime == alpha;
    note("lambda_z0_zprime", std::to_string(report.lambda_z0_zprime));

    auto b_at = [&](int i) { return report.b[((i % gon) + gon) % gon]; };

    // (g2): lambda((b_{k+1}, b_{2k-2})) <= 2 alpha - lambda((b_{k-1}, b_1)).
    report.g2_lhs =
        lambda_count(arr, CircularInterval::open(b_at(k + 1), b_at(2 * k - 2))).whole_value();
    const long long lambda_bk1_b1 =
        lambda_count(arr, CircularInterval::open(b_at(k - 1), b_at(1))).whole_value();
    report.g2_rhs = 2 * alpha - lambda_bk1_b1;
    report.g2_held = report.g2_lhs <= report.g2_rhs;
    note("g2_lhs", std::to_string(report.g2_lhs));
    note("g2_rhs", std::to_string(report.g2_rhs));

    // (g1): under density of the halves [0, z_0] and [z', c],
    // lambda([b_1, b_{k-1}]) < (4k-2)n/(2k+1) - 3 alpha.
    const Rational thr = detail::density_threshold(k, n);
    const auto front_half = vertices_in(arr, CircularInterval::closed(origin, z0_pos));
    const auto back_half = vertices_in(arr, CircularInterval::closed(zp_pos, c_point));
    const long long front_edges = induced_edge_count(arr.graph(), front_half);
    const long long back_edges = induced_edge_count(arr.graph(), back_half);
    note("front_half_edges", std::to_string(front_edges));
    note("back_half_edges", std::to_string(back_edges));
    note("density_threshold", thr.str());
    report.g1_hypotheses_held =
        Rational(front_edges) > thr && Rational(back_edges) > thr;
    const long long lambda_b1_bk1 =
        lambda_count(arr, CircularInterval::closed(b_at(1), b_at(k - 1))).whole_value();
    const Rational g1_rhs = Rational((4 * k - 2) * n, 2 * k + 1) - Rational(3 * alpha);
    report.g1_conclusion_held = Rational(lambda_b1_bk1) < g1_rhs;
    report.g1_implication_held = !report.g1_hypotheses_held || report.g1_conclusion_held;
    note("lambda_b1_bk1", std::to_string(lambda_b1_bk1));
    note("g1_rhs", g1_rhs.str());

    // Interval families I_0 (even i) and I_1 (odd i), I_i = (b_{i-1}, b_{i+1}).
    for (int i = 2; i <= k - 2; ++i) {
        auto interval = CircularInterval::open(b_at(i - 1), b_at(i + 1));
        (i % 2 == 0 ? report.family_even : report.family_odd).push_back(interval);
    }
    report.family_odd.push_back(CircularInterval::closed_open(b_at(1), b_at(2)));
    auto tail = CircularInterval::open_closed(b_at(k - 2), b_at(k - 1));
    (k % 2 == 0 ? report.family_odd : report.family_even).push_back(tail);

    // (g3): only meaningful for k >= 4; hypothesis is density of both arc
    // halves at each xi = b_i, i = 2..k-2.
    report.g3_applicable = k >= 4;
    if (report.g3_applicable) {
        bool all_dense = true;
        for (int i = 2; i <= k - 2 && all_dense; ++i) {
            const auto fwd = detail::arc_half(arr, b_at(i));
            const auto bwd = detail::arc_half_ccw(arr, b_at(i));
            note("vi_arc_edges_b" + std::to_string(i),
                 std::to_string(fwd.edges) + "," + std::to_string(bwd.edges));
            if (!(Rational(fwd.edges) > thr && Rational(bwd.edges) > thr)) all_dense = false;
        }
        report.g3_hypotheses_held = all_dense;
        const Rational g3_lhs =
            Rational((4 * k - 5) * n, 2 * k + 1) - Rational(2 * alpha) - Rational(lambda_b1_bk1);
        report.g3_conclusion_held = g3_lhs < Rational(report.g2_lhs);
        note("g3_lhs", g3_lhs.str());
        note("g3_rhs", std::to_string(report.g2_lhs));
    }
    report.g3_implication_held =
        !report.g3_applicable || !report.g3_hypotheses_held || report.g3_conclusion_held;

    return report;
}

}  // namespace sparsehalf
