#pragma once

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>

#include "sparsehalf/circle_rep.hpp"
#include "sparsehalf/density.hpp"
#include "sparsehalf/errors.hpp"
#include "sparsehalf/graph.hpp"
#include "sparsehalf/proof_lab.hpp"

namespace sparsehalf {

using ordered_json = nlohmann::ordered_json;

// Graph schema: {"n": int, "edges": [[u, v], ...]} with u < v, sorted.
inline ordered_json graph_to_json(const Graph& g) {
    ordered_json j;
    j["n"] = g.vertex_count();
    auto edges = ordered_json::array();
    for (auto [u, v] : g.edges()) edges.push_back(ordered_json::array({u, v}));
    j["edges"] = std::move(edges);
    return j;
}

inline Graph graph_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw ParseError("graph json: need {\"n\": int, \"edges\": [[u,v],...]}");
    Graph g(j.at("n").get<int>());
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw ParseError("graph json: bad edge entry");
        g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    }
    return g;
}

inline Graph load_graph_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file: " + path);
    ordered_json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("bad json in " + path + ": " + e.what());
    }
    return graph_from_json(j);
}

inline std::string graph_to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

// Arrangement schema: {"k": int, "graph": <graph>, "positions": ["p/q", ...]}.
inline ordered_json arrangement_to_json(const CircularArrangement& arr) {
    ordered_json j;
    j["k"] = arr.k();
    j["graph"] = graph_to_json(arr.graph());
    auto positions = ordered_json::array();
    for (const auto& p : arr.positions()) positions.push_back(p.str());
    j["positions"] = std::move(positions);
    return j;
}

inline CircularArrangement arrangement_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("k") || !j.contains("graph") || !j.contains("positions"))
        throw ParseError("arrangement json: need {\"k\", \"graph\", \"positions\"}");
    Graph g = graph_from_json(j.at("graph"));
    std::vector<CirclePoint> positions;
    for (const auto& p : j.at("positions"))
        positions.emplace_back(Rational::parse(p.get<std::string>()));
    return {j.at("k").get<int>(), std::move(g), std::move(positions)};
}

inline ordered_json subset_to_json(const VertexSubset& s) {
    auto out = ordered_json::array();
    for (int v : s.members()) out.push_back(v);
    return out;
}

inline ordered_json check_report_to_json(const CheckReport& report) {
    ordered_json j;
    j["check_id"] = report.check_id;
    j["hypotheses_held"] = report.hypotheses_held;
    j["conclusion_held"] = report.conclusion_held;
    j["implication_held"] = report.implication_held;
    ordered_json trace = ordered_json::object();
    for (const auto& [name, value] : report.trace) trace[name] = value;
    j["trace"] = std::move(trace);
    return j;
}

inline ordered_json density_verdict_to_json(const DensityVerdict& verdict) {
    ordered_json j;
    j["alpha"] = verdict.alpha.str();
    j["beta"] = verdict.beta.str();
    j["s"] = verdict.s;
    j["dense"] = verdict.dense;
    j["min_edges"] = verdict.min_edges;
    if (verdict.witness) {
        j["witness"] = subset_to_json(verdict.witness->first);
        j["witness_edges"] = verdict.witness->second;
    }
    return j;
}

inline ordered_json sweep_report_to_json(const SweepReport& report, const CircularArrangement& arr) {
    const long long n = arr.n();
    const int k = arr.k();
    ordered_json j;
    j["k"] = k;
    j["n"] = n;
    j["min_edges"] = report.min_edges;
    j["witness_start_vertex"] = report.witness_start;
    j["witness_z_vertex"] = report.witness_z;
    j["witness_interval"] = ordered_json::array(
        {report.witness_interval.start().str(), report.witness_interval.end().str()});
    const Rational threshold = Rational(n * n) / Rational(2 * (2 * k + 1) * (2 * k + 1));
    j["threshold"] = threshold.str();
    j["n_divisible_by_2_2k1"] = n % (2 * (2 * k + 1)) == 0;
    j["min_at_most_threshold"] = Rational(report.min_edges) <= threshold;
    auto starts = ordered_json::array();
    for (const auto& s : report.per_start)
        starts.push_back(ordered_json{{"start", s.start_vertex}, {"z", s.z_vertex}, {"edges", s.edges}});
    j["per_start"] = std::move(starts);
    return j;
}

inline ordered_json winding_trace_to_json(const WindingTrace& trace) {
    ordered_json j;
    j["start"] = trace.start.str();
    auto points = ordered_json::array();
    for (const auto& p : trace.points) points.push_back(p.str());
    j["points"] = std::move(points);
    j["period"] = trace.period;
    j["winding"] = trace.winding;
    return j;
}

inline ordered_json interval_to_json(const CircularInterval& interval) {
    auto mode = [](EndpointMode m) {
        switch (m) {
            case EndpointMode::closed: return "closed";
            case EndpointMode::open: return "open";
            case EndpointMode::half: return "half";
        }
        return "?";
    };
    return ordered_json{{"start", interval.start().str()},
                        {"end", interval.end().str()},
                        {"start_mode", mode(interval.start_mode())},
                        {"end_mode", mode(interval.end_mode())},
                        {"full_circle", interval.is_full_circle()}};
}

inline ordered_json prop32_report_to_json(const Prop32Report& report) {
    ordered_json j;
    j["k"] = report.k;
    j["n"] = report.n;
    j["alpha"] = report.alpha;
    j["rotation_offset"] = report.rotation_offset.str();
    j["start_vertex"] = report.start_vertex;
    j["z0"] = report.z0;
    j["z_prime"] = report.z_prime;
    auto b = ordered_json::array();
    for (const auto& p : report.b) b.push_back(p.str());
    j["b"] = std::move(b);
    j["lambda_z0_zprime"] = report.lambda_z0_zprime;
    j["identity_held"] = report.identity_held;
    j["g2_lhs"] = report.g2_lhs;
    j["g2_rhs"] = report.g2_rhs;
    j["g2_held"] = report.g2_held;
    j["g1_hypotheses_held"] = report.g1_hypotheses_held;
    j["g1_conclusion_held"] = report.g1_conclusion_held;
    j["g1_implication_held"] = report.g1_implication_held;
    j["g3_applicable"] = report.g3_applicable;
    j["g3_hypotheses_held"] = report.g3_hypotheses_held;
    j["g3_conclusion_held"] = report.g3_conclusion_held;
    j["g3_implication_held"] = report.g3_implication_held;
    auto families = [&](const std::vector<CircularInterval>& family) {
        auto arr = ordered_json::array();
        for (const auto& interval : family) arr.push_back(interval_to_json(interval));
        return arr;
    };
    j["family_even"] = families(report.family_even);
    j["family_odd"] = families(report.family_odd);
    ordered_json trace = ordered_json::object();
    for (const auto& [name, value] : report.trace) trace[name] = value;
    j["trace"] = std::move(trace);
    return j;
}

}  // namespace sparsehalf
