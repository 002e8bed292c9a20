#pragma once

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sparsehalf/constructions.hpp"
#include "sparsehalf/density.hpp"
#include "sparsehalf/homomorphism.hpp"
#include "sparsehalf/invariants.hpp"
#include "sparsehalf/io.hpp"
#include "sparsehalf/proof_lab.hpp"
#include "sparsehalf/rng.hpp"

namespace sparsehalf {

// Runtime configuration shared by the subcommands.  The seed fixes every
// randomized sample, so identical invocations produce identical bytes.
struct RunConfig {
    SearchBudget budget;
    SearchCaps caps;
    HomCaps hom_caps;
    std::uint64_t seed = 1;
    std::string format = "json";
    int samples = 20;
};

// Exit codes: 0 success / checks passed, 1 property violation found,
// 2 usage, parse or budget error.
namespace exit_code {
constexpr int ok = 0;
constexpr int violation = 1;
constexpr int usage = 2;
}  // namespace exit_code

namespace detail {

inline Construction require_arrangeable(const Construction& c) {
    if (!c.blowup || !c.k)
        throw ParseError("spec '" + c.label + "': circle representations need an F(k,d) form");
    return c;
}

inline CircularArrangement arrangement_of(const Construction& c) {
    require_arrangeable(c);
    return represent_blow_up(*c.blowup, *c.k);
}

// Random interval whose length satisfies the hypothesis of the given
// lemma part.
inline CircularInterval sample_interval(Rng& rng, int k, LemmaPart part) {
    const Rational c(k - 1, 2 * k - 1);
    const Rational narrow(1, 2 * k - 1);
    CirclePoint start = rng.point(97);
    Rational len;
    switch (part) {
        case LemmaPart::i: len = c * rng.rational(53); break;
        case LemmaPart::ii: len = narrow * rng.rational(53); break;
        case LemmaPart::iii: len = narrow + (Rational(1) - narrow) * rng.rational(53); break;
        default: len = rng.rational(53); break;
    }
    return CircularInterval::closed(start, start + len);
}

inline int run_verify(const Construction& construction, const std::string& part,
                      const RunConfig& config, std::ostream& out) {
    const CircularArrangement arr = arrangement_of(construction);
    Rng rng(config.seed);
    ordered_json reports = ordered_json::array();
    bool failed = false;

    auto push_check = [&](const CheckReport& r) {
        reports.push_back(check_report_to_json(r));
        failed = failed || !r.implication_held;
    };

    if (part == "i" || part == "ii" || part == "iii") {
        LemmaPart p = part == "i" ? LemmaPart::i : part == "ii" ? LemmaPart::ii : LemmaPart::iii;
        for (int i = 0; i < config.samples; ++i)
            push_check(check_useful_lemma(arr, p, sample_interval(rng, arr.k(), p)));
    } else if (part == "iv" || part == "vi" || part == "u4") {
        LemmaPart p = part == "iv" ? LemmaPart::iv : part == "vi" ? LemmaPart::vi : LemmaPart::u4;
        for (int i = 0; i < config.samples; ++i) {
            CirclePoint xi = i % 2 == 0 ? arr.position(rng.uniform(arr.n())) : rng.point(97);
            push_check(check_useful_lemma(arr, p, xi));
        }
    } else if (part == "identity") {
        auto result = partition_identity_check(arr);
        ordered_json j;
        j["check_id"] = "partition-identity";
        j["lhs"] = result.lhs.str();
        j["rhs"] = result.rhs.str();
        j["equal"] = result.equal;
        reports.push_back(std::move(j));
        failed = failed || !result.equal;
    } else if (part == "winding") {
        const Rational c(arr.k() - 1, 2 * arr.k() - 1);
        for (int i = 0; i < config.samples; ++i) {
            CirclePoint x0 = arr.position(rng.uniform(arr.n())) - c;
            auto trace = winding_trace(arr, x0);
            bool ok = trace.period >= 2 && trace.winding >= 1 &&
                      trace.points.front() == trace.points.back();
            ordered_json j = winding_trace_to_json(trace);
            j["ok"] = ok;
            reports.push_back(std::move(j));
            failed = failed || !ok;
        }
    } else if (part == "gon") {
        auto report = prop32_geometry(arr);
        reports.push_back(prop32_report_to_json(report));
        failed = failed || !report.identity_held || !report.g2_held ||
                 !report.g1_implication_held || !report.g3_implication_held;
    } else {
        throw ParseError("verify: unknown part '" + part + "'");
    }

    ordered_json output;
    output["spec"] = construction.label;
    output["part"] = part;
    output["reports"] = std::move(reports);
    output["all_held"] = !failed;
    out << output.dump(2) << "\n";
    return failed ? exit_code::violation : exit_code::ok;
}

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char ch : s) {
        if (ch == '"') quoted += "\"\"";
        else quoted += ch;
    }
    return quoted + "\"";
}

}  // namespace detail

// Parses argv (without the program name) and runs one subcommand.
inline int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact local-density experiments on generalised Andrasfai blow-ups"};
    app.require_subcommand(1);

    RunConfig config;
    app.add_option("--seed", config.seed, "seed for randomized samples");
    app.add_option("--budget", config.budget.max_nodes, "subset-search node budget");
    app.add_option("--max-subset-n", config.budget.max_subset_vertices,
                   "largest n admitted to the exhaustive subset search");
    app.add_option("--samples", config.samples, "number of randomized samples");
    app.add_option("--format", config.format, "output format: json, csv or dot")
        ->check(CLI::IsMember({"json", "csv", "dot"}));

    std::string spec, spec_h, alpha_text = "1/2", beta_text = "0/1", part = "identity";
    int start_vertex = 0;
    std::vector<std::string> table_specs, table_alphas;

    auto* construct = app.add_subcommand("construct", "build a graph and print it");
    construct->add_option("spec", spec, "construction spec")->required();

    auto* oddgirth = app.add_subcommand("oddgirth", "shortest odd cycle length");
    oddgirth->add_option("spec", spec, "construction spec")->required();

    auto* alpha_cmd = app.add_subcommand("alpha", "independence number with witness");
    alpha_cmd->add_option("spec", spec, "construction spec")->required();

    auto* chi_cmd = app.add_subcommand("chi", "chromatic number");
    chi_cmd->add_option("spec", spec, "construction spec")->required();

    auto* hom = app.add_subcommand("hom", "find a graph homomorphism");
    hom->add_option("source", spec, "source construction spec")->required();
    hom->add_option("target", spec_h, "target construction spec")->required();

    auto* density = app.add_subcommand("density", "(alpha,beta)-density decision");
    density->add_option("spec", spec, "construction spec")->required();
    density->add_option("--alpha", alpha_text, "alpha as p/q");
    density->add_option("--beta", beta_text, "beta as p/q");

    auto* sweep = app.add_subcommand("sweep", "arc-sweep sparse-half search");
    sweep->add_option("spec", spec, "construction spec (F form)")->required();

    auto* table = app.add_subcommand("beta-table", "minimum edge ratios vs the conjectured curves");
    table->add_option("--spec", table_specs, "construction spec (repeatable)")->required();
    table->add_option("--alpha", table_alphas, "alpha as p/q (repeatable)")->required();

    auto* verify = app.add_subcommand("verify", "machine-check lemma instances");
    verify->add_option("--part", part, "one of i, ii, iii, iv, vi, u4, identity, winding, gon");
    verify->add_option("--spec", spec, "construction spec (F form)")->required();

    auto* winding = app.add_subcommand("trace-winding", "orbit of the half-arc recursion");
    winding->add_option("spec", spec, "construction spec (F form)")->required();
    winding->add_option("--start", start_vertex, "vertex whose shifted position seeds the orbit");

    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help lands here.
            out << app.help();
            return exit_code::ok;
        }
        err << "error: " << e.what() << "\n";
        return exit_code::usage;
    }

    try {
        if (construct->parsed()) {
            Construction c = parse_construction(spec);
            if (config.format == "dot") out << graph_to_dot(c.graph);
            else out << graph_to_json(c.graph).dump(2) << "\n";
            return exit_code::ok;
        }
        if (oddgirth->parsed()) {
            Construction c = parse_construction(spec);
            auto g = odd_girth(c.graph);
            ordered_json j;
            j["spec"] = c.label;
            if (g) j["odd_girth"] = *g;
            else j["odd_girth"] = "infinite";
            out << j.dump(2) << "\n";
            return exit_code::ok;
        }
        if (alpha_cmd->parsed()) {
            Construction c = parse_construction(spec);
            auto result = independence_number(c.graph, config.caps);
            ordered_json j;
            j["spec"] = c.label;
            j["alpha"] = result.size;
            j["witness"] = subset_to_json(result.witness);
            out << j.dump(2) << "\n";
            return exit_code::ok;
        }
        if (chi_cmd->parsed()) {
            Construction c = parse_construction(spec);
            ordered_json j;
            j["spec"] = c.label;
            j["chi"] = chromatic_number(c.graph, config.caps);
            out << j.dump(2) << "\n";
            return exit_code::ok;
        }
        if (hom->parsed()) {
            Construction g = parse_construction(spec);
            Construction h = parse_construction(spec_h);
            auto result = find_homomorphism(g.graph, h.graph, config.hom_caps);
            ordered_json j;
            j["found"] = result.has_value();
            if (result) j["map"] = result->map;
            out << j.dump(2) << "\n";
            return exit_code::ok;
        }
        if (density->parsed()) {
            Construction c = parse_construction(spec);
            auto verdict = is_dense(c.graph, Rational::parse(alpha_text),
                                    Rational::parse(beta_text), config.budget);
            ordered_json j = density_verdict_to_json(verdict);
            j["spec"] = c.label;
            out << j.dump(2) << "\n";
            return exit_code::ok;
        }
        if (sweep->parsed()) {
            Construction c = parse_construction(spec);
            auto arr = detail::arrangement_of(c);
            auto report = arc_sweep(arr);
            ordered_json j = sweep_report_to_json(report, arr);
            j["spec"] = c.label;
            out << j.dump(2) << "\n";
            return exit_code::ok;
        }
        if (table->parsed()) {
            std::vector<std::pair<std::string, Graph>> constructions;
            for (const auto& s : table_specs) {
                Construction c = parse_construction(s);
                constructions.emplace_back(c.label, c.graph);
            }
            std::vector<Rational> alphas;
            for (const auto& a : table_alphas) alphas.push_back(Rational::parse(a));
            auto rows = beta_table(constructions, alphas, config.budget);
            out << "construction,n,alpha,s,min_edges,ratio,eq1_target,eq2_target\n";
            for (const auto& row : rows) {
                out << detail::csv_escape(row.construction) << "," << row.n << ","
                    << row.alpha.str() << "," << row.s << ",";
                if (row.min_edges) out << *row.min_edges;
                else out << "error:" << detail::csv_escape(row.error);
                out << ",";
                if (row.ratio) out << row.ratio->str();
                out << "," << row.eq1_target.str() << "," << row.eq2_target.str() << "\n";
            }
            return exit_code::ok;
        }
        if (verify->parsed()) {
            return detail::run_verify(parse_construction(spec), part, config, out);
        }
        if (winding->parsed()) {
            Construction c = parse_construction(spec);
            auto arr = detail::arrangement_of(c);
            if (start_vertex < 0 || start_vertex >= arr.n())
                throw ParseError("trace-winding: start vertex out of range");
            const Rational shift(arr.k() - 1, 2 * arr.k() - 1);
            auto trace = winding_trace(arr, arr.position(start_vertex) - shift);
            ordered_json j = winding_trace_to_json(trace);
            j["spec"] = c.label;
            out << j.dump(2) << "\n";
            return exit_code::ok;
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::usage;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::usage;
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::usage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::usage;
    }
    err << "error: no subcommand\n";
    return exit_code::usage;
}

}  // namespace sparsehalf
