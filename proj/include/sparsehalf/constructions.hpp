#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "sparsehalf/andrasfai.hpp"
#include "sparsehalf/errors.hpp"
#include "sparsehalf/graph.hpp"
#include "sparsehalf/io.hpp"

namespace sparsehalf {

// A parsed construction spec.  The grammar, shared by every subcommand:
//   F(k,d)             generalised Andrasfai graph
//   F(k,d)xT           balanced blow-up with class size T
//   F(k,d)x[t1,...,tm] blow-up with explicit multiplicities
//   C(n)               cycle
//   K(a,b)             complete bipartite
//   petersen           Petersen graph
//   @file.json         graph loaded from the json schema
// F-forms carry the blow-up structure (t = 1 for the bare form) so that
// circle representations can be built from them.
struct Construction {
    std::string label;
    Graph graph;
    std::optional<BlowUp> blowup;  // present for F forms
    std::optional<int> k;          // present for F forms
};

namespace detail {

class SpecScanner {
public:
    explicit SpecScanner(const std::string& text) : text_(text) {}

    bool eat(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c))
            throw ParseError("spec '" + text_ + "': expected '" + std::string(1, c) + "' at position " +
                             std::to_string(pos_));
    }

    int number() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError("spec '" + text_ + "': expected a number at position " +
                                            std::to_string(pos_));
        return std::stoi(text_.substr(start, pos_ - start));
    }

    bool done() const { return pos_ == text_.size(); }
    std::string rest() const { return text_.substr(pos_); }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Construction parse_construction(const std::string& spec) {
    if (spec.empty()) throw ParseError("empty construction spec");
    if (spec == "petersen") return {spec, petersen_graph(), std::nullopt, std::nullopt};
    if (spec[0] == '@') return {spec, load_graph_json(spec.substr(1)), std::nullopt, std::nullopt};

    detail::SpecScanner in(spec);
    if (in.eat('C')) {
        in.expect('(');
        int n = in.number();
        in.expect(')');
        if (!in.done()) throw ParseError("spec '" + spec + "': trailing '" + in.rest() + "'");
        return {spec, cycle_graph(n), std::nullopt, std::nullopt};
    }
    if (in.eat('K')) {
        in.expect('(');
        int a = in.number();
        in.expect(',');
        int b = in.number();
        in.expect(')');
        if (!in.done()) throw ParseError("spec '" + spec + "': trailing '" + in.rest() + "'");
        return {spec, complete_bipartite(a, b), std::nullopt, std::nullopt};
    }
    if (in.eat('F')) {
        in.expect('(');
        int k = in.number();
        in.expect(',');
        int d = in.number();
        in.expect(')');
        Graph base = generalized_andrasfai(k, d);
        std::vector<int> multiplicities;
        if (in.eat('x')) {
            if (in.eat('[')) {
                multiplicities.push_back(in.number());
                while (in.eat(',')) multiplicities.push_back(in.number());
                in.expect(']');
                if (static_cast<int>(multiplicities.size()) != base.vertex_count())
                    throw ParseError("spec '" + spec + "': need " +
                                     std::to_string(base.vertex_count()) + " multiplicities");
            } else {
                multiplicities.assign(base.vertex_count(), in.number());
            }
        } else {
            multiplicities.assign(base.vertex_count(), 1);
        }
        if (!in.done()) throw ParseError("spec '" + spec + "': trailing '" + in.rest() + "'");
        BlowUp b = blow_up(base, multiplicities);
        Graph result = b.result;
        return {spec, std::move(result), std::move(b), k};
    }
    throw ParseError("spec '" + spec + "': unknown construction");
}

}  // namespace sparsehalf
