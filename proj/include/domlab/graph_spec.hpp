#pragma once

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "domlab/generators.hpp"
#include "domlab/io.hpp"

namespace domlab {

/// Raised for malformed constructor expressions or out-of-range family
/// parameters.
struct SpecError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

namespace detail {

/// Recursive-descent parser for the constructor grammar:
///
///   SPEC := path:N | cycle:N | complete:N | kbip:M,N | star:N | ladder:N
///         | cart(SPEC,SPEC) | disjoint(SPEC,SPEC)
///         | A:N | B:M,N | C:M,N | D:M,N | E:M,N | F:L,M,N
///         | house | house+diag | house9 | paw2 | intro6
///         | c5k3 | c5k3+bridge | file:PATH
///
/// Whitespace between tokens is ignored; `canonical` rebuilds the
/// expression without it.
class SpecParser {
public:
    explicit SpecParser(const std::string& text) : text_(text) {}

    struct Result {
        Graph graph;
        std::string canonical;
    };

    Result parse() {
        Result r = parse_spec();
        skip_ws();
        if (pos_ != text_.size())
            throw SpecError("spec: trailing input at offset " + std::to_string(pos_) + ": '" +
                            text_.substr(pos_) + "'");
        return r;
    }

private:
    Result parse_spec() {
        skip_ws();
        std::string name = parse_name();
        if (name == "cart" || name == "disjoint") {
            expect('(');
            Result lhs = parse_spec();
            expect(',');
            Result rhs = parse_spec();
            expect(')');
            Graph g = name == "cart" ? cartesian_product(lhs.graph, rhs.graph)
                                     : disjoint_union(lhs.graph, rhs.graph);
            return {std::move(g), name + "(" + lhs.canonical + "," + rhs.canonical + ")"};
        }
        if (name == "file") {
            expect(':');
            std::string path = parse_path();
            return {read_edge_list_file(path), "file:" + path};
        }
        if (name == "house") return {make_house(), name};
        if (name == "house+diag") return {make_house_diag(), name};
        if (name == "house9") return {make_house9(), name};
        if (name == "paw2") return {make_paw2(), name};
        if (name == "intro6") return {make_intro6(), name};
        if (name == "c5k3") return {make_c5k3(), name};
        if (name == "c5k3+bridge") return {make_c5k3_bridge(), name};

        std::size_t arity = 0;
        if (name == "path" || name == "cycle" || name == "complete" || name == "star" ||
            name == "ladder" || name == "A")
            arity = 1;
        else if (name == "kbip" || name == "B" || name == "C" || name == "D" || name == "E")
            arity = 2;
        else if (name == "F")
            arity = 3;
        else
            throw SpecError("spec: unknown constructor '" + name + "'");

        auto params = parse_params(arity);
        std::string canon = name + ":";
        for (std::size_t i = 0; i < params.size(); ++i) {
            if (i) canon += ",";
            canon += std::to_string(params[i]);
        }
        try {
            if (name == "path") return {make_path(params[0]), canon};
            if (name == "cycle") return {make_cycle(params[0]), canon};
            if (name == "complete") return {make_complete(params[0]), canon};
            if (name == "kbip") return {make_complete_bipartite(params[0], params[1]), canon};
            if (name == "star") return {make_star(params[0]), canon};
            if (name == "ladder") return {make_ladder(params[0]), canon};
            if (name == "A") return {make_family_a(params[0]), canon};
            if (name == "B") return {make_family_b(params[0], params[1]), canon};
            if (name == "C") return {make_family_c(params[0], params[1]), canon};
            if (name == "D") return {make_family_d(params[0], params[1]), canon};
            if (name == "E") return {make_family_e(params[0], params[1]), canon};
            return {make_family_f(params[0], params[1], params[2]), canon};
        } catch (const std::invalid_argument& e) {
            throw SpecError(std::string("spec: ") + e.what());
        }
    }

    std::string parse_name() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '+' ||
                text_[pos_] == '_'))
            ++pos_;
        if (pos_ == start) throw SpecError("spec: expected a constructor name at offset " +
                                           std::to_string(pos_));
        return text_.substr(start, pos_ - start);
    }

    std::vector<std::size_t> parse_params(std::size_t arity) {
        expect(':');
        std::vector<std::size_t> params;
        for (std::size_t i = 0; i < arity; ++i) {
            if (i) expect(',');
            params.push_back(parse_number());
        }
        return params;
    }

    std::size_t parse_number() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw SpecError("spec: expected a number at offset " + std::to_string(pos_));
        return static_cast<std::size_t>(std::stoull(text_.substr(start, pos_ - start)));
    }

    std::string parse_path() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ')') ++pos_;
        std::string path = text_.substr(start, pos_ - start);
        while (!path.empty() && std::isspace(static_cast<unsigned char>(path.back()))) path.pop_back();
        if (path.empty()) throw SpecError("spec: empty file path");
        return path;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            throw SpecError(std::string("spec: expected '") + c + "' at offset " + std::to_string(pos_));
        ++pos_;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Build the graph named by a constructor expression.
inline Graph generate(const std::string& spec) {
    return detail::SpecParser(spec).parse().graph;
}

/// Whitespace-free canonical form of a constructor expression, used for
/// cache keys and report headers.
inline std::string canonical_spec(const std::string& spec) {
    return detail::SpecParser(spec).parse().canonical;
}

}  // namespace domlab
