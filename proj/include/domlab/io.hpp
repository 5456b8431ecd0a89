#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "domlab/graph.hpp"

namespace domlab {

/// Edge-list format: first line "n m", then m lines "u v" with 0-indexed
/// endpoints. '#' starts a comment; blank lines are skipped. Labels are
/// not serialized.
inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    long n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;

    auto fail = [&](const std::string& msg) {
        throw std::invalid_argument("edge list, line " + std::to_string(lineno) + ": " + msg);
    };

    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m)) {
                std::string tok;
                std::istringstream probe(line);
                if (!(probe >> tok)) continue;  // blank
                fail("expected header 'n m'");
            }
            if (n < 1) fail("vertex count must be >= 1");
            if (m < 0) fail("edge count must be >= 0");
            std::string extra;
            if (ls >> extra) fail("trailing tokens after header");
            continue;
        }
        long u, v;
        if (!(ls >> u)) continue;  // blank or comment-only line
        if (!(ls >> v)) fail("expected 'u v'");
        std::string extra;
        if (ls >> extra) fail("trailing tokens after edge");
        if (u < 0 || v < 0 || u >= n || v >= n) fail("endpoint out of range");
        if (u == v) fail("self-loop at vertex " + std::to_string(u));
        for (auto [a, b] : edges)
            if ((a == u && b == v) || (a == v && b == u))
                fail("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (n < 0) throw std::invalid_argument("edge list: empty input");
    if (static_cast<long>(edges.size()) != m)
        throw std::invalid_argument("edge list: header promises " + std::to_string(m) +
                                    " edges, found " + std::to_string(edges.size()));
    return Graph(static_cast<std::size_t>(n), edges);
}

inline Graph read_edge_list_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open edge-list file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_edge_list(ss.str());
}

/// Inverse of parse_edge_list on the ordered representation.
inline std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    auto edges = g.edges();
    out << g.order() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << u << ' ' << v << '\n';
    return out.str();
}

/// Graphviz output; vertices in `highlight` are filled.
inline std::string to_dot(const Graph& g, const VertexSet& highlight) {
    if (highlight.width() != g.order())
        throw std::invalid_argument("to_dot: highlight width does not match graph order");
    std::ostringstream out;
    out << "graph G {\n";
    for (std::size_t v = 0; v < g.order(); ++v) {
        out << "  " << v << " [label=\"" << g.label(v) << "\"";
        if (highlight.test(v)) out << ", style=filled, fillcolor=gray";
        out << "];\n";
    }
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

inline std::string to_dot(const Graph& g) { return to_dot(g, VertexSet(g.order())); }

}  // namespace domlab
