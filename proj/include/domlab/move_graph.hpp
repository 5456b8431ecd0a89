#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "domlab/domination.hpp"
#include "domlab/graph.hpp"

namespace domlab {

/// The graph whose nodes are all dominating sets of a fixed size k and
/// whose edges are single legal guard slides: two nodes are adjacent iff
/// their symmetric difference is exactly the endpoint pair of one graph
/// edge. Materialized with connected-component labels and a per-node
/// secure flag.
struct MoveGraph {
    std::size_t k = 0;
    std::vector<VertexSet> nodes;                 // colexicographic order
    std::vector<std::vector<std::int32_t>> adj;   // sorted neighbor ids
    std::vector<std::int32_t> component;          // dense ids by first occurrence
    std::size_t component_count = 0;
    std::vector<char> secure;

    std::unordered_map<VertexSet, std::int32_t, VertexSetHash> index;

    std::optional<std::int32_t> find(const VertexSet& s) const {
        auto it = index.find(s);
        if (it == index.end()) return std::nullopt;
        return it->second;
    }

    std::vector<std::int32_t> component_members(std::int32_t comp) const {
        std::vector<std::int32_t> out;
        for (std::size_t i = 0; i < nodes.size(); ++i)
            if (component[i] == comp) out.push_back(static_cast<std::int32_t>(i));
        return out;
    }

    bool component_all_secure(std::int32_t comp) const {
        for (std::size_t i = 0; i < nodes.size(); ++i)
            if (component[i] == comp && !secure[i]) return false;
        return true;
    }
};

/// Builds the move graph at size k. Edges come from sliding each guard
/// along each incident edge and looking the result up in a hash index;
/// the secure flag marks nodes whose neighbors collectively contain
/// every unoccupied vertex (equivalent to is_secure_dominating).
inline MoveGraph build_move_graph(const Graph& g, std::size_t k, const EngineLimits& limits = {}) {
    if (k < 1) throw std::invalid_argument("build_move_graph: k must be >= 1");
    MoveGraph mg;
    mg.k = k;
    mg.nodes = enumerate_dominating(g, k, limits);
    mg.index.reserve(mg.nodes.size() * 2);
    for (std::size_t i = 0; i < mg.nodes.size(); ++i)
        mg.index.emplace(mg.nodes[i], static_cast<std::int32_t>(i));

    mg.adj.resize(mg.nodes.size());
    for (std::size_t i = 0; i < mg.nodes.size(); ++i) {
        const VertexSet& s = mg.nodes[i];
        for (int w = s.first(); w >= 0; w = s.next(w)) {
            VertexSet targets = g.neighbors(static_cast<std::size_t>(w)) - s;
            for (int t = targets.first(); t >= 0; t = targets.next(t)) {
                VertexSet moved = s;
                moved.reset(static_cast<std::size_t>(w));
                moved.set(static_cast<std::size_t>(t));
                if (auto j = mg.find(moved)) mg.adj[i].push_back(*j);
            }
        }
        std::sort(mg.adj[i].begin(), mg.adj[i].end());
    }

    // Components by traversal, labeled in order of first appearance.
    mg.component.assign(mg.nodes.size(), -1);
    std::vector<std::int32_t> stack;
    for (std::size_t i = 0; i < mg.nodes.size(); ++i) {
        if (mg.component[i] >= 0) continue;
        auto id = static_cast<std::int32_t>(mg.component_count++);
        mg.component[i] = id;
        stack.push_back(static_cast<std::int32_t>(i));
        while (!stack.empty()) {
            std::int32_t u = stack.back();
            stack.pop_back();
            for (std::int32_t v : mg.adj[u])
                if (mg.component[v] < 0) {
                    mg.component[v] = id;
                    stack.push_back(v);
                }
        }
    }

    // A node is secure iff its neighbors contain every unoccupied vertex:
    // each neighbor adds exactly one vertex, the destination of its move.
    mg.secure.assign(mg.nodes.size(), 0);
    for (std::size_t i = 0; i < mg.nodes.size(); ++i) {
        VertexSet covered = mg.nodes[i];
        for (std::int32_t j : mg.adj[i]) {
            VertexSet added = mg.nodes[j] - mg.nodes[i];
            covered |= added;
        }
        mg.secure[i] = covered == g.all_vertices() ? 1 : 0;
    }
    return mg;
}

/// Certificate for an autonomously dominating family: a union of move
/// graph components, closed by construction.
struct FamilyCertificate {
    std::size_t k = 0;
    std::vector<std::int32_t> components;
    VertexSet representative;
    std::size_t family_size = 0;
};

/// Checks the three family conditions directly from first principles:
/// every member dominates, every attack on a member is answerable by an
/// adjacent member containing the attacked vertex, and the family is
/// closed under adjacency of dominating sets. Does not consult the
/// stored secure flags or component structure beyond selecting members.
inline bool verify_family(const Graph& g, const MoveGraph& mg, const FamilyCertificate& cert) {
    for (std::int32_t c : cert.components)
        if (c < 0 || static_cast<std::size_t>(c) >= mg.component_count)
            throw std::invalid_argument("verify_family: dangling component id " + std::to_string(c));

    std::unordered_set<VertexSet, VertexSetHash> members;
    for (std::size_t i = 0; i < mg.nodes.size(); ++i)
        for (std::int32_t c : cert.components)
            if (mg.component[i] == c) members.insert(mg.nodes[i]);
    if (members.empty()) return false;

    for (const VertexSet& s : members) {
        if (s.count() != cert.k) return false;
        if (!is_dominating(g, s)) return false;  // condition 1

        VertexSet outside = s.complement();
        for (int v = outside.first(); v >= 0; v = outside.next(v)) {
            // condition 2: an adjacent member containing v must exist; any
            // such member arises from a guard on a neighbor of v moving to v.
            bool answered = false;
            VertexSet movers = g.neighbors(static_cast<std::size_t>(v)) & s;
            for (int w = movers.first(); w >= 0 && !answered; w = movers.next(w)) {
                VertexSet t = s;
                t.reset(static_cast<std::size_t>(w));
                t.set(static_cast<std::size_t>(v));
                if (is_dominating(g, t) && members.count(t)) answered = true;
            }
            if (!answered) return false;
        }

        // condition 3: every dominating set adjacent to s is a member.
        for (int w = s.first(); w >= 0; w = s.next(w)) {
            VertexSet targets = g.neighbors(static_cast<std::size_t>(w)) - s;
            for (int t = targets.first(); t >= 0; t = targets.next(t)) {
                VertexSet moved = s;
                moved.reset(static_cast<std::size_t>(w));
                moved.set(static_cast<std::size_t>(t));
                if (is_dominating(g, moved) && !members.count(moved)) return false;
            }
        }
    }
    return true;
}

}  // namespace domlab
