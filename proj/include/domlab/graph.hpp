#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "domlab/vertex_set.hpp"

namespace domlab {

/// Immutable simple undirected graph over dense vertex ids 0..n-1.
///
/// Adjacency is stored as one VertexSet per vertex. Construction
/// validates symmetry implicitly (edges are inserted both ways) and
/// rejects self-loops, duplicates and out-of-range endpoints. Optional
/// per-vertex labels carry human-readable names; they take no part in
/// equality or hashing.
class Graph {
public:
    Graph(std::size_t n, const std::vector<std::pair<int, int>>& edges,
          std::vector<std::string> labels = {})
        : n_(n), adj_(n, VertexSet(n)), labels_(std::move(labels)) {
        if (n == 0) throw std::invalid_argument("Graph: vertex count must be >= 1");
        if (!labels_.empty() && labels_.size() != n)
            throw std::invalid_argument("Graph: label count does not match vertex count");
        for (auto [u, v] : edges) add_edge_checked(u, v);
    }

    std::size_t order() const { return n_; }
    std::size_t edge_count() const { return m_; }

    const VertexSet& neighbors(std::size_t v) const {
        check_vertex(v);
        return adj_[v];
    }

    VertexSet closed_neighborhood(std::size_t v) const {
        VertexSet s = neighbors(v);
        s.set(v);
        return s;
    }

    bool has_edge(std::size_t u, std::size_t v) const {
        check_vertex(u);
        return adj_[u].test(v);
    }

    std::size_t degree(std::size_t v) const { return neighbors(v).count(); }

    std::size_t min_degree() const {
        std::size_t d = n_;
        for (std::size_t v = 0; v < n_; ++v) d = std::min(d, degree(v));
        return d;
    }

    std::size_t max_degree() const {
        std::size_t d = 0;
        for (std::size_t v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }

    bool has_labels() const { return !labels_.empty(); }

    std::string label(std::size_t v) const {
        check_vertex(v);
        return labels_.empty() ? std::to_string(v) : labels_[v];
    }

    const std::vector<std::string>& labels() const { return labels_; }

    std::optional<int> vertex_named(const std::string& name) const {
        for (std::size_t v = 0; v < labels_.size(); ++v)
            if (labels_[v] == name) return static_cast<int>(v);
        return std::nullopt;
    }

    /// New graph with one extra edge; the original is unchanged.
    Graph with_edge(std::size_t u, std::size_t v) const {
        Graph g = *this;
        g.add_edge_checked(static_cast<int>(u), static_cast<int>(v));
        return g;
    }

    /// Edges as (u,v) pairs with u < v, sorted.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(m_);
        for (std::size_t u = 0; u < n_; ++u)
            for (int v = adj_[u].next(static_cast<int>(u)); v >= 0; v = adj_[u].next(v))
                out.emplace_back(static_cast<int>(u), v);
        return out;
    }

    VertexSet all_vertices() const { return VertexSet::full(n_); }

    bool is_connected() const { return component_count() == 1; }

    std::size_t component_count() const {
        VertexSet seen(n_);
        std::size_t comps = 0;
        for (std::size_t v = 0; v < n_; ++v) {
            if (seen.test(v)) continue;
            ++comps;
            VertexSet frontier(n_);
            frontier.set(v);
            while (frontier.any()) {
                seen |= frontier;
                VertexSet nxt(n_);
                for (int u = frontier.first(); u >= 0; u = frontier.next(u)) nxt |= adj_[u];
                nxt -= seen;
                frontier = nxt;
            }
        }
        return comps;
    }

    std::string set_to_string(const VertexSet& s) const {
        std::string out = "{";
        bool sep = false;
        for (int v = s.first(); v >= 0; v = s.next(v)) {
            if (sep) out += ",";
            out += label(static_cast<std::size_t>(v));
            sep = true;
        }
        return out + "}";
    }

private:
    void check_vertex(std::size_t v) const {
        if (v >= n_) throw std::out_of_range("Graph: vertex " + std::to_string(v) +
                                             " out of range for order " + std::to_string(n_));
    }

    void add_edge_checked(int u, int v) {
        if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n_ || static_cast<std::size_t>(v) >= n_)
            throw std::invalid_argument("Graph: edge endpoint out of range");
        if (u == v) throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(u));
        if (adj_[u].test(static_cast<std::size_t>(v)))
            throw std::invalid_argument("Graph: duplicate edge (" + std::to_string(u) + "," +
                                        std::to_string(v) + ")");
        adj_[u].set(static_cast<std::size_t>(v));
        adj_[v].set(static_cast<std::size_t>(u));
        ++m_;
    }

    std::size_t n_;
    std::size_t m_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<std::string> labels_;
};

inline Graph complement(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t u = 0; u < g.order(); ++u)
        for (std::size_t v = u + 1; v < g.order(); ++v)
            if (!g.has_edge(u, v)) edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    return Graph(g.order(), edges, g.labels());
}

/// Exact independence number by branch and bound over candidate sets.
inline std::size_t independence_number(const Graph& g) {
    std::size_t best = 0;
    // Recurse on (chosen count, candidates still allowed).
    auto rec = [&](auto&& self, std::size_t chosen, VertexSet cand) -> void {
        if (chosen + cand.count() <= best) return;
        int v = cand.first();
        if (v < 0) {
            best = std::max(best, chosen);
            return;
        }
        VertexSet with = cand;
        with -= g.neighbors(static_cast<std::size_t>(v));
        with.reset(static_cast<std::size_t>(v));
        self(self, chosen + 1, with);
        cand.reset(static_cast<std::size_t>(v));
        self(self, chosen, cand);
    };
    rec(rec, 0, VertexSet::full(g.order()));
    return best;
}

/// Exact chromatic number by exhaustive k-coloring search (small graphs).
inline std::size_t chromatic_number(const Graph& g) {
    std::size_t n = g.order();
    std::vector<int> color(n, -1);
    auto feasible = [&](auto&& self, std::size_t v, std::size_t k) -> bool {
        if (v == n) return true;
        std::size_t tried = 0;  // first-use symmetry break: at most one fresh color
        for (std::size_t c = 0; c < k; ++c) {
            bool fresh = true, clash = false;
            for (std::size_t u = 0; u < v; ++u) {
                if (color[u] == static_cast<int>(c)) {
                    fresh = false;
                    if (g.has_edge(u, v)) clash = true;
                }
            }
            if (clash) continue;
            if (fresh && tried) break;
            if (fresh) ++tried;
            color[v] = static_cast<int>(c);
            if (self(self, v + 1, k)) return true;
            color[v] = -1;
        }
        return false;
    };
    for (std::size_t k = 1; k <= n; ++k) {
        std::fill(color.begin(), color.end(), -1);
        if (feasible(feasible, 0, k)) return k;
    }
    return n;
}

/// FNV-1a digest of the ordered adjacency structure. Not invariant under
/// vertex relabeling; cache keys pair this with the constructor spec.
inline std::uint64_t canonical_hash(const Graph& g) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto mix = [&h](std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xff;
            h *= 0x100000001b3ull;
        }
    };
    mix(g.order());
    for (std::size_t v = 0; v < g.order(); ++v) {
        const VertexSet& nb = g.neighbors(v);
        mix(nb.count());
        for (int u = nb.first(); u >= 0; u = nb.next(u)) mix(static_cast<std::uint64_t>(u));
    }
    return h;
}

}  // namespace domlab
