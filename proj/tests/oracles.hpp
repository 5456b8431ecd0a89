#pragma once

// Brute-force reference implementations used as independent oracles.
// They work from Graph::has_edge and plain subset loops only, sharing no
// algorithmic path with the engine under test.

#include <cstdint>
#include <vector>

#include "domlab/graph.hpp"

namespace oracles {

using domlab::Graph;
using domlab::VertexSet;

inline bool is_dominating(const Graph& g, const VertexSet& s) {
    for (std::size_t v = 0; v < g.order(); ++v) {
        if (s.test(v)) continue;
        bool covered = false;
        for (std::size_t u = 0; u < g.order() && !covered; ++u)
            if (s.test(u) && g.has_edge(u, v)) covered = true;
        if (!covered) return false;
    }
    return true;
}

inline std::vector<VertexSet> all_ksubsets(std::size_t n, std::size_t k) {
    std::vector<VertexSet> out;
    std::vector<int> pick;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (pick.size() == k) {
            VertexSet s(n);
            for (int v : pick) s.set(static_cast<std::size_t>(v));
            out.push_back(s);
            return;
        }
        for (std::size_t v = start; v < n; ++v) {
            pick.push_back(static_cast<int>(v));
            self(self, v + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

inline std::vector<VertexSet> dominating_ksets(const Graph& g, std::size_t k) {
    std::vector<VertexSet> out;
    for (const auto& s : all_ksubsets(g.order(), k))
        if (is_dominating(g, s)) out.push_back(s);
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_secure(const Graph& g, const VertexSet& s) {
    if (!is_dominating(g, s)) return false;
    for (std::size_t v = 0; v < g.order(); ++v) {
        if (s.test(v)) continue;
        bool ok = false;
        for (std::size_t w = 0; w < g.order() && !ok; ++w) {
            if (!s.test(w) || !g.has_edge(w, v)) continue;
            VertexSet t = s;
            t.reset(w);
            t.set(v);
            if (is_dominating(g, t)) ok = true;
        }
        if (!ok) return false;
    }
    return true;
}

inline bool sets_adjacent(const Graph& g, const VertexSet& x, const VertexSet& y) {
    VertexSet diff = x ^ y;
    if (diff.count() != 2) return false;
    int a = diff.first();
    int b = diff.next(a);
    return g.has_edge(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
}

inline bool autonomous_feasible(const Graph& g, std::size_t k) {
    auto nodes = dominating_ksets(g, k);
    std::vector<int> comp(nodes.size(), -1);
    int nc = 0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (comp[i] >= 0) continue;
        comp[i] = nc;
        std::vector<std::size_t> stack{i};
        while (!stack.empty()) {
            auto u = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < nodes.size(); ++j)
                if (comp[j] < 0 && sets_adjacent(g, nodes[u], nodes[j])) {
                    comp[j] = nc;
                    stack.push_back(j);
                }
        }
        ++nc;
    }
    for (int c = 0; c < nc; ++c) {
        bool nonempty = false, all = true;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            if (comp[i] != c) continue;
            nonempty = true;
            if (!is_secure(g, nodes[i])) {
                all = false;
                break;
            }
        }
        if (nonempty && all) return true;
    }
    return false;
}

/// Eternal feasibility by repeated full rescans of the deletion rule.
inline bool eternal_feasible(const Graph& g, std::size_t k) {
    auto nodes = dominating_ksets(g, k);
    std::vector<char> alive(nodes.size(), 1);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            if (!alive[i]) continue;
            for (std::size_t v = 0; v < g.order(); ++v) {
                if (nodes[i].test(v)) continue;
                bool answerable = false;
                for (std::size_t j = 0; j < nodes.size() && !answerable; ++j)
                    if (alive[j] && nodes[j].test(v) && sets_adjacent(g, nodes[i], nodes[j]))
                        answerable = true;
                if (!answerable) {
                    alive[i] = 0;
                    changed = true;
                    break;
                }
            }
        }
    }
    for (char a : alive)
        if (a) return true;
    return false;
}

inline std::size_t independence_number(const Graph& g) {
    std::size_t best = 0;
    for (std::size_t k = g.order(); k >= 1; --k) {
        for (const auto& s : all_ksubsets(g.order(), k)) {
            bool indep = true;
            for (int u = s.first(); u >= 0 && indep; u = s.next(u))
                for (int v = s.next(u); v >= 0 && indep; v = s.next(v))
                    if (g.has_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v)))
                        indep = false;
            if (indep) return k;
        }
    }
    return best;
}

/// All independent sets, including the empty set.
inline std::vector<VertexSet> independent_sets(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet cur(g.order());
    auto rec = [&](auto&& self, std::size_t v) -> void {
        if (v == g.order()) {
            out.push_back(cur);
            return;
        }
        self(self, v + 1);
        bool clash = false;
        for (int u = cur.first(); u >= 0 && !clash; u = cur.next(u))
            if (g.has_edge(static_cast<std::size_t>(u), v)) clash = true;
        if (!clash) {
            cur.set(v);
            self(self, v + 1);
            cur.reset(v);
        }
    };
    rec(rec, 0);
    return out;
}

inline std::uint64_t splitmix_step(std::uint64_t& s) {
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// Seeded random connected graph on 2..max_n vertices.
inline Graph random_connected_graph(std::uint64_t& state, std::size_t max_n) {
    while (true) {
        std::size_t n = 2 + splitmix_step(state) % (max_n - 1);
        std::vector<std::pair<int, int>> edges;
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                if (splitmix_step(state) % 100 < 40) edges.emplace_back(int(u), int(v));
        Graph g(n, edges);
        if (g.is_connected()) return g;
    }
}

}  // namespace oracles
