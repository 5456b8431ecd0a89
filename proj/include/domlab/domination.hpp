#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "domlab/graph.hpp"

namespace domlab {

/// Guard move: the guard at `from` slides along an edge to `to`.
struct Move {
    int from;
    int to;
    bool operator==(const Move& o) const { return from == o.from && to == o.to; }
};

/// A set is dominating when the closed neighborhoods of its members
/// cover every vertex.
inline bool is_dominating(const Graph& g, const VertexSet& s) {
    VertexSet covered = s;
    for (int v = s.first(); v >= 0; v = s.next(v)) covered |= g.neighbors(static_cast<std::size_t>(v));
    return covered == g.all_vertices();
}

/// All moves (w -> attack) with w a guard adjacent to the attacked vertex
/// such that the post-move configuration is still dominating. Sorted by
/// mover id. The attacked vertex must be unoccupied.
inline std::vector<Move> legal_moves(const Graph& g, const VertexSet& s, int attack) {
    if (attack < 0 || static_cast<std::size_t>(attack) >= g.order())
        throw std::out_of_range("legal_moves: attack vertex out of range");
    if (s.test(static_cast<std::size_t>(attack)))
        throw std::invalid_argument("legal_moves: attacked vertex is occupied");
    std::vector<Move> moves;
    VertexSet movers = g.neighbors(static_cast<std::size_t>(attack)) & s;
    for (int w = movers.first(); w >= 0; w = movers.next(w)) {
        VertexSet t = s;
        t.reset(static_cast<std::size_t>(w));
        t.set(static_cast<std::size_t>(attack));
        if (is_dominating(g, t)) moves.push_back({w, attack});
    }
    return moves;
}

/// Dominating, and every unoccupied vertex admits at least one legal move.
inline bool is_secure_dominating(const Graph& g, const VertexSet& s) {
    if (!is_dominating(g, s)) return false;
    VertexSet outside = s.complement();
    for (int v = outside.first(); v >= 0; v = outside.next(v))
        if (legal_moves(g, s, v).empty()) return false;
    return true;
}

/// Raised when a computation would exceed the configured node cap. The
/// caller reports the result as unknown rather than guessing.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EngineLimits {
    std::uint64_t node_cap = 50'000'000;
    unsigned threads = 0;  // 0 = hardware default where parallelism exists
};

/// Binomial coefficient saturating at `cap + 1`.
inline std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        if (result > cap) return cap + 1;
        result = result * (n - k + i) / i;
    }
    return std::min(result, cap + 1);
}

namespace detail {

/// Depth-first enumeration of dominating k-sets with two cuts: the
/// coverage bound (remaining guards cover at most (maxdeg+1) new vertices
/// each) and the deadline bound (a vertex whose whole closed neighborhood
/// lies below the next candidate index can never become covered).
template <typename Emit>
void enumerate_dominating_rec(const Graph& g, std::size_t k, Emit&& emit) {
    const std::size_t n = g.order();
    const std::size_t reach = g.max_degree() + 1;

    // dead_before[i]: vertices whose closed neighborhood is contained in 0..i-1.
    std::vector<VertexSet> dead_before(n + 1, VertexSet(n));
    {
        std::vector<int> deadline(n);
        for (std::size_t v = 0; v < n; ++v) {
            int last = static_cast<int>(v);
            const VertexSet& nb = g.neighbors(v);
            for (int u = nb.first(); u >= 0; u = nb.next(u)) last = std::max(last, u);
            deadline[v] = last;
        }
        for (std::size_t i = 1; i <= n; ++i) {
            dead_before[i] = dead_before[i - 1];
            for (std::size_t v = 0; v < n; ++v)
                if (deadline[v] == static_cast<int>(i) - 1) dead_before[i].set(v);
        }
    }

    VertexSet chosen(n);
    auto rec = [&](auto&& self, std::size_t start, std::size_t picked, const VertexSet& covered) -> bool {
        if (picked == k) {
            if (covered == g.all_vertices())
                if (!emit(chosen)) return false;
            return true;
        }
        std::size_t slots = k - picked;
        if (n - start < slots) return true;
        VertexSet uncovered = covered.complement();
        if (uncovered.count() > slots * reach) return true;
        if (uncovered.intersects(dead_before[start])) return true;
        for (std::size_t v = start; v < n; ++v) {
            chosen.set(v);
            if (!self(self, v + 1, picked + 1, covered | g.closed_neighborhood(v))) return false;
            chosen.reset(v);
        }
        return true;
    };
    rec(rec, 0, 0, VertexSet(n));
}

}  // namespace detail

/// Exactly the dominating sets of cardinality k, each once, in
/// colexicographic order. Equals the brute filter of all k-subsets.
inline std::vector<VertexSet> enumerate_dominating(const Graph& g, std::size_t k,
                                                   const EngineLimits& limits = {}) {
    if (k > g.order())
        throw std::invalid_argument("enumerate_dominating: k exceeds graph order");
    if (binomial_capped(g.order(), k, limits.node_cap) > limits.node_cap)
        throw CapExceeded("enumerate_dominating: projected node count C(" +
                          std::to_string(g.order()) + "," + std::to_string(k) + ") exceeds cap " +
                          std::to_string(limits.node_cap));
    std::vector<VertexSet> out;
    detail::enumerate_dominating_rec(g, k, [&](const VertexSet& s) {
        out.push_back(s);
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

/// First dominating k-set in search order, if any. Used for quick
/// feasibility probes; the witness is deterministic.
inline std::optional<VertexSet> find_dominating(const Graph& g, std::size_t k) {
    if (k > g.order()) return std::nullopt;
    std::optional<VertexSet> found;
    detail::enumerate_dominating_rec(g, k, [&](const VertexSet& s) {
        found = s;
        return false;
    });
    return found;
}

}  // namespace domlab
