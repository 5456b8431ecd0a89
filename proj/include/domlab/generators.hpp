#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "domlab/graph.hpp"

namespace domlab {

namespace detail {

/// Deduplicating edge collector: the family definitions below list some
/// edges more than once (clique edges repeated by cross rules).
class EdgeBag {
public:
    void add(int u, int v) {
        if (u > v) std::swap(u, v);
        edges_.emplace(u, v);
    }
    void clique(int lo, int hi) {  // inclusive range of vertex ids
        for (int u = lo; u <= hi; ++u)
            for (int v = u + 1; v <= hi; ++v) add(u, v);
    }
    std::vector<std::pair<int, int>> take() const {
        return {edges_.begin(), edges_.end()};
    }

private:
    std::set<std::pair<int, int>> edges_;
};

inline void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

}  // namespace detail

inline Graph make_path(std::size_t n) {
    detail::require(n >= 1, "path:N requires N >= 1");
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    for (std::size_t i = 1; i <= n; ++i) labels.push_back("a" + std::to_string(i));
    return Graph(n, edges, labels);
}

inline Graph make_cycle(std::size_t n) {
    detail::require(n >= 3, "cycle:N requires N >= 3");
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(n - 1, 0);
    for (std::size_t i = 1; i <= n; ++i) labels.push_back("a" + std::to_string(i));
    return Graph(n, edges, labels);
}

inline Graph make_complete(std::size_t n) {
    detail::require(n >= 1, "complete:N requires N >= 1");
    detail::EdgeBag bag;
    bag.clique(0, static_cast<int>(n) - 1);
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= n; ++i) labels.push_back("v" + std::to_string(i));
    return Graph(n, bag.take(), labels);
}

/// Complete bipartite K_{m,n}: left part u1..um, right part w1..wn.
inline Graph make_complete_bipartite(std::size_t m, std::size_t n) {
    detail::require(m >= 1 && n >= 1, "kbip:M,N requires M,N >= 1");
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) edges.emplace_back(i, m + j);
    for (std::size_t i = 1; i <= m; ++i) labels.push_back("u" + std::to_string(i));
    for (std::size_t j = 1; j <= n; ++j) labels.push_back("w" + std::to_string(j));
    return Graph(m + n, edges, labels);
}

/// Star with N leaves: center c (id 0), leaves v1..vN.
inline Graph make_star(std::size_t n) {
    detail::require(n >= 1, "star:N requires N >= 1");
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> labels{"c"};
    for (std::size_t i = 1; i <= n; ++i) {
        edges.emplace_back(0, i);
        labels.push_back("v" + std::to_string(i));
    }
    return Graph(n + 1, edges, labels);
}

/// Cartesian product: (u1,v1) ~ (u2,v2) iff (u1=u2 and v1~v2) or
/// (v1=v2 and u1~u2). Vertex (u,v) maps to id u*|h| + v.
inline Graph cartesian_product(const Graph& g, const Graph& h) {
    std::size_t gn = g.order(), hn = h.order();
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> labels;
    labels.reserve(gn * hn);
    auto id = [hn](std::size_t u, std::size_t v) { return static_cast<int>(u * hn + v); };
    for (std::size_t u = 0; u < gn; ++u)
        for (std::size_t v = 0; v < hn; ++v)
            labels.push_back("(" + g.label(u) + "," + h.label(v) + ")");
    for (std::size_t u = 0; u < gn; ++u)
        for (std::size_t v = 0; v < hn; ++v) {
            const VertexSet& hn_adj = h.neighbors(v);
            for (int v2 = hn_adj.next(static_cast<int>(v)); v2 >= 0; v2 = hn_adj.next(v2))
                edges.emplace_back(id(u, v), id(u, v2));
            const VertexSet& gn_adj = g.neighbors(u);
            for (int u2 = gn_adj.next(static_cast<int>(u)); u2 >= 0; u2 = gn_adj.next(u2))
                edges.emplace_back(id(u, v), id(u2, v));
        }
    return Graph(gn * hn, edges, labels);
}

/// Ladder P_2 x P_n.
inline Graph make_ladder(std::size_t n) {
    detail::require(n >= 1, "ladder:N requires N >= 1");
    return cartesian_product(make_path(2), make_path(n));
}

/// Block-diagonal union; labels keep operand labels behind "0:"/"1:" prefixes.
inline Graph disjoint_union(const Graph& g, const Graph& h) {
    std::size_t gn = g.order();
    std::vector<std::pair<int, int>> edges = g.edges();
    for (auto [u, v] : h.edges()) edges.emplace_back(u + static_cast<int>(gn), v + static_cast<int>(gn));
    std::vector<std::string> labels;
    for (std::size_t v = 0; v < gn; ++v) labels.push_back("0:" + g.label(v));
    for (std::size_t v = 0; v < h.order(); ++v) labels.push_back("1:" + h.label(v));
    return Graph(gn + h.order(), edges, labels);
}

inline Graph add_edge(const Graph& g, std::size_t u, std::size_t v) { return g.with_edge(u, v); }

// ---------------------------------------------------------------------------
// Named catalog graphs.
// ---------------------------------------------------------------------------

/// Triangular prism: lower triangle l1,l2,l3, upper triangle u1,u2,u3,
/// rungs (l_i,u_i). Splits into two induced triangles with exactly one
/// edge leaving each vertex, so the clique-partition certificate applies.
inline Graph make_house() {
    detail::EdgeBag bag;
    bag.clique(0, 2);
    bag.clique(3, 5);
    for (int i = 0; i < 3; ++i) bag.add(i, 3 + i);
    return Graph(6, bag.take(), {"l1", "l2", "l3", "u1", "u2", "u3"});
}

/// The prism plus one face diagonal (u2,l3).
inline Graph make_house_diag() { return make_house().with_edge(4, 2); }

/// Nine-vertex two-level graph: K4 on a1..a4, K5 on b1..b5, rungs
/// (a_i,b_i) for i<=4, and the extra edge (b1,a2). b5 has no neighbor
/// below; every guard drifting upstairs is the failure mode this graph
/// exists to exhibit.
inline Graph make_house9() {
    detail::EdgeBag bag;
    bag.clique(0, 3);   // a1..a4
    bag.clique(4, 8);   // b1..b5
    for (int i = 0; i < 4; ++i) bag.add(i, 4 + i);
    bag.add(4, 1);      // (b1,a2)
    return Graph(9, bag.take(), {"a1", "a2", "a3", "a4", "b1", "b2", "b3", "b4", "b5"});
}

/// Triangle t1,t2,t3 with two leaves x1,x2 pendant on t1.
inline Graph make_paw2() {
    detail::EdgeBag bag;
    bag.clique(0, 2);
    bag.add(0, 3);
    bag.add(0, 4);
    return Graph(5, bag.take(), {"t1", "t2", "t3", "x1", "x2"});
}

/// Order-six graph with two universal-but-one vertices a,b, a triangle
/// vertex c, an apex p adjacent to a,b,c, and two vertices e,f adjacent
/// only to a,b. Its complement is 3-colorable while the autonomous
/// domination number is 4.
inline Graph make_intro6() {
    std::vector<std::pair<int, int>> edges = {
        {0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5},  // a-b, a-c, a-p, a-e, a-f
        {1, 2}, {1, 3}, {1, 4}, {1, 5},          // b-c, b-p, b-e, b-f
        {2, 3},                                  // c-p
    };
    return Graph(6, edges, {"a", "b", "c", "p", "e", "f"});
}

inline Graph make_c5k3() { return disjoint_union(make_cycle(5), make_complete(3)); }

/// C5 + K3 joined by a single bridge from cycle vertex a1 to clique vertex v1.
inline Graph make_c5k3_bridge() { return make_c5k3().with_edge(0, 5); }

// ---------------------------------------------------------------------------
// Parameterized families. Vertex order: a-block, then b-block, then
// c-block, each in index order.
// ---------------------------------------------------------------------------

/// Family A_n (n >= 2): cliques a1..a_{2n+1} and b1..b_{2n}, rungs
/// (a_i,b_i), a dense lower-triangular set of cross edges, and a cone
/// vertex c adjacent to everything. Invariant triple (1, 2, n+1).
inline Graph make_family_a(std::size_t n) {
    detail::require(n >= 2, "A:N requires N >= 2");
    int na = static_cast<int>(2 * n + 1);
    int nb = static_cast<int>(2 * n);
    auto a = [](int i) { return i - 1; };                 // a_i, 1-based
    auto b = [na](int j) { return na + j - 1; };          // b_j, 1-based
    int c = na + nb;
    detail::EdgeBag bag;
    bag.clique(a(1), a(na));
    bag.clique(b(1), b(nb));
    for (int i = 1; i <= nb; ++i) bag.add(a(i), b(i));
    for (int i = 1; i <= static_cast<int>(n); ++i)
        for (int j = 1; j <= 2 * static_cast<int>(n) - i; ++j) bag.add(a(i), b(j));
    for (int i = 1; i <= na; ++i) bag.add(c, a(i));
    for (int j = 1; j <= nb; ++j) bag.add(c, b(j));
    std::vector<std::string> labels;
    for (int i = 1; i <= na; ++i) labels.push_back("a" + std::to_string(i));
    for (int j = 1; j <= nb; ++j) labels.push_back("b" + std::to_string(j));
    labels.push_back("c");
    return Graph(na + nb + 1, bag.take(), labels);
}

/// Family B_{m,n} (m,n >= 0): cliques a1..a_{2n+3} and b1..b_{2n+4}, m
/// pendant paths c1_i-c2_i hanging from b_{n+1}, the swap edges
/// (a1,b2),(a2,b1), and cross edges (b_{3+i},a_{3+j}) for 0<=i<=n,
/// 0<=j<=2n-i. Invariant triple (m+2, m+2, m+n+3).
///
/// Matched rungs (a_i,b_i) span every index i = 1..2n+3. Restricting the
/// rungs to i <= n leaves the high-index b vertices with no neighbor in
/// the a-clique and breaks the family's invariant triple; the full range
/// is the reading validated by the exact engine (see CORRECTIONS.md).
inline Graph make_family_b(std::size_t m, std::size_t n) {
    int na = static_cast<int>(2 * n + 3);
    int nb = static_cast<int>(2 * n + 4);
    auto a = [](int i) { return i - 1; };
    auto b = [na](int j) { return na + j - 1; };
    auto c1 = [na, nb](int i) { return na + nb + 2 * (i - 1); };
    auto c2 = [na, nb](int i) { return na + nb + 2 * (i - 1) + 1; };
    detail::EdgeBag bag;
    bag.clique(a(1), a(na));
    bag.clique(b(1), b(nb));
    for (int i = 1; i <= na; ++i) bag.add(a(i), b(i));
    for (int i = 1; i <= static_cast<int>(m); ++i) {
        bag.add(c1(i), c2(i));
        bag.add(b(static_cast<int>(n) + 1), c1(i));
    }
    bag.add(a(1), b(2));
    bag.add(a(2), b(1));
    for (int i = 0; i <= static_cast<int>(n); ++i)
        for (int j = 0; j <= 2 * static_cast<int>(n) - i; ++j) bag.add(b(3 + i), a(3 + j));
    std::vector<std::string> labels;
    for (int i = 1; i <= na; ++i) labels.push_back("a" + std::to_string(i));
    for (int j = 1; j <= nb; ++j) labels.push_back("b" + std::to_string(j));
    for (int i = 1; i <= static_cast<int>(m); ++i) {
        labels.push_back("c1_" + std::to_string(i));
        labels.push_back("c2_" + std::to_string(i));
    }
    return Graph(na + nb + 2 * m, bag.take(), labels);
}

/// Family C_{m,n} (m >= 2, n >= 1): two universal vertices a1,a2, m
/// independent vertices b1..bm, and a clique c1..cn. Triple (1, m+1, m+n).
inline Graph make_family_c(std::size_t m, std::size_t n) {
    detail::require(m >= 2, "C:M,N requires M >= 2");
    detail::require(n >= 1, "C:M,N requires N >= 1");
    int total = static_cast<int>(2 + m + n);
    detail::EdgeBag bag;
    for (int v = 2; v < total; ++v) {
        bag.add(0, v);
        bag.add(1, v);
    }
    bag.add(0, 1);
    bag.clique(static_cast<int>(2 + m), total - 1);
    std::vector<std::string> labels{"a1", "a2"};
    for (std::size_t i = 1; i <= m; ++i) labels.push_back("b" + std::to_string(i));
    for (std::size_t i = 1; i <= n; ++i) labels.push_back("c" + std::to_string(i));
    return Graph(total, bag.take(), labels);
}

/// Family D_{m,n} (m,n >= 1): clique {a1,a2,b1_1..bm_1}, pendant leaves
/// b_i2 on each b_i1, and clique {a2,c1..cn}. Triple (m+1, m+2, m+n+1).
inline Graph make_family_d(std::size_t m, std::size_t n) {
    detail::require(m >= 1 && n >= 1, "D:M,N requires M,N >= 1");
    auto b1 = [](int i) { return 2 + 2 * (i - 1); };
    auto b2 = [](int i) { return 3 + 2 * (i - 1); };
    auto c = [m](int j) { return static_cast<int>(2 + 2 * m) + j - 1; };
    detail::EdgeBag bag;
    bag.add(0, 1);
    for (int i = 1; i <= static_cast<int>(m); ++i) {
        bag.add(0, b1(i));
        bag.add(1, b1(i));
        for (int i2 = i + 1; i2 <= static_cast<int>(m); ++i2) bag.add(b1(i), b1(i2));
        bag.add(b1(i), b2(i));
    }
    for (int j = 1; j <= static_cast<int>(n); ++j) {
        bag.add(1, c(j));
        for (int j2 = j + 1; j2 <= static_cast<int>(n); ++j2) bag.add(c(j), c(j2));
    }
    std::vector<std::string> labels{"a1", "a2"};
    for (std::size_t i = 1; i <= m; ++i) {
        labels.push_back("b" + std::to_string(i) + "_1");
        labels.push_back("b" + std::to_string(i) + "_2");
    }
    for (std::size_t j = 1; j <= n; ++j) labels.push_back("c" + std::to_string(j));
    return Graph(2 + 2 * m + n, bag.take(), labels);
}

/// Family E_{m,n} (m,n >= 1): clique a1..a_{m+3}, twin vertices b1,b2
/// joined to a1 and a2, and n leaves c1..cn pendant on a_{m+3}.
/// Triple (2, n+3, m+n+3).
inline Graph make_family_e(std::size_t m, std::size_t n) {
    detail::require(m >= 1 && n >= 1, "E:M,N requires M,N >= 1");
    int na = static_cast<int>(m + 3);
    int b1 = na, b2 = na + 1;
    detail::EdgeBag bag;
    bag.clique(0, na - 1);
    for (int i = 0; i < 2; ++i) {
        bag.add(i, b1);
        bag.add(i, b2);
    }
    for (int j = 0; j < static_cast<int>(n); ++j) bag.add(na - 1, na + 2 + j);
    std::vector<std::string> labels;
    for (int i = 1; i <= na; ++i) labels.push_back("a" + std::to_string(i));
    labels.push_back("b1");
    labels.push_back("b2");
    for (std::size_t j = 1; j <= n; ++j) labels.push_back("c" + std::to_string(j));
    return Graph(na + 2 + n, bag.take(), labels);
}

/// Family F_{l,m,n} (l,m,n >= 1): clique c1..c_{l+n}, leaves a_i pendant
/// on c_i for i<=l, and m vertices b_j adjacent to c1..cl.
/// Triple (l, l+m+1, l+m+n).
inline Graph make_family_f(std::size_t l, std::size_t m, std::size_t n) {
    detail::require(l >= 1 && m >= 1 && n >= 1, "F:L,M,N requires L,M,N >= 1");
    auto a = [](int i) { return i - 1; };
    auto b = [l](int j) { return static_cast<int>(l) + j - 1; };
    auto c = [l, m](int t) { return static_cast<int>(l + m) + t - 1; };
    detail::EdgeBag bag;
    for (int i = 1; i <= static_cast<int>(l); ++i) bag.add(a(i), c(i));
    for (int j = 1; j <= static_cast<int>(m); ++j)
        for (int i = 1; i <= static_cast<int>(l); ++i) bag.add(b(j), c(i));
    bag.clique(c(1), c(static_cast<int>(l + n)));
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= l; ++i) labels.push_back("a" + std::to_string(i));
    for (std::size_t j = 1; j <= m; ++j) labels.push_back("b" + std::to_string(j));
    for (std::size_t t = 1; t <= l + n; ++t) labels.push_back("c" + std::to_string(t));
    return Graph(2 * l + m + n, bag.take(), labels);
}

}  // namespace domlab
