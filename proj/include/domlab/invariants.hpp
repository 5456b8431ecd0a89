#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "domlab/graph.hpp"
#include "domlab/move_graph.hpp"
#include "domlab/trajectory.hpp"

namespace domlab {

enum class CertificateKind { Witness, Family, FixedPoint, Formula };

/// Result of one invariant computation. `known` is false when the node
/// cap stopped the computation; the value is then meaningless and the
/// note says what was exceeded.
struct InvariantReport {
    std::string invariant;
    std::string spec;  // filled by callers that know the constructor expression
    std::uint64_t graph_hash = 0;
    bool known = true;
    std::size_t value = 0;

    CertificateKind kind = CertificateKind::Formula;
    VertexSet witness;                    // Witness
    FamilyCertificate family;             // Family
    std::size_t fixed_point_size = 0;     // FixedPoint
    std::string formula;                  // Formula

    std::vector<std::size_t> infeasible_below;  // ascending-scan failures
    std::size_t k_lo = 0, k_hi = 0;             // examined range
    double wall_seconds = 0.0;
    std::string note;
};

namespace detail {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace detail

/// Least k admitting a dominating set; the witness is included.
inline InvariantReport domination_number(const Graph& g, const EngineLimits& limits = {}) {
    (void)limits;
    detail::Stopwatch sw;
    InvariantReport r;
    r.invariant = "gamma";
    r.graph_hash = canonical_hash(g);
    r.kind = CertificateKind::Witness;
    r.k_lo = 1;
    for (std::size_t k = 1; k <= g.order(); ++k) {
        if (auto w = find_dominating(g, k)) {
            r.value = k;
            r.k_hi = k;
            r.witness = *w;
            r.wall_seconds = sw.seconds();
            return r;
        }
        r.infeasible_below.push_back(k);
    }
    throw std::logic_error("domination_number: no dominating set found (engine bug)");
}

/// Greatest-fixed-point feasibility test for eternal defense at size k:
/// start from all dominating k-sets and delete any set for which some
/// attack has no surviving response; k suffices iff anything survives.
/// Deletions propagate through a worklist keyed on move-graph edges.
/// Returns the fixed-point size, or nullopt when it is empty.
inline std::optional<std::size_t> eternal_fixed_point(const Graph& g, std::size_t k,
                                                      const EngineLimits& limits = {}) {
    MoveGraph mg = build_move_graph(g, k, limits);
    const std::size_t n = g.order();
    const std::size_t count = mg.nodes.size();
    if (count == 0) return std::nullopt;

    // responses[i][v]: number of surviving neighbors of node i that
    // contain vertex v. An attack at v is answerable while it stays > 0.
    std::vector<std::vector<std::uint32_t>> responses(count, std::vector<std::uint32_t>(n, 0));
    for (std::size_t i = 0; i < count; ++i)
        for (std::int32_t j : mg.adj[i]) {
            int v = (mg.nodes[j] - mg.nodes[i]).first();
            ++responses[i][static_cast<std::size_t>(v)];
        }

    std::vector<char> alive(count, 1);
    std::deque<std::int32_t> worklist;
    for (std::size_t i = 0; i < count; ++i) {
        if (!mg.secure[i]) {  // some attack already has zero responses
            alive[i] = 0;
            worklist.push_back(static_cast<std::int32_t>(i));
        }
    }
    std::size_t survivors = count;
    while (!worklist.empty()) {
        std::int32_t dead = worklist.front();
        worklist.pop_front();
        --survivors;
        for (std::int32_t i : mg.adj[dead]) {
            if (!alive[i]) continue;
            int v = (mg.nodes[dead] - mg.nodes[i]).first();
            if (--responses[i][static_cast<std::size_t>(v)] == 0) {
                alive[i] = 0;
                worklist.push_back(i);
            }
        }
    }
    if (survivors == 0) return std::nullopt;
    return survivors;
}

/// Least k with a nonempty eternal fixed point. Eternal feasibility is
/// monotone in k (an extra guard can sit still), so the ascending scan
/// stops at the answer.
inline InvariantReport eternal_domination_number(const Graph& g, const EngineLimits& limits = {}) {
    detail::Stopwatch sw;
    InvariantReport r;
    r.invariant = "eternal";
    r.graph_hash = canonical_hash(g);
    r.kind = CertificateKind::FixedPoint;
    std::size_t gamma = domination_number(g, limits).value;
    r.k_lo = gamma;
    try {
        for (std::size_t k = gamma; k <= g.order(); ++k) {
            if (auto size = eternal_fixed_point(g, k, limits)) {
                r.value = k;
                r.k_hi = k;
                r.fixed_point_size = *size;
                r.wall_seconds = sw.seconds();
                return r;
            }
            r.infeasible_below.push_back(k);
        }
    } catch (const CapExceeded& e) {
        r.known = false;
        r.note = e.what();
        r.wall_seconds = sw.seconds();
        return r;
    }
    throw std::logic_error("eternal_domination_number: V itself must be eternally dominating");
}

/// n - delta, by formula.
inline InvariantReport foolproof_number(const Graph& g, const EngineLimits& limits = {}) {
    (void)limits;
    detail::Stopwatch sw;
    InvariantReport r;
    r.invariant = "foolproof";
    r.graph_hash = canonical_hash(g);
    r.kind = CertificateKind::Formula;
    r.value = g.order() - g.min_degree();
    r.formula = "n - delta = " + std::to_string(g.order()) + " - " + std::to_string(g.min_degree());
    r.wall_seconds = sw.seconds();
    return r;
}

/// Independent fixed-point check for the strengthened closure rule:
/// a set dies if any adjacent-guard swap breaks domination or leaves the
/// surviving collection. Because every dominating swap is a move-graph
/// edge, deletion floods whole components; the survivors are exactly the
/// components in which every node has all of its swaps dominating.
inline bool verify_foolproof(const Graph& g, std::size_t k, const EngineLimits& limits = {}) {
    if (k > g.order()) throw std::invalid_argument("verify_foolproof: k exceeds graph order");
    MoveGraph mg = build_move_graph(g, k, limits);
    if (mg.nodes.empty()) return false;

    std::vector<char> ok(mg.nodes.size(), 1);
    for (std::size_t i = 0; i < mg.nodes.size(); ++i) {
        const VertexSet& s = mg.nodes[i];
        std::size_t swaps = 0;
        for (int w = s.first(); w >= 0; w = s.next(w))
            swaps += (g.neighbors(static_cast<std::size_t>(w)) - s).count();
        // adj holds precisely the dominating swaps; fewer means some swap
        // leaves domination, which the strengthened rule forbids.
        if (mg.adj[i].size() != swaps) ok[i] = 0;
    }
    std::vector<char> comp_ok(mg.component_count, 1);
    for (std::size_t i = 0; i < mg.nodes.size(); ++i)
        if (!ok[i]) comp_ok[static_cast<std::size_t>(mg.component[i])] = 0;
    for (char c : comp_ok)
        if (c) return true;
    return false;
}

/// Feasibility of autonomous defense at size k: some move-graph
/// component must consist entirely of secure nodes. The certificate is
/// the smallest such component (ties broken by lowest id) and re-passes
/// verify_family.
inline std::pair<bool, std::optional<FamilyCertificate>> autonomous_feasible(
    const Graph& g, std::size_t k, const EngineLimits& limits = {}) {
    if (k < 1 || k > g.order())
        throw std::invalid_argument("autonomous_feasible: k must satisfy 1 <= k <= n");
    MoveGraph mg = build_move_graph(g, k, limits);
    std::vector<std::size_t> comp_size(mg.component_count, 0);
    std::vector<char> comp_secure(mg.component_count, 1);
    for (std::size_t i = 0; i < mg.nodes.size(); ++i) {
        ++comp_size[static_cast<std::size_t>(mg.component[i])];
        if (!mg.secure[i]) comp_secure[static_cast<std::size_t>(mg.component[i])] = 0;
    }
    std::int32_t best = -1;
    for (std::size_t c = 0; c < mg.component_count; ++c) {
        if (!comp_secure[c]) continue;
        if (best < 0 || comp_size[c] < comp_size[static_cast<std::size_t>(best)])
            best = static_cast<std::int32_t>(c);
    }
    if (best < 0) return {false, std::nullopt};
    FamilyCertificate cert;
    cert.k = k;
    cert.components = {best};
    cert.family_size = comp_size[static_cast<std::size_t>(best)];
    for (std::size_t i = 0; i < mg.nodes.size(); ++i)
        if (mg.component[i] == best) {
            cert.representative = mg.nodes[i];  // colex-least member
            break;
        }
    return {true, cert};
}

/// Least k in [gamma, n - delta] at which autonomous defense is
/// feasible. Feasibility is not monotone in k, so every size is tested;
/// the infeasible sizes below the answer are recorded in the report.
inline InvariantReport autonomous_number(const Graph& g, const EngineLimits& limits = {}) {
    detail::Stopwatch sw;
    InvariantReport r;
    r.invariant = "autonomous";
    r.graph_hash = canonical_hash(g);
    r.kind = CertificateKind::Family;
    std::size_t gamma = domination_number(g, limits).value;
    std::size_t upper = g.order() - g.min_degree();
    r.k_lo = gamma;
    r.k_hi = upper;
    try {
        for (std::size_t k = gamma; k <= upper; ++k) {
            auto [ok, cert] = autonomous_feasible(g, k, limits);
            if (ok) {
                r.value = k;
                r.family = *cert;
                r.wall_seconds = sw.seconds();
                return r;
            }
            r.infeasible_below.push_back(k);
        }
    } catch (const CapExceeded& e) {
        r.known = false;
        r.note = e.what();
        r.wall_seconds = sw.seconds();
        return r;
    }
    throw std::logic_error("autonomous_number: no feasible size up to n - delta (engine bug)");
}

struct FeasibilityRow {
    std::size_t k = 0;
    bool known = true;
    bool feasible = false;
    std::size_t component_count = 0;
    std::size_t all_secure_components = 0;
    std::size_t node_count = 0;
};

struct FeasibilityProfile {
    std::string spec;
    std::size_t gamma = 0;
    std::vector<FeasibilityRow> rows;  // k = 1..k_max
};

/// Per-size feasibility summary for k = 1..k_max. Sizes below gamma
/// carry no dominating sets and report as infeasible with zero
/// components.
inline FeasibilityProfile feasibility_profile(const Graph& g, std::size_t k_max,
                                              const EngineLimits& limits = {}) {
    if (k_max > g.order()) throw std::invalid_argument("feasibility_profile: k_max exceeds order");
    FeasibilityProfile p;
    p.gamma = domination_number(g, limits).value;
    for (std::size_t k = 1; k <= k_max; ++k) {
        FeasibilityRow row;
        row.k = k;
        try {
            MoveGraph mg = build_move_graph(g, k, limits);
            row.node_count = mg.nodes.size();
            row.component_count = mg.component_count;
            for (std::size_t c = 0; c < mg.component_count; ++c)
                if (mg.component_all_secure(static_cast<std::int32_t>(c))) ++row.all_secure_components;
            row.feasible = row.all_secure_components > 0;
        } catch (const CapExceeded&) {
            row.known = false;
        }
        p.rows.push_back(row);
    }
    return p;
}

/// Raised by refute when the start lies in an all-secure component.
struct NoRefutation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Shortest move-graph path (BFS) from the start configuration to a
/// non-secure one, emitted as attack/response steps; the final step
/// names an attack with no legal response.
inline Trajectory refute(const Graph& g, std::size_t k, const VertexSet& start,
                         const EngineLimits& limits = {}) {
    MoveGraph mg = build_move_graph(g, k, limits);
    auto src = mg.find(start);
    if (!src) throw std::invalid_argument("refute: start is not a dominating set of size k");

    std::vector<std::int32_t> parent(mg.nodes.size(), -2);
    std::deque<std::int32_t> queue{*src};
    parent[static_cast<std::size_t>(*src)] = -1;
    std::int32_t goal = -1;
    while (!queue.empty() && goal < 0) {
        std::int32_t u = queue.front();
        queue.pop_front();
        if (!mg.secure[static_cast<std::size_t>(u)]) {
            goal = u;
            break;
        }
        for (std::int32_t v : mg.adj[u])
            if (parent[static_cast<std::size_t>(v)] == -2) {
                parent[static_cast<std::size_t>(v)] = u;
                queue.push_back(v);
            }
    }
    if (goal < 0)
        throw NoRefutation("refute: the component of the start configuration is all-secure");

    std::vector<std::int32_t> path;
    for (std::int32_t u = goal; u >= 0; u = parent[static_cast<std::size_t>(u)]) path.push_back(u);
    std::reverse(path.begin(), path.end());

    Trajectory trj;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        const VertexSet& s = mg.nodes[static_cast<std::size_t>(path[i])];
        const VertexSet& t = mg.nodes[static_cast<std::size_t>(path[i + 1])];
        int to = (t - s).first();
        int from = (s - t).first();
        trj.steps.push_back({s, to, Move{from, to}});
    }
    const VertexSet& last = mg.nodes[static_cast<std::size_t>(goal)];
    VertexSet outside = last.complement();
    for (int v = outside.first(); v >= 0; v = outside.next(v)) {
        if (legal_moves(g, last, v).empty()) {
            trj.steps.push_back({last, v, std::nullopt});
            break;
        }
    }
    return trj;
}

struct BoundsReport {
    std::size_t gamma = 0;
    std::size_t eternal = 0;
    std::size_t autonomous = 0;
    std::size_t n_minus_delta = 0;
    std::size_t alpha = 0;
    bool chain_holds = false;
};

/// Computes the full chain gamma <= eternal <= autonomous <= n - delta
/// together with alpha <= autonomous. A violation is an engine bug and
/// raises logic_error.
inline BoundsReport check_bounds(const Graph& g, const EngineLimits& limits = {}) {
    BoundsReport b;
    b.gamma = domination_number(g, limits).value;
    b.eternal = eternal_domination_number(g, limits).value;
    b.autonomous = autonomous_number(g, limits).value;
    b.n_minus_delta = g.order() - g.min_degree();
    b.alpha = independence_number(g);
    b.chain_holds = b.gamma <= b.eternal && b.eternal <= b.autonomous &&
                    b.autonomous <= b.n_minus_delta && b.alpha <= b.autonomous;
    if (!b.chain_holds)
        throw std::logic_error(
            "check_bounds: invariant chain violated (engine bug): gamma=" + std::to_string(b.gamma) +
            " eternal=" + std::to_string(b.eternal) + " autonomous=" + std::to_string(b.autonomous) +
            " n-delta=" + std::to_string(b.n_minus_delta) + " alpha=" + std::to_string(b.alpha));
    return b;
}

/// True when dominating k-sets exist and every one of them is secure
/// dominating; the whole size-k layer is then an autonomous family.
inline bool secdom_sufficiency(const Graph& g, std::size_t k, const EngineLimits& limits = {}) {
    MoveGraph mg = build_move_graph(g, k, limits);
    if (mg.nodes.empty()) return false;
    for (char s : mg.secure)
        if (!s) return false;
    return true;
}

/// Clique-partition certificate: if V splits into k cliques, each larger
/// than k, and every vertex has at most one neighbor inside each other
/// class, the autonomous domination number is exactly k. Returns k when
/// the hypotheses hold, nothing otherwise. A non-partition input is an
/// error.
inline std::optional<std::size_t> partition_bound(const Graph& g,
                                                  const std::vector<VertexSet>& partition) {
    VertexSet seen(g.order());
    for (const VertexSet& cls : partition) {
        if (cls.width() != g.order())
            throw std::invalid_argument("partition_bound: class width does not match graph order");
        if (cls.empty()) throw std::invalid_argument("partition_bound: empty class");
        if (seen.intersects(cls)) throw std::invalid_argument("partition_bound: classes overlap");
        seen |= cls;
    }
    if (seen != g.all_vertices())
        throw std::invalid_argument("partition_bound: classes do not cover every vertex");

    std::size_t k = partition.size();
    for (const VertexSet& cls : partition) {
        if (cls.count() <= k) return std::nullopt;  // class size must exceed k
        for (int u = cls.first(); u >= 0; u = cls.next(u)) {
            VertexSet inside = g.neighbors(static_cast<std::size_t>(u)) & cls;
            VertexSet rest = cls;
            rest.reset(static_cast<std::size_t>(u));
            if (inside != rest) return std::nullopt;  // class must induce a clique
        }
    }
    for (std::size_t v = 0; v < g.order(); ++v)
        for (const VertexSet& cls : partition) {
            if (cls.test(v)) continue;
            if ((g.neighbors(v) & cls).count() > 1) return std::nullopt;
        }
    return k;
}

}  // namespace domlab
