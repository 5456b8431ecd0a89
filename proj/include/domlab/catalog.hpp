#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "domlab/graph_spec.hpp"
#include "domlab/invariants.hpp"

namespace domlab {

/// One row of the expected-value table: a constructor expression and the
/// invariant triple (gamma, eternal, autonomous) the engine must
/// reproduce. `source` names the rule the values come from; entries
/// whose values deviate from the families' advertised closed forms are
/// flagged here and explained in CORRECTIONS.md.
struct ExpectedTriple {
    std::string spec;
    std::size_t gamma = 0;
    std::size_t eternal = 0;
    std::size_t autonomous = 0;
    std::string source;
};

namespace detail {

inline void add_triple(std::vector<ExpectedTriple>& out, std::string spec, std::size_t g,
                       std::size_t e, std::size_t a, std::string source) {
    out.push_back({std::move(spec), g, e, a, std::move(source)});
}

}  // namespace detail

/// The desk-scale expected-value table. Every triple has been computed
/// by the exact engine and cross-checked against a brute-force oracle;
/// rows marked "corrected" differ from the families' advertised formulas
/// (see CORRECTIONS.md for the failing configurations).
inline std::vector<ExpectedTriple> catalog_expected() {
    using detail::add_triple;
    std::vector<ExpectedTriple> t;

    for (std::size_t n = 2; n <= 12; ++n) {
        std::size_t aut = n == 2 ? 1 : n == 3 ? 2 : n - 2;
        add_triple(t, "path:" + std::to_string(n), (n + 2) / 3, (n + 1) / 2, aut,
                   "paths: gamma=ceil(n/3), eternal=ceil(n/2), autonomous=n-2 for n>=4");
    }
    for (std::size_t n = 3; n <= 12; ++n) {
        std::size_t ete = n == 3 ? 1 : (n + 1) / 2;
        std::size_t aut = n <= 5 ? n - 2 : n - 3;
        add_triple(t, "cycle:" + std::to_string(n), (n + 2) / 3, ete, aut,
                   "cycles: gamma=ceil(n/3), eternal=ceil(n/2) for n>=4, autonomous=n-3 for n>=6");
    }
    for (std::size_t p = 2; p <= 4; ++p)
        for (std::size_t q = p; q <= 4; ++q)
            add_triple(t, "cart(complete:" + std::to_string(p) + ",complete:" + std::to_string(q) + ")",
                       p, p, p, "clique products: all three equal p");
    for (std::size_t n = 2; n <= 7; ++n) {
        std::size_t aut = n == 2 ? 2 : 2 * n - 3;
        add_triple(t, "ladder:" + std::to_string(n), (n + 2) / 2, n, aut,
                   n == 2 ? "ladders: n=2 is the 4-cycle, autonomous=2 (corrected; formula 2n-3 "
                            "needs n>=3)"
                          : "ladders: gamma=ceil((n+1)/2), eternal=n, autonomous=2n-3 for n>=3");
    }

    add_triple(t, "house", 2, 2, 2, "prism: clique-partition certificate gives 2");
    add_triple(t, "house+diag", 2, 2, 3, "prism plus a face diagonal: autonomous rises to 3");
    add_triple(t, "c5k3", 3, 4, 4,
               "disjoint union of C5 and K3: additivity gives 3+1=4 (corrected from the "
               "advertised 5; see CORRECTIONS.md)");
    add_triple(t, "c5k3+bridge", 3, 4, 6, "bridge between C5 and K3 raises autonomous to n-delta=6");
    add_triple(t, "paw2", 1, 3, 3, "triangle with two pendant leaves on one vertex");
    add_triple(t, "intro6", 1, 3, 4,
               "order-six example: complement is 3-colorable yet autonomous=4");
    add_triple(t, "house9", 2, 2, 2,
               "two-level 9-vertex graph: feasible at 2 and 4 but not 3 (not super-hereditary)");

    for (std::size_t n = 2; n <= 3; ++n)
        add_triple(t, "A:" + std::to_string(n), 1, 2, n + 2,
                   "family A: (1, 2, n+2) (corrected from n+1; see CORRECTIONS.md)");
    for (std::size_t m = 0; m <= 2; ++m)
        for (std::size_t n = 0; n <= 2; ++n)
            add_triple(t, "B:" + std::to_string(m) + "," + std::to_string(n), m + 2, m + 2,
                       2 * m + n + 3,
                       m == 0 ? "family B, m=0: (2, 2, n+3)"
                              : "family B: (m+2, m+2, 2m+n+3) (corrected from m+n+3 for m>=1; "
                                "see CORRECTIONS.md)");
    for (std::size_t m = 2; m <= 4; ++m)
        for (std::size_t n = 1; n <= 3; ++n)
            add_triple(t, "C:" + std::to_string(m) + "," + std::to_string(n), 1, m + 1, m + n,
                       "family C: (1, m+1, m+n)");
    for (std::size_t m = 1; m <= 3; ++m)
        for (std::size_t n = 1; n <= 3; ++n)
            add_triple(t, "D:" + std::to_string(m) + "," + std::to_string(n), m + 1, m + 2,
                       m + n + 1, "family D: (m+1, m+2, m+n+1)");
    for (std::size_t m = 1; m <= 3; ++m)
        for (std::size_t n = 1; n <= 3; ++n)
            add_triple(t, "E:" + std::to_string(m) + "," + std::to_string(n), 2, n + 3, m + n + 3,
                       "family E: (2, n+3, m+n+3)");
    for (std::size_t l = 1; l <= 3; ++l)
        for (std::size_t m = 1; m <= 2; ++m)
            for (std::size_t n = 1; n <= 2; ++n) {
                std::size_t aut = l == 1 ? m + 2 : l + m + n;
                add_triple(t, "F:" + std::to_string(l) + "," + std::to_string(m) + "," +
                                  std::to_string(n),
                           l, l + m + 1, aut,
                           l == 1 ? "family F, l=1: autonomous collapses to eternal=m+2 "
                                    "(corrected from l+m+n; see CORRECTIONS.md)"
                                  : "family F: (l, l+m+1, l+m+n) for l>=2");
            }
    return t;
}

/// Scope filter for verify runs. `max_n` bounds the trailing numeric
/// parameter of parameterized specs (path length, cycle length, ...).
inline std::vector<ExpectedTriple> catalog_scope(const std::string& scope, std::size_t max_n) {
    auto starts_with = [](const std::string& s, const std::string& p) {
        return s.rfind(p, 0) == 0;
    };
    std::vector<ExpectedTriple> out;
    for (const auto& e : catalog_expected()) {
        bool in_scope = false;
        if (scope == "default" || scope == "all")
            in_scope = true;
        else if (scope == "paths")
            in_scope = starts_with(e.spec, "path:");
        else if (scope == "cycles")
            in_scope = starts_with(e.spec, "cycle:");
        else if (scope == "products")
            in_scope = starts_with(e.spec, "cart(");
        else if (scope == "ladders")
            in_scope = starts_with(e.spec, "ladder:");
        else if (scope == "counterexamples")
            in_scope = e.spec == "house" || e.spec == "house+diag" || e.spec == "c5k3" ||
                       e.spec == "c5k3+bridge" || e.spec == "paw2" || e.spec == "intro6" ||
                       e.spec == "house9";
        else if (scope == "families")
            in_scope = starts_with(e.spec, "A:") || starts_with(e.spec, "B:") ||
                       starts_with(e.spec, "C:") || starts_with(e.spec, "D:") ||
                       starts_with(e.spec, "E:") || starts_with(e.spec, "F:");
        else
            throw std::invalid_argument("unknown verify scope: " + scope);
        if (!in_scope) continue;
        if (max_n != 0) {
            auto colon = e.spec.find_last_of(":,");
            if (colon != std::string::npos) {
                std::size_t tail = 0;
                bool numeric = colon + 1 < e.spec.size();
                for (std::size_t i = colon + 1; i < e.spec.size(); ++i) {
                    char ch = e.spec[i];
                    if (ch < '0' || ch > '9') {
                        numeric = false;
                        break;
                    }
                    tail = tail * 10 + static_cast<std::size_t>(ch - '0');
                }
                if (numeric && tail > max_n) continue;
            }
        }
        out.push_back(e);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Realizability.
// ---------------------------------------------------------------------------

/// Witness for the triple (1,2,3): cone over two matched cliques K3+K2.
/// This is the family-A pattern continued below its stated minimum
/// parameter; the constructor grammar has no name for it, so the graph
/// is built directly.
inline Graph realize_123_witness() {
    detail::EdgeBag bag;
    bag.clique(0, 2);  // a1,a2,a3
    bag.add(3, 4);     // b1-b2
    bag.add(0, 3);     // rungs
    bag.add(1, 4);
    for (int v = 0; v < 5; ++v) bag.add(v, 5);  // cone vertex c
    return Graph(6, bag.take(), {"a1", "a2", "a3", "b1", "b2", "c"});
}

/// Result of a realizability construction. `spec` is a constructor
/// expression when the grammar can name the witness; the (1,2,3) case is
/// a direct construction and leaves it empty.
struct RealizeResult {
    std::size_t a = 0, b = 0, c = 0;
    std::string spec;
    std::string case_label;
    Graph graph;
};

/// A graph with invariant triple exactly (a,b,c), for any a <= b <= c
/// with c = 1 or b > 1. Case dispatch uses engine-verified parameters
/// throughout; every deviation from the advertised table is listed in
/// CORRECTIONS.md. Inputs a = b = 1 with c > 1 are impossible (an
/// eternally 1-guardable graph is complete) and rejected.
inline RealizeResult realize(std::size_t a, std::size_t b, std::size_t c) {
    if (a < 1 || a > b || b > c)
        throw std::invalid_argument("realize: need 1 <= a <= b <= c");
    if (c != 1 && b == 1)
        throw std::invalid_argument(
            "realize: (1,1,c) with c>1 is unrealizable; eternal number 1 forces a complete graph");

    auto kcopies = [](std::size_t count) {  // disjoint union of count K1's
        std::string s = "complete:1";
        for (std::size_t i = 1; i < count; ++i) s = "disjoint(complete:1," + s + ")";
        return s;
    };
    auto from_spec = [&](std::string spec, std::string label) {
        Graph g = generate(spec);
        return RealizeResult{a, b, c, std::move(spec), std::move(label), std::move(g)};
    };

    if (c == 1) return from_spec("complete:1", "c=1: complete graph");
    if (a == 1 && b == 2) {
        if (c == 2) return from_spec("path:3", "a=1,b=2,c=2");
        if (c == 3)
            return RealizeResult{a, b, c, "", "a=1,b=2,c=3: direct cone witness",
                                 realize_123_witness()};
        return from_spec("A:" + std::to_string(c - 2), "a=1,b=2,c>3: family A");
    }
    if (a == 1)  // b >= 3
        return from_spec("C:" + std::to_string(b - 1) + "," + std::to_string(c - b + 1),
                         "a=1,b>2: family C");
    if (a == 2 && b == 2) {
        if (c == 2) return from_spec("path:4", "a=2,b=2,c=2");
        return from_spec("B:0," + std::to_string(c - 3), "a=2,b=2,c>2: family B (m=0)");
    }
    if (a == 2 && b == 3) {
        if (c == 3) return from_spec("kbip:2,3", "a=2,b=3,c=3");
        return from_spec("D:1," + std::to_string(c - 2), "a=2,b=3,c>3: family D");
    }
    if (a == 2) {  // b >= 4
        if (b == c) return from_spec("kbip:2," + std::to_string(b), "a=2,b>3,c=b");
        return from_spec("E:" + std::to_string(c - b) + "," + std::to_string(b - 3),
                         "a=2,b>3,c>b: family E");
    }
    // a >= 3
    if (b == a) {
        if (c == a) return from_spec(kcopies(a), "a=b=c>=3: edgeless graph");
        return from_spec("disjoint(B:0," + std::to_string(c - a - 1) + "," + kcopies(a - 2) + ")",
                         "a=b>=3,c>b: family B (m=0) plus isolated vertices");
    }
    if (b == a + 1)
        return from_spec("D:" + std::to_string(a - 1) + "," + std::to_string(c - a),
                         "a>=3,b=a+1: family D");
    return from_spec("F:" + std::to_string(a) + "," + std::to_string(b - a - 1) + "," +
                         std::to_string(c - b + 1),
                     "a>=3,b>=a+2: family F");
}

// ---------------------------------------------------------------------------
// Verification driver.
// ---------------------------------------------------------------------------

struct VerifyEntry {
    std::string spec;
    std::string source;
    std::size_t expected_gamma = 0, expected_eternal = 0, expected_autonomous = 0;
    std::size_t gamma = 0, eternal = 0, autonomous = 0;
    bool known = true;
    bool pass = false;
    double seconds = 0.0;
};

struct VerifyReport {
    std::vector<VerifyEntry> entries;
    std::size_t passed = 0, failed = 0, unknown = 0;
    bool all_pass() const { return failed == 0 && unknown == 0; }
};

/// Recomputes each entry's triple with the exact engine and compares.
/// Failures are report content, not errors; capped computations count as
/// unknown.
inline VerifyReport verify_entries(const std::vector<ExpectedTriple>& entries,
                                   const EngineLimits& limits = {}) {
    VerifyReport report;
    for (const auto& e : entries) {
        detail::Stopwatch sw;
        VerifyEntry row;
        row.spec = e.spec;
        row.source = e.source;
        row.expected_gamma = e.gamma;
        row.expected_eternal = e.eternal;
        row.expected_autonomous = e.autonomous;
        Graph g = generate(e.spec);
        try {
            row.gamma = domination_number(g, limits).value;
            auto ete = eternal_domination_number(g, limits);
            auto aut = autonomous_number(g, limits);
            row.known = ete.known && aut.known;
            row.eternal = ete.value;
            row.autonomous = aut.value;
        } catch (const CapExceeded&) {
            row.known = false;
        }
        row.seconds = sw.seconds();
        row.pass = row.known && row.gamma == e.gamma && row.eternal == e.eternal &&
                   row.autonomous == e.autonomous;
        if (!row.known)
            ++report.unknown;
        else if (row.pass)
            ++report.passed;
        else
            ++report.failed;
        report.entries.push_back(std::move(row));
    }
    return report;
}

struct RealizeVerifyEntry {
    std::size_t a = 0, b = 0, c = 0;
    std::string spec;
    std::string case_label;
    std::size_t gamma = 0, eternal = 0, autonomous = 0;
    bool known = true;
    bool pass = false;
};

/// Runs realize over every admissible (a,b,c) with c <= c_max and
/// verifies each constructed graph engine-exactly.
inline std::vector<RealizeVerifyEntry> verify_realizability(std::size_t c_max,
                                                            const EngineLimits& limits = {}) {
    std::vector<RealizeVerifyEntry> rows;
    for (std::size_t a = 1; a <= c_max; ++a)
        for (std::size_t b = a; b <= c_max; ++b)
            for (std::size_t c = b; c <= c_max; ++c) {
                if (!(c == 1 || b > 1)) continue;
                RealizeResult r = realize(a, b, c);
                RealizeVerifyEntry row;
                row.a = a;
                row.b = b;
                row.c = c;
                row.spec = r.spec;
                row.case_label = r.case_label;
                try {
                    row.gamma = domination_number(r.graph, limits).value;
                    row.eternal = eternal_domination_number(r.graph, limits).value;
                    row.autonomous = autonomous_number(r.graph, limits).value;
                } catch (const CapExceeded&) {
                    row.known = false;
                }
                row.pass = row.known && row.gamma == a && row.eternal == b && row.autonomous == c;
                rows.push_back(std::move(row));
            }
    return rows;
}

}  // namespace domlab
