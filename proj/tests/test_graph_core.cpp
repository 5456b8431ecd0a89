#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "domlab/graph_spec.hpp"
#include "domlab/io.hpp"
#include "oracles.hpp"

using namespace domlab;

namespace {

bool same_adjacency(const Graph& a, const Graph& b) {
    if (a.order() != b.order()) return false;
    for (std::size_t u = 0; u < a.order(); ++u)
        for (std::size_t v = 0; v < a.order(); ++v)
            if (u != v && a.has_edge(u, v) != b.has_edge(u, v)) return false;
    return true;
}

}  // namespace

TEST_CASE("graph constructor enforces the invariants") {
    CHECK_THROWS_AS(Graph(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 5}}), std::invalid_argument);
    Graph g(3, {{0, 1}, {1, 2}});
    CHECK(g.has_edge(1, 0));  // symmetric
    CHECK_FALSE(g.has_edge(0, 0));
}

TEST_CASE("elementary generators") {
    Graph p4 = generate("path:4");
    CHECK(p4.order() == 4);
    CHECK(p4.edge_count() == 3);
    Graph k1 = generate("complete:1");
    CHECK(k1.order() == 1);
    CHECK(k1.edge_count() == 0);
    CHECK(generate("star:4").order() == 5);
    CHECK(generate("kbip:2,3").edge_count() == 6);
    CHECK(generate("cycle:5").edge_count() == 5);
}

TEST_CASE("family A matches a direct enumeration of its edge rule") {
    Graph a2 = generate("A:2");
    REQUIRE(a2.order() == 10);
    // Independent reconstruction: blocks a1..a5 = 0..4, b1..b4 = 5..8, c = 9.
    const std::size_t n = 2;
    std::set<std::pair<int, int>> expect;
    auto add = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        expect.insert({u, v});
    };
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) add(i, j);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) add(5 + i, 5 + j);
    for (int i = 1; i <= 4; ++i) add(i - 1, 5 + i - 1);
    for (int i = 1; i <= (int)n; ++i)
        for (int j = 1; j <= 2 * (int)n - i; ++j) add(i - 1, 5 + j - 1);
    for (int v = 0; v < 9; ++v) add(v, 9);
    CHECK(a2.edge_count() == expect.size());
    for (auto [u, v] : expect) CHECK(a2.has_edge(u, v));
    CHECK(a2.label(0) == "a1");
    CHECK(a2.label(5) == "b1");
    CHECK(a2.label(9) == "c");
}

TEST_CASE("cartesian product") {
    Graph ladder = cartesian_product(generate("path:2"), generate("path:3"));
    CHECK(ladder.order() == 6);
    // Brute-force edge count from the product rule.
    Graph g = generate("path:2"), h = generate("path:3");
    std::size_t edges = 0;
    for (std::size_t u1 = 0; u1 < 2; ++u1)
        for (std::size_t v1 = 0; v1 < 3; ++v1)
            for (std::size_t u2 = 0; u2 < 2; ++u2)
                for (std::size_t v2 = 0; v2 < 3; ++v2) {
                    bool adj = (u1 == u2 && h.has_edge(v1, v2)) || (v1 == v2 && g.has_edge(u1, u2));
                    if (adj) ++edges;
                }
    CHECK(ladder.edge_count() == edges / 2);
    CHECK(ladder.edge_count() == 7);

    Graph c9 = generate("cart(complete:3,complete:3)");
    CHECK(c9.order() == 9);
    for (std::size_t v = 0; v < 9; ++v) CHECK(c9.degree(v) == 4);

    Graph same = generate("cart(complete:1,cycle:5)");
    CHECK(same_adjacency(same, generate("cycle:5")));

    CHECK(same_adjacency(generate("ladder:3"), generate("cart(path:2,path:3)")));
}

TEST_CASE("disjoint union") {
    Graph u = generate("disjoint(cycle:5,complete:3)");
    CHECK(u.order() == 8);
    CHECK(u.edge_count() == 8);
    CHECK(u.component_count() == 2);
    CHECK_THROWS_AS(generate("disjoint(path:0,path:2)"), SpecError);
    Graph v = generate("disjoint(path:3,path:4)");
    CHECK(v.order() == 7);
    CHECK(v.edge_count() == 5);
    // degrees preserved per operand
    CHECK(v.degree(0) == 1);
    CHECK(v.degree(1) == 2);
    CHECK(v.degree(3) == 1);
}

TEST_CASE("edge addition") {
    Graph bridge = add_edge(generate("c5k3"), 0, 5);
    CHECK(same_adjacency(bridge, generate("c5k3+bridge")));
    Graph tri = add_edge(generate("path:3"), 0, 2);
    CHECK(same_adjacency(tri, generate("complete:3")));
    Graph p4 = generate("path:4");
    CHECK_THROWS_AS(add_edge(p4, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(add_edge(p4, 2, 2), std::invalid_argument);
    CHECK(p4.edge_count() == 3);  // original untouched by with_edge
}

TEST_CASE("structural quantities") {
    Graph p4 = generate("path:4");
    CHECK(p4.min_degree() == 1);
    CHECK(p4.order() == 4);
    CHECK(independence_number(generate("cycle:6")) == 3);
    CHECK(independence_number(generate("cycle:6")) ==
          oracles::independence_number(generate("cycle:6")));
    CHECK_FALSE(generate("disjoint(path:2,path:2)").is_connected());
    CHECK(generate("house9").is_connected());
}

TEST_CASE("independence number agrees with subset search on assorted graphs") {
    for (const char* spec : {"path:7", "cycle:8", "paw2", "intro6", "house+diag", "kbip:2,4"}) {
        Graph g = generate(spec);
        CHECK(independence_number(g) == oracles::independence_number(g));
    }
}

TEST_CASE("canonical hash") {
    CHECK(canonical_hash(generate("path:4")) == canonical_hash(generate("path:4")));
    CHECK(canonical_hash(generate("path:4")) != canonical_hash(generate("cycle:4")));
    Graph g = generate("house9");
    Graph round = parse_edge_list(write_edge_list(g));
    CHECK(canonical_hash(g) == canonical_hash(round));
}

TEST_CASE("edge list io") {
    Graph p5 = generate("path:5");
    Graph round = parse_edge_list(write_edge_list(p5));
    CHECK(round.order() == 5);
    CHECK(round.edge_count() == 4);

    Graph sparse = parse_edge_list("3 1\n0 1\n");
    CHECK(sparse.order() == 3);
    CHECK(sparse.edge_count() == 1);
    CHECK(sparse.degree(2) == 0);

    CHECK_THROWS_WITH(parse_edge_list("2 1\n0 0\n"), Catch::Matchers::ContainsSubstring("self-loop"));
    CHECK_THROWS_WITH(parse_edge_list("2 2\n0 1\n0 1\n"),
                      Catch::Matchers::ContainsSubstring("duplicate"));
    CHECK_THROWS_AS(parse_edge_list("2 5\n0 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list(""), std::invalid_argument);
    // comments and blank lines are fine
    Graph commented = parse_edge_list("# header\n3 2\n0 1  # chain\n\n1 2\n");
    CHECK(commented.edge_count() == 2);
}

TEST_CASE("dot export highlights the requested set") {
    Graph p3 = generate("path:3");
    std::string dot = to_dot(p3, VertexSet::of(3, {1}));
    CHECK(dot.find("graph G {") != std::string::npos);
    CHECK(dot.find("1 [label=\"a2\", style=filled") != std::string::npos);
    CHECK(dot.find("0 -- 1;") != std::string::npos);
}

TEST_CASE("spec grammar") {
    CHECK(canonical_spec(" cart( path:2 , path:3 ) ") == "cart(path:2,path:3)");
    CHECK(generate("house+diag").edge_count() == generate("house").edge_count() + 1);
    CHECK_THROWS_AS(generate("A:1"), SpecError);      // family minimum n >= 2
    CHECK_THROWS_AS(generate("C:1,2"), SpecError);    // family minimum m >= 2
    CHECK_THROWS_AS(generate("cycle:2"), SpecError);
    CHECK_THROWS_AS(generate("nonsense:3"), SpecError);
    CHECK_THROWS_AS(generate("path:4 trailing"), SpecError);
    CHECK_THROWS_AS(generate("kbip:3"), SpecError);   // arity
    CHECK_THROWS_AS(generate("file:/no/such/file"), std::invalid_argument);
}

TEST_CASE("generation is deterministic") {
    Graph a = generate("B:1,2");
    Graph b = generate("B:1,2");
    CHECK(canonical_hash(a) == canonical_hash(b));
    CHECK(write_edge_list(a) == write_edge_list(b));
}

TEST_CASE("catalog generators satisfy the graph invariants") {
    for (const char* spec :
         {"house", "house+diag", "house9", "paw2", "intro6", "c5k3", "c5k3+bridge", "A:2", "B:1,1",
          "C:2,2", "D:2,2", "E:2,2", "F:2,1,2", "ladder:4", "kbip:3,4", "star:5"}) {
        Graph g = generate(spec);
        for (std::size_t u = 0; u < g.order(); ++u) {
            CHECK_FALSE(g.has_edge(u, u));
            for (std::size_t v = 0; v < g.order(); ++v)
                CHECK(g.has_edge(u, v) == g.has_edge(v, u));
        }
    }
}

TEST_CASE("labels resolve by name") {
    Graph h9 = generate("house9");
    CHECK(h9.vertex_named("b5") == 8);
    CHECK(h9.vertex_named("a1") == 0);
    CHECK_FALSE(h9.vertex_named("z9").has_value());
    CHECK(h9.set_to_string(VertexSet::of(9, {4, 2, 3})) == "{a3,a4,b1}");
}
