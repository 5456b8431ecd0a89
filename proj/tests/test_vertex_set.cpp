#include <catch2/catch_amalgamated.hpp>

#include "domlab/vertex_set.hpp"

using domlab::VertexSet;

TEST_CASE("basic set operations") {
    VertexSet s(70);
    REQUIRE(s.empty());
    s.set(0);
    s.set(65);
    s.set(33);
    CHECK(s.count() == 3);
    CHECK(s.test(65));
    CHECK_FALSE(s.test(64));
    s.reset(33);
    CHECK(s.count() == 2);
    CHECK(s.to_vector() == std::vector<int>{0, 65});
}

TEST_CASE("union intersection difference complement") {
    auto a = VertexSet::of(10, {1, 3, 5});
    auto b = VertexSet::of(10, {3, 4});
    CHECK((a | b).to_vector() == std::vector<int>{1, 3, 4, 5});
    CHECK((a & b).to_vector() == std::vector<int>{3});
    CHECK((a - b).to_vector() == std::vector<int>{1, 5});
    CHECK((a ^ b).to_vector() == std::vector<int>{1, 4, 5});
    CHECK(a.complement().count() == 7);
    CHECK((a.complement() | a) == VertexSet::full(10));
    CHECK(a.contains(VertexSet::of(10, {1, 5})));
    CHECK_FALSE(a.contains(b));
    CHECK(a.intersects(b));
    CHECK_FALSE(a.intersects(VertexSet::of(10, {0, 2})));
}

TEST_CASE("iteration spans word boundaries") {
    auto s = VertexSet::of(130, {0, 63, 64, 127, 129});
    std::vector<int> got;
    for (int v = s.first(); v >= 0; v = s.next(v)) got.push_back(v);
    CHECK(got == std::vector<int>{0, 63, 64, 127, 129});
}

TEST_CASE("colex order is numeric order of the bit pattern") {
    auto lo = VertexSet::of(6, {1, 2});   // value 6
    auto hi = VertexSet::of(6, {0, 3});   // value 9
    CHECK(lo < hi);
    CHECK_FALSE(hi < lo);
    CHECK_FALSE(lo < lo);
}

TEST_CASE("width mismatches and out-of-range bits are rejected") {
    VertexSet a(5), b(6);
    CHECK_THROWS_AS(a |= b, std::invalid_argument);
    CHECK_THROWS_AS(a.set(5), std::out_of_range);
    CHECK_THROWS_AS(a.test(99), std::out_of_range);
}

TEST_CASE("hash distinguishes width") {
    VertexSet a(64), b(65);
    CHECK(a.hash() != b.hash());
    CHECK(VertexSet::of(9, {2, 4}).hash() == VertexSet::of(9, {2, 4}).hash());
}
