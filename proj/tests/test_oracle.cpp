#include "kcycles/oracle.hpp"

#include <doctest.h>

#include <random>

#include "test_util.hpp"

using namespace kcycles;
using namespace kcycles::test;

TEST_CASE("canonical_cycle rotates the smallest ID to the front") {
    CHECK(canonical_cycle({3, 1, 2}) == Cycle{1, 2, 3});
    CHECK(canonical_cycle({1, 2, 3}) == Cycle{1, 2, 3});
    CHECK(canonical_cycle({2, 3, 1}) == Cycle{1, 2, 3});
    CHECK(canonical_cycle({5}) == Cycle{5});
    // Direction is preserved: these are different cycles.
    CHECK(canonical_cycle({3, 2, 1}) == Cycle{1, 3, 2});
}

TEST_CASE("brute force: triangle") {
    const Graph g = graph_from({{1, 2}, {2, 3}, {3, 1}});
    const OracleResult r = brute_force_cycles(g, 3);
    CHECK(r.cycles == std::set<Cycle>{{1, 2, 3}});
    CHECK(r.total() == 1);
}

TEST_CASE("brute force: complete digraph K4 counts") {
    const Graph g = graph_from(complete_digraph(4));
    const OracleResult r = brute_force_cycles(g, 4);
    CHECK(r.per_length == std::map<int, uint64_t>{{2, 6}, {3, 8}, {4, 6}});
}

TEST_CASE("brute force: chain DAG has no cycles") {
    const Graph g = graph_from({{1, 2}, {2, 3}, {3, 4}});
    for (int k = 1; k <= 5; ++k)
        CHECK(brute_force_cycles(g, k).cycles.empty());
}

TEST_CASE("brute force: self-loop is a length-1 cycle") {
    const Graph g = graph_from({{7, 7}, {7, 8}});
    const OracleResult r = brute_force_cycles(g, 1);
    CHECK(r.cycles == std::set<Cycle>{{7}});
}

TEST_CASE("johnson: two-cycle under the length filter") {
    const Graph g = graph_from({{1, 2}, {2, 1}});
    CHECK(johnson_cycles(g, 1).cycles.empty());
    CHECK(johnson_cycles(g, 2).cycles == std::set<Cycle>{{1, 2}});
}

TEST_CASE("johnson: K4 unlimited finds all 20 cycles") {
    const Graph g = graph_from(complete_digraph(4));
    const OracleResult r = johnson_cycles(g);
    CHECK(r.total() == 20);
    CHECK(r.per_length == std::map<int, uint64_t>{{2, 6}, {3, 8}, {4, 6}});
}

TEST_CASE("johnson: self-loops and isolated components") {
    const Graph g = graph_from({{1, 1}, {2, 3}, {3, 2}, {4, 5}});
    const OracleResult r = johnson_cycles(g);
    CHECK(r.cycles == std::set<Cycle>{{1}, {2, 3}});
}

TEST_CASE("oracles agree on random digraphs") {
    std::mt19937 rng(7151);
    std::uniform_int_distribution<int> size(3, 12);
    std::uniform_real_distribution<double> prob(0.05, 0.5);
    for (int trial = 0; trial < 60; ++trial) {
        const EdgeList edges = random_digraph(rng, size(rng), prob(rng));
        const auto [g, ordering] = build_graph(edges, OrderingPolicy::none);
        const OracleResult unlimited = johnson_cycles(g);
        for (int k = 1; k <= 6; ++k) {
            const OracleResult brute = brute_force_cycles(g, k);
            const OracleResult filtered = johnson_cycles(g, k);
            REQUIRE(brute.cycles == filtered.cycles);
            REQUIRE(brute.per_length == filtered.per_length);
        }
        // Unlimited johnson agrees with a brute force run at k = n
        // (no simple cycle can be longer than the vertex count).
        const OracleResult brute_all = brute_force_cycles(g, g.vertex_count());
        REQUIRE(unlimited.cycles == brute_all.cycles);
    }
}
