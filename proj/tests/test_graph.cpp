#include "kcycles/graph.hpp"

#include <doctest.h>

#include <random>
#include <set>

#include "test_util.hpp"

using namespace kcycles;
using namespace kcycles::test;

namespace {

/// Edge set in external IDs, read back out of a built graph.
std::set<std::pair<uint64_t, uint64_t>> external_edges(const Graph& g) {
    std::set<std::pair<uint64_t, uint64_t>> out;
    for (int32_t v = 0; v < g.vertex_count(); ++v)
        for (int32_t w : g.out_neighbors(v))
            out.insert({g.external_id(v), g.external_id(w)});
    return out;
}

std::set<std::pair<uint64_t, uint64_t>> deduped(
    const std::vector<std::pair<uint64_t, uint64_t>>& pairs) {
    return {pairs.begin(), pairs.end()};
}

}  // namespace

TEST_CASE("compacts IDs and drops duplicate edges") {
    const Graph g = graph_from({{10, 20}, {20, 10}, {10, 20}});
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 2);
    CHECK(external_edges(g) ==
          std::set<std::pair<uint64_t, uint64_t>>{{10, 20}, {20, 10}});
}

TEST_CASE("triangle stats") {
    const Graph g = graph_from({{1, 2}, {2, 3}, {3, 1}});
    const GraphStats s = graph_stats(g);
    CHECK(s.n == 3);
    CHECK(s.e == 3);
    CHECK(s.d == doctest::Approx(1.0));
    CHECK(s.sigma_d == doctest::Approx(0.0));
}

TEST_CASE("degree-descending ordering puts the busiest vertex first") {
    // Total (in + out) degrees: a=7 gets 5, b=8 gets 2, c=9 gets 7.
    std::vector<std::pair<uint64_t, uint64_t>> pairs = {
        {7, 9}, {7, 9},  // duplicate: counted once
        {7, 8}, {9, 7}, {9, 8}, {9, 7},  // another duplicate
    };
    // Unique edges: 7->9, 7->8, 9->7, 9->8. Totals: 7: 3, 8: 2, 9: 3.
    // Tie between 7 and 9 breaks toward the smaller external ID.
    const auto [g, ordering] =
        build_graph(edge_list_from(pairs), OrderingPolicy::degree_descending);
    CHECK(g.external_id(0) == 7);
    CHECK(g.external_id(1) == 9);
    CHECK(g.external_id(2) == 8);
}

TEST_CASE("perm and inv are inverse permutations") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        const EdgeList edges = random_digraph(rng, 10, 0.3);
        for (OrderingPolicy policy :
             {OrderingPolicy::degree_descending,
              OrderingPolicy::degree_ascending, OrderingPolicy::none}) {
            const auto [g, ordering] = build_graph(edges, policy);
            const int32_t n = g.vertex_count();
            REQUIRE(static_cast<int32_t>(ordering.perm.size()) == n);
            REQUIRE(static_cast<int32_t>(ordering.inv.size()) == n);
            for (int32_t i = 0; i < n; ++i) {
                REQUIRE(ordering.inv[ordering.perm[i]] == i);
                REQUIRE(ordering.perm[ordering.inv[i]] == i);
            }
        }
    }
}

TEST_CASE("ordering policies preserve the external edge set") {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::pair<uint64_t, uint64_t>> pairs;
        const EdgeList edges = random_digraph(rng, 9, 0.25);
        for (const Edge& e : edges.edges) pairs.emplace_back(e.src, e.dst);
        const auto want = deduped(pairs);
        for (OrderingPolicy policy :
             {OrderingPolicy::degree_descending,
              OrderingPolicy::degree_ascending, OrderingPolicy::none}) {
            const Graph g = graph_from(edges, policy);
            REQUIRE(external_edges(g) == want);
        }
    }
}

TEST_CASE("degree-descending assigns monotonically nonincreasing totals") {
    std::mt19937 rng(555);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = graph_from(random_digraph(rng, 12, 0.3),
                                   OrderingPolicy::degree_descending);
        const int32_t n = g.vertex_count();
        std::vector<int64_t> total(n, 0);
        for (int32_t v = 0; v < n; ++v)
            for (int32_t w : g.out_neighbors(v)) {
                ++total[v];
                ++total[w];
            }
        for (int32_t v = 1; v < n; ++v) REQUIRE(total[v - 1] >= total[v]);
    }
}

TEST_CASE("adjacency lists are sorted and duplicate-free") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = graph_from(random_digraph(rng, 11, 0.4),
                                   OrderingPolicy::degree_descending);
        for (int32_t v = 0; v < g.vertex_count(); ++v) {
            const auto nbrs = g.out_neighbors(v);
            for (size_t i = 1; i < nbrs.size(); ++i)
                REQUIRE(nbrs[i - 1] < nbrs[i]);
        }
    }
}

TEST_CASE("none ordering keeps ascending external IDs") {
    const Graph g = graph_from({{30, 10}, {10, 20}, {20, 30}});
    CHECK(g.external_id(0) == 10);
    CHECK(g.external_id(1) == 20);
    CHECK(g.external_id(2) == 30);
}
