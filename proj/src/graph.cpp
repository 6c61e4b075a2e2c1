#include "kcycles/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace kcycles {

std::pair<Graph, VertexOrdering> build_graph(const EdgeList& input,
                                             OrderingPolicy policy) {
    if (input.edges.empty())
        throw std::invalid_argument("build_graph: empty edge list");

    // Canonical compaction: unique external IDs, ascending.
    std::vector<uint64_t> ids;
    ids.reserve(input.edges.size() * 2);
    for (const Edge& edge : input.edges) {
        ids.push_back(edge.src);
        ids.push_back(edge.dst);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    const int32_t n = static_cast<int32_t>(ids.size());

    auto old_index = [&](uint64_t id) {
        return static_cast<int32_t>(
            std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
    };

    std::vector<std::pair<int32_t, int32_t>> edges;
    edges.reserve(input.edges.size());
    for (const Edge& edge : input.edges)
        edges.emplace_back(old_index(edge.src), old_index(edge.dst));
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    // Total degree (in + out) over the deduplicated edges.
    std::vector<int64_t> total_degree(n, 0);
    for (auto [u, v] : edges) {
        ++total_degree[u];
        ++total_degree[v];
    }

    VertexOrdering ordering;
    ordering.policy = policy;
    ordering.inv.resize(n);
    std::iota(ordering.inv.begin(), ordering.inv.end(), 0);
    if (policy == OrderingPolicy::degree_descending) {
        std::stable_sort(ordering.inv.begin(), ordering.inv.end(),
                         [&](int32_t a, int32_t b) {
                             return total_degree[a] > total_degree[b];
                         });
    } else if (policy == OrderingPolicy::degree_ascending) {
        std::stable_sort(ordering.inv.begin(), ordering.inv.end(),
                         [&](int32_t a, int32_t b) {
                             return total_degree[a] < total_degree[b];
                         });
    }
    ordering.perm.resize(n);
    for (int32_t i = 0; i < n; ++i) ordering.perm[ordering.inv[i]] = i;

    for (auto& [u, v] : edges) {
        u = ordering.perm[u];
        v = ordering.perm[v];
    }
    std::sort(edges.begin(), edges.end());

    std::vector<int64_t> offsets(n + 1, 0);
    std::vector<int32_t> targets(edges.size());
    for (auto [u, v] : edges) ++offsets[u + 1];
    for (int32_t v = 0; v < n; ++v) offsets[v + 1] += offsets[v];
    for (size_t i = 0; i < edges.size(); ++i) targets[i] = edges[i].second;

    std::vector<uint64_t> external_ids(n);
    for (int32_t i = 0; i < n; ++i) external_ids[i] = ids[ordering.inv[i]];

    return {Graph(std::move(offsets), std::move(targets), std::move(external_ids)),
            std::move(ordering)};
}

GraphStats graph_stats(const Graph& g) {
    GraphStats s;
    s.n = g.vertex_count();
    s.e = g.edge_count();
    s.d = g.avg_out_degree();
    double sq = 0.0;
    for (int32_t v = 0; v < g.vertex_count(); ++v) {
        double diff = g.out_degree(v) - s.d;
        sq += diff * diff;
    }
    s.sigma_d = s.n == 0 ? 0.0 : std::sqrt(sq / static_cast<double>(s.n));
    return s;
}

}  // namespace kcycles
