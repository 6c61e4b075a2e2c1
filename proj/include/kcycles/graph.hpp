#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "kcycles/edge_list.hpp"

namespace kcycles {

enum class OrderingPolicy {
    degree_descending,  // densest vertex gets index 0 (the default)
    degree_ascending,   // sparsest vertex gets index 0
    none,               // indices follow ascending external ID
};

/// Bijection between the canonical compaction (unique external IDs in
/// ascending order) and the final dense numbering of a Graph.
struct VertexOrdering {
    std::vector<int32_t> perm;  // old index -> new index
    std::vector<int32_t> inv;   // new index -> old index
    OrderingPolicy policy = OrderingPolicy::none;
};

/// Immutable directed graph in CSR form over dense vertex indices
/// [0, n). Adjacency lists are sorted ascending and deduplicated;
/// self-loops are kept.
class Graph {
public:
    Graph() = default;
    Graph(std::vector<int64_t> offsets, std::vector<int32_t> targets,
          std::vector<uint64_t> external_ids)
        : offsets_(std::move(offsets)),
          targets_(std::move(targets)),
          external_ids_(std::move(external_ids)) {}

    int32_t vertex_count() const { return static_cast<int32_t>(offsets_.size()) - 1; }
    int64_t edge_count() const { return static_cast<int64_t>(targets_.size()); }

    /// Average out-degree e/n.
    double avg_out_degree() const {
        return vertex_count() == 0 ? 0.0
                                   : static_cast<double>(edge_count()) / vertex_count();
    }

    std::span<const int32_t> out_neighbors(int32_t v) const {
        return {targets_.data() + offsets_[v],
                targets_.data() + offsets_[v + 1]};
    }
    int32_t out_degree(int32_t v) const {
        return static_cast<int32_t>(offsets_[v + 1] - offsets_[v]);
    }

    uint64_t external_id(int32_t v) const { return external_ids_[v]; }
    const std::vector<uint64_t>& external_ids() const { return external_ids_; }

private:
    std::vector<int64_t> offsets_;
    std::vector<int32_t> targets_;
    std::vector<uint64_t> external_ids_;
};

/// Compacts external IDs to dense indices, removes duplicate edges
/// (self-loops are kept), and renumbers per the ordering policy.
/// Under degree ordering, ties break toward the ascending external ID.
/// The edge list must be nonempty.
std::pair<Graph, VertexOrdering> build_graph(const EdgeList& edges,
                                             OrderingPolicy policy);

struct GraphStats {
    int64_t n = 0;
    int64_t e = 0;
    double d = 0.0;        // average out-degree e/n
    double sigma_d = 0.0;  // population stddev of out-degrees
};

GraphStats graph_stats(const Graph& g);

}  // namespace kcycles
