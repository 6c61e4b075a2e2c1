#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "kcycles/graph.hpp"

namespace kcycles {

/// The feasible neighborhood of a start vertex s: the subgraph induced
/// by vertices v >= s whose BFS distance from s (using only vertices
/// >= s) is at most k-1, re-indexed with local IDs in BFS discovery
/// order. Local 0 is always s. Holds every edge of the base graph whose
/// endpoints are both members.
struct BoundedSubgraph {
    int32_t root = -1;                     // global dense index of s
    std::vector<int32_t> global_of_local;  // local -> global, [0] == root
    std::vector<int64_t> offsets;          // CSR over local indices
    std::vector<int32_t> targets;          // local indices

    // Filled by bounded_subgraph(); builders on the hot path skip it
    // and keep their own stamp table instead.
    std::unordered_map<int32_t, int32_t> local_by_global;

    int32_t size() const { return static_cast<int32_t>(global_of_local.size()); }
    int64_t edge_count() const { return static_cast<int64_t>(targets.size()); }

    std::span<const int32_t> out_neighbors(int32_t local) const {
        return {targets.data() + offsets[local],
                targets.data() + offsets[local + 1]};
    }
};

/// Reusable scratch space for extracting one bounded subgraph after
/// another from the same base graph. Not thread-safe; each worker owns
/// one.
class SubgraphBuilder {
public:
    /// Overwrites `out` with the subgraph for (g, s, k). Vertices below
    /// s are filtered during the BFS itself; the {s..n}-induced graph is
    /// never materialized. `with_lookup` also fills out.local_by_global.
    void build(const Graph& g, int32_t s, int k, BoundedSubgraph& out,
               bool with_lookup = false);

private:
    std::vector<int32_t> local_of_global_;
    std::vector<uint32_t> stamp_;
    uint32_t token_ = 0;
};

/// Pure-function form: fresh scratch, lookup map included.
BoundedSubgraph bounded_subgraph(const Graph& g, int32_t s, int k);

}  // namespace kcycles
