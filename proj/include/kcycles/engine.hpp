#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "kcycles/bounded_subgraph.hpp"
#include "kcycles/cycle_sink.hpp"
#include "kcycles/graph.hpp"

namespace kcycles {

/// Returned by cycle_search when no cycle completes through the
/// current vertex. Arithmetic on it saturates: one plus no-cycle is
/// still no-cycle.
inline constexpr int32_t kNoCycle = std::numeric_limits<int32_t>::max();

/// Mutable state of one rooted search, in local subgraph indices.
///
/// lock[v] is one plus the longest prefix length from the root that
/// could still close a cycle of at most k edges through v; a path may
/// enter v only while its forward length is strictly below lock[v].
/// Any value >= k acts as unset; reset() uses k + 1.
///
/// blist_items[w] holds the already-visited sources v of edges (v, w),
/// recorded when the visit to v closes; entries are never removed.
/// blist_edge flags the same membership per CSR edge slot of the
/// subgraph, giving O(1) duplicate suppression.
struct SearchState {
    std::vector<int32_t> stack;
    std::vector<uint8_t> on_stack;
    std::vector<int32_t> lock;
    std::vector<std::vector<int32_t>> blist_items;
    std::vector<uint8_t> blist_edge;
    int32_t k = 0;
    int32_t lock_inf = 0;

    /// Sizes the arrays for `gs` and restores the pristine state:
    /// empty stack, lock = k + 1 everywhere, empty blists.
    void reset(const BoundedSubgraph& gs, int k_bound);
};

/// Optional per-entry instrumentation, used by tests to validate the
/// visit bound. Serial runs only.
class SearchProbe {
public:
    virtual ~SearchProbe() = default;
    virtual void begin_search(int32_t root_global, int32_t local_count) = 0;
    virtual void on_enter(int32_t local_v) = 0;
    virtual void on_cycle_found() = 0;
};

/// Emission plumbing for one rooted search. counts is mandatory;
/// when sink is set, graph must be too, and emitted stacks are mapped
/// local -> global -> external ID through `gs` and `graph`.
struct EmitContext {
    CycleCounts* counts = nullptr;
    CycleSink* sink = nullptr;
    const Graph* graph = nullptr;
    SearchProbe* probe = nullptr;
    std::vector<uint64_t> scratch;
};

/// Recursive search for all simple cycles through the root (local 0)
/// whose next vertex is v, entered with forward path length flen.
/// Returns the length of the shortest v-to-root completion found, or
/// kNoCycle. On success locks along the blist trails are relaxed;
/// either way v is appended to the blist of each out-neighbor before
/// the visit closes.
int32_t cycle_search(const BoundedSubgraph& gs, int32_t v, int32_t k,
                     int32_t flen, SearchState& state, EmitContext& emit);

/// Raises lock[u] to k - blen + 1 when that is an increase, then
/// recurses through u's blist entries that are off the stack with
/// blen + 1. No-op otherwise. blen >= 1.
void relax_locks(int32_t u, int32_t k, int32_t blen, SearchState& state);

/// Runs one rooted search: builds the bounded subgraph for s, resets
/// the state arrays, and searches. Every emitted cycle has s as its
/// smallest dense index. Cycles reach the sink in original external
/// IDs.
CycleCounts search_from(const Graph& g, int32_t s, int k,
                        CycleSink* sink = nullptr, SearchProbe* probe = nullptr);

/// Enumerates every simple cycle of length <= k exactly once, as the
/// disjoint union of rooted searches over all start vertices. With
/// parallelism > 1, pending roots are handed to workers dynamically
/// (per-root work is highly skewed) and per-task results merged; the
/// histogram is independent of the task count and schedule.
CycleCounts lc_cycles(const Graph& g, int k, CycleSink* sink = nullptr,
                      int parallelism = 1, SearchProbe* probe = nullptr);

}  // namespace kcycles
