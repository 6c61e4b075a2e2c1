#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "kcycles/cycle_sink.hpp"
#include "kcycles/graph.hpp"

namespace kcycles {

/// Rotates a cycle so its smallest vertex ID leads. Direction is
/// preserved (directed cycles are never reversed).
Cycle canonical_cycle(const Cycle& c);

/// Reference enumeration result: cycles as canonical sequences in
/// external IDs. Set semantics make duplicates impossible.
struct OracleResult {
    std::set<Cycle> cycles;
    std::map<int, uint64_t> per_length;

    void insert(const Cycle& c);
    uint64_t total() const;
};

/// Exhaustive bounded-depth backtracking over simple paths, no pruning
/// beyond the simple-path and depth checks. Intended for small graphs.
OracleResult brute_force_cycles(const Graph& g, int k);

/// All-cycles enumeration by blocked backtracking over per-root
/// strongly connected components, with recursive unblocking after a
/// success. Cycles longer than max_len are discarded at emission;
/// nullopt enumerates everything. Intended for small graphs.
OracleResult johnson_cycles(const Graph& g,
                            std::optional<int> max_len = std::nullopt);

}  // namespace kcycles
