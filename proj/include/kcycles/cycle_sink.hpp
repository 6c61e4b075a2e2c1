#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

namespace kcycles {

/// A simple cycle as an ordered vertex sequence in original external
/// IDs, first element the member with the smallest dense index. The
/// length of the cycle (edge count) equals the vertex count.
using Cycle = std::vector<uint64_t>;

/// Receives every enumerated cycle. Implementations must not mutate
/// engine state. In parallel runs the engine buffers per task and
/// flushes one task at a time, so on_cycle never runs concurrently
/// with itself.
class CycleSink {
public:
    virtual ~CycleSink() = default;
    virtual void on_cycle(std::span<const uint64_t> vertices) = 0;
};

/// Histogram of cycle counts by length plus the wall time spent
/// producing them.
struct CycleCounts {
    std::vector<uint64_t> per_length;  // index = length in edges; [0] unused
    double elapsed_seconds = 0.0;

    explicit CycleCounts(int k = 0) : per_length(static_cast<size_t>(k) + 1, 0) {}

    uint64_t total() const {
        return std::accumulate(per_length.begin(), per_length.end(), uint64_t{0});
    }

    uint64_t total_at_least(int min_len) const {
        uint64_t c = 0;
        for (size_t len = static_cast<size_t>(min_len); len < per_length.size(); ++len)
            c += per_length[len];
        return c;
    }

    void merge(const CycleCounts& other) {
        if (other.per_length.size() > per_length.size())
            per_length.resize(other.per_length.size(), 0);
        for (size_t i = 0; i < other.per_length.size(); ++i)
            per_length[i] += other.per_length[i];
    }
};

}  // namespace kcycles
