#include "kcycles/bounded_subgraph.hpp"

#include <algorithm>

namespace kcycles {

void SubgraphBuilder::build(const Graph& g, int32_t s, int k,
                            BoundedSubgraph& out, bool with_lookup) {
    const size_t n = static_cast<size_t>(g.vertex_count());
    if (local_of_global_.size() < n) {
        local_of_global_.assign(n, -1);
        stamp_.assign(n, 0);
        token_ = 0;
    }
    if (++token_ == 0) {  // wrapped; invalidate all stamps
        std::fill(stamp_.begin(), stamp_.end(), 0);
        token_ = 1;
    }

    out.root = s;
    out.global_of_local.clear();
    out.offsets.clear();
    out.targets.clear();
    out.local_by_global.clear();

    auto discover = [&](int32_t v) {
        stamp_[v] = token_;
        local_of_global_[v] = static_cast<int32_t>(out.global_of_local.size());
        out.global_of_local.push_back(v);
    };

    // BFS over vertices >= s, levels 0..k-1. Frontiers are contiguous
    // windows of global_of_local.
    discover(s);
    size_t level_begin = 0;
    for (int level = 0; level < k - 1 && level_begin < out.global_of_local.size();
         ++level) {
        size_t level_end = out.global_of_local.size();
        for (size_t i = level_begin; i < level_end; ++i) {
            for (int32_t w : g.out_neighbors(out.global_of_local[i])) {
                if (w < s || stamp_[w] == token_) continue;
                discover(w);
            }
        }
        level_begin = level_end;
    }

    // Second pass: every edge of G between members, in local indices.
    out.offsets.reserve(out.global_of_local.size() + 1);
    out.offsets.push_back(0);
    for (int32_t v : out.global_of_local) {
        for (int32_t w : g.out_neighbors(v)) {
            if (w >= s && stamp_[w] == token_)
                out.targets.push_back(local_of_global_[w]);
        }
        out.offsets.push_back(static_cast<int64_t>(out.targets.size()));
    }

    if (with_lookup) {
        out.local_by_global.reserve(out.global_of_local.size());
        for (int32_t local = 0; local < out.size(); ++local)
            out.local_by_global.emplace(out.global_of_local[local], local);
    }
}

BoundedSubgraph bounded_subgraph(const Graph& g, int32_t s, int k) {
    SubgraphBuilder builder;
    BoundedSubgraph out;
    builder.build(g, s, k, out, /*with_lookup=*/true);
    return out;
}

}  // namespace kcycles
