#include "kcycles/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <chrono>
#include <mutex>
#include <thread>

namespace kcycles {

void SearchState::reset(const BoundedSubgraph& gs, int k_bound) {
    k = k_bound;
    lock_inf = k_bound + 1;
    const size_t nv = gs.global_of_local.size();
    stack.clear();
    on_stack.assign(nv, 0);
    lock.assign(nv, lock_inf);
    if (blist_items.size() < nv) blist_items.resize(nv);
    for (size_t v = 0; v < nv; ++v) blist_items[v].clear();
    blist_edge.assign(gs.targets.size(), 0);
}

namespace {

void emit_cycle(const BoundedSubgraph& gs, SearchState& state,
                EmitContext& emit, int32_t length) {
    ++emit.counts->per_length[length];
    if (emit.probe) emit.probe->on_cycle_found();
    if (emit.sink) {
        emit.scratch.clear();
        for (int32_t local : state.stack)
            emit.scratch.push_back(
                emit.graph->external_id(gs.global_of_local[local]));
        emit.sink->on_cycle(emit.scratch);
    }
}

}  // namespace

void relax_locks(int32_t u, int32_t k, int32_t blen, SearchState& state) {
    assert(blen >= 1);
    const int32_t target = k - blen + 1;
    if (state.lock[u] >= target) return;
    state.lock[u] = target;
    for (int32_t w : state.blist_items[u])
        if (!state.on_stack[w]) relax_locks(w, k, blen + 1, state);
}

int32_t cycle_search(const BoundedSubgraph& gs, int32_t v, int32_t k,
                     int32_t flen, SearchState& state, EmitContext& emit) {
    assert(flen < k);
    assert(flen < state.lock[v]);
    assert(!state.on_stack[v]);
    if (emit.probe) emit.probe->on_enter(v);

    int32_t blen = kNoCycle;
    state.lock[v] = flen;
    state.on_stack[v] = 1;
    state.stack.push_back(v);

    for (int32_t w : gs.out_neighbors(v)) {
        if (w == 0) {  // local 0 is the root; the stack closes into a cycle
            emit_cycle(gs, state, emit, flen + 1);
            blen = 1;
        } else if (flen + 1 < state.lock[w] && flen + 1 < k) {
            int32_t child = cycle_search(gs, w, k, flen + 1, state, emit);
            if (child != kNoCycle) blen = std::min(blen, child + 1);
        }
    }

    if (blen != kNoCycle) relax_locks(v, k, blen, state);

    // Leave a backward trail on every close, successful or not: v joins
    // the blist of each out-neighbor. A success must be recorded too.
    // The completion found under this stack can be longer than the true
    // shortest one when part of the short route sits on the stack, so
    // lock[v] may be left too low; a later lock increase at a neighbor w
    // must then be able to propagate to v across the edge (v, w).
    // Failure-only trails would end that propagation here for good and
    // cycles re-entering v would be lost.
    for (int64_t e = gs.offsets[v]; e < gs.offsets[v + 1]; ++e) {
        if (!state.blist_edge[e]) {
            state.blist_edge[e] = 1;
            state.blist_items[gs.targets[e]].push_back(v);
        }
    }

    state.stack.pop_back();
    state.on_stack[v] = 0;
    return blen;
}

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

// Runs the rooted search for one s with caller-owned scratch. The
// subgraph in `gs` is overwritten.
void run_rooted(const Graph& g, int32_t s, int k, SubgraphBuilder& builder,
                BoundedSubgraph& gs, SearchState& state, EmitContext& emit) {
    builder.build(g, s, k, gs);
    if (emit.probe) emit.probe->begin_search(s, gs.size());
    if (gs.out_neighbors(0).empty()) return;  // nothing reachable, no search
    state.reset(gs, k);
    cycle_search(gs, 0, k, 0, state, emit);
}

// Collects emissions of one task so the caller can hand them to the
// shared sink one batch at a time.
class BufferSink final : public CycleSink {
public:
    void on_cycle(std::span<const uint64_t> vertices) override {
        lengths_.push_back(vertices.size());
        flat_.insert(flat_.end(), vertices.begin(), vertices.end());
    }
    bool empty() const { return lengths_.empty(); }
    void flush_to(CycleSink& sink) {
        size_t pos = 0;
        for (size_t len : lengths_) {
            sink.on_cycle(std::span(flat_.data() + pos, len));
            pos += len;
        }
        lengths_.clear();
        flat_.clear();
    }

private:
    std::vector<size_t> lengths_;
    std::vector<uint64_t> flat_;
};

}  // namespace

CycleCounts search_from(const Graph& g, int32_t s, int k, CycleSink* sink,
                        SearchProbe* probe) {
    assert(k >= 1);
    assert(s >= 0 && s < g.vertex_count());
    const auto start = std::chrono::steady_clock::now();

    CycleCounts counts(k);
    SubgraphBuilder builder;
    BoundedSubgraph gs;
    SearchState state;
    EmitContext emit;
    emit.counts = &counts;
    emit.sink = sink;
    emit.graph = &g;
    emit.probe = probe;

    run_rooted(g, s, k, builder, gs, state, emit);
    counts.elapsed_seconds = seconds_since(start);
    return counts;
}

CycleCounts lc_cycles(const Graph& g, int k, CycleSink* sink, int parallelism,
                      SearchProbe* probe) {
    assert(k >= 1);
    assert(probe == nullptr || parallelism <= 1);
    const int32_t n = g.vertex_count();
    const auto start = std::chrono::steady_clock::now();
    CycleCounts totals(k);

    if (parallelism <= 1) {
        SubgraphBuilder builder;
        BoundedSubgraph gs;
        SearchState state;
        EmitContext emit;
        emit.counts = &totals;
        emit.sink = sink;
        emit.graph = &g;
        emit.probe = probe;
        for (int32_t s = 0; s < n; ++s)
            run_rooted(g, s, k, builder, gs, state, emit);
    } else {
        std::atomic<int32_t> next_s{0};
        std::mutex sink_mutex;
        std::vector<CycleCounts> task_counts(parallelism, CycleCounts(k));
        std::vector<std::thread> workers;
        workers.reserve(parallelism);
        for (int t = 0; t < parallelism; ++t) {
            workers.emplace_back([&, t] {
                SubgraphBuilder builder;
                BoundedSubgraph gs;
                SearchState state;
                BufferSink buffer;
                EmitContext emit;
                emit.counts = &task_counts[t];
                emit.graph = &g;
                emit.sink = sink ? &buffer : nullptr;
                for (;;) {
                    const int32_t s = next_s.fetch_add(1, std::memory_order_relaxed);
                    if (s >= n) break;
                    run_rooted(g, s, k, builder, gs, state, emit);
                    if (sink && !buffer.empty()) {
                        std::lock_guard<std::mutex> hold(sink_mutex);
                        buffer.flush_to(*sink);
                    }
                }
            });
        }
        for (std::thread& w : workers) w.join();
        for (const CycleCounts& c : task_counts) totals.merge(c);
    }

    totals.elapsed_seconds = seconds_since(start);
    return totals;
}

}  // namespace kcycles
