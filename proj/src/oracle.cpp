#include "kcycles/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

namespace kcycles {

Cycle canonical_cycle(const Cycle& c) {
    assert(!c.empty());
    const auto min_it = std::min_element(c.begin(), c.end());
    Cycle rotated;
    rotated.reserve(c.size());
    rotated.insert(rotated.end(), min_it, c.end());
    rotated.insert(rotated.end(), c.begin(), min_it);
    return rotated;
}

void OracleResult::insert(const Cycle& c) {
    if (cycles.insert(canonical_cycle(c)).second)
        ++per_length[static_cast<int>(c.size())];
}

uint64_t OracleResult::total() const {
    uint64_t t = 0;
    for (const auto& [len, count] : per_length) t += count;
    return t;
}

OracleResult brute_force_cycles(const Graph& g, int k) {
    assert(k >= 1);
    const int32_t n = g.vertex_count();
    OracleResult result;
    std::vector<int32_t> path;
    std::vector<uint8_t> on_path(n, 0);

    std::function<void(int32_t, int32_t)> extend = [&](int32_t s, int32_t v) {
        for (int32_t w : g.out_neighbors(v)) {
            if (w == s) {
                Cycle c;
                c.reserve(path.size());
                for (int32_t u : path) c.push_back(g.external_id(u));
                result.insert(c);
            } else if (w > s && !on_path[w] &&
                       static_cast<int>(path.size()) < k) {
                path.push_back(w);
                on_path[w] = 1;
                extend(s, w);
                path.pop_back();
                on_path[w] = 0;
            }
        }
    };

    for (int32_t s = 0; s < n; ++s) {
        path.assign(1, s);
        on_path[s] = 1;
        extend(s, s);
        on_path[s] = 0;
    }
    return result;
}

namespace {

// Tarjan over an adjacency-list view restricted to vertices >= s,
// self-loops excluded. Returns per-vertex component IDs (or -1 for
// vertices below s).
class SccFinder {
public:
    explicit SccFinder(const Graph& g) : g_(g) {}

    const std::vector<int32_t>& run(int32_t s) {
        const int32_t n = g_.vertex_count();
        comp_.assign(n, -1);
        index_.assign(n, -1);
        lowlink_.assign(n, 0);
        on_stack_.assign(n, 0);
        stack_.clear();
        next_index_ = 0;
        comp_count_ = 0;
        for (int32_t v = s; v < n; ++v)
            if (index_[v] == -1) dfs(v, s);
        return comp_;
    }

private:
    void dfs(int32_t v, int32_t s) {
        index_[v] = lowlink_[v] = next_index_++;
        stack_.push_back(v);
        on_stack_[v] = 1;
        for (int32_t w : g_.out_neighbors(v)) {
            if (w < s || w == v) continue;
            if (index_[w] == -1) {
                dfs(w, s);
                lowlink_[v] = std::min(lowlink_[v], lowlink_[w]);
            } else if (on_stack_[w]) {
                lowlink_[v] = std::min(lowlink_[v], index_[w]);
            }
        }
        if (lowlink_[v] == index_[v]) {
            int32_t w;
            do {
                w = stack_.back();
                stack_.pop_back();
                on_stack_[w] = 0;
                comp_[w] = comp_count_;
            } while (w != v);
            ++comp_count_;
        }
    }

    const Graph& g_;
    std::vector<int32_t> comp_, index_, lowlink_;
    std::vector<uint8_t> on_stack_;
    std::vector<int32_t> stack_;
    int32_t next_index_ = 0;
    int32_t comp_count_ = 0;
};

// The blocked backtracking search within one strongly connected
// component: stack and block vertices on the way down; a failed
// vertex joins the B-list of each successor, and a success unblocks
// recursively through the B-lists.
class BlockedSearch {
public:
    BlockedSearch(const Graph& g, OracleResult& out, std::optional<int> max_len)
        : g_(g), out_(out), max_len_(max_len) {
        const int32_t n = g.vertex_count();
        blocked_.assign(n, 0);
        b_.resize(n);
        in_component_.assign(n, 0);
    }

    void search_root(int32_t s, const std::vector<int32_t>& comp) {
        const int32_t n = g_.vertex_count();
        for (int32_t v = 0; v < n; ++v) {
            in_component_[v] = comp[v] >= 0 && comp[v] == comp[s];
            blocked_[v] = 0;
            b_[v].clear();
        }
        s_ = s;
        circuit(s);
    }

private:
    bool circuit(int32_t v) {
        bool found = false;
        stack_.push_back(v);
        blocked_[v] = 1;
        for (int32_t w : g_.out_neighbors(v)) {
            if (w == v || !in_component_[w]) continue;
            if (w == s_) {
                record();
                found = true;
            } else if (!blocked_[w]) {
                if (circuit(w)) found = true;
            }
        }
        if (found) {
            unblock(v);
        } else {
            for (int32_t w : g_.out_neighbors(v)) {
                if (w == v || !in_component_[w]) continue;
                auto& list = b_[w];
                if (std::find(list.begin(), list.end(), v) == list.end())
                    list.push_back(v);
            }
        }
        stack_.pop_back();
        return found;
    }

    void unblock(int32_t u) {
        blocked_[u] = 0;
        std::vector<int32_t> pending;
        pending.swap(b_[u]);
        for (int32_t w : pending)
            if (blocked_[w]) unblock(w);
    }

    void record() {
        if (max_len_ && static_cast<int>(stack_.size()) > *max_len_) return;
        Cycle c;
        c.reserve(stack_.size());
        for (int32_t v : stack_) c.push_back(g_.external_id(v));
        out_.insert(c);
    }

    const Graph& g_;
    OracleResult& out_;
    std::optional<int> max_len_;
    int32_t s_ = 0;
    std::vector<int32_t> stack_;
    std::vector<uint8_t> blocked_, in_component_;
    std::vector<std::vector<int32_t>> b_;
};

bool has_self_loop(const Graph& g, int32_t v) {
    const auto neighbors = g.out_neighbors(v);
    return std::binary_search(neighbors.begin(), neighbors.end(), v);
}

}  // namespace

OracleResult johnson_cycles(const Graph& g, std::optional<int> max_len) {
    OracleResult result;
    if (max_len && *max_len < 1) return result;
    const int32_t n = g.vertex_count();
    SccFinder sccs(g);
    BlockedSearch search(g, result, max_len);

    for (int32_t s = 0; s < n; ++s) {
        if (has_self_loop(g, s)) result.insert({g.external_id(s)});
        const std::vector<int32_t>& comp = sccs.run(s);
        bool nontrivial = false;
        for (int32_t v = s; v < n && !nontrivial; ++v)
            nontrivial = v != s && comp[v] == comp[s];
        if (nontrivial) search.search_root(s, comp);
    }
    return result;
}

}  // namespace kcycles
