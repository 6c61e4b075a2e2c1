#include "kcycles/cli.hpp"

#include <cassert>
#include <cmath>
#include <fstream>
#include <iostream>
#include <string>

#include "kcycles/engine.hpp"

namespace kcycles {

double compute_ratio(uint64_t c, int64_t n, int64_t e, double d, int k,
                     double t_seconds) {
    assert(k >= 2);
    const double feasible = std::min(static_cast<double>(e), std::pow(d, k));
    const double denom =
        (static_cast<double>(c) + static_cast<double>(n)) * (k - 1) * feasible;
    return denom == 0.0 ? 0.0 : t_seconds / denom;
}

nlohmann::json report_to_json(const RunReport& r) {
    nlohmann::json j;
    j["n"] = r.stats.n;
    j["e"] = r.stats.e;
    j["d"] = r.stats.d;
    j["sigma_d"] = r.stats.sigma_d;
    j["k"] = r.k;
    j["min_len"] = r.min_len;
    nlohmann::json counts = nlohmann::json::object();
    for (auto [len, count] : r.counts) counts[std::to_string(len)] = count;
    j["counts"] = counts;
    j["c"] = r.c;
    j["T_seconds"] = r.t_seconds;
    if (r.ratio) j["ratio"] = *r.ratio;
    return j;
}

namespace {

void validate(const RunConfig& config) {
    if (config.input_path.empty()) throw UsageError("an input path is required");
    if (config.k < 1) throw UsageError("k must be at least 1");
    if (config.min_len < 1 || config.min_len > config.k)
        throw UsageError("min-len must be in [1, k]");
    if (config.parallelism < 1) throw UsageError("threads must be at least 1");
}

RunReport make_report(const RunConfig& config, const GraphStats& stats,
                      const CycleCounts& counts) {
    RunReport report;
    report.stats = stats;
    report.k = config.k;
    report.min_len = config.min_len;
    for (int len = config.min_len; len <= config.k; ++len)
        report.counts[len] = counts.per_length[len];
    report.c = counts.total_at_least(config.min_len);
    report.t_seconds = counts.elapsed_seconds;
    if (config.report_ratio && config.k >= 2)
        report.ratio = compute_ratio(report.c, stats.n, stats.e, stats.d,
                                     config.k, report.t_seconds);
    return report;
}

// Streams each reported cycle as one line of space-separated IDs.
class LineSink final : public CycleSink {
public:
    LineSink(std::ostream& out, int min_len) : out_(out), min_len_(min_len) {}

    void on_cycle(std::span<const uint64_t> vertices) override {
        if (static_cast<int>(vertices.size()) < min_len_) return;
        line_.clear();
        for (size_t i = 0; i < vertices.size(); ++i) {
            if (i > 0) line_ += ' ';
            line_ += std::to_string(vertices[i]);
        }
        line_ += '\n';
        out_ << line_;
    }

private:
    std::ostream& out_;
    int min_len_;
    std::string line_;
};

}  // namespace

RunReport run(const RunConfig& config) {
    validate(config);

    const EdgeList edges = load_edge_list_file(config.input_path, config.format);
    const auto [graph, ordering] = build_graph(edges, config.ordering);
    const GraphStats stats = graph_stats(graph);

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!config.output_path.empty()) {
        file.open(config.output_path);
        if (!file)
            throw std::runtime_error("cannot open output file: " +
                                     config.output_path);
        out = &file;
    }

    CycleCounts counts;
    if (config.mode == RunMode::enumerate_cycles) {
        LineSink sink(*out, config.min_len);
        counts = lc_cycles(graph, config.k, &sink, config.parallelism);
    } else {
        counts = lc_cycles(graph, config.k, nullptr, config.parallelism);
    }

    const RunReport report = make_report(config, stats, counts);
    const std::string json = report_to_json(report).dump(2) + "\n";
    if (config.mode == RunMode::enumerate_cycles)
        std::cerr << json;  // keep the cycle stream on `out` clean
    else
        *out << json;
    out->flush();
    return report;
}

nlohmann::json benchmark_matrix(const std::vector<std::string>& inputs,
                                const std::vector<int>& ks, int min_len,
                                int parallelism) {
    nlohmann::json rows = nlohmann::json::array();
    for (const std::string& input : inputs) {
        EdgeList edges;
        try {
            edges = load_edge_list_file(input);
        } catch (const std::exception& e) {
            rows.push_back({{"graph", input}, {"error", e.what()}});
            continue;
        }
        for (int k : ks) {
            nlohmann::json row{{"graph", input}, {"k", k}, {"min_len", min_len}};
            try {
                if (k < 1) throw UsageError("k must be at least 1");
                if (min_len < 1 || min_len > k)
                    throw UsageError("min-len must be in [1, k]");

                const auto [sorted_graph, sorted_ordering] =
                    build_graph(edges, OrderingPolicy::degree_descending);
                const CycleCounts sorted_counts =
                    lc_cycles(sorted_graph, k, nullptr, parallelism);

                const auto [unsorted_graph, unsorted_ordering] =
                    build_graph(edges, OrderingPolicy::none);
                const CycleCounts unsorted_counts =
                    lc_cycles(unsorted_graph, k, nullptr, parallelism);

                const GraphStats stats = graph_stats(sorted_graph);
                const uint64_t c = sorted_counts.total_at_least(min_len);
                assert(c == unsorted_counts.total_at_least(min_len));
                row["c"] = c;
                row["t_sorted"] = sorted_counts.elapsed_seconds;
                row["t_unsorted"] = unsorted_counts.elapsed_seconds;
                if (k >= 2)
                    row["ratio"] = compute_ratio(c, stats.n, stats.e, stats.d,
                                                 k, sorted_counts.elapsed_seconds);
            } catch (const std::exception& e) {
                row["error"] = e.what();
            }
            rows.push_back(row);
        }
    }
    return rows;
}

}  // namespace kcycles
