#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "kcycles/graph.hpp"

namespace kcycles {

enum class RunMode { count, enumerate_cycles };

struct RunConfig {
    std::string input_path;
    EdgeFormat format = EdgeFormat::snap_text;
    int k = 0;
    int min_len = 1;  // reporting filter only; the search always tracks all lengths
    OrderingPolicy ordering = OrderingPolicy::degree_descending;
    int parallelism = 1;
    RunMode mode = RunMode::count;
    std::string output_path;  // empty = stdout
    bool report_ratio = false;
};

struct RunReport {
    GraphStats stats;
    int k = 0;
    int min_len = 1;
    std::map<int, uint64_t> counts;  // length -> count, lengths >= min_len
    uint64_t c = 0;                  // sum of counts
    double t_seconds = 0.0;          // enumeration wall time, parsing excluded
    std::optional<double> ratio;
};

/// Invalid configuration (exit code 1 at the CLI).
class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// T / ((c + n) * (k - 1) * min(e, d^k)). Requires k >= 2.
double compute_ratio(uint64_t c, int64_t n, int64_t e, double d, int k,
                     double t_seconds);

nlohmann::json report_to_json(const RunReport& r);

/// Loads the input, enumerates, and writes results. Count mode writes
/// the JSON report to the configured output; enumerate mode streams
/// one cycle per line (space-separated external IDs, smallest-index
/// vertex first) to the output and the report to stderr. Throws
/// UsageError for bad configs and std::runtime_error/ParseError for
/// I/O trouble.
RunReport run(const RunConfig& config);

/// Runs each input at each k with degree-descending and unsorted
/// numbering, and reports rows {graph, k, c, t_sorted, t_unsorted,
/// ratio}. A failed run becomes a row with an "error" field and the
/// matrix continues.
nlohmann::json benchmark_matrix(const std::vector<std::string>& inputs,
                                const std::vector<int>& ks, int min_len = 3,
                                int parallelism = 1);

}  // namespace kcycles
