#pragma once

#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

namespace kcycles {

/// A single directed edge in original (external) vertex IDs.
struct Edge {
    uint64_t src = 0;
    uint64_t dst = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Raw parsed edge list. May contain duplicates and self-loops;
/// normalization happens in build_graph.
struct EdgeList {
    std::vector<Edge> edges;
};

enum class EdgeFormat {
    snap_text,  // one "src dst" pair per line, '#' comment lines
};

/// Thrown on malformed input; message names the offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, uint64_t line)
        : std::runtime_error(what), line_(line) {}
    uint64_t line() const { return line_; }

private:
    uint64_t line_;
};

/// Reads whitespace-separated non-negative integer pairs, one edge per
/// line. Lines starting with '#' and blank lines are skipped. Throws
/// ParseError on a non-integer token or wrong arity, and if the stream
/// yields no edges at all.
EdgeList load_edge_list(std::istream& in, EdgeFormat format = EdgeFormat::snap_text);

/// Convenience wrapper; throws std::runtime_error if the file cannot be opened.
EdgeList load_edge_list_file(const std::string& path,
                             EdgeFormat format = EdgeFormat::snap_text);

}  // namespace kcycles
