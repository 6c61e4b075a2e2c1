#include "kcycles/edge_list.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <string_view>

namespace kcycles {

namespace {

bool parse_u64(std::string_view token, uint64_t& out) {
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

}  // namespace

EdgeList load_edge_list(std::istream& in, EdgeFormat format) {
    (void)format;  // snap_text is the only format
    EdgeList result;
    std::string line;
    uint64_t line_no = 0;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();

        size_t pos = line.find_first_not_of(" \t");
        if (pos == std::string::npos) continue;  // blank
        if (line[pos] == '#') continue;          // comment

        std::string_view rest(line.data() + pos, line.size() - pos);
        uint64_t fields[2];
        int nfields = 0;
        while (!rest.empty()) {
            size_t end = rest.find_first_of(" \t");
            std::string_view token = rest.substr(0, end);
            rest = end == std::string_view::npos ? std::string_view{}
                                                 : rest.substr(end + 1);
            size_t skip = rest.find_first_not_of(" \t");
            rest = skip == std::string_view::npos ? std::string_view{}
                                                  : rest.substr(skip);

            if (nfields == 2)
                throw ParseError("line " + std::to_string(line_no) +
                                     ": expected 2 fields, found more",
                                 line_no);
            if (!parse_u64(token, fields[nfields]))
                throw ParseError("line " + std::to_string(line_no) +
                                     ": not a non-negative integer: '" +
                                     std::string(token) + "'",
                                 line_no);
            ++nfields;
        }
        if (nfields != 2)
            throw ParseError("line " + std::to_string(line_no) +
                                 ": expected 2 fields, found " +
                                 std::to_string(nfields),
                             line_no);
        result.edges.push_back({fields[0], fields[1]});
    }

    if (result.edges.empty())
        throw ParseError("no edges found in input", line_no);
    return result;
}

EdgeList load_edge_list_file(const std::string& path, EdgeFormat format) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    return load_edge_list(in, format);
}

}  // namespace kcycles
