#ifndef BIPCHORD_IO_HPP
#define BIPCHORD_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "bipchord/graph.hpp"

namespace bipchord::io {

enum class Format { Bip, EdgeList };

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& message, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_ = 0;
};

/// bip format: optional `#` comment lines, one `b <x_count> <y_count> <edge_count>`
/// header, then exactly edge_count records `e <i> <j>` with 1-based indices.
BipartiteGraph parse_bip(std::istream& in);

/// edgelist format: lines `<u> <v>` of positive integer labels. Labels are
/// densified in order of first appearance and a 2-coloring is inferred;
/// a non-bipartite input fails with an odd-cycle witness in the original
/// labels.
BipartiteGraph parse_edgelist(std::istream& in);

BipartiteGraph parse_file(const std::string& path, Format format);

/// Canonical bip encoding: header then `e` records in (x, y) order, 1-based,
/// single spaces, newline-terminated. parse_bip(render_bip(b)) == b.
std::string render_bip(const BipartiteGraph& b);
void write_bip(const BipartiteGraph& b, std::ostream& out);

}  // namespace bipchord::io

#endif
