#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ctqw/graph.hpp"

namespace ctqw {

/// DIMACS ascii: "c" comments, one "p edge <n> <m>" header, "e <u> <v>" lines
/// with 1-based ids. Edge list: first line "<n>", then "u v" per line, 0-based.
enum class GraphFormat { kDimacs, kEdgeList };

GraphFormat parse_format(std::string_view name);
/// Picks edge list for *.txt/*.el/*.edges, DIMACS otherwise.
GraphFormat format_for_path(const std::filesystem::path &path);

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string &what);
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

struct GraphFile {
  Graph graph;
  /// Raw text of every comment line, without the leading "c ".
  std::vector<std::string> comments;
};

/// Vertex ids in the file become labels (DIMACS 1..n, edge list 0..n-1).
/// Duplicate edges are accepted; self-loops and malformed lines throw
/// ParseError carrying the 1-based line number.
GraphFile read_graph(std::istream &in, GraphFormat format);
GraphFile read_graph(const std::filesystem::path &path, GraphFormat format);

/// Writes vertices in position order with file ids 1..n (DIMACS) or 0..n-1
/// (edge list). Each comment is emitted as a "c ..." line (DIMACS only).
void write_graph(std::ostream &out, const Graph &g, GraphFormat format,
                 const std::vector<std::string> &comments = {});
void write_graph(const std::filesystem::path &path, const Graph &g,
                 GraphFormat format,
                 const std::vector<std::string> &comments = {});

/// Labels listed in a "planted_mc ..." comment, if present.
std::vector<Label> planted_clique_from_comments(
    const std::vector<std::string> &comments);

} // namespace ctqw
