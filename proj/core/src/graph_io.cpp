#include "ctqw/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace ctqw {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) {
    return {};
  }
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

// Reads exactly `count` integers from a line and rejects trailing tokens.
std::vector<long long> parse_ints(std::istringstream &ss, std::size_t count,
                                  std::size_t line_no, std::string_view what) {
  std::vector<long long> out(count);
  for (auto &v : out) {
    if (!(ss >> v)) {
      throw ParseError(line_no, "expected " + std::string(what));
    }
  }
  std::string extra;
  if (ss >> extra) {
    throw ParseError(line_no, "unexpected token '" + extra + "'");
  }
  return out;
}

void add_parsed_edge(Graph &g, long long u, long long v, long long lo,
                     std::size_t line_no) {
  const long long hi = lo + static_cast<long long>(g.size()) - 1;
  if (u < lo || u > hi || v < lo || v > hi) {
    throw ParseError(line_no, "vertex id out of range [" + std::to_string(lo) +
                                  ", " + std::to_string(hi) + "]");
  }
  if (u == v) {
    throw ParseError(line_no, "self-loop on vertex " + std::to_string(u));
  }
  g.add_edge_at(static_cast<std::size_t>(u - lo),
                static_cast<std::size_t>(v - lo));
}

GraphFile read_dimacs(std::istream &in) {
  GraphFile out;
  bool have_header = false;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty()) {
      continue;
    }
    std::istringstream ss(line);
    std::string tag;
    ss >> tag;
    if (tag == "c") {
      out.comments.push_back(trim(std::string_view(line).substr(1)));
    } else if (tag == "p") {
      if (have_header) {
        throw ParseError(line_no, "duplicate 'p' header");
      }
      std::string kind;
      if (!(ss >> kind) || (kind != "edge" && kind != "col")) {
        throw ParseError(line_no, "expected 'p edge <n> <m>'");
      }
      const auto nm = parse_ints(ss, 2, line_no, "'p edge <n> <m>'");
      if (nm[0] < 0 || nm[1] < 0) {
        throw ParseError(line_no, "negative vertex or edge count");
      }
      out.graph = Graph(static_cast<std::size_t>(nm[0]), 1);
      have_header = true;
    } else if (tag == "e") {
      if (!have_header) {
        throw ParseError(line_no, "edge line before 'p' header");
      }
      const auto uv = parse_ints(ss, 2, line_no, "'e <u> <v>'");
      add_parsed_edge(out.graph, uv[0], uv[1], 1, line_no);
    } else {
      throw ParseError(line_no, "unrecognised line type '" + tag + "'");
    }
  }
  if (!have_header) {
    throw ParseError(line_no, "missing 'p edge' header");
  }
  return out;
}

GraphFile read_edge_list(std::istream &in) {
  GraphFile out;
  bool have_count = false;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty()) {
      continue;
    }
    if (line.front() == '#') {
      out.comments.push_back(trim(std::string_view(line).substr(1)));
      continue;
    }
    std::istringstream ss(line);
    if (!have_count) {
      const auto n = parse_ints(ss, 1, line_no, "vertex count");
      if (n[0] < 0) {
        throw ParseError(line_no, "negative vertex count");
      }
      out.graph = Graph(static_cast<std::size_t>(n[0]), 0);
      have_count = true;
      continue;
    }
    const auto uv = parse_ints(ss, 2, line_no, "'<u> <v>'");
    add_parsed_edge(out.graph, uv[0], uv[1], 0, line_no);
  }
  if (!have_count) {
    throw ParseError(line_no, "missing vertex count line");
  }
  return out;
}

} // namespace

ParseError::ParseError(std::size_t line, const std::string &what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what),
      line_(line) {}

GraphFormat parse_format(std::string_view name) {
  if (name == "dimacs") {
    return GraphFormat::kDimacs;
  }
  if (name == "edgelist") {
    return GraphFormat::kEdgeList;
  }
  throw std::invalid_argument("unknown graph format '" + std::string(name) +
                              "' (expected dimacs or edgelist)");
}

GraphFormat format_for_path(const std::filesystem::path &path) {
  const auto ext = path.extension().string();
  if (ext == ".txt" || ext == ".el" || ext == ".edges") {
    return GraphFormat::kEdgeList;
  }
  return GraphFormat::kDimacs;
}

GraphFile read_graph(std::istream &in, GraphFormat format) {
  return format == GraphFormat::kDimacs ? read_dimacs(in) : read_edge_list(in);
}

GraphFile read_graph(const std::filesystem::path &path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open " + path.string());
  }
  return read_graph(in, format);
}

void write_graph(std::ostream &out, const Graph &g, GraphFormat format,
                 const std::vector<std::string> &comments) {
  const std::size_t n = g.size();
  if (format == GraphFormat::kDimacs) {
    for (const auto &c : comments) {
      out << "c " << c << '\n';
    }
    out << "p edge " << n << ' ' << g.edge_count() << '\n';
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (g.adjacent(i, j)) {
          out << "e " << i + 1 << ' ' << j + 1 << '\n';
        }
      }
    }
    return;
  }
  out << n << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (g.adjacent(i, j)) {
        out << i << ' ' << j << '\n';
      }
    }
  }
}

void write_graph(const std::filesystem::path &path, const Graph &g,
                 GraphFormat format, const std::vector<std::string> &comments) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write " + path.string());
  }
  write_graph(out, g, format, comments);
}

std::vector<Label> planted_clique_from_comments(
    const std::vector<std::string> &comments) {
  for (const auto &c : comments) {
    std::istringstream ss(c);
    std::string key;
    if (ss >> key && key == "planted_mc") {
      std::vector<Label> out;
      Label v = 0;
      while (ss >> v) {
        out.push_back(v);
      }
      return out;
    }
  }
  return {};
}

} // namespace ctqw
