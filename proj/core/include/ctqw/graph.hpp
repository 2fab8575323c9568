#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ctqw {

/// Vertex identifier as it appeared in the input graph. Labels survive
/// induced-subgraph extraction, so every algorithm reports in these.
using Label = std::int32_t;

using Edge = std::pair<Label, Label>;

class GraphError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Undirected simple graph stored as a dense symmetric 0/1 matrix.
///
/// Vertices are addressed two ways: by position (0..size()-1, used by the
/// numerical code) and by label. Positions are renumbered by induced-subgraph
/// operations; labels never are.
class Graph {
public:
  Graph() = default;

  /// n isolated vertices labelled first_label, first_label+1, ...
  explicit Graph(std::size_t n, Label first_label = 1);

  /// Isolated vertices with the given labels. Throws on duplicates.
  explicit Graph(std::vector<Label> labels);

  static Graph from_edges(std::size_t n, std::span<const Edge> edges,
                          Label first_label = 1);

  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }

  const std::vector<Label> &labels() const noexcept { return labels_; }
  Label label(std::size_t i) const { return labels_.at(i); }

  std::optional<std::size_t> find(Label v) const;
  /// Like find() but throws GraphError naming the label.
  std::size_t index_of(Label v) const;
  bool contains(Label v) const { return find(v).has_value(); }

  bool adjacent(std::size_t i, std::size_t j) const noexcept {
    return adj_[i * size() + j] != 0;
  }
  bool has_edge(Label u, Label v) const {
    return adjacent(index_of(u), index_of(v));
  }

  /// Idempotent. Self-loops are rejected.
  void add_edge(Label u, Label v);
  void add_edge_at(std::size_t i, std::size_t j);

  std::size_t degree(std::size_t i) const;
  std::size_t edge_count() const;
  std::vector<std::size_t> neighbors(std::size_t i) const;
  std::vector<Edge> edges() const;

  bool is_complete() const;

  /// Induced subgraph on the given positions, kept in the given order.
  Graph induced(std::span<const std::size_t> positions) const;
  Graph induced_by_labels(std::span<const Label> vs) const;

  /// Same vertex order, same labels, same adjacency.
  bool operator==(const Graph &other) const = default;

private:
  void rebuild_lookup();

  std::vector<Label> labels_;
  std::vector<std::uint8_t> adj_;
  // (label, position) sorted by label
  std::vector<std::pair<Label, std::size_t>> lookup_;
};

/// Induced subgraph on {v} ∪ N(v).
Graph center_subgraph(const Graph &g, Label v);

/// Induced subgraph on V \ {v}.
Graph delete_vertex(const Graph &g, Label v);

/// Returns a copy of g with the extra edges added.
Graph with_edges(const Graph &g, std::span<const Edge> extra);

bool is_clique(const Graph &g, std::span<const Label> vs);

/// First non-adjacent pair in vs (in the order given), if any.
std::optional<Edge> first_non_adjacent_pair(const Graph &g,
                                            std::span<const Label> vs);

/// Connected component containing position i, as sorted positions.
std::vector<std::size_t> component_of(const Graph &g, std::size_t i);

/// A vertex set certified pairwise adjacent in the graph it came from.
class Clique {
public:
  Clique() = default;

  /// Throws std::logic_error if the members are not pairwise adjacent in g.
  static Clique certify(const Graph &g, std::vector<Label> members,
                        std::string source);

  const std::vector<Label> &members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  const std::string &source() const noexcept { return source_; }

  bool operator==(const Clique &other) const {
    return members_ == other.members_;
  }

private:
  Clique(std::vector<Label> members, std::string source)
      : members_(std::move(members)), source_(std::move(source)) {}

  std::vector<Label> members_; // sorted ascending
  std::string source_;
};

} // namespace ctqw
