#include "ctqw/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace ctqw {

Graph::Graph(std::size_t n, Label first_label) : adj_(n * n, 0) {
  labels_.resize(n);
  std::iota(labels_.begin(), labels_.end(), first_label);
  rebuild_lookup();
}

Graph::Graph(std::vector<Label> labels)
    : labels_(std::move(labels)), adj_(labels_.size() * labels_.size(), 0) {
  rebuild_lookup();
  for (std::size_t k = 1; k < lookup_.size(); ++k) {
    if (lookup_[k].first == lookup_[k - 1].first) {
      throw GraphError("duplicate vertex label " +
                       std::to_string(lookup_[k].first));
    }
  }
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges,
                        Label first_label) {
  Graph g(n, first_label);
  for (const auto &[u, v] : edges) {
    g.add_edge(u, v);
  }
  return g;
}

void Graph::rebuild_lookup() {
  lookup_.clear();
  lookup_.reserve(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    lookup_.emplace_back(labels_[i], i);
  }
  std::sort(lookup_.begin(), lookup_.end());
}

std::optional<std::size_t> Graph::find(Label v) const {
  auto it = std::lower_bound(
      lookup_.begin(), lookup_.end(), v,
      [](const std::pair<Label, std::size_t> &e, Label x) { return e.first < x; });
  if (it == lookup_.end() || it->first != v) {
    return std::nullopt;
  }
  return it->second;
}

std::size_t Graph::index_of(Label v) const {
  if (auto i = find(v)) {
    return *i;
  }
  throw GraphError("unknown vertex label " + std::to_string(v));
}

void Graph::add_edge(Label u, Label v) {
  if (u == v) {
    throw GraphError("self-loop on vertex " + std::to_string(u));
  }
  add_edge_at(index_of(u), index_of(v));
}

void Graph::add_edge_at(std::size_t i, std::size_t j) {
  if (i == j) {
    throw GraphError("self-loop on vertex " + std::to_string(labels_.at(i)));
  }
  const std::size_t n = size();
  adj_.at(i * n + j) = 1;
  adj_.at(j * n + i) = 1;
}

std::size_t Graph::degree(std::size_t i) const {
  const std::size_t n = size();
  return static_cast<std::size_t>(
      std::count(adj_.begin() + i * n, adj_.begin() + (i + 1) * n, 1));
}

std::size_t Graph::edge_count() const {
  return static_cast<std::size_t>(std::count(adj_.begin(), adj_.end(), 1)) / 2;
}

std::vector<std::size_t> Graph::neighbors(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < size(); ++j) {
    if (adjacent(i, j)) {
      out.push_back(j);
    }
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = i + 1; j < size(); ++j) {
      if (adjacent(i, j)) {
        out.emplace_back(labels_[i], labels_[j]);
      }
    }
  }
  return out;
}

bool Graph::is_complete() const {
  const std::size_t n = size();
  return edge_count() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

Graph Graph::induced(std::span<const std::size_t> positions) const {
  std::vector<Label> labels;
  labels.reserve(positions.size());
  for (auto p : positions) {
    labels.push_back(labels_.at(p));
  }
  Graph out(std::move(labels));
  const std::size_t m = positions.size();
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      if (adjacent(positions[a], positions[b])) {
        out.adj_[a * m + b] = 1;
        out.adj_[b * m + a] = 1;
      }
    }
  }
  return out;
}

Graph Graph::induced_by_labels(std::span<const Label> vs) const {
  std::vector<std::size_t> positions;
  positions.reserve(vs.size());
  for (Label v : vs) {
    positions.push_back(index_of(v));
  }
  return induced(positions);
}

Graph center_subgraph(const Graph &g, Label v) {
  const std::size_t c = g.index_of(v);
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (j == c || g.adjacent(c, j)) {
      keep.push_back(j);
    }
  }
  return g.induced(keep);
}

Graph delete_vertex(const Graph &g, Label v) {
  const std::size_t d = g.index_of(v);
  std::vector<std::size_t> keep;
  keep.reserve(g.size() - 1);
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (j != d) {
      keep.push_back(j);
    }
  }
  return g.induced(keep);
}

Graph with_edges(const Graph &g, std::span<const Edge> extra) {
  Graph out = g;
  for (const auto &[u, v] : extra) {
    out.add_edge(u, v);
  }
  return out;
}

std::optional<Edge> first_non_adjacent_pair(const Graph &g,
                                            std::span<const Label> vs) {
  std::vector<std::size_t> pos;
  pos.reserve(vs.size());
  for (Label v : vs) {
    pos.push_back(g.index_of(v));
  }
  for (std::size_t a = 0; a < pos.size(); ++a) {
    for (std::size_t b = a + 1; b < pos.size(); ++b) {
      if (!g.adjacent(pos[a], pos[b])) {
        return Edge{vs[a], vs[b]};
      }
    }
  }
  return std::nullopt;
}

bool is_clique(const Graph &g, std::span<const Label> vs) {
  return !first_non_adjacent_pair(g, vs).has_value();
}

std::vector<std::size_t> component_of(const Graph &g, std::size_t i) {
  std::vector<bool> seen(g.size(), false);
  std::vector<std::size_t> stack{i};
  std::vector<std::size_t> out;
  seen.at(i) = true;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    out.push_back(u);
    for (std::size_t w = 0; w < g.size(); ++w) {
      if (!seen[w] && g.adjacent(u, w)) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Clique Clique::certify(const Graph &g, std::vector<Label> members,
                       std::string source) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (auto bad = first_non_adjacent_pair(g, members)) {
    throw std::logic_error(source + " produced a non-clique: " +
                           std::to_string(bad->first) + " and " +
                           std::to_string(bad->second) + " are not adjacent");
  }
  return Clique(std::move(members), std::move(source));
}

} // namespace ctqw
