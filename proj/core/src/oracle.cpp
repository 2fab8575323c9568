#include "ctqw/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace ctqw {

namespace {

class BranchAndBound {
public:
  BranchAndBound(const Graph &g, const OracleConfig &cfg) : g_(g), cfg_(cfg) {}

  OracleResult run() {
    std::vector<std::size_t> order(g_.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) {
                       return g_.degree(a) > g_.degree(b);
                     });
    if (!order.empty()) {
      expand(order);
    }
    OracleResult r;
    r.omega = best_;
    r.nodes_explored = nodes_;
    r.witnesses_truncated = truncated_;
    for (const auto &w : witnesses_) {
      std::vector<Label> labels;
      for (std::size_t i : w) {
        labels.push_back(g_.label(i));
      }
      std::sort(labels.begin(), labels.end());
      r.witnesses.push_back(std::move(labels));
    }
    std::sort(r.witnesses.begin(), r.witnesses.end());
    return r;
  }

private:
  // Sequential greedy colouring of p; returns vertices sorted by colour
  // with colour numbers (1-based) as upper bounds on clique size.
  void colour_sort(const std::vector<std::size_t> &p,
                   std::vector<std::size_t> &sorted,
                   std::vector<std::size_t> &bounds) const {
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t v : p) {
      bool placed = false;
      for (auto &cls : classes) {
        const bool clash = std::any_of(cls.begin(), cls.end(), [&](std::size_t u) {
          return g_.adjacent(u, v);
        });
        if (!clash) {
          cls.push_back(v);
          placed = true;
          break;
        }
      }
      if (!placed) {
        classes.push_back({v});
      }
    }
    sorted.clear();
    bounds.clear();
    for (std::size_t k = 0; k < classes.size(); ++k) {
      for (std::size_t v : classes[k]) {
        sorted.push_back(v);
        bounds.push_back(k + 1);
      }
    }
  }

  bool prune(std::size_t bound) const {
    const std::size_t reach = current_.size() + bound;
    return cfg_.enumerate_all ? reach < best_ : reach <= best_;
  }

  void record() {
    if (current_.size() > best_) {
      best_ = current_.size();
      witnesses_.clear();
      truncated_ = false;
    }
    if (witnesses_.empty() ||
        (cfg_.enumerate_all && current_.size() == best_)) {
      if (witnesses_.size() < cfg_.max_witnesses) {
        witnesses_.push_back(current_);
      } else {
        truncated_ = true;
      }
    }
  }

  void expand(std::vector<std::size_t> p) {
    ++nodes_;
    std::vector<std::size_t> sorted;
    std::vector<std::size_t> bounds;
    colour_sort(p, sorted, bounds);
    while (!sorted.empty()) {
      if (prune(bounds.back())) {
        return;
      }
      const std::size_t v = sorted.back();
      sorted.pop_back();
      bounds.pop_back();

      current_.push_back(v);
      std::vector<std::size_t> next;
      for (std::size_t u : sorted) {
        if (g_.adjacent(u, v)) {
          next.push_back(u);
        }
      }
      if (next.empty()) {
        if (current_.size() >= best_) {
          record();
        }
      } else {
        expand(std::move(next));
      }
      current_.pop_back();
    }
  }

  const Graph &g_;
  const OracleConfig &cfg_;
  std::vector<std::size_t> current_;
  std::vector<std::vector<std::size_t>> witnesses_;
  std::size_t best_ = 0;
  std::uint64_t nodes_ = 0;
  bool truncated_ = false;
};

} // namespace

OracleResult max_clique_exact(const Graph &g, const OracleConfig &cfg) {
  if (g.size() > cfg.max_vertices) {
    throw OracleCapError("graph has " + std::to_string(g.size()) +
                         " vertices, above the exact-oracle cap of " +
                         std::to_string(cfg.max_vertices) +
                         "; use a heuristic algorithm instead");
  }
  return BranchAndBound(g, cfg).run();
}

} // namespace ctqw
