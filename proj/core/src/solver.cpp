#include "ctqw/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <optional>
#include <set>
#include <string>

namespace ctqw {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

void require_center_graph(const Graph &g, Label center) {
  const std::size_t c = g.index_of(center);
  if (g.degree(c) + 1 != g.size()) {
    throw GraphError("not a center graph: vertex " + std::to_string(center) +
                     " is not adjacent to every other vertex");
  }
}

std::vector<std::size_t> positions_by_label(const Graph &g) {
  std::vector<std::size_t> order(g.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return g.label(a) < g.label(b);
  });
  return order;
}

struct Choice {
  std::size_t position = 0;
  double score = 0.0;
};

class Engine {
public:
  explicit Engine(const SolverConfig &cfg) : cfg_(cfg) {}

  SolveTrace take_trace() { return std::move(trace_); }

  // Extreme score over candidate positions; near-ties resolved by label.
  template <class Score>
  std::optional<Choice> select(const Graph &g,
                               const std::vector<std::size_t> &candidates,
                               Score score, bool maximize) const {
    if (candidates.empty()) {
      return std::nullopt;
    }
    double extreme = score(candidates.front());
    for (std::size_t c : candidates) {
      const double s = score(c);
      extreme = maximize ? std::max(extreme, s) : std::min(extreme, s);
    }
    const double width = cfg_.tie_tol * std::max(1.0, std::abs(extreme));
    std::optional<Choice> best;
    for (std::size_t c : candidates) {
      const double s = score(c);
      if (std::abs(s - extreme) > width) {
        continue;
      }
      if (!best) {
        best = Choice{c, s};
        continue;
      }
      const bool prefer = cfg_.tie_break == TieBreak::kLowestLabel
                              ? g.label(c) < g.label(best->position)
                              : g.label(c) > g.label(best->position);
      if (prefer) {
        best = Choice{c, s};
      }
    }
    return best;
  }

  double rank(double value, std::size_t group) const {
    if (group == 0 || cfg_.magnitude_mode == MagnitudeMode::kSigned) {
      return value;
    }
    return std::abs(value);
  }

  std::string_view rank_tag(std::string_view abs_tag,
                            std::string_view signed_tag) const {
    return cfg_.magnitude_mode == MagnitudeMode::kSigned ? signed_tag : abs_tag;
  }

  void note(std::string_view op, Label v, double freq, double value) {
    if (cfg_.record_trace) {
      trace_.steps.push_back({op, v, freq, value});
    }
  }

  void note_depth(std::size_t depth) {
    trace_.recursion_depth = std::max(trace_.recursion_depth, depth);
  }

  std::vector<std::size_t> others(const Graph &g, std::size_t skip) const {
    std::vector<std::size_t> out;
    out.reserve(g.size());
    for (std::size_t i : positions_by_label(g)) {
      if (i != skip) {
        out.push_back(i);
      }
    }
    return out;
  }

  // Weakest non-center vertex at the principal frequency.
  Choice weakest_principal(const Graph &g, std::size_t center,
                           const EigenSystem &es) const {
    const auto p = principal_intensities(es, center, cfg_.degeneracy_tol);
    return *select(
        g, others(g, center), [&](std::size_t k) { return p[k]; }, false);
  }

  std::vector<Label> pick_max(const Graph &g, Label s) {
    if (g.is_complete()) {
      return g.labels();
    }
    const Graph rest = delete_vertex(g, s);
    std::vector<Label> best{s};
    for (std::size_t seed_pos : positions_by_label(rest)) {
      std::vector<Label> grown{s, rest.label(seed_pos)};
      Graph current = rest;
      Label head = rest.label(seed_pos);
      while (true) {
        const Graph local = center_subgraph(current, head);
        if (local.size() == 1) {
          break;
        }
        if (local.is_complete()) {
          for (Label v : local.labels()) {
            if (v != head) {
              grown.push_back(v);
            }
          }
          break;
        }
        const EigenSystem es = eigendecompose(local);
        const std::size_t hp = local.index_of(head);
        const auto p = principal_intensities(es, hp, cfg_.degeneracy_tol);
        const Choice c = *select(
            local, others(local, hp), [&](std::size_t k) { return p[k]; }, true);
        const Label next = local.label(c.position);
        note("pick_max.add", next, es.values(0), c.score);
        grown.push_back(next);
        current = delete_vertex(local, head);
        head = next;
      }
      if (grown.size() > best.size()) {
        best = std::move(grown);
      }
    }
    return best;
  }

  std::vector<Label> delete_min(Graph g, Label s) {
    while (!g.is_complete()) {
      const EigenSystem es = eigendecompose(g);
      const Choice c = weakest_principal(g, g.index_of(s), es);
      const Label victim = g.label(c.position);
      note("delete_min.remove", victim, es.values(0), c.score);
      g = delete_vertex(g, victim);
    }
    return g.labels();
  }

  // Frequency group where `vertex` has the highest-ranked intensity.
  std::size_t strongest_group(const IntensityVector &iv,
                              std::size_t vertex) const {
    std::size_t best = 0;
    double best_score = rank(iv.grouped(vertex, 0), 0);
    for (std::size_t gi = 1; gi < iv.groups().size(); ++gi) {
      const double sc = rank(iv.grouped(vertex, gi), gi);
      if (sc > best_score + cfg_.tie_tol * std::max(1.0, std::abs(best_score))) {
        best = gi;
        best_score = sc;
      }
    }
    return best;
  }

  // Highest-ranked candidate at frequency group gi.
  std::optional<Choice> strongest_at(const Graph &g, const IntensityVector &iv,
                                     std::size_t gi,
                                     const std::vector<std::size_t> &cands) const {
    return select(
        g, cands, [&](std::size_t k) { return rank(iv.grouped(k, gi), gi); },
        true);
  }

  std::vector<Label> vfsa(Graph g, Label s, Label ref) {
    std::vector<Label> clique;
    std::optional<Label> reference = ref;
    while (true) {
      if (g.is_complete()) {
        for (Label v : g.labels()) {
          clique.push_back(v);
        }
        return clique;
      }
      clique.push_back(s);
      const std::size_t sp = g.index_of(s);
      const std::size_t rp = g.index_of(*reference);
      const EigenSystem es = eigendecompose(g);
      const IntensityVector iv = intensities(es, sp, cfg_.degeneracy_tol);
      const std::size_t f = strongest_group(iv, rp);
      const double freq = iv.groups()[f].frequency;
      note(rank_tag("vfsa.f_ref|abs", "vfsa.f_ref|signed"), *reference, freq,
           iv.grouped(rp, f));

      std::vector<std::size_t> cands;
      for (std::size_t k : positions_by_label(g)) {
        if (k != sp && k != rp && g.adjacent(rp, k)) {
          cands.push_back(k);
        }
      }
      std::optional<Label> next;
      if (auto c = strongest_at(g, iv, f, cands)) {
        next = g.label(c->position);
        note("vfsa.next_ref", *next, freq, iv.grouped(c->position, f));
      }
      g = center_subgraph(delete_vertex(g, s), *reference);
      s = *reference;
      reference = next;
      if (!reference) {
        // s is isolated once the old center is gone; g == {s}.
        clique.push_back(s);
        return clique;
      }
    }
  }

  // Module-3 reference choice shared by B and C: the frequency where
  // `anchor` is strongest (source = center), then the strongest neighbour
  // of `anchor` at that frequency.
  Label reference_for(const Graph &g, std::size_t center, std::size_t anchor,
                      const EigenSystem &es) {
    const IntensityVector iv = intensities(es, center, cfg_.degeneracy_tol);
    const std::size_t f = strongest_group(iv, anchor);
    std::vector<std::size_t> cands;
    for (std::size_t k : positions_by_label(g)) {
      if (k != anchor && g.adjacent(anchor, k)) {
        cands.push_back(k);
      }
    }
    const Choice c = *strongest_at(g, iv, f, cands);
    note("ref.select", g.label(c.position), iv.groups()[f].frequency, c.score);
    return g.label(c.position);
  }

  enum class Variant { kA, kB };

  std::vector<Label> recurse(Graph g, Label s, Variant variant,
                             std::size_t depth) {
    note_depth(depth);
    if (g.is_complete()) {
      return g.labels();
    }
    std::vector<Label> best = pick_max(g, s);
    auto consider = [&](std::vector<Label> c) {
      if (c.size() > best.size()) {
        best = std::move(c);
      }
    };
    consider(delete_min(g, s));

    const EigenSystem es = eigendecompose(g);
    const std::size_t sp = g.index_of(s);
    const Choice weakest = weakest_principal(g, sp, es);
    const Label vmin = g.label(weakest.position);
    note("module3.v_min", vmin, es.values(0), weakest.score);
    const Graph around_min = center_subgraph(g, vmin);
    if (variant == Variant::kA) {
      consider(pick_max(around_min, vmin));
    } else {
      const Label ref = reference_for(g, sp, weakest.position, es);
      consider(vfsa(around_min, vmin, ref));
    }

    consider(recurse(delete_vertex(g, vmin), s, variant, depth + 1));
    return best;
  }

  std::vector<Label> over_centers(const Graph &g, Variant variant) {
    std::vector<Label> best;
    for (std::size_t i : positions_by_label(g)) {
      const Label v = g.label(i);
      auto c = recurse(center_subgraph(g, v), v, variant, 0);
      if (c.size() > best.size()) {
        best = std::move(c);
      }
    }
    return best;
  }

  std::vector<Label> vfsa_from(const Graph &g, Label v) {
    const Graph around = center_subgraph(g, v);
    if (around.is_complete()) {
      return around.labels();
    }
    const EigenSystem es = eigendecompose(around);
    const std::size_t vp = around.index_of(v);
    const Label ref = reference_for(around, vp, vp, es);
    return vfsa(around, v, ref);
  }

private:
  const SolverConfig &cfg_;
  SolveTrace trace_;
};

SolveResult finish(const Graph &g, std::vector<Label> members,
                   std::string_view source, Engine &engine,
                   Clock::time_point start) {
  SolveResult r;
  r.clique = Clique::certify(g, std::move(members), std::string(source));
  r.trace = engine.take_trace();
  r.elapsed_ms = ms_since(start);
  return r;
}

} // namespace

SolveResult pick_max(const Graph &center_graph, Label center,
                     const SolverConfig &cfg) {
  const auto start = Clock::now();
  require_center_graph(center_graph, center);
  Engine engine(cfg);
  auto members = engine.pick_max(center_graph, center);
  return finish(center_graph, std::move(members), "pick_max", engine, start);
}

SolveResult delete_min(const Graph &center_graph, Label center,
                       const SolverConfig &cfg) {
  const auto start = Clock::now();
  require_center_graph(center_graph, center);
  Engine engine(cfg);
  auto members = engine.delete_min(center_graph, center);
  return finish(center_graph, std::move(members), "delete_min", engine, start);
}

SolveResult vfsa(const Graph &center_graph, Label center, Label reference,
                 const SolverConfig &cfg) {
  const auto start = Clock::now();
  require_center_graph(center_graph, center);
  if (!center_graph.contains(reference)) {
    throw GraphError("reference vertex " + std::to_string(reference) +
                     " is not in the graph");
  }
  if (reference == center && center_graph.size() > 1) {
    throw GraphError("reference vertex must differ from the center");
  }
  Engine engine(cfg);
  auto members = engine.vfsa(center_graph, center, reference);
  return finish(center_graph, std::move(members), "vfsa", engine, start);
}

SolveResult algorithm_a(const Graph &g, const SolverConfig &cfg) {
  const auto start = Clock::now();
  Engine engine(cfg);
  auto members = engine.over_centers(g, Engine::Variant::kA);
  return finish(g, std::move(members), "algorithm_a", engine, start);
}

SolveResult algorithm_b(const Graph &g, const SolverConfig &cfg) {
  const auto start = Clock::now();
  Engine engine(cfg);
  auto members = engine.over_centers(g, Engine::Variant::kB);
  return finish(g, std::move(members), "algorithm_b", engine, start);
}

MultiSolveResult algorithm_c(const Graph &g, const SolverConfig &cfg) {
  const auto start = Clock::now();
  Engine engine(cfg);
  std::set<std::vector<Label>> found;
  std::size_t largest = 0;
  for (std::size_t i : positions_by_label(g)) {
    auto members = engine.vfsa_from(g, g.label(i));
    std::sort(members.begin(), members.end());
    largest = std::max(largest, members.size());
    found.insert(std::move(members));
  }
  MultiSolveResult r;
  for (const auto &members : found) {
    if (members.size() == largest) {
      r.cliques.push_back(Clique::certify(g, members, "algorithm_c"));
    }
  }
  r.trace = engine.take_trace();
  r.elapsed_ms = ms_since(start);
  return r;
}

} // namespace ctqw
