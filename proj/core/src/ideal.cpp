#include "ctqw/ideal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace ctqw {

namespace {

std::string str(int v) { return std::to_string(v); }

// Center + (m1-1)-clique, then `parts` independent sets of size z joined
// completely to each other and to the center.
IdealGraph build_clique_plus_block(int m1, int parts, int z,
                                   bool join_clique_to_block) {
  const int block = parts * z;
  const auto n = static_cast<std::size_t>(m1 + block);
  IdealGraph ig;
  ig.graph = Graph(n, 1);
  ig.center = m1;
  for (Label v = 1; v <= m1; ++v) {
    ig.planted.push_back(v);
  }
  for (Label u = 1; u <= m1; ++u) {
    for (Label v = u + 1; v <= m1; ++v) {
      ig.graph.add_edge(u, v);
    }
  }
  ig.parts.resize(static_cast<std::size_t>(parts));
  for (int k = 0; k < parts; ++k) {
    for (int i = 0; i < z; ++i) {
      ig.parts[static_cast<std::size_t>(k)].push_back(m1 + 1 + k * z + i);
    }
  }
  for (int a = 0; a < parts; ++a) {
    for (Label u : ig.parts[static_cast<std::size_t>(a)]) {
      ig.graph.add_edge(ig.center, u);
      if (join_clique_to_block) {
        for (Label c = 1; c < m1; ++c) {
          ig.graph.add_edge(c, u);
        }
      }
      for (int b = a + 1; b < parts; ++b) {
        for (Label w : ig.parts[static_cast<std::size_t>(b)]) {
          ig.graph.add_edge(u, w);
        }
      }
    }
  }
  return ig;
}

WalkCounts run_recursion(int m1, int clique_out, int block_into_center,
                         int block_self, std::size_t s_max) {
  WalkCounts wc;
  wc.closed.reserve(s_max + 1);
  wc.closed.push_back(1);
  wc.to_clique.push_back(0);
  wc.to_other.push_back(0);
  for (std::size_t s = 0; s < s_max; ++s) {
    const BigInt &w = wc.closed[s];
    const BigInt &f = wc.to_clique[s];
    const BigInt &h = wc.to_other[s];
    BigInt w_next = (m1 - 1) * f + block_into_center * h;
    BigInt f_next = w + clique_out * f;
    BigInt h_next = w + block_self * h;
    wc.closed.push_back(std::move(w_next));
    wc.to_clique.push_back(std::move(f_next));
    wc.to_other.push_back(std::move(h_next));
  }
  return wc;
}

void check_resonance(const EigenSystem &es, double m_eff) {
  for (Eigen::Index k = 0; k < es.values.size(); ++k) {
    if (std::abs(m_eff - es.values(k)) <= kResonanceTol) {
      throw ResonanceError("resonant parameter: m_eff = " +
                           std::to_string(m_eff) +
                           " coincides with an adjacency eigenvalue");
    }
  }
}

TheoremCheck compare_intensities(const IdealGraph &ig) {
  const EigenSystem es = eigendecompose(ig.graph);
  const std::size_t c = ig.graph.index_of(ig.center);
  const auto p = principal_intensities(es, c);

  TheoremCheck tc;
  tc.clique_min = tc.other_min = std::numeric_limits<double>::infinity();
  tc.clique_max = tc.other_max = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < ig.graph.size(); ++i) {
    const Label v = ig.graph.label(i);
    if (v == ig.center) {
      continue;
    }
    const bool in_clique =
        std::find(ig.planted.begin(), ig.planted.end(), v) != ig.planted.end();
    double &lo = in_clique ? tc.clique_min : tc.other_min;
    double &hi = in_clique ? tc.clique_max : tc.other_max;
    lo = std::min(lo, p[i]);
    hi = std::max(hi, p[i]);
  }
  return tc;
}

} // namespace

void validate(const FirstKindSpec &spec) {
  if (spec.m1 < 3) {
    throw SpecError("first kind needs m1 >= 3, got m1=" + str(spec.m1));
  }
  if (spec.m2 < 2 || spec.m2 >= spec.m1) {
    throw SpecError("first kind needs 2 <= m2 < m1, got m1=" + str(spec.m1) +
                    " m2=" + str(spec.m2));
  }
}

void validate(const SecondKindSpec &spec) {
  if (spec.m1 < 3) {
    throw SpecError("second kind needs m1 >= 3, got m1=" + str(spec.m1));
  }
  if (spec.m2 < 3) {
    throw SpecError("second kind needs m2 >= 3, got m2=" + str(spec.m2));
  }
  if (spec.z < 1) {
    throw SpecError("second kind needs z >= 1, got z=" + str(spec.z));
  }
}

void validate(const BaseGraphSpec &spec) {
  if (spec.q < 2) {
    throw SpecError("base graph needs q >= 2, got q=" + str(spec.q));
  }
  if (spec.z < 1) {
    throw SpecError("base graph needs z >= 1, got z=" + str(spec.z));
  }
  if (!(spec.q * spec.z > spec.omega - 3)) {
    throw SpecError("constraint qz > omega-3 violated: " + str(spec.q) + "*" +
                    str(spec.z) + "=" + str(spec.q * spec.z) +
                    " <= " + str(spec.omega - 3));
  }
  if (!(spec.q + 4 < spec.omega)) {
    throw SpecError("constraint q+4 < omega violated: " + str(spec.q) +
                    "+4=" + str(spec.q + 4) + " >= " + str(spec.omega));
  }
}

IdealGraph gen_first_kind(const FirstKindSpec &spec) {
  validate(spec);
  // A second clique of size m2 is a multipartite block of m2-1 singleton parts.
  IdealGraph ig = build_clique_plus_block(spec.m1, spec.m2 - 1, 1, false);
  ig.parts.clear();
  return ig;
}

IdealGraph gen_second_kind(const SecondKindSpec &spec) {
  validate(spec);
  return build_clique_plus_block(spec.m1, spec.m2 - 1, spec.z, false);
}

IdealGraph gen_base_graph(const BaseGraphSpec &spec) {
  validate(spec);
  return build_clique_plus_block(spec.omega, spec.q, spec.z, true);
}

WalkCounts recursion_first(const FirstKindSpec &spec, std::size_t s_max) {
  validate(spec);
  return run_recursion(spec.m1, spec.m1 - 2, spec.m2 - 1, spec.m2 - 2, s_max);
}

WalkCounts recursion_second(const SecondKindSpec &spec, std::size_t s_max) {
  validate(spec);
  return run_recursion(spec.m1, spec.m1 - 2, spec.z * (spec.m2 - 1),
                       spec.z * (spec.m2 - 2), s_max);
}

double closed_form_walks(const EigenSystem &es, std::size_t center,
                         double m_eff, std::size_t s) {
  check_resonance(es, m_eff);
  const auto c = static_cast<Eigen::Index>(center);
  const double ms = std::pow(m_eff, static_cast<double>(s));
  double sum = 0.0;
  for (Eigen::Index k = 0; k < es.values.size(); ++k) {
    const double a = es.vectors(c, k) * es.vectors(c, k);
    const double lambda = es.values(k);
    sum += a * (ms - std::pow(lambda, static_cast<double>(s))) /
           (m_eff - lambda);
  }
  return sum;
}

double closed_form_residual(const Graph &g, Label center, double m_eff,
                            std::size_t s, const BigInt &reference) {
  const EigenSystem es = eigendecompose(g);
  const double value = closed_form_walks(es, g.index_of(center), m_eff, s);
  return std::abs(value - reference.convert_to<double>());
}

double center_resolvent_residual(const Graph &g, Label center, double m_eff) {
  const EigenSystem es = eigendecompose(g);
  check_resonance(es, m_eff);
  const auto c = static_cast<Eigen::Index>(g.index_of(center));
  double sum = 0.0;
  for (Eigen::Index k = 0; k < es.values.size(); ++k) {
    sum += es.vectors(c, k) * es.vectors(c, k) / (m_eff - es.values(k));
  }
  return std::abs(sum);
}

TheoremCheck theorem_check(const IdealGraph &ig, const FirstKindSpec &spec) {
  validate(spec);
  TheoremCheck tc = compare_intensities(ig);
  tc.margin = tc.clique_min - tc.other_max;
  tc.status = tc.margin > kTheoremMargin ? TheoremStatus::kHolds
                                         : TheoremStatus::kViolated;
  return tc;
}

TheoremCheck theorem_check(const IdealGraph &ig, const SecondKindSpec &spec) {
  validate(spec);
  TheoremCheck tc = compare_intensities(ig);
  tc.margin = tc.other_min - tc.clique_max;
  if (!(spec.m1 - 2 < spec.z * (spec.m2 - 2))) {
    tc.status = TheoremStatus::kPreconditionUnmet;
    return tc;
  }
  tc.status = tc.margin > kTheoremMargin ? TheoremStatus::kHolds
                                         : TheoremStatus::kViolated;
  return tc;
}

BaseGraphReport check_base_graph(const IdealGraph &ig,
                                 const BaseGraphSpec &spec) {
  BaseGraphReport r;
  const Graph &g = ig.graph;
  r.block_exceeds_gap = spec.q * spec.z > spec.omega - 3;
  r.parts_below_ceiling = spec.q + 4 < spec.omega;

  std::vector<Label> block;
  std::vector<std::size_t> part_of_block;
  r.parts_independent = ig.parts.size() == static_cast<std::size_t>(spec.q);
  for (std::size_t k = 0; k < ig.parts.size(); ++k) {
    const auto &part = ig.parts[k];
    if (part.size() != static_cast<std::size_t>(spec.z)) {
      r.parts_independent = false;
    }
    for (std::size_t a = 0; a < part.size(); ++a) {
      for (std::size_t b = a + 1; b < part.size(); ++b) {
        if (g.has_edge(part[a], part[b])) {
          r.parts_independent = false;
        }
      }
      block.push_back(part[a]);
      part_of_block.push_back(k);
    }
  }

  r.parts_fully_joined = true;
  for (std::size_t a = 0; a < block.size(); ++a) {
    for (std::size_t b = a + 1; b < block.size(); ++b) {
      if (part_of_block[a] != part_of_block[b] &&
          !g.has_edge(block[a], block[b])) {
        r.parts_fully_joined = false;
      }
    }
  }

  const std::size_t c = g.index_of(ig.center);
  r.center_universal = g.degree(c) + 1 == g.size();

  std::vector<Label> rim;
  for (Label v : ig.planted) {
    if (v != ig.center) {
      rim.push_back(v);
    }
  }
  const std::size_t want = static_cast<std::size_t>(spec.q * spec.z);
  r.common_neighbors_ok = rim.size() >= 3;
  r.min_common = std::numeric_limits<std::size_t>::max();
  for (std::size_t a = 0; a < rim.size(); ++a) {
    for (std::size_t b = a + 1; b < rim.size(); ++b) {
      for (std::size_t d = b + 1; d < rim.size(); ++d) {
        std::size_t common = 0;
        std::vector<bool> parts_hit(ig.parts.size(), false);
        for (std::size_t u = 0; u < block.size(); ++u) {
          if (g.has_edge(rim[a], block[u]) && g.has_edge(rim[b], block[u]) &&
              g.has_edge(rim[d], block[u])) {
            ++common;
            parts_hit[part_of_block[u]] = true;
          }
        }
        const auto spanned = std::count(parts_hit.begin(), parts_hit.end(), true);
        r.min_common = std::min(r.min_common, common);
        r.max_common = std::max(r.max_common, common);
        if (common != want || spanned < 2) {
          r.common_neighbors_ok = false;
        }
        ++r.triples_checked;
      }
    }
  }
  if (r.triples_checked == 0) {
    r.min_common = 0;
  }
  return r;
}

} // namespace ctqw
