#include <gtest/gtest.h>

#include <set>

#include "brute_force.hpp"
#include "ctqw/ideal.hpp"
#include "ctqw/oracle.hpp"
#include "ctqw/spectral.hpp"

namespace ctqw {
namespace {

using testing::integer_power;

bool in(const std::vector<Label> &vs, Label v) {
  return std::find(vs.begin(), vs.end(), v) != vs.end();
}

// Checks W, F, H against exact integer powers of the generated adjacency.
void expect_recursion_matches_powers(const IdealGraph &ig, const WalkCounts &wc) {
  const Graph &g = ig.graph;
  const std::size_t c = g.index_of(ig.center);
  for (std::size_t s = 0; s <= wc.max_length(); ++s) {
    const auto p = integer_power(g, static_cast<int>(s));
    ASSERT_EQ(wc.closed[s], BigInt(p[c][c])) << "s=" << s;
    for (std::size_t l = 0; l < g.size(); ++l) {
      if (l == c) {
        continue;
      }
      const BigInt &expected =
          in(ig.planted, g.label(l)) ? wc.to_clique[s] : wc.to_other[s];
      ASSERT_EQ(expected, BigInt(p[c][l])) << "s=" << s << " l=" << g.label(l);
    }
  }
}

TEST(FirstKind, FiveFourShape) {
  const auto ig = gen_first_kind({5, 4});
  const Graph &g = ig.graph;
  EXPECT_EQ(g.size(), 8u);
  EXPECT_EQ(ig.center, 5);
  EXPECT_EQ(ig.planted, (std::vector<Label>{1, 2, 3, 4, 5}));
  const Label a[] = {1, 2, 3, 4, 5};
  const Label b[] = {5, 6, 7, 8};
  EXPECT_TRUE(is_clique(g, a));
  EXPECT_TRUE(is_clique(g, b));
  EXPECT_EQ(g.edge_count(), 10u + 6u);
}

TEST(FirstKind, SmallestSpec) {
  const auto ig = gen_first_kind({3, 2});
  EXPECT_EQ(ig.graph.size(), 4u);
  EXPECT_EQ(ig.graph.edge_count(), 4u);
  EXPECT_EQ(ig.graph.degree(ig.graph.index_of(4)), 1u);
  EXPECT_EQ(ig.graph.degree(ig.graph.index_of(ig.center)), 3u);
}

TEST(FirstKind, InvariantsAndOracle) {
  for (int m1 = 3; m1 <= 10; ++m1) {
    for (int m2 = 2; m2 < m1; ++m2) {
      const auto ig = gen_first_kind({m1, m2});
      const Graph &g = ig.graph;
      ASSERT_EQ(g.size(), static_cast<std::size_t>(m1 + m2 - 1));
      for (Label u : g.labels()) {
        for (Label v : g.labels()) {
          if (u == v || u == ig.center || v == ig.center) {
            continue;
          }
          EXPECT_EQ(g.has_edge(u, v), in(ig.planted, u) == in(ig.planted, v));
        }
      }
      const auto r = max_clique_exact(g, {.enumerate_all = true});
      EXPECT_EQ(r.omega, static_cast<std::size_t>(m1));
      ASSERT_EQ(r.witnesses.size(), 1u);
      EXPECT_EQ(r.witnesses[0], ig.planted);
    }
  }
}

TEST(FirstKind, RejectsInvalidSpecs) {
  EXPECT_THROW(gen_first_kind({5, 5}), SpecError);
  EXPECT_THROW(gen_first_kind({4, 6}), SpecError);
  EXPECT_THROW(gen_first_kind({2, 1}), SpecError);
}

TEST(SecondKind, FiveFourSixShape) {
  const auto ig = gen_second_kind({5, 4, 6});
  const Graph &g = ig.graph;
  EXPECT_EQ(g.size(), 23u);
  EXPECT_EQ(ig.planted, (std::vector<Label>{1, 2, 3, 4, 5}));
  ASSERT_EQ(ig.parts.size(), 3u);
  std::set<Label> block;
  for (const auto &part : ig.parts) {
    EXPECT_EQ(part.size(), 6u);
    block.insert(part.begin(), part.end());
    for (Label u : part) {
      for (Label v : part) {
        EXPECT_FALSE(u != v && g.has_edge(u, v));
      }
    }
  }
  EXPECT_EQ(*block.begin(), 6);
  EXPECT_EQ(*block.rbegin(), 23);
  for (Label c = 1; c <= 4; ++c) {
    for (Label u : block) {
      EXPECT_FALSE(g.has_edge(c, u));
    }
  }
  EXPECT_EQ(g.degree(g.index_of(ig.center)), 22u);
}

TEST(SecondKind, UnitPartsReduceToFirstKind) {
  for (int m1 = 4; m1 <= 7; ++m1) {
    for (int m2 = 3; m2 < m1; ++m2) {
      EXPECT_EQ(gen_second_kind({m1, m2, 1}).graph, gen_first_kind({m1, m2}).graph);
    }
  }
}

TEST(SecondKind, OracleCliqueNumber) {
  const auto ig = gen_second_kind({6, 5, 3});
  const auto r = max_clique_exact(ig.graph, {.enumerate_all = true});
  EXPECT_EQ(r.omega, 6u);
  // Block cliques: center plus one vertex from each of the 4 parts.
  const Graph block_side = center_subgraph(
      delete_vertex(ig.graph, 1), ig.parts[0][0]);
  EXPECT_EQ(max_clique_exact(block_side).omega, 5u);
  for (int m1 = 3; m1 <= 6; ++m1) {
    for (int m2 = 3; m2 <= 6; ++m2) {
      for (int z = 1; z <= 3; ++z) {
        EXPECT_EQ(max_clique_exact(gen_second_kind({m1, m2, z}).graph).omega,
                  static_cast<std::size_t>(std::max(m1, m2)));
      }
    }
  }
}

TEST(BaseGraph, ConstructionAndOracle) {
  const BaseGraphSpec spec{8, 3, 2};
  const auto ig = gen_base_graph(spec);
  EXPECT_EQ(ig.graph.size(), 14u);
  EXPECT_EQ(ig.planted.size(), 8u);
  const auto report = check_base_graph(ig, spec);
  EXPECT_TRUE(report.all());
  EXPECT_EQ(report.triples_checked, 35u);
  // With every rim vertex joined to the whole block, the planted clique
  // extends by one vertex per part.
  std::vector<Label> extended = ig.planted;
  for (const auto &part : ig.parts) {
    extended.push_back(part.front());
  }
  EXPECT_TRUE(is_clique(ig.graph, extended));
  EXPECT_EQ(max_clique_exact(ig.graph).omega, 8u + 3u);
}

TEST(BaseGraph, ConstraintViolationsQuoteInequality) {
  try {
    gen_base_graph({8, 3, 1});
    FAIL();
  } catch (const SpecError &e) {
    EXPECT_NE(std::string(e.what()).find("qz > omega-3"), std::string::npos);
  }
  try {
    gen_base_graph({8, 4, 3});
    FAIL();
  } catch (const SpecError &e) {
    EXPECT_NE(std::string(e.what()).find("q+4 < omega"), std::string::npos);
  }
  EXPECT_THROW(gen_base_graph({10, 1, 9}), SpecError);
}

TEST(BaseGraph, CommonNeighbourCountsByBruteForce) {
  const BaseGraphSpec spec{10, 5, 2};
  const auto ig = gen_base_graph(spec);
  const Graph &g = ig.graph;
  std::vector<Label> block;
  for (const auto &part : ig.parts) {
    block.insert(block.end(), part.begin(), part.end());
  }
  std::size_t triples = 0;
  for (Label a = 1; a < 10; ++a) {
    for (Label b = a + 1; b < 10; ++b) {
      for (Label c = b + 1; c < 10; ++c) {
        std::size_t common = 0;
        for (Label u : block) {
          common += g.has_edge(a, u) && g.has_edge(b, u) && g.has_edge(c, u);
        }
        EXPECT_EQ(common, 10u);
        ++triples;
      }
    }
  }
  EXPECT_EQ(check_base_graph(ig, spec).triples_checked, triples);
  EXPECT_TRUE(check_base_graph(ig, spec).all());
}

TEST(Recursion, FirstKindSmallValues) {
  const auto wc = recursion_first({5, 4}, 3);
  EXPECT_EQ(wc.closed[0], 1);
  EXPECT_EQ(wc.to_clique[0], 0);
  EXPECT_EQ(wc.to_other[0], 0);
  EXPECT_EQ(wc.to_clique[1], 1);
  EXPECT_EQ(wc.to_other[1], 1);
  EXPECT_EQ(wc.closed[2], 7);
}

TEST(Recursion, FirstKindMatchesMatrixPowers) {
  for (int m1 = 3; m1 <= 8; ++m1) {
    for (int m2 = 2; m2 < m1; ++m2) {
      expect_recursion_matches_powers(gen_first_kind({m1, m2}),
                                      recursion_first({m1, m2}, 12));
    }
  }
}

TEST(Recursion, SecondKindMatchesMatrixPowers) {
  expect_recursion_matches_powers(gen_second_kind({5, 4, 6}),
                                  recursion_second({5, 4, 6}, 12));
  for (int z = 1; z <= 4; ++z) {
    expect_recursion_matches_powers(gen_second_kind({4, 3, z}),
                                    recursion_second({4, 3, z}, 12));
  }
  const auto wc = recursion_second({7, 5, 3}, 1);
  EXPECT_EQ(wc.to_clique[1], 1);
  EXPECT_EQ(wc.to_other[1], 1);
}

TEST(Recursion, SecondKindWithUnitPartsEqualsFirstKind) {
  const auto a = recursion_first({7, 4}, 12);
  const auto b = recursion_second({7, 4, 1}, 12);
  EXPECT_EQ(a.closed, b.closed);
  EXPECT_EQ(a.to_clique, b.to_clique);
  EXPECT_EQ(a.to_other, b.to_other);
}

TEST(ClosedForm, FirstKindCliqueBranch) {
  const auto ig = gen_first_kind({5, 4});
  const auto wc = recursion_first({5, 4}, 10);
  for (std::size_t s = 0; s <= 10; ++s) {
    const double ref = wc.to_clique[s].convert_to<double>();
    EXPECT_LE(closed_form_residual(ig.graph, ig.center, 3.0, s, wc.to_clique[s]),
              1e-6 * std::max(1.0, ref));
    EXPECT_LE(closed_form_residual(ig.graph, ig.center, 2.0, s, wc.to_other[s]),
              1e-6 * std::max(1.0, wc.to_other[s].convert_to<double>()));
  }
  const auto es = eigendecompose(ig.graph);
  EXPECT_NEAR(closed_form_walks(es, ig.graph.index_of(ig.center), 3.0, 0), 0.0, 1e-12);
  EXPECT_NEAR(closed_form_walks(es, ig.graph.index_of(ig.center), 2.0, 0), 0.0, 1e-12);
}

TEST(ClosedForm, SecondKindBlockBranch) {
  const auto ig = gen_second_kind({5, 4, 6});
  const auto wc = recursion_second({5, 4, 6}, 8);
  for (std::size_t s = 0; s <= 8; ++s) {
    EXPECT_LE(closed_form_residual(ig.graph, ig.center, 12.0, s, wc.to_other[s]),
              1e-6 * std::max(1.0, wc.to_other[s].convert_to<double>()));
    EXPECT_LE(closed_form_residual(ig.graph, ig.center, 3.0, s, wc.to_clique[s]),
              1e-6 * std::max(1.0, wc.to_clique[s].convert_to<double>()));
  }
}

TEST(ClosedForm, ResonanceRaises) {
  // K4 has eigenvalue -1 and 3.
  const Graph k4 = testing::complete_graph(4);
  EXPECT_THROW(closed_form_residual(k4, 1, 3.0, 2, BigInt(0)), ResonanceError);
  EXPECT_THROW(center_resolvent_residual(k4, 1, -1.0), ResonanceError);
}

TEST(ResolventIdentity, VanishesOnIdealGraphs) {
  const auto ig = gen_first_kind({5, 4});
  EXPECT_LE(center_resolvent_residual(ig.graph, ig.center, 3.0), 1e-8);
  EXPECT_LE(center_resolvent_residual(ig.graph, ig.center, 2.0), 1e-8);
  const auto ig2 = gen_second_kind({5, 4, 6});
  EXPECT_LE(center_resolvent_residual(ig2.graph, ig2.center, 3.0), 1e-8);
  EXPECT_LE(center_resolvent_residual(ig2.graph, ig2.center, 12.0), 1e-8);
}

TEST(ResolventIdentity, BrokenByCrossEdge) {
  const auto ig = gen_first_kind({5, 4});
  const Edge extra[] = {{1, 6}};
  const Graph perturbed = with_edges(ig.graph, extra);
  EXPECT_GT(center_resolvent_residual(perturbed, ig.center, 3.0), 1e-4);
}

TEST(IntensityOrdering, FirstKindCliqueDominatesEverywhere) {
  for (int m1 = 3; m1 <= 12; ++m1) {
    for (int m2 = 2; m2 < m1; ++m2) {
      const auto tc = theorem_check(gen_first_kind({m1, m2}), FirstKindSpec{m1, m2});
      EXPECT_EQ(tc.status, TheoremStatus::kHolds) << m1 << "," << m2;
      EXPECT_GT(tc.margin, kTheoremMargin);
    }
  }
}

TEST(IntensityOrdering, SecondKindReversal) {
  const SecondKindSpec spec{5, 4, 6};
  const auto tc = theorem_check(gen_second_kind(spec), spec);
  EXPECT_EQ(tc.status, TheoremStatus::kHolds);
  EXPECT_GT(tc.margin, kTheoremMargin);
  EXPECT_LT(tc.clique_max, tc.other_min);
}

TEST(IntensityOrdering, SecondKindPreconditionGuard) {
  const SecondKindSpec spec{10, 3, 2};
  const auto tc = theorem_check(gen_second_kind(spec), spec);
  EXPECT_EQ(tc.status, TheoremStatus::kPreconditionUnmet);
}

} // namespace
} // namespace ctqw
