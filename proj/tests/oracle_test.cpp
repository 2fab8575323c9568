#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "ctqw/ideal.hpp"
#include "ctqw/oracle.hpp"
#include "ctqw/random_graph.hpp"

namespace ctqw {
namespace {

const OracleConfig kAll{.enumerate_all = true};

TEST(Oracle, CompleteGraph) {
  for (std::size_t n : {1u, 4u, 9u}) {
    const auto r = max_clique_exact(testing::complete_graph(n), kAll);
    EXPECT_EQ(r.omega, n);
    EXPECT_EQ(r.witnesses.size(), 1u);
  }
}

TEST(Oracle, EmptyGraphs) {
  EXPECT_EQ(max_clique_exact(Graph()).omega, 0u);
  const auto r = max_clique_exact(Graph(3), kAll);
  EXPECT_EQ(r.omega, 1u);
  EXPECT_EQ(r.witnesses.size(), 3u);
}

TEST(Oracle, FirstKindUniqueWitness) {
  const Graph g = gen_first_kind({5, 4}).graph;
  const auto r = max_clique_exact(g, kAll);
  EXPECT_EQ(r.omega, 5u);
  EXPECT_EQ(r.witnesses, testing::naive_maximum_cliques(g));
  ASSERT_EQ(r.witnesses.size(), 1u);
  EXPECT_EQ(r.witnesses[0], (std::vector<Label>{1, 2, 3, 4, 5}));
}

TEST(Oracle, FiveCycle) {
  const auto r = max_clique_exact(testing::cycle_graph(5), kAll);
  EXPECT_EQ(r.omega, 2u);
  EXPECT_EQ(r.witnesses.size(), 5u);
}

TEST(Oracle, AgreesWithSubsetEnumeration) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 4 + seed % 11;
    const double p = 0.2 + 0.6 * static_cast<double>(seed % 7) / 6.0;
    const Graph g = gnp(n, p, derive_seed(17, n, p, seed));
    const auto r = max_clique_exact(g, kAll);
    const auto naive = testing::naive_maximum_cliques(g);
    ASSERT_EQ(r.omega, naive.front().size()) << "seed " << seed;
    ASSERT_EQ(r.witnesses, naive) << "seed " << seed;
    EXPECT_FALSE(r.witnesses_truncated);
    for (const auto &w : r.witnesses) {
      EXPECT_TRUE(is_clique(g, w));
    }
    const auto single = max_clique_exact(g);
    EXPECT_EQ(single.omega, r.omega);
    ASSERT_EQ(single.witnesses.size(), 1u);
    EXPECT_TRUE(is_clique(g, single.witnesses[0]));
  }
}

TEST(Oracle, LabelsSurviveInducedSubgraphs) {
  const Graph g = gnp(14, 0.6, 3);
  const Graph sub = center_subgraph(g, 7);
  for (const auto &w : max_clique_exact(sub, kAll).witnesses) {
    EXPECT_TRUE(is_clique(g, w));
    EXPECT_TRUE(std::find(w.begin(), w.end(), 7) != w.end() ||
                w.size() < sub.size());
  }
}

TEST(Oracle, CapAndWitnessLimit) {
  EXPECT_THROW(max_clique_exact(Graph(65)), OracleCapError);
  EXPECT_NO_THROW(max_clique_exact(Graph(65), {.max_vertices = 80}));
  const auto r = max_clique_exact(Graph(10), {.enumerate_all = true, .max_witnesses = 4});
  EXPECT_EQ(r.witnesses.size(), 4u);
  EXPECT_TRUE(r.witnesses_truncated);
}

TEST(Oracle, HandlesFortyVertexRandomGraph) {
  const Graph g = gnp(40, 0.5, 12);
  const auto r = max_clique_exact(g);
  ASSERT_EQ(r.witnesses.size(), 1u);
  EXPECT_EQ(r.witnesses[0].size(), r.omega);
  EXPECT_TRUE(is_clique(g, r.witnesses[0]));
  EXPECT_GT(r.nodes_explored, 0u);
}

} // namespace
} // namespace ctqw
