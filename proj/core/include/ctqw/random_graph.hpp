#pragma once

#include <cstdint>
#include <random>
#include <span>

#include "ctqw/graph.hpp"

namespace ctqw {

/// Mixes the inputs into an independent 64-bit seed (splitmix64 finaliser),
/// so a cell or trial can be regenerated without replaying earlier ones.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t n, double p,
                          std::uint64_t trial);

/// Uniform double in [0, 1) from the top 53 bits of one mt19937_64 draw.
/// Portable across standard libraries, unlike uniform_real_distribution.
double unit_uniform(std::mt19937_64 &rng);

/// Erdős–Rényi G(n, p): each of the n(n-1)/2 pairs, visited in (i, j) order
/// with i < j, is an edge with probability p. Labels 1..n.
Graph gnp(std::size_t n, double p, std::uint64_t seed);

/// Adds every edge among vs.
Graph with_clique(const Graph &g, std::span<const Label> vs);

} // namespace ctqw
