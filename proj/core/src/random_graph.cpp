#include "ctqw/random_graph.hpp"

#include <bit>
#include <stdexcept>

namespace ctqw {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

} // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t n, double p,
                          std::uint64_t trial) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ n);
  h = splitmix64(h ^ std::bit_cast<std::uint64_t>(p));
  h = splitmix64(h ^ trial);
  return h;
}

double unit_uniform(std::mt19937_64 &rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Graph gnp(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("edge probability must lie in [0, 1]");
  }
  Graph g(n, 1);
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (unit_uniform(rng) < p) {
        g.add_edge_at(i, j);
      }
    }
  }
  return g;
}

Graph with_clique(const Graph &g, std::span<const Label> vs) {
  Graph out = g;
  for (std::size_t a = 0; a < vs.size(); ++a) {
    for (std::size_t b = a + 1; b < vs.size(); ++b) {
      out.add_edge(vs[a], vs[b]);
    }
  }
  return out;
}

} // namespace ctqw
