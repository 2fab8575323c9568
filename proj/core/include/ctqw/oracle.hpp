#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ctqw/graph.hpp"

namespace ctqw {

class OracleCapError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct OracleConfig {
  bool enumerate_all = false;
  std::size_t max_vertices = 64;
  std::size_t max_witnesses = 4096;
};

struct OracleResult {
  std::size_t omega = 0;
  /// Sorted label sets of size omega, in lexicographic order. One witness
  /// unless enumerate_all was requested.
  std::vector<std::vector<Label>> witnesses;
  bool witnesses_truncated = false;
  std::uint64_t nodes_explored = 0;
};

/// Exact clique number by branch and bound with greedy-colouring bounds.
OracleResult max_clique_exact(const Graph &g, const OracleConfig &cfg = {});

} // namespace ctqw
