#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "ctqw/graph.hpp"
#include "ctqw/spectral.hpp"

namespace ctqw {

enum class TieBreak { kLowestLabel, kHighestLabel };

/// How intensities are ranked. The principal frequency is always compared
/// signed (Perron-normalised, nonnegative within the center's component);
/// kAbsoluteAtNonPrincipal ranks every other frequency by |p|.
enum class MagnitudeMode { kAbsoluteAtNonPrincipal, kSigned };

struct SolverConfig {
  double degeneracy_tol = kDefaultDegeneracyTol;
  /// Scores within tie_tol·max(1, |best|) of the best count as ties.
  double tie_tol = 1e-10;
  TieBreak tie_break = TieBreak::kLowestLabel;
  MagnitudeMode magnitude_mode = MagnitudeMode::kAbsoluteAtNonPrincipal;
  bool record_trace = true;
};

/// One decision taken by a solver. `op` is a static tag such as
/// "pick_max.add", "delete_min.remove" or "vfsa.f_ref|abs".
struct TraceStep {
  std::string_view op;
  Label vertex = 0;
  double frequency = 0.0;
  double intensity = 0.0;

  bool operator==(const TraceStep &) const = default;
};

struct SolveTrace {
  std::vector<TraceStep> steps;
  /// Deepest recursion level reached (0 when no recursive call was made).
  std::size_t recursion_depth = 0;

  bool operator==(const SolveTrace &) const = default;
};

struct SolveResult {
  Clique clique;
  SolveTrace trace;
  double elapsed_ms = 0.0;
};

struct MultiSolveResult {
  /// Distinct maximum-size cliques found, lexicographic by members.
  std::vector<Clique> cliques;
  SolveTrace trace;
  double elapsed_ms = 0.0;
};

/// Greedy growth by largest principal intensity from every seed neighbour of
/// the center. `center_graph` must have `center` adjacent to all vertices.
SolveResult pick_max(const Graph &center_graph, Label center,
                     const SolverConfig &cfg = {});

/// Deletes the smallest-principal-intensity non-center vertex until the
/// remaining graph is complete.
SolveResult delete_min(const Graph &center_graph, Label center,
                       const SolverConfig &cfg = {});

/// Variational frequency selection: repeatedly re-centres on the reference
/// vertex, choosing the next reference among its neighbours at the
/// frequency where the current reference is strongest.
SolveResult vfsa(const Graph &center_graph, Label center, Label reference,
                 const SolverConfig &cfg = {});

/// Recursive four-module search over every center graph of g.
SolveResult algorithm_a(const Graph &g, const SolverConfig &cfg = {});

/// Algorithm A with the third module replaced by a VFSA run from the
/// weakest principal vertex.
SolveResult algorithm_b(const Graph &g, const SolverConfig &cfg = {});

/// One VFSA run per vertex, no recursion; returns every distinct clique of
/// the largest size found.
MultiSolveResult algorithm_c(const Graph &g, const SolverConfig &cfg = {});

} // namespace ctqw
