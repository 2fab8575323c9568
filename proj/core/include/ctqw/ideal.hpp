#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ctqw/graph.hpp"
#include "ctqw/spectral.hpp"

namespace ctqw {

class SpecError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// m_eff coincides with an eigenvalue, so the closed forms divide by zero.
class ResonanceError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Two cliques of sizes m1 > m2 sharing only the center vertex.
struct FirstKindSpec {
  int m1 = 0;
  int m2 = 0;
};

/// Center + (m1-1)-clique + complete multipartite block of (m2-1) parts with
/// z vertices each; z = 1 reduces to FirstKindSpec{m1, m2}.
struct SecondKindSpec {
  int m1 = 0;
  int m2 = 0;
  int z = 1;
};

/// Planted omega-clique with a complete multipartite block (q parts of z)
/// joined to every clique vertex. Requires q*z > omega-3, q+4 < omega, q >= 2.
struct BaseGraphSpec {
  int omega = 0;
  int q = 0;
  int z = 0;
};

/// A generated graph with its designated center and the planted clique.
///
/// Labelling is fixed: non-center clique vertices 1..m1-1, center m1, then
/// the other block in ascending labels (part by part for multipartite blocks).
struct IdealGraph {
  Graph graph;
  Label center = 0;
  std::vector<Label> planted;              // includes the center
  std::vector<std::vector<Label>> parts;   // independent sets of the block
};

void validate(const FirstKindSpec &spec);
void validate(const SecondKindSpec &spec);
void validate(const BaseGraphSpec &spec);

IdealGraph gen_first_kind(const FirstKindSpec &spec);
IdealGraph gen_second_kind(const SecondKindSpec &spec);
IdealGraph gen_base_graph(const BaseGraphSpec &spec);

/// Walks from the center: closed (W), to one clique vertex (F), to one
/// vertex outside the clique (H). Index s = walk length.
struct WalkCounts {
  std::vector<BigInt> closed;
  std::vector<BigInt> to_clique;
  std::vector<BigInt> to_other;

  std::size_t max_length() const noexcept { return closed.size() - 1; }
};

WalkCounts recursion_first(const FirstKindSpec &spec, std::size_t s_max);
WalkCounts recursion_second(const SecondKindSpec &spec, std::size_t s_max);

inline constexpr double kResonanceTol = 1e-8;

/// Σ_n a_n (m^s − λ_n^s)/(m − λ_n) with a_n = x_n(center)². Throws
/// ResonanceError if |m − λ_n| ≤ kResonanceTol for some n.
double closed_form_walks(const EigenSystem &es, std::size_t center,
                         double m_eff, std::size_t s);

/// |closed_form_walks − reference|.
double closed_form_residual(const Graph &g, Label center, double m_eff,
                            std::size_t s, const BigInt &reference);

/// |Σ_n a_n / (m − λ_n)|, i.e. the center diagonal of the resolvent
/// (m − A)^{-1}. Vanishes on ideal graphs for m = m1−2 and m = z(m2−2).
double center_resolvent_residual(const Graph &g, Label center, double m_eff);

enum class TheoremStatus { kHolds, kViolated, kPreconditionUnmet };

inline constexpr double kTheoremMargin = 1e-10;

/// Comparison of grouped principal intensities (source = center) between
/// planted-clique vertices and the rest; the center itself is excluded.
struct TheoremCheck {
  TheoremStatus status = TheoremStatus::kViolated;
  /// Positive when the expected ordering holds.
  double margin = 0.0;
  double clique_min = 0.0;
  double clique_max = 0.0;
  double other_min = 0.0;
  double other_max = 0.0;
};

/// Clique vertices dominate: min(clique) − max(other) > kTheoremMargin.
TheoremCheck theorem_check(const IdealGraph &ig, const FirstKindSpec &spec);

/// Reversed ordering when m1−2 < z(m2−2): min(other) − max(clique).
/// Reports kPreconditionUnmet otherwise.
TheoremCheck theorem_check(const IdealGraph &ig, const SecondKindSpec &spec);

struct BaseGraphReport {
  bool block_exceeds_gap = false;   // q*z > omega - 3
  bool parts_below_ceiling = false; // q + 4 < omega
  bool parts_independent = false;
  bool parts_fully_joined = false;
  bool center_universal = false;
  /// Every 3-subset of non-center clique vertices has exactly q*z common
  /// block neighbours spanning at least two parts.
  bool common_neighbors_ok = false;
  std::size_t min_common = 0;
  std::size_t max_common = 0;
  std::size_t triples_checked = 0;

  bool all() const noexcept {
    return block_exceeds_gap && parts_below_ceiling && parts_independent &&
           parts_fully_joined && center_universal && common_neighbors_ok;
  }
};

BaseGraphReport check_base_graph(const IdealGraph &ig,
                                 const BaseGraphSpec &spec);

} // namespace ctqw
