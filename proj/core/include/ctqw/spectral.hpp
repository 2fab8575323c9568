#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

#include "ctqw/graph.hpp"

namespace ctqw {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr double kDefaultDegeneracyTol = 1e-8;

/// Full spectral resolution A = Σ_k λ_k x_k x_kᵀ of an adjacency matrix.
///
/// Eigenvalues are sorted descending. Each eigenvector's sign is fixed so
/// its first entry with magnitude above 1e-10 is positive; the principal
/// vector instead has a positive entry sum (Perron convention), which makes
/// it entrywise nonnegative on connected graphs.
struct EigenSystem {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors; // column k pairs with values[k]
  std::vector<Label> labels;

  std::size_t size() const noexcept {
    return static_cast<std::size_t>(values.size());
  }
};

EigenSystem eigendecompose(const Graph &g);

/// Max over k of ‖A x_k − λ_k x_k‖∞ / max(1, |λ_k|).
double max_scaled_residual(const Graph &g, const EigenSystem &es);

/// Contiguous run of eigenvalue indices [first, last) whose values lie within
/// tol·max(1, |λ_first|) of the leading one.
struct FrequencyGroup {
  std::size_t first = 0;
  std::size_t last = 0;
  double frequency = 0.0; // eigenvalue of the group leader

  std::size_t size() const noexcept { return last - first; }
};

std::vector<FrequencyGroup>
frequency_groups(const EigenSystem &es, double tol = kDefaultDegeneracyTol);

/// α_{l,j}(t) = Σ_n e^{iλ_n t} x_n(l) x_n(j). Positions, not labels. The
/// walk generator is e^{+iAt} with unit coupling.
std::complex<double> amplitude(const EigenSystem &es, std::size_t source,
                               std::size_t target, double t);

/// π_{l,j}(t) = |α_{l,j}(t)|².
double probability(const EigenSystem &es, std::size_t source,
                   std::size_t target, double t);

/// Coefficients p_{l,n} = x_n(l) x_n(j) of the walk amplitude from one
/// source, per vertex l and frequency n, plus their degeneracy grouping.
/// Group sums are basis independent (entries of spectral projectors).
class IntensityVector {
public:
  IntensityVector(std::size_t source, Eigen::MatrixXd p,
                  std::vector<FrequencyGroup> groups);

  std::size_t source() const noexcept { return source_; }
  std::size_t vertex_count() const noexcept {
    return static_cast<std::size_t>(p_.rows());
  }
  const Eigen::MatrixXd &matrix() const noexcept { return p_; }
  double at(std::size_t vertex, std::size_t frequency) const {
    return p_(static_cast<Eigen::Index>(vertex),
              static_cast<Eigen::Index>(frequency));
  }

  const std::vector<FrequencyGroup> &groups() const noexcept { return groups_; }
  double grouped(std::size_t vertex, std::size_t group) const;
  /// grouped(·, 0): the degeneracy-summed principal intensity.
  double principal(std::size_t vertex) const { return grouped(vertex, 0); }

private:
  std::size_t source_;
  Eigen::MatrixXd p_;
  std::vector<FrequencyGroup> groups_;
};

IntensityVector intensities(const EigenSystem &es, std::size_t source,
                            double degeneracy_tol = kDefaultDegeneracyTol);

/// Grouped principal intensity of every vertex from one source, without
/// materialising the full n×n coefficient matrix.
std::vector<double>
principal_intensities(const EigenSystem &es, std::size_t source,
                      double degeneracy_tol = kDefaultDegeneracyTol);

/// Exact walk counts (A^s)_{l,j} for s = 0..s_max.
class WalkTable {
public:
  WalkTable(std::size_t n, std::vector<std::vector<BigInt>> powers);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t max_length() const noexcept { return powers_.size() - 1; }
  const BigInt &count(std::size_t s, std::size_t l, std::size_t j) const {
    return powers_.at(s).at(l * n_ + j);
  }

private:
  std::size_t n_;
  std::vector<std::vector<BigInt>> powers_; // row-major n×n per length
};

WalkTable walk_counts(const Graph &g, std::size_t s_max);

/// Σ_n λ_n^s x_n(l) x_n(j), the spectral prediction of (A^s)_{l,j}.
double spectral_walk_count(const EigenSystem &es, std::size_t s,
                           std::size_t l, std::size_t j);

/// One "vertex,lambda,p" row per (vertex, eigenvalue) pair, header included.
void write_intensity_csv(std::ostream &out, const EigenSystem &es,
                         const IntensityVector &iv);

} // namespace ctqw
