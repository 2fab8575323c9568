#include "ctqw/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace ctqw {

namespace {

constexpr double kZeroEntry = 1e-10;

Eigen::MatrixXd adjacency_matrix(const Graph &g) {
  const auto n = static_cast<Eigen::Index>(g.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (g.adjacent(static_cast<std::size_t>(i), static_cast<std::size_t>(j))) {
        a(i, j) = 1.0;
      }
    }
  }
  return a;
}

void fix_sign_first_nonzero(Eigen::Ref<Eigen::VectorXd> x) {
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (std::abs(x(i)) > kZeroEntry) {
      if (x(i) < 0.0) {
        x = -x;
      }
      return;
    }
  }
}

} // namespace

EigenSystem eigendecompose(const Graph &g) {
  EigenSystem es;
  es.labels = g.labels();
  const auto n = static_cast<Eigen::Index>(g.size());
  if (n == 0) {
    return es;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adjacency_matrix(g));
  // Eigen returns ascending order.
  es.values = solver.eigenvalues().reverse();
  es.vectors = solver.eigenvectors().rowwise().reverse();

  if (es.vectors.col(0).sum() < -kZeroEntry) {
    es.vectors.col(0) *= -1.0;
  } else if (std::abs(es.vectors.col(0).sum()) <= kZeroEntry) {
    fix_sign_first_nonzero(es.vectors.col(0));
  }
  for (Eigen::Index k = 1; k < n; ++k) {
    fix_sign_first_nonzero(es.vectors.col(k));
  }
  return es;
}

double max_scaled_residual(const Graph &g, const EigenSystem &es) {
  const Eigen::MatrixXd a = adjacency_matrix(g);
  double worst = 0.0;
  for (Eigen::Index k = 0; k < es.values.size(); ++k) {
    const double lambda = es.values(k);
    const Eigen::VectorXd r = a * es.vectors.col(k) - lambda * es.vectors.col(k);
    worst = std::max(worst, r.lpNorm<Eigen::Infinity>() /
                                std::max(1.0, std::abs(lambda)));
  }
  return worst;
}

std::vector<FrequencyGroup> frequency_groups(const EigenSystem &es,
                                             double tol) {
  std::vector<FrequencyGroup> out;
  const std::size_t n = es.size();
  std::size_t k = 0;
  while (k < n) {
    const double lead = es.values(static_cast<Eigen::Index>(k));
    const double width = tol * std::max(1.0, std::abs(lead));
    std::size_t end = k + 1;
    while (end < n &&
           lead - es.values(static_cast<Eigen::Index>(end)) <= width) {
      ++end;
    }
    out.push_back({k, end, lead});
    k = end;
  }
  return out;
}

std::complex<double> amplitude(const EigenSystem &es, std::size_t source,
                               std::size_t target, double t) {
  const auto j = static_cast<Eigen::Index>(source);
  const auto l = static_cast<Eigen::Index>(target);
  std::complex<double> sum{0.0, 0.0};
  for (Eigen::Index k = 0; k < es.values.size(); ++k) {
    const double coeff = es.vectors(l, k) * es.vectors(j, k);
    sum += coeff * std::polar(1.0, es.values(k) * t);
  }
  return sum;
}

double probability(const EigenSystem &es, std::size_t source,
                   std::size_t target, double t) {
  return std::norm(amplitude(es, source, target, t));
}

IntensityVector::IntensityVector(std::size_t source, Eigen::MatrixXd p,
                                 std::vector<FrequencyGroup> groups)
    : source_(source), p_(std::move(p)), groups_(std::move(groups)) {}

double IntensityVector::grouped(std::size_t vertex, std::size_t group) const {
  const auto &grp = groups_.at(group);
  double sum = 0.0;
  for (std::size_t k = grp.first; k < grp.last; ++k) {
    sum += at(vertex, k);
  }
  return sum;
}

IntensityVector intensities(const EigenSystem &es, std::size_t source,
                            double degeneracy_tol) {
  const auto j = static_cast<Eigen::Index>(source);
  // p(l, k) = x_k(l) · x_k(j)
  Eigen::MatrixXd p = es.vectors * es.vectors.row(j).asDiagonal();
  return IntensityVector(source, std::move(p),
                         frequency_groups(es, degeneracy_tol));
}

std::vector<double> principal_intensities(const EigenSystem &es,
                                          std::size_t source,
                                          double degeneracy_tol) {
  const std::size_t n = es.size();
  std::vector<double> out(n, 0.0);
  if (n == 0) {
    return out;
  }
  const double lead = es.values(0);
  const double width = degeneracy_tol * std::max(1.0, std::abs(lead));
  const auto j = static_cast<Eigen::Index>(source);
  for (Eigen::Index k = 0; k < es.values.size(); ++k) {
    if (lead - es.values(k) > width) {
      break;
    }
    const double xj = es.vectors(j, k);
    for (std::size_t l = 0; l < n; ++l) {
      out[l] += es.vectors(static_cast<Eigen::Index>(l), k) * xj;
    }
  }
  return out;
}

WalkTable::WalkTable(std::size_t n, std::vector<std::vector<BigInt>> powers)
    : n_(n), powers_(std::move(powers)) {}

WalkTable walk_counts(const Graph &g, std::size_t s_max) {
  const std::size_t n = g.size();
  std::vector<std::vector<BigInt>> powers;
  powers.reserve(s_max + 1);

  std::vector<BigInt> identity(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    identity[i * n + i] = 1;
  }
  powers.push_back(std::move(identity));

  std::vector<std::vector<std::size_t>> nbrs(n);
  for (std::size_t i = 0; i < n; ++i) {
    nbrs[i] = g.neighbors(i);
  }
  // A^{s+1} = A · A^s; A is 0/1 so each entry is a sum over neighbours.
  for (std::size_t s = 0; s < s_max; ++s) {
    const auto &prev = powers.back();
    std::vector<BigInt> next(n * n);
    for (std::size_t l = 0; l < n; ++l) {
      for (std::size_t j = 0; j < n; ++j) {
        BigInt acc = 0;
        for (std::size_t k : nbrs[l]) {
          acc += prev[k * n + j];
        }
        next[l * n + j] = std::move(acc);
      }
    }
    powers.push_back(std::move(next));
  }
  return WalkTable(n, std::move(powers));
}

double spectral_walk_count(const EigenSystem &es, std::size_t s,
                           std::size_t l, std::size_t j) {
  double sum = 0.0;
  for (Eigen::Index k = 0; k < es.values.size(); ++k) {
    sum += std::pow(es.values(k), static_cast<double>(s)) *
           es.vectors(static_cast<Eigen::Index>(l), k) *
           es.vectors(static_cast<Eigen::Index>(j), k);
  }
  return sum;
}

void write_intensity_csv(std::ostream &out, const EigenSystem &es,
                         const IntensityVector &iv) {
  const auto old_precision = out.precision(17);
  out << "vertex,lambda,p\n";
  for (std::size_t l = 0; l < iv.vertex_count(); ++l) {
    for (std::size_t k = 0; k < es.size(); ++k) {
      out << es.labels.at(l) << ',' << es.values(static_cast<Eigen::Index>(k))
          << ',' << iv.at(l, k) << '\n';
    }
  }
  out.precision(old_precision);
}

} // namespace ctqw
