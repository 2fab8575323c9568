#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ctqw::cli {

/// Grid of random-graph trials. Each (n, p, trial) cell draws its graph from
/// derive_seed(seed, n, p, trial), so any row can be regenerated alone.
struct ExperimentConfig {
  std::vector<std::size_t> sizes;
  std::vector<double> probabilities;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  /// Subset of {"a", "b", "c", "oracle"}.
  std::vector<std::string> algorithms;
  std::size_t oracle_cap = 64;
  /// Fill the ms column. Off by default so reports are byte-reproducible.
  bool timing = false;
  /// 0 = CTQW_CLIQUE_THREADS or hardware concurrency.
  unsigned threads = 0;
};

struct ReportRow {
  std::size_t n = 0;
  double p = 0.0;
  std::size_t trial = 0;
  std::string algo;
  std::optional<std::size_t> size;
  std::optional<std::size_t> omega; // empty above the oracle cap
  double ms = 0.0;
  std::uint64_t seed = 0; // graph seed for `generate gnp --seed`
  std::string error;

  std::optional<bool> match() const {
    if (!size || !omega) {
      return std::nullopt;
    }
    return *size == *omega;
  }
};

/// Throws std::invalid_argument on an invalid configuration.
void validate(const ExperimentConfig &cfg);

/// Rows in (n, p, trial, algo) order, algo order a, b, c, oracle.
std::vector<ReportRow> run_experiment(const ExperimentConfig &cfg);

void write_report_csv(std::ostream &out, const std::vector<ReportRow> &rows,
                      bool timing);

/// Match rate per (n, p, algo).
void write_summary(std::ostream &out, const std::vector<ReportRow> &rows);

/// Shortest round-trip decimal form of p.
std::string format_probability(double p);

/// CTQW_CLIQUE_THREADS if set and positive, else hardware concurrency (>= 1).
unsigned default_thread_count();

} // namespace ctqw::cli
