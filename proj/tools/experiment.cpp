#include "experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <map>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "ctqw/oracle.hpp"
#include "ctqw/random_graph.hpp"
#include "ctqw/solver.hpp"

namespace ctqw::cli {

namespace {

const std::vector<std::string> kAlgorithmOrder{"a", "b", "c", "oracle"};

struct Cell {
  std::size_t n;
  double p;
  std::size_t trial;
};

std::vector<ReportRow> run_cell(const Cell &cell, const ExperimentConfig &cfg,
                                const std::vector<std::string> &algos) {
  const std::uint64_t graph_seed =
      derive_seed(cfg.seed, cell.n, cell.p, cell.trial);
  const Graph g = gnp(cell.n, cell.p, graph_seed);

  std::optional<std::size_t> omega;
  double oracle_ms = 0.0;
  std::string oracle_error;
  if (cell.n <= cfg.oracle_cap) {
    const auto start = std::chrono::steady_clock::now();
    try {
      omega = max_clique_exact(g, {.max_vertices = cfg.oracle_cap}).omega;
    } catch (const std::exception &e) {
      oracle_error = e.what();
    }
    oracle_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  }

  SolverConfig scfg;
  scfg.record_trace = false;

  std::vector<ReportRow> rows;
  for (const auto &algo : algos) {
    ReportRow row{cell.n, cell.p, cell.trial, algo, {}, omega, 0.0, graph_seed, {}};
    try {
      if (algo == "a") {
        const auto r = algorithm_a(g, scfg);
        row.size = r.clique.size();
        row.ms = r.elapsed_ms;
      } else if (algo == "b") {
        const auto r = algorithm_b(g, scfg);
        row.size = r.clique.size();
        row.ms = r.elapsed_ms;
      } else if (algo == "c") {
        const auto r = algorithm_c(g, scfg);
        row.size = r.cliques.empty() ? 0 : r.cliques.front().size();
        row.ms = r.elapsed_ms;
      } else if (algo == "oracle") {
        if (!oracle_error.empty()) {
          row.error = oracle_error;
        } else {
          row.size = omega;
        }
        row.ms = oracle_ms;
      }
    } catch (const std::exception &e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace

std::string format_probability(double p) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), p);
  return std::string(buf, res.ptr);
}

unsigned default_thread_count() {
  if (const char *env = std::getenv("CTQW_CLIQUE_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) {
      return static_cast<unsigned>(v);
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void validate(const ExperimentConfig &cfg) {
  if (cfg.sizes.empty() || cfg.probabilities.empty()) {
    throw std::invalid_argument("experiment needs at least one n and one p");
  }
  for (double p : cfg.probabilities) {
    if (!(p > 0.0 && p < 1.0)) {
      throw std::invalid_argument("edge probability must satisfy 0 < p < 1, got " +
                                  format_probability(p));
    }
  }
  if (cfg.trials < 1) {
    throw std::invalid_argument("trials must be >= 1");
  }
  if (cfg.algorithms.empty()) {
    throw std::invalid_argument("no algorithms selected");
  }
  for (const auto &a : cfg.algorithms) {
    if (std::find(kAlgorithmOrder.begin(), kAlgorithmOrder.end(), a) ==
        kAlgorithmOrder.end()) {
      throw std::invalid_argument("unknown algorithm '" + a +
                                  "' (expected a, b, c or oracle)");
    }
  }
}

std::vector<ReportRow> run_experiment(const ExperimentConfig &cfg) {
  validate(cfg);
  std::vector<std::string> algos;
  for (const auto &a : kAlgorithmOrder) {
    if (std::find(cfg.algorithms.begin(), cfg.algorithms.end(), a) !=
        cfg.algorithms.end()) {
      algos.push_back(a);
    }
  }

  std::vector<Cell> cells;
  for (std::size_t n : cfg.sizes) {
    for (double p : cfg.probabilities) {
      for (std::size_t t = 0; t < cfg.trials; ++t) {
        cells.push_back({n, p, t});
      }
    }
  }

  std::vector<std::vector<ReportRow>> results(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      results[i] = run_cell(cells[i], cfg, algos);
    }
  };
  const unsigned threads =
      std::min<std::size_t>(cfg.threads ? cfg.threads : default_thread_count(),
                            std::max<std::size_t>(1, cells.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back(worker);
    }
  }

  std::vector<ReportRow> rows;
  for (auto &r : results) {
    for (auto &row : r) {
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

void write_report_csv(std::ostream &out, const std::vector<ReportRow> &rows,
                      bool timing) {
  out << "n,p,trial,algo,size,omega,match,ms,seed\n";
  for (const auto &r : rows) {
    out << r.n << ',' << format_probability(r.p) << ',' << r.trial << ','
        << r.algo << ',';
    if (r.size) {
      out << *r.size;
    } else if (!r.error.empty()) {
      out << "error";
    }
    out << ',';
    if (r.omega) {
      out << *r.omega;
    }
    out << ',';
    if (auto m = r.match()) {
      out << (*m ? 1 : 0);
    }
    out << ',';
    if (timing) {
      out << std::fixed << std::setprecision(3) << r.ms << std::defaultfloat;
    }
    out << ',' << r.seed << '\n';
  }
}

void write_summary(std::ostream &out, const std::vector<ReportRow> &rows) {
  struct Tally {
    std::size_t rows = 0;
    std::size_t compared = 0;
    std::size_t matched = 0;
    std::size_t errors = 0;
    double ms = 0.0;
  };
  // keyed by (n, p, algo position)
  std::map<std::tuple<std::size_t, double, std::size_t>, Tally> tallies;
  for (const auto &r : rows) {
    const auto pos = static_cast<std::size_t>(
        std::find(kAlgorithmOrder.begin(), kAlgorithmOrder.end(), r.algo) -
        kAlgorithmOrder.begin());
    auto &t = tallies[{r.n, r.p, pos}];
    ++t.rows;
    t.ms += r.ms;
    if (!r.error.empty()) {
      ++t.errors;
    }
    if (auto m = r.match()) {
      ++t.compared;
      t.matched += *m ? 1 : 0;
    }
  }
  out << std::left << std::setw(6) << "n" << std::setw(8) << "p" << std::setw(8)
      << "algo" << std::setw(8) << "trials" << std::setw(9) << "matched"
      << std::setw(8) << "rate" << "errors\n";
  for (const auto &[key, t] : tallies) {
    const auto &[n, p, pos] = key;
    out << std::left << std::setw(6) << n << std::setw(8)
        << format_probability(p) << std::setw(8) << kAlgorithmOrder[pos]
        << std::setw(8) << t.rows << std::setw(9) << t.matched;
    if (t.compared > 0) {
      out << std::setw(8) << std::fixed << std::setprecision(3)
          << static_cast<double>(t.matched) / static_cast<double>(t.compared)
          << std::defaultfloat;
    } else {
      out << std::setw(8) << "-";
    }
    out << t.errors << '\n';
  }
}

} // namespace ctqw::cli
