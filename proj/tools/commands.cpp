#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "ctqw/graph_io.hpp"
#include "ctqw/ideal.hpp"
#include "ctqw/oracle.hpp"
#include "ctqw/random_graph.hpp"
#include "ctqw/solver.hpp"
#include "ctqw/spectral.hpp"
#include "experiment.hpp"

namespace ctqw::cli {

namespace {

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::string join(const std::vector<Label> &vs, char sep) {
  std::ostringstream ss;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) {
      ss << sep;
    }
    ss << vs[i];
  }
  return ss.str();
}

// Accepts "1,2,3", "1 2 3" or a mix, possibly split over several tokens.
std::vector<Label> parse_labels(const std::vector<std::string> &tokens) {
  std::vector<Label> out;
  for (auto tok : tokens) {
    std::replace(tok.begin(), tok.end(), ',', ' ');
    std::istringstream ss(tok);
    std::string piece;
    while (ss >> piece) {
      std::size_t used = 0;
      long v = 0;
      try {
        v = std::stol(piece, &used);
      } catch (const std::exception &) {
        used = 0;
      }
      if (used != piece.size()) {
        throw UsageError("cannot parse vertex label '" + piece + "'");
      }
      out.push_back(static_cast<Label>(v));
    }
  }
  return out;
}

GraphFormat resolve_format(const std::string &name, const std::string &path) {
  if (!name.empty()) {
    return parse_format(name);
  }
  return path == "-" ? GraphFormat::kDimacs : format_for_path(path);
}

GraphFile load(const std::string &path, const std::string &format) {
  const GraphFormat f = resolve_format(format, path);
  if (path == "-") {
    return read_graph(std::cin, f);
  }
  std::ifstream in(path);
  if (!in) {
    throw UsageError("cannot open " + path);
  }
  return read_graph(in, f);
}

struct GenerateArgs {
  std::string kind;
  std::optional<std::size_t> n;
  std::optional<double> p;
  std::uint64_t seed = 0;
  std::optional<int> m1, m2, z, omega, q;
  std::string out = "-";
  std::string format;
};

struct SolveArgs {
  std::string path;
  std::string algo = "a";
  std::uint64_t seed = 0;
  std::optional<Label> center;
  std::string format;
  bool trace = false;
};

struct ExperimentArgs {
  std::vector<std::size_t> sizes;
  std::vector<double> probabilities;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  std::vector<std::string> algos{"a", "oracle"};
  std::string out = "-";
  bool timing = false;
  std::size_t oracle_cap = 64;
  unsigned threads = 0;
};

struct VerifyArgs {
  std::string path;
  std::vector<std::string> labels;
  std::string format;
};

struct IntensityArgs {
  std::string path;
  Label source = 0;
  std::string out = "-";
  std::string format;
};

int cmd_generate(const GenerateArgs &a, std::ostream &out) {
  auto need = [&](const auto &opt, const char *flag) {
    if (!opt) {
      throw UsageError("generate " + a.kind + " requires " + flag);
    }
    return *opt;
  };

  Graph g;
  std::vector<std::string> comments;
  std::optional<IdealGraph> ideal;
  if (a.kind == "gnp") {
    const auto n = need(a.n, "--n");
    const auto p = need(a.p, "--p");
    if (!(p >= 0.0 && p <= 1.0)) {
      throw UsageError("--p must lie in [0, 1]");
    }
    g = gnp(n, p, a.seed);
    comments.push_back("gnp n=" + std::to_string(n) +
                       " p=" + format_probability(p) +
                       " seed=" + std::to_string(a.seed));
  } else if (a.kind == "first-kind") {
    const FirstKindSpec spec{need(a.m1, "--m1"), need(a.m2, "--m2")};
    ideal = gen_first_kind(spec);
    comments.push_back("first-kind m1=" + std::to_string(spec.m1) +
                       " m2=" + std::to_string(spec.m2));
  } else if (a.kind == "second-kind") {
    const SecondKindSpec spec{need(a.m1, "--m1"), need(a.m2, "--m2"),
                              need(a.z, "--z")};
    ideal = gen_second_kind(spec);
    comments.push_back("second-kind m1=" + std::to_string(spec.m1) +
                       " m2=" + std::to_string(spec.m2) +
                       " z=" + std::to_string(spec.z));
  } else if (a.kind == "base") {
    const BaseGraphSpec spec{need(a.omega, "--omega"), need(a.q, "--q"),
                             need(a.z, "--z")};
    ideal = gen_base_graph(spec);
    comments.push_back("base omega=" + std::to_string(spec.omega) +
                       " q=" + std::to_string(spec.q) +
                       " z=" + std::to_string(spec.z));
  } else {
    throw UsageError("unknown generator '" + a.kind +
                     "' (expected gnp, first-kind, second-kind or base)");
  }
  if (ideal) {
    g = ideal->graph;
    comments.push_back("center " + std::to_string(ideal->center));
    comments.push_back("planted_mc " + join(ideal->planted, ' '));
  }

  const GraphFormat f = resolve_format(a.format, a.out);
  if (a.out == "-") {
    write_graph(out, g, f, comments);
  } else {
    write_graph(a.out, g, f, comments);
  }
  return kOk;
}

SolveResult best_over_centers(
    const Graph &g, const std::optional<Label> &center,
    SolveResult (*sub)(const Graph &, Label, const SolverConfig &),
    const SolverConfig &cfg, const char *source) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<Label> centers =
      center ? std::vector<Label>{*center} : g.labels();
  std::sort(centers.begin(), centers.end());
  SolveResult best;
  for (Label v : centers) {
    SolveResult r = sub(center_subgraph(g, v), v, cfg);
    if (r.clique.size() > best.clique.size()) {
      best = std::move(r);
    }
  }
  best.clique = Clique::certify(g, best.clique.members(), source);
  best.elapsed_ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  return best;
}

void print_trace(std::ostream &out, const SolveTrace &trace) {
  out << "trace depth=" << trace.recursion_depth
      << " steps=" << trace.steps.size() << '\n';
  for (const auto &s : trace.steps) {
    out << "  " << s.op << " vertex=" << s.vertex
        << " frequency=" << s.frequency << " intensity=" << s.intensity << '\n';
  }
}

int cmd_solve(const SolveArgs &a, std::ostream &out) {
  const GraphFile file = load(a.path, a.format);
  const Graph &g = file.graph;
  SolverConfig cfg;
  cfg.record_trace = a.trace;

  out << std::fixed << std::setprecision(3);
  if (a.algo == "oracle") {
    const auto start = std::chrono::steady_clock::now();
    const OracleResult r = max_clique_exact(g);
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    out << "algo=oracle size=" << r.omega << " ms=" << ms
        << " seed=" << a.seed << " clique="
        << (r.witnesses.empty() ? "" : join(r.witnesses.front(), ',')) << '\n';
    return kOk;
  }
  if (a.algo == "c") {
    const MultiSolveResult r = algorithm_c(g, cfg);
    const std::size_t size = r.cliques.empty() ? 0 : r.cliques.front().size();
    out << "algo=c size=" << size << " ms=" << r.elapsed_ms
        << " seed=" << a.seed << " count=" << r.cliques.size() << " cliques=";
    for (std::size_t i = 0; i < r.cliques.size(); ++i) {
      out << (i ? ";" : "") << join(r.cliques[i].members(), ',');
    }
    out << '\n';
    if (a.trace) {
      print_trace(out, r.trace);
    }
    return kOk;
  }

  SolveResult r;
  if (a.algo == "a") {
    r = algorithm_a(g, cfg);
  } else if (a.algo == "b") {
    r = algorithm_b(g, cfg);
  } else if (a.algo == "pickmax") {
    r = best_over_centers(g, a.center, &pick_max, cfg, "pick_max");
  } else if (a.algo == "deletemin") {
    r = best_over_centers(g, a.center, &delete_min, cfg, "delete_min");
  } else {
    throw UsageError("unknown algorithm '" + a.algo +
                     "' (expected a, b, c, oracle, pickmax or deletemin)");
  }
  out << "algo=" << a.algo << " size=" << r.clique.size()
      << " ms=" << r.elapsed_ms << " seed=" << a.seed
      << " clique=" << join(r.clique.members(), ',') << '\n';
  if (a.trace) {
    print_trace(out, r.trace);
  }
  return kOk;
}

int cmd_experiment(const ExperimentArgs &a, std::ostream &out) {
  ExperimentConfig cfg;
  cfg.sizes = a.sizes;
  cfg.probabilities = a.probabilities;
  cfg.trials = a.trials;
  cfg.seed = a.seed;
  cfg.algorithms = a.algos;
  cfg.timing = a.timing;
  cfg.oracle_cap = a.oracle_cap;
  cfg.threads = a.threads;
  try {
    validate(cfg);
  } catch (const std::invalid_argument &e) {
    throw UsageError(e.what());
  }
  const auto rows = run_experiment(cfg);
  if (a.out == "-") {
    write_report_csv(out, rows, cfg.timing);
  } else {
    std::ofstream csv(a.out);
    if (!csv) {
      throw UsageError("cannot write " + a.out);
    }
    write_report_csv(csv, rows, cfg.timing);
    write_summary(out, rows);
  }
  return kOk;
}

int cmd_verify(const VerifyArgs &a, std::ostream &out) {
  const GraphFile file = load(a.path, a.format);
  const auto labels = parse_labels(a.labels);
  for (Label v : labels) {
    if (!file.graph.contains(v)) {
      throw UsageError("unknown vertex label " + std::to_string(v));
    }
  }
  if (auto bad = first_non_adjacent_pair(file.graph, labels)) {
    out << "not a clique: vertices " << bad->first << " and " << bad->second
        << " are not adjacent (violating pair (" << bad->first << ","
        << bad->second << "))\n";
    return kVerifyFailed;
  }
  out << "ok: clique of size " << labels.size() << '\n';
  return kOk;
}

int cmd_intensities(const IntensityArgs &a, std::ostream &out) {
  const GraphFile file = load(a.path, a.format);
  const auto source = file.graph.find(a.source);
  if (!source) {
    throw UsageError("unknown vertex label " + std::to_string(a.source));
  }
  const EigenSystem es = eigendecompose(file.graph);
  const IntensityVector iv = intensities(es, *source);
  if (a.out == "-") {
    write_intensity_csv(out, es, iv);
  } else {
    std::ofstream csv(a.out);
    if (!csv) {
      throw UsageError("cannot write " + a.out);
    }
    write_intensity_csv(csv, es, iv);
  }
  return kOk;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Maximum-clique heuristics driven by continuous-time quantum "
               "walk intensities",
               "ctqw-clique"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto *generate = app.add_subcommand("generate", "Write a graph as DIMACS");
  generate->add_option("kind", gen.kind, "gnp | first-kind | second-kind | base")
      ->required();
  generate->add_option("--n", gen.n, "vertex count (gnp)");
  generate->add_option("--p", gen.p, "edge probability (gnp)");
  generate->add_option("--seed", gen.seed, "RNG seed (gnp)");
  generate->add_option("--m1", gen.m1, "planted clique size");
  generate->add_option("--m2", gen.m2, "second clique size / part count + 1");
  generate->add_option("--z", gen.z, "vertices per independent set");
  generate->add_option("--omega", gen.omega, "planted clique size (base)");
  generate->add_option("--q", gen.q, "number of parts (base)");
  generate->add_option("-o,--out", gen.out, "output path, - for stdout");
  generate->add_option("--format", gen.format, "dimacs | edgelist");

  SolveArgs sol;
  auto *solve = app.add_subcommand("solve", "Find a large clique");
  solve->add_option("graph", sol.path, "graph file, - for stdin")->required();
  solve->add_option("--algo", sol.algo,
                    "a | b | c | oracle | pickmax | deletemin");
  solve->add_option("--seed", sol.seed, "recorded in the output row");
  solve->add_option("--center", sol.center,
                    "center label for pickmax/deletemin (default: all)");
  solve->add_option("--format", sol.format, "dimacs | edgelist");
  solve->add_flag("--trace", sol.trace, "print the solver trace");

  ExperimentArgs exp;
  auto *experiment =
      app.add_subcommand("experiment", "Random-graph batch against the oracle");
  experiment->add_option("--n", exp.sizes, "graph sizes")
      ->required()
      ->delimiter(',');
  experiment->add_option("--p", exp.probabilities, "edge probabilities")
      ->required()
      ->delimiter(',');
  experiment->add_option("--trials", exp.trials, "graphs per (n, p)");
  experiment->add_option("--seed", exp.seed, "master seed");
  experiment->add_option("--algos", exp.algos, "subset of a,b,c,oracle")
      ->delimiter(',');
  experiment->add_option("-o,--out", exp.out, "CSV path, - for stdout");
  experiment->add_flag("--timing", exp.timing, "fill the ms column");
  experiment->add_option("--oracle-cap", exp.oracle_cap,
                         "largest n given an exact omega");
  experiment->add_option("--threads", exp.threads,
                         "worker threads (default CTQW_CLIQUE_THREADS)");

  VerifyArgs ver;
  auto *verify = app.add_subcommand("verify", "Check that labels form a clique");
  verify->add_option("graph", ver.path, "graph file, - for stdin")->required();
  verify->add_option("labels", ver.labels, "vertex labels (comma or space separated)");
  verify->add_option("--clique", ver.labels, "vertex labels, comma separated");
  verify->add_option("--format", ver.format, "dimacs | edgelist");

  IntensityArgs ints;
  auto *intens = app.add_subcommand(
      "intensities", "CSV of per-vertex frequency intensities from a source");
  intens->add_option("graph", ints.path, "graph file, - for stdin")->required();
  intens->add_option("--source", ints.source, "source vertex label")->required();
  intens->add_option("-o,--out", ints.out, "CSV path, - for stdout");
  intens->add_option("--format", ints.format, "dimacs | edgelist");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*generate) {
      return cmd_generate(gen, out);
    }
    if (*solve) {
      return cmd_solve(sol, out);
    }
    if (*experiment) {
      return cmd_experiment(exp, out);
    }
    if (*verify) {
      return cmd_verify(ver, out);
    }
    if (*intens) {
      return cmd_intensities(ints, out);
    }
  } catch (const ParseError &e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const SpecError &e) {
    err << "invalid parameters: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const GraphError &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const OracleCapError &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

} // namespace ctqw::cli
