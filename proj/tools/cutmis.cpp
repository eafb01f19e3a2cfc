// cutmis: command-line front end for the solvers, generators and experiments.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "cutmis/anneal.hpp"
#include "cutmis/error.hpp"
#include "cutmis/graph.hpp"
#include "cutmis/greedy.hpp"
#include "cutmis/harness.hpp"
#include "cutmis/oracle.hpp"
#include "cutmis/rank2.hpp"

namespace {

using namespace cutmis;

enum ExitCode { kOk = 0, kUsage = 1, kData = 2, kInvariant = 3 };

struct SolverFlags {
  std::string solver = "min";
  std::size_t runs = 1;
  std::uint64_t seed = 1;
  std::size_t sweeps = 1000;
  std::size_t reads = 1;
  std::string schedule = "geometric";
  std::string order = "sequential";
  std::optional<double> beta_hot;
  std::optional<double> beta_cold;
  std::optional<std::string> filter;
  std::size_t rank2_iters = 500;
  std::size_t rank2_restarts = 1;
  std::string output;
  std::string trace;
  std::size_t trace_stride = 100;
  std::string angles;
};

void add_solver_flags(CLI::App* cmd, SolverFlags& f) {
  cmd->add_option("--runs", f.runs, "Independent seeded runs; the best is kept")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", f.seed, "Base seed");
  cmd->add_option("--sweeps", f.sweeps, "SA sweeps per read")->check(CLI::PositiveNumber);
  cmd->add_option("--reads", f.reads, "SA reads per run")->check(CLI::PositiveNumber);
  cmd->add_option("--schedule", f.schedule, "SA beta schedule")
      ->check(CLI::IsMember({"geometric", "linear"}));
  cmd->add_option("--order", f.order, "SA visit order")
      ->check(CLI::IsMember({"sequential", "random"}));
  cmd->add_option("--beta-hot", f.beta_hot, "Initial inverse temperature");
  cmd->add_option("--beta-cold", f.beta_cold, "Final inverse temperature");
  cmd->add_option("--rank2-iters", f.rank2_iters, "Rank-2 coordinate ascent passes");
  cmd->add_option("--rank2-restarts", f.rank2_restarts, "Rank-2 random restarts")
      ->check(CLI::PositiveNumber);
  cmd->add_option("-o,--output", f.output, "Write the solution here");
  cmd->add_option("--trace", f.trace, "Write a CSV trace of the first run");
  cmd->add_option("--trace-stride", f.trace_stride, "SA trace sampling stride in sweeps")
      ->check(CLI::PositiveNumber);
}

SolverSettings settings_from(const SolverFlags& f) {
  SolverSettings s;
  s.anneal.num_sweeps = f.sweeps;
  s.anneal.num_reads = f.reads;
  s.anneal.schedule = parse_beta_schedule(f.schedule);
  s.anneal.order = f.order == "random" ? VisitOrder::random : VisitOrder::sequential;
  s.anneal.beta_hot = f.beta_hot;
  s.anneal.beta_cold = f.beta_cold;
  s.rank2.max_iters = f.rank2_iters;
  s.rank2.restarts = f.rank2_restarts;
  return s;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  return out;
}

void write_sa_trace(const IsingModel& m, const SolverSettings& settings, std::uint64_t seed,
                    const SolverFlags& f) {
  AnnealParams p = settings.anneal;
  p.seed = seed;
  AnnealTrace trace{f.trace_stride, {}};
  simulated_annealing(m, p, &trace);
  auto out = open_output(f.trace);
  write_anneal_trace_csv(out, trace);
}

int solve_mis_cmd(const std::string& file, SolverFlags& f) {
  const Solver solver = parse_solver(f.solver);
  SolverSettings settings = settings_from(f);
  if (f.filter) settings.filters[solver] = parse_prune_filter(*f.filter);
  const Graph g = read_graph_file(file);

  IndependentSet best;
  for (std::size_t rep = 0; rep < f.runs; ++rep) {
    IndependentSet s = solve_mis(g, solver, run_seed(f.seed, solver, rep), settings);
    if (rep == 0 || s.size() > best.size()) best = std::move(s);
  }
  if (!is_independent(g, best)) throw InvariantError("solver returned a dependent set");
  if (!f.trace.empty()) {
    if (solver != Solver::sa) throw UsageError("solve-mis --trace needs --solver sa");
    write_sa_trace(mis_to_ising(g), settings, run_seed(f.seed, solver, 0), f);
  }
  if (!f.output.empty()) {
    auto out = open_output(f.output);
    write_independent_set(out, best);
  }
  std::cout << best.size() << '\n';
  return kOk;
}

int solve_maxcut_cmd(const std::string& file, SolverFlags& f) {
  const Solver solver = parse_solver(f.solver);
  if (!is_ising_solver(solver)) throw UsageError("solve-maxcut needs an Ising-form solver");
  const SolverSettings settings = settings_from(f);
  const MaxCutInstance c = MaxCutInstance::from_graph(read_graph_file(file));

  CutPartition best;
  double best_weight = 0.0;
  for (std::size_t rep = 0; rep < f.runs; ++rep) {
    CutPartition cut = solve_maxcut(c, solver, run_seed(f.seed, solver, rep), settings);
    const double w = cut_weight(c, cut);
    if (rep == 0 || w > best_weight) {
      best = std::move(cut);
      best_weight = w;
    }
  }

  const std::uint64_t first = run_seed(f.seed, solver, 0);
  if (!f.trace.empty()) {
    if (solver == Solver::sa) {
      write_sa_trace(maxcut_to_ising(c), settings, first, f);
    } else if (solver != Solver::rank2) {
      GreedyTrace trace;
      if (solver == Solver::sg) maxcut_sg(c, first, &trace);
      if (solver == Solver::sg3) maxcut_sg3(c, first, &trace);
      if (solver == Solver::ec) maxcut_ec(c, first, &trace);
      if (solver == Solver::sec) maxcut_sec(c, first, &trace);
      auto out = open_output(f.trace);
      write_trace_csv(out, trace);
    } else {
      Rank2Params p = settings.rank2;
      p.seed = first;
      std::vector<double> history;
      relax_angles(c, p, &history);
      auto out = open_output(f.trace);
      out.precision(17);
      out << "step,value\n";
      for (std::size_t i = 0; i < history.size(); ++i) out << i << ',' << history[i] << '\n';
    }
  }
  if (!f.angles.empty()) {
    if (solver != Solver::rank2) throw UsageError("--angles needs --solver rank2");
    Rank2Params p = settings.rank2;
    p.seed = first;
    auto out = open_output(f.angles);
    write_angles_csv(out, relax_angles(c, p));
  }
  if (!f.output.empty()) {
    auto out = open_output(f.output);
    for (std::size_t v = 0; v < best.size(); ++v) out << v << ' ' << best.side(v) << '\n';
  }
  std::cout.precision(17);
  std::cout << best_weight << '\n';
  return kOk;
}

void write_graph(const Graph& g, const std::string& path, const std::string& format) {
  auto emit = [&](std::ostream& out) {
    if (format == "dimacs") write_dimacs(out, g);
    else write_edge_list(out, g);
  };
  if (path.empty() || path == "-") {
    emit(std::cout);
  } else {
    auto out = open_output(path);
    emit(out);
  }
}

struct BenchFlags {
  std::string config;
  std::string output;
  std::string summary;
  std::string witness;
  bool store_witness = false;
  std::optional<std::size_t> threads;
};

int bench_cmd(const std::string& kind, const BenchFlags& f) {
  ExperimentConfig config = load_experiment_config(f.config);
  if (config.experiment != parse_experiment_kind(kind))
    throw UsageError("config describes a " + std::string(to_string(config.experiment)) +
                     " experiment, not " + kind);
  if (!f.output.empty()) config.output_path = f.output;
  if (f.store_witness || !f.witness.empty()) config.store_witness = true;
  if (f.threads) config.threads = *f.threads;

  const auto records = run_experiment(config);
  if (config.output_path.empty()) {
    write_records_csv(std::cout, records);
  } else {
    auto out = open_output(config.output_path.string());
    write_records_csv(out, records);
  }
  const auto rows = summarize(records);
  if (!f.summary.empty()) {
    auto out = open_output(f.summary);
    write_summary_csv(out, rows);
  } else {
    write_summary_csv(std::cerr, rows);
  }
  if (!f.witness.empty()) {
    auto out = open_output(f.witness);
    write_witness_csv(out, records);
  }
  return kOk;
}

int run(int argc, char** argv) {
  CLI::App app{"Max-Cut and maximum independent set heuristics via Ising models"};
  app.require_subcommand(1);

  std::string file;
  SolverFlags mis_flags;
  auto* mis = app.add_subcommand("solve-mis", "Approximate a maximum independent set");
  mis->add_option("file", file, "Graph file (DIMACS or edge list)")->required();
  mis->add_option("--solver", mis_flags.solver, "Solver")
      ->check(CLI::IsMember({"min", "max", "sg", "sg3", "ec", "sec", "sa", "rank2"}));
  mis->add_option("--filter", mis_flags.filter, "Repair filter for Ising-form solvers")
      ->check(CLI::IsMember({"naive", "min-filter", "max-filter"}));
  add_solver_flags(mis, mis_flags);

  SolverFlags cut_flags;
  cut_flags.solver = "sg3";
  auto* cut = app.add_subcommand("solve-maxcut", "Approximate a maximum cut");
  cut->add_option("file", file, "Weighted graph file")->required();
  cut->add_option("--solver", cut_flags.solver, "Solver")
      ->check(CLI::IsMember({"sg", "sg3", "ec", "sec", "sa", "rank2"}));
  cut->add_option("--angles", cut_flags.angles, "Write rank-2 angles of the first run as CSV");
  add_solver_flags(cut, cut_flags);

  auto* gen = app.add_subcommand("gen", "Generate random instances");
  gen->require_subcommand(1);
  std::size_t n = 0, d = 0;
  double p = 0.5;
  std::uint64_t seed = 1;
  std::string out_path, format = "dimacs";
  auto gen_common = [&](CLI::App* sub) {
    sub->add_option("-n,--vertices", n, "Number of vertices")->required();
    sub->add_option("--seed", seed, "Seed");
    sub->add_option("-o,--output", out_path, "Output file (default stdout)");
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"dimacs", "edges"}));
  };
  auto* gen_er_cmd = gen->add_subcommand("er", "Erdos-Renyi G(n, p)");
  gen_common(gen_er_cmd);
  gen_er_cmd->add_option("-p,--probability", p, "Edge probability");
  auto* gen_reg_cmd = gen->add_subcommand("regular", "Uniform random d-regular graph");
  gen_common(gen_reg_cmd);
  gen_reg_cmd->add_option("-d,--degree", d, "Degree")->required();
  auto* gen_sk_cmd = gen->add_subcommand("sk", "Complete graph with standard normal weights");
  gen_common(gen_sk_cmd);

  auto* bench = app.add_subcommand("bench", "Run an experiment from a JSON config");
  bench->require_subcommand(1);
  BenchFlags bench_flags;
  std::string bench_kind;
  for (const char* kind : {"sk", "er-dense", "er-sparse", "regular-1rsb", "coding"}) {
    auto* sub = bench->add_subcommand(kind, std::string("Run the ") + kind + " experiment");
    sub->add_option("--config", bench_flags.config, "Experiment config (JSON)")->required();
    sub->add_option("-o,--output", bench_flags.output, "Per-run CSV (default stdout)");
    sub->add_option("--summary", bench_flags.summary, "Aggregate CSV (default stderr)");
    sub->add_option("--witness", bench_flags.witness, "Witness CSV");
    sub->add_flag("--store-witness", bench_flags.store_witness, "Keep witnesses in memory");
    sub->add_option("--threads", bench_flags.threads, "Worker threads (0: all cores)");
    sub->callback([&bench_kind, kind] { bench_kind = kind; });
  }

  auto* oracle = app.add_subcommand("oracle", "Exact solvers for small instances");
  oracle->require_subcommand(1);
  auto* oracle_mis = oracle->add_subcommand("mis", "Exact independence number (n <= 64)");
  oracle_mis->add_option("file", file, "Graph file")->required();
  auto* oracle_cut = oracle->add_subcommand("maxcut", "Exact maximum cut (n <= 24)");
  oracle_cut->add_option("file", file, "Weighted graph file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (*mis) return solve_mis_cmd(file, mis_flags);
  if (*cut) return solve_maxcut_cmd(file, cut_flags);
  if (*gen_er_cmd) write_graph(gen_er(n, p, seed), out_path, format);
  if (*gen_reg_cmd) write_graph(gen_regular(n, d, seed), out_path, format);
  if (*gen_sk_cmd) write_graph(gen_sk(n, seed), out_path, format);
  if (*bench) return bench_cmd(bench_kind, bench_flags);
  if (*oracle_mis) {
    const auto r = exact_mis(read_graph_file(file));
    std::cout << r.optimum << '\n';
    write_independent_set(std::cout, r.witness);
  }
  if (*oracle_cut) {
    const auto c = MaxCutInstance::from_graph(read_graph_file(file));
    const auto r = exact_maxcut(c);
    std::cout.precision(17);
    std::cout << r.optimum << '\n';
    for (std::size_t v = 0; v < r.witness.size(); ++v)
      std::cout << v << ' ' << r.witness.side(v) << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const cutmis::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const cutmis::DataError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kData;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kData;
  }
}
