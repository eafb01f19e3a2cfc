#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cutmis/anneal.hpp"
#include "cutmis/graph.hpp"
#include "cutmis/ising.hpp"
#include "cutmis/mis.hpp"
#include "cutmis/rank2.hpp"

namespace cutmis {

enum class Solver { min, max, sg, sg3, ec, sec, sa, rank2 };

Solver parse_solver(std::string_view name);
std::string_view to_string(Solver s);
// True for solvers that work on the Ising/Max-Cut form and need decoding.
bool is_ising_solver(Solver s);

struct SolverSettings {
  AnnealParams anneal;  // seed is overridden per run
  Rank2Params rank2;    // seed is overridden per run
  // Repair filter applied to decoded Ising solutions, per solver.
  std::map<Solver, PruneFilter> filters{
      {Solver::sg, PruneFilter::max_filter},  {Solver::sg3, PruneFilter::max_filter},
      {Solver::ec, PruneFilter::max_filter},  {Solver::sec, PruneFilter::max_filter},
      {Solver::sa, PruneFilter::min_filter},  {Solver::rank2, PruneFilter::min_filter},
  };

  PruneFilter filter_for(Solver s) const;
};

// Minimum-energy spins found by an Ising-form solver. The greedy and rank-2
// solvers run on the auxiliary-vertex Max-Cut embedding.
SpinAssignment minimize_ising(const IsingModel& m, Solver s, std::uint64_t seed,
                              const SolverSettings& settings);

// MIS via any solver: MIN/MAX directly, the rest through the λ = 1 Ising
// encoding followed by decoding and the configured repair filter.
IndependentSet solve_mis(const Graph& g, Solver s, std::uint64_t seed,
                         const SolverSettings& settings);

// Max-Cut via any Ising-form solver; vertex 0 ends in V1.
CutPartition solve_maxcut(const MaxCutInstance& c, Solver s, std::uint64_t seed,
                          const SolverSettings& settings);

enum class ExperimentKind { sk, er_dense, er_sparse, regular_1rsb, coding };

ExperimentKind parse_experiment_kind(std::string_view name);
std::string_view to_string(ExperimentKind k);

struct ExperimentConfig {
  ExperimentKind experiment = ExperimentKind::sk;
  std::vector<std::size_t> sizes;  // sk, er-dense
  std::vector<double> degrees;     // er-sparse (mean degree), regular-1rsb (degree)
  double edge_probability = 0.5;   // er-dense
  std::size_t instances_per_point = 50;
  std::vector<Solver> solvers;
  SolverSettings settings;
  std::size_t runs_per_instance = 1;  // best-of-k per (instance, solver)
  std::vector<std::string> coding_instances;
  std::filesystem::path fixture_dir;  // empty: $CUTMIS_FIXTURE_DIR
  std::uint64_t master_seed = 1;
  std::filesystem::path output_path;
  bool store_witness = false;
  std::size_t threads = 0;  // 0: hardware concurrency
};

// JSON object mirroring ExperimentConfig; see README for the keys.
ExperimentConfig parse_experiment_config(std::string_view json_text);
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

// Throws UsageError on empty solver lists, solvers the experiment does not
// support, zero counts and similar.
void validate(const ExperimentConfig& config);

struct RunRecord {
  std::string experiment;
  // Instance family: "sk", "er", "regular", or the coding graph's name.
  std::string series;
  std::size_t point_n = 0;
  double point_d = 0.0;
  std::size_t instance = 0;
  std::string solver;
  std::uint64_t seed = 0;
  double objective = 0.0;  // E/n^{3/2}, set size or density
  double elapsed_ms = 0.0;
  // Set members or ±1 spins, kept when store_witness is on.
  std::optional<std::vector<int>> witness;
};

std::vector<RunRecord> run_sk(const ExperimentConfig& config);
std::vector<RunRecord> run_er_dense(const ExperimentConfig& config);
std::vector<RunRecord> run_er_sparse(const ExperimentConfig& config);
std::vector<RunRecord> run_regular_1rsb(const ExperimentConfig& config);
std::vector<RunRecord> run_coding(const ExperimentConfig& config);
std::vector<RunRecord> run_experiment(const ExperimentConfig& config);

// Recomputes a record's objective from its stored witness and the instance
// regenerated from the config. Throws UsageError when no witness was stored.
double reevaluate(const RunRecord& record, const ExperimentConfig& config);

// Seeds behind every instance and solver run.
std::uint64_t instance_seed(std::uint64_t master, std::string_view series, std::size_t n,
                            double d, std::size_t instance);
std::uint64_t run_seed(std::uint64_t instance_seed, Solver s, std::size_t repeat);

struct SummaryRow {
  std::string experiment;
  std::string series;
  std::size_t point_n = 0;
  double point_d = 0.0;
  std::string solver;
  std::size_t count = 0;
  double mean = 0.0;
  double stddev = 0.0;
  double min = 0.0;
  double max = 0.0;
  std::vector<std::pair<std::string, double>> reference;
};

// Averages per (experiment, series, point, solver), in a canonical order that does not
// depend on record order.
std::vector<SummaryRow> summarize(const std::vector<RunRecord>& records);

// Reference curves for a point: log2 n, 2 log2 n, R(n) for dense ER; the
// sparse-density expansion and 1RSB value for sparse and regular points;
// published bounds and best results for coding graphs.
std::vector<std::pair<std::string, double>> reference_columns(ExperimentKind kind,
                                                              std::string_view series,
                                                              std::size_t n, double d);

// Label written to the instance column: the index, "series:index" for
// regular-1rsb, and the graph name for coding.
std::string instance_label(const RunRecord& r);

// Fixed schema: experiment,point_n,point_d,instance,solver,seed,objective,elapsed_ms
void write_records_csv(std::ostream& out, const std::vector<RunRecord>& records);
void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows);
// experiment,point_n,point_d,instance,solver,witness (ids separated by spaces)
void write_witness_csv(std::ostream& out, const std::vector<RunRecord>& records);

std::filesystem::path resolve_fixture_dir(const ExperimentConfig& config);
Graph load_coding_fixture(const std::filesystem::path& dir, std::string_view name);

}  // namespace cutmis
