#include "cutmis/harness.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>
#include <tuple>

#include "cutmis/error.hpp"
#include "cutmis/greedy.hpp"
#include "cutmis/random.hpp"
#include "cutmis/reference.hpp"
#include "json.hpp"

namespace cutmis {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::array kAllSolvers{Solver::min, Solver::max, Solver::sg,  Solver::sg3,
                                 Solver::ec,  Solver::sec, Solver::sa,  Solver::rank2};

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) h = (h ^ c) * 0x100000001b3ULL;
  return h;
}

CutPartition run_maxcut_heuristic(const MaxCutInstance& c, Solver s, std::uint64_t seed,
                                  const SolverSettings& settings) {
  switch (s) {
    case Solver::sg: return maxcut_sg(c, seed);
    case Solver::sg3: return maxcut_sg3(c, seed);
    case Solver::ec: return maxcut_ec(c, seed);
    case Solver::sec: return maxcut_sec(c, seed);
    case Solver::rank2: {
      Rank2Params p = settings.rank2;
      p.seed = seed;
      return maxcut_rank2(c, p);
    }
    default: break;
  }
  throw UsageError("solver '" + std::string(to_string(s)) + "' does not solve Max-Cut");
}

bool allowed(ExperimentKind kind, Solver s) {
  switch (kind) {
    case ExperimentKind::sk:
      return s == Solver::sg || s == Solver::sg3 || s == Solver::sec || s == Solver::sa ||
             s == Solver::rank2;
    case ExperimentKind::er_dense:
      return s == Solver::min || s == Solver::max || s == Solver::sg3 || s == Solver::sec ||
             s == Solver::sa || s == Solver::rank2;
    case ExperimentKind::coding:
      return s == Solver::min || s == Solver::rank2 || s == Solver::sa;
    case ExperimentKind::er_sparse:
    case ExperimentKind::regular_1rsb: return true;
  }
  return false;
}

// Executes tasks on a fixed set of workers. The first exception cancels the
// remaining tasks and is rethrown.
void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t)>& task) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, count);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i; !failed && (i = next++) < count;) {
      try {
        task(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        failed = true;
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
}

std::vector<int> witness_of(const IndependentSet& s) {
  return {s.vertices().begin(), s.vertices().end()};
}

std::vector<int> witness_of(const SpinAssignment& z) {
  return {z.values().begin(), z.values().end()};
}

IsingModel sk_model(const Graph& g) {
  std::vector<Coupling> couplings;
  couplings.reserve(g.num_edges());
  for (const auto& e : g.edges()) couplings.push_back({e.u, e.v, e.w});
  return IsingModel(0.0, std::vector<double>(g.num_vertices(), 0.0), std::move(couplings));
}

double sk_normalization(std::size_t n) { return std::pow(static_cast<double>(n), 1.5); }

std::size_t sparse_size(double d) { return static_cast<std::size_t>(std::llround(d * d)); }

// One (instance, solver) cell of a MIS experiment.
struct MisCell {
  const Graph* graph;
  RunRecord record;
};

// Builds the graph behind a record of a MIS experiment.
Graph regenerate_graph(const RunRecord& r, const ExperimentConfig& config, std::uint64_t seed) {
  switch (config.experiment) {
    case ExperimentKind::er_dense: return gen_er(r.point_n, config.edge_probability, seed);
    case ExperimentKind::er_sparse:
      return gen_er(r.point_n, r.point_d / static_cast<double>(r.point_n), seed);
    case ExperimentKind::regular_1rsb:
      if (r.series == "regular")
        return gen_regular(r.point_n, static_cast<std::size_t>(r.point_d), seed);
      return gen_er(r.point_n, r.point_d / static_cast<double>(r.point_n), seed);
    case ExperimentKind::coding: return load_coding_fixture(resolve_fixture_dir(config), r.series);
    case ExperimentKind::sk: break;
  }
  throw InvariantError("regenerate_graph called for a non-MIS experiment");
}

// Solves each (graph, solver) cell with best-of-k repeats, in parallel.
std::vector<RunRecord> run_mis_cells(std::vector<MisCell> cells, const ExperimentConfig& config,
                                     bool density) {
  parallel_for(cells.size(), config.threads, [&](std::size_t k) {
    MisCell& cell = cells[k];
    RunRecord& r = cell.record;
    const Solver s = parse_solver(r.solver);
    const std::uint64_t base = r.seed;
    const auto start = Clock::now();
    IndependentSet best;
    std::uint64_t best_seed = run_seed(base, s, 0);
    for (std::size_t rep = 0; rep < config.runs_per_instance; ++rep) {
      const std::uint64_t seed = run_seed(base, s, rep);
      IndependentSet set = solve_mis(*cell.graph, s, seed, config.settings);
      if (rep == 0 || set.size() > best.size()) {
        best = std::move(set);
        best_seed = seed;
      }
    }
    r.elapsed_ms = ms_since(start);
    if (!is_independent(*cell.graph, best))
      throw InvariantError("solver " + r.solver + " returned a dependent set");
    r.seed = best_seed;
    r.objective = static_cast<double>(best.size());
    if (density) r.objective /= static_cast<double>(cell.graph->num_vertices());
    if (config.store_witness) r.witness = witness_of(best);
  });
  std::vector<RunRecord> out;
  out.reserve(cells.size());
  for (auto& c : cells) out.push_back(std::move(c.record));
  return out;
}

RunRecord make_record(const ExperimentConfig& config, std::string series, std::size_t n, double d,
                      std::size_t instance, Solver s, std::uint64_t seed) {
  RunRecord r;
  r.experiment = std::string(to_string(config.experiment));
  r.series = std::move(series);
  r.point_n = n;
  r.point_d = d;
  r.instance = instance;
  r.solver = std::string(to_string(s));
  r.seed = seed;  // instance seed until the run replaces it
  return r;
}

// Generated instances of one series, shared by every solver cell.
struct SeriesPoint {
  std::string series;
  std::size_t n;
  double d;
  std::function<Graph(std::uint64_t)> generate;
};

std::vector<RunRecord> run_generated_mis(const ExperimentConfig& config,
                                         const std::vector<SeriesPoint>& points, bool density) {
  std::vector<Graph> graphs;
  std::vector<std::tuple<std::size_t, std::size_t, std::uint64_t>> keys;  // point, instance, seed
  for (std::size_t p = 0; p < points.size(); ++p)
    for (std::size_t i = 0; i < config.instances_per_point; ++i)
      keys.emplace_back(p, i,
                        instance_seed(config.master_seed, points[p].series, points[p].n,
                                      points[p].d, i));
  graphs.resize(keys.size());
  parallel_for(keys.size(), config.threads, [&](std::size_t k) {
    const auto& [p, i, seed] = keys[k];
    graphs[k] = points[p].generate(seed);
  });

  std::vector<MisCell> cells;
  for (std::size_t k = 0; k < keys.size(); ++k) {
    const auto& [p, i, seed] = keys[k];
    for (Solver s : config.solvers)
      cells.push_back({&graphs[k], make_record(config, points[p].series, points[p].n, points[p].d,
                                               i, s, seed)});
  }
  return run_mis_cells(std::move(cells), config, density);
}

template <typename T>
T get_or(const nlohmann::json& j, const char* key, T fallback) {
  return j.contains(key) ? j.at(key).get<T>() : fallback;
}

void check_keys(const nlohmann::json& j, std::initializer_list<std::string_view> keys,
                std::string_view where) {
  if (!j.is_object()) throw UsageError(std::string(where) + " must be a JSON object");
  for (const auto& item : j.items()) {
    if (std::find(keys.begin(), keys.end(), item.key()) == keys.end())
      throw UsageError("unknown key '" + item.key() + "' in " + std::string(where));
  }
}

}  // namespace

Solver parse_solver(std::string_view name) {
  for (Solver s : kAllSolvers)
    if (to_string(s) == name) return s;
  throw UsageError("unknown solver '" + std::string(name) + "'");
}

std::string_view to_string(Solver s) {
  switch (s) {
    case Solver::min: return "min";
    case Solver::max: return "max";
    case Solver::sg: return "sg";
    case Solver::sg3: return "sg3";
    case Solver::ec: return "ec";
    case Solver::sec: return "sec";
    case Solver::sa: return "sa";
    case Solver::rank2: return "rank2";
  }
  return "?";
}

bool is_ising_solver(Solver s) { return s != Solver::min && s != Solver::max; }

PruneFilter SolverSettings::filter_for(Solver s) const {
  auto it = filters.find(s);
  return it == filters.end() ? PruneFilter::min_filter : it->second;
}

SpinAssignment minimize_ising(const IsingModel& m, Solver s, std::uint64_t seed,
                              const SolverSettings& settings) {
  if (s == Solver::sa) {
    AnnealParams p = settings.anneal;
    p.seed = seed;
    return simulated_annealing(m, p).best_spins;
  }
  if (!is_ising_solver(s))
    throw UsageError("solver '" + std::string(to_string(s)) + "' does not minimize Ising models");
  const CutPartition cut = run_maxcut_heuristic(embed_maxcut(m), s, seed, settings);
  return strip_auxiliary(spins_from_cut(cut));
}

IndependentSet solve_mis(const Graph& g, Solver s, std::uint64_t seed,
                         const SolverSettings& settings) {
  if (s == Solver::min) return mis_min(g, seed);
  if (s == Solver::max) return mis_max(g, seed);
  const SpinAssignment z = minimize_ising(mis_to_ising(g), s, seed, settings);
  return prune_to_independent(g, decode_spins(z), settings.filter_for(s), derive_seed(seed, {1}));
}

CutPartition solve_maxcut(const MaxCutInstance& c, Solver s, std::uint64_t seed,
                          const SolverSettings& settings) {
  if (!is_ising_solver(s))
    throw UsageError("solver '" + std::string(to_string(s)) + "' does not solve Max-Cut");
  if (s != Solver::sa) return run_maxcut_heuristic(c, s, seed, settings);
  AnnealParams p = settings.anneal;
  p.seed = seed;
  CutPartition cut = cut_from_spins(simulated_annealing(maxcut_to_ising(c), p).best_spins);
  if (cut.size() > 0 && cut.side(0) == 2) cut.swap_sides();
  return cut;
}

ExperimentKind parse_experiment_kind(std::string_view name) {
  if (name == "sk") return ExperimentKind::sk;
  if (name == "er-dense") return ExperimentKind::er_dense;
  if (name == "er-sparse") return ExperimentKind::er_sparse;
  if (name == "regular-1rsb") return ExperimentKind::regular_1rsb;
  if (name == "coding") return ExperimentKind::coding;
  throw UsageError("unknown experiment '" + std::string(name) + "'");
}

std::string_view to_string(ExperimentKind k) {
  switch (k) {
    case ExperimentKind::sk: return "sk";
    case ExperimentKind::er_dense: return "er-dense";
    case ExperimentKind::er_sparse: return "er-sparse";
    case ExperimentKind::regular_1rsb: return "regular-1rsb";
    case ExperimentKind::coding: return "coding";
  }
  return "?";
}

ExperimentConfig parse_experiment_config(std::string_view json_text) {
  using nlohmann::json;
  ExperimentConfig c;
  try {
    const json j = json::parse(json_text);
    check_keys(j,
               {"experiment", "sizes", "degrees", "edge_probability", "instances_per_point",
                "solvers", "runs_per_instance", "instances", "fixture_dir", "master_seed",
                "output_path", "store_witness", "threads", "anneal", "rank2", "filters"},
               "config");
    if (!j.contains("experiment")) throw UsageError("config needs an 'experiment' key");
    c.experiment = parse_experiment_kind(j.at("experiment").get<std::string>());
    c.sizes = get_or(j, "sizes", c.sizes);
    c.degrees = get_or(j, "degrees", c.degrees);
    c.edge_probability = get_or(j, "edge_probability", c.edge_probability);
    c.instances_per_point = get_or(j, "instances_per_point", c.instances_per_point);
    c.runs_per_instance = get_or(j, "runs_per_instance", c.runs_per_instance);
    c.coding_instances = get_or(j, "instances", c.coding_instances);
    c.fixture_dir = get_or(j, "fixture_dir", std::string{});
    c.master_seed = get_or(j, "master_seed", c.master_seed);
    c.output_path = get_or(j, "output_path", std::string{});
    c.store_witness = get_or(j, "store_witness", c.store_witness);
    c.threads = get_or(j, "threads", c.threads);
    for (const auto& name : get_or(j, "solvers", std::vector<std::string>{}))
      c.solvers.push_back(parse_solver(name));

    if (j.contains("anneal")) {
      const json& a = j.at("anneal");
      check_keys(a, {"num_sweeps", "num_reads", "schedule", "beta_hot", "beta_cold", "order"},
                 "anneal");
      AnnealParams& p = c.settings.anneal;
      p.num_sweeps = get_or(a, "num_sweeps", p.num_sweeps);
      p.num_reads = get_or(a, "num_reads", p.num_reads);
      if (a.contains("schedule")) p.schedule = parse_beta_schedule(a.at("schedule").get<std::string>());
      if (a.contains("beta_hot")) p.beta_hot = a.at("beta_hot").get<double>();
      if (a.contains("beta_cold")) p.beta_cold = a.at("beta_cold").get<double>();
      if (a.contains("order")) {
        const auto order = a.at("order").get<std::string>();
        if (order == "sequential") p.order = VisitOrder::sequential;
        else if (order == "random") p.order = VisitOrder::random;
        else throw UsageError("unknown visit order '" + order + "'");
      }
    }
    if (j.contains("rank2")) {
      const json& r = j.at("rank2");
      check_keys(r, {"max_iters", "grad_tolerance", "restarts"}, "rank2");
      Rank2Params& p = c.settings.rank2;
      p.max_iters = get_or(r, "max_iters", p.max_iters);
      p.grad_tolerance = get_or(r, "grad_tolerance", p.grad_tolerance);
      p.restarts = get_or(r, "restarts", p.restarts);
    }
    if (j.contains("filters")) {
      const json& f = j.at("filters");
      if (!f.is_object()) throw UsageError("filters must be a JSON object");
      for (const auto& item : f.items())
        c.settings.filters[parse_solver(item.key())] =
            parse_prune_filter(item.value().get<std::string>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("invalid config: ") + e.what());
  }
  validate(c);
  return c;
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_experiment_config(text.str());
}

void validate(const ExperimentConfig& c) {
  if (c.solvers.empty()) throw UsageError("config lists no solvers");
  for (Solver s : c.solvers) {
    if (!allowed(c.experiment, s))
      throw UsageError("solver '" + std::string(to_string(s)) + "' is not supported by the " +
                       std::string(to_string(c.experiment)) + " experiment");
  }
  if (c.instances_per_point == 0) throw UsageError("instances_per_point must be positive");
  if (c.runs_per_instance == 0) throw UsageError("runs_per_instance must be positive");
  if (c.settings.anneal.num_sweeps == 0 || c.settings.anneal.num_reads == 0)
    throw UsageError("anneal sweeps and reads must be positive");
  if (c.settings.rank2.restarts == 0) throw UsageError("rank2 restarts must be positive");
  switch (c.experiment) {
    case ExperimentKind::sk:
      for (auto n : c.sizes)
        if (n < 2) throw UsageError("sk sizes must be at least 2");
      break;
    case ExperimentKind::er_dense:
      if (!(c.edge_probability >= 0.0 && c.edge_probability <= 1.0))
        throw UsageError("edge_probability must lie in [0, 1]");
      for (auto n : c.sizes)
        if (n == 0) throw UsageError("er-dense sizes must be positive");
      break;
    case ExperimentKind::er_sparse:
      for (double d : c.degrees)
        if (!(d > 0.0) || !std::isfinite(d)) throw UsageError("degrees must be positive");
      break;
    case ExperimentKind::regular_1rsb:
      for (double d : c.degrees)
        if (!(d >= 1.0) || d != std::floor(d) || d > 1e4)
          throw UsageError("regular-1rsb degrees must be positive integers");
      break;
    case ExperimentKind::coding:
      for (const auto& name : c.coding_instances)
        if (!reference::find_coding_instance(name))
          throw UsageError("unknown coding instance '" + name + "'");
      break;
  }
}

std::uint64_t instance_seed(std::uint64_t master, std::string_view series, std::size_t n,
                            double d, std::size_t instance) {
  return derive_seed(master, {fnv1a(series), n, std::bit_cast<std::uint64_t>(d), instance});
}

std::uint64_t run_seed(std::uint64_t instance_seed, Solver s, std::size_t repeat) {
  return derive_seed(instance_seed, {static_cast<std::uint64_t>(s) + 1, repeat});
}

std::vector<RunRecord> run_sk(const ExperimentConfig& config) {
  struct Cell {
    std::size_t model;
    RunRecord record;
  };
  std::vector<IsingModel> models;
  std::vector<Cell> cells;
  for (std::size_t n : config.sizes) {
    for (std::size_t i = 0; i < config.instances_per_point; ++i) {
      const std::uint64_t seed = instance_seed(config.master_seed, "sk", n, 0.0, i);
      models.push_back(sk_model(gen_sk(n, seed)));
      for (Solver s : config.solvers)
        cells.push_back({models.size() - 1, make_record(config, "sk", n, 0.0, i, s, seed)});
    }
  }
  parallel_for(cells.size(), config.threads, [&](std::size_t k) {
    RunRecord& r = cells[k].record;
    const IsingModel& m = models[cells[k].model];
    const Solver s = parse_solver(r.solver);
    const std::uint64_t base = r.seed;
    const auto start = Clock::now();
    SpinAssignment best;
    double best_energy = 0.0;
    for (std::size_t rep = 0; rep < config.runs_per_instance; ++rep) {
      const std::uint64_t seed = run_seed(base, s, rep);
      SpinAssignment z = minimize_ising(m, s, seed, config.settings);
      const double e = ising_energy(m, z);
      if (rep == 0 || e < best_energy) {
        best = std::move(z);
        best_energy = e;
        r.seed = seed;
      }
    }
    r.elapsed_ms = ms_since(start);
    r.objective = best_energy / sk_normalization(r.point_n);
    if (config.store_witness) r.witness = witness_of(best);
  });
  std::vector<RunRecord> out;
  out.reserve(cells.size());
  for (auto& c : cells) out.push_back(std::move(c.record));
  return out;
}

std::vector<RunRecord> run_er_dense(const ExperimentConfig& config) {
  std::vector<SeriesPoint> points;
  const double p = config.edge_probability;
  for (std::size_t n : config.sizes)
    points.push_back({"er", n, p * static_cast<double>(n),
                      [n, p](std::uint64_t seed) { return gen_er(n, p, seed); }});
  return run_generated_mis(config, points, false);
}

std::vector<RunRecord> run_er_sparse(const ExperimentConfig& config) {
  std::vector<SeriesPoint> points;
  for (double d : config.degrees) {
    reference_columns(ExperimentKind::er_sparse, "er", sparse_size(d), d);  // domain check
    const std::size_t n = sparse_size(d);
    const double p = d / static_cast<double>(n);
    points.push_back({"er", n, d, [n, p](std::uint64_t seed) { return gen_er(n, p, seed); }});
  }
  return run_generated_mis(config, points, true);
}

std::vector<RunRecord> run_regular_1rsb(const ExperimentConfig& config) {
  std::vector<SeriesPoint> points;
  for (double d : config.degrees) {
    const auto degree = static_cast<std::size_t>(d);
    const std::size_t n = degree * degree;
    if (!reference::rsb_density(static_cast<int>(degree)))
      std::clog << "warning: no 1RSB reference for d=" << degree << "; column omitted\n";
    const double p = d / static_cast<double>(n);
    points.push_back({"regular", n, d, [n, degree](std::uint64_t seed) {
                        return gen_regular(n, degree, seed);
                      }});
    points.push_back({"er", n, d, [n, p](std::uint64_t seed) { return gen_er(n, p, seed); }});
  }
  return run_generated_mis(config, points, true);
}

std::vector<RunRecord> run_coding(const ExperimentConfig& config) {
  const auto dir = resolve_fixture_dir(config);
  std::vector<Graph> graphs;
  graphs.reserve(config.coding_instances.size());
  for (const auto& name : config.coding_instances) graphs.push_back(load_coding_fixture(dir, name));

  std::vector<MisCell> cells;
  for (std::size_t k = 0; k < graphs.size(); ++k) {
    const auto& name = config.coding_instances[k];
    const std::size_t n = graphs[k].num_vertices();
    const std::uint64_t seed = instance_seed(config.master_seed, name, n, 0.0, 0);
    for (Solver s : config.solvers)
      cells.push_back({&graphs[k], make_record(config, name, n, graphs[k].avg_degree(), k, s, seed)});
  }
  auto records = run_mis_cells(std::move(cells), config, false);
  for (const auto& r : records) {
    const auto* ref = reference::find_coding_instance(r.series);
    if (r.objective > ref->alpha_upper)
      throw DataError(r.solver + " found a set of size " + std::to_string(r.objective) + " on " +
                      r.series + ", above the known bound " + std::to_string(ref->alpha_upper));
  }
  return records;
}

std::vector<RunRecord> run_experiment(const ExperimentConfig& config) {
  validate(config);
  switch (config.experiment) {
    case ExperimentKind::sk: return run_sk(config);
    case ExperimentKind::er_dense: return run_er_dense(config);
    case ExperimentKind::er_sparse: return run_er_sparse(config);
    case ExperimentKind::regular_1rsb: return run_regular_1rsb(config);
    case ExperimentKind::coding: return run_coding(config);
  }
  throw InvariantError("unhandled experiment kind");
}

double reevaluate(const RunRecord& r, const ExperimentConfig& config) {
  if (!r.witness) throw UsageError("record has no stored witness");
  const auto& w = *r.witness;
  const std::uint64_t seed =
      instance_seed(config.master_seed, r.series, r.point_n,
                    config.experiment == ExperimentKind::coding ||
                            config.experiment == ExperimentKind::sk
                        ? 0.0
                        : r.point_d,
                    config.experiment == ExperimentKind::coding ? 0 : r.instance);
  if (config.experiment == ExperimentKind::sk) {
    const IsingModel m = sk_model(gen_sk(r.point_n, seed));
    std::vector<std::int8_t> z(w.begin(), w.end());
    return ising_energy(m, SpinAssignment(std::move(z))) / sk_normalization(r.point_n);
  }
  const Graph g = regenerate_graph(r, config, seed);
  const IndependentSet s(std::vector<Vertex>(w.begin(), w.end()));
  if (s.size() != w.size() || !is_independent(g, s))
    throw InvariantError("stored witness is not an independent set");
  const bool density = config.experiment == ExperimentKind::er_sparse ||
                       config.experiment == ExperimentKind::regular_1rsb;
  return density ? static_cast<double>(s.size()) / static_cast<double>(g.num_vertices())
                 : static_cast<double>(s.size());
}

std::vector<SummaryRow> summarize(const std::vector<RunRecord>& records) {
  using Key = std::tuple<std::string, std::string, std::size_t, double, std::string>;
  std::map<Key, std::vector<double>> groups;
  for (const auto& r : records)
    groups[{r.experiment, r.series, r.point_n, r.point_d, r.solver}].push_back(r.objective);

  std::vector<SummaryRow> rows;
  for (auto& [key, values] : groups) {
    // Sorting first makes the floating-point sums independent of record order.
    std::sort(values.begin(), values.end());
    SummaryRow row;
    std::tie(row.experiment, row.series, row.point_n, row.point_d, row.solver) = key;
    row.count = values.size();
    double sum = 0.0;
    for (double v : values) sum += v;
    row.mean = sum / static_cast<double>(values.size());
    double sq = 0.0;
    for (double v : values) sq += (v - row.mean) * (v - row.mean);
    row.stddev = values.size() > 1 ? std::sqrt(sq / static_cast<double>(values.size() - 1)) : 0.0;
    row.min = values.front();
    row.max = values.back();
    row.reference = reference_columns(parse_experiment_kind(row.experiment), row.series,
                                      row.point_n, row.point_d);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::pair<std::string, double>> reference_columns(ExperimentKind kind,
                                                              std::string_view series,
                                                              std::size_t n, double d) {
  std::vector<std::pair<std::string, double>> cols;
  switch (kind) {
    case ExperimentKind::sk:
      cols = {{"parisi", reference::kParisi},
              {"pi_sg", reference::kPiSg},
              {"pi_sdp", reference::kPiSdp}};
      break;
    case ExperimentKind::er_dense: {
      const double l = std::log2(static_cast<double>(n));
      cols = {{"log2_n", l}, {"two_log2_n", 2.0 * l}};
      if (n >= 3) cols.emplace_back("r_n", reference::formula_r(static_cast<double>(n)));
      break;
    }
    case ExperimentKind::er_sparse:
    case ExperimentKind::regular_1rsb: {
      if (kind == ExperimentKind::er_sparse || d > std::numbers::e) {
        cols = {{"two_ln_d_over_d", 2.0 * std::log(d) / d},
                {"sparse_density", reference::formula_sparse_density(d)}};
      }
      if (d == std::floor(d)) {
        if (auto rsb = reference::rsb_density(static_cast<int>(d))) cols.emplace_back("rsb", *rsb);
      }
      break;
    }
    case ExperimentKind::coding:
      if (const auto* ref = reference::find_coding_instance(series)) {
        cols = {{"alpha_lower", ref->alpha_lower},
                {"alpha_upper", ref->alpha_upper},
                {"published_min", ref->best_min},
                {"published_rank2", ref->best_circut},
                {"published_sa", ref->best_sa}};
      }
      break;
  }
  return cols;
}

std::string instance_label(const RunRecord& r) {
  if (r.experiment == to_string(ExperimentKind::coding)) return r.series;
  if (r.experiment == to_string(ExperimentKind::regular_1rsb))
    return r.series + ":" + std::to_string(r.instance);
  return std::to_string(r.instance);
}

void write_records_csv(std::ostream& out, const std::vector<RunRecord>& records) {
  const auto old_precision = out.precision(17);
  out << "experiment,point_n,point_d,instance,solver,seed,objective,elapsed_ms\n";
  for (const auto& r : records) {
    out << r.experiment << ',' << r.point_n << ',' << r.point_d << ',' << instance_label(r) << ','
        << r.solver << ',' << r.seed << ',' << r.objective << ',' << r.elapsed_ms << '\n';
  }
  out.precision(old_precision);
}

void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows) {
  std::vector<std::string> names;
  for (const auto& row : rows)
    for (const auto& [name, value] : row.reference)
      if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(name);

  const auto old_precision = out.precision(10);
  out << "experiment,series,point_n,point_d,solver,count,mean,stddev,min,max";
  for (const auto& name : names) out << ',' << name;
  out << '\n';
  for (const auto& row : rows) {
    out << row.experiment << ',' << row.series << ',' << row.point_n << ',' << row.point_d << ','
        << row.solver << ',' << row.count << ',' << row.mean << ',' << row.stddev << ','
        << row.min << ',' << row.max;
    for (const auto& name : names) {
      out << ',';
      for (const auto& [key, value] : row.reference)
        if (key == name) out << value;
    }
    out << '\n';
  }
  out.precision(old_precision);
}

void write_witness_csv(std::ostream& out, const std::vector<RunRecord>& records) {
  out << "experiment,point_n,point_d,instance,solver,witness\n";
  for (const auto& r : records) {
    if (!r.witness) continue;
    out << r.experiment << ',' << r.point_n << ',' << r.point_d << ',' << instance_label(r) << ','
        << r.solver << ',';
    for (std::size_t i = 0; i < r.witness->size(); ++i) out << (i ? " " : "") << (*r.witness)[i];
    out << '\n';
  }
}

std::filesystem::path resolve_fixture_dir(const ExperimentConfig& config) {
  if (!config.fixture_dir.empty()) return config.fixture_dir;
  if (const char* env = std::getenv("CUTMIS_FIXTURE_DIR"); env && *env) return env;
  throw DataError("no fixture directory: set fixture_dir or CUTMIS_FIXTURE_DIR");
}

Graph load_coding_fixture(const std::filesystem::path& dir, std::string_view name) {
  const auto path = dir / (std::string(name) + ".dimacs");
  std::ifstream in(path);
  if (!in) throw DataError("missing fixture " + path.string());
  try {
    return parse_dimacs(in).graph;
  } catch (const UsageError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

}  // namespace cutmis
