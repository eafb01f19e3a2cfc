#include <benchmark/benchmark.h>

#include <filesystem>
#include <fstream>

#include "cutmis/anneal.hpp"
#include "cutmis/greedy.hpp"
#include "cutmis/mis.hpp"
#include "cutmis/oracle.hpp"
#include "cutmis/rank2.hpp"

using namespace cutmis;

namespace {

IsingModel sk_model(std::size_t n) {
  const Graph g = gen_sk(n, 7);
  std::vector<Coupling> c;
  for (const auto& e : g.edges()) c.push_back({e.u, e.v, e.w});
  return IsingModel(0.0, std::vector<double>(n, 0.0), std::move(c));
}

Graph fixture(const char* name) {
  std::ifstream in(std::filesystem::path(CUTMIS_BENCH_FIXTURE_DIR) / (std::string(name) + ".dimacs"));
  return parse_dimacs(in).graph;
}

}  // namespace

// Cost of one read, reported per sweep.
void BM_AnnealSk(benchmark::State& state) {
  const IsingModel m = sk_model(static_cast<std::size_t>(state.range(0)));
  AnnealParams p;
  p.num_sweeps = 1000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulated_annealing(m, p).best_energy);
    ++p.seed;
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(p.num_sweeps));
}
BENCHMARK(BM_AnnealSk)->Arg(100)->Arg(200);

void BM_AnnealSparseMis(benchmark::State& state) {
  const IsingModel m = mis_to_ising(gen_er(400, 0.05, 3));
  AnnealParams p;
  p.num_sweeps = 1000;
  for (auto _ : state) benchmark::DoNotOptimize(simulated_annealing(m, p).best_energy);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(p.num_sweeps));
}
BENCHMARK(BM_AnnealSparseMis);

void BM_MisMin(benchmark::State& state) {
  const Graph g = gen_er(static_cast<std::size_t>(state.range(0)), 0.5, 11);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(mis_min(g, seed++).size());
}
BENCHMARK(BM_MisMin)->Arg(200)->Arg(1000);

void BM_MaxCutGreedy(benchmark::State& state) {
  const MaxCutInstance c = MaxCutInstance::from_graph(gen_sk(200, 5));
  using Fn = CutPartition (*)(const MaxCutInstance&, std::uint64_t, GreedyTrace*);
  const Fn solvers[] = {maxcut_sg, maxcut_sg3, maxcut_ec, maxcut_sec};
  const Fn solve = solvers[state.range(0)];
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(solve(c, seed++, nullptr).size());
}
BENCHMARK(BM_MaxCutGreedy)->DenseRange(0, 3)->ArgName("solver");  // 0 sg, 1 sg3, 2 ec, 3 sec

void BM_Rank2(benchmark::State& state) {
  const MaxCutInstance c = embed_maxcut(mis_to_ising(fixture("1dc.128")));
  Rank2Params p;
  for (auto _ : state) {
    benchmark::DoNotOptimize(maxcut_rank2(c, p).size());
    ++p.seed;
  }
}
BENCHMARK(BM_Rank2);

void BM_ExactMis(benchmark::State& state) {
  const Graph g = fixture("1dc.64");
  for (auto _ : state) benchmark::DoNotOptimize(exact_mis(g).optimum);
}
BENCHMARK(BM_ExactMis)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
