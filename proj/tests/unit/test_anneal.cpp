#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "cutmis/anneal.hpp"
#include "cutmis/error.hpp"
#include "cutmis/mis.hpp"
#include "oracles.hpp"

using namespace cutmis;
using namespace cutmis::testing;

namespace {

IsingModel sk_ising(std::size_t n, std::uint64_t seed) {
  std::vector<Coupling> c;
  const Graph g = gen_sk(n, seed);
  for (const auto& e : g.edges()) c.push_back({e.u, e.v, e.w});
  return IsingModel(0.0, std::vector<double>(n, 0.0), std::move(c));
}

}  // namespace

TEST(AnnealTest, SingleSpin) {
  const IsingModel m(0.0, {1.0}, {});
  AnnealParams p;
  p.num_sweeps = 50;
  const AnnealResult r = simulated_annealing(m, p);
  EXPECT_DOUBLE_EQ(r.best_energy, -1.0);
  EXPECT_EQ(r.best_spins[0], 1);
}

TEST(AnnealTest, TriangleMisModel) {
  const Graph k3(3, {{0, 1, 1.0}, {0, 2, 1.0}, {1, 2, 1.0}});
  AnnealParams p;
  p.num_sweeps = 1000;
  p.num_reads = 10;
  p.seed = 4;
  const AnnealResult r = simulated_annealing(mis_to_ising(k3), p);
  EXPECT_DOUBLE_EQ(r.best_energy, -1.0);
  EXPECT_EQ(r.per_read_energies.size(), 10u);
  EXPECT_DOUBLE_EQ(r.best_energy,
                   *std::min_element(r.per_read_energies.begin(), r.per_read_energies.end()));
  EXPECT_DOUBLE_EQ(ising_energy(mis_to_ising(k3), r.best_spins), r.best_energy);
}

TEST(AnnealTest, FindsGroundStatesOfSmallModels) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const IsingModel m = random_ising(rng, 4 + trial % 9);
    AnnealParams p;
    p.num_sweeps = 2000;
    p.num_reads = 20;
    p.seed = static_cast<std::uint64_t>(trial);
    EXPECT_NEAR(simulated_annealing(m, p).best_energy, brute_ground_energy(m), 1e-9);
  }
}

TEST(AnnealTest, RejectsInvalidSchedules) {
  const IsingModel m(0.0, {1.0}, {});
  AnnealParams p;
  p.beta_hot = 2.0;
  p.beta_cold = 1.0;
  EXPECT_THROW(simulated_annealing(m, p), UsageError);
  p.beta_hot = 0.0;
  EXPECT_THROW(simulated_annealing(m, p), UsageError);
  AnnealParams zero;
  zero.num_sweeps = 0;
  EXPECT_THROW(simulated_annealing(m, zero), UsageError);
  zero.num_sweeps = 1;
  zero.num_reads = 0;
  EXPECT_THROW(simulated_annealing(m, zero), UsageError);
  EXPECT_THROW(parse_beta_schedule("cosine"), UsageError);
}

TEST(AnnealTest, DefaultBetaRangeFromCoefficients) {
  const IsingModel m(0.0, {0.5, 0.0, 0.0}, {{0, 1, 2.0}, {1, 2, -0.25}});
  const BetaRange r = default_beta_range(m);
  // Worst vertex: 0 with |0.5| + |2|; flips there cost at most twice that.
  EXPECT_DOUBLE_EQ(r.hot, std::log(2.0) / (2.0 * 2.5));
  EXPECT_DOUBLE_EQ(r.cold, std::log(1000.0) / (2.0 * 0.25));
}

TEST(AnnealTest, ScheduleEndpoints) {
  const BetaRange r{0.1, 10.0};
  for (auto s : {BetaSchedule::geometric, BetaSchedule::linear}) {
    EXPECT_DOUBLE_EQ(beta_at(s, r, 0, 100), 0.1);
    EXPECT_NEAR(beta_at(s, r, 99, 100), 10.0, 1e-12);
  }
  EXPECT_NEAR(beta_at(BetaSchedule::geometric, r, 1, 3), 1.0, 1e-12);
  EXPECT_NEAR(beta_at(BetaSchedule::linear, r, 1, 3), 5.05, 1e-12);
}

TEST(AnnealTest, Deterministic) {
  const IsingModel m = sk_ising(40, 3);
  AnnealParams p;
  p.num_sweeps = 300;
  p.num_reads = 3;
  p.seed = 77;
  const AnnealResult a = simulated_annealing(m, p);
  const AnnealResult b = simulated_annealing(m, p);
  EXPECT_EQ(a.best_spins, b.best_spins);
  EXPECT_EQ(a.per_read_energies, b.per_read_energies);
  p.order = VisitOrder::random;
  EXPECT_EQ(simulated_annealing(m, p).per_read_energies,
            simulated_annealing(m, p).per_read_energies);
}

TEST(AnnealTest, ReadsUseIndependentSeeds) {
  const IsingModel m = sk_ising(30, 8);
  AnnealParams many;
  many.num_sweeps = 100;
  many.num_reads = 4;
  many.seed = 5;
  const auto all = simulated_annealing(m, many).per_read_energies;
  AnnealParams few = many;
  few.num_reads = 2;
  const auto prefix = simulated_annealing(m, few).per_read_energies;
  EXPECT_EQ(prefix[0], all[0]);
  EXPECT_EQ(prefix[1], all[1]);
}

TEST(AnnealTest, TraceTracksExactEnergies) {
  const IsingModel m = sk_ising(50, 1);
  AnnealParams p;
  p.num_sweeps = 500;
  p.num_reads = 2;
  AnnealTrace trace{100, {}};
  const AnnealResult r = simulated_annealing(m, p, &trace);
  ASSERT_EQ(trace.rows.size(), 10u);
  EXPECT_EQ(trace.rows[4].sweep, 500u);
  const double last = std::min(trace.rows[4].energy, trace.rows[9].energy);
  EXPECT_NEAR(last, r.best_energy, 1e-9 * 50 * std::abs(r.best_energy));
  std::ostringstream out;
  write_anneal_trace_csv(out, trace);
  EXPECT_EQ(out.str().substr(0, 17), "read,sweep,energy");
}

TEST(AnnealTest, MoreSweepsDoNotHurtOnSk) {
  double short_sum = 0.0, long_sum = 0.0;
  for (std::uint64_t s = 0; s < 20; ++s) {
    const IsingModel m = sk_ising(100, 1000 + s);
    AnnealParams p;
    p.seed = s;
    p.num_sweeps = 1000;
    short_sum += simulated_annealing(m, p).best_energy;
    p.num_sweeps = 30000;
    long_sum += simulated_annealing(m, p).best_energy;
  }
  EXPECT_LE(long_sum, short_sum);
}

TEST(AnnealTest, RecoversOptimumOnOneDeletionCode) {
  std::ifstream in(std::filesystem::path(CUTMIS_TEST_FIXTURE_DIR) / "1dc.64.dimacs");
  const Graph g = parse_dimacs(in).graph;
  AnnealParams p;
  p.num_sweeps = 20000;
  p.num_reads = 10;
  const AnnealResult r = simulated_annealing(mis_to_ising(g), p);
  const IndependentSet s =
      prune_to_independent(g, decode_spins(r.best_spins), PruneFilter::min_filter, 1);
  EXPECT_TRUE(independent(g, s.vertices()));
  EXPECT_EQ(s.size(), 10u);
}
