#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "cutmis/greedy.hpp"
#include "cutmis/mis.hpp"
#include "oracles.hpp"

using namespace cutmis;
using namespace cutmis::testing;

namespace {

Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    e.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n), 1.0});
  return Graph(n, std::move(e));
}

Graph star(std::size_t leaves) {
  std::vector<Edge> e;
  for (std::size_t i = 1; i <= leaves; ++i) e.push_back({0, static_cast<Vertex>(i), 1.0});
  return Graph(leaves + 1, std::move(e));
}

using CutSolver = CutPartition (*)(const MaxCutInstance&, std::uint64_t, GreedyTrace*);
const std::vector<std::pair<const char*, CutSolver>> kCutSolvers{
    {"sg", maxcut_sg}, {"sg3", maxcut_sg3}, {"ec", maxcut_ec}, {"sec", maxcut_sec}};

double trace_total(const GreedyTrace& t) {
  double s = 0.0;
  for (const auto& step : t) s += step.gain;
  return s;
}

}  // namespace

TEST(MisGreedyTest, MinOnSmallGraphs) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    EXPECT_EQ(mis_min(cycle(5), s).size(), 2u);
    EXPECT_EQ(mis_min(star(4), s), IndependentSet({1, 2, 3, 4}));
  }
}

TEST(MisGreedyTest, MaxOnSmallGraphs) {
  const Graph k4(4, {{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0}, {1, 2, 1.0}, {1, 3, 1.0}, {2, 3, 1.0}});
  const Graph p3(3, {{0, 1, 1.0}, {1, 2, 1.0}});
  for (std::uint64_t s = 0; s < 20; ++s) {
    EXPECT_EQ(mis_max(star(4), s), IndependentSet({1, 2, 3, 4}));
    EXPECT_EQ(mis_max(p3, s), IndependentSet({0, 2}));
    EXPECT_EQ(mis_max(k4, s).size(), 1u);
  }
}

TEST(MisGreedyTest, OutputsAreIndependentAndDeterministic) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_graph(rng, 80, 0.05 + 0.01 * trial);
    for (auto solve : {mis_min, mis_max}) {
      const IndependentSet a = solve(g, 7);
      EXPECT_TRUE(independent(g, a.vertices()));
      EXPECT_EQ(a, solve(g, 7));
    }
  }
}

TEST(MisGreedyTest, TieBreakingDependsOnSeed) {
  std::set<std::vector<Vertex>> seen;
  for (std::uint64_t s = 0; s < 30; ++s) {
    const auto set = mis_min(cycle(12), s);
    seen.insert({set.vertices().begin(), set.vertices().end()});
  }
  EXPECT_GT(seen.size(), 1u);
}

TEST(MisGreedyTest, MinBestOfFiftyOnCodingGraphs) {
  auto best = [](const std::string& name) {
    std::ifstream in(std::filesystem::path(CUTMIS_TEST_FIXTURE_DIR) / (name + ".dimacs"));
    const Graph g = parse_dimacs(in).graph;
    std::size_t b = 0;
    for (std::uint64_t s = 0; s < 50; ++s) b = std::max(b, mis_min(g, s).size());
    return b;
  };
  EXPECT_EQ(best("1dc.64"), 10u);
  EXPECT_EQ(best("1dc.128"), 15u);
}

TEST(CutGreedyTest, K2AndTriangle) {
  const auto k2 = MaxCutInstance::from_graph(Graph(2, {{0, 1, 1.0}}));
  const auto tri = MaxCutInstance::from_graph(Graph(3, {{0, 1, 1.0}, {0, 2, 1.0}, {1, 2, 1.0}}));
  for (const auto& [name, solve] : kCutSolvers) {
    for (std::uint64_t s = 0; s < 10; ++s) {
      EXPECT_DOUBLE_EQ(cut_weight(k2, solve(k2, s, nullptr)), 1.0) << name;
      EXPECT_DOUBLE_EQ(cut_weight(tri, solve(tri, s, nullptr)), 2.0) << name;
    }
  }
}

TEST(CutGreedyTest, Sg3WeightedTriangle) {
  const auto c = MaxCutInstance::from_graph(Graph(3, {{0, 1, 3.0}, {0, 2, 2.0}, {1, 2, 1.0}}));
  for (std::uint64_t s = 0; s < 10; ++s) {
    const CutPartition p = maxcut_sg3(c, s);
    EXPECT_DOUBLE_EQ(cut_weight(c, p), 5.0);
    EXPECT_EQ(p, CutPartition(std::vector<std::uint8_t>{1, 2, 2}));
  }
}

TEST(CutGreedyTest, SecKeepsNegativeEdgeUncut) {
  const auto c = MaxCutInstance::from_graph(Graph(2, {{0, 1, -5.0}}));
  for (std::uint64_t s = 0; s < 5; ++s) {
    const CutPartition p = maxcut_sec(c, s);
    EXPECT_EQ(p.side(0), p.side(1));
    EXPECT_DOUBLE_EQ(cut_weight(c, p), 0.0);
  }
}

TEST(CutGreedyTest, VertexZeroEndsInFirstSide) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const auto c = MaxCutInstance::from_graph(gen_sk(15, rng()));
    for (const auto& [name, solve] : kCutSolvers) EXPECT_EQ(solve(c, trial, nullptr).side(0), 1);
  }
}

TEST(CutGreedyTest, PrimPlacementsTakeTheBetterSide) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const auto c = MaxCutInstance::from_graph(gen_sk(30, rng()));
    for (auto solve : {maxcut_sg, maxcut_sg3}) {
      GreedyTrace t;
      const CutPartition p = solve(c, trial, &t);
      ASSERT_EQ(t.size(), 30u);
      for (const auto& step : t) EXPECT_GE(step.gain, step.alt_gain);
      EXPECT_NEAR(trace_total(t), cut_weight(c, p), 1e-9);
    }
  }
}

TEST(CutGreedyTest, ContractionConservesCutWeight) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const auto c = MaxCutInstance::from_graph(trial % 2 ? gen_sk(25, rng())
                                                        : random_graph(rng, 40, 0.2));
    for (auto solve : {maxcut_ec, maxcut_sec}) {
      GreedyTrace t;
      const CutPartition p = solve(c, trial, &t);
      EXPECT_NEAR(trace_total(t), cut_weight(c, p), 1e-9);
    }
  }
}

TEST(CutGreedyTest, NeverExceedsExactOptimum) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    const auto c = MaxCutInstance::from_graph(gen_sk(10, rng()));
    const double opt = brute_max_cut(c.graph);
    for (const auto& [name, solve] : kCutSolvers)
      EXPECT_LE(cut_weight(c, solve(c, trial, nullptr)), opt + 1e-9) << name;
  }
}

TEST(CutGreedyTest, Sg3StartsFromHighDegreeVertexOnMisModels) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_graph(rng, 60, 0.3);
    GreedyTrace t;
    maxcut_sg3(embed_maxcut(mis_to_ising(g)), trial, &t);
    Vertex first = -1;
    for (const auto& step : t) {
      const int v = std::stoi(step.entity);
      if (v != 0) {
        first = static_cast<Vertex>(v - 1);
        break;
      }
    }
    ASSERT_GE(first, 0);
    std::vector<std::size_t> deg;
    for (Vertex v = 0; v < 60; ++v) deg.push_back(g.degree(v));
    std::sort(deg.begin(), deg.end(), std::greater<>());
    EXPECT_GE(g.degree(first), deg[5]) << "trial " << trial;
  }
}

TEST(CutGreedyTest, TraceCsv) {
  const auto c = MaxCutInstance::from_graph(Graph(2, {{0, 1, 1.0}}));
  GreedyTrace t;
  maxcut_ec(c, 1, &t);
  std::ostringstream out;
  write_trace_csv(out, t);
  EXPECT_EQ(out.str(), "step,entity,gain\n0,0-1,1\n");
}
