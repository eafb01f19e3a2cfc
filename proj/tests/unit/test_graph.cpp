#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "cutmis/error.hpp"
#include "cutmis/graph.hpp"
#include "cutmis/reference.hpp"

using namespace cutmis;

namespace {

void expect_consistent(const Graph& g) {
  std::set<std::pair<Vertex, Vertex>> pairs;
  std::vector<std::size_t> deg(g.num_vertices(), 0);
  for (const auto& e : g.edges()) {
    ASSERT_LT(e.u, e.v);
    ASSERT_LT(static_cast<std::size_t>(e.v), g.num_vertices());
    ASSERT_TRUE(pairs.insert({e.u, e.v}).second) << "duplicate pair";
    ++deg[e.u];
    ++deg[e.v];
  }
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    const auto nb = g.neighbors(static_cast<Vertex>(v));
    ASSERT_EQ(nb.size(), deg[v]);
    ASSERT_EQ(g.degree(static_cast<Vertex>(v)), deg[v]);
    for (const auto& x : nb) {
      const Vertex u = static_cast<Vertex>(v);
      ASSERT_TRUE(pairs.count({std::min(u, x.v), std::max(u, x.v)}));
    }
  }
}

std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(CUTMIS_TEST_FIXTURE_DIR) / (name + ".dimacs");
}

}  // namespace

TEST(GraphTest, RejectsLoopsDuplicatesAndRange) {
  EXPECT_THROW(Graph(3, {{1, 1, 1.0}}), UsageError);
  EXPECT_THROW(Graph(3, {{0, 1, 1.0}, {1, 0, 1.0}}), UsageError);
  EXPECT_THROW(Graph(3, {{0, 3, 1.0}}), UsageError);
  EXPECT_THROW(Graph(3, {{-1, 2, 1.0}}), UsageError);
}

TEST(GraphTest, CanonicalizesEdges) {
  Graph g(4, {{3, 1, 2.0}, {2, 0, 1.0}});
  ASSERT_EQ(g.num_edges(), 2u);
  EXPECT_EQ(g.edges()[0], (Edge{0, 2, 1.0}));
  EXPECT_EQ(g.edges()[1], (Edge{1, 3, 2.0}));
  EXPECT_TRUE(g.has_edge(3, 1));
  EXPECT_FALSE(g.has_edge(0, 1));
  EXPECT_FALSE(g.is_unweighted());
}

TEST(GraphTest, DegreesOfSmallGraphs) {
  Graph k4 = gen_er(4, 1.0, 7);
  for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(k4.degree(v), 3u);
  Graph p3(3, {{0, 1, 1.0}, {1, 2, 1.0}});
  EXPECT_EQ(p3.degree(1), 2u);
  EXPECT_DOUBLE_EQ(p3.avg_degree(), 4.0 / 3.0);
  EXPECT_THROW(p3.degree(3), UsageError);
}

TEST(GraphTest, ErExtremeProbabilities) {
  EXPECT_EQ(gen_er(4, 0.0, 3).num_edges(), 0u);
  EXPECT_EQ(gen_er(4, 1.0, 3).num_edges(), 6u);
  EXPECT_THROW(gen_er(4, 1.5, 3), UsageError);
  EXPECT_THROW(gen_er(4, -0.1, 3), UsageError);
  EXPECT_EQ(gen_er(0, 0.5, 3).num_vertices(), 0u);
}

TEST(GraphTest, ErEdgeCountMatchesBinomialMean) {
  const double pairs = 1000.0 * 999.0 / 2.0;
  const double mean = 0.5 * pairs, var = 0.25 * pairs;
  double sum = 0.0;
  const int seeds = 500;
  for (int s = 0; s < seeds; ++s) {
    const Graph g = gen_er(1000, 0.5, static_cast<std::uint64_t>(s));
    if (s < 3) expect_consistent(g);
    sum += static_cast<double>(g.num_edges());
  }
  const double sample_mean = sum / seeds;
  EXPECT_LE(std::abs(sample_mean - mean), 3.0 * std::sqrt(var / seeds));
}

TEST(GraphTest, SparseErAverageDegree) {
  double sum = 0.0;
  for (int s = 0; s < 100; ++s) sum += gen_er(400, 0.05, static_cast<std::uint64_t>(s)).avg_degree();
  EXPECT_NEAR(sum / 100.0, 0.05 * 399.0, 0.5);
}

TEST(GraphTest, RegularGraphs) {
  const Graph k4 = gen_regular(4, 3, 11);
  EXPECT_EQ(k4.num_edges(), 6u);
  for (int s = 0; s < 20; ++s) {
    const Graph g = gen_regular(6, 2, static_cast<std::uint64_t>(s));
    expect_consistent(g);
    for (Vertex v = 0; v < 6; ++v) EXPECT_EQ(g.degree(v), 2u);
  }
  EXPECT_THROW(gen_regular(5, 3, 1), UsageError);
  EXPECT_THROW(gen_regular(4, 4, 1), UsageError);
}

TEST(GraphTest, RegularGraphsAtExperimentScale) {
  for (std::size_t d : {20u, 50u}) {
    const Graph g = gen_regular(d * d, d, d);
    expect_consistent(g);
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
      ASSERT_EQ(g.degree(static_cast<Vertex>(v)), d);
  }
}

TEST(GraphTest, SkFirstWeightIsFirstNormalDraw) {
  const std::uint64_t seed = 42;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  const Graph g = gen_sk(2, seed);
  ASSERT_EQ(g.num_edges(), 1u);
  EXPECT_EQ(g.edges()[0].w, normal(rng));
}

TEST(GraphTest, SkWeightMoments) {
  std::vector<double> w;
  for (int s = 0; s < 20; ++s) {
    const Graph g = gen_sk(100, static_cast<std::uint64_t>(s));
    for (const auto& e : g.edges()) w.push_back(e.w);
  }
  const double n = static_cast<double>(w.size());
  const double mean = std::accumulate(w.begin(), w.end(), 0.0) / n;
  double var = 0.0;
  for (double x : w) var += (x - mean) * (x - mean);
  var /= n - 1.0;
  EXPECT_LE(std::abs(mean), 3.0 / std::sqrt(n));
  EXPECT_LE(std::abs(var - 1.0), 3.0 * std::sqrt(2.0 / n));
  EXPECT_EQ(gen_sk(100, 5), gen_sk(100, 5));
  EXPECT_EQ(gen_sk(10, 5).num_edges(), 45u);
}

TEST(GraphTest, GeneratorsAreSeedDeterministic) {
  int differing = 0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    EXPECT_EQ(gen_er(60, 0.3, s), gen_er(60, 0.3, s));
    EXPECT_EQ(gen_regular(36, 6, s), gen_regular(36, 6, s));
    if (edge_set_hash(gen_er(60, 0.3, s)) != edge_set_hash(gen_er(60, 0.3, s + 1000))) ++differing;
  }
  EXPECT_GE(differing, 99);
}

TEST(GraphTest, ParseDimacsPath) {
  std::istringstream in("c a path\np edge 3 2\ne 1 2\ne 2 3\n");
  const auto parsed = parse_dimacs(in);
  EXPECT_EQ(parsed.graph, Graph(3, {{0, 1, 1.0}, {1, 2, 1.0}}));
  EXPECT_EQ(parsed.duplicate_edges, 0u);
}

TEST(GraphTest, ParseDimacsCollapsesDuplicates) {
  std::istringstream in("p edge 3 3\ne 1 2\ne 2 1\ne 2 3\n");
  const auto parsed = parse_dimacs(in);
  EXPECT_EQ(parsed.graph.num_edges(), 2u);
  EXPECT_EQ(parsed.duplicate_edges, 1u);
  EXPECT_EQ(parsed.declared_edges, 3u);
}

TEST(GraphTest, ParseDimacsErrorsCarryLineNumbers) {
  auto message = [](const std::string& text) {
    std::istringstream in(text);
    try {
      parse_dimacs(in);
    } catch (const DataError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message("e 1 2\n").find("line 1"), std::string::npos);
  EXPECT_NE(message("p edge 3 1\ne 1 4\n").find("line 2"), std::string::npos);
  EXPECT_NE(message("p edge 3 1\nc ok\ne 1 x\n").find("line 3"), std::string::npos);
  EXPECT_NE(message("p edge 3 1\ne 1 1\n").find("line 2"), std::string::npos);
}

TEST(GraphTest, DimacsRoundTrip) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const Graph g = gen_er(50, 0.2, s);
    std::stringstream buf;
    write_dimacs(buf, g);
    EXPECT_EQ(parse_dimacs(buf).graph, g);
  }
  std::stringstream buf;
  write_dimacs(buf, Graph(3, {{0, 2, 1.0}}));
  EXPECT_EQ(buf.str(), "p edge 3 1\ne 1 3\n");
}

TEST(GraphTest, EdgeListRoundTripKeepsWeights) {
  const Graph g = gen_sk(12, 3);
  std::stringstream buf;
  write_edge_list(buf, g);
  EXPECT_EQ(parse_edge_list(buf), g);
}

TEST(GraphTest, InducedSubgraphRelabels) {
  const Graph g(5, {{0, 1, 1.0}, {1, 3, 1.0}, {3, 4, 1.0}, {0, 4, 1.0}});
  const std::vector<Vertex> keep{1, 3, 4};
  const Graph sub = induced_subgraph(g, keep);
  EXPECT_EQ(sub, Graph(3, {{0, 1, 1.0}, {1, 2, 1.0}}));
}

TEST(GraphTest, CodingFixturesMatchPublishedCounts) {
  for (const auto& inst : reference::kCodingTable) {
    const auto path = fixture(std::string(inst.name));
    if (!std::filesystem::exists(path)) continue;
    std::ifstream in(path);
    const auto parsed = parse_dimacs(in);
    EXPECT_EQ(parsed.graph.num_vertices(), static_cast<std::size_t>(inst.vertices)) << inst.name;
    EXPECT_EQ(parsed.graph.num_edges(), static_cast<std::size_t>(reference::simple_edge_count(inst)))
        << inst.name;
    EXPECT_EQ(parsed.duplicate_edges, 0u);
  }
  std::ifstream in64(fixture("1dc.64"));
  const Graph g64 = parse_dimacs(in64).graph;
  EXPECT_EQ(g64.num_vertices(), 64u);
  EXPECT_EQ(g64.num_edges(), 543u);
  std::ifstream in8(fixture("1tc.8"));
  EXPECT_EQ(parse_dimacs(in8).graph.num_edges(), 6u);
}
