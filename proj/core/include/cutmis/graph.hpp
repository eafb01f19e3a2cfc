#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace cutmis {

using Vertex = std::int32_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  double w = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  Vertex v = 0;
  double w = 1.0;
};

// Undirected simple graph with real edge weights and dense vertex ids 0..n-1.
//
// Edges are stored canonically (u < v) in ascending (u, v) order; the
// adjacency is a CSR view built once at construction. Instances are immutable
// and cheap to share read-only between threads.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t num_vertices);

  // Throws UsageError on self-loops, out-of-range endpoints or repeated
  // unordered pairs.
  Graph(std::size_t num_vertices, std::vector<Edge> edges);

  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Neighbor> neighbors(Vertex v) const;

  std::size_t degree(Vertex v) const;
  double avg_degree() const noexcept;
  std::size_t max_degree() const noexcept;

  // True if every edge has weight exactly 1.
  bool is_unweighted() const noexcept;
  bool has_edge(Vertex u, Vertex v) const;
  double total_weight() const noexcept;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void check_vertex(Vertex v) const;
  void build_adjacency();

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Neighbor> adjacency_;
};

// Subgraph induced by `vertices` (ascending, unique). Vertex k of the result
// corresponds to vertices[k].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

// 64-bit fingerprint of the edge set, for determinism and diversity checks.
std::uint64_t edge_set_hash(const Graph& g);

// --- generators -----------------------------------------------------------

// Erdos-Renyi G(n, p) with unit weights.
Graph gen_er(std::size_t n, double p, std::uint64_t seed);

// Random d-regular simple graph via the pairing model.
Graph gen_regular(std::size_t n, std::size_t d, std::uint64_t seed);

// Complete graph on n vertices with i.i.d. N(0,1) weights.
//
// Weights are drawn with std::normal_distribution from a mt19937_64 seeded
// with `seed`, in ascending (u, v) edge order.
Graph gen_sk(std::size_t n, std::uint64_t seed);

// --- file formats -----------------------------------------------------------

struct DimacsGraph {
  Graph graph;
  std::size_t duplicate_edges = 0;  // repeated `e` lines that were collapsed
  std::size_t declared_edges = 0;   // m from the problem line
};

// DIMACS ASCII: `c` comments, one `p edge n m` line, `e u v` with 1-based ids.
// Errors are reported as DataError carrying the line number.
DimacsGraph parse_dimacs(std::istream& in);
void write_dimacs(std::ostream& out, const Graph& g);

// Plain edge list: `u v [w]` per line, 0-based ids, `#` starts a comment.
// The vertex count is one more than the largest id unless a `# vertices n`
// header is present.
Graph parse_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

// Reads a file in either format, sniffing DIMACS by its `p`/`e`/`c` lines.
Graph read_graph_file(const std::filesystem::path& path);

}  // namespace cutmis
