#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "cutmis/graph.hpp"
#include "cutmis/ising.hpp"

namespace cutmis {

// Penalty encoding H(x) = β Σ_E x_i x_j − μ Σ_V x_i. Only λ = β/μ matters for
// the minimizers; μ is pinned to 1.
struct MisEncodingParams {
  double beta = 1.0;
  double mu = 1.0;

  double lambda() const noexcept { return beta / mu; }
  static MisEncodingParams with_lambda(double lambda);
};

class IndependentSet {
 public:
  IndependentSet() = default;
  // Sorts and deduplicates. Independence is not checked here; see
  // is_independent.
  explicit IndependentSet(std::vector<Vertex> vertices);

  std::size_t size() const noexcept { return vertices_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }
  std::span<const Vertex> vertices() const noexcept { return vertices_; }
  bool contains(Vertex v) const;

  friend bool operator==(const IndependentSet&, const IndependentSet&) = default;

 private:
  std::vector<Vertex> vertices_;
};

enum class PruneFilter { naive, min_filter, max_filter };

PruneFilter parse_prune_filter(std::string_view name);
std::string_view to_string(PruneFilter f);

// Rejects weighted graphs.
Qubo mis_to_qubo(const Graph& g, MisEncodingParams params = {});

// λ = 1 encoding in Ising form: J_ij = −1/4 on edges, h_i = (d_i − 2)/4,
// h0 = (m − 2n)/4.
IsingModel mis_to_ising(const Graph& g);

// |E1| − |V1| for the subgraph induced by x.
std::int64_t set_energy(const Graph& g, std::span<const std::uint8_t> x);

// z = −1 means selected.
BinaryVector decode_spins(const SpinAssignment& z);
SpinAssignment encode_selection(std::span<const std::uint8_t> x);

BinaryVector to_selection(const IndependentSet& s, std::size_t n);
IndependentSet selected_vertices(std::span<const std::uint8_t> x);

// Repairs an arbitrary selection into an independent set by deleting
// selected vertices only. The result has at least −set_energy(g, x) vertices.
//   naive       drop a random endpoint of a random induced edge, repeatedly
//   max_filter  run MAX on the induced subgraph
//   min_filter  run MIN on the induced subgraph
IndependentSet prune_to_independent(const Graph& g, std::span<const std::uint8_t> x,
                                    PruneFilter filter, std::uint64_t seed);

bool is_independent(const Graph& g, std::span<const Vertex> s);
inline bool is_independent(const Graph& g, const IndependentSet& s) {
  return is_independent(g, s.vertices());
}

// `# size k` header, then the sorted 0-based ids on a single line. Several
// sets may follow one another in the same stream.
void write_independent_set(std::ostream& out, const IndependentSet& s);
std::vector<IndependentSet> read_independent_sets(std::istream& in);

}  // namespace cutmis
