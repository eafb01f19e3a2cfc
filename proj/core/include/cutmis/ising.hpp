#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "cutmis/graph.hpp"

namespace cutmis {

// Binary decision vector, entries in {0, 1}.
using BinaryVector = std::vector<std::uint8_t>;

struct QuboTerm {
  Vertex i = 0;
  Vertex j = 0;
  double value = 0.0;
};

// Symmetric QUBO matrix in sparse form. Input terms are accumulated as a
// matrix M and stored as (M + M^T)/2, so xᵀQx equals xᵀMx.
class Qubo {
 public:
  struct OffDiagonal {
    Vertex i;  // i < j
    Vertex j;
    double q;  // Q_ij == Q_ji
  };

  Qubo() = default;
  Qubo(std::size_t n, std::span<const QuboTerm> terms);

  // Row-major square matrix; need not be symmetric.
  static Qubo from_dense(const std::vector<std::vector<double>>& m);

  std::size_t size() const noexcept { return diagonal_.size(); }
  std::span<const double> diagonal() const noexcept { return diagonal_; }
  std::span<const OffDiagonal> off_diagonal() const noexcept { return off_; }
  double at(Vertex i, Vertex j) const;

 private:
  std::vector<double> diagonal_;
  std::vector<OffDiagonal> off_;
};

struct Coupling {
  Vertex i = 0;
  Vertex j = 0;
  double value = 0.0;

  friend bool operator==(const Coupling&, const Coupling&) = default;
};

// H(z) = h0 - Σ_{i<j} J_ij z_i z_j - Σ_i h_i z_i.
//
// Couplings are canonical: i < j, ascending, each pair once, no zeros. Inputs
// that name a pair twice (in either orientation) are summed.
class IsingModel {
 public:
  IsingModel() = default;
  IsingModel(double offset, std::vector<double> fields, std::vector<Coupling> couplings);

  std::size_t size() const noexcept { return fields_.size(); }
  double offset() const noexcept { return offset_; }
  std::span<const double> fields() const noexcept { return fields_; }
  std::span<const Coupling> couplings() const noexcept { return couplings_; }

  // Couplings incident to i, as (partner, J) pairs.
  std::span<const Neighbor> coupled(Vertex i) const;

  friend bool operator==(const IsingModel& a, const IsingModel& b) {
    return a.offset_ == b.offset_ && a.fields_ == b.fields_ && a.couplings_ == b.couplings_;
  }

 private:
  double offset_ = 0.0;
  std::vector<double> fields_;
  std::vector<Coupling> couplings_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Neighbor> adjacency_;
};

class SpinAssignment {
 public:
  SpinAssignment() = default;
  // All spins +1.
  explicit SpinAssignment(std::size_t n) : z_(n, 1) {}
  // Throws UsageError unless every entry is exactly ±1.
  explicit SpinAssignment(std::vector<std::int8_t> z);

  std::size_t size() const noexcept { return z_.size(); }
  int operator[](std::size_t i) const noexcept { return z_[i]; }
  void flip(std::size_t i) noexcept { z_[i] = static_cast<std::int8_t>(-z_[i]); }
  std::span<const std::int8_t> values() const noexcept { return z_; }

  friend bool operator==(const SpinAssignment&, const SpinAssignment&) = default;
  friend auto operator<=>(const SpinAssignment&, const SpinAssignment&) = default;

 private:
  std::vector<std::int8_t> z_;
};

// Two-sided vertex partition; side 1 is V1 (spin +1), side 2 is V2 (spin -1).
class CutPartition {
 public:
  CutPartition() = default;
  explicit CutPartition(std::size_t n) : side_(n, 1) {}
  // Throws UsageError unless every entry is 1 or 2.
  explicit CutPartition(std::vector<std::uint8_t> side);

  std::size_t size() const noexcept { return side_.size(); }
  int side(std::size_t i) const noexcept { return side_[i]; }
  void set_side(std::size_t i, int s);
  void swap_sides() noexcept;
  std::span<const std::uint8_t> sides() const noexcept { return side_; }

  friend bool operator==(const CutPartition&, const CutPartition&) = default;
  friend auto operator<=>(const CutPartition&, const CutPartition&) = default;

 private:
  std::vector<std::uint8_t> side_;
};

// Weighted Max-Cut instance. When produced by embed_maxcut, vertex 0 is the
// auxiliary vertex carrying the local fields.
struct MaxCutInstance {
  Graph graph;
  double total_weight = 0.0;  // w0

  static MaxCutInstance from_graph(Graph g);
};

double qubo_value(const Qubo& q, std::span<const std::uint8_t> x);

IsingModel qubo_to_ising(const Qubo& q);

double ising_energy(const IsingModel& m, const SpinAssignment& z);

// Effective field f_i = h_i + Σ_j J_ij z_j. The energy holds -z_i f_i for
// spin i, so flipping it changes the energy by 2 z_i f_i.
double local_field(const IsingModel& m, const SpinAssignment& z, Vertex i);

// Auxiliary-vertex embedding: vertex 0 joins every i+1 with weight -2 h_i
// (zero fields are skipped); couplings map to weight -2 J_ij on (i+1, j+1).
MaxCutInstance embed_maxcut(const IsingModel& m);

// Ising model whose energy is w0/2 minus the cut weight, so that ground
// states are maximum cuts. Needs no auxiliary vertex.
IsingModel maxcut_to_ising(const MaxCutInstance& c);

double cut_weight(const MaxCutInstance& c, const CutPartition& p);

// Spin form of the cut weight, -½ Σ w z z + ½ w0, evaluated over spins.
double cut_weight_from_spins(const MaxCutInstance& c, const SpinAssignment& z);

// Maps V1 to +1 and V2 to -1, after a global flip that puts vertex 0 in V1.
SpinAssignment spins_from_cut(const CutPartition& p);
CutPartition cut_from_spins(const SpinAssignment& z);

// Spins of an embedded instance (vertex 0 auxiliary) <-> model spins.
SpinAssignment with_auxiliary(const SpinAssignment& z);
SpinAssignment strip_auxiliary(const SpinAssignment& z_star);

// `ising n h0` header, then `h i value` and `J i j value` lines (0-based,
// i < j), written with 17 significant digits.
void write_ising(std::ostream& out, const IsingModel& m);
IsingModel read_ising(std::istream& in);

}  // namespace cutmis
