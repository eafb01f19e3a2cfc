#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "cutmis/ising.hpp"

namespace cutmis {

// Angles on the unit circle, each reduced into [0, 2π).
class AngleVector {
 public:
  AngleVector() = default;
  explicit AngleVector(std::vector<double> theta);

  std::size_t size() const noexcept { return theta_.size(); }
  double operator[](std::size_t i) const noexcept { return theta_[i]; }
  std::span<const double> values() const noexcept { return theta_; }

 private:
  std::vector<double> theta_;
};

struct Rank2Params {
  std::size_t max_iters = 500;
  double grad_tolerance = 1e-6;
  std::size_t restarts = 1;
  std::uint64_t seed = 0;
};

// f(θ) = Σ_ij w_ij (1 − cos(θ_i − θ_j)) / 2.
double relaxation_value(const MaxCutInstance& c, const AngleVector& a);

// Coordinate ascent on f from random angles: each θ_i moves to the maximizer
// of f with the others fixed, atan2(S_i, C_i) + π with C_i = Σ_j w_ij cos θ_j
// and S_i = Σ_j w_ij sin θ_j. Stops after max_iters passes or once no angle
// moves by more than grad_tolerance. Returns the best of `restarts` runs.
//
// If `history` is given, f is appended after every coordinate update.
AngleVector relax_angles(const MaxCutInstance& c, const Rank2Params& p,
                         std::vector<double>* history = nullptr);

// Best cut among the half-circle splits [γ, γ+π) with γ at every θ_i and
// θ_i + π, then 1-opt single-vertex moves until none improves the cut.
CutPartition best_angular_cut(const MaxCutInstance& c, const AngleVector& a);

// Relaxation + extraction per restart; best cut over restarts, with vertex 0
// normalized into V1.
CutPartition maxcut_rank2(const MaxCutInstance& c, const Rank2Params& p);

// `vertex,theta` rows.
void write_angles_csv(std::ostream& out, const AngleVector& a);

}  // namespace cutmis
