#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "cutmis/ising.hpp"

namespace cutmis {

enum class BetaSchedule { geometric, linear };
enum class VisitOrder { sequential, random };

BetaSchedule parse_beta_schedule(std::string_view name);

struct AnnealParams {
  std::size_t num_sweeps = 1000;
  std::size_t num_reads = 1;
  BetaSchedule schedule = BetaSchedule::geometric;
  // Left empty, both endpoints are derived from the model (default_beta_range).
  std::optional<double> beta_hot;
  std::optional<double> beta_cold;
  VisitOrder order = VisitOrder::sequential;
  std::uint64_t seed = 0;
};

struct AnnealResult {
  SpinAssignment best_spins;
  double best_energy = 0.0;
  std::vector<double> per_read_energies;
  std::chrono::nanoseconds elapsed{0};
};

struct BetaRange {
  double hot = 0.0;
  double cold = 0.0;
};

// hot = ln 2 / ΔE_max, cold = ln 1000 / ΔE_min, where ΔE_max bounds any
// single-flip energy change (2 max_i(|h_i| + Σ_j |J_ij|)) and ΔE_min is twice
// the smallest nonzero coefficient magnitude. A model without coefficients
// gets {0.1, 1}.
BetaRange default_beta_range(const IsingModel& m);

// β at sweep k of n under the schedule (k = 0 hot, k = n−1 cold).
double beta_at(BetaSchedule schedule, BetaRange range, std::size_t k, std::size_t n);

// Energy checkpoints written while annealing: one row per `stride` sweeps.
struct AnnealTrace {
  std::size_t stride = 0;  // 0 disables tracing
  struct Row {
    std::size_t read;
    std::size_t sweep;
    double energy;
  };
  std::vector<Row> rows;
};

void write_anneal_trace_csv(std::ostream& out, const AnnealTrace& trace);

// Single-spin-flip Metropolis annealing. Each read starts from uniform random
// spins drawn from its own derived seed and performs `num_sweeps` passes;
// every pass proposes a flip of each spin once. The lowest final energy over
// all reads is returned (ties go to the lower read index).
AnnealResult simulated_annealing(const IsingModel& m, const AnnealParams& p,
                                 AnnealTrace* trace = nullptr);

}  // namespace cutmis
