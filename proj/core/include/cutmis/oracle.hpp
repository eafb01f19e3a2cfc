#pragma once

#include <cstdint>

#include "cutmis/graph.hpp"
#include "cutmis/ising.hpp"
#include "cutmis/mis.hpp"

namespace cutmis {

// Exact optimum with a witness that re-evaluates to it. Among optimal
// witnesses the lexicographically smallest is reported.
template <typename Value, typename Witness>
struct ExactResult {
  Value optimum{};
  Witness witness;
  std::uint64_t nodes_explored = 0;
};

inline constexpr std::size_t kExactMisLimit = 64;
inline constexpr std::size_t kExactEnumerationLimit = 24;

// Bitset branch-and-bound with a clique-cover bound. n ≤ 64.
// The witness is the lexicographically smallest maximum independent set.
ExactResult<std::size_t, IndependentSet> exact_mis(const Graph& g);

// Exhaustive over the 2^(n−1) cuts with vertex 0 in V1. n ≤ 24.
ExactResult<double, CutPartition> exact_maxcut(const MaxCutInstance& c);

// Exhaustive over all 2^n spin states. n ≤ 24.
ExactResult<double, SpinAssignment> exact_ising_ground(const IsingModel& m);

}  // namespace cutmis
