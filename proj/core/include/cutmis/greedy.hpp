#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cutmis/graph.hpp"
#include "cutmis/ising.hpp"
#include "cutmis/mis.hpp"

namespace cutmis {

// One decision of a greedy run. For vertex placements `entity` is the vertex
// and `gain`/`alt_gain` are the cut gains on the chosen and the rejected
// side. For contractions `entity` is "u-v" and `gain` is the cut weight the
// contraction fixes.
struct TraceStep {
  std::size_t step = 0;
  std::string entity;
  double gain = 0.0;
  double alt_gain = 0.0;
};

using GreedyTrace = std::vector<TraceStep>;

void write_trace_csv(std::ostream& out, const GreedyTrace& trace);

// Best-in: take a minimum-degree vertex of the residual graph, delete it and
// its neighbors, repeat. Ties are broken uniformly under `seed`.
IndependentSet mis_min(const Graph& g, std::uint64_t seed);

// Worst-out: delete a maximum-degree vertex until no edge remains.
IndependentSet mis_max(const Graph& g, std::uint64_t seed);

// Max-Cut greedy heuristics. Every result is normalized so that vertex 0 is
// in V1, which is the z0 = +1 convention for embedded instances.
//
// SG: vertices in a seeded random order, each placed on the side with the
// larger gain against the vertices already placed.
CutPartition maxcut_sg(const MaxCutInstance& c, std::uint64_t seed, GreedyTrace* trace = nullptr);

// SG3: start from the heaviest |w| edge, then repeatedly place the unplaced
// vertex with the largest |σ1 − σ2| on its better side.
CutPartition maxcut_sg3(const MaxCutInstance& c, std::uint64_t seed, GreedyTrace* trace = nullptr);

// EC: contract the maximum-weight edge with its endpoints on opposite sides
// until no positive edge remains.
CutPartition maxcut_ec(const MaxCutInstance& c, std::uint64_t seed, GreedyTrace* trace = nullptr);

// SEC: contract the maximum-|w| edge; positive edges separate their
// endpoints, negative edges join them.
CutPartition maxcut_sec(const MaxCutInstance& c, std::uint64_t seed, GreedyTrace* trace = nullptr);

}  // namespace cutmis
