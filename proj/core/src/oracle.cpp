#include "cutmis/oracle.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "cutmis/error.hpp"

namespace cutmis {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int v) { return Mask{1} << v; }

class MisBranchAndBound {
 public:
  explicit MisBranchAndBound(const Graph& g) : n_(static_cast<int>(g.num_vertices())), nbr_(n_, 0) {
    for (const auto& e : g.edges()) {
      nbr_[e.u] |= bit(e.v);
      nbr_[e.v] |= bit(e.u);
    }
  }

  Mask all() const { return n_ == 64 ? ~Mask{0} : bit(n_) - 1; }
  Mask closed_neighborhood(int v) const { return nbr_[v] | bit(v); }

  // Independence number of the subgraph induced by P.
  int alpha(Mask p) {
    best_ = 0;
    search(p, 0);
    return best_;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  // Greedy clique cover of P; its size bounds α(P) from above.
  int clique_cover(Mask p) const {
    int cliques = 0;
    while (p) {
      const int v = std::countr_zero(p);
      p &= ~bit(v);
      Mask cand = p & nbr_[v];
      while (cand) {
        const int u = std::countr_zero(cand);
        p &= ~bit(u);
        cand &= nbr_[u];
      }
      ++cliques;
    }
    return cliques;
  }

  void search(Mask p, int size) {
    ++nodes_;
    if (p == 0) {
      best_ = std::max(best_, size);
      return;
    }
    if (size + std::popcount(p) <= best_) return;
    if (size + clique_cover(p) <= best_) return;

    int min_v = -1, max_v = -1, min_d = 65, max_d = -1;
    for (Mask q = p; q;) {
      const int v = std::countr_zero(q);
      q &= q - 1;
      const int d = std::popcount(nbr_[v] & p);
      if (d < min_d) min_d = d, min_v = v;
      if (d > max_d) max_d = d, max_v = v;
    }
    // A vertex of degree ≤ 1 belongs to some maximum independent set.
    if (min_d <= 1) {
      search(p & ~closed_neighborhood(min_v), size + 1);
      return;
    }
    search(p & ~closed_neighborhood(max_v), size + 1);
    search(p & ~bit(max_v), size);
  }

  int n_;
  std::vector<Mask> nbr_;
  int best_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

ExactResult<std::size_t, IndependentSet> exact_mis(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n > kExactMisLimit) {
    throw SizeLimitError("exact_mis supports at most " + std::to_string(kExactMisLimit) +
                         " vertices, got " + std::to_string(n));
  }
  MisBranchAndBound bb(g);
  const int target = bb.alpha(bb.all());

  // Lexicographically smallest witness: commit to the smallest vertex that
  // still extends to a set of the optimal size.
  std::vector<Vertex> chosen;
  Mask p = bb.all();
  for (int v = 0; v < static_cast<int>(n) && static_cast<int>(chosen.size()) < target; ++v) {
    if (!(p & bit(v))) continue;
    const Mask rest = p & ~bb.closed_neighborhood(v);
    const int need = target - static_cast<int>(chosen.size()) - 1;
    if (need == 0 || bb.alpha(rest) >= need) {
      chosen.push_back(static_cast<Vertex>(v));
      p = rest;
    } else {
      p &= ~bit(v);
    }
  }
  IndependentSet witness(std::move(chosen));
  if (witness.size() != static_cast<std::size_t>(target) || !is_independent(g, witness)) {
    throw InvariantError("exact_mis witness does not re-evaluate to the optimum");
  }
  return {static_cast<std::size_t>(target), std::move(witness), bb.nodes()};
}

ExactResult<double, CutPartition> exact_maxcut(const MaxCutInstance& c) {
  const Graph& g = c.graph;
  const std::size_t n = g.num_vertices();
  if (n > kExactEnumerationLimit) {
    throw SizeLimitError("exact_maxcut supports at most " + std::to_string(kExactEnumerationLimit) +
                         " vertices, got " + std::to_string(n));
  }
  if (n == 0) return {0.0, CutPartition(0), 1};

  double scale = 1.0;
  for (const auto& e : g.edges()) scale += std::abs(e.w);
  const double tol = 1e-9 * scale;

  std::vector<std::uint8_t> side(n, 1);
  std::vector<double> gain(n, 0.0);  // cut change if v switches sides
  for (const auto& e : g.edges()) {
    gain[e.u] += e.w;
    gain[e.v] += e.w;
  }
  double cut = 0.0;
  double best = 0.0;
  std::vector<std::uint8_t> best_side = side;
  const std::uint64_t states = std::uint64_t{1} << (n - 1);
  for (std::uint64_t k = 1; k < states; ++k) {
    const int v = 1 + std::countr_zero(k);  // Gray code: vertex 0 stays in V1
    cut += gain[v];
    side[v] = static_cast<std::uint8_t>(3 - side[v]);
    gain[v] = -gain[v];
    for (const auto& nb : g.neighbors(v))
      gain[nb.v] += side[nb.v] == side[v] ? 2.0 * nb.w : -2.0 * nb.w;
    if (cut > best + tol || (cut >= best - tol && side < best_side)) {
      best = std::max(best, cut);
      best_side = side;
    }
  }
  CutPartition witness(std::move(best_side));
  return {cut_weight(c, witness), std::move(witness), states};
}

ExactResult<double, SpinAssignment> exact_ising_ground(const IsingModel& m) {
  const std::size_t n = m.size();
  if (n > kExactEnumerationLimit) {
    throw SizeLimitError("exact_ising_ground supports at most " +
                         std::to_string(kExactEnumerationLimit) + " spins, got " +
                         std::to_string(n));
  }
  std::vector<std::int8_t> z(n, 1);
  SpinAssignment start(z);
  double energy = ising_energy(m, start);
  if (n == 0) return {energy, std::move(start), 1};

  double scale = 1.0 + std::abs(m.offset());
  for (double h : m.fields()) scale += std::abs(h);
  for (const auto& c : m.couplings()) scale += std::abs(c.value);
  const double tol = 1e-9 * scale;

  std::vector<double> field(m.fields().begin(), m.fields().end());
  for (const auto& c : m.couplings()) {
    field[c.i] += c.value;
    field[c.j] += c.value;
  }
  double best = energy;
  std::vector<std::int8_t> best_z = z;
  const std::uint64_t states = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < states; ++k) {
    const int i = std::countr_zero(k);
    energy += 2.0 * z[i] * field[i];
    z[i] = static_cast<std::int8_t>(-z[i]);
    for (const auto& nb : m.coupled(i)) field[nb.v] += 2.0 * z[i] * nb.w;
    if (energy < best - tol || (energy <= best + tol && z < best_z)) {
      best = std::min(best, energy);
      best_z = z;
    }
  }
  SpinAssignment witness(std::move(best_z));
  return {ising_energy(m, witness), std::move(witness), states};
}

}  // namespace cutmis
