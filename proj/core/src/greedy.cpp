#include "cutmis/greedy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <unordered_map>

#include "cutmis/error.hpp"
#include "cutmis/random.hpp"

namespace cutmis {

void write_trace_csv(std::ostream& out, const GreedyTrace& trace) {
  auto old_precision = out.precision(17);
  out << "step,entity,gain\n";
  for (const auto& s : trace) out << s.step << ',' << s.entity << ',' << s.gain << '\n';
  out.precision(old_precision);
}

namespace {

// Uniform choice among equally good candidates seen so far (reservoir of one).
class TieBreaker {
 public:
  explicit TieBreaker(Rng& rng) : rng_(rng) {}

  // Returns true if the candidate should replace the current pick.
  bool offer_tie() { return uniform_index(rng_, ++count_) == 0; }
  void reset() { count_ = 1; }

 private:
  Rng& rng_;
  std::size_t count_ = 0;
};

void normalize_aux(CutPartition& p) {
  if (p.size() > 0 && p.side(0) == 2) p.swap_sides();
}

}  // namespace

// --- MIS greedy --------------------------------------------------------------

IndependentSet mis_min(const Graph& g, std::uint64_t seed) {
  const std::size_t n = g.num_vertices();
  Rng rng(seed);
  std::vector<std::size_t> deg(n);
  std::vector<char> alive(n, 1);
  for (std::size_t v = 0; v < n; ++v) deg[v] = g.degree(static_cast<Vertex>(v));

  std::vector<Vertex> chosen;
  std::size_t remaining = n;
  while (remaining > 0) {
    Vertex pick = -1;
    std::size_t best = 0;
    TieBreaker ties(rng);
    for (std::size_t v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      if (pick < 0 || deg[v] < best) {
        pick = static_cast<Vertex>(v);
        best = deg[v];
        ties.reset();
      } else if (deg[v] == best && ties.offer_tie()) {
        pick = static_cast<Vertex>(v);
      }
    }
    chosen.push_back(pick);
    std::vector<Vertex> doomed{pick};
    for (const auto& nb : g.neighbors(pick))
      if (alive[nb.v]) doomed.push_back(nb.v);
    for (Vertex v : doomed) alive[v] = 0;
    for (Vertex v : doomed) {
      for (const auto& nb : g.neighbors(v))
        if (alive[nb.v]) --deg[nb.v];
    }
    remaining -= doomed.size();
  }
  return IndependentSet(std::move(chosen));
}

IndependentSet mis_max(const Graph& g, std::uint64_t seed) {
  const std::size_t n = g.num_vertices();
  Rng rng(seed);
  std::vector<std::size_t> deg(n);
  std::vector<char> alive(n, 1);
  for (std::size_t v = 0; v < n; ++v) deg[v] = g.degree(static_cast<Vertex>(v));

  std::size_t edges_left = g.num_edges();
  while (edges_left > 0) {
    Vertex pick = -1;
    std::size_t best = 0;
    TieBreaker ties(rng);
    for (std::size_t v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      if (pick < 0 || deg[v] > best) {
        pick = static_cast<Vertex>(v);
        best = deg[v];
        ties.reset();
      } else if (deg[v] == best && ties.offer_tie()) {
        pick = static_cast<Vertex>(v);
      }
    }
    alive[pick] = 0;
    for (const auto& nb : g.neighbors(pick)) {
      if (alive[nb.v]) {
        --deg[nb.v];
        --edges_left;
      }
    }
  }
  std::vector<Vertex> kept;
  for (std::size_t v = 0; v < n; ++v)
    if (alive[v]) kept.push_back(static_cast<Vertex>(v));
  return IndependentSet(std::move(kept));
}

// --- Prim class ----------------------------------------------------------------

CutPartition maxcut_sg(const MaxCutInstance& c, std::uint64_t seed, GreedyTrace* trace) {
  const Graph& g = c.graph;
  const std::size_t n = g.num_vertices();
  Rng rng(seed);
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<std::uint8_t> side(n, 0);  // 0 = unplaced
  std::size_t step = 0;
  for (Vertex v : order) {
    double to_v1 = 0.0, to_v2 = 0.0;
    for (const auto& nb : g.neighbors(v)) {
      if (side[nb.v] == 1) to_v1 += nb.w;
      if (side[nb.v] == 2) to_v2 += nb.w;
    }
    // Joining V1 cuts the edges into V2 and vice versa.
    const double gain1 = to_v2, gain2 = to_v1;
    int s = gain1 > gain2 ? 1 : gain2 > gain1 ? 2 : 1 + static_cast<int>(uniform_index(rng, 2));
    side[v] = static_cast<std::uint8_t>(s);
    if (trace) {
      trace->push_back({step, std::to_string(v), s == 1 ? gain1 : gain2, s == 1 ? gain2 : gain1});
    }
    ++step;
  }
  CutPartition p(std::move(side));
  normalize_aux(p);
  return p;
}

CutPartition maxcut_sg3(const MaxCutInstance& c, std::uint64_t seed, GreedyTrace* trace) {
  const Graph& g = c.graph;
  const std::size_t n = g.num_vertices();
  Rng rng(seed);
  std::vector<std::uint8_t> side(n, 0);
  std::vector<double> sigma1(n, 0.0), sigma2(n, 0.0);
  std::size_t step = 0;

  auto place = [&](Vertex v, int s) {
    const double gain = s == 1 ? sigma2[v] : sigma1[v];
    const double alt = s == 1 ? sigma1[v] : sigma2[v];
    side[v] = static_cast<std::uint8_t>(s);
    for (const auto& nb : g.neighbors(v)) (s == 1 ? sigma1 : sigma2)[nb.v] += nb.w;
    if (trace) trace->push_back({step, std::to_string(v), gain, alt});
    ++step;
  };

  std::size_t placed = 0;
  if (g.num_edges() > 0) {
    const Edge* seed_edge = nullptr;
    TieBreaker ties(rng);
    for (const auto& e : g.edges()) {
      if (!seed_edge || std::abs(e.w) > std::abs(seed_edge->w)) {
        seed_edge = &e;
        ties.reset();
      } else if (std::abs(e.w) == std::abs(seed_edge->w) && ties.offer_tie()) {
        seed_edge = &e;
      }
    }
    // The heavier endpoint placement is the one that gains |w|: opposite
    // sides for a positive edge, the same side for a negative one.
    place(seed_edge->u, 1);
    place(seed_edge->v, seed_edge->w > 0 ? 2 : 1);
    placed = 2;
  }

  for (; placed < n; ++placed) {
    Vertex pick = -1;
    double best = 0.0;
    TieBreaker ties(rng);
    for (std::size_t v = 0; v < n; ++v) {
      if (side[v]) continue;
      const double score = std::abs(sigma1[v] - sigma2[v]);
      if (pick < 0 || score > best) {
        pick = static_cast<Vertex>(v);
        best = score;
        ties.reset();
      } else if (score == best && ties.offer_tie()) {
        pick = static_cast<Vertex>(v);
      }
    }
    const double gain1 = sigma2[pick], gain2 = sigma1[pick];
    int s = gain1 > gain2 ? 1 : gain2 > gain1 ? 2 : 1 + static_cast<int>(uniform_index(rng, 2));
    place(pick, s);
  }
  CutPartition p(std::move(side));
  normalize_aux(p);
  return p;
}

// --- Kruskal class -------------------------------------------------------------

namespace {

enum class ContractionRule { max_weight, max_abs_weight };

// Edge contraction over supernodes. Every original vertex records its root
// supernode and its side relative to that root. Merging v into u with
// relation s (0 = same side, 1 = opposite) rewrites an edge (v, x) of weight w
// as (u, x) with weight w when s = 0, or as a constant w plus (u, x) with
// weight −w when s = 1, since cut(v, x) = 1 − cut(u, x) in that case.
class Contractor {
 public:
  explicit Contractor(const Graph& g)
      : root_(g.num_vertices()), rel_(g.num_vertices(), 0), members_(g.num_vertices()),
        adj_(g.num_vertices()) {
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
      root_[v] = static_cast<Vertex>(v);
      members_[v] = {static_cast<Vertex>(v)};
    }
    for (const auto& e : g.edges()) {
      adj_[e.u][e.v] += e.w;
      adj_[e.v][e.u] += e.w;
    }
  }

  // Picks the next edge under `rule`, or returns false when none qualifies.
  bool select(ContractionRule rule, Rng& rng, Vertex& a, Vertex& b, double& w) const {
    bool found = false;
    double best = 0.0;
    TieBreaker ties(rng);
    for (std::size_t r = 0; r < adj_.size(); ++r) {
      for (const auto& [x, wx] : adj_[r]) {
        if (static_cast<std::size_t>(x) < r) continue;
        const double key = rule == ContractionRule::max_weight ? wx : std::abs(wx);
        if (!found || key > best) {
          found = true;
          best = key;
          a = static_cast<Vertex>(r);
          b = x;
          w = wx;
          ties.reset();
        } else if (key == best && ties.offer_tie()) {
          a = static_cast<Vertex>(r);
          b = x;
          w = wx;
        }
      }
    }
    if (!found) return false;
    return rule == ContractionRule::max_abs_weight || best > 0.0;
  }

  // Contracts roots a and b; returns the cut weight fixed by the merge.
  double contract(Vertex a, Vertex b, int relation) {
    if (members_[a].size() + adj_[a].size() < members_[b].size() + adj_[b].size()) std::swap(a, b);
    const Vertex keep = a, gone = b;
    double fixed = 0.0;
    auto& keep_adj = adj_[keep];
    for (const auto& [x, w] : adj_[gone]) {
      adj_[x].erase(gone);
      if (x == keep) {
        if (relation == 1) fixed += w;
        keep_adj.erase(gone);
        continue;
      }
      double merged;
      if (relation == 0) {
        merged = (keep_adj[x] += w);
      } else {
        fixed += w;
        merged = (keep_adj[x] -= w);
      }
      if (merged == 0.0) {
        keep_adj.erase(x);
        adj_[x].erase(keep);
      } else {
        adj_[x][keep] = merged;
      }
    }
    adj_[gone].clear();
    for (Vertex m : members_[gone]) {
      root_[m] = keep;
      rel_[m] ^= static_cast<std::uint8_t>(relation);
    }
    members_[keep].insert(members_[keep].end(), members_[gone].begin(), members_[gone].end());
    members_[gone].clear();
    return fixed;
  }

  CutPartition unfold() const {
    std::vector<std::uint8_t> side(root_.size());
    for (std::size_t v = 0; v < root_.size(); ++v) side[v] = static_cast<std::uint8_t>(1 + rel_[v]);
    return CutPartition(std::move(side));
  }

 private:
  std::vector<Vertex> root_;
  std::vector<std::uint8_t> rel_;
  std::vector<std::vector<Vertex>> members_;
  std::vector<std::unordered_map<Vertex, double>> adj_;
};

CutPartition contract_all(const MaxCutInstance& c, ContractionRule rule, std::uint64_t seed,
                          GreedyTrace* trace) {
  Rng rng(seed);
  Contractor k(c.graph);
  Vertex a = 0, b = 0;
  double w = 0.0;
  std::size_t step = 0;
  while (k.select(rule, rng, a, b, w)) {
    const int relation = w > 0.0 ? 1 : 0;
    const double fixed = k.contract(a, b, relation);
    if (trace) {
      trace->push_back({step, std::to_string(a) + "-" + std::to_string(b), fixed, 0.0});
    }
    ++step;
  }
  CutPartition p = k.unfold();
  normalize_aux(p);
  return p;
}

}  // namespace

CutPartition maxcut_ec(const MaxCutInstance& c, std::uint64_t seed, GreedyTrace* trace) {
  return contract_all(c, ContractionRule::max_weight, seed, trace);
}

CutPartition maxcut_sec(const MaxCutInstance& c, std::uint64_t seed, GreedyTrace* trace) {
  return contract_all(c, ContractionRule::max_abs_weight, seed, trace);
}

}  // namespace cutmis
