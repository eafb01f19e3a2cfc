#include "cutmis/rank2.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>

#include "cutmis/error.hpp"
#include "cutmis/random.hpp"

namespace cutmis {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap(double t) {
  t = std::fmod(t, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  return t >= kTwoPi ? 0.0 : t;
}

double angular_distance(double a, double b) {
  double d = std::abs(a - b);
  return std::min(d, kTwoPi - d);
}

struct Relaxation {
  std::vector<double> theta;
  double value;
};

Relaxation relax_once(const MaxCutInstance& c, const Rank2Params& p, std::uint64_t seed,
                      std::vector<double>* history) {
  const Graph& g = c.graph;
  const std::size_t n = g.num_vertices();
  Rng rng(seed);
  std::vector<double> theta(n);
  for (auto& t : theta) t = kTwoPi * uniform01(rng);

  double f = relaxation_value(c, AngleVector(theta));
  if (history) history->push_back(f);
  for (std::size_t iter = 0; iter < p.max_iters; ++iter) {
    double max_move = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double cs = 0.0, sn = 0.0;
      for (const auto& nb : g.neighbors(static_cast<Vertex>(i))) {
        cs += nb.w * std::cos(theta[nb.v]);
        sn += nb.w * std::sin(theta[nb.v]);
      }
      if (cs == 0.0 && sn == 0.0) continue;
      const double next = wrap(std::atan2(sn, cs) + std::numbers::pi);
      // Vertex i contributes (W_i − C cos θ_i − S sin θ_i)/2 to f.
      const double before = cs * std::cos(theta[i]) + sn * std::sin(theta[i]);
      const double after = cs * std::cos(next) + sn * std::sin(next);
      if (after > before) continue;  // already optimal up to rounding
      max_move = std::max(max_move, angular_distance(theta[i], next));
      theta[i] = next;
      f += 0.5 * (before - after);
      if (history) history->push_back(f);
    }
    if (max_move <= p.grad_tolerance) break;
  }
  const double value = relaxation_value(c, AngleVector(theta));
  return {std::move(theta), value};
}

// Cut state with per-vertex flip gains.
class CutState {
 public:
  CutState(const Graph& g, std::vector<std::uint8_t> side) : g_(g), side_(std::move(side)) {
    gain_.assign(side_.size(), 0.0);
    for (const auto& e : g_.edges()) {
      if (side_[e.u] != side_[e.v]) {
        cut_ += e.w;
        gain_[e.u] -= e.w;
        gain_[e.v] -= e.w;
      } else {
        gain_[e.u] += e.w;
        gain_[e.v] += e.w;
      }
    }
  }

  void flip(Vertex v) {
    cut_ += gain_[v];
    side_[v] = static_cast<std::uint8_t>(3 - side_[v]);
    gain_[v] = -gain_[v];
    for (const auto& nb : g_.neighbors(v)) {
      gain_[nb.v] += side_[nb.v] == side_[v] ? 2.0 * nb.w : -2.0 * nb.w;
    }
  }

  void one_opt() {
    double scale = 0.0;
    for (const auto& e : g_.edges()) scale = std::max(scale, std::abs(e.w));
    const double eps = 1e-12 * std::max(1.0, scale);
    bool improved = true;
    while (improved) {
      improved = false;
      for (std::size_t v = 0; v < side_.size(); ++v) {
        if (gain_[v] > eps) {
          flip(static_cast<Vertex>(v));
          improved = true;
        }
      }
    }
  }

  double cut() const noexcept { return cut_; }
  int side(std::size_t v) const noexcept { return side_[v]; }
  const std::vector<std::uint8_t>& sides() const noexcept { return side_; }

 private:
  const Graph& g_;
  std::vector<std::uint8_t> side_;
  std::vector<double> gain_;
  double cut_ = 0.0;
};

}  // namespace

AngleVector::AngleVector(std::vector<double> theta) : theta_(std::move(theta)) {
  for (auto& t : theta_) {
    if (!std::isfinite(t)) throw UsageError("angles must be finite");
    t = wrap(t);
  }
}

double relaxation_value(const MaxCutInstance& c, const AngleVector& a) {
  if (a.size() != c.graph.num_vertices()) throw UsageError("relaxation_value: length mismatch");
  double f = 0.0;
  for (const auto& e : c.graph.edges()) f += e.w * (1.0 - std::cos(a[e.u] - a[e.v])) / 2.0;
  return f;
}

AngleVector relax_angles(const MaxCutInstance& c, const Rank2Params& p,
                         std::vector<double>* history) {
  if (p.restarts < 1) throw UsageError("rank2 needs at least one restart");
  if (!(p.grad_tolerance > 0.0)) throw UsageError("rank2 tolerance must be positive");
  Relaxation best{{}, -std::numeric_limits<double>::infinity()};
  for (std::size_t r = 0; r < p.restarts; ++r) {
    Relaxation run = relax_once(c, p, derive_seed(p.seed, {r}), history);
    if (run.value > best.value) best = std::move(run);
  }
  return AngleVector(std::move(best.theta));
}

CutPartition best_angular_cut(const MaxCutInstance& c, const AngleVector& a) {
  const Graph& g = c.graph;
  const std::size_t n = g.num_vertices();
  if (a.size() != n) throw UsageError("best_angular_cut: length mismatch");
  if (n == 0) return CutPartition(0);

  std::vector<double> gammas;
  gammas.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    gammas.push_back(a[i]);
    gammas.push_back(wrap(a[i] + std::numbers::pi));
  }
  std::sort(gammas.begin(), gammas.end());
  gammas.erase(std::unique(gammas.begin(), gammas.end()), gammas.end());

  auto membership = [&](double gamma, std::size_t v) -> std::uint8_t {
    return wrap(a[v] - gamma) < std::numbers::pi ? 2 : 1;
  };

  std::vector<std::uint8_t> side(n);
  for (std::size_t v = 0; v < n; ++v) side[v] = membership(gammas[0], v);
  CutState state(g, side);
  double best = state.cut();
  std::vector<std::uint8_t> best_side = state.sides();
  for (std::size_t k = 1; k < gammas.size(); ++k) {
    for (std::size_t v = 0; v < n; ++v) {
      if (membership(gammas[k], v) != state.side(v)) state.flip(static_cast<Vertex>(v));
    }
    if (state.cut() > best) {
      best = state.cut();
      best_side = state.sides();
    }
  }
  CutState polished(g, std::move(best_side));
  polished.one_opt();
  return CutPartition(polished.sides());
}

CutPartition maxcut_rank2(const MaxCutInstance& c, const Rank2Params& p) {
  if (p.restarts < 1) throw UsageError("rank2 needs at least one restart");
  CutPartition best;
  double best_weight = -std::numeric_limits<double>::infinity();
  Rank2Params single = p;
  single.restarts = 1;
  for (std::size_t r = 0; r < p.restarts; ++r) {
    single.seed = derive_seed(p.seed, {r, 0x72616e6b32ULL});
    CutPartition cut = best_angular_cut(c, relax_angles(c, single));
    const double w = cut_weight(c, cut);
    if (w > best_weight) {
      best_weight = w;
      best = std::move(cut);
    }
  }
  if (best.size() > 0 && best.side(0) == 2) best.swap_sides();
  return best;
}

void write_angles_csv(std::ostream& out, const AngleVector& a) {
  auto old_precision = out.precision(17);
  out << "vertex,theta\n";
  for (std::size_t i = 0; i < a.size(); ++i) out << i << ',' << a[i] << '\n';
  out.precision(old_precision);
}

}  // namespace cutmis
