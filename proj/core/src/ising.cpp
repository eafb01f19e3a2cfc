#include "cutmis/ising.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include "cutmis/error.hpp"

namespace cutmis {

namespace {

void check_index(Vertex i, std::size_t n) {
  if (i < 0 || static_cast<std::size_t>(i) >= n) {
    throw UsageError("index " + std::to_string(i) + " out of range for n=" + std::to_string(n));
  }
}

void check_length(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    throw UsageError(std::string(what) + ": length " + std::to_string(got) + " != " +
                     std::to_string(want));
  }
}

}  // namespace

// --- Qubo ------------------------------------------------------------------

Qubo::Qubo(std::size_t n, std::span<const QuboTerm> terms) : diagonal_(n, 0.0) {
  std::map<std::pair<Vertex, Vertex>, double> acc;
  for (const auto& t : terms) {
    check_index(t.i, n);
    check_index(t.j, n);
    if (t.i == t.j) {
      diagonal_[t.i] += t.value;
    } else {
      // M_ij contributes value/2 to both Q_ij and Q_ji.
      acc[{std::min(t.i, t.j), std::max(t.i, t.j)}] += 0.5 * t.value;
    }
  }
  off_.reserve(acc.size());
  for (const auto& [key, q] : acc) {
    if (q != 0.0) off_.push_back({key.first, key.second, q});
  }
}

Qubo Qubo::from_dense(const std::vector<std::vector<double>>& m) {
  std::vector<QuboTerm> terms;
  for (std::size_t i = 0; i < m.size(); ++i) {
    check_length(m[i].size(), m.size(), "Qubo::from_dense row");
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m[i][j] != 0.0) terms.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j), m[i][j]});
  }
  return Qubo(m.size(), terms);
}

double Qubo::at(Vertex i, Vertex j) const {
  check_index(i, size());
  check_index(j, size());
  if (i == j) return diagonal_[i];
  if (i > j) std::swap(i, j);
  auto it = std::lower_bound(off_.begin(), off_.end(), std::pair{i, j},
                             [](const OffDiagonal& o, const std::pair<Vertex, Vertex>& k) {
                               return o.i != k.first ? o.i < k.first : o.j < k.second;
                             });
  return it != off_.end() && it->i == i && it->j == j ? it->q : 0.0;
}

double qubo_value(const Qubo& q, std::span<const std::uint8_t> x) {
  check_length(x.size(), q.size(), "qubo_value");
  for (auto xi : x) {
    if (xi > 1) throw UsageError("qubo_value: non-binary entry");
  }
  double value = 0.0;
  auto diag = q.diagonal();
  for (std::size_t i = 0; i < diag.size(); ++i)
    if (x[i]) value += diag[i];
  for (const auto& o : q.off_diagonal())
    if (x[o.i] && x[o.j]) value += 2.0 * o.q;
  return value;
}

IsingModel qubo_to_ising(const Qubo& q) {
  const std::size_t n = q.size();
  auto diag = q.diagonal();
  double h0 = 0.0;
  std::vector<double> h(n, 0.0);
  std::vector<Coupling> couplings;
  couplings.reserve(q.off_diagonal().size());
  for (std::size_t i = 0; i < n; ++i) {
    h0 += 0.5 * diag[i];
    h[i] += 0.5 * diag[i];
  }
  for (const auto& o : q.off_diagonal()) {
    h0 += 0.5 * o.q;
    h[o.i] += 0.5 * o.q;
    h[o.j] += 0.5 * o.q;
    couplings.push_back({o.i, o.j, -0.5 * o.q});
  }
  return IsingModel(h0, std::move(h), std::move(couplings));
}

// --- IsingModel --------------------------------------------------------------

IsingModel::IsingModel(double offset, std::vector<double> fields, std::vector<Coupling> couplings)
    : offset_(offset), fields_(std::move(fields)) {
  const std::size_t n = fields_.size();
  for (auto& c : couplings) {
    check_index(c.i, n);
    check_index(c.j, n);
    if (c.i == c.j) throw UsageError("diagonal coupling at " + std::to_string(c.i));
    if (c.i > c.j) std::swap(c.i, c.j);
  }
  std::sort(couplings.begin(), couplings.end(), [](const Coupling& a, const Coupling& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  for (const auto& c : couplings) {
    if (!couplings_.empty() && couplings_.back().i == c.i && couplings_.back().j == c.j) {
      couplings_.back().value += c.value;
    } else {
      couplings_.push_back(c);
    }
  }
  std::erase_if(couplings_, [](const Coupling& c) { return c.value == 0.0; });

  offsets_.assign(n + 1, 0);
  for (const auto& c : couplings_) {
    ++offsets_[c.i + 1];
    ++offsets_[c.j + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  adjacency_.resize(2 * couplings_.size());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const auto& c : couplings_) {
    adjacency_[cursor[c.i]++] = {c.j, c.value};
    adjacency_[cursor[c.j]++] = {c.i, c.value};
  }
}

std::span<const Neighbor> IsingModel::coupled(Vertex i) const {
  check_index(i, size());
  return {adjacency_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
}

// --- spins and cuts ------------------------------------------------------------

SpinAssignment::SpinAssignment(std::vector<std::int8_t> z) : z_(std::move(z)) {
  for (auto s : z_) {
    if (s != 1 && s != -1) throw UsageError("spin entries must be +1 or -1");
  }
}

CutPartition::CutPartition(std::vector<std::uint8_t> side) : side_(std::move(side)) {
  for (auto s : side_) {
    if (s != 1 && s != 2) throw UsageError("partition sides must be 1 or 2");
  }
}

void CutPartition::set_side(std::size_t i, int s) {
  if (s != 1 && s != 2) throw UsageError("partition sides must be 1 or 2");
  side_.at(i) = static_cast<std::uint8_t>(s);
}

void CutPartition::swap_sides() noexcept {
  for (auto& s : side_) s = static_cast<std::uint8_t>(3 - s);
}

MaxCutInstance MaxCutInstance::from_graph(Graph g) {
  double w0 = g.total_weight();
  return {std::move(g), w0};
}

double ising_energy(const IsingModel& m, const SpinAssignment& z) {
  check_length(z.size(), m.size(), "ising_energy");
  double coupling_sum = 0.0;
  for (const auto& c : m.couplings()) coupling_sum += c.value * z[c.i] * z[c.j];
  double field_sum = 0.0;
  auto h = m.fields();
  for (std::size_t i = 0; i < h.size(); ++i) field_sum += h[i] * z[i];
  return m.offset() - coupling_sum - field_sum;
}

double local_field(const IsingModel& m, const SpinAssignment& z, Vertex i) {
  check_length(z.size(), m.size(), "local_field");
  check_index(i, m.size());
  double f = m.fields()[i];
  for (const auto& nb : m.coupled(i)) f += nb.w * z[nb.v];
  return f;
}

MaxCutInstance embed_maxcut(const IsingModel& m) {
  const std::size_t n = m.size();
  std::vector<Edge> edges;
  edges.reserve(n + m.couplings().size());
  auto h = m.fields();
  for (std::size_t i = 0; i < n; ++i) {
    if (h[i] != 0.0) edges.push_back({0, static_cast<Vertex>(i + 1), -2.0 * h[i]});
  }
  for (const auto& c : m.couplings()) edges.push_back({c.i + 1, c.j + 1, -2.0 * c.value});
  return MaxCutInstance::from_graph(Graph(n + 1, std::move(edges)));
}

IsingModel maxcut_to_ising(const MaxCutInstance& c) {
  std::vector<Coupling> couplings;
  couplings.reserve(c.graph.num_edges());
  for (const auto& e : c.graph.edges()) couplings.push_back({e.u, e.v, -0.5 * e.w});
  return IsingModel(0.0, std::vector<double>(c.graph.num_vertices(), 0.0), std::move(couplings));
}

double cut_weight(const MaxCutInstance& c, const CutPartition& p) {
  check_length(p.size(), c.graph.num_vertices(), "cut_weight");
  double w = 0.0;
  for (const auto& e : c.graph.edges())
    if (p.side(e.u) != p.side(e.v)) w += e.w;
  return w;
}

double cut_weight_from_spins(const MaxCutInstance& c, const SpinAssignment& z) {
  check_length(z.size(), c.graph.num_vertices(), "cut_weight_from_spins");
  double s = 0.0;
  for (const auto& e : c.graph.edges()) s += e.w * z[e.u] * z[e.v];
  return -0.5 * s + 0.5 * c.total_weight;
}

SpinAssignment spins_from_cut(const CutPartition& p) {
  std::vector<std::int8_t> z(p.size());
  const bool flip = p.size() > 0 && p.side(0) == 2;
  for (std::size_t i = 0; i < p.size(); ++i) {
    bool v1 = (p.side(i) == 1) != flip;
    z[i] = v1 ? 1 : -1;
  }
  return SpinAssignment(std::move(z));
}

CutPartition cut_from_spins(const SpinAssignment& z) {
  std::vector<std::uint8_t> side(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) side[i] = z[i] == 1 ? 1 : 2;
  return CutPartition(std::move(side));
}

SpinAssignment with_auxiliary(const SpinAssignment& z) {
  std::vector<std::int8_t> out;
  out.reserve(z.size() + 1);
  out.push_back(1);
  out.insert(out.end(), z.values().begin(), z.values().end());
  return SpinAssignment(std::move(out));
}

SpinAssignment strip_auxiliary(const SpinAssignment& z_star) {
  if (z_star.size() == 0) throw UsageError("strip_auxiliary: empty spin vector");
  const int sign = z_star[0];
  std::vector<std::int8_t> out(z_star.size() - 1);
  for (std::size_t i = 1; i < z_star.size(); ++i)
    out[i - 1] = static_cast<std::int8_t>(z_star[i] * sign);
  return SpinAssignment(std::move(out));
}

// --- text format -------------------------------------------------------------

void write_ising(std::ostream& out, const IsingModel& m) {
  auto old_precision = out.precision(17);
  out << "ising " << m.size() << ' ' << m.offset() << '\n';
  auto h = m.fields();
  for (std::size_t i = 0; i < h.size(); ++i)
    if (h[i] != 0.0) out << "h " << i << ' ' << h[i] << '\n';
  for (const auto& c : m.couplings()) out << "J " << c.i << ' ' << c.j << ' ' << c.value << '\n';
  out.precision(old_precision);
}

IsingModel read_ising(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  long long n = 0;
  double h0 = 0.0;
  std::vector<double> h;
  std::vector<Coupling> couplings;
  auto fail = [&](const std::string& what) {
    throw DataError("line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == '#') continue;
    if (tag == "ising") {
      if (have_header) fail("repeated header");
      if (!(ls >> n >> h0) || n < 0) fail("malformed header");
      have_header = true;
      h.assign(static_cast<std::size_t>(n), 0.0);
    } else if (!have_header) {
      fail("record before 'ising' header");
    } else if (tag == "h") {
      long long i = 0;
      double v = 0.0;
      if (!(ls >> i >> v) || i < 0 || i >= n) fail("malformed field line");
      h[static_cast<std::size_t>(i)] += v;
    } else if (tag == "J") {
      long long i = 0, j = 0;
      double v = 0.0;
      if (!(ls >> i >> j >> v) || i < 0 || j < 0 || i >= n || j >= n || i == j)
        fail("malformed coupling line");
      couplings.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j), v});
    } else {
      fail("unknown record '" + tag + "'");
    }
  }
  if (!have_header) throw DataError("missing 'ising' header");
  return IsingModel(h0, std::move(h), std::move(couplings));
}

}  // namespace cutmis
