#include "cutmis/mis.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "cutmis/error.hpp"
#include "cutmis/greedy.hpp"
#include "cutmis/random.hpp"

namespace cutmis {

MisEncodingParams MisEncodingParams::with_lambda(double lambda) {
  if (!(lambda > 0.0)) throw UsageError("penalty ratio lambda must be positive");
  return {lambda, 1.0};
}

IndependentSet::IndependentSet(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
}

bool IndependentSet::contains(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

PruneFilter parse_prune_filter(std::string_view name) {
  if (name == "naive") return PruneFilter::naive;
  if (name == "min-filter" || name == "min") return PruneFilter::min_filter;
  if (name == "max-filter" || name == "max") return PruneFilter::max_filter;
  throw UsageError("unknown prune filter '" + std::string(name) + "'");
}

std::string_view to_string(PruneFilter f) {
  switch (f) {
    case PruneFilter::naive: return "naive";
    case PruneFilter::min_filter: return "min-filter";
    case PruneFilter::max_filter: return "max-filter";
  }
  return "?";
}

Qubo mis_to_qubo(const Graph& g, MisEncodingParams params) {
  if (!g.is_unweighted()) throw UsageError("MIS encoding needs an unweighted graph");
  if (!(params.beta > 0.0) || !(params.mu > 0.0))
    throw UsageError("MIS encoding needs beta > 0 and mu > 0");
  std::vector<QuboTerm> terms;
  terms.reserve(g.num_vertices() + g.num_edges());
  for (std::size_t v = 0; v < g.num_vertices(); ++v)
    terms.push_back({static_cast<Vertex>(v), static_cast<Vertex>(v), -params.mu});
  // A single (u, v) term of β symmetrizes to Q_uv = Q_vu = β/2.
  for (const auto& e : g.edges()) terms.push_back({e.u, e.v, params.beta});
  return Qubo(g.num_vertices(), terms);
}

IsingModel mis_to_ising(const Graph& g) {
  if (!g.is_unweighted()) throw UsageError("MIS encoding needs an unweighted graph");
  const auto n = static_cast<double>(g.num_vertices());
  const auto m = static_cast<double>(g.num_edges());
  std::vector<double> h(g.num_vertices());
  for (std::size_t v = 0; v < g.num_vertices(); ++v)
    h[v] = 0.25 * (static_cast<double>(g.degree(static_cast<Vertex>(v))) - 2.0);
  std::vector<Coupling> couplings;
  couplings.reserve(g.num_edges());
  for (const auto& e : g.edges()) couplings.push_back({e.u, e.v, -0.25});
  return IsingModel(0.25 * (m - 2.0 * n), std::move(h), std::move(couplings));
}

std::int64_t set_energy(const Graph& g, std::span<const std::uint8_t> x) {
  if (x.size() != g.num_vertices()) throw UsageError("set_energy: length mismatch");
  std::int64_t energy = 0;
  for (auto xi : x) energy -= xi ? 1 : 0;
  for (const auto& e : g.edges())
    if (x[e.u] && x[e.v]) ++energy;
  return energy;
}

BinaryVector decode_spins(const SpinAssignment& z) {
  BinaryVector x(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) x[i] = z[i] == -1 ? 1 : 0;
  return x;
}

SpinAssignment encode_selection(std::span<const std::uint8_t> x) {
  std::vector<std::int8_t> z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > 1) throw UsageError("encode_selection: non-binary entry");
    z[i] = static_cast<std::int8_t>(1 - 2 * x[i]);
  }
  return SpinAssignment(std::move(z));
}

BinaryVector to_selection(const IndependentSet& s, std::size_t n) {
  BinaryVector x(n, 0);
  for (Vertex v : s.vertices()) x.at(static_cast<std::size_t>(v)) = 1;
  return x;
}

IndependentSet selected_vertices(std::span<const std::uint8_t> x) {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i]) out.push_back(static_cast<Vertex>(i));
  return IndependentSet(std::move(out));
}

namespace {

IndependentSet prune_naive(const Graph& g, std::vector<std::uint8_t> x, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> induced;
  for (const auto& e : g.edges())
    if (x[e.u] && x[e.v]) induced.push_back(e);
  while (!induced.empty()) {
    const Edge e = induced[uniform_index(rng, induced.size())];
    const Vertex drop = uniform_index(rng, 2) == 0 ? e.u : e.v;
    x[drop] = 0;
    std::erase_if(induced, [&](const Edge& f) { return f.u == drop || f.v == drop; });
  }
  return selected_vertices(x);
}

}  // namespace

IndependentSet prune_to_independent(const Graph& g, std::span<const std::uint8_t> x,
                                    PruneFilter filter, std::uint64_t seed) {
  if (x.size() != g.num_vertices()) throw UsageError("prune_to_independent: length mismatch");
  if (filter == PruneFilter::naive) return prune_naive(g, {x.begin(), x.end()}, seed);

  const IndependentSet selected = selected_vertices(x);
  const Graph sub = induced_subgraph(g, selected.vertices());
  const IndependentSet local =
      filter == PruneFilter::min_filter ? mis_min(sub, seed) : mis_max(sub, seed);
  std::vector<Vertex> out;
  out.reserve(local.size());
  for (Vertex k : local.vertices()) out.push_back(selected.vertices()[k]);
  return IndependentSet(std::move(out));
}

bool is_independent(const Graph& g, std::span<const Vertex> s) {
  std::vector<char> in(g.num_vertices(), 0);
  for (Vertex v : s) {
    if (v < 0 || static_cast<std::size_t>(v) >= g.num_vertices())
      throw UsageError("is_independent: vertex " + std::to_string(v) + " out of range");
    in[v] = 1;
  }
  for (Vertex v : s)
    for (const auto& nb : g.neighbors(v))
      if (in[nb.v]) return false;
  return true;
}

void write_independent_set(std::ostream& out, const IndependentSet& s) {
  out << "# size " << s.size() << '\n';
  const auto& v = s.vertices();
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
  out << '\n';
}

std::vector<IndependentSet> read_independent_sets(std::istream& in) {
  std::vector<IndependentSet> sets;
  std::string line;
  std::size_t line_no = 0;
  long long expected = -1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (expected == 0) sets.emplace_back();
      std::istringstream hs(line.substr(1));
      std::string key;
      if (hs >> key && key == "size" && hs >> expected) continue;
      throw DataError("line " + std::to_string(line_no) + ": expected '# size k'");
    }
    if (expected < 0) throw DataError("line " + std::to_string(line_no) + ": missing size header");
    std::istringstream ls(line);
    std::vector<Vertex> ids;
    long long v = 0;
    while (ls >> v) ids.push_back(static_cast<Vertex>(v));
    if (!ls.eof()) throw DataError("line " + std::to_string(line_no) + ": malformed id");
    if (static_cast<long long>(ids.size()) != expected)
      throw DataError("line " + std::to_string(line_no) + ": size header mismatch");
    sets.emplace_back(std::move(ids));
    expected = -1;
  }
  if (expected == 0) sets.emplace_back();
  return sets;
}

}  // namespace cutmis
