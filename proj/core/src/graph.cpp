#include "cutmis/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

#include "cutmis/error.hpp"
#include "cutmis/random.hpp"

namespace cutmis {

Graph::Graph(std::size_t num_vertices) : n_(num_vertices) { build_adjacency(); }

Graph::Graph(std::size_t num_vertices, std::vector<Edge> edges)
    : n_(num_vertices), edges_(std::move(edges)) {
  for (auto& e : edges_) {
    if (e.u < 0 || e.v < 0 || static_cast<std::size_t>(e.u) >= n_ ||
        static_cast<std::size_t>(e.v) >= n_) {
      throw UsageError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") out of range for n=" + std::to_string(n_));
    }
    if (e.u == e.v) throw UsageError("self-loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  auto dup = std::adjacent_find(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return a.u == b.u && a.v == b.v;
  });
  if (dup != edges_.end()) {
    throw UsageError("duplicate edge (" + std::to_string(dup->u) + "," +
                     std::to_string(dup->v) + ")");
  }
  build_adjacency();
}

void Graph::build_adjacency() {
  offsets_.assign(n_ + 1, 0);
  for (const auto& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  adjacency_.resize(2 * edges_.size());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  // Edges are sorted, so each neighbor list comes out ascending.
  for (const auto& e : edges_) adjacency_[cursor[e.u]++] = {e.v, e.w};
  for (const auto& e : edges_) adjacency_[cursor[e.v]++] = {e.u, e.w};
  for (std::size_t v = 0; v < n_; ++v) {
    std::sort(adjacency_.begin() + offsets_[v], adjacency_.begin() + offsets_[v + 1],
              [](const Neighbor& a, const Neighbor& b) { return a.v < b.v; });
  }
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= n_) {
    throw UsageError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
  }
}

std::span<const Neighbor> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

std::size_t Graph::degree(Vertex v) const {
  check_vertex(v);
  return offsets_[v + 1] - offsets_[v];
}

double Graph::avg_degree() const noexcept {
  return n_ == 0 ? 0.0 : 2.0 * static_cast<double>(edges_.size()) / static_cast<double>(n_);
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (std::size_t v = 0; v < n_; ++v) best = std::max(best, offsets_[v + 1] - offsets_[v]);
  return best;
}

bool Graph::is_unweighted() const noexcept {
  return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.w == 1.0; });
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  check_vertex(v);
  return std::binary_search(nb.begin(), nb.end(), Neighbor{v, 0.0},
                            [](const Neighbor& a, const Neighbor& b) { return a.v < b.v; });
}

double Graph::total_weight() const noexcept {
  double s = 0.0;
  for (const auto& e : edges_) s += e.w;
  return s;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> index(g.num_vertices(), -1);
  for (std::size_t k = 0; k < vertices.size(); ++k) index[vertices[k]] = static_cast<Vertex>(k);
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    for (const auto& nb : g.neighbors(vertices[k])) {
      Vertex j = index[nb.v];
      if (j > static_cast<Vertex>(k)) edges.push_back({static_cast<Vertex>(k), j, nb.w});
    }
  }
  return Graph(vertices.size(), std::move(edges));
}

std::uint64_t edge_set_hash(const Graph& g) {
  std::uint64_t h = mix64(g.num_vertices());
  for (const auto& e : g.edges()) {
    std::uint64_t bits = 0;
    static_assert(sizeof(double) == sizeof(std::uint64_t));
    std::memcpy(&bits, &e.w, sizeof bits);
    h = mix64(h ^ (static_cast<std::uint64_t>(e.u) << 32 | static_cast<std::uint32_t>(e.v)));
    h = mix64(h ^ bits);
  }
  return h;
}

// --- generators -----------------------------------------------------------

Graph gen_er(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw UsageError("edge probability must lie in [0, 1]");
  std::vector<Edge> edges;
  if (n < 2 || p == 0.0) return Graph(n);
  Rng rng(seed);
  if (p == 1.0) {
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), 1.0});
    return Graph(n, std::move(edges));
  }
  // Geometric skipping over the n(n-1)/2 pairs in lexicographic order; each
  // pair is still included independently with probability p.
  std::geometric_distribution<std::uint64_t> skip(p);
  const std::uint64_t total = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  edges.reserve(static_cast<std::size_t>(static_cast<double>(total) * p * 1.05) + 16);
  std::uint64_t pos = skip(rng);
  std::size_t u = 0;
  std::uint64_t row_start = 0;  // linear index of pair (u, u+1)
  while (pos < total) {
    while (pos >= row_start + (n - 1 - u)) {
      row_start += n - 1 - u;
      ++u;
    }
    std::size_t v = u + 1 + static_cast<std::size_t>(pos - row_start);
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), 1.0});
    pos += 1 + skip(rng);
  }
  return Graph(n, std::move(edges));
}

namespace {

constexpr int kMaxRegularRestarts = 1000;

// One attempt at pairing the n*d half-edges. Pairs are drawn uniformly among
// the remaining points; a pair that would create a loop or a repeated edge is
// redrawn. Returns false when the remaining points admit no valid pair.
bool try_pairing(std::size_t n, std::size_t d, Rng& rng, std::vector<Edge>& edges) {
  std::vector<Vertex> points;
  points.reserve(n * d);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t k = 0; k < d; ++k) points.push_back(static_cast<Vertex>(v));
  std::vector<std::vector<Vertex>> adj(n);
  auto adjacent = [&](Vertex a, Vertex b) {
    const auto& l = adj[a];
    return std::find(l.begin(), l.end(), b) != l.end();
  };
  auto valid = [&](Vertex a, Vertex b) { return a != b && !adjacent(a, b); };

  edges.clear();
  int failures = 0;
  while (!points.empty()) {
    std::size_t i = uniform_index(rng, points.size());
    std::size_t j = uniform_index(rng, points.size());
    if (i == j || !valid(points[i], points[j])) {
      if (++failures < 64) continue;
      failures = 0;
      bool any = false;
      for (std::size_t a = 0; a < points.size() && !any; ++a)
        for (std::size_t b = a + 1; b < points.size() && !any; ++b)
          any = valid(points[a], points[b]);
      if (!any) return false;
      continue;
    }
    failures = 0;
    Vertex a = points[i], b = points[j];
    adj[a].push_back(b);
    adj[b].push_back(a);
    edges.push_back({a, b, 1.0});
    if (i < j) std::swap(i, j);
    points[i] = points.back();
    points.pop_back();
    points[j] = points.back();
    points.pop_back();
  }
  return true;
}

}  // namespace

Graph gen_regular(std::size_t n, std::size_t d, std::uint64_t seed) {
  if ((n * d) % 2 != 0) throw UsageError("n*d must be even for a d-regular graph");
  if (d >= n && !(n == 0 && d == 0)) throw UsageError("degree must be smaller than n");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (int attempt = 0; attempt < kMaxRegularRestarts; ++attempt) {
    if (try_pairing(n, d, rng, edges)) return Graph(n, std::move(edges));
  }
  throw DataError("random regular generation exceeded " + std::to_string(kMaxRegularRestarts) +
                  " restarts");
}

Graph gen_sk(std::size_t n, std::uint64_t seed) {
  if (n < 1) throw UsageError("SK instance needs n >= 1");
  Rng rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Edge> edges;
  edges.reserve(n * (n - 1) / 2);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), normal(rng)});
  return Graph(n, std::move(edges));
}

// --- file formats -----------------------------------------------------------

namespace {

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
  throw DataError("line " + std::to_string(line_no) + ": " + what);
}

std::string_view trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

DimacsGraph parse_dimacs(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_problem = false;
  long long n = 0;
  long long m = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    auto t = trim(line);
    if (t.empty() || t[0] == 'c') continue;
    std::istringstream ls{std::string(t)};
    std::string tag;
    ls >> tag;
    if (tag == "p") {
      if (have_problem) parse_fail(line_no, "second problem line");
      std::string format;
      if (!(ls >> format >> n >> m) || (format != "edge" && format != "col") || n < 0 || m < 0)
        parse_fail(line_no, "malformed problem line");
      have_problem = true;
      edges.reserve(static_cast<std::size_t>(m));
    } else if (tag == "e") {
      if (!have_problem) parse_fail(line_no, "edge line before problem line");
      long long u = 0, v = 0;
      if (!(ls >> u >> v)) parse_fail(line_no, "malformed edge line");
      std::string extra;
      if (ls >> extra) parse_fail(line_no, "trailing tokens on edge line");
      if (u < 1 || v < 1 || u > n || v > n) parse_fail(line_no, "vertex id out of range");
      if (u == v) parse_fail(line_no, "self-loop");
      edges.push_back({static_cast<Vertex>(std::min(u, v) - 1),
                       static_cast<Vertex>(std::max(u, v) - 1), 1.0});
    } else {
      parse_fail(line_no, "unrecognized line type '" + tag + "'");
    }
  }
  if (!have_problem) throw DataError("missing DIMACS problem line");

  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
  auto last = std::unique(edges.begin(), edges.end(),
                          [](const Edge& a, const Edge& b) { return a.u == b.u && a.v == b.v; });
  DimacsGraph out;
  out.duplicate_edges = static_cast<std::size_t>(edges.end() - last);
  out.declared_edges = static_cast<std::size_t>(m);
  edges.erase(last, edges.end());
  out.graph = Graph(static_cast<std::size_t>(n), std::move(edges));
  return out;
}

void write_dimacs(std::ostream& out, const Graph& g) {
  out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

Graph parse_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  long long declared_n = -1;
  long long max_id = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    auto t = trim(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      std::istringstream hs{std::string(t.substr(1))};
      std::string key;
      long long value = 0;
      if (hs >> key && key == "vertices" && hs >> value) declared_n = value;
      continue;
    }
    if (auto hash = t.find('#'); hash != std::string_view::npos) t = trim(t.substr(0, hash));
    std::istringstream ls{std::string(t)};
    long long u = 0, v = 0;
    double w = 1.0;
    if (!(ls >> u >> v)) parse_fail(line_no, "expected 'u v [w]'");
    if (!(ls >> w)) {
      if (!ls.eof()) parse_fail(line_no, "malformed weight");
      w = 1.0;
    }
    std::string extra;
    ls.clear();
    if (ls >> extra) parse_fail(line_no, "trailing tokens");
    if (u < 0 || v < 0) parse_fail(line_no, "negative vertex id");
    if (u == v) parse_fail(line_no, "self-loop");
    max_id = std::max({max_id, u, v});
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), w});
  }
  long long n = declared_n >= 0 ? declared_n : max_id + 1;
  if (max_id >= n) throw DataError("vertex id exceeds declared vertex count");
  try {
    return Graph(static_cast<std::size_t>(n), std::move(edges));
  } catch (const UsageError& e) {
    throw DataError(e.what());
  }
}

void write_edge_list(std::ostream& out, const Graph& g) {
  auto old_precision = out.precision(17);
  out << "# vertices " << g.num_vertices() << '\n';
  for (const auto& e : g.edges()) {
    out << e.u << ' ' << e.v;
    if (e.w != 1.0) out << ' ' << e.w;
    out << '\n';
  }
  out.precision(old_precision);
}

Graph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open graph file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();

  bool dimacs = false;
  std::istringstream sniff(text);
  std::string line;
  while (std::getline(sniff, line)) {
    auto t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    dimacs = t[0] == 'p' || t[0] == 'c' || t[0] == 'e';
    break;
  }
  std::istringstream body(text);
  if (dimacs) return parse_dimacs(body).graph;
  return parse_edge_list(body);
}

}  // namespace cutmis
