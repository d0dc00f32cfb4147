#include "gcat/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "gcat/error.hpp"

namespace gcat {

namespace {

template <class T>
bool has_adjacent_duplicate(const std::vector<T>& sorted, auto key) {
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (key(sorted[i - 1]) == key(sorted[i])) return true;
  return false;
}

}  // namespace

Graph::Graph(std::vector<VertexId> vertices, std::vector<EdgeSpec> edges, bool directed,
             bool simple)
    : directed_(directed), simple_(simple), vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end(), NaturalLess{});
  for (std::size_t i = 1; i < vertices_.size(); ++i)
    if (vertices_[i - 1] == vertices_[i])
      throw InvalidInput("duplicate vertex id '" + vertices_[i] + "'");

  std::sort(edges.begin(), edges.end(),
            [](const EdgeSpec& a, const EdgeSpec& b) { return natural_less(a.id, b.id); });
  edges_.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const EdgeSpec& e = edges[i];
    if (i > 0 && edges[i - 1].id == e.id) throw InvalidInput("duplicate edge id '" + e.id + "'");
    auto t = find_vertex(e.tail);
    auto h = find_vertex(e.head);
    if (!t || !h)
      throw InvalidInput("edge '" + e.id + "' has endpoint '" + (t ? e.head : e.tail) +
                         "' outside the vertex set");
    std::size_t tail = *t, head = *h;
    // indices follow natural id order, so index order is id order
    if (!directed_ && head < tail) std::swap(tail, head);
    edges_.push_back({e.id, tail, head});
  }
  index();

  if (simple_) {
    for (const Edge& e : edges_)
      if (e.tail == e.head) throw InvalidInput("simple graph has loop '" + e.id + "'");
    for (std::size_t u = 0; u < order(); ++u)
      for (std::size_t v = 0; v < order(); ++v)
        if (multiplicity(u, v) > 1)
          throw InvalidInput("simple graph has parallel edges between '" + vertices_[u] +
                             "' and '" + vertices_[v] + "'");
  }
}

void Graph::index() {
  const std::size_t n = vertices_.size();
  mult_.assign(n * n, 0);
  out_.assign(n, {});
  in_.assign(directed_ ? n : 0, {});
  nbr_.assign(n, {});
  degree_.assign(n, 0);
  for (const Edge& e : edges_) {
    ++mult_[e.tail * n + e.head];
    if (!directed_ && e.tail != e.head) ++mult_[e.head * n + e.tail];
    degree_[e.tail] += 1;
    degree_[e.head] += 1;
  }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      if (mult_[u * n + v] == 0) continue;
      out_[u].push_back(v);
      if (directed_) in_[v].push_back(u);
    }
  if (directed_)
    for (auto& list : in_) std::sort(list.begin(), list.end());
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && (mult_[u * n + v] != 0 || mult_[v * n + u] != 0)) nbr_[u].push_back(v);
  }
}

std::optional<std::size_t> Graph::find_vertex(std::string_view id) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id, NaturalLess{});
  if (it == vertices_.end() || *it != id) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t Graph::vertex_index(std::string_view id) const {
  if (auto i = find_vertex(id)) return *i;
  throw InvalidInput("unknown vertex id '" + std::string(id) + "'");
}

std::optional<std::size_t> Graph::find_edge(std::string_view id) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const Edge& e, std::string_view v) { return natural_less(e.id, v); });
  if (it == edges_.end() || it->id != id) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::size_t Graph::edge_index(std::string_view id) const {
  if (auto i = find_edge(id)) return *i;
  throw InvalidInput("unknown edge id '" + std::string(id) + "'");
}

std::size_t Graph::loop_count() const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [](const Edge& e) { return e.tail == e.head; }));
}

EdgeId edge_id(std::size_t k) { return "e" + std::to_string(k); }

Graph make_graph(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> edges,
                 bool directed) {
  std::vector<VertexId> vs;
  vs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) vs.push_back(std::to_string(i));
  std::vector<EdgeSpec> es;
  es.reserve(edges.size());
  bool simple = true;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    auto [a, b] = edges[k];
    if (a >= n || b >= n) throw InvalidInput("make_graph: endpoint out of range");
    if (a == b) simple = false;
    auto key = directed ? std::pair{a, b} : std::pair{std::min(a, b), std::max(a, b)};
    if (!seen.insert(key).second) simple = false;
    es.push_back({edge_id(k), vs[a], vs[b]});
  }
  return Graph(std::move(vs), std::move(es), directed, simple);
}

Graph make_graph(std::size_t n, std::initializer_list<std::pair<std::size_t, std::size_t>> edges,
                 bool directed) {
  return make_graph(n, std::span<const std::pair<std::size_t, std::size_t>>(edges.begin(), edges.size()),
                    directed);
}

bool PairLess::operator()(const VertexPair& a, const VertexPair& b) const noexcept {
  if (a.first != b.first) return natural_less(a.first, b.first);
  return natural_less(a.second, b.second);
}

PairSet symmetric_closure(const PairSet& rel, std::span<const VertexId> carrier) {
  std::set<std::string_view> known(carrier.begin(), carrier.end());
  PairSet out;
  for (const auto& [a, b] : rel) {
    if (!known.count(a) || !known.count(b))
      throw InvalidInput("pair (" + a + "," + b + ") references a vertex outside the carrier");
    out.insert({a, b});
    out.insert({b, a});
  }
  return out;
}

PairSet diagonal(std::span<const VertexId> vertices) {
  PairSet out;
  for (const auto& v : vertices) out.insert({v, v});
  return out;
}

PairSet edge_relation(const Graph& g) {
  PairSet out;
  for (const auto& e : g.edges()) {
    out.insert({g.vertex(e.tail), g.vertex(e.head)});
    if (!g.directed()) out.insert({g.vertex(e.head), g.vertex(e.tail)});
  }
  return out;
}

Graph complete_graph(std::size_t n) {
  if (n == 0) throw InvalidInput("complete_graph requires n >= 1");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return make_graph(n, edges);
}

Graph underlying_undirected(const Graph& g, UndirectedMode mode) {
  std::vector<EdgeSpec> es;
  if (mode == UndirectedMode::multigraph) {
    for (const auto& e : g.edges()) es.push_back({e.id, g.vertex(e.tail), g.vertex(e.head)});
    bool simple = g.simple() && !g.directed();
    if (g.directed() && g.simple()) {
      // antiparallel pairs become parallel edges
      simple = true;
      for (const auto& e : g.edges())
        if (e.tail != e.head && g.adjacent(e.head, e.tail)) simple = false;
    }
    return Graph(g.vertices(), std::move(es), false, simple && !g.has_loops());
  }
  // simple mode: one edge per unordered pair, smallest id wins (edges are in id order)
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& e : g.edges()) {
    if (e.tail == e.head)
      throw Unsupported("loop '" + e.id + "' cannot be kept in a simple underlying graph");
    auto key = std::pair{std::min(e.tail, e.head), std::max(e.tail, e.head)};
    if (seen.insert(key).second) es.push_back({e.id, g.vertex(e.tail), g.vertex(e.head)});
  }
  return Graph(g.vertices(), std::move(es), false, true);
}

int IncidenceMatrix::at(std::string_view vertex, std::string_view edge) const {
  auto r = std::find(rows.begin(), rows.end(), vertex);
  auto c = std::find(cols.begin(), cols.end(), edge);
  if (r == rows.end() || c == cols.end())
    throw InvalidInput("incidence lookup outside the matrix");
  return at(static_cast<std::size_t>(r - rows.begin()), static_cast<std::size_t>(c - cols.begin()));
}

IncidenceMatrix incidence_matrix(const Graph& g) {
  if (!g.directed()) throw Unsupported("incidence matrix requires a directed graph");
  IncidenceMatrix m;
  m.rows = g.vertices();
  for (const auto& e : g.edges()) {
    if (e.tail == e.head) throw Unsupported("incidence matrix undefined for loop '" + e.id + "'");
    m.cols.push_back(e.id);
  }
  m.entries.assign(m.rows.size() * m.cols.size(), 0);
  for (std::size_t c = 0; c < g.size(); ++c) {
    const auto& e = g.edge(c);
    m.entries[e.tail * m.cols.size() + c] = -1;
    m.entries[e.head * m.cols.size() + c] = +1;
  }
  return m;
}

Graph induced_by_edges(const Graph& g, std::span<const EdgeId> edges, VertexRetention mode) {
  std::vector<EdgeSpec> es;
  std::vector<bool> keep(g.order(), mode == VertexRetention::all_vertices);
  for (const auto& id : edges) {
    const auto& e = g.edge(g.edge_index(id));
    keep[e.tail] = keep[e.head] = true;
    es.push_back({e.id, g.vertex(e.tail), g.vertex(e.head)});
  }
  std::vector<VertexId> vs;
  for (std::size_t i = 0; i < g.order(); ++i)
    if (keep[i]) vs.push_back(g.vertex(i));
  return Graph(std::move(vs), std::move(es), g.directed(), g.simple());
}

Graph induced_by_vertices(const Graph& g, std::span<const VertexId> vertices) {
  std::vector<bool> in(g.order(), false);
  std::vector<VertexId> vs;
  for (const auto& v : vertices) {
    std::size_t i = g.vertex_index(v);
    if (!in[i]) vs.push_back(v);
    in[i] = true;
  }
  std::vector<EdgeSpec> es;
  for (const auto& e : g.edges())
    if (in[e.tail] && in[e.head]) es.push_back({e.id, g.vertex(e.tail), g.vertex(e.head)});
  return Graph(std::move(vs), std::move(es), g.directed(), g.simple());
}

bool is_oriented(const Graph& g) {
  if (!g.directed()) {
    // an undirected edge is a symmetric pair
    for (const auto& e : g.edges())
      if (e.tail != e.head) return false;
    return true;
  }
  for (const auto& e : g.edges())
    if (e.tail != e.head && g.adjacent(e.head, e.tail)) return false;
  return true;
}

std::vector<std::vector<std::size_t>> connected_components(const Graph& g) {
  std::vector<std::vector<std::size_t>> comps;
  std::vector<bool> seen(g.order(), false);
  for (std::size_t s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp{s}, stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v : g.neighbors(u))
        if (!seen[v]) {
          seen[v] = true;
          comp.push_back(v);
          stack.push_back(v);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_subgraph_by_ids(const Graph& h, const Graph& g) {
  if (h.directed() != g.directed()) return false;
  for (const auto& v : h.vertices())
    if (!g.find_vertex(v)) return false;
  for (const auto& e : h.edges()) {
    auto k = g.find_edge(e.id);
    if (!k) return false;
    const auto& ge = g.edge(*k);
    if (g.vertex(ge.tail) != h.vertex(e.tail) || g.vertex(ge.head) != h.vertex(e.head)) return false;
  }
  return true;
}

std::vector<std::uint64_t> neighbor_masks(const Graph& g) {
  if (g.order() > 64) throw Unsupported("bitmask adjacency needs at most 64 vertices");
  std::vector<std::uint64_t> masks(g.order(), 0);
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v : g.neighbors(u)) masks[u] |= std::uint64_t{1} << v;
  return masks;
}

std::size_t max_degree(const Graph& g) {
  std::size_t d = 0;
  for (std::size_t u = 0; u < g.order(); ++u) d = std::max(d, g.degree(u));
  return d;
}

}  // namespace gcat
