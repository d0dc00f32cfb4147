#include "gcat/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include <json.hpp>

#include "gcat/error.hpp"

namespace gcat {

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> d(g.order());
  for (std::size_t u = 0; u < g.order(); ++u) d[u] = g.degree(u);
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

long long adjacency_determinant(const Graph& g, std::size_t max_order) {
  if (g.directed() || !g.simple()) throw Unsupported("adjacency determinant needs a simple undirected graph");
  detail::require_budget("adjacency_determinant", g.order(), max_order);
  const std::size_t n = g.order();
  if (n == 0) return 1;
  using Wide = __int128;
  std::vector<std::vector<Wide>> a(n, std::vector<Wide>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = g.adjacent(i, j) ? 1 : 0;
  // Bareiss: every intermediate entry is a minor of the original matrix
  Wide prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return static_cast<long long>(sign * a[n - 1][n - 1]);
}

namespace {

std::vector<std::size_t> bfs_distances(const Graph& g, std::size_t root) {
  std::vector<std::size_t> dist(g.order(), SIZE_MAX);
  std::vector<std::size_t> queue{root};
  dist[root] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::size_t u = queue[head];
    for (std::size_t v : g.neighbors(u))
      if (dist[v] == SIZE_MAX) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
  }
  return dist;
}

bool connected_without(const Graph& g, std::uint64_t removed) {
  std::size_t root = g.order();
  std::size_t remaining = 0;
  for (std::size_t v = 0; v < g.order(); ++v)
    if (!(removed >> v & 1)) {
      if (root == g.order()) root = v;
      ++remaining;
    }
  if (remaining <= 1) return true;
  std::uint64_t seen = removed | (std::uint64_t{1} << root);
  std::vector<std::size_t> stack{root};
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v : g.neighbors(u))
      if (!(seen >> v & 1)) {
        seen |= std::uint64_t{1} << v;
        ++reached;
        stack.push_back(v);
      }
  }
  return reached == remaining;
}

}  // namespace

std::size_t vertex_connectivity(const Graph& g, std::uint64_t budget) {
  const std::size_t n = g.order();
  if (n > 63) throw ResourceLimit("vertex_connectivity", UINT64_MAX, budget);
  detail::require_budget("vertex_connectivity", std::uint64_t{1} << n, budget);
  if (n <= 1 || !connected_without(g, 0)) return 0;
  for (std::size_t k = 1; k + 2 <= n; ++k) {
    // all k-subsets in increasing bitmask order (Gosper's hack)
    std::uint64_t s = (std::uint64_t{1} << k) - 1;
    while (s < (std::uint64_t{1} << n)) {
      if (!connected_without(g, s)) return k;
      std::uint64_t c = s & -s, r = s + c;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }
  return n - 1;
}

GraphParameters graph_parameters(const Graph& g, std::uint64_t budget) {
  GraphParameters p;
  p.order = g.order();
  p.size = g.size();
  p.vertex_connectivity = vertex_connectivity(g, budget);
  std::size_t diameter = 0;
  bool connected = true;
  std::optional<std::size_t> girth;
  for (std::size_t r = 0; r < g.order(); ++r) {
    auto dist = bfs_distances(g, r);
    for (std::size_t v = 0; v < g.order(); ++v) {
      if (dist[v] == SIZE_MAX) connected = false;
      else diameter = std::max(diameter, dist[v]);
    }
    // shortest cycle through r: a non-tree edge between two reached vertices
    std::vector<std::size_t> parent(g.order(), SIZE_MAX);
    for (std::size_t v = 0; v < g.order(); ++v) {
      if (dist[v] == SIZE_MAX || v == r) continue;
      for (std::size_t u : g.neighbors(v))
        if (dist[u] + 1 == dist[v]) {
          parent[v] = u;
          break;
        }
    }
    for (std::size_t x = 0; x < g.order(); ++x) {
      if (dist[x] == SIZE_MAX) continue;
      for (std::size_t y : g.neighbors(x)) {
        if (y < x || parent[x] == y || parent[y] == x) continue;
        std::size_t len = dist[x] + dist[y] + 1;
        if (!girth || len < *girth) girth = len;
      }
    }
  }
  if (connected) p.diameter = diameter;
  p.girth = girth;
  return p;
}

const std::vector<std::string>& invariant_labels() {
  static const std::vector<std::string> labels{
      "degree_sequence", "aut_order", "adjacency_determinant", "order",           "size",
      "diameter",        "girth",     "vertex_connectivity",   "least_id_degree"};
  return labels;
}

InvariantValue evaluate_invariant(std::string_view label, const Graph& g) {
  auto scalar = [](auto v) { return InvariantValue{static_cast<long long>(v)}; };
  auto optional_scalar = [](std::optional<std::size_t> v) {
    return InvariantValue{v ? static_cast<long long>(*v) : -1};
  };
  if (label == "degree_sequence") {
    auto d = degree_sequence(g);
    return InvariantValue(d.begin(), d.end());
  }
  if (label == "aut_order") return scalar(automorphism_group(g).order());
  if (label == "adjacency_determinant") return scalar(adjacency_determinant(g));
  if (label == "order") return scalar(g.order());
  if (label == "size") return scalar(g.size());
  if (label == "diameter") return optional_scalar(graph_parameters(g).diameter);
  if (label == "girth") return optional_scalar(graph_parameters(g).girth);
  if (label == "vertex_connectivity") return scalar(vertex_connectivity(g));
  if (label == "least_id_degree") return scalar(g.order() == 0 ? 0 : g.degree(0));
  throw InvalidInput("unknown invariant '" + std::string(label) + "'");
}

Graph relabel(const Graph& g, const std::vector<std::size_t>& perm) {
  if (perm.size() != g.order()) throw InvalidInput("relabelling must be a permutation of the vertices");
  std::vector<VertexId> ids(g.order());
  for (std::size_t i = 0; i < perm.size(); ++i) ids[i] = g.vertex(perm[i]);
  std::vector<EdgeSpec> es;
  for (const auto& e : g.edges()) es.push_back({e.id, ids[e.tail], ids[e.head]});
  return Graph(ids, std::move(es), g.directed(), g.simple());
}

namespace {

void record(InvariantReport& r, const Graph& g, const std::vector<std::size_t>& perm) {
  ++r.witness_checked;
  if (!r.passed) return;
  auto v = evaluate_invariant(r.invariant_name, relabel(g, perm));
  if (v != r.value) {
    r.passed = false;
    r.counter_relabeling = perm;
    r.counter_value = std::move(v);
  }
}

}  // namespace

InvariantReport check_invariance(std::string_view label, const Graph& g, std::size_t trials, std::uint64_t seed) {
  InvariantReport r{std::string(label), evaluate_invariant(label, g)};
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> perm(g.order());
  for (std::size_t t = 0; t < trials; ++t) {
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    record(r, g, perm);
  }
  return r;
}

InvariantReport check_invariance_exhaustive(std::string_view label, const Graph& g, std::uint64_t budget) {
  detail::require_budget("check_invariance_exhaustive", detail::sat_factorial(g.order()), budget);
  InvariantReport r{std::string(label), evaluate_invariant(label, g)};
  std::vector<std::size_t> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    record(r, g, perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return r;
}

bool is_invariant_subgraph(const Graph& g, const Graph& h, std::uint64_t budget) {
  if (!is_subgraph_by_ids(h, g)) throw InvalidInput("is_invariant_subgraph: h is not a subgraph of g");
  std::vector<bool> in_h(g.order(), false);
  for (const auto& v : h.vertices()) in_h[g.vertex_index(v)] = true;
  auto pair_key = [&](std::size_t a, std::size_t b) {
    if (!g.directed() && b < a) std::swap(a, b);
    return std::pair{a, b};
  };
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& e : h.edges()) edges.push_back(pair_key(g.vertex_index(h.vertex(e.tail)), g.vertex_index(h.vertex(e.head))));
  std::sort(edges.begin(), edges.end());
  for (const auto& sigma : automorphism_group(g, budget).elements) {
    for (std::size_t v = 0; v < g.order(); ++v)
      if (in_h[v] != in_h[sigma[v]]) return false;
    std::vector<std::pair<std::size_t, std::size_t>> moved;
    for (auto [a, b] : edges) moved.push_back(pair_key(sigma[a], sigma[b]));
    std::sort(moved.begin(), moved.end());
    if (moved != edges) return false;
  }
  return true;
}

std::string invariant_report_to_json(const InvariantReport& r) {
  nlohmann::ordered_json j;
  j["invariant"] = r.invariant_name;
  j["value"] = r.value;
  j["witness_checked"] = r.witness_checked;
  j["passed"] = r.passed;
  if (r.counter_relabeling) {
    j["counter_relabeling"] = *r.counter_relabeling;
    j["counter_value"] = *r.counter_value;
  }
  return j.dump(2) + "\n";
}

std::string parameters_to_json(const GraphParameters& p) {
  nlohmann::ordered_json j;
  auto opt = [](std::optional<std::size_t> v) -> nlohmann::ordered_json {
    if (v) return *v;
    return "inf";
  };
  j["order"] = p.order;
  j["size"] = p.size;
  j["diameter"] = opt(p.diameter);
  j["girth"] = opt(p.girth);
  j["vertex_connectivity"] = p.vertex_connectivity;
  return j.dump(2) + "\n";
}

}  // namespace gcat
