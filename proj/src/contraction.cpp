#include "gcat/contraction.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>

#include <json.hpp>

#include "gcat/graph_io.hpp"
#include "gcat/named_graphs.hpp"

namespace gcat {

using json = nlohmann::ordered_json;

namespace {

bool block_connected(const Graph& g, const std::vector<std::size_t>& block) {
  if (block.empty()) return false;
  std::vector<char> in(g.order(), 0), seen(g.order(), 0);
  for (std::size_t v : block) in[v] = 1;
  std::vector<std::size_t> stack{block.front()};
  seen[block.front()] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v : g.neighbors(u))
      if (in[v] && !seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
  }
  return reached == block.size();
}

std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

// Simple undirected view used by the minor searches.
Graph simple_view(const Graph& g) {
  if (!g.directed() && g.simple()) return g;
  return underlying_undirected(g, UndirectedMode::simple);
}

std::uint64_t closure_in(const std::vector<std::uint64_t>& nbr, std::uint64_t set) {
  if (set == 0) return 0;
  std::uint64_t seen = set & -set, frontier = seen;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f; f &= f - 1) next |= nbr[std::countr_zero(f)];
    next &= set & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

// Pattern vertices ordered so that each one has as many already placed
// neighbours as possible.
std::vector<std::size_t> placement_order(const Graph& h) {
  const std::size_t k = h.order();
  std::vector<std::size_t> order;
  std::vector<char> placed(k, 0);
  std::vector<std::size_t> placed_nbrs(k, 0);
  for (std::size_t step = 0; step < k; ++step) {
    std::size_t best = k;
    for (std::size_t v = 0; v < k; ++v) {
      if (placed[v]) continue;
      if (best == k || placed_nbrs[v] > placed_nbrs[best] ||
          (placed_nbrs[v] == placed_nbrs[best] && h.degree(v) > h.degree(best)))
        best = v;
    }
    placed[best] = 1;
    order.push_back(best);
    for (std::size_t w : h.neighbors(best)) ++placed_nbrs[w];
  }
  return order;
}

}  // namespace

Partition::Partition(Graph graph, std::vector<std::vector<std::size_t>> blocks, int)
    : graph_(std::move(graph)), block_of_(graph_.order(), SIZE_MAX) {
  for (auto& b : blocks) {
    if (b.empty()) throw InvalidInput("partition has an empty block");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks.begin(), blocks.end());
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t v : blocks[i]) {
      if (v >= graph_.order()) throw InvalidInput("partition names a vertex outside the graph");
      if (block_of_[v] != SIZE_MAX) throw InvalidInput("partition blocks overlap at '" + graph_.vertex(v) + "'");
      block_of_[v] = i;
    }
  for (std::size_t v = 0; v < graph_.order(); ++v)
    if (block_of_[v] == SIZE_MAX) throw InvalidInput("partition misses vertex '" + graph_.vertex(v) + "'");
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (!block_connected(graph_, blocks[i]))
      throw InvalidPartition("block " + std::to_string(i) + " does not induce a connected subgraph", i);
  blocks_ = std::move(blocks);
}

Partition::Partition(Graph graph, const std::vector<std::vector<VertexId>>& blocks)
    : Partition(
          [&] {
            std::vector<std::vector<std::size_t>> idx;
            for (const auto& b : blocks) {
              idx.emplace_back();
              for (const auto& id : b) {
                auto i = graph.find_vertex(id);
                if (!i) throw InvalidInput("partition names unknown vertex '" + id + "'");
                idx.back().push_back(*i);
              }
            }
            return Partition(graph, std::move(idx), 0);
          }()) {}

Partition Partition::from_indices(Graph graph, std::vector<std::vector<std::size_t>> blocks) {
  return Partition(std::move(graph), std::move(blocks), 0);
}

std::string Partition::block_label(std::size_t b) const {
  std::string s;
  for (std::size_t v : blocks_.at(b)) {
    if (!s.empty()) s += '+';
    s += graph_.vertex(v);
  }
  return s;
}

namespace {

std::vector<VertexId> block_labels(const Partition& p) {
  std::vector<VertexId> ids;
  for (std::size_t b = 0; b < p.blocks().size(); ++b) ids.push_back(p.block_label(b));
  return ids;
}

std::pair<std::size_t, std::size_t> block_key(const Partition& p, const Graph::Edge& e) {
  std::size_t a = p.block_of(e.tail), b = p.block_of(e.head);
  if (!p.graph().directed() && b < a) std::swap(a, b);
  return {a, b};
}

}  // namespace

Graph contract(const Partition& p) {
  const auto& g = p.graph();
  std::set<std::pair<std::size_t, std::size_t>> keys;
  for (const auto& e : g.edges()) {
    auto k = block_key(p, e);
    if (k.first != k.second) keys.insert(k);
  }
  auto ids = block_labels(p);
  std::vector<EdgeSpec> es;
  for (auto [a, b] : keys) es.push_back({edge_id(es.size()), ids[a], ids[b]});
  return Graph(ids, std::move(es), g.directed(), true);
}

Graph contract_faithful(const Partition& p) {
  const auto& g = p.graph();
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> count;
  auto ids = block_labels(p);
  std::vector<EdgeSpec> es;
  for (const auto& e : g.edges()) {
    auto k = block_key(p, e);
    if (k.first == k.second) continue;
    ++count[k];
    es.push_back({e.id, ids[p.block_of(e.tail)], ids[p.block_of(e.head)]});
  }
  bool simple = std::all_of(count.begin(), count.end(), [](const auto& kv) { return kv.second == 1; });
  return Graph(ids, std::move(es), g.directed(), simple);
}

VertexMap contraction_map(const Partition& p) {
  Graph c = contract(p);
  VertexMap f(p.graph().order());
  for (std::size_t v = 0; v < f.size(); ++v) f[v] = c.vertex_index(p.block_label(p.block_of(v)));
  return f;
}

Graph contract_subgraph(const Graph& g, const Graph& r) {
  if (!is_subgraph_by_ids(r, g)) throw InvalidInput("contracted subgraph is not a subgraph of the graph");
  if (r.order() == 0 || !is_connected(r)) throw InvalidInput("contracted subgraph must be nonempty and connected");
  std::vector<std::vector<std::size_t>> blocks(1);
  std::vector<char> in(g.order(), 0);
  for (const auto& v : r.vertices()) {
    std::size_t i = g.vertex_index(v);
    in[i] = 1;
    blocks[0].push_back(i);
  }
  for (std::size_t v = 0; v < g.order(); ++v)
    if (!in[v]) blocks.push_back({v});
  return contract(Partition::from_indices(g, std::move(blocks)));
}

std::uint64_t stirling2(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::vector<std::uint64_t> row(k + 1, 0);
  row[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = std::min(i, k); j >= 1; --j) {
      std::uint64_t t = detail::sat_mul(j, row[j]);
      row[j] = t > UINT64_MAX - row[j - 1] ? UINT64_MAX : t + row[j - 1];
    }
    row[0] = 0;
  }
  return row[k];
}

std::optional<Partition> find_contraction(const Graph& g, const Graph& h, std::uint64_t budget) {
  const std::size_t n = g.order(), k = h.order();
  if (g.directed() != h.directed()) throw InvalidInput("contraction needs both graphs directed or both undirected");
  if (k > n) return std::nullopt;
  if (n > 64) throw ResourceLimit("exists_contraction", UINT64_MAX, budget);
  detail::require_budget("exists_contraction", stirling2(n, k), budget);
  if (k == 0) return Partition::from_indices(g, {});
  auto nbr = neighbor_masks(g);
  std::vector<std::size_t> rgs(n, 0);
  std::vector<std::uint64_t> masks(k, 0);
  std::optional<Partition> found;
  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t used) -> bool {
    if (used + (n - i) < k) return false;
    if (i == n) {
      for (std::size_t b = 0; b < k; ++b)
        if (closure_in(nbr, masks[b]) != masks[b]) return false;
      std::vector<std::vector<std::size_t>> blocks(k);
      for (std::size_t v = 0; v < n; ++v) blocks[rgs[v]].push_back(v);
      Partition p = Partition::from_indices(g, std::move(blocks));
      Graph c = contract(p);
      if (c.size() != h.size() || !are_isomorphic(c, h, UINT64_MAX)) return false;
      found.emplace(std::move(p));
      return true;
    }
    for (std::size_t b = 0; b <= std::min(used, k - 1); ++b) {
      rgs[i] = b;
      masks[b] |= bit(i);
      bool done = rec(i + 1, std::max(used, b + 1));
      masks[b] &= ~bit(i);
      if (done) return true;
    }
    return false;
  };
  rec(0, 0);
  return found;
}

bool exists_contraction(const Graph& g, const Graph& h, std::uint64_t budget) {
  return find_contraction(g, h, budget).has_value();
}

std::optional<MinorWitness> find_minor(const Graph& pattern_in, const Graph& host_in, std::uint64_t budget) {
  Graph host = simple_view(host_in), pattern = simple_view(pattern_in);
  const std::size_t n = host.order(), k = pattern.order();
  if (k > n || pattern.size() > host.size()) return std::nullopt;
  detail::require_budget("is_minor", detail::sat_pow(k + 1, n), budget);
  if (n > 24) throw ResourceLimit("is_minor", UINT64_MAX, budget);
  auto nbr = neighbor_masks(host);

  struct Subset {
    std::uint64_t mask, boundary;
  };
  std::vector<Subset> subsets;
  for (std::uint64_t m = 1; m < bit(n); ++m) {
    if (closure_in(nbr, m) != m) continue;
    std::uint64_t b = 0;
    for (std::uint64_t f = m; f; f &= f - 1) b |= nbr[std::countr_zero(f)];
    subsets.push_back({m, b & ~m});
  }
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](const Subset& a, const Subset& b) { return std::popcount(a.mask) < std::popcount(b.mask); });

  auto order = placement_order(pattern);
  std::vector<std::uint64_t> branch(k, 0);
  std::vector<char> placed(k, 0);
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : bit(n) - 1;

  std::function<bool(std::size_t, std::uint64_t)> rec = [&](std::size_t step, std::uint64_t used) -> bool {
    if (step == k) return true;
    std::size_t v = order[step];
    std::size_t pending = 0;
    for (std::size_t w : pattern.neighbors(v))
      if (!placed[w]) ++pending;
    const std::size_t later = k - step - 1;
    const std::size_t room = n - std::popcount(used) - later;
    for (const auto& s : subsets) {
      if (static_cast<std::size_t>(std::popcount(s.mask)) > room) break;
      if (s.mask & used) continue;
      bool ok = true;
      for (std::size_t w : pattern.neighbors(v))
        if (placed[w] && !(s.boundary & branch[w])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      std::uint64_t free = all & ~(used | s.mask);
      if (static_cast<std::size_t>(std::popcount(s.boundary & free)) < pending) continue;
      branch[v] = s.mask;
      placed[v] = 1;
      if (rec(step + 1, used | s.mask)) return true;
      placed[v] = 0;
      branch[v] = 0;
    }
    return false;
  };
  if (!rec(0, 0)) return std::nullopt;

  MinorWitness w{host, pattern, std::vector<std::vector<std::size_t>>(k), Graph()};
  std::vector<std::size_t> owner(n, SIZE_MAX);
  for (std::size_t v = 0; v < k; ++v)
    for (std::uint64_t f = branch[v]; f; f &= f - 1) {
      std::size_t x = std::countr_zero(f);
      w.branch_sets[v].push_back(x);
      owner[x] = v;
    }
  std::vector<VertexId> ids;
  for (std::size_t x = 0; x < n; ++x)
    if (owner[x] != SIZE_MAX) ids.push_back(host.vertex(x));
  std::vector<EdgeSpec> es;
  std::set<std::pair<std::size_t, std::size_t>> linked;
  for (const auto& e : host.edges()) {
    std::size_t a = owner[e.tail], b = owner[e.head];
    if (a == SIZE_MAX || b == SIZE_MAX) continue;
    bool take = a == b;
    if (!take && pattern.adjacent(a, b)) take = linked.insert(std::minmax(a, b)).second;
    if (take) es.push_back({e.id, host.vertex(e.tail), host.vertex(e.head)});
  }
  w.used = Graph(std::move(ids), std::move(es), false, true);
  return w;
}

bool is_minor(const Graph& pattern, const Graph& host, std::uint64_t budget) {
  return find_minor(pattern, host, budget).has_value();
}

bool verify_minor_witness(const MinorWitness& w) {
  if (w.branch_sets.size() != w.pattern.order()) return false;
  if (!is_subgraph_by_ids(w.used, w.host)) return false;
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<char> seen(w.used.order(), 0);
  std::size_t covered = 0;
  for (const auto& bs : w.branch_sets) {
    if (bs.empty()) return false;
    blocks.emplace_back();
    for (std::size_t x : bs) {
      if (x >= w.host.order()) return false;
      auto i = w.used.find_vertex(w.host.vertex(x));
      if (!i || seen[*i]) return false;
      seen[*i] = 1;
      ++covered;
      blocks.back().push_back(*i);
    }
  }
  if (covered != w.used.order()) return false;
  try {
    Partition p = Partition::from_indices(w.used, blocks);
    Graph c = contract(p);
    VertexMap f(w.pattern.order());
    for (std::size_t v = 0; v < f.size(); ++v) f[v] = c.vertex_index(p.block_label(p.block_of(blocks[v].front())));
    return check_morphism(f, w.pattern, c, MorphismKind::iso).ok;
  } catch (const InvalidInput&) {
    return false;
  }
}

std::optional<SubdivisionWitness> find_topological_minor(const Graph& pattern_in, const Graph& host_in,
                                                         std::uint64_t budget) {
  Graph host = simple_view(host_in), pattern = simple_view(pattern_in);
  const std::size_t n = host.order(), k = pattern.order();
  if (k > n || pattern.size() > host.size()) return std::nullopt;
  detail::require_budget("is_topological_minor", detail::sat_mul(detail::sat_pow(n, k), detail::sat_pow(2, n)),
                         budget);
  if (n > 64) throw ResourceLimit("is_topological_minor", UINT64_MAX, budget);
  auto nbr = neighbor_masks(host);
  auto order = placement_order(pattern);

  VertexMap phi(k, SIZE_MAX);
  std::vector<std::size_t> unrouted(k, 0);  // pattern edges at v still to be routed
  for (std::size_t v = 0; v < k; ++v) unrouted[v] = pattern.degree(v);
  std::vector<std::pair<std::size_t, std::size_t>> pattern_edges;
  for (const auto& e : pattern.edges()) pattern_edges.push_back({e.tail, e.head});
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> routes;

  // Every pending path at a branch vertex leaves through a distinct free
  // neighbour or ends at an adjacent branch vertex.
  auto feasible = [&](std::uint64_t used) {
    std::uint64_t branches = 0;
    for (std::size_t v = 0; v < k; ++v)
      if (phi[v] != SIZE_MAX) branches |= bit(phi[v]);
    for (std::size_t v = 0; v < k; ++v)
      if (phi[v] != SIZE_MAX &&
          static_cast<std::size_t>(std::popcount(nbr[phi[v]] & (~used | branches))) < unrouted[v])
        return false;
    return true;
  };

  std::function<bool(std::size_t, std::uint64_t)> place;
  // Route the edges from v to its placed neighbours, one at a time.
  std::function<bool(std::size_t, std::size_t, std::uint64_t)> route =
      [&](std::size_t step, std::size_t j, std::uint64_t used) -> bool {
    std::size_t v = order[step];
    // the j-th placed neighbour in placement order
    std::size_t w = SIZE_MAX;
    for (std::size_t s = 0, seen = 0; s < step; ++s)
      if (pattern.adjacent(v, order[s]) && seen++ == j) {
        w = order[s];
        break;
      }
    if (w == SIZE_MAX) return place(step + 1, used);
    std::size_t src = phi[v], dst = phi[w];
    std::vector<std::size_t> path{src};
    std::function<bool(std::size_t, std::uint64_t)> dfs = [&](std::size_t x, std::uint64_t u) -> bool {
      if (nbr[x] & bit(dst)) {
        path.push_back(dst);
        --unrouted[v];
        --unrouted[w];
        routes[std::minmax(v, w)] = path;
        if (feasible(u) && route(step, j + 1, u)) return true;
        routes.erase(std::minmax(v, w));
        ++unrouted[v];
        ++unrouted[w];
        path.pop_back();
      }
      for (std::uint64_t f = nbr[x] & ~u; f; f &= f - 1) {
        std::size_t y = std::countr_zero(f);
        path.push_back(y);
        if (dfs(y, u | bit(y))) return true;
        path.pop_back();
      }
      return false;
    };
    return dfs(src, used);
  };
  place = [&](std::size_t step, std::uint64_t used) -> bool {
    if (step == k) return true;
    std::size_t v = order[step];
    for (std::size_t x = 0; x < n; ++x) {
      if (used & bit(x)) continue;
      if (static_cast<std::size_t>(std::popcount(nbr[x])) < pattern.degree(v)) continue;
      phi[v] = x;
      if (feasible(used | bit(x)) && route(step, 0, used | bit(x))) return true;
      phi[v] = SIZE_MAX;
    }
    return false;
  };
  if (!place(0, 0)) return std::nullopt;
  SubdivisionWitness w{host, pattern, phi, {}};
  for (auto [a, b] : pattern_edges) {
    auto path = routes.at(std::minmax(a, b));
    if (phi[a] != path.front()) std::reverse(path.begin(), path.end());
    w.paths.push_back(std::move(path));
  }
  return w;
}

bool is_topological_minor(const Graph& pattern, const Graph& host, std::uint64_t budget) {
  return find_topological_minor(pattern, host, budget).has_value();
}

bool verify_subdivision_witness(const SubdivisionWitness& w) {
  const auto& h = w.pattern;
  const auto& g = w.host;
  if (w.branch.size() != h.order() || w.paths.size() != h.size()) return false;
  std::vector<char> used(g.order(), 0);
  for (std::size_t x : w.branch) {
    if (x >= g.order() || used[x]) return false;
    used[x] = 1;
  }
  for (std::size_t i = 0; i < h.size(); ++i) {
    const auto& p = w.paths[i];
    const auto& e = h.edge(i);
    if (p.size() < 2 || p.front() != w.branch[e.tail] || p.back() != w.branch[e.head]) return false;
    for (std::size_t j = 0; j + 1 < p.size(); ++j)
      if (!g.adjacent(p[j], p[j + 1])) return false;
    for (std::size_t j = 1; j + 1 < p.size(); ++j) {
      if (p[j] >= g.order() || used[p[j]]) return false;
      used[p[j]] = 1;
    }
  }
  return true;
}

bool is_planar(const Graph& g_in, std::uint64_t budget) {
  Graph g = simple_view(g_in);
  const std::size_t n = g.order();
  if (n < 5) return true;
  if (g.size() > 3 * n - 6) return false;
  return !is_topological_minor(complete_graph(5), g, budget) &&
         !is_topological_minor(complete_bipartite(3, 3), g, budget);
}

MinorAuditReport minor_order_audit(std::span<const Graph> pool, std::uint64_t budget) {
  const std::size_t m = pool.size();
  MinorAuditReport r;
  r.minor.assign(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) r.minor[i][j] = is_minor(pool[i], pool[j], budget);
  auto name = [](std::size_t i) { return "#" + std::to_string(i); };
  PropertyTally refl{"reflexivity"}, sub{"subgraph_implies_minor"}, con{"contraction_implies_minor"},
      trans{"transitivity"}, anti{"antisymmetry"};
  auto fail = [&](PropertyTally& t, std::string what) {
    ++t.violations;
    r.violations.push_back(t.name + ": " + what);
  };
  for (std::size_t i = 0; i < m; ++i) {
    ++refl.checked;
    if (!r.minor[i][i]) fail(refl, name(i) + " is not a minor of itself");
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (pool[i].directed() == pool[j].directed() && find_subgraph_embedding(pool[i], pool[j])) {
        ++sub.checked;
        if (!r.minor[i][j]) fail(sub, name(i) + " embeds in " + name(j) + " but is not a minor");
      }
      if (pool[i].directed() == pool[j].directed() &&
          exists_contraction(pool[j], pool[i], kDefaultPartitionBudget)) {
        ++con.checked;
        if (!r.minor[i][j]) fail(con, name(i) + " is a contraction of " + name(j) + " but not a minor");
      }
    }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c)
        if (r.minor[a][b] && r.minor[b][c]) {
          ++trans.checked;
          if (!r.minor[a][c]) fail(trans, name(a) + " <= " + name(b) + " <= " + name(c) + " but not " + name(a) + " <= " + name(c));
        }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      if (r.minor[a][b] && r.minor[b][a]) {
        ++anti.checked;
        if (!are_isomorphic(simple_view(pool[a]), simple_view(pool[b]), UINT64_MAX))
          fail(anti, name(a) + " and " + name(b) + " are mutual minors but not isomorphic");
      }
  r.properties = {refl, sub, con, trans, anti};
  return r;
}

LowDegreeReport minor_equivalence_low_degree(std::span<const Graph> patterns, std::span<const Graph> hosts,
                                             std::uint64_t budget) {
  LowDegreeReport r;
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    bool low_pattern = max_degree(simple_view(patterns[i])) <= 3;
    for (std::size_t j = 0; j < hosts.size(); ++j) {
      bool low_host = max_degree(simple_view(hosts[j])) <= 3;
      if (!low_pattern && !low_host) continue;
      bool minor = is_minor(patterns[i], hosts[j], budget);
      bool topo = is_topological_minor(patterns[i], hosts[j], budget);
      if (low_pattern) {
        ++r.pairs_checked;
        if (minor && topo) ++r.both_true;
        if (minor != topo) r.discrepancies.push_back({i, j});
      }
      if (low_host) {
        ++r.host_reading_pairs;
        if (minor != topo) r.host_reading_discrepancies.push_back({i, j});
      }
    }
  }
  return r;
}

LowDegreeReport minor_equivalence_low_degree(std::span<const Graph> pool, std::uint64_t budget) {
  return minor_equivalence_low_degree(pool, pool, budget);
}

Partition partition_from_json(std::string_view text, const Graph& g) {
  try {
    auto j = nlohmann::json::parse(text);
    std::vector<std::vector<VertexId>> blocks;
    for (const auto& b : j.at("blocks")) {
      blocks.emplace_back();
      for (const auto& v : b) blocks.back().push_back(v.is_string() ? v.get<std::string>() : v.dump());
    }
    return Partition(g, blocks);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("partition JSON: ") + e.what());
  }
}

std::string partition_to_json(const Partition& p) {
  json j;
  j["blocks"] = json::array();
  for (const auto& b : p.blocks()) {
    json ids = json::array();
    for (std::size_t v : b) ids.push_back(p.graph().vertex(v));
    j["blocks"].push_back(ids);
  }
  return j.dump(2) + "\n";
}

std::string minor_witness_to_json(const MinorWitness& w) {
  json j;
  j["minor"] = true;
  j["branch_sets"] = json::object();
  for (std::size_t v = 0; v < w.branch_sets.size(); ++v) {
    json ids = json::array();
    for (std::size_t x : w.branch_sets[v]) ids.push_back(w.host.vertex(x));
    j["branch_sets"][w.pattern.vertex(v)] = ids;
  }
  j["used"] = json::parse(graph_to_json(w.used));
  return j.dump(2) + "\n";
}

std::string subdivision_witness_to_json(const SubdivisionWitness& w) {
  json j;
  j["topological_minor"] = true;
  j["branch"] = json::object();
  for (std::size_t v = 0; v < w.branch.size(); ++v) j["branch"][w.pattern.vertex(v)] = w.host.vertex(w.branch[v]);
  j["paths"] = json::object();
  for (std::size_t i = 0; i < w.paths.size(); ++i) {
    json ids = json::array();
    for (std::size_t x : w.paths[i]) ids.push_back(w.host.vertex(x));
    j["paths"][w.pattern.edge(i).id] = ids;
  }
  return j.dump(2) + "\n";
}

std::string minor_audit_to_json(const MinorAuditReport& r) {
  json j;
  j["passed"] = r.passed();
  j["minor"] = r.minor;
  j["properties"] = json::array();
  for (const auto& t : r.properties)
    j["properties"].push_back({{"name", t.name}, {"checked", t.checked}, {"violations", t.violations}});
  j["violations"] = r.violations;
  return j.dump(2) + "\n";
}

std::string low_degree_report_to_json(const LowDegreeReport& r) {
  json j;
  j["passed"] = r.passed();
  j["pairs_checked"] = r.pairs_checked;
  j["both_true"] = r.both_true;
  j["discrepancies"] = r.discrepancies;
  j["host_reading_pairs"] = r.host_reading_pairs;
  j["host_reading_discrepancies"] = r.host_reading_discrepancies;
  return j.dump(2) + "\n";
}

}  // namespace gcat
