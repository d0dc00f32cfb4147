#include "gcat/transform.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include <json.hpp>

#include "gcat/canonical.hpp"
#include "gcat/error.hpp"
#include "gcat/graph_io.hpp"

namespace gcat {

namespace {

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string s;
  for (const auto& x : items) {
    if (!s.empty()) s += sep;
    s += x;
  }
  return s;
}

std::vector<std::string> edge_ids(const Graph& g, const std::vector<std::size_t>& edges) {
  std::vector<std::string> ids;
  for (std::size_t e : edges) ids.push_back(g.edge(e).id);
  return ids;
}

// Undirected graph on "<prefix>0", ... with the given index pairs.
Graph indexed_graph(const std::string& prefix, std::size_t n, const std::set<std::pair<std::size_t, std::size_t>>& adj,
                    std::vector<VertexId>& ids) {
  ids.clear();
  for (std::size_t i = 0; i < n; ++i) ids.push_back(prefix + std::to_string(i));
  std::vector<EdgeSpec> es;
  for (auto [a, b] : adj) es.push_back({edge_id(es.size()), ids[a], ids[b]});
  return Graph(ids, std::move(es), false, true);
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

// Number of connected components among the vertices touched by `edges`.
std::size_t edge_components(const Graph& g, const std::vector<std::size_t>& edges) {
  std::vector<std::size_t> parent(g.order());
  std::iota(parent.begin(), parent.end(), 0);
  std::set<std::size_t> touched;
  for (std::size_t e : edges) {
    const auto& ed = g.edge(e);
    touched.insert(ed.tail);
    touched.insert(ed.head);
    parent[find_root(parent, ed.tail)] = find_root(parent, ed.head);
  }
  std::set<std::size_t> roots;
  for (std::size_t v : touched) roots.insert(find_root(parent, v));
  return roots.size();
}

std::vector<std::size_t> symmetric_difference(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::uint64_t double_factorial_odd(std::size_t n) {
  std::uint64_t r = 1;
  for (std::size_t k = n; k > 1; k -= 2) r = detail::sat_mul(r, k);
  return r;
}

}  // namespace

TransformationGraph divisibility_graph(const std::vector<long long>& values) {
  std::vector<long long> v(values);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  TransformationGraph t{"divisor", "integers", {}, Graph()};
  std::vector<VertexId> ids;
  for (long long a : v) {
    if (a < 1) throw InvalidInput("divisibility graph needs positive integers");
    ids.push_back(std::to_string(a));
  }
  std::vector<EdgeSpec> es;
  for (long long a : v)
    for (long long b : v)
      if (a != b && b % a == 0) es.push_back({edge_id(es.size()), std::to_string(a), std::to_string(b)});
  t.graph = Graph(ids, std::move(es), true, true);
  for (const auto& id : t.graph.vertices()) t.objects.push_back({id, {id}, std::nullopt, id});
  t.base = "{" + join(ids, ",") + "}";
  return t;
}

std::vector<std::vector<std::size_t>> spanning_trees(const Graph& g, std::uint64_t budget) {
  if (g.directed()) throw InvalidInput("spanning trees need an undirected graph");
  if (g.order() == 0 || !is_connected(g)) throw InvalidInput("spanning trees need a nonempty connected graph");
  const std::size_t n = g.order(), m = g.size(), need = n - 1;
  detail::require_budget("spanning_trees", detail::binomial(m, need), budget);
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, std::vector<std::size_t>)> rec = [&](std::size_t next, std::vector<std::size_t> parent) {
    if (chosen.size() == need) {
      out.push_back(chosen);
      return;
    }
    for (std::size_t e = next; e + (need - chosen.size()) <= m; ++e) {
      const auto& ed = g.edge(e);
      std::size_t a = find_root(parent, ed.tail), b = find_root(parent, ed.head);
      if (a == b) continue;
      auto p = parent;
      p[a] = b;
      chosen.push_back(e);
      rec(e + 1, std::move(p));
      chosen.pop_back();
    }
  };
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  rec(0, parent);
  return out;
}

TransformationGraph tree_transformation_graph(const Graph& g, std::uint64_t budget) {
  auto trees = spanning_trees(g, budget);
  std::set<std::pair<std::size_t, std::size_t>> adj;
  for (std::size_t i = 0; i < trees.size(); ++i)
    for (std::size_t j = i + 1; j < trees.size(); ++j)
      if (symmetric_difference(trees[i], trees[j]).size() == 2) adj.insert({i, j});
  TransformationGraph t{"tree", "spanning trees", {}, Graph()};
  std::vector<VertexId> ids;
  t.graph = indexed_graph("t", trees.size(), adj, ids);
  for (std::size_t i = 0; i < trees.size(); ++i) {
    auto members = edge_ids(g, trees[i]);
    t.objects.push_back({ids[i], members, std::nullopt, "{" + join(members, ",") + "}"});
  }
  return t;
}

std::vector<std::vector<std::size_t>> perfect_matchings(const Graph& g, std::uint64_t budget) {
  if (g.directed()) throw InvalidInput("perfect matchings need an undirected graph");
  const std::size_t n = g.order();
  detail::require_budget("perfect_matchings", n % 2 ? 1 : double_factorial_odd(n ? n - 1 : 0), budget);
  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t e = 0; e < g.size(); ++e) {
    const auto& ed = g.edge(e);
    if (ed.tail == ed.head) continue;
    incident[ed.tail].push_back(e);
    incident[ed.head].push_back(e);
  }
  std::vector<std::vector<std::size_t>> out;
  if (n % 2) return out;
  std::vector<char> matched(n, 0);
  std::vector<std::size_t> chosen;
  std::function<void()> rec = [&] {
    std::size_t u = 0;
    while (u < n && matched[u]) ++u;
    if (u == n) {
      auto m = chosen;
      std::sort(m.begin(), m.end());
      out.push_back(std::move(m));
      return;
    }
    for (std::size_t e : incident[u]) {
      const auto& ed = g.edge(e);
      std::size_t v = ed.tail == u ? ed.head : ed.tail;
      if (matched[v]) continue;
      matched[u] = matched[v] = 1;
      chosen.push_back(e);
      rec();
      chosen.pop_back();
      matched[u] = matched[v] = 0;
    }
  };
  rec();
  std::sort(out.begin(), out.end());
  return out;
}

TransformationGraph matching_transformation_graph(const Graph& g, std::uint64_t budget) {
  auto ms = perfect_matchings(g, budget);
  if (ms.empty()) throw InvalidInput("graph has no perfect matching");
  std::set<std::pair<std::size_t, std::size_t>> adj;
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j)
      if (edge_components(g, symmetric_difference(ms[i], ms[j])) == 1) adj.insert({i, j});
  TransformationGraph t{"matching", "perfect matchings", {}, Graph()};
  std::vector<VertexId> ids;
  t.graph = indexed_graph("m", ms.size(), adj, ids);
  for (std::size_t i = 0; i < ms.size(); ++i) {
    auto members = edge_ids(g, ms[i]);
    t.objects.push_back({ids[i], members, std::nullopt, "{" + join(members, ",") + "}"});
  }
  return t;
}

namespace {

// Canonical code -> canonical representative for every realization of d.
std::map<std::vector<std::uint32_t>, Graph> classes_of(const std::vector<std::size_t>& d, std::uint64_t budget) {
  const std::size_t n = d.size();
  detail::require_budget("realization_graph", detail::sat_pow(2, detail::binomial(n, 2)), budget);
  std::size_t sum = 0;
  for (std::size_t x : d) {
    if (x >= n) throw InvalidInput("degree sequence is not graphic");
    sum += x;
  }
  if (sum % 2) throw InvalidInput("degree sequence is not graphic");
  std::map<std::vector<std::uint32_t>, Graph> classes;
  std::vector<std::size_t> rem(d);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      Graph g = make_graph(n, edges);
      auto code = canonical_form(g).code;
      if (!classes.count(code)) classes.emplace(std::move(code), canonical_graph(g));
      return;
    }
    // choose rem[i] partners among later vertices with spare degree
    std::function<void(std::size_t, std::size_t)> pick = [&](std::size_t j, std::size_t left) {
      if (left == 0) {
        rec(i + 1);
        return;
      }
      for (std::size_t k = j; k < n; ++k) {
        if (rem[k] == 0) continue;
        --rem[k];
        edges.push_back({i, k});
        pick(k + 1, left - 1);
        edges.pop_back();
        ++rem[k];
      }
    };
    std::size_t want = rem[i];
    rem[i] = 0;
    pick(i + 1, want);
    rem[i] = want;
  };
  rec(0);
  if (classes.empty()) throw InvalidInput("degree sequence is not graphic");
  return classes;
}

}  // namespace

std::vector<Graph> realization_classes(const std::vector<std::size_t>& degrees, std::uint64_t budget) {
  std::vector<Graph> out;
  for (auto& [code, g] : classes_of(degrees, budget)) out.push_back(g);
  return out;
}

TransformationGraph realization_graph(const std::vector<std::size_t>& degrees, std::uint64_t budget) {
  auto classes = classes_of(degrees, budget);
  std::map<std::vector<std::uint32_t>, std::size_t> index;
  std::vector<Graph> reps;
  for (auto& [code, g] : classes) {
    index.emplace(code, reps.size());
    reps.push_back(g);
  }
  const std::size_t k = reps.size();
  std::vector<std::vector<char>> to(k, std::vector<char>(k, 0));
  for (std::size_t c = 0; c < k; ++c) {
    const Graph& g = reps[c];
    const std::size_t n = g.order();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (!g.adjacent(a, b)) continue;
        for (std::size_t x = 0; x < n; ++x)
          for (std::size_t y = 0; y < n; ++y) {
            if (!g.adjacent(x, y) || x == a || x == b || y == a || y == b) continue;
            if (g.adjacent(a, x) || g.adjacent(b, y)) continue;
            // ab, xy out; ax, by in
            std::vector<std::pair<std::size_t, std::size_t>> es;
            for (const auto& e : g.edges()) {
              auto p = std::minmax(e.tail, e.head);
              if (p == std::minmax(a, b) || p == std::minmax(x, y)) continue;
              es.push_back(p);
            }
            es.push_back({a, x});
            es.push_back({b, y});
            std::size_t d = index.at(canonical_form(make_graph(n, es)).code);
            if (d != c) to[c][d] = 1;
          }
      }
  }
  std::set<std::pair<std::size_t, std::size_t>> adj;
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t d = 0; d < k; ++d) {
      if (to[c][d] != to[d][c]) throw Error("2-switch relation is not symmetric");
      if (c < d && to[c][d]) adj.insert({c, d});
    }
  std::vector<std::string> ds;
  for (std::size_t x : degrees) ds.push_back(std::to_string(x));
  TransformationGraph t{"realization", "(" + join(ds, ",") + ")", {}, Graph()};
  std::vector<VertexId> ids;
  t.graph = indexed_graph("c", k, adj, ids);
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<std::string> pairs;
    for (const auto& e : reps[c].edges()) pairs.push_back(reps[c].vertex(e.tail) + "-" + reps[c].vertex(e.head));
    t.objects.push_back({ids[c], pairs, reps[c], "[" + join(pairs, " ") + "]"});
  }
  return t;
}

TransformationGraph super_line_graph(const Graph& g, std::size_t r, const Graph& h, SuperLineMode mode,
                                     SuperLineOverlap overlap, std::uint64_t budget) {
  if (g.directed() || !g.simple() || h.directed() || !h.simple())
    throw Unsupported("super line graphs need simple undirected graphs");
  const std::size_t m = g.size();
  if (r == 0 || r > m) throw InvalidInput("subset size must be between 1 and the number of edges");
  detail::require_budget("super_line_graph", detail::binomial(m, r), budget);
  const std::size_t n = g.order();
  std::vector<std::vector<std::size_t>> between(n, std::vector<std::size_t>(n, SIZE_MAX));
  for (std::size_t e = 0; e < m; ++e) {
    between[g.edge(e).tail][g.edge(e).head] = e;
    between[g.edge(e).head][g.edge(e).tail] = e;
  }
  std::vector<std::vector<std::size_t>> subsets;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> choose = [&](std::size_t next) {
    if (cur.size() == r) {
      subsets.push_back(cur);
      return;
    }
    for (std::size_t e = next; e + (r - cur.size()) <= m; ++e) {
      cur.push_back(e);
      choose(e + 1);
      cur.pop_back();
    }
  };
  choose(0);

  // 0: outside S ∪ T, 1: only S, 2: only T, 3: both
  std::vector<int> where(m, 0);
  auto contains_copy = [&](const std::vector<std::size_t>& s, const std::vector<std::size_t>& t) {
    std::fill(where.begin(), where.end(), 0);
    for (std::size_t e : s) where[e] |= 1;
    for (std::size_t e : t) where[e] |= 2;
    std::vector<std::size_t> hosts;
    {
      std::set<std::size_t> vs;
      for (std::size_t e = 0; e < m; ++e)
        if (where[e]) {
          vs.insert(g.edge(e).tail);
          vs.insert(g.edge(e).head);
        }
      hosts.assign(vs.begin(), vs.end());
    }
    std::vector<std::size_t> f(h.order());
    std::vector<char> used(n, 0);
    std::function<bool(std::size_t, int)> rec = [&](std::size_t x, int seen) -> bool {
      if (x == h.order()) return mode == SuperLineMode::literal || ((seen & 1) && (seen & 2));
      for (std::size_t a : hosts) {
        if (used[a]) continue;
        int s2 = seen;
        bool ok = true;
        for (std::size_t y = 0; y < x && ok; ++y) {
          if (!h.adjacent(x, y)) continue;
          std::size_t e = between[a][f[y]];
          if (e == SIZE_MAX || !where[e]) ok = false;
          else if (where[e] != 3) s2 |= where[e];
        }
        if (!ok) continue;
        f[x] = a;
        used[a] = 1;
        bool found = rec(x + 1, s2);
        used[a] = 0;
        if (found) return true;
      }
      return false;
    };
    return rec(0, 0);
  };

  std::set<std::pair<std::size_t, std::size_t>> adj;
  for (std::size_t i = 0; i < subsets.size(); ++i)
    for (std::size_t j = i + 1; j < subsets.size(); ++j) {
      if (overlap == SuperLineOverlap::disjoint_only) {
        std::vector<std::size_t> common;
        std::set_intersection(subsets[i].begin(), subsets[i].end(), subsets[j].begin(), subsets[j].end(),
                              std::back_inserter(common));
        if (!common.empty()) continue;
      }
      if (contains_copy(subsets[i], subsets[j])) adj.insert({i, j});
    }
  TransformationGraph t{"superline", "r=" + std::to_string(r), {}, Graph()};
  std::vector<VertexId> ids;
  t.graph = indexed_graph("s", subsets.size(), adj, ids);
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    auto members = edge_ids(g, subsets[i]);
    t.objects.push_back({ids[i], members, std::nullopt, "{" + join(members, ",") + "}"});
  }
  return t;
}

Graph line_graph(const Graph& g) {
  std::vector<VertexId> ids;
  for (const auto& e : g.edges()) ids.push_back(e.id);
  std::vector<EdgeSpec> es;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      const auto &a = g.edge(i), &b = g.edge(j);
      if (a.tail == b.tail || a.tail == b.head || a.head == b.tail || a.head == b.head)
        es.push_back({edge_id(es.size()), a.id, b.id});
    }
  return Graph(ids, std::move(es), false, true);
}

std::string transformation_to_json(const TransformationGraph& t) {
  nlohmann::ordered_json j;
  j["kind"] = t.kind;
  j["base"] = t.base;
  j["objects"] = nlohmann::ordered_json::array();
  for (const auto& o : t.objects) {
    nlohmann::ordered_json x;
    x["id"] = o.id;
    x["members"] = o.members;
    if (o.representative) x["representative"] = nlohmann::ordered_json::parse(graph_to_json(*o.representative));
    j["objects"].push_back(std::move(x));
  }
  j["graph"] = nlohmann::ordered_json::parse(graph_to_json(t.graph));
  return j.dump(2) + "\n";
}

std::string transformation_to_dot(const TransformationGraph& t) {
  std::vector<std::string> labels;
  for (const auto& o : t.objects) labels.push_back(o.label);
  return graph_to_dot(t.graph, t.kind, labels);
}

}  // namespace gcat
