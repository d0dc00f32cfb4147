#include "gcat/orders.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <queue>

#include <json.hpp>

#include "gcat/relational.hpp"

namespace gcat {

OrderRelation::OrderRelation(std::vector<VertexId> carrier, const PairSet& pairs) : carrier_(std::move(carrier)) {
  std::sort(carrier_.begin(), carrier_.end(), NaturalLess{});
  if (std::adjacent_find(carrier_.begin(), carrier_.end()) != carrier_.end())
    throw InvalidInput("carrier lists an element twice");
  const std::size_t n = carrier_.size();
  rel_.assign(n * n, 0);
  for (const auto& [a, b] : pairs) {
    rel_[index(a) * n + index(b)] = 1;
    pairs_.insert({a, b});
  }
  OrderAxioms& ax = axioms_;
  ax.reflexive = ax.irreflexive = ax.symmetric = ax.antisymmetric = ax.transitive = true;
  for (std::size_t a = 0; a < n; ++a) {
    if (related(a, a)) ax.irreflexive = false;
    else ax.reflexive = false;
    for (std::size_t b = 0; b < n; ++b) {
      if (related(a, b) != related(b, a)) ax.symmetric = false;
      if (a != b && related(a, b) && related(b, a)) ax.antisymmetric = false;
      if (!related(a, b)) continue;
      for (std::size_t c = 0; c < n && ax.transitive; ++c)
        if (related(b, c) && !related(a, c)) ax.transitive = false;
    }
  }
}

std::size_t OrderRelation::index(std::string_view id) const {
  auto it = std::lower_bound(carrier_.begin(), carrier_.end(), id, NaturalLess{});
  if (it == carrier_.end() || *it != id) throw InvalidInput("pair uses '" + std::string(id) + "' outside the carrier");
  return static_cast<std::size_t>(it - carrier_.begin());
}

std::string_view to_string(OrderClass c) {
  switch (c) {
    case OrderClass::well_founded_order: return "well_founded_order";
    case OrderClass::partial_order: return "partial_order";
    case OrderClass::quasi_order: return "quasi_order";
    case OrderClass::none: return "none";
  }
  return "?";
}

Classification classify_relation(const OrderRelation& r) {
  Classification c;
  c.axioms = r.axioms();
  c.quasi_order = c.axioms.reflexive && c.axioms.transitive;
  c.partial_order = c.quasi_order && c.axioms.antisymmetric;
  c.well_founded = strict_cycle(r).empty();
  if (c.partial_order) c.label = c.well_founded ? OrderClass::well_founded_order : OrderClass::partial_order;
  else if (c.quasi_order) c.label = OrderClass::quasi_order;
  return c;
}

std::vector<VertexId> minimal_elements(const OrderRelation& r) {
  const auto& ax = r.axioms();
  if (!(ax.reflexive && ax.transitive)) throw InvalidInput("minimal elements need a quasi order or partial order");
  std::vector<VertexId> out;
  for (std::size_t x = 0; x < r.size(); ++x) {
    bool minimal = true;
    for (std::size_t y = 0; y < r.size() && minimal; ++y)
      if (r.related(y, x) && !r.related(x, y)) minimal = false;
    if (minimal) out.push_back(r.carrier()[x]);
  }
  return out;
}

namespace {

std::string describe_cycle(const std::vector<VertexId>& cycle) {
  std::string s;
  for (const auto& v : cycle) s += v + " < ";
  return s + cycle.front();
}

}  // namespace

NotWellFounded::NotWellFounded(std::vector<VertexId> cycle)
    : InvalidInput("strict part has a cycle: " + describe_cycle(cycle)), cycle_(std::move(cycle)) {}

std::vector<VertexId> strict_cycle(const OrderRelation& r) {
  const std::size_t n = r.size();
  std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
  std::vector<std::size_t> path;
  std::vector<VertexId> cycle;
  std::function<bool(std::size_t)> dfs = [&](std::size_t u) -> bool {
    state[u] = 1;
    path.push_back(u);
    for (std::size_t v = 0; v < n; ++v) {
      if (!r.strictly(u, v)) continue;
      if (state[v] == 1) {
        auto it = std::find(path.begin(), path.end(), v);
        for (; it != path.end(); ++it) cycle.push_back(r.carrier()[*it]);
        return true;
      }
      if (state[v] == 0 && dfs(v)) return true;
    }
    path.pop_back();
    state[u] = 2;
    return false;
  };
  for (std::size_t s = 0; s < n; ++s)
    if (state[s] == 0 && dfs(s)) break;
  return cycle;
}

FoldSchedule fold_schedule(const OrderRelation& r) {
  if (auto cycle = strict_cycle(r); !cycle.empty()) throw NotWellFounded(std::move(cycle));
  const std::size_t n = r.size();
  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (r.strictly(a, b)) ++indegree[b];
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (indegree[v] == 0) ready.push(v);
  FoldSchedule s;
  s.below.resize(n);
  while (!ready.empty()) {
    std::size_t x = ready.top();
    ready.pop();
    s.order.push_back(x);
    for (std::size_t y = 0; y < n; ++y) {
      if (!r.strictly(x, y)) continue;
      auto& b = s.below[y];
      b.push_back(x);
      b.insert(b.end(), s.below[x].begin(), s.below[x].end());
      if (--indegree[y] == 0) {
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
        ready.push(y);
      }
    }
  }
  return s;
}

namespace {

// Largest clique of a graph given as bitmask rows; the first one found in
// lexicographic vertex order among the largest.
std::uint64_t max_clique(const std::vector<std::uint64_t>& adj) {
  std::uint64_t best = 0;
  std::function<void(std::uint64_t, std::uint64_t)> rec = [&](std::uint64_t cur, std::uint64_t cand) {
    if (cand == 0) {
      if (std::popcount(cur) > std::popcount(best)) best = cur;
      return;
    }
    while (cand) {
      if (std::popcount(cur) + std::popcount(cand) <= std::popcount(best)) return;
      std::size_t v = std::countr_zero(cand);
      cand &= cand - 1;
      rec(cur | std::uint64_t{1} << v, cand & adj[v]);
    }
    if (std::popcount(cur) > std::popcount(best)) best = cur;
  };
  rec(0, adj.empty() ? 0 : (adj.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << adj.size()) - 1));
  return best;
}

}  // namespace

ChainReport antichains_and_chains(const OrderRelation& r, std::uint64_t budget) {
  const std::size_t n = r.size();
  if (n > 64) throw ResourceLimit("antichains_and_chains", UINT64_MAX, budget);
  detail::require_budget("antichains_and_chains", detail::sat_pow(2, n), budget);
  std::vector<std::uint64_t> incomparable(n, 0), comparable(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      if (r.related(a, b) || r.related(b, a)) comparable[a] |= std::uint64_t{1} << b;
      else incomparable[a] |= std::uint64_t{1} << b;
    }
  ChainReport out;
  std::uint64_t anti = max_clique(incomparable), chain = max_clique(comparable);
  for (std::uint64_t f = anti; f; f &= f - 1) out.antichain.push_back(r.carrier()[std::countr_zero(f)]);
  std::vector<std::size_t> members;
  for (std::uint64_t f = chain; f; f &= f - 1) members.push_back(std::countr_zero(f));
  auto rank = [&](std::size_t x) {
    std::size_t k = 0;
    for (std::size_t y : members)
      if (r.related(y, x)) ++k;
    return k;
  };
  std::stable_sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) { return rank(a) < rank(b); });
  for (std::size_t x : members) out.chain.push_back(r.carrier()[x]);
  out.max_antichain = out.antichain.size();
  out.longest_chain = out.chain.size();
  return out;
}

Graph order_to_oriented_graph(const OrderRelation& r) {
  if (!r.axioms().antisymmetric) throw InvalidInput("relation is not antisymmetric");
  std::vector<EdgeSpec> es;
  for (std::size_t a = 0; a < r.size(); ++a)
    for (std::size_t b = 0; b < r.size(); ++b)
      if (r.strictly(a, b)) es.push_back({edge_id(es.size()), r.carrier()[a], r.carrier()[b]});
  return Graph(r.carrier(), std::move(es), true, true);
}

OrderRelation divisibility_order(const std::vector<long long>& values) {
  std::vector<long long> v(values);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  std::vector<VertexId> carrier;
  PairSet pairs;
  for (long long a : v) {
    if (a < 1) throw InvalidInput("divisibility needs positive integers");
    carrier.push_back(std::to_string(a));
  }
  for (long long a : v)
    for (long long b : v)
      if (b % a == 0) pairs.insert({std::to_string(a), std::to_string(b)});
  return OrderRelation(std::move(carrier), pairs);
}

OrderRelation order_from_json(std::string_view text) {
  RelationalSystem rs = relational_system_from_json(text);
  if (rs.relations().size() != 1 || rs.relations().front().arity != 2)
    throw InvalidInput("an order needs exactly one binary relation");
  PairSet pairs;
  for (const auto& t : rs.relations().front().tuples) pairs.insert({t[0], t[1]});
  return OrderRelation(rs.carrier(), pairs);
}

std::string order_to_json(const OrderRelation& r) {
  Relation rel{"le", 2, {}};
  for (const auto& [a, b] : r.pairs()) rel.tuples.insert({a, b});
  return relational_system_to_json(RelationalSystem(r.carrier(), {rel}));
}

std::string classification_to_json(const Classification& c) {
  nlohmann::ordered_json j;
  j["classification"] = std::string(to_string(c.label));
  j["axioms"] = {{"reflexive", c.axioms.reflexive},         {"irreflexive", c.axioms.irreflexive},
                 {"symmetric", c.axioms.symmetric},         {"antisymmetric", c.axioms.antisymmetric},
                 {"transitive", c.axioms.transitive}};
  j["quasi_order"] = c.quasi_order;
  j["partial_order"] = c.partial_order;
  j["well_founded"] = c.well_founded;
  return j.dump(2) + "\n";
}

std::string chain_report_to_json(const ChainReport& c) {
  nlohmann::ordered_json j;
  j["max_antichain"] = c.max_antichain;
  j["antichain"] = c.antichain;
  j["longest_chain"] = c.longest_chain;
  j["chain"] = c.chain;
  j["wqo_conditions_hold"] = c.wqo_conditions_hold;
  return j.dump(2) + "\n";
}

}  // namespace gcat
