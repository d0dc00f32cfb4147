#include "gcat/relational.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

#include "gcat/error.hpp"

namespace gcat {

bool TupleLess::operator()(const Tuple& a, const Tuple& b) const noexcept {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), NaturalLess{});
}

RelationalSystem::RelationalSystem(std::vector<VertexId> carrier, std::vector<Relation> relations)
    : carrier_(std::move(carrier)), relations_(std::move(relations)) {
  std::sort(carrier_.begin(), carrier_.end(), NaturalLess{});
  if (std::adjacent_find(carrier_.begin(), carrier_.end()) != carrier_.end())
    throw InvalidInput("relational system carrier has duplicate elements");
  for (const auto& r : relations_) {
    if (r.arity == 0) throw InvalidInput("relation '" + r.name + "' has arity 0");
    for (const auto& t : r.tuples) {
      if (t.size() != r.arity)
        throw InvalidInput("relation '" + r.name + "' holds a tuple of length " +
                           std::to_string(t.size()) + ", expected " + std::to_string(r.arity));
      for (const auto& x : t)
        if (!std::binary_search(carrier_.begin(), carrier_.end(), x, NaturalLess{}))
          throw InvalidInput("relation '" + r.name + "' uses '" + x + "' outside the carrier");
    }
  }
}

GraphSystem::GraphSystem(std::vector<VertexId> carrier, std::vector<Graph> members)
    : carrier_(std::move(carrier)), members_(std::move(members)) {
  std::sort(carrier_.begin(), carrier_.end(), NaturalLess{});
  for (const auto& g : members_)
    for (const auto& v : g.vertices())
      if (!std::binary_search(carrier_.begin(), carrier_.end(), v, NaturalLess{}))
        throw InvalidInput("graph system member uses vertex '" + v + "' outside the carrier");
}

namespace {

struct TupleSetLess {
  bool operator()(const TupleSet& a, const TupleSet& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), TupleLess{});
  }
};

}  // namespace

TupleSet sm_closure(const TupleSet& relation, std::size_t m) {
  TupleSet out;
  for (Tuple t : relation) {
    if (t.size() != m)
      throw InvalidInput("tuple of length " + std::to_string(t.size()) + " in a relation of arity " +
                         std::to_string(m));
    std::sort(t.begin(), t.end(), NaturalLess{});
    out.insert(std::move(t));
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> type_symbol(const RelationalSystem& rs) {
  // distinct by extension, not by name
  std::map<std::size_t, std::set<TupleSet, TupleSetLess>> by_arity;
  for (const auto& r : rs.relations()) by_arity[r.arity].insert(r.tuples);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& [k, rels] : by_arity) out.emplace_back(k, rels.size());
  return out;
}

std::size_t arity(const RelationalSystem& rs) {
  if (rs.relations().empty()) throw InvalidInput("undefined arity: system has no relations");
  std::size_t k = 0;
  for (const auto& r : rs.relations()) k = std::max(k, r.arity);
  return k;
}

RelationalSystem hypergraph_from_tuples(std::vector<VertexId> carrier, const std::vector<Tuple>& tuples) {
  std::map<std::size_t, TupleSet> by_arity;
  for (const auto& t : tuples) {
    if (t.empty()) throw InvalidInput("empty tuple");
    by_arity[t.size()].insert(t);
  }
  std::vector<Relation> rels;
  for (auto& [k, ts] : by_arity) rels.push_back({"E" + std::to_string(k), k, std::move(ts)});
  return RelationalSystem(std::move(carrier), std::move(rels));
}

RelationalSystem relational_system_from_graph(const Graph& g) {
  if (!g.simple()) throw Unsupported("only simple graphs convert to a relational system");
  Relation e{"E", 2, {}};
  for (const auto& [a, b] : edge_relation(g)) e.tuples.insert({a, b});
  return RelationalSystem(g.vertices(), {std::move(e)});
}

Graph graph_from_relational_system(const RelationalSystem& rs, std::optional<bool> directed) {
  if (rs.relations().size() != 1 || rs.relations()[0].arity != 2)
    throw InvalidInput("graph conversion needs exactly one binary relation");
  const TupleSet& ts = rs.relations()[0].tuples;
  bool symmetric = true, irreflexive = true;
  for (const auto& t : ts) {
    if (t[0] == t[1]) irreflexive = false;
    if (!ts.count(Tuple{t[1], t[0]})) symmetric = false;
  }
  bool is_directed = directed.value_or(!(symmetric && irreflexive));
  if (!is_directed && !symmetric) throw InvalidInput("relation is not symmetric");
  std::vector<EdgeSpec> es;
  for (const auto& t : ts) {
    if (!is_directed && natural_less(t[1], t[0])) continue;
    es.push_back({edge_id(es.size()), t[0], t[1]});
  }
  // relations are sets, so the only simplicity violation left is a loop
  return Graph(rs.carrier(), std::move(es), is_directed, irreflexive);
}

RelationalSystem relational_system_from_json(std::string_view text) {
  try {
    auto j = nlohmann::json::parse(text);
    auto id = [](const nlohmann::json& x) -> std::string {
      if (x.is_string()) return x.get<std::string>();
      if (x.is_number_integer()) return std::to_string(x.get<long long>());
      throw InvalidInput("relational system ids must be strings or integers");
    };
    std::vector<VertexId> carrier;
    for (const auto& v : j.at("carrier")) carrier.push_back(id(v));
    std::vector<Relation> rels;
    for (const auto& r : j.at("relations")) {
      Relation rel{r.at("name").get<std::string>(), r.at("arity").get<std::size_t>(), {}};
      for (const auto& t : r.at("tuples")) {
        Tuple tup;
        for (const auto& x : t) tup.push_back(id(x));
        rel.tuples.insert(std::move(tup));
      }
      rels.push_back(std::move(rel));
    }
    return RelationalSystem(std::move(carrier), std::move(rels));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("relational system JSON: ") + e.what());
  }
}

std::string relational_system_to_json(const RelationalSystem& rs) {
  nlohmann::ordered_json j;
  j["carrier"] = rs.carrier();
  j["relations"] = nlohmann::ordered_json::array();
  for (const auto& r : rs.relations()) {
    nlohmann::ordered_json jr;
    jr["name"] = r.name;
    jr["arity"] = r.arity;
    jr["tuples"] = nlohmann::ordered_json::array();
    for (const auto& t : r.tuples) jr["tuples"].push_back(t);
    j["relations"].push_back(std::move(jr));
  }
  return j.dump(2) + "\n";
}

}  // namespace gcat
