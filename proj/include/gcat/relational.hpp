#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gcat/graph.hpp"

namespace gcat {

using Tuple = std::vector<VertexId>;

struct TupleLess {
  bool operator()(const Tuple& a, const Tuple& b) const noexcept;
};

using TupleSet = std::set<Tuple, TupleLess>;

/// A named finite relation of fixed arity.
struct Relation {
  std::string name;
  std::size_t arity = 0;
  TupleSet tuples;
};

/// A carrier plus a list of relations on it. Construction checks that every
/// tuple has its relation's arity and only uses carrier elements.
class RelationalSystem {
 public:
  RelationalSystem() = default;
  RelationalSystem(std::vector<VertexId> carrier, std::vector<Relation> relations);

  const std::vector<VertexId>& carrier() const noexcept { return carrier_; }
  const std::vector<Relation>& relations() const noexcept { return relations_; }

 private:
  std::vector<VertexId> carrier_;
  std::vector<Relation> relations_;
};

/// Several graphs over one vertex set.
class GraphSystem {
 public:
  GraphSystem(std::vector<VertexId> carrier, std::vector<Graph> members);

  const std::vector<VertexId>& carrier() const noexcept { return carrier_; }
  const std::vector<Graph>& members() const noexcept { return members_; }

 private:
  std::vector<VertexId> carrier_;
  std::vector<Graph> members_;
};

/// Quotient of an m-ary relation by coordinate permutation; each orbit is
/// represented by its sorted tuple. Throws InvalidInput on a tuple whose
/// length is not m.
TupleSet sm_closure(const TupleSet& relation, std::size_t m);

/// (arity, number of extensionally distinct relations of that arity),
/// sorted by arity.
std::vector<std::pair<std::size_t, std::size_t>> type_symbol(const RelationalSystem& rs);

/// Largest relation arity. Throws InvalidInput ("undefined arity") when the
/// system has no relations.
std::size_t arity(const RelationalSystem& rs);

/// One relation "E<k>" per arity k occurring among the tuples.
RelationalSystem hypergraph_from_tuples(std::vector<VertexId> carrier, const std::vector<Tuple>& tuples);

/// A simple graph as a system of type (2^1). Undirected edges contribute
/// both orientations.
RelationalSystem relational_system_from_graph(const Graph& g);

/// The inverse of relational_system_from_graph. Requires exactly one binary
/// relation. With `directed` unset, a symmetric irreflexive relation gives an
/// undirected graph and anything else a directed one. Edge ids are "e0", ...
/// in pair order.
Graph graph_from_relational_system(const RelationalSystem& rs, std::optional<bool> directed = std::nullopt);

/// {"carrier":[...], "relations":[{"name":str,"arity":k,"tuples":[[...],...]}]}
RelationalSystem relational_system_from_json(std::string_view text);
std::string relational_system_to_json(const RelationalSystem& rs);

}  // namespace gcat
