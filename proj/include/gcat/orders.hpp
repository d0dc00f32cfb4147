#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gcat/error.hpp"
#include "gcat/graph.hpp"
#include "gcat/ids.hpp"

namespace gcat {

struct OrderAxioms {
  bool reflexive = false;
  bool irreflexive = false;
  bool symmetric = false;
  bool antisymmetric = false;
  bool transitive = false;
};

/// A binary relation on a finite carrier. Pairs must use carrier elements.
class OrderRelation {
 public:
  OrderRelation(std::vector<VertexId> carrier, const PairSet& pairs);

  const std::vector<VertexId>& carrier() const noexcept { return carrier_; }
  std::size_t size() const noexcept { return carrier_.size(); }
  const PairSet& pairs() const noexcept { return pairs_; }
  /// (carrier[a], carrier[b]) ∈ pairs
  bool related(std::size_t a, std::size_t b) const { return rel_[a * carrier_.size() + b] != 0; }
  /// related and a ≠ b
  bool strictly(std::size_t a, std::size_t b) const { return a != b && related(a, b); }
  std::size_t index(std::string_view id) const;
  const OrderAxioms& axioms() const noexcept { return axioms_; }

 private:
  std::vector<VertexId> carrier_;
  PairSet pairs_;
  std::vector<char> rel_;
  OrderAxioms axioms_;
};

enum class OrderClass { well_founded_order, partial_order, quasi_order, none };
std::string_view to_string(OrderClass c);

struct Classification {
  OrderAxioms axioms;
  bool quasi_order = false;    // reflexive and transitive
  bool partial_order = false;  // quasi order and antisymmetric
  bool well_founded = false;   // strict part acyclic
  OrderClass label = OrderClass::none;
};

Classification classify_relation(const OrderRelation& r);

/// Elements with no strictly smaller element (y ≤ x and not x ≤ y).
/// Throws InvalidInput unless r is a quasi order.
std::vector<VertexId> minimal_elements(const OrderRelation& r);

/// Refusal of a fold over a relation whose strict part has a cycle.
class NotWellFounded : public InvalidInput {
 public:
  explicit NotWellFounded(std::vector<VertexId> cycle);
  /// x0, x1, ..., xk with each x(i) strictly below x(i+1) and xk strictly below x0.
  const std::vector<VertexId>& cycle() const noexcept { return cycle_; }

 private:
  std::vector<VertexId> cycle_;
};

/// A cycle of the strict part, or empty when it is acyclic.
std::vector<VertexId> strict_cycle(const OrderRelation& r);

struct FoldSchedule {
  std::vector<std::size_t> order;               // a linear extension, least id first among ready elements
  std::vector<std::vector<std::size_t>> below;  // below[x]: everything strictly below x (transitively)
};

/// Throws NotWellFounded with a cycle when the strict part is cyclic.
FoldSchedule fold_schedule(const OrderRelation& r);

template <class R>
using FoldContext = std::vector<std::pair<VertexId, const R*>>;

template <class R>
struct FoldResult {
  std::vector<VertexId> schedule;
  std::map<VertexId, R, NaturalLess> results;
};

/// Calls step(x, context) once per carrier element along the schedule; the
/// context holds the results for exactly the elements strictly below x, in
/// carrier order.
template <class R, class Step>
FoldResult<R> induction_fold(const OrderRelation& r, Step&& step) {
  FoldSchedule s = fold_schedule(r);
  std::vector<R> value(r.size());
  FoldResult<R> out;
  for (std::size_t x : s.order) {
    FoldContext<R> ctx;
    for (std::size_t y : s.below[x]) ctx.emplace_back(r.carrier()[y], &value[y]);
    value[x] = step(r.carrier()[x], static_cast<const FoldContext<R>&>(ctx));
    out.schedule.push_back(r.carrier()[x]);
  }
  for (std::size_t x = 0; x < r.size(); ++x) out.results.emplace(r.carrier()[x], std::move(value[x]));
  return out;
}

inline constexpr std::uint64_t kDefaultAntichainBudget = 100'000'000;

struct ChainReport {
  std::size_t max_antichain = 0;
  std::vector<VertexId> antichain;  // a witness
  std::size_t longest_chain = 0;
  std::vector<VertexId> chain;      // a witness, least first
  /// Finite antichains and finite descending chains, which always hold on a
  /// finite carrier.
  bool wqo_conditions_hold = true;
};

/// Exact values by exhaustive search; refuses when 2^|carrier| exceeds the
/// budget.
ChainReport antichains_and_chains(const OrderRelation& r, std::uint64_t budget = kDefaultAntichainBudget);

/// Directed graph with an edge (a,b) per strict pair. Throws InvalidInput
/// unless r is antisymmetric.
Graph order_to_oriented_graph(const OrderRelation& r);

/// a ≤ b iff a divides b, on the given positive integers (ids are decimal).
OrderRelation divisibility_order(const std::vector<long long>& values);

/// Relational-system JSON with exactly one binary relation.
OrderRelation order_from_json(std::string_view text);
std::string order_to_json(const OrderRelation& r);
std::string classification_to_json(const Classification& c);
std::string chain_report_to_json(const ChainReport& c);

}  // namespace gcat
