#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gcat/error.hpp"
#include "gcat/graph.hpp"
#include "gcat/morphism.hpp"

namespace gcat {

/// A partition with a block that does not induce a connected subgraph.
class InvalidPartition : public InvalidInput {
 public:
  InvalidPartition(const std::string& what, std::size_t block) : InvalidInput(what), block_(block) {}
  std::size_t block() const noexcept { return block_; }

 private:
  std::size_t block_;
};

/// A partition of V(graph) into nonempty blocks that each induce a
/// (weakly) connected subgraph. Blocks are sorted and ordered by their
/// least member.
class Partition {
 public:
  /// Throws InvalidInput for overlaps, gaps or unknown ids, and
  /// InvalidPartition for a disconnected block.
  Partition(Graph graph, const std::vector<std::vector<VertexId>>& blocks);
  static Partition from_indices(Graph graph, std::vector<std::vector<std::size_t>> blocks);

  const Graph& graph() const noexcept { return graph_; }
  const std::vector<std::vector<std::size_t>>& blocks() const noexcept { return blocks_; }
  std::size_t block_of(std::size_t v) const { return block_of_[v]; }
  /// Member ids joined by '+', e.g. "0+1".
  std::string block_label(std::size_t b) const;

 private:
  Partition(Graph graph, std::vector<std::vector<std::size_t>> blocks, int);
  Graph graph_;
  std::vector<std::vector<std::size_t>> blocks_;
  std::vector<std::size_t> block_of_;
};

/// The contraction graph: one vertex per block (labelled by block_label),
/// one edge between distinct blocks joined by at least one host edge.
Graph contract(const Partition& p);

/// The faithful contraction: one edge per host edge running between
/// distinct blocks, keeping the host edge id.
Graph contract_faithful(const Partition& p);

/// Vertex -> contracted vertex, as an index map into contract(p).
VertexMap contraction_map(const Partition& p);

/// G/R: contract the connected subgraph r (a subgraph of g by ids) to one
/// vertex. Throws InvalidInput when r is not connected or not in g.
Graph contract_subgraph(const Graph& g, const Graph& r);

inline constexpr std::uint64_t kDefaultPartitionBudget = 10'000'000;
inline constexpr std::uint64_t kDefaultMinorBudget = 100'000'000'000;

/// Stirling number of the second kind, saturating.
std::uint64_t stirling2(std::size_t n, std::size_t k);

/// First connected partition of V(g) (restricted-growth order) whose
/// contraction is isomorphic to h. Refuses when S(|V(g)|, |V(h)|) exceeds
/// the budget.
std::optional<Partition> find_contraction(const Graph& g, const Graph& h,
                                          std::uint64_t budget = kDefaultPartitionBudget);
bool exists_contraction(const Graph& g, const Graph& h, std::uint64_t budget = kDefaultPartitionBudget);

/// H ≤ G realised by disjoint connected branch sets.
struct MinorWitness {
  Graph host;
  Graph pattern;
  /// branch_sets[v]: host vertex indices for pattern vertex v.
  std::vector<std::vector<std::size_t>> branch_sets;
  /// K ⊆ G: every host edge inside a branch set plus one host edge per
  /// pattern edge. Contracting K by the branch sets gives a copy of H.
  Graph used;
};

/// Searches branch sets in G, one per vertex of H, with a host edge between
/// the sets of every pattern edge. Refuses when (|V(H)|+1)^|V(G)| exceeds
/// the budget. Both graphs are read as simple undirected graphs.
std::optional<MinorWitness> find_minor(const Graph& pattern, const Graph& host,
                                       std::uint64_t budget = kDefaultMinorBudget);
bool is_minor(const Graph& pattern, const Graph& host, std::uint64_t budget = kDefaultMinorBudget);

/// Disjoint connected branch sets, K ⊆ G, and contract(K) ≅ H.
bool verify_minor_witness(const MinorWitness& w);

/// A subdivision of H inside G.
struct SubdivisionWitness {
  Graph host;
  Graph pattern;
  VertexMap branch;                             // pattern vertex -> host vertex
  std::vector<std::vector<std::size_t>> paths;  // per pattern edge, host vertex sequence
};

/// Injective branch vertices plus internally disjoint paths, one per
/// pattern edge, avoiding other branch vertices. Exhaustive backtracking;
/// refuses when |V(G)|^|V(H)| * 2^|V(G)| exceeds the budget.
std::optional<SubdivisionWitness> find_topological_minor(const Graph& pattern, const Graph& host,
                                                         std::uint64_t budget = kDefaultMinorBudget);
bool is_topological_minor(const Graph& pattern, const Graph& host, std::uint64_t budget = kDefaultMinorBudget);

bool verify_subdivision_witness(const SubdivisionWitness& w);

/// No K_5 or K_{3,3} subdivision (Kuratowski). Desk-scale only.
bool is_planar(const Graph& g, std::uint64_t budget = kDefaultMinorBudget);

struct PropertyTally {
  std::string name;
  std::size_t checked = 0;     // instances whose premise held
  std::size_t violations = 0;
};

struct MinorAuditReport {
  /// minor[i][j]: pool[i] ≤ pool[j].
  std::vector<std::vector<bool>> minor;
  std::vector<PropertyTally> properties;  // reflexivity, subgraph, contraction, transitivity, antisymmetry
  std::vector<std::string> violations;
  bool passed() const noexcept { return violations.empty(); }
};

/// Reflexivity, subgraph ⇒ minor, contraction ⇒ minor, transitivity over
/// every triple whose premises hold, and antisymmetry up to isomorphism.
MinorAuditReport minor_order_audit(std::span<const Graph> pool, std::uint64_t budget = kDefaultMinorBudget);

struct LowDegreeReport {
  /// Pairs with Δ(pattern) ≤ 3: minor ⇔ topological minor is asserted.
  std::size_t pairs_checked = 0;
  std::size_t both_true = 0;
  std::vector<std::pair<std::size_t, std::size_t>> discrepancies;  // (pattern, host) indices
  /// Pairs with Δ(host) ≤ 3, the other reading of the degree condition;
  /// recorded for comparison, not asserted.
  std::size_t host_reading_pairs = 0;
  std::vector<std::pair<std::size_t, std::size_t>> host_reading_discrepancies;
  bool passed() const noexcept { return discrepancies.empty(); }
};

LowDegreeReport minor_equivalence_low_degree(std::span<const Graph> patterns, std::span<const Graph> hosts,
                                             std::uint64_t budget = kDefaultMinorBudget);
LowDegreeReport minor_equivalence_low_degree(std::span<const Graph> pool, std::uint64_t budget = kDefaultMinorBudget);

/// {"blocks": [[id,...],...]}
Partition partition_from_json(std::string_view text, const Graph& g);
std::string partition_to_json(const Partition& p);
std::string minor_witness_to_json(const MinorWitness& w);
std::string subdivision_witness_to_json(const SubdivisionWitness& w);
std::string minor_audit_to_json(const MinorAuditReport& r);
std::string low_degree_report_to_json(const LowDegreeReport& r);

}  // namespace gcat
