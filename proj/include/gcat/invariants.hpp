#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gcat/graph.hpp"
#include "gcat/morphism.hpp"

namespace gcat {

/// Vertex degrees, non-increasing. Loops count twice.
std::vector<std::size_t> degree_sequence(const Graph& g);

/// Exact determinant of the 0/1 adjacency matrix of a simple undirected
/// graph (fraction-free elimination in 128-bit arithmetic).
long long adjacency_determinant(const Graph& g, std::size_t max_order = 24);

struct GraphParameters {
  std::size_t order = 0;
  std::size_t size = 0;
  std::optional<std::size_t> diameter;  // nullopt: disconnected (infinite)
  std::optional<std::size_t> girth;     // nullopt: acyclic (infinite)
  std::size_t vertex_connectivity = 0;
};

/// Parameters of the underlying simple graph. Connectivity is found by
/// trying every vertex subset, so 2^|V| must fit the budget.
GraphParameters graph_parameters(const Graph& g, std::uint64_t budget = std::uint64_t{1} << 24);

/// Smallest number of vertices whose removal disconnects g or leaves a
/// single vertex (|V|-1 for complete graphs).
std::size_t vertex_connectivity(const Graph& g, std::uint64_t budget = std::uint64_t{1} << 24);

/// Integer-sequence value of an invariant; scalars are one-element vectors.
using InvariantValue = std::vector<long long>;

/// Registered labels: degree_sequence, aut_order, adjacency_determinant,
/// order, size, diameter, girth, vertex_connectivity, and the probe
/// least_id_degree (degree of the vertex with the least id), which is
/// deliberately not an invariant.
const std::vector<std::string>& invariant_labels();
InvariantValue evaluate_invariant(std::string_view label, const Graph& g);

/// φ(g): vertex i takes the id of vertex perm[i]; edges keep their ids.
Graph relabel(const Graph& g, const std::vector<std::size_t>& perm);

struct InvariantReport {
  std::string invariant_name;
  InvariantValue value;
  std::size_t witness_checked = 0;
  bool passed = true;
  /// First relabelling whose value differed, with that value.
  std::optional<std::vector<std::size_t>> counter_relabeling;
  std::optional<InvariantValue> counter_value;
};

/// Compares f(g) with f(φ(g)) for `trials` uniformly random relabellings.
InvariantReport check_invariance(std::string_view label, const Graph& g, std::size_t trials,
                                 std::uint64_t seed = 0);
/// Same, over all |V|! relabellings.
InvariantReport check_invariance_exhaustive(std::string_view label, const Graph& g,
                                            std::uint64_t budget = kDefaultSymmetryBudget);

/// Every automorphism of g maps V(h) onto V(h) and E(h) onto E(h). h must
/// be a subgraph of g by ids.
bool is_invariant_subgraph(const Graph& g, const Graph& h, std::uint64_t budget = kDefaultSymmetryBudget);

std::string invariant_report_to_json(const InvariantReport& r);
std::string parameters_to_json(const GraphParameters& p);

}  // namespace gcat
