#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gcat/graph.hpp"

namespace gcat {

/// What a vertex of a transformation graph stands for.
struct TransformObject {
  VertexId id;
  std::vector<std::string> members;  // edge ids of a tree, matching or edge subset; the integer for divisibility
  std::optional<Graph> representative;  // canonical class representative (realization graphs)
  std::string label;                    // short description used in DOT output
};

struct TransformationGraph {
  std::string kind;
  std::string base;
  std::vector<TransformObject> objects;  // index i describes graph.vertex(i)
  Graph graph;
};

inline constexpr std::uint64_t kDefaultTransformBudget = 10'000'000;
inline constexpr std::uint64_t kDefaultSuperLineBudget = 10'000;
inline constexpr std::uint64_t kDefaultRealizationBudget = 1'000'000'000;

/// Directed; (a,b) iff a divides b and a ≠ b. Vertex ids are the decimal values.
TransformationGraph divisibility_graph(const std::vector<long long>& values);

/// Spanning trees as edge-id sets, adjacent iff their symmetric difference
/// has exactly two edges. Refuses when C(|E|, |V|-1) exceeds the budget;
/// throws InvalidInput for a disconnected or directed graph.
TransformationGraph tree_transformation_graph(const Graph& g, std::uint64_t budget = kDefaultTransformBudget);

/// Spanning trees of g as sorted edge-index lists, in lexicographic order.
std::vector<std::vector<std::size_t>> spanning_trees(const Graph& g, std::uint64_t budget = kDefaultTransformBudget);

/// Perfect matchings, adjacent iff their symmetric difference is a single
/// cycle. Throws InvalidInput when there is no perfect matching.
TransformationGraph matching_transformation_graph(const Graph& g, std::uint64_t budget = kDefaultTransformBudget);

std::vector<std::vector<std::size_t>> perfect_matchings(const Graph& g, std::uint64_t budget = kDefaultTransformBudget);

/// Isomorphism classes of simple realizations of d, adjacent iff a 2-switch
/// on four distinct vertices turns one into the other. Refuses when
/// 2^C(n,2) exceeds the budget; throws InvalidInput when d is not graphic.
TransformationGraph realization_graph(const std::vector<std::size_t>& degrees,
                                      std::uint64_t budget = kDefaultRealizationBudget);

/// All pairwise non-isomorphic simple realizations, as canonical graphs.
std::vector<Graph> realization_classes(const std::vector<std::size_t>& degrees,
                                       std::uint64_t budget = kDefaultRealizationBudget);

enum class SuperLineMode { cross, literal };
enum class SuperLineOverlap { allowed, disjoint_only };

/// Vertices are the r-subsets of E(g). S ≠ T are adjacent iff the subgraph
/// formed by the edges of S ∪ T contains a copy of h; in cross mode the copy
/// must use an edge of S \ T and an edge of T \ S. Refuses when C(|E|, r)
/// exceeds the budget; throws InvalidInput when r is 0 or exceeds |E|.
TransformationGraph super_line_graph(const Graph& g, std::size_t r, const Graph& h,
                                     SuperLineMode mode = SuperLineMode::cross,
                                     SuperLineOverlap overlap = SuperLineOverlap::allowed,
                                     std::uint64_t budget = kDefaultSuperLineBudget);

/// Vertices are the edge ids of g, adjacent iff the edges share an endpoint.
Graph line_graph(const Graph& g);

std::string transformation_to_json(const TransformationGraph& t);
std::string transformation_to_dot(const TransformationGraph& t);

}  // namespace gcat
