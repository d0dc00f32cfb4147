#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "gcat/graph.hpp"

namespace gcat {

/// Colour refinement (1-dimensional Weisfeiler-Leman) run jointly over
/// several graphs, so equal colours mean the same thing in every graph.
/// Colours are ranks of sorted signatures, hence isomorphism-invariant.
std::vector<std::vector<std::uint32_t>> refine_colors(std::span<const Graph* const> graphs);

/// A complete isomorphism invariant: graphs are isomorphic iff their codes
/// are equal. `order[p]` is the vertex placed at position p.
struct CanonicalForm {
  std::vector<std::uint32_t> code;
  std::vector<std::size_t> order;
};

/// Lexicographically least adjacency code over all labelings that respect
/// the refined colour classes, found by branch and bound.
CanonicalForm canonical_form(const Graph& g);

/// g relabelled into canonical position order with ids "0".."n-1" and
/// edge ids "e0", ... . Isomorphic inputs give equal graphs.
Graph canonical_graph(const Graph& g);

/// Calls `visit` with every isomorphism g -> h, given as target indices per
/// source vertex, in lexicographic order. Stops early when `visit` returns
/// false. Isomorphisms preserve edge multiplicities in both directions.
void for_each_isomorphism(const Graph& g, const Graph& h,
                          const std::function<bool(std::span<const std::size_t>)>& visit);

}  // namespace gcat
