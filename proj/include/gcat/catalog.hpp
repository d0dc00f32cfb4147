#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "gcat/graph.hpp"

namespace gcat {

inline constexpr std::size_t kMaxCatalogOrder = 7;

/// One canonical representative per isomorphism class of simple undirected
/// graphs with exactly n vertices, sorted by canonical code. Throws
/// ResourceLimit for n > 7.
std::vector<Graph> catalog_of_order(std::size_t n);

/// Every class of order 1..max_order, grouped by order.
std::vector<Graph> catalog(std::size_t max_order);

/// "n<k>": catalog(k). "conn<k>": its connected members.
std::vector<Graph> named_pool(std::string_view name);

}  // namespace gcat
