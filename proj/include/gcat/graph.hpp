#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gcat/ids.hpp"

namespace gcat {

/// An edge as supplied by callers: ids only.
struct EdgeSpec {
  EdgeId id;
  VertexId tail;
  VertexId head;
};

/// A finite graph given as a map from edge ids to ordered endpoint pairs.
///
/// Multigraphs and directed graphs are the general case; `simple` restricts
/// to loopless graphs whose endpoint map is injective (up to orientation when
/// undirected). Vertices and edges are kept in natural id order, and an
/// undirected edge stores its smaller endpoint (by id) as the tail, so two
/// graphs built from the same ids compare equal regardless of input order.
///
/// Vertex indices used throughout the library are positions in `vertices()`.
class Graph {
 public:
  struct Edge {
    EdgeId id;
    std::size_t tail;
    std::size_t head;
    friend bool operator==(const Edge&, const Edge&) = default;
  };

  Graph() = default;

  /// Validates every invariant; throws InvalidInput on unknown endpoints,
  /// duplicate ids, or a simple-graph violation.
  Graph(std::vector<VertexId> vertices, std::vector<EdgeSpec> edges, bool directed = false,
        bool simple = true);

  bool directed() const noexcept { return directed_; }
  bool simple() const noexcept { return simple_; }
  std::size_t order() const noexcept { return vertices_.size(); }
  std::size_t size() const noexcept { return edges_.size(); }

  const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const VertexId& vertex(std::size_t i) const { return vertices_.at(i); }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }

  std::optional<std::size_t> find_vertex(std::string_view id) const;
  /// Like find_vertex but throws InvalidInput for an unknown id.
  std::size_t vertex_index(std::string_view id) const;
  std::optional<std::size_t> find_edge(std::string_view id) const;
  std::size_t edge_index(std::string_view id) const;

  /// Edges u->v (directed) or between u and v (undirected; symmetric).
  std::uint32_t multiplicity(std::size_t u, std::size_t v) const {
    return mult_[u * vertices_.size() + v];
  }
  bool adjacent(std::size_t u, std::size_t v) const { return multiplicity(u, v) != 0; }

  /// Distinct heads of edges leaving u (all neighbours when undirected,
  /// u itself included if it carries a loop).
  const std::vector<std::size_t>& out_neighbors(std::size_t u) const { return out_[u]; }
  const std::vector<std::size_t>& in_neighbors(std::size_t u) const {
    return directed_ ? in_[u] : out_[u];
  }
  /// Distinct neighbours in the underlying undirected graph, u excluded.
  const std::vector<std::size_t>& neighbors(std::size_t u) const { return nbr_[u]; }

  /// Edge-end count. Loops contribute 2; directed graphs count in + out.
  std::size_t degree(std::size_t u) const { return degree_[u]; }
  std::size_t loop_count() const;
  bool has_loops() const { return loop_count() != 0; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.directed_ == b.directed_ && a.simple_ == b.simple_ && a.vertices_ == b.vertices_ &&
           a.edges_ == b.edges_;
  }

 private:
  void index();

  bool directed_ = false;
  bool simple_ = true;
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;

  std::vector<std::uint32_t> mult_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
  std::vector<std::vector<std::size_t>> nbr_;
  std::vector<std::size_t> degree_;
};

/// Graph on ids "0".."n-1" with generated edge ids "e0", "e1", ... in the
/// order given. `simple` is inferred from the edge list.
Graph make_graph(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> edges,
                 bool directed = false);
Graph make_graph(std::size_t n, std::initializer_list<std::pair<std::size_t, std::size_t>> edges,
                 bool directed = false);

/// Generated edge id "e<k>".
EdgeId edge_id(std::size_t k);

// Relations over vertex ids --------------------------------------------------

using VertexPair = std::pair<VertexId, VertexId>;

struct PairLess {
  bool operator()(const VertexPair& a, const VertexPair& b) const noexcept;
};

using PairSet = std::set<VertexPair, PairLess>;

/// rel ∪ {(b,a) : (a,b) ∈ rel}. Throws InvalidInput when a pair names a
/// vertex outside `carrier`.
PairSet symmetric_closure(const PairSet& rel, std::span<const VertexId> carrier);

/// {(a,a) : a ∈ vertices}.
PairSet diagonal(std::span<const VertexId> vertices);

/// The edge relation of g: one ordered pair per distinct adjacency, both
/// orientations for undirected graphs.
PairSet edge_relation(const Graph& g);

// Constructions ---------------------------------------------------------------

/// K_n on ids "0".."n-1". Throws InvalidInput for n == 0.
Graph complete_graph(std::size_t n);

enum class UndirectedMode {
  multigraph,  ///< keep parallel images and loops
  simple,      ///< merge parallel images; loops are rejected
};

/// Forget edge directions. In simple mode merged edges keep the smallest id.
Graph underlying_undirected(const Graph& g, UndirectedMode mode = UndirectedMode::multigraph);

struct IncidenceMatrix {
  std::vector<VertexId> rows;
  std::vector<EdgeId> cols;
  std::vector<int> entries;  // row-major, rows.size() x cols.size()

  int at(std::size_t row, std::size_t col) const { return entries[row * cols.size() + col]; }
  int at(std::string_view vertex, std::string_view edge) const;
};

/// M(v,e) = -1 at the tail, +1 at the head, 0 elsewhere. Requires a
/// directed loopless graph; a loop raises Unsupported naming the edge.
IncidenceMatrix incidence_matrix(const Graph& g);

enum class VertexRetention {
  endpoints_only,  ///< vertex set = endpoints of the chosen edges
  all_vertices,    ///< keep every vertex of g
};

/// G|_X: the subgraph made of the edges in X.
Graph induced_by_edges(const Graph& g, std::span<const EdgeId> edges,
                       VertexRetention mode = VertexRetention::endpoints_only);

/// G|_S: the vertices in S and every edge with both endpoints in S.
Graph induced_by_vertices(const Graph& g, std::span<const VertexId> vertices);

// Structural predicates ---------------------------------------------------------

/// No pair of distinct vertices joined in both directions.
bool is_oriented(const Graph& g);

/// Weak connectivity. The empty graph counts as connected.
bool is_connected(const Graph& g);

/// Weakly connected components as sorted index lists, ordered by first member.
std::vector<std::vector<std::size_t>> connected_components(const Graph& g);

/// V(h) ⊆ V(g) and every edge of h is an edge of g with the same id and
/// endpoints.
bool is_subgraph_by_ids(const Graph& h, const Graph& g);

/// Underlying simple neighbourhoods as bitmasks (requires order() <= 64).
std::vector<std::uint64_t> neighbor_masks(const Graph& g);

/// Maximum vertex degree (0 for the empty graph).
std::size_t max_degree(const Graph& g);

}  // namespace gcat
