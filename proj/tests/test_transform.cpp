#include <catch_amalgamated.hpp>

#include <set>

#include "gcat/error.hpp"
#include "gcat/catalog.hpp"
#include "gcat/invariants.hpp"
#include "gcat/morphism.hpp"
#include "gcat/named_graphs.hpp"
#include "gcat/transform.hpp"
#include "oracles.hpp"

using namespace gcat;

namespace {

bool iso(const Graph& a, const Graph& b) { return oracle::isomorphic(oracle::simple_of(a), oracle::simple_of(b)); }

Graph two_edges() { return Graph({"a", "b", "c", "d"}, {{"e", "a", "b"}, {"f", "c", "d"}}); }

}  // namespace

TEST_CASE("divisibility graphs") {
  auto t = divisibility_graph({2, 3, 4, 6});
  CHECK(t.graph.directed());
  CHECK(t.graph.size() == 3);
  CHECK(t.graph.adjacent(t.graph.vertex_index("2"), t.graph.vertex_index("4")));
  CHECK(t.graph.adjacent(t.graph.vertex_index("2"), t.graph.vertex_index("6")));
  CHECK(t.graph.adjacent(t.graph.vertex_index("3"), t.graph.vertex_index("6")));
  CHECK(divisibility_graph({3, 5, 7, 11}).graph.size() == 0);
  CHECK(divisibility_graph({1, 2}).graph.size() == 1);
  CHECK_THROWS_AS(divisibility_graph({0, 2}), InvalidInput);
}

TEST_CASE("tree transformation graphs of small cycles and trees") {
  CHECK(iso(tree_transformation_graph(cycle_graph(3)).graph, complete_graph(3)));
  CHECK(iso(tree_transformation_graph(cycle_graph(4)).graph, complete_graph(4)));
  CHECK(tree_transformation_graph(path_graph(5)).graph.order() == 1);
  CHECK(tree_transformation_graph(star_graph(4)).graph.order() == 1);
  CHECK_THROWS_AS(tree_transformation_graph(empty_graph(2)), InvalidInput);
}

TEST_CASE("spanning tree counts match the matrix-tree theorem") {
  for (const auto& g : named_pool("conn5")) {
    auto trees = spanning_trees(g);
    CHECK(static_cast<long long>(trees.size()) == oracle::spanning_tree_count(oracle::simple_of(g)));
    std::set<std::vector<std::size_t>> distinct(trees.begin(), trees.end());
    CHECK(distinct.size() == trees.size());
  }
  CHECK(spanning_trees(complete_graph(5)).size() == 125);
  CHECK(spanning_trees(petersen_graph()).size() == 2000);
}

TEST_CASE("tree adjacency is a single exchange") {
  auto t = tree_transformation_graph(complete_graph(4));
  CHECK(t.graph.order() == 16);
  for (std::size_t i = 0; i < t.graph.order(); ++i)
    for (std::size_t j = i + 1; j < t.graph.order(); ++j) {
      std::set<std::string> a(t.objects[i].members.begin(), t.objects[i].members.end());
      std::set<std::string> b(t.objects[j].members.begin(), t.objects[j].members.end());
      std::size_t common = 0;
      for (const auto& e : a) common += b.count(e);
      CHECK(t.graph.adjacent(i, j) == (common + 1 == a.size()));
    }
}

TEST_CASE("perfect matching counts") {
  struct Row {
    Graph g;
    std::size_t count;
  };
  for (const auto& [g, count] : {Row{complete_graph(4), 3}, Row{complete_graph(6), 15}, Row{cube_graph(), 9},
                                 Row{cycle_graph(6), 2}, Row{complete_bipartite(3, 3), 6}, Row{petersen_graph(), 6}}) {
    CHECK(perfect_matchings(g).size() == count);
    CHECK(perfect_matchings(g).size() == oracle::perfect_matching_count(oracle::simple_of(g)));
  }
}

TEST_CASE("matching transformation graphs") {
  CHECK(iso(matching_transformation_graph(cycle_graph(6)).graph, complete_graph(2)));
  CHECK(iso(matching_transformation_graph(complete_graph(4)).graph, complete_graph(3)));
  CHECK(matching_transformation_graph(complete_graph(2)).graph.order() == 1);
  CHECK_THROWS_AS(matching_transformation_graph(path_graph(3)), InvalidInput);
  CHECK_THROWS_AS(matching_transformation_graph(star_graph(3)), InvalidInput);
}

TEST_CASE("the cube's matching graph is 2-connected") {
  auto t = matching_transformation_graph(cube_graph());
  CHECK(t.graph.order() == 9);
  CHECK(vertex_connectivity(t.graph) >= 2);
}

TEST_CASE("matching differences are even cycles") {
  // two perfect matchings of K_6: every vertex meets one edge of each, so the
  // difference has all degrees 0 or 2
  Graph k6 = complete_graph(6);
  auto ms = perfect_matchings(k6);
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j) {
      std::vector<int> deg(6, 0);
      std::set<std::size_t> a(ms[i].begin(), ms[i].end()), b(ms[j].begin(), ms[j].end());
      std::size_t diff = 0;
      for (std::size_t e = 0; e < k6.size(); ++e)
        if (a.count(e) != b.count(e)) {
          ++diff;
          ++deg[k6.edge(e).tail];
          ++deg[k6.edge(e).head];
        }
      CHECK(diff % 2 == 0);
      for (int d : deg) CHECK((d == 0 || d == 2));
    }
}

TEST_CASE("realization graphs") {
  auto one = realization_graph({1, 1, 1, 1});
  CHECK(one.graph.order() == 1);
  REQUIRE(one.objects[0].representative);
  CHECK(one.objects[0].representative->size() == 2);
  auto two = realization_graph({2, 2, 2, 2, 2, 2});
  CHECK(two.graph.order() == 2);
  CHECK(two.graph.size() == 1);
  CHECK(realization_graph({0, 0, 0}).graph.order() == 1);
  CHECK_THROWS_AS(realization_graph({1, 1, 1}), InvalidInput);
  CHECK_THROWS_AS(realization_graph({3, 1}), InvalidInput);
  // adjacency is symmetric on every instance
  for (auto d : std::vector<std::vector<std::size_t>>{{2, 2, 2, 2, 2, 2}, {3, 3, 2, 2, 2}, {2, 2, 1, 1, 1, 1}, {3, 3, 3, 3, 2, 2}}) {
    auto t = realization_graph(d);
    for (std::size_t a = 0; a < t.graph.order(); ++a)
      for (std::size_t b = 0; b < t.graph.order(); ++b) CHECK(t.graph.adjacent(a, b) == t.graph.adjacent(b, a));
    for (const auto& o : t.objects) {
      REQUIRE(o.representative);
      std::vector<std::size_t> degs;
      for (std::size_t v = 0; v < o.representative->order(); ++v) degs.push_back(o.representative->degree(v));
      std::sort(degs.begin(), degs.end());
      auto sorted = d;
      std::sort(sorted.begin(), sorted.end());
      CHECK(degs == sorted);
    }
  }
}

TEST_CASE("super line graphs with r = 1 and a path pattern") {
  Graph p3 = path_graph(3);
  CHECK(iso(super_line_graph(complete_graph(3), 1, p3).graph, complete_graph(3)));
  auto two = super_line_graph(two_edges(), 1, p3);
  CHECK(two.graph.order() == 2);
  CHECK(two.graph.size() == 0);
  for (const auto& g : catalog(5)) {
    if (g.size() == 0) continue;
    CHECK(iso(super_line_graph(g, 1, p3).graph, line_graph(g)));
    CHECK(iso(super_line_graph(g, 1, p3, SuperLineMode::literal).graph, line_graph(g)));
  }
  CHECK_THROWS_AS(super_line_graph(cycle_graph(3), 4, p3), InvalidInput);
  CHECK_THROWS_AS(super_line_graph(cycle_graph(3), 0, p3), InvalidInput);
  CHECK_THROWS_AS(super_line_graph(complete_graph(7), 3, p3, SuperLineMode::cross, SuperLineOverlap::allowed, 100),
                  ResourceLimit);
}

TEST_CASE("super line modes differ at r = 2") {
  Graph c4 = cycle_graph(4);
  auto cross = super_line_graph(c4, 2, path_graph(3));
  auto literal = super_line_graph(c4, 2, path_graph(3), SuperLineMode::literal);
  auto disjoint = super_line_graph(c4, 2, path_graph(3), SuperLineMode::cross, SuperLineOverlap::disjoint_only);
  CHECK(cross.graph.order() == 6);
  // every pair of 2-subsets of C_4 contains a path of length 2 in its union
  CHECK(literal.graph.size() == 15);
  CHECK(cross.graph.size() <= literal.graph.size());
  CHECK(disjoint.graph.size() <= cross.graph.size());
}

TEST_CASE("line graphs") {
  CHECK(iso(line_graph(path_graph(3)), complete_graph(2)));
  CHECK(iso(line_graph(star_graph(3)), complete_graph(3)));
  for (std::size_t n = 3; n <= 8; ++n) CHECK(iso(line_graph(cycle_graph(n)), cycle_graph(n)));
  Graph l = line_graph(petersen_graph());
  CHECK(l.order() == 15);
  CHECK(l.size() == 30);
}

TEST_CASE("transformation JSON and DOT") {
  auto t = tree_transformation_graph(cycle_graph(3));
  std::string json = transformation_to_json(t);
  CHECK(json.find("\"kind\": \"tree\"") != std::string::npos);
  CHECK(json.find("\"members\"") != std::string::npos);
  std::string dot = transformation_to_dot(t);
  CHECK(dot.rfind("graph", 0) == 0);
  CHECK(transformation_to_dot(t) == dot);
}
