#include <catch_amalgamated.hpp>

#include <random>

#include "gcat/error.hpp"
#include "gcat/graph.hpp"
#include "gcat/graph_io.hpp"
#include "gcat/ids.hpp"
#include "gcat/named_graphs.hpp"
#include "oracles.hpp"

using namespace gcat;

namespace {

Graph random_graph(std::mt19937_64& rng, std::size_t n, double p, bool directed) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<std::size_t, std::size_t>> es;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = directed ? 0 : a + 1; b < n; ++b)
      if (a != b && coin(rng)) es.push_back({a, b});
  return make_graph(n, es, directed);
}

}  // namespace

TEST_CASE("natural id order compares digit runs numerically") {
  CHECK(natural_less("2", "10"));
  CHECK_FALSE(natural_less("10", "2"));
  CHECK(natural_less("a2", "a10"));
  CHECK(natural_less("a", "b"));
  CHECK_FALSE(natural_less("x", "x"));
}

TEST_CASE("graph construction validates its input") {
  CHECK_THROWS_AS(Graph({"a", "a"}, {}), InvalidInput);
  CHECK_THROWS_AS(Graph({"a"}, {{"e", "a", "b"}}), InvalidInput);
  CHECK_THROWS_AS(Graph({"a", "b"}, {{"e", "a", "b"}, {"e", "b", "a"}}, false, false), InvalidInput);
  CHECK_THROWS_AS(Graph({"a"}, {{"e", "a", "a"}}, false, true), InvalidInput);
  CHECK_THROWS_AS(Graph({"a", "b"}, {{"e", "a", "b"}, {"f", "b", "a"}}, false, true), InvalidInput);
  // antiparallel arcs are fine in a simple directed graph
  CHECK_NOTHROW(Graph({"a", "b"}, {{"e", "a", "b"}, {"f", "b", "a"}}, true, true));
  // multigraphs allow loops and parallels
  Graph m({"a", "b"}, {{"e", "a", "b"}, {"f", "b", "a"}, {"g", "a", "a"}}, false, false);
  CHECK(m.multiplicity(0, 1) == 2);
  CHECK(m.degree(0) == 4);
  CHECK(m.loop_count() == 1);
}

TEST_CASE("undirected edges store the smaller id as tail") {
  Graph g({"10", "2"}, {{"e", "10", "2"}});
  CHECK(g.vertex(0) == "2");
  CHECK(g.vertex(g.edge(0).tail) == "2");
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(1, 0));
}

TEST_CASE("symmetric closure and diagonal") {
  std::vector<VertexId> carrier{"a", "b", "c"};
  PairSet rel{{"a", "b"}, {"b", "c"}};
  auto s = symmetric_closure(rel, carrier);
  CHECK(s == PairSet{{"a", "b"}, {"b", "a"}, {"b", "c"}, {"c", "b"}});
  CHECK(symmetric_closure(s, carrier) == s);
  CHECK(symmetric_closure({}, carrier).empty());
  CHECK_THROWS_AS(symmetric_closure(PairSet{{"a", "z"}}, carrier), InvalidInput);
  CHECK(diagonal(carrier).size() == 3);
  CHECK(diagonal(std::vector<VertexId>{}).empty());
}

TEST_CASE("complete graphs") {
  for (std::size_t n = 1; n <= 7; ++n) {
    Graph k = complete_graph(n);
    CHECK(k.size() == n * (n - 1) / 2);
    CHECK(k.simple());
  }
  CHECK_THROWS_AS(complete_graph(0), InvalidInput);
}

TEST_CASE("underlying undirected graph") {
  Graph d({"a", "b"}, {{"e", "a", "b"}, {"f", "b", "a"}}, true, true);
  Graph multi = underlying_undirected(d, UndirectedMode::multigraph);
  CHECK_FALSE(multi.directed());
  CHECK(multi.size() == 2);
  CHECK(multi.multiplicity(0, 1) == 2);
  Graph simple = underlying_undirected(d, UndirectedMode::simple);
  CHECK(simple.size() == 1);
  CHECK(simple.edge(0).id == "e");
  Graph loop({"a"}, {{"l", "a", "a"}}, true, false);
  CHECK(underlying_undirected(loop, UndirectedMode::multigraph).loop_count() == 1);
  CHECK_THROWS_AS(underlying_undirected(loop, UndirectedMode::simple), Unsupported);
}

TEST_CASE("incidence matrix of a directed graph") {
  Graph d = make_graph(3, {{0, 1}, {1, 2}, {0, 2}}, true);
  auto m = incidence_matrix(d);
  REQUIRE(m.rows.size() == 3);
  REQUIRE(m.cols.size() == 3);
  CHECK(m.at("0", "e0") == -1);
  CHECK(m.at("1", "e0") == 1);
  CHECK(m.at("2", "e0") == 0);
  for (std::size_t c = 0; c < 3; ++c) {
    int sum = 0;
    for (std::size_t r = 0; r < 3; ++r) sum += m.at(r, c);
    CHECK(sum == 0);
  }
  CHECK_THROWS_AS(incidence_matrix(cycle_graph(3)), InvalidInput);
  Graph loop({"a"}, {{"l", "a", "a"}}, true, false);
  CHECK_THROWS_AS(incidence_matrix(loop), Unsupported);
}

TEST_CASE("edge-induced and vertex-induced subgraphs") {
  Graph c4 = cycle_graph(4);
  std::vector<EdgeId> one{c4.edge(0).id};
  Graph sub = induced_by_edges(c4, one);
  CHECK(sub.order() == 2);
  CHECK(sub.size() == 1);
  CHECK(induced_by_edges(c4, one, VertexRetention::all_vertices).order() == 4);
  CHECK(is_subgraph_by_ids(sub, c4));
  std::vector<VertexId> three{"0", "1", "2"};
  Graph p = induced_by_vertices(c4, three);
  CHECK(p.size() == 2);
}

TEST_CASE("oriented and connected predicates") {
  CHECK(is_oriented(make_graph(3, {{0, 1}, {1, 2}}, true)));
  CHECK_FALSE(is_oriented(make_graph(2, {{0, 1}, {1, 0}}, true)));
  CHECK(is_connected(petersen_graph()));
  CHECK_FALSE(is_connected(empty_graph(2)));
  CHECK(connected_components(empty_graph(3)).size() == 3);
}

TEST_CASE("named graphs have their standard counts") {
  struct Row {
    const char* name;
    std::size_t n, m;
  };
  for (Row r : {Row{"petersen", 10, 15}, Row{"q3", 8, 12}, Row{"k33", 6, 9}, Row{"k5", 5, 10}, Row{"c5", 5, 5},
                Row{"p4", 4, 3}, Row{"e3", 3, 0}, Row{"star3", 4, 3}, Row{"k2x3", 5, 6}}) {
    auto g = named_graph(r.name);
    REQUIRE(g);
    CHECK(g->order() == r.n);
    CHECK(g->size() == r.m);
  }
  CHECK_FALSE(named_graph("nonsense"));
  CHECK_FALSE(named_graph("c2"));
  for (std::size_t v = 0; v < 10; ++v) CHECK(petersen_graph().degree(v) == 3);
}

TEST_CASE("JSON save/load is bit-exact for every named graph") {
  for (const auto& name : named_graph_examples()) {
    Graph g = *named_graph(name);
    std::string once = graph_to_json(g);
    Graph back = graph_from_json(once);
    CHECK(back == g);
    CHECK(graph_to_json(back) == once);
  }
}

TEST_CASE("JSON accepts numeric ids and rejects malformed input") {
  Graph g = graph_from_json(R"({"vertices":[1,2,10],"edges":[{"id":"a","tail":1,"head":10}]})");
  CHECK(g.vertex(2) == "10");
  CHECK(g.adjacent(0, 2));
  CHECK_THROWS_AS(graph_from_json("{"), InvalidInput);
  CHECK_THROWS_AS(graph_from_json(R"({"vertices":["a"],"edges":[{"id":"e","tail":"a","head":"q"}]})"), InvalidInput);
}

TEST_CASE("edge-list text round trip") {
  Graph g = graph_from_edge_list("# a comment\n0 1\n1 2\n7\n");
  CHECK(g.order() == 4);
  CHECK(g.size() == 2);
  std::string text = graph_to_edge_list(g);
  CHECK(graph_to_edge_list(graph_from_edge_list(text)) == text);
  Graph d = graph_from_edge_list("# directed\n# multigraph\na b\na b\nb b\n");
  CHECK(d.directed());
  CHECK_FALSE(d.simple());
  CHECK(d.size() == 3);
  std::string dtext = graph_to_edge_list(d);
  CHECK(graph_to_edge_list(graph_from_edge_list(dtext)) == dtext);
}

TEST_CASE("random graphs survive both formats") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 60; ++t) {
    bool directed = t % 2;
    Graph g = random_graph(rng, 1 + t % 9, 0.4, directed);
    CHECK(graph_from_json(graph_to_json(g)) == g);
    std::string text = graph_to_edge_list(g);
    Graph back = graph_from_edge_list(text);
    CHECK(graph_to_edge_list(back) == text);
    CHECK(back.order() == g.order());
    CHECK(back.size() == g.size());
  }
}

TEST_CASE("DOT export names every vertex") {
  std::string dot = graph_to_dot(cycle_graph(3), "C3");
  CHECK(dot.find("graph \"C3\"") != std::string::npos);
  CHECK(dot.find("--") != std::string::npos);
  std::string ddot = graph_to_dot(make_graph(2, {{0, 1}}, true));
  CHECK(ddot.find("digraph") != std::string::npos);
  CHECK(ddot.find("->") != std::string::npos);
}

TEST_CASE("simple-graph oracle agrees with the library adjacency") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 30; ++t) {
    Graph g = random_graph(rng, 6, 0.5, false);
    auto s = oracle::simple_of(g);
    CHECK(s.edges == g.size());
    for (std::size_t a = 0; a < 6; ++a)
      for (std::size_t b = 0; b < 6; ++b) CHECK(s.adj[a][b] == g.adjacent(a, b));
  }
}
