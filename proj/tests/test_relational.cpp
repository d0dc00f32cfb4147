#include <catch_amalgamated.hpp>

#include "gcat/error.hpp"
#include "gcat/graph_io.hpp"
#include "gcat/named_graphs.hpp"
#include "gcat/relational.hpp"

using namespace gcat;

TEST_CASE("construction checks arity and carrier membership") {
  CHECK_THROWS_AS(RelationalSystem({"a", "b"}, {Relation{"R", 2, {{"a"}}}}), InvalidInput);
  CHECK_THROWS_AS(RelationalSystem({"a", "b"}, {Relation{"R", 2, {{"a", "z"}}}}), InvalidInput);
  CHECK_NOTHROW(RelationalSystem({"a", "b"}, {Relation{"R", 2, {{"a", "b"}}}}));
}

TEST_CASE("sm closure identifies tuples up to coordinate permutation") {
  TupleSet r{{"b", "a"}, {"a", "b"}, {"c", "a"}};
  auto s = sm_closure(r, 2);
  CHECK(s == TupleSet{{"a", "b"}, {"a", "c"}});
  TupleSet triples{{"c", "b", "a"}, {"a", "c", "b"}, {"a", "a", "b"}};
  CHECK(sm_closure(triples, 3).size() == 2);
  CHECK(sm_closure({}, 2).empty());
  CHECK_THROWS_AS(sm_closure(TupleSet{{"a"}}, 2), InvalidInput);
}

TEST_CASE("type symbol counts extensionally distinct relations per arity") {
  Relation e{"E", 2, {{"a", "b"}}};
  Relation f{"F", 2, {{"a", "b"}}};  // same extension as E
  Relation g{"G", 2, {{"b", "a"}}};
  Relation t{"T", 3, {{"a", "b", "a"}}};
  RelationalSystem rs({"a", "b"}, {e, f, g, t});
  auto ts = type_symbol(rs);
  REQUIRE(ts.size() == 2);
  CHECK(ts[0] == std::pair<std::size_t, std::size_t>{2, 2});
  CHECK(ts[1] == std::pair<std::size_t, std::size_t>{3, 1});
  CHECK(arity(rs) == 3);
  CHECK_THROWS_AS(arity(RelationalSystem({"a"}, {})), InvalidInput);
}

TEST_CASE("a simple graph has type (2^1)") {
  auto rs = relational_system_from_graph(petersen_graph());
  auto ts = type_symbol(rs);
  REQUIRE(ts.size() == 1);
  CHECK(ts[0] == std::pair<std::size_t, std::size_t>{2, 1});
  CHECK(rs.relations()[0].tuples.size() == 30);
  CHECK_THROWS_AS(relational_system_from_graph(Graph({"a", "b"}, {{"e", "a", "b"}, {"f", "a", "b"}}, false, false)),
                  Unsupported);
}

TEST_CASE("graph to relational system and back") {
  for (const auto& name : named_graph_examples()) {
    Graph g = *named_graph(name);
    Graph back = graph_from_relational_system(relational_system_from_graph(g), false);
    CHECK(back.vertices() == g.vertices());
    CHECK(back.size() == g.size());
    for (std::size_t a = 0; a < g.order(); ++a)
      for (std::size_t b = 0; b < g.order(); ++b) CHECK(back.adjacent(a, b) == g.adjacent(a, b));
  }
  Graph d = make_graph(3, {{0, 1}, {1, 2}}, true);
  Graph dback = graph_from_relational_system(relational_system_from_graph(d));
  CHECK(dback.directed());
  CHECK(dback.size() == 2);
}

TEST_CASE("hypergraph from mixed tuples") {
  auto rs = hypergraph_from_tuples({"a", "b", "c"}, {{"a", "b"}, {"a", "b", "c"}, {"b", "c"}});
  auto ts = type_symbol(rs);
  REQUIRE(ts.size() == 2);
  CHECK(arity(rs) == 3);
}

TEST_CASE("graph system members live on the carrier") {
  CHECK_NOTHROW(GraphSystem({"0", "1", "2"}, {path_graph(3), empty_graph(2)}));
  CHECK_THROWS_AS(GraphSystem({"0", "1"}, {path_graph(3)}), InvalidInput);
}

TEST_CASE("relational system JSON round trip") {
  RelationalSystem rs({"x", "y"}, {Relation{"R", 2, {{"x", "y"}}}, Relation{"U", 1, {{"x"}}}});
  std::string text = relational_system_to_json(rs);
  auto back = relational_system_from_json(text);
  CHECK(relational_system_to_json(back) == text);
  CHECK_THROWS_AS(relational_system_from_json("[]"), InvalidInput);
}
