#include <catch_amalgamated.hpp>

#include "gcat/error.hpp"
#include "gcat/canonical.hpp"
#include "gcat/catalog.hpp"
#include "gcat/contraction.hpp"
#include "gcat/morphism.hpp"
#include "gcat/named_graphs.hpp"
#include "oracles.hpp"

using namespace gcat;

TEST_CASE("partitions are validated") {
  Graph p4 = path_graph(4);
  CHECK_NOTHROW(Partition(p4, {{"0", "1"}, {"2", "3"}}));
  CHECK_THROWS_AS(Partition(p4, {{"0", "1"}, {"1", "2", "3"}}), InvalidInput);
  CHECK_THROWS_AS(Partition(p4, {{"0", "1"}, {"2"}}), InvalidInput);
  CHECK_THROWS_AS(Partition(p4, {{"0", "1"}, {"2", "3", "9"}}), InvalidInput);
  try {
    Partition(p4, {{"0", "2"}, {"1", "3"}});
    FAIL("disconnected block accepted");
  } catch (const InvalidPartition& e) {
    CHECK(e.block() == 0);
  }
}

TEST_CASE("contracting a path pairwise gives an edge") {
  Partition p(path_graph(4), {{"0", "1"}, {"2", "3"}});
  Graph c = contract(p);
  CHECK(c.order() == 2);
  CHECK(c.size() == 1);
  CHECK(c.vertex(0) == "0+1");
  CHECK(p.block_label(1) == "2+3");
  Graph f = contract_faithful(p);
  REQUIRE(f.size() == 1);
  CHECK(f.edge(0).id == path_graph(4).edge(1).id);
}

TEST_CASE("faithful contraction keeps parallel edges") {
  Partition p(cycle_graph(4), {{"0", "1"}, {"2", "3"}});
  CHECK(contract(p).size() == 1);
  Graph f = contract_faithful(p);
  CHECK(f.size() == 2);
  CHECK_FALSE(f.simple());
}

TEST_CASE("the contraction map is an ega morphism onto the quotient") {
  for (const auto& g : catalog(4)) {
    // every connected partition into two blocks, plus the discrete one
    std::size_t n = g.order();
    for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
      std::vector<std::vector<std::size_t>> blocks(2);
      for (std::size_t v = 0; v < n; ++v) blocks[mask >> v & 1].push_back(v);
      auto s = oracle::simple_of(g);
      if (!oracle::connected_set(s, blocks[0]) || !oracle::connected_set(s, blocks[1])) continue;
      Partition p = Partition::from_indices(g, blocks);
      Graph c = contract(p);
      VertexMap f = contraction_map(p);
      CHECK(check_morphism(f, g, c, MorphismKind::ega).ok);
      // surjective on vertices and on edges
      std::vector<bool> hit(c.order(), false);
      for (auto x : f) hit[x] = true;
      CHECK(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
      std::size_t crossing = 0;
      for (const auto& e : g.edges()) crossing += p.block_of(e.tail) != p.block_of(e.head);
      CHECK(contract_faithful(p).size() == crossing);
      CHECK(c.size() == (crossing > 0 ? 1u : 0u));
    }
    std::vector<std::vector<std::size_t>> singles;
    for (std::size_t v = 0; v < n; ++v) singles.push_back({v});
    CHECK(are_isomorphic(contract(Partition::from_indices(g, singles)), g));
  }
}

TEST_CASE("contracting a connected subgraph") {
  Graph c5 = cycle_graph(5);
  Graph r = induced_by_vertices(c5, std::vector<VertexId>{"0", "1"});
  CHECK(are_isomorphic(contract_subgraph(c5, r), cycle_graph(4)));
  Graph bad = induced_by_vertices(c5, std::vector<VertexId>{"0", "2"});
  CHECK_THROWS_AS(contract_subgraph(c5, bad), InvalidInput);
}

TEST_CASE("stirling numbers") {
  CHECK(stirling2(4, 2) == 7);
  CHECK(stirling2(5, 3) == 25);
  CHECK(stirling2(10, 6) == 22827);
  CHECK(stirling2(3, 0) == 0);
  CHECK(stirling2(0, 0) == 1);
}

TEST_CASE("contraction search") {
  CHECK(exists_contraction(cycle_graph(6), cycle_graph(3)));
  CHECK_FALSE(exists_contraction(path_graph(4), cycle_graph(3)));
  CHECK(exists_contraction(cube_graph(), complete_graph(4)));
  CHECK_THROWS_AS(exists_contraction(petersen_graph(), complete_bipartite(3, 3), 100), ResourceLimit);
}

TEST_CASE("the Petersen graph contracts onto K_{3,3}") {
  Graph pg = petersen_graph();
  Partition p(pg, {{"0", "1", "2"}, {"3", "4"}, {"5", "7"}, {"6"}, {"8"}, {"9"}});
  CHECK(are_isomorphic(contract(p), complete_bipartite(3, 3)));
  CHECK(oracle::isomorphic(oracle::simple_of(contract(p)), oracle::simple_of(complete_bipartite(3, 3))));
  auto found = find_contraction(pg, complete_bipartite(3, 3));
  REQUIRE(found);
  CHECK(are_isomorphic(contract(*found), complete_bipartite(3, 3)));
  CHECK_FALSE(exists_contraction(pg, complete_graph(6)));
}

TEST_CASE("minor search agrees with the labelling oracle") {
  auto patterns = catalog(3);
  auto hosts = catalog(5);
  for (const auto& h : patterns)
    for (const auto& g : hosts) {
      bool expect = oracle::is_minor(oracle::simple_of(h), oracle::simple_of(g));
      auto w = find_minor(h, g);
      CHECK(w.has_value() == expect);
      if (w) CHECK(verify_minor_witness(*w));
    }
}

TEST_CASE("topological minor search agrees with the path oracle") {
  auto patterns = catalog(4);
  auto hosts = catalog(5);
  for (const auto& h : patterns)
    for (const auto& g : hosts) {
      bool expect = oracle::is_topological_minor(oracle::simple_of(h), oracle::simple_of(g));
      auto w = find_topological_minor(h, g);
      CHECK(w.has_value() == expect);
      if (w) CHECK(verify_subdivision_witness(*w));
    }
}

TEST_CASE("Petersen minors") {
  Graph pg = petersen_graph();
  auto w = find_minor(complete_bipartite(3, 3), pg);
  REQUIRE(w);
  CHECK(verify_minor_witness(*w));
  CHECK(is_minor(complete_graph(5), pg));
  CHECK(is_topological_minor(complete_bipartite(3, 3), pg));
  CHECK_FALSE(is_topological_minor(complete_graph(5), pg));
  CHECK_FALSE(is_planar(pg));
  // a tampered witness is rejected
  MinorWitness bad = *w;
  std::swap(bad.branch_sets[0], bad.branch_sets[1]);
  bad.branch_sets[0].clear();
  CHECK_FALSE(verify_minor_witness(bad));
}

TEST_CASE("planarity counts over the catalog") {
  std::size_t five = 0, six = 0;
  for (const auto& g : catalog_of_order(5)) five += is_planar(g);
  for (const auto& g : catalog_of_order(6)) six += is_planar(g);
  CHECK(five == 33);
  CHECK(six == 142);
  CHECK(is_planar(cube_graph()));
}

TEST_CASE("budgets refuse before searching") {
  CHECK_THROWS_AS(is_minor(complete_graph(4), petersen_graph(), 10), ResourceLimit);
  try {
    is_minor(complete_graph(4), petersen_graph(), 10);
  } catch (const ResourceLimit& e) {
    CHECK(e.required() > e.budget());
  }
  CHECK_THROWS_AS(is_topological_minor(complete_graph(4), petersen_graph(), 10), ResourceLimit);
}

TEST_CASE("minor audit on small graphs") {
  auto pool = catalog(3);
  auto report = minor_order_audit(pool);
  CHECK(report.passed());
  for (const auto& t : report.properties) CHECK(t.violations == 0);
  std::string text = minor_audit_to_json(report);
  CHECK(text.find("transitivity") != std::string::npos);
}

TEST_CASE("low degree patterns: minor iff topological minor") {
  auto patterns = catalog(4);
  auto hosts = catalog(5);
  auto r = minor_equivalence_low_degree(patterns, hosts);
  CHECK(r.passed());
  CHECK(r.pairs_checked > 0);
}

TEST_CASE("partition and witness JSON") {
  Graph c4 = cycle_graph(4);
  Partition p = partition_from_json(R"({"blocks":[["0","1"],["2","3"]]})", c4);
  CHECK(partition_from_json(partition_to_json(p), c4).blocks() == p.blocks());
  CHECK_THROWS_AS(partition_from_json(R"({"blocks":[["0","2"],["1","3"]]})", c4), InvalidPartition);
  auto w = find_minor(cycle_graph(3), c4);
  REQUIRE(w);
  CHECK(minor_witness_to_json(*w).find("branch_sets") != std::string::npos);
}
