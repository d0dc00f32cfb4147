#include <catch_amalgamated.hpp>

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "gcat/error.hpp"
#include "gcat/orders.hpp"

using namespace gcat;

namespace {

std::vector<long long> range(long long a, long long b) {
  std::vector<long long> v(b - a + 1);
  std::iota(v.begin(), v.end(), a);
  return v;
}

OrderRelation from_mask(std::size_t n, std::uint32_t mask) {
  std::vector<VertexId> carrier;
  for (std::size_t i = 0; i < n; ++i) carrier.push_back(std::to_string(i));
  PairSet pairs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (mask >> (a * n + b) & 1) pairs.insert({carrier[a], carrier[b]});
  return OrderRelation(carrier, pairs);
}

// Strict part has a cycle iff some element reaches itself; Floyd-Warshall.
bool oracle_cyclic(const OrderRelation& r) {
  std::size_t n = r.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) reach[a][b] = r.strictly(a, b);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) reach[a][b] = reach[a][b] || (reach[a][k] && reach[k][b]);
  for (std::size_t a = 0; a < n; ++a)
    if (reach[a][a]) return true;
  return false;
}

}  // namespace

TEST_CASE("classification examples") {
  auto c = classify_relation(divisibility_order(range(2, 12)));
  CHECK(c.partial_order);
  CHECK(c.well_founded);
  CHECK(c.label == OrderClass::well_founded_order);

  OrderRelation two({"a", "b"}, PairSet{{"a", "a"}, {"b", "b"}, {"a", "b"}, {"b", "a"}});
  auto full = classify_relation(two);
  CHECK(full.quasi_order);
  CHECK_FALSE(full.partial_order);
  CHECK_FALSE(full.well_founded);
  CHECK(full.label == OrderClass::quasi_order);

  OrderRelation cyc({"a", "b"}, PairSet{{"a", "b"}, {"b", "a"}});
  CHECK_FALSE(classify_relation(cyc).well_founded);
  CHECK(classify_relation(cyc).label == OrderClass::none);
  CHECK_THROWS_AS(OrderRelation({"a"}, PairSet{{"a", "z"}}), InvalidInput);
}

TEST_CASE("minimal elements") {
  auto mins = minimal_elements(divisibility_order(range(2, 30)));
  CHECK(mins == std::vector<VertexId>{"2", "3", "5", "7", "11", "13", "17", "19", "23", "29"});
  OrderRelation anti({"x", "y", "z"}, PairSet{{"x", "x"}, {"y", "y"}, {"z", "z"}});
  CHECK(minimal_elements(anti).size() == 3);
  OrderRelation total({"1", "2", "3"}, PairSet{{"1", "1"}, {"2", "2"}, {"3", "3"}, {"1", "2"}, {"2", "3"}, {"1", "3"}});
  CHECK(minimal_elements(total) == std::vector<VertexId>{"1"});
  CHECK_THROWS_AS(minimal_elements(OrderRelation({"a", "b"}, PairSet{{"a", "b"}})), InvalidInput);
}

TEST_CASE("fold sees exactly the strictly smaller elements") {
  auto r = divisibility_order(range(2, 12));
  auto out = induction_fold<std::size_t>(r, [](const VertexId&, const FoldContext<std::size_t>& ctx) {
    return ctx.size();
  });
  CHECK(out.results.at("12") == 4);
  CHECK(out.results.at("8") == 2);
  CHECK(out.results.at("7") == 0);
  std::vector<VertexId> seen;
  induction_fold<int>(r, [&](const VertexId& x, const FoldContext<int>& ctx) {
    if (x == "12")
      for (const auto& [id, v] : ctx) seen.push_back(id);
    return 0;
  });
  CHECK(seen == std::vector<VertexId>{"2", "3", "4", "6"});
  // schedule is a linear extension
  std::map<VertexId, std::size_t> pos;
  for (std::size_t i = 0; i < out.schedule.size(); ++i) pos[out.schedule[i]] = i;
  for (const auto& [a, b] : r.pairs())
    if (a != b) CHECK(pos[a] < pos[b]);
}

TEST_CASE("fold over an antichain passes empty contexts") {
  OrderRelation anti({"p", "q", "r"}, PairSet{});
  induction_fold<int>(anti, [](const VertexId&, const FoldContext<int>& ctx) {
    CHECK(ctx.empty());
    return 1;
  });
}

TEST_CASE("fold refuses a strict cycle and names it") {
  OrderRelation r({"a", "b", "c"}, PairSet{{"a", "b"}, {"b", "c"}, {"c", "a"}});
  try {
    induction_fold<int>(r, [](const VertexId&, const FoldContext<int>&) { return 0; });
    FAIL("fold accepted a cycle");
  } catch (const NotWellFounded& e) {
    auto cyc = e.cycle();
    REQUIRE(cyc.size() == 3);
    for (std::size_t i = 0; i < cyc.size(); ++i)
      CHECK(r.strictly(r.index(cyc[i]), r.index(cyc[(i + 1) % cyc.size()])));
  }
}

TEST_CASE("fold succeeds iff the strict part is acyclic, every relation on 3 elements") {
  for (std::uint32_t mask = 0; mask < (1u << 9); ++mask) {
    auto r = from_mask(3, mask);
    bool cyclic = oracle_cyclic(r);
    CHECK(classify_relation(r).well_founded == !cyclic);
    bool ok = true;
    std::vector<VertexId> ready;
    try {
      induction_fold<int>(r, [&](const VertexId& x, const FoldContext<int>& ctx) {
        if (ctx.empty()) ready.push_back(x);
        return 0;
      });
    } catch (const NotWellFounded& e) {
      ok = false;
      const auto& cyc = e.cycle();
      CHECK(cyc.size() >= 2);
      for (std::size_t i = 0; i < cyc.size(); ++i)
        CHECK(r.strictly(r.index(cyc[i]), r.index(cyc[(i + 1) % cyc.size()])));
    }
    CHECK(ok == !cyclic);
    if (ok && classify_relation(r).quasi_order) {
      std::sort(ready.begin(), ready.end(), NaturalLess{});
      CHECK(minimal_elements(r) == ready);
    }
  }
}

TEST_CASE("antichains and chains against subset enumeration") {
  auto r = divisibility_order(range(2, 12));
  std::size_t n = r.size(), best_anti = 0, best_chain = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool anti = true, chain = true;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if ((s >> a & 1) && (s >> b & 1)) {
          bool comparable = r.related(a, b) || r.related(b, a);
          anti = anti && !comparable;
          chain = chain && comparable;
        }
    std::size_t k = std::popcount(s);
    if (anti) best_anti = std::max(best_anti, k);
    if (chain) best_chain = std::max(best_chain, k);
  }
  auto rep = antichains_and_chains(r);
  CHECK(rep.max_antichain == best_anti);
  CHECK(rep.max_antichain == 6);
  CHECK(rep.longest_chain == best_chain);
  CHECK(rep.longest_chain == 3);
  CHECK(rep.antichain.size() == rep.max_antichain);
  CHECK(rep.chain.size() == rep.longest_chain);
  CHECK(rep.wqo_conditions_hold);

  OrderRelation total({"1", "2", "3"}, PairSet{{"1", "2"}, {"2", "3"}, {"1", "3"}});
  CHECK(antichains_and_chains(total).max_antichain == 1);
  CHECK(antichains_and_chains(total).longest_chain == 3);
  OrderRelation anti({"1", "2", "3"}, PairSet{});
  CHECK(antichains_and_chains(anti).max_antichain == 3);
  CHECK(antichains_and_chains(anti).longest_chain == 1);
  CHECK_THROWS_AS(antichains_and_chains(r, 16), ResourceLimit);
}

TEST_CASE("orders as oriented graphs") {
  Graph g = order_to_oriented_graph(divisibility_order({2, 3, 4, 6}));
  CHECK(g.directed());
  CHECK(g.size() == 3);
  CHECK(g.adjacent(g.vertex_index("2"), g.vertex_index("4")));
  CHECK(g.adjacent(g.vertex_index("2"), g.vertex_index("6")));
  CHECK(g.adjacent(g.vertex_index("3"), g.vertex_index("6")));
  CHECK(is_oriented(g));
  OrderRelation chain({"1", "2", "3"}, PairSet{{"1", "2"}, {"2", "3"}, {"1", "3"}});
  CHECK(order_to_oriented_graph(chain).size() == 3);
  CHECK(order_to_oriented_graph(OrderRelation({"a", "b"}, PairSet{})).size() == 0);
  CHECK_THROWS_AS(order_to_oriented_graph(OrderRelation({"a", "b"}, PairSet{{"a", "b"}, {"b", "a"}})), InvalidInput);
  for (std::uint32_t mask = 0; mask < (1u << 9); ++mask) {
    auto r = from_mask(3, mask);
    if (r.axioms().antisymmetric) CHECK(is_oriented(order_to_oriented_graph(r)));
  }
}

TEST_CASE("order JSON round trip") {
  auto r = divisibility_order({2, 3, 4, 6});
  std::string text = order_to_json(r);
  auto back = order_from_json(text);
  CHECK(back.pairs() == r.pairs());
  CHECK(order_to_json(back) == text);
  CHECK(classification_to_json(classify_relation(r)).find("well_founded") != std::string::npos);
  CHECK_THROWS_AS(order_from_json("{}"), InvalidInput);
}
