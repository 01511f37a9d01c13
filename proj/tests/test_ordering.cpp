#include <random>

#include "brute.hpp"
#include "doctest.h"
#include "locind/errors.hpp"
#include "locind/generators.hpp"
#include "locind/ordering.hpp"

using namespace locind;

TEST_CASE("upward and downward edges") {
  auto g = Hypergraph::graph(3, {{0, 1}, {1, 2}, {0, 2}});
  VertexOrder order(g, {0, 1, 2});
  CHECK(order.up(0) == EdgeSet{0, 2});
  CHECK(order.down(0).empty());
  CHECK(order.up(1) == EdgeSet{1});
  CHECK(order.down(1) == EdgeSet{0});
  CHECK(order.down(2) == EdgeSet{1, 2});
  CHECK(order.width() == 2);
  for (VertexId v = 0; v < 3; ++v) {
    CHECK((order.up(v) | order.down(v)) == g.incident_set(v));
    CHECK_FALSE(order.up(v).intersects(order.down(v)));
  }

  Hypergraph h(4, {{0, 1, 2}, {1, 2, 3}});
  VertexOrder ho(h, {0, 1, 2, 3});
  CHECK(ho.up(1) == EdgeSet{0, 1});
  CHECK(ho.down(2) == EdgeSet{0});
  CHECK(ho.down(3) == EdgeSet{1});
  for (EdgeId e = 0; e < 2; ++e) {
    int downs = 0;
    for (VertexId v = 0; v < 4; ++v) downs += ho.down(v).contains(e);
    CHECK(downs == 1);
  }
  CHECK_THROWS_AS(VertexOrder(g, {0, 0, 1}), InvalidInput);
  CHECK_THROWS_AS(VertexOrder(g, {0, 1}), InvalidInput);
}

TEST_CASE("degeneracy examples") {
  auto path = Hypergraph::graph(3, {{0, 1}, {1, 2}});
  CHECK(degeneracy_order(path).width() == 1);
  std::vector<std::pair<VertexId, VertexId>> k4;
  for (VertexId a = 0; a < 4; ++a)
    for (VertexId b = a + 1; b < 4; ++b) k4.push_back({a, b});
  CHECK(degeneracy_order(Hypergraph::graph(4, k4)).width() == 3);
  // Both edges contain 1 and 2; whichever comes first is upward in both.
  Hypergraph h(4, {{0, 1, 2}, {1, 2, 3}});
  CHECK(brute::min_width(h) == 2);
  CHECK(degeneracy_order(h).width() == 2);
  Hypergraph disjointish(5, {{0, 1, 2}, {2, 3, 4}});
  CHECK(brute::min_width(disjointish) == 1);
  CHECK(degeneracy_order(disjointish).width() == 1);
}

TEST_CASE("width examples") {
  auto star = Hypergraph::graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  std::vector<VertexId> center_last{1, 2, 3, 4, 0}, center_first{0, 1, 2, 3, 4};
  CHECK(width_of(star, center_last) == 1);
  CHECK(width_of(star, center_first) == 4);
  auto c4 = Hypergraph::graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(brute::min_width(c4) == 2);
  CHECK(degeneracy_order(c4).width() == 2);
}

TEST_CASE("degeneracy width is minimal over all orders") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 60; ++round) {
    Hypergraph h = round % 2 ? random_gnp(7, 0.45, rng) : random_hypergraph(7, 6, 3, rng);
    auto order = degeneracy_order(h);
    CHECK(order.width() == brute::width(h, order.sequence()));
    CHECK(order.width() == brute::min_width(h));
  }
}

TEST_CASE("forest decomposition") {
  auto tree = Hypergraph::graph(4, {{0, 1}, {1, 2}, {1, 3}});
  auto to = degeneracy_order(tree);
  auto tc = forest_decompose(tree, to);
  REQUIRE(tc.size() == 1);
  CHECK(tc[0] == tree.all_edges());

  auto k3 = Hypergraph::graph(3, {{0, 1}, {1, 2}, {0, 2}});
  auto classes = forest_decompose(k3, VertexOrder(k3, {0, 1, 2}));
  REQUIRE(classes.size() == 2);
  CHECK(classes[0] == EdgeSet{0, 1});
  CHECK(classes[1] == EdgeSet{2});

  auto c4 = Hypergraph::graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  auto co = degeneracy_order(c4);
  auto cc = forest_decompose(c4, co);
  CHECK(cc.size() == 2);
  for (const auto& c : cc) CHECK(class_width(co, c) <= 1);

  Hypergraph h(3, {{0, 1, 2}});
  CHECK_THROWS_AS(forest_decompose(h, degeneracy_order(h)), UnsupportedInstance);
}

TEST_CASE("random forest decompositions partition the edges into width-1 classes") {
  std::mt19937_64 rng(9);
  for (int round = 0; round < 100; ++round) {
    auto g = random_degenerate(10, 1 + round % 3, rng);
    auto order = degeneracy_order(g);
    auto classes = forest_decompose(g, order);
    CHECK(classes.size() == order.width());
    EdgeSet all;
    for (const auto& c : classes) {
      CHECK_FALSE(all.intersects(c));
      all |= c;
      CHECK(class_width(order, c) <= 1);
    }
    CHECK(all == g.all_edges());
  }
}

TEST_CASE("width-1 decomposition") {
  Hypergraph one(3, {{0, 1, 2}});
  CHECK(width1_decompose(one, degeneracy_order(one)).size() == 1);

  Hypergraph two(4, {{0, 1, 2}, {0, 1, 3}});
  VertexOrder order(two, {0, 1, 2, 3});
  auto classes = width1_decompose(two, order);
  CHECK(classes.size() == 2);

  std::mt19937_64 rng(13);
  for (int round = 0; round < 100; ++round) {
    Hypergraph h = round % 3 == 0 ? random_gnp(8, 0.4, rng) : random_hypergraph(8, 9, 4, rng);
    auto o = degeneracy_order(h);
    auto cs = width1_decompose(h, o);
    std::size_t gamma = std::max<std::size_t>(o.width(), 1);
    std::size_t delta = std::max<std::size_t>(h.rank(), 2);
    CHECK(cs.size() <= (delta - 1) * (gamma - 1) + 1);
    if (h.is_graph()) CHECK(cs.size() <= gamma);
    EdgeSet all;
    for (const auto& c : cs) {
      CHECK_FALSE(all.intersects(c));
      all |= c;
      CHECK(class_width(o, c) <= 1);
    }
    CHECK(all == h.all_edges());
  }
}
