#include <random>

#include "brute.hpp"
#include "doctest.h"
#include "locind/errors.hpp"
#include "locind/exact.hpp"
#include "locind/generators.hpp"
#include "locind/reductions.hpp"

using namespace locind;

namespace {

Instance uniform(const Hypergraph& h, std::size_t b) {
  std::vector<LocalSystem> systems;
  for (VertexId v = 0; v < h.num_vertices(); ++v)
    systems.push_back(b ? LocalSystem::cardinality(h.incident_set(v), b)
                        : LocalSystem::free(h.incident_set(v)));
  return Instance(h, systems);
}

}  // namespace

TEST_CASE("exact examples") {
  auto p3 = Hypergraph::graph(3, {{0, 1}, {1, 2}});
  auto p4 = Hypergraph::graph(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(max_independent(uniform(p3, 1)).opt_size == 1);
  CHECK(max_independent(uniform(p4, 1)).opt_size == 2);
  auto k3 = Hypergraph::graph(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(max_independent(uniform(k3, 0)).opt_size == 3);
  Cnf contradiction{1, {{1}, {-1}}};
  CHECK(max_independent(maxsat_to_instance(contradiction)).opt_size == 1);
}

TEST_CASE("exact solver matches brute force") {
  std::mt19937_64 rng(41);
  std::vector<SystemKind> kinds{SystemKind::Free, SystemKind::Cardinality, SystemKind::Partition,
                                SystemKind::Timed, SystemKind::Sign, SystemKind::Explicit};
  for (int round = 0; round < 120; ++round) {
    Hypergraph h = round % 3 == 0 ? random_hypergraph(6, 8, 3, rng) : random_gnp(7, 0.45, rng);
    if (h.num_edges() > 14) continue;
    Instance inst(h, random_systems(h, kinds, rng));
    auto r = max_independent(inst);
    CHECK(r.opt_size == brute::opt(inst));
    CHECK(r.witness.size() == r.opt_size);
    CHECK(brute::independent(inst, r.witness));
    auto f = brute::subset(h.all_edges().to_vector(), rng());
    CHECK(max_independent(inst, f).opt_size == brute::opt(inst, f));
  }
}

TEST_CASE("exact cap") {
  auto inst = uniform(Hypergraph::graph(2, std::vector<std::pair<VertexId, VertexId>>(5, {0, 1})), 0);
  CHECK_THROWS_AS(max_independent(inst, inst.structure().all_edges(), 4), CapExceeded);
  CHECK(max_independent(inst, inst.structure().all_edges(), 5).opt_size == 5);
}

TEST_CASE("verify ratio on a tree has an empty residual") {
  std::mt19937_64 rng(43);
  auto inst = uniform(random_tree(9, rng), 1);
  auto t = solve(inst, Algorithm::OrderedApprox);
  auto report = verify_ratio(t, inst);
  CHECK(report.residual_opt == 0);
  REQUIRE(report.lemma_bound);
  CHECK(*report.lemma_bound == Rational(1));
  CHECK(report.pass());
}

TEST_CASE("verify ratio on the star fixture") {
  auto fx = lowerbound_fixture(Fixture::StarFixedOrder, {Rational(2), 6});
  auto t = solve(fx.instance, fx.algorithm, fx.order);
  auto report = verify_ratio(t, fx.instance, 30);
  REQUIRE(report.ratio);
  CHECK(*report.ratio == Rational(2 + 6 - 2));
  CHECK(*report.ratio == fx.expected_ratio);
  CHECK(report.pass());
}

TEST_CASE("residual bound never exceeds the fixed-order bound") {
  std::mt19937_64 rng(47);
  std::vector<SystemKind> kinds{SystemKind::Cardinality, SystemKind::Sign, SystemKind::Timed};
  for (int round = 0; round < 60; ++round) {
    auto g = random_gnp(7, 0.5, rng);
    if (g.num_edges() > 14 || g.num_edges() == 0) continue;
    Instance inst(g, random_systems(g, kinds, rng));
    auto t = solve(inst, Algorithm::FixedOrder);
    auto report = verify_ratio(t, inst);
    CHECK(report.residual_opt == brute::opt(inst, t.residual));
    REQUIRE(report.lemma_bound);
    CHECK(*report.lemma_bound <= t.bound.value);
    CHECK(report.opt_size == brute::opt(inst));
    CHECK(report.pass());
  }
}

TEST_CASE("global k-system parameter") {
  auto single = uniform(Hypergraph::graph(2, {{0, 1}}), 1);
  CHECK(global_ksystem_param(single) == Rational(1));
  std::mt19937_64 rng(53);
  for (int round = 0; round < 30; ++round) {
    auto g = random_gnp(6, 0.5, rng);
    if (g.num_edges() > 10) continue;
    std::vector<SystemKind> matroids{SystemKind::Free, SystemKind::Cardinality, SystemKind::Partition};
    Instance inst(g, random_systems(g, matroids, rng));
    auto k = global_ksystem_param(inst);
    CHECK(k == brute::kparam(inst));
    CHECK(k <= Rational(2));
  }
  auto big = uniform(Hypergraph::graph(2, std::vector<std::pair<VertexId, VertexId>>(13, {0, 1})), 0);
  CHECK_THROWS_AS(global_ksystem_param(big), CapExceeded);
}

TEST_CASE("greedy per-vertex ratio is finite") {
  std::mt19937_64 rng(59);
  auto g = random_gnp(6, 0.6, rng);
  auto inst = uniform(g, 2);
  auto t = solve(inst, Algorithm::Greedy);
  auto r = greedy_lemma2_ratio(t, inst, 22);
  CHECK(r >= Rational(1));
  CHECK(r <= inst.alpha() + Rational(static_cast<std::int64_t>(g.num_vertices())));
}
