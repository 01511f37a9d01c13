#include <random>

#include "brute.hpp"
#include "doctest.h"
#include "locind/errors.hpp"
#include "locind/generators.hpp"
#include "locind/oracle.hpp"
#include "locind/reductions.hpp"

using namespace locind;

TEST_CASE("exhaustive oracle examples") {
  auto card = LocalSystem::cardinality(EdgeSet{1, 2, 3}, 2);
  CHECK(query(LocalOracle::exhaustive(), card, EdgeSet{1, 2, 3}) == EdgeSet{1, 2});
  auto sign = LocalSystem::sign(EdgeSet{1}, EdgeSet{2, 3});
  CHECK(query(LocalOracle::exhaustive(), sign, EdgeSet{1, 2, 3}) == EdgeSet{2, 3});
  CHECK(query(LocalOracle::exhaustive(), sign, EdgeSet{}) == EdgeSet{});
  CHECK_THROWS_AS(query(LocalOracle::exhaustive(), sign, EdgeSet{9}), InvalidInput);
}

TEST_CASE("exhaustive answers are maximum with the least tie") {
  std::mt19937_64 rng(3);
  std::vector<SystemKind> kinds{SystemKind::Cardinality, SystemKind::Partition, SystemKind::Timed,
                                SystemKind::Sign, SystemKind::Explicit};
  for (int round = 0; round < 20; ++round) {
    auto h = random_gnp(6, 0.8, rng);
    for (const auto& s : random_systems(h, kinds, rng)) {
      auto ground = s.ground().to_vector();
      auto f = brute::subset(ground, rng());
      auto a = exhaustive_local_max(s, f);
      std::size_t best = 0;
      EdgeSet least;
      auto items = f.to_vector();
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << items.size()); ++m) {
        auto j = brute::subset(items, m);
        if (!brute::member(s, j)) continue;
        if (j.size() > best || (j.size() == best && j < least)) {
          best = j.size();
          least = j;
        }
      }
      CHECK(a.size() == best);
      CHECK(a == least);
    }
  }
}

TEST_CASE("scripted star oracle answers the adversarial edge") {
  auto fx = lowerbound_fixture(Fixture::StarFixedOrder, {Rational(1), 6});
  const auto& inst = fx.instance;
  const auto& h = inst.structure();
  EdgeId st = 0;
  for (EdgeId e = 0; e < h.num_edges(); ++e)
    if (h.contains_vertex(e, 0) && h.contains_vertex(e, 1)) st = e;
  OracleSession session(inst);
  CHECK(session.query(0, h.incident_set(0)) == EdgeSet{st});
  CHECK(session.log().size() == 1);
  session.query(0, h.incident_set(0));
  CHECK(session.log().size() == 1);
}

TEST_CASE("validation of built-in strategies") {
  auto sign = LocalSystem::sign(EdgeSet{0, 1, 2}, EdgeSet{3, 4});
  auto exact = validate_oracle(sign, LocalOracle::exhaustive());
  CHECK(exact.valid);
  CHECK(exact.measured_alpha == Rational(1));

  auto k = ksystem_param_exact(sign);
  std::vector<EdgeId> pref{4, 3, 2, 1, 0};
  auto report = validate_oracle(sign, LocalOracle::greedy(k, pref));
  CHECK(report.valid);
  CHECK(report.measured_alpha <= k);
  CHECK(report.queries_checked > 0);

  auto small = LocalOracle::scripted(Rational(1), {{EdgeSet{0, 1, 2, 3, 4}, EdgeSet{3, 4}}});
  auto too_tight = validate_oracle(sign, small);
  CHECK_FALSE(too_tight.valid);
}

TEST_CASE("validation rejects an empty scripted answer") {
  auto card = LocalSystem::cardinality(EdgeSet{0, 1, 2}, 2);
  auto broken = LocalOracle::scripted(Rational(1), {{EdgeSet{0, 1}, EdgeSet{}}});
  auto report = validate_oracle(card, broken);
  CHECK_FALSE(report.valid);
  CHECK_FALSE(report.first_violation.empty());
}

TEST_CASE("session rejects scripted contract breaks") {
  auto g = Hypergraph::graph(2, {{0, 1}});
  std::vector<LocalSystem> systems{LocalSystem::free(g.incident_set(0)),
                                   LocalSystem::free(g.incident_set(1))};
  std::vector<LocalOracle> infeasible{
      LocalOracle::scripted(Rational(1), {{EdgeSet{0}, EdgeSet{}}}), LocalOracle::exhaustive()};
  Instance inst(g, systems, infeasible);
  OracleSession session(inst);
  CHECK_THROWS_AS(session.query(0, EdgeSet{0}), OracleViolation);
}
