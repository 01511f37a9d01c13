#include "doctest.h"
#include "locind/bench.hpp"
#include "locind/errors.hpp"
#include "locind/exact.hpp"

using namespace locind;

TEST_CASE("family names") {
  for (auto f : {Family::Gnp, Family::Tree, Family::Degenerate, Family::Uniform, Family::Hyper,
                 Family::Bipartite, Family::Maxsat, Family::Timed, Family::Bmatching})
    CHECK(parse_family(to_string(f)) == f);
  CHECK_THROWS_AS(parse_family("x"), InvalidInput);
  CHECK(compatible(Algorithm::BipartiteApprox, Family::Maxsat));
  CHECK_FALSE(compatible(Algorithm::BipartiteApprox, Family::Gnp));
  CHECK_FALSE(compatible(Algorithm::OrderedApprox, Family::Hyper));
}

TEST_CASE("instances are deterministic in the seed") {
  for (auto f : {Family::Gnp, Family::Tree, Family::Degenerate, Family::Uniform, Family::Hyper,
                 Family::Bipartite, Family::Maxsat, Family::Timed, Family::Bmatching}) {
    FamilySpec spec;
    spec.family = f;
    auto a = make_instance(spec, 17);
    auto b = make_instance(spec, 17);
    CHECK(a.structure() == b.structure());
    CHECK(a.systems() == b.systems());
    if (is_bipartite_family(f)) CHECK(a.bipartition().has_value());
    if (is_hypergraph_family(f)) CHECK(a.structure().kind() == StructureKind::Hypergraph);
  }
}

TEST_CASE("greedy bench on gnp stays under n/2") {
  BenchConfig config;
  config.spec.n = 8;
  config.spec.p = 0.4;
  config.algorithms = {Algorithm::Greedy};
  config.seeds = 50;
  auto rows = run_bench(config);
  CHECK(rows.size() == 50);
  for (const auto& row : rows) {
    CHECK(row.status == "pass");
    if (row.ratio) CHECK(*row.ratio <= Rational(4));
  }
}

TEST_CASE("bench output is independent of thread count") {
  BenchConfig config;
  config.spec.family = Family::Bipartite;
  config.spec.kinds = {SystemKind::Cardinality, SystemKind::Sign};
  config.spec.strategies = {OracleStrategy::Exhaustive, OracleStrategy::GreedyPref};
  config.algorithms = all_algorithms();
  config.seeds = 12;
  auto one = bench_csv(run_bench(config), false);
  config.threads = 4;
  auto four = bench_csv(run_bench(config), false);
  CHECK(one == four);
  CHECK(one.rfind("instance,seed,algorithm,", 0) == 0);
  CHECK(one.find("runtime_ms") == std::string::npos);
}
