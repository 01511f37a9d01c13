#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "locind/algorithms.hpp"
#include "locind/instance.hpp"
#include "locind/local_system.hpp"
#include "locind/oracle.hpp"

namespace locind {

enum class Family { Gnp, Tree, Degenerate, Uniform, Hyper, Bipartite, Maxsat, Timed, Bmatching };

const char* to_string(Family family);
Family parse_family(std::string_view name);
bool is_hypergraph_family(Family family);
bool is_bipartite_family(Family family);

struct FamilySpec {
  Family family = Family::Gnp;
  std::size_t n = 8;        // vertices (bipartite: left side; maxsat: variables)
  std::size_t m = 8;        // edges for hypergraph families, clauses for maxsat
  std::size_t right = 4;    // bipartite right side
  double p = 0.4;
  std::size_t k = 2;        // degenerate width
  std::size_t d = 3;        // hyperedge size / max rank
  std::vector<SystemKind> kinds{SystemKind::Free};
  std::vector<OracleStrategy> strategies{OracleStrategy::Exhaustive};
};

// Deterministic in (spec, seed).
Instance make_instance(const FamilySpec& spec, std::uint64_t seed);

// Whether `algorithm` can run on instances of the family.
bool compatible(Algorithm algorithm, Family family);

struct BenchConfig {
  FamilySpec spec;
  std::vector<Algorithm> algorithms;
  std::uint64_t seed = 1;
  std::size_t seeds = 10;
  std::size_t cap = 22;
  unsigned threads = 1;
  bool timing = false;
};

struct BenchRow {
  std::string instance_id;
  std::uint64_t seed = 0;
  Algorithm algorithm = Algorithm::FixedOrder;
  std::size_t n = 0, m = 0, gamma = 0, delta = 0;
  std::optional<Rational> k;
  Rational alpha{1};
  std::size_t size = 0;
  std::optional<std::size_t> opt;
  std::optional<Rational> ratio;
  Rational bound{1};
  bool guaranteed = true;
  std::optional<Rational> lemma_bound;
  // "pass", "fail" (a bound violated), "error" (the run threw) or "outside"
  // (dependent output on an instance outside the algorithm's guarantee).
  std::string status;
  std::string detail;
  double runtime_ms = 0;
};

// One row per (instance, algorithm), in that order regardless of threads.
std::vector<BenchRow> run_bench(const BenchConfig& config);
std::string bench_csv(const std::vector<BenchRow>& rows, bool timing);

}  // namespace locind
