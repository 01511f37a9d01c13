#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "locind/edge_set.hpp"
#include "locind/local_system.hpp"
#include "locind/rational.hpp"

namespace locind {

class Instance;

enum class OracleStrategy { Exhaustive, GreedyPref, Scripted };

const char* to_string(OracleStrategy strategy);
OracleStrategy parse_oracle_strategy(std::string_view name);

struct ScriptEntry {
  EdgeSet query;
  EdgeSet answer;
};

// Exact local maximum of I[f]; ties go to the lexicographically least set in
// ascending edge id order.
EdgeSet exhaustive_local_max(const LocalSystem& system, const EdgeSet& f);

// An alpha-approximate local maximizer A_v. The oracle does not own its
// system; callers pass the vertex's LocalSystem on every query.
class LocalOracle {
 public:
  // GreedyPref answers with the largest greedy_maximal() result over all
  // subsets of the query (first found in a fixed search order), which keeps
  // the answer size monotone in the query. Above this many query edges it
  // falls back to a single greedy scan and monotonicity is not guaranteed.
  static constexpr std::size_t kGreedyEnvelopeLimit = 20;

  LocalOracle() = default;

  static LocalOracle exhaustive();
  static LocalOracle greedy(Rational alpha, std::vector<EdgeId> pref = {});
  // Unscripted queries go to `fallback` (Exhaustive or GreedyPref with `pref`).
  static LocalOracle scripted(Rational alpha, std::vector<ScriptEntry> entries,
                              OracleStrategy fallback = OracleStrategy::Exhaustive,
                              std::vector<EdgeId> pref = {});

  OracleStrategy strategy() const { return strategy_; }
  OracleStrategy fallback() const { return fallback_; }
  const Rational& alpha() const { return alpha_; }
  const std::vector<EdgeId>& preference() const { return pref_; }
  const std::vector<ScriptEntry>& script() const { return entries_; }

  // Raw answer with no contract checks beyond f being in the ground set.
  EdgeSet answer(const LocalSystem& system, const EdgeSet& f) const;

  LocalOracle remap(std::span<const EdgeId> new_ids) const;

 private:
  EdgeSet answer_with(OracleStrategy strategy, const LocalSystem& system,
                      const EdgeSet& f) const;

  OracleStrategy strategy_ = OracleStrategy::Exhaustive;
  OracleStrategy fallback_ = OracleStrategy::Exhaustive;
  Rational alpha_{1};
  std::vector<EdgeId> pref_;
  std::vector<ScriptEntry> entries_;
  std::unordered_map<EdgeSet, std::size_t, EdgeSetHash> index_;
};

// A_v(F) for checked oracle use: f must be in the ground set.
EdgeSet query(const LocalOracle& oracle, const LocalSystem& system, const EdgeSet& f);

struct QueryRecord {
  VertexId vertex;
  EdgeSet query;
  EdgeSet answer;
};

// Per-run oracle access. Every query is checked for feasibility; scripted
// answers are additionally checked against the exact local maximum and for
// size monotonicity against the queries already issued at that vertex.
// Violations throw OracleViolation. Answers are memoized per (vertex, query).
class OracleSession {
 public:
  explicit OracleSession(const Instance& instance) : instance_(&instance) {}

  EdgeSet query(VertexId v, const EdgeSet& f);
  const std::vector<QueryRecord>& log() const { return log_; }

 private:
  const Instance* instance_;
  std::vector<QueryRecord> log_;
  std::vector<std::unordered_map<EdgeSet, std::size_t, EdgeSetHash>> memo_;
};

struct ValidationReport {
  bool valid = true;
  std::size_t queries_checked = 0;
  // max |OPT(F)| / |A(F)| over checked queries with a nonempty answer.
  Rational measured_alpha{1};
  std::string first_violation;
};

// Checks feasibility, the declared ratio against exhaustive maxima, and size
// monotonicity. Queries: every scripted key, every subset of the ground set
// when there are at most `budget` of them (else `budget` random subsets),
// and one random chain of nested subsets.
ValidationReport validate_oracle(const LocalSystem& system, const LocalOracle& oracle,
                                 std::size_t budget = 1024, std::uint64_t seed = 1);

}  // namespace locind
