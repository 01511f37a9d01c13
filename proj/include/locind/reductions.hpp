#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "locind/algorithms.hpp"
#include "locind/hypergraph.hpp"
#include "locind/instance.hpp"
#include "locind/rational.hpp"

namespace locind {

// CNF over variables 1..num_variables; literals are DIMACS-style signed ints.
struct Cnf {
  std::size_t num_variables = 0;
  std::vector<std::vector<int>> clauses;
  bool operator==(const Cnf&) const = default;
};

// Rejects empty clauses, tautological clauses (x and -x together) and
// literals outside 1..num_variables. Repeated literals are allowed.
void validate_cnf(const Cnf& cnf);
// DIMACS "p cnf <vars> <clauses>" followed by zero-terminated clauses.
Cnf parse_dimacs(std::string_view text);
std::string to_dimacs(const Cnf& cnf);

// Vertices 0..V-1 are the variables, V..V+C-1 the clauses. One edge per
// (variable, clause) occurrence, ordered by clause then variable.
struct MaxSatEdge {
  std::size_t variable;  // 0-based
  std::size_t clause;    // 0-based
  bool positive;
};
std::vector<MaxSatEdge> maxsat_edges(const Cnf& cnf);

// Variables get sign systems with exhaustive oracles, clauses get
// cardinality 1; the bipartition is (variables, clauses) and k is 1.
Instance maxsat_to_instance(const Cnf& cnf);
// Each variable takes the sign of its selected edges; untouched variables
// are false.
std::vector<bool> decode_assignment(const Cnf& cnf, const EdgeSet& independent);
std::size_t satisfied_clauses(const Cnf& cnf, const std::vector<bool>& assignment);

struct TimedInstance {
  Instance instance;
  // Exact k-system parameter per vertex, when |E_v| is within the cap.
  std::vector<std::optional<Rational>> local_k;
};
// labels[e] is the label set of edge e; every vertex gets the timed
// matching system over its incident edges.
TimedInstance timed_to_instance(const Hypergraph& g,
                                const std::vector<std::vector<std::int64_t>>& labels,
                                std::size_t k_cap = 14);

// Cardinality b(v) at every vertex with exhaustive oracles. Edges at a vertex
// with b(v) = 0 can never be selected and are dropped.
Instance bmatching_to_instance(const Hypergraph& g, const std::vector<std::size_t>& b);

enum class Fixture { StarFixedOrder, CompleteGreedy, UwGreedy };

const char* to_string(Fixture fixture);
Fixture parse_fixture(std::string_view name);

struct FixtureParams {
  Rational alpha{1};
  std::size_t n = 0;
};

// An adversarial instance from the lower-bound constructions, with scripted
// oracles that reproduce the adversary's answers.
struct FixtureInstance {
  Instance instance;
  Algorithm algorithm = Algorithm::FixedOrder;
  // Processing order for FixedOrder.
  std::vector<VertexId> order;
  // |OPT| / |I| on the adversarial run: exact when `exact`, else a lower
  // bound.
  Rational expected_ratio{1};
  bool exact = true;
};

// Oracles are scripted on every nonempty subset of E_v while
// deg(v) <= kFixtureScriptDegree, which keeps them valid and monotone
// everywhere; above that only E_v itself is scripted.
inline constexpr std::size_t kFixtureScriptDegree = 12;

// star_fixedorder: 1 <= floor(alpha) <= n - 1, n >= 2.
// complete_greedy: n >= 2 (alpha is ignored; the oracles are exact).
// uw_greedy: (alpha - 1)(n - 1) >= alpha(alpha + 1).
FixtureInstance lowerbound_fixture(Fixture fixture, const FixtureParams& params);

}  // namespace locind
