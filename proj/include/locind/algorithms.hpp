#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "locind/edge_set.hpp"
#include "locind/instance.hpp"
#include "locind/oracle.hpp"
#include "locind/ordering.hpp"
#include "locind/rational.hpp"

namespace locind {

enum class Algorithm {
  FixedOrder,
  Greedy,
  OrderedApprox,
  DecomApprox,
  BipartiteApprox,
  OrderedApproxHyper,
  DecomApproxHyper,
};

// CLI names: fixed-order, greedy, ordered-approx, decom-approx,
// bipartite-approx, ordered-approx-hyper, decom-approx-hyper.
const char* to_string(Algorithm algorithm);
Algorithm parse_algorithm(std::string_view name);
const std::vector<Algorithm>& all_algorithms();
bool accepts_hypergraphs(Algorithm algorithm);
bool uses_vertex_order(Algorithm algorithm);

// The approximation guarantee of a run, instantiated with the instance's
// parameters in exact arithmetic: |OPT| <= value * |I| whenever guaranteed.
struct Bound {
  Rational value{1};
  bool guaranteed = true;
  std::string formula;
  Rational alpha{1};
  std::size_t vertices = 0;
  std::size_t width = 0;
  std::size_t rank = 0;
  std::optional<Rational> k;
};

struct IterationRecord {
  VertexId vertex = 0;
  // Case number for OrderedApprox-style algorithms, 0 elsewhere.
  int case_taken = 0;
  EdgeSet part;      // P_v at the end of the step
  EdgeSet chosen;    // I_v
  EdgeSet residual;  // R_v at the end of the step
};

struct SolveTrace {
  Algorithm algorithm = Algorithm::FixedOrder;
  EdgeSet independent;
  // Local subpartition P_v and per-vertex residual parts R_v, by vertex.
  std::vector<EdgeSet> parts;
  std::vector<EdgeSet> residuals;
  // E \ ∪ P_v.
  EdgeSet residual;
  std::vector<IterationRecord> iterations;
  std::vector<QueryRecord> queries;
  Bound bound;
  std::vector<VertexId> order;
  // Decomposition algorithms: the edge classes and the index of the class
  // whose run produced `independent`.
  std::vector<EdgeSet> classes;
  std::optional<std::size_t> chosen_class;
};

struct SolveOptions {
  // Check the per-iteration loop invariants (subpartition discipline, partial
  // independence, residual bookkeeping). Output independence is always checked.
  bool debug_checks = false;
};

SolveTrace fixed_order(const Instance& instance, const VertexOrder& order,
                       const SolveOptions& options = {});
SolveTrace greedy(const Instance& instance, const SolveOptions& options = {});
SolveTrace ordered_approx(const Instance& instance, const VertexOrder& order,
                          const SolveOptions& options = {});
SolveTrace decom_approx(const Instance& instance, const VertexOrder& order,
                        const SolveOptions& options = {});
SolveTrace bipartite_approx(const Instance& instance, const SolveOptions& options = {});
SolveTrace ordered_approx_hyper(const Instance& instance, const VertexOrder& order,
                                const SolveOptions& options = {});
SolveTrace decom_approx_hyper(const Instance& instance, const VertexOrder& order,
                              const SolveOptions& options = {});

// Dispatches by algorithm. Without a sequence, ordered algorithms use the
// degeneracy order of the instance.
SolveTrace solve(const Instance& instance, Algorithm algorithm,
                 const std::optional<std::vector<VertexId>>& sequence = std::nullopt,
                 const SolveOptions& options = {});

// Tight ratio of the Greedy algorithm:
//   alpha + (2alpha-1)/(2alpha)(n-1) - 1/2   if (alpha-1)(n-1) >= alpha(alpha+1)
//   alpha + alpha/(alpha+1)(n-1)            if alpha <= (alpha-1)(n-1) < alpha(alpha+1)
//   n/2                                     if (alpha-1)(n-1) < alpha
// Throws InvalidInput unless alpha >= 1 and n >= 1.
Rational rho(const Rational& alpha, std::size_t n);
// Which of the three branches above applies (1, 2 or 3, in that order).
int rho_branch(const Rational& alpha, std::size_t n);

// True when every two distinct downward edges of each vertex meet only in
// that vertex, the precondition for the hypergraph OrderedApprox guarantee.
bool downward_edges_meet_only_at_vertex(const Hypergraph& h, const VertexOrder& order);

}  // namespace locind
