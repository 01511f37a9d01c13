#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "locind/algorithms.hpp"
#include "locind/edge_set.hpp"
#include "locind/instance.hpp"
#include "locind/rational.hpp"

namespace locind {

struct ExactResult {
  std::size_t opt_size = 0;
  EdgeSet witness;
  std::uint64_t nodes_explored = 0;
};

// LOCIND_EXACT_CAP when set to a positive integer, else 22.
std::size_t default_exact_cap();

// Maximum member of I[f] by include/exclude search over f in ascending edge
// id, pruning on local membership failure and on the size bound. Throws
// CapExceeded when |f| > cap.
ExactResult max_independent(const Instance& instance, const EdgeSet& f, std::size_t cap);
ExactResult max_independent(const Instance& instance, const EdgeSet& f);
ExactResult max_independent(const Instance& instance);

struct RatioReport {
  std::size_t solution_size = 0;
  std::size_t opt_size = 0;
  // max |J| over J in I[R] for the trace's residual R.
  std::size_t residual_opt = 0;
  Bound bound;
  // |OPT| / |I|; absent when I is empty.
  std::optional<Rational> ratio;
  // alpha + residual_opt / |I|; absent when I is empty.
  std::optional<Rational> lemma_bound;
  bool independent = true;
  bool theorem_ok = true;
  bool lemma_ok = true;

  // Independent, within the residual bound, and within the theorem bound
  // whenever that bound is guaranteed for the instance.
  bool pass() const { return independent && lemma_ok && (theorem_ok || !bound.guaranteed); }
};

RatioReport verify_ratio(const SolveTrace& trace, const Instance& instance, std::size_t cap);
RatioReport verify_ratio(const SolveTrace& trace, const Instance& instance);

// Per-vertex ratio max_{J in I[P_v ∪ R_v]} |J| / |I_v| over vertices with
// nonempty P_v, where I_v is the answer recorded for v in the trace.
Rational greedy_lemma2_ratio(const SolveTrace& trace, const Instance& instance,
                             std::size_t cap);

// Exact k-system parameter of the global system; throws CapExceeded when the
// instance has more than `cap` edges.
Rational global_ksystem_param(const Instance& instance, std::size_t cap = 12);

}  // namespace locind
