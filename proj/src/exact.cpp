#include "locind/exact.hpp"

#include <cstdlib>
#include <string>
#include <vector>

#include "locind/errors.hpp"

namespace locind {

namespace {

class Search {
 public:
  Search(const Instance& instance, const EdgeSet& f) : instance_(instance) {
    const Hypergraph& h = instance.structure();
    edges_ = f.to_vector();
    incident_.reserve(h.num_vertices());
    for (VertexId v = 0; v < h.num_vertices(); ++v) incident_.push_back(h.incident_set(v));
  }

  ExactResult run() {
    dfs(0);
    return result_;
  }

 private:
  bool can_add(EdgeId e) const {
    EdgeSet next = current_.with(e);
    for (VertexId w : instance_.structure().edge(e)) {
      if (!instance_.system(w).accepts(next & incident_[w])) return false;
    }
    return true;
  }

  void dfs(std::size_t i) {
    ++result_.nodes_explored;
    if (current_.size() > result_.opt_size) {
      result_.opt_size = current_.size();
      result_.witness = current_;
    }
    if (i == edges_.size()) return;
    if (current_.size() + (edges_.size() - i) <= result_.opt_size) return;
    EdgeId e = edges_[i];
    if (can_add(e)) {
      current_.insert(e);
      dfs(i + 1);
      current_.erase(e);
    }
    dfs(i + 1);
  }

  const Instance& instance_;
  std::vector<EdgeId> edges_;
  std::vector<EdgeSet> incident_;
  EdgeSet current_;
  ExactResult result_;
};

}  // namespace

std::size_t default_exact_cap() {
  if (const char* env = std::getenv("LOCIND_EXACT_CAP")) {
    char* end = nullptr;
    unsigned long value = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return value;
  }
  return 22;
}

ExactResult max_independent(const Instance& instance, const EdgeSet& f, std::size_t cap) {
  if (f.size() > cap) {
    throw CapExceeded("exact search over " + std::to_string(f.size()) +
                      " edges exceeds the cap of " + std::to_string(cap));
  }
  if (!f.is_subset_of(instance.structure().all_edges())) {
    throw InvalidInput("edge set is not part of the instance");
  }
  return Search(instance, f).run();
}

ExactResult max_independent(const Instance& instance, const EdgeSet& f) {
  return max_independent(instance, f, default_exact_cap());
}

ExactResult max_independent(const Instance& instance) {
  return max_independent(instance, instance.structure().all_edges());
}

RatioReport verify_ratio(const SolveTrace& trace, const Instance& instance, std::size_t cap) {
  RatioReport report;
  report.bound = trace.bound;
  report.solution_size = trace.independent.size();
  report.independent = instance.is_independent(trace.independent);
  report.opt_size = max_independent(instance, instance.structure().all_edges(), cap).opt_size;
  report.residual_opt = max_independent(instance, trace.residual, cap).opt_size;
  const auto opt = static_cast<std::int64_t>(report.opt_size);
  if (report.solution_size == 0) {
    report.theorem_ok = report.opt_size == 0;
    report.lemma_ok = report.opt_size == 0;
    return report;
  }
  const auto size = static_cast<std::int64_t>(report.solution_size);
  report.ratio = Rational(opt, size);
  report.lemma_bound =
      trace.bound.alpha + Rational(static_cast<std::int64_t>(report.residual_opt), size);
  report.theorem_ok = *report.ratio <= trace.bound.value;
  report.lemma_ok = *report.ratio <= *report.lemma_bound;
  return report;
}

RatioReport verify_ratio(const SolveTrace& trace, const Instance& instance) {
  return verify_ratio(trace, instance, default_exact_cap());
}

Rational greedy_lemma2_ratio(const SolveTrace& trace, const Instance& instance,
                             std::size_t cap) {
  Rational beta{0};
  for (const IterationRecord& step : trace.iterations) {
    VertexId v = step.vertex;
    if (trace.parts[v].empty()) continue;
    std::size_t local =
        max_independent(instance, trace.parts[v] | trace.residuals[v], cap).opt_size;
    if (step.chosen.empty()) {
      if (local == 0) continue;
      throw OracleViolation("empty answer at vertex " + std::to_string(v) +
                            " with independent edges available");
    }
    beta = std::max(beta, Rational(static_cast<std::int64_t>(local),
                                   static_cast<std::int64_t>(step.chosen.size())));
  }
  return beta;
}

Rational global_ksystem_param(const Instance& instance, std::size_t cap) {
  const std::size_t m = instance.num_edges();
  if (m > cap) {
    throw CapExceeded("global k-system parameter over " + std::to_string(m) +
                      " edges exceeds the cap of " + std::to_string(cap));
  }
  std::vector<bool> table(std::size_t{1} << m);
  for (std::size_t mask = 0; mask < table.size(); ++mask) {
    EdgeSet s;
    for (std::size_t e = 0; e < m; ++e) {
      if ((mask >> e) & 1u) s.insert(static_cast<EdgeId>(e));
    }
    table[mask] = instance.is_independent(s);
  }
  return ksystem_param_from_table(table, m);
}

}  // namespace locind
