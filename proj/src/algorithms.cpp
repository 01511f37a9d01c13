#include "locind/algorithms.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "locind/errors.hpp"

namespace locind {

namespace {

constexpr std::array<std::pair<Algorithm, const char*>, 7> kNames{{
    {Algorithm::FixedOrder, "fixed-order"},
    {Algorithm::Greedy, "greedy"},
    {Algorithm::OrderedApprox, "ordered-approx"},
    {Algorithm::DecomApprox, "decom-approx"},
    {Algorithm::BipartiteApprox, "bipartite-approx"},
    {Algorithm::OrderedApproxHyper, "ordered-approx-hyper"},
    {Algorithm::DecomApproxHyper, "decom-approx-hyper"},
}};

EdgeSet ask(OracleSession& session, VertexId v, const EdgeSet& f) {
  // A_v(∅) = ∅ by feasibility; skip the call so logs hold only real queries.
  if (f.empty()) return {};
  return session.query(v, f);
}

void require_graph(const Instance& instance, Algorithm algorithm) {
  if (!instance.structure().is_graph()) {
    throw UnsupportedInstance(std::string(to_string(algorithm)) +
                              " requires a graph instance");
  }
}

void require_order(const Instance& instance, const VertexOrder& order) {
  if (order.sequence().size() != instance.num_vertices()) {
    throw InvalidInput("vertex order does not match the instance");
  }
}

SolveTrace empty_trace(const Instance& instance, Algorithm algorithm) {
  SolveTrace t;
  t.algorithm = algorithm;
  t.parts.assign(instance.num_vertices(), {});
  t.residuals.assign(instance.num_vertices(), {});
  return t;
}

void finish(const Instance& instance, SolveTrace& t) {
  t.residual = instance.structure().all_edges();
  for (const auto& p : t.parts) t.residual -= p;
  if (!instance.is_independent(t.independent)) {
    throw IndependenceViolation(std::string(to_string(t.algorithm)) +
                                " produced a dependent set " + t.independent.to_string());
  }
}

// P pairwise disjoint, P ∩ ∪R = ∅ and ∪P ∪ ∪R = expected.
void check_subpartition(const SolveTrace& t, const EdgeSet& expected, const char* where) {
  EdgeSet covered;
  for (const auto& p : t.parts) {
    if (covered.intersects(p)) throw Error(std::string(where) + ": parts overlap");
    covered |= p;
  }
  EdgeSet residual;
  for (const auto& r : t.residuals) residual |= r;
  if (covered.intersects(residual)) {
    throw Error(std::string(where) + ": a residual edge is still in a part");
  }
  if (!((covered | residual) == expected)) {
    throw Error(std::string(where) + ": parts and residual do not cover the edges");
  }
}

Rational clamp_min(std::size_t value, std::size_t low) {
  return Rational(static_cast<std::int64_t>(std::max(value, low)));
}

// ---------------------------------------------------------------------------
// FixedOrder / Greedy

SolveTrace run_fixed(const Instance& instance, const std::vector<VertexId>* sequence,
                     Algorithm algorithm, const SolveOptions& options) {
  require_graph(instance, algorithm);
  const Hypergraph& h = instance.structure();
  const std::size_t n = h.num_vertices();
  OracleSession session(instance);
  SolveTrace t = empty_trace(instance, algorithm);
  std::vector<EdgeSet> chosen(n);
  std::vector<char> done(n, 0);
  EdgeSet remaining = h.all_edges();

  for (std::size_t step = 0; step < n; ++step) {
    VertexId v = 0;
    if (sequence != nullptr) {
      v = (*sequence)[step];
    } else {
      std::size_t best = 0;
      bool found = false;
      for (VertexId w = 0; w < n; ++w) {
        if (done[w]) continue;
        std::size_t size = ask(session, w, h.incident_set(w) & remaining).size();
        if (!found || size > best) {
          best = size;
          v = w;
          found = true;
        }
      }
    }
    done[v] = 1;
    EdgeSet part = h.incident_set(v) & remaining;
    EdgeSet answer = ask(session, v, part);
    EdgeSet reach;
    for (EdgeId e : answer) reach |= h.incident_set(h.other(e, v));
    EdgeSet residual = (reach - part) & remaining;
    remaining -= part;
    remaining -= residual;
    t.independent |= answer;
    t.parts[v] = part;
    t.residuals[v] = residual;
    chosen[v] = answer;
    t.order.push_back(v);
    t.iterations.push_back({v, 0, part, answer, residual});
  }

  if (options.debug_checks) {
    check_subpartition(t, h.all_edges(), to_string(algorithm));
    for (VertexId v = 0; v < n; ++v) {
      EdgeSet local = t.independent & h.incident_set(v);
      if (local.size() > 1 && !(local == chosen[v])) {
        throw Error(std::string(to_string(algorithm)) + ": vertex " + std::to_string(v) +
                    " keeps edges from several answers");
      }
    }
  }
  t.queries = session.log();
  finish(instance, t);
  return t;
}

// ---------------------------------------------------------------------------
// OrderedApprox on graphs

struct StepCheck {
  VertexId v;
  const EdgeSet* base;  // A_v(P_v) for the final P_v, when it was queried
};

void check_ordered_step(const Instance& instance, const SolveTrace& t,
                        const std::vector<EdgeSet>& chosen, const VertexOrder& order,
                        const EdgeSet& active, std::size_t i, const StepCheck& step,
                        const char* where) {
  const Hypergraph& h = instance.structure();
  VertexId v = step.v;
  if (!chosen[v].is_subset_of(t.parts[v]) || !t.parts[v].is_subset_of(h.incident_set(v))) {
    throw Error(std::string(where) + ": I_v is not inside P_v at vertex " + std::to_string(v));
  }
  if (step.base != nullptr && chosen[v].size() < step.base->size()) {
    throw Error(std::string(where) + ": I_v is smaller than A_v(P_v) at vertex " +
                std::to_string(v));
  }
  EdgeSet so_far;
  for (std::size_t j = 0; j <= i; ++j) {
    VertexId u = order.sequence()[j];
    if (!t.residuals[u].is_subset_of(order.up(u))) {
      throw Error(std::string(where) + ": R_v is not upward at vertex " + std::to_string(u));
    }
    so_far |= chosen[u];
  }
  check_subpartition(t, active, where);
  if (!instance.is_independent(so_far)) {
    throw IndependenceViolation(std::string(where) + ": partial solution is dependent after " +
                                std::to_string(i + 1) + " iterations");
  }
}

SolveTrace ordered_graph_run(const Instance& instance, const std::vector<VertexId>& sequence,
                             const EdgeSet& active, OracleSession& session,
                             const SolveOptions& options) {
  const Hypergraph& h = instance.structure();
  const std::size_t n = h.num_vertices();
  const VertexOrder order(h, sequence, &active);
  SolveTrace t = empty_trace(instance, Algorithm::OrderedApprox);
  t.order = sequence;
  std::vector<EdgeSet> chosen(n);
  std::vector<char> pending(n, 0);
  for (VertexId v = 0; v < n; ++v) t.parts[v] = order.down(v);

  for (std::size_t i = 0; i < n; ++i) {
    const VertexId v = sequence[i];
    const EdgeSet& up = order.up(v);
    EdgeSet& part = t.parts[v];
    EdgeSet fresh;
    EdgeSet base;
    bool have_base = false;
    int case_taken = 0;

    if (up.empty()) {
      case_taken = 1;
      chosen[v] = ask(session, v, part);
    } else if (!part.empty()) {
      base = ask(session, v, part);
      have_base = true;
      std::optional<EdgeId> b;
      for (EdgeId e : up) {
        EdgeSet a = ask(session, v, part.with(e));
        if (a.contains(e) && a.size() > base.size()) {
          b = e;
          break;
        }
      }
      if (!b) {
        case_taken = 2;
        EdgeId e = up.front();
        EdgeSet a = ask(session, v, part.with(e));
        chosen[v] = a.contains(e) ? base : a;
        base = a;
        part.insert(e);
        t.residuals[v] = up.without(e);
        t.parts[h.other(e, v)].erase(e);
      } else {
        case_taken = 3;
        chosen[v] = ask(session, v, part.with(*b)).without(*b);
        t.residuals[v] = up.without(*b);
      }
      fresh |= t.residuals[v];
    } else {
      case_taken = 4;
      pending[v] = 1;
    }

    for (EdgeId e : chosen[v]) {
      VertexId l = h.other(e, v);
      if (!pending[l]) continue;
      pending[l] = 0;
      EdgeSet deferred;
      for (EdgeId f : order.up(l)) {
        if (order.position(h.other(f, l)) > i) deferred.insert(f);
      }
      t.residuals[l] = deferred;
      fresh |= deferred;
    }
    for (EdgeId f : fresh) {
      for (VertexId w : h.edge(f)) {
        if (order.position(w) > i) t.parts[w].erase(f);
      }
    }
    t.independent |= chosen[v];
    t.iterations.push_back({v, case_taken, part, chosen[v], t.residuals[v]});
    if (options.debug_checks) {
      check_ordered_step(instance, t, chosen, order, active, i,
                         {v, have_base ? &base : nullptr}, "ordered-approx");
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// OrderedApprox* on hypergraphs

SolveTrace ordered_hyper_run(const Instance& instance, const std::vector<VertexId>& sequence,
                             const EdgeSet& active, OracleSession& session,
                             const SolveOptions& options) {
  const Hypergraph& h = instance.structure();
  const std::size_t n = h.num_vertices();
  const VertexOrder order(h, sequence, &active);
  SolveTrace t = empty_trace(instance, Algorithm::OrderedApproxHyper);
  t.order = sequence;
  std::vector<EdgeSet> chosen(n);
  std::vector<char> pending(n, 0);
  for (VertexId v = 0; v < n; ++v) t.parts[v] = order.down(v);
  EdgeSet residual_so_far;

  for (std::size_t i = 0; i < n; ++i) {
    const VertexId v = sequence[i];
    // Upward edges not yet claimed by an earlier residual part.
    const EdgeSet live = order.up(v) - residual_so_far;
    EdgeSet& part = t.parts[v];
    EdgeSet fresh;
    EdgeSet base;
    bool have_base = false;
    int case_taken = 0;

    if (live.empty()) {
      case_taken = 1;
      chosen[v] = ask(session, v, part);
    } else if (!part.empty()) {
      base = ask(session, v, part);
      have_base = true;
      std::optional<EdgeId> b;
      for (EdgeId e : live) {
        EdgeSet a = ask(session, v, part.with(e));
        if (a.contains(e) && a.size() > base.size()) {
          b = e;
          break;
        }
      }
      if (!b) {
        case_taken = 2;
        EdgeId e = live.front();
        EdgeSet a = ask(session, v, part.with(e));
        chosen[v] = a.contains(e) ? base : a;
        base = a;
        for (VertexId w : h.edge(e)) {
          if (w != v) t.parts[w].erase(e);
        }
        part.insert(e);
        t.residuals[v] = live.without(e);
      } else {
        case_taken = 3;
        chosen[v] = ask(session, v, part.with(*b)).without(*b);
        t.residuals[v] = live.without(*b);
      }
      fresh |= t.residuals[v];
    } else {
      case_taken = 4;
      pending[v] = 1;
    }

    for (EdgeId e : chosen[v]) {
      for (VertexId l : h.edge(e)) {
        if (l == v || !pending[l]) continue;
        pending[l] = 0;
        EdgeSet deferred;
        for (EdgeId f : order.up(l) - residual_so_far) {
          for (VertexId u : h.edge(f)) {
            if (order.position(u) > i) {
              deferred.insert(f);
              break;
            }
          }
        }
        t.residuals[l] = deferred;
        fresh |= deferred;
      }
    }
    for (EdgeId f : fresh) {
      for (VertexId w : h.edge(f)) {
        if (order.position(w) > i) t.parts[w].erase(f);
      }
    }
    residual_so_far |= fresh;
    t.independent |= chosen[v];
    t.iterations.push_back({v, case_taken, part, chosen[v], t.residuals[v]});
    if (options.debug_checks) {
      check_ordered_step(instance, t, chosen, order, active, i,
                         {v, have_base ? &base : nullptr}, "ordered-approx-hyper");
    }
  }
  return t;
}

using Runner = SolveTrace (*)(const Instance&, const std::vector<VertexId>&, const EdgeSet&,
                              OracleSession&, const SolveOptions&);

SolveTrace run_classes(const Instance& instance, const VertexOrder& order,
                       std::vector<EdgeSet> classes, Runner runner, Algorithm algorithm,
                       const SolveOptions& options) {
  OracleSession session(instance);
  SolveTrace best = empty_trace(instance, algorithm);
  best.order = order.sequence();
  std::optional<std::size_t> chosen_class;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    SolveTrace run = runner(instance, order.sequence(), classes[c], session, options);
    if (!chosen_class || run.independent.size() > best.independent.size()) {
      best = std::move(run);
      chosen_class = c;
    }
  }
  best.algorithm = algorithm;
  best.classes = std::move(classes);
  best.chosen_class = chosen_class;
  best.queries = session.log();
  return best;
}

}  // namespace

const char* to_string(Algorithm algorithm) {
  for (const auto& [a, name] : kNames) {
    if (a == algorithm) return name;
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
  for (const auto& [a, n] : kNames) {
    if (name == n) return a;
  }
  throw InvalidInput("unknown algorithm '" + std::string(name) + "'");
}

const std::vector<Algorithm>& all_algorithms() {
  static const std::vector<Algorithm> all = [] {
    std::vector<Algorithm> out;
    for (const auto& entry : kNames) out.push_back(entry.first);
    return out;
  }();
  return all;
}

bool accepts_hypergraphs(Algorithm algorithm) {
  return algorithm == Algorithm::OrderedApproxHyper || algorithm == Algorithm::DecomApproxHyper;
}

bool uses_vertex_order(Algorithm algorithm) {
  return algorithm != Algorithm::Greedy && algorithm != Algorithm::BipartiteApprox;
}

int rho_branch(const Rational& alpha, std::size_t n) {
  if (alpha < 1 || n < 1) throw InvalidInput("rho requires alpha >= 1 and n >= 1");
  const Rational slack = (alpha - 1) * static_cast<std::int64_t>(n - 1);
  if (slack >= alpha * (alpha + 1)) return 1;
  if (slack >= alpha) return 2;
  return 3;
}

Rational rho(const Rational& alpha, std::size_t n) {
  const Rational m = static_cast<std::int64_t>(n - (n > 0 ? 1 : 0));
  switch (rho_branch(alpha, n)) {
    case 1:
      return alpha + (2 * alpha - 1) / (2 * alpha) * m - Rational(1, 2);
    case 2:
      return alpha + alpha / (alpha + 1) * m;
    default:
      return Rational(static_cast<std::int64_t>(n), 2);
  }
}

bool downward_edges_meet_only_at_vertex(const Hypergraph& h, const VertexOrder& order) {
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    std::vector<EdgeId> down = order.down(v).to_vector();
    for (std::size_t a = 0; a < down.size(); ++a) {
      for (std::size_t b = a + 1; b < down.size(); ++b) {
        auto e = h.edge(down[a]);
        auto f = h.edge(down[b]);
        std::vector<VertexId> common;
        std::set_intersection(e.begin(), e.end(), f.begin(), f.end(),
                              std::back_inserter(common));
        if (common.size() != 1) return false;
      }
    }
  }
  return true;
}

SolveTrace fixed_order(const Instance& instance, const VertexOrder& order,
                       const SolveOptions& options) {
  require_order(instance, order);
  SolveTrace t = run_fixed(instance, &order.sequence(), Algorithm::FixedOrder, options);
  Bound& b = t.bound;
  b.alpha = instance.alpha();
  b.vertices = instance.num_vertices();
  b.rank = instance.structure().rank();
  b.formula = "alpha + n - 2";
  b.value = b.alpha + clamp_min(b.vertices, 2) - 2;
  return t;
}

SolveTrace greedy(const Instance& instance, const SolveOptions& options) {
  SolveTrace t = run_fixed(instance, nullptr, Algorithm::Greedy, options);
  Bound& b = t.bound;
  b.alpha = instance.alpha();
  b.vertices = instance.num_vertices();
  b.rank = instance.structure().rank();
  b.formula = "rho(alpha, n)";
  b.value = rho(b.alpha, std::max<std::size_t>(b.vertices, 1));
  return t;
}

SolveTrace ordered_approx(const Instance& instance, const VertexOrder& order,
                          const SolveOptions& options) {
  require_graph(instance, Algorithm::OrderedApprox);
  require_order(instance, order);
  OracleSession session(instance);
  SolveTrace t = ordered_graph_run(instance, order.sequence(),
                                   instance.structure().all_edges(), session, options);
  t.queries = session.log();
  finish(instance, t);
  Bound& b = t.bound;
  b.alpha = instance.alpha();
  b.vertices = instance.num_vertices();
  b.rank = instance.structure().rank();
  b.width = order.width();
  b.formula = "alpha + 2*gamma - 2";
  b.value = b.alpha + 2 * clamp_min(b.width, 1) - 2;
  return t;
}

SolveTrace decom_approx(const Instance& instance, const VertexOrder& order,
                        const SolveOptions& options) {
  require_graph(instance, Algorithm::DecomApprox);
  require_order(instance, order);
  SolveTrace t = run_classes(instance, order, forest_decompose(instance.structure(), order),
                             ordered_graph_run, Algorithm::DecomApprox, options);
  finish(instance, t);
  Bound& b = t.bound;
  b.alpha = instance.alpha();
  b.vertices = instance.num_vertices();
  b.rank = instance.structure().rank();
  b.width = order.width();
  b.formula = "alpha * gamma";
  b.value = b.alpha * clamp_min(b.width, 1);
  return t;
}

SolveTrace bipartite_approx(const Instance& instance, const SolveOptions& options) {
  require_graph(instance, Algorithm::BipartiteApprox);
  if (!instance.bipartition()) {
    throw InvalidInput("bipartite-approx requires a bipartition");
  }
  const Hypergraph& h = instance.structure();
  const std::size_t n = h.num_vertices();
  const std::size_t npos = n;
  std::vector<VertexId> left = instance.bipartition()->left;
  std::sort(left.begin(), left.end());
  const std::vector<VertexId>& right = instance.bipartition()->right;
  std::vector<std::size_t> index(n, npos);
  for (std::size_t i = 0; i < left.size(); ++i) index[left[i]] = i;

  Rational k{1};
  if (instance.declared_k()) {
    k = *instance.declared_k();
  } else {
    for (VertexId w : right) k = std::max(k, ksystem_param_exact(instance.system(w)));
  }

  OracleSession session(instance);
  SolveTrace t = empty_trace(instance, Algorithm::BipartiteApprox);
  t.order = left;
  std::vector<EdgeSet> joined(n);
  for (VertexId v : left) t.parts[v] = h.incident_set(v);

  for (std::size_t i = 0; i < left.size(); ++i) {
    const VertexId v = left[i];
    EdgeSet answer = ask(session, v, t.parts[v]);
    EdgeSet fresh;
    for (EdgeId e : answer) {
      VertexId w = h.other(e, v);
      joined[w].insert(e);
      for (EdgeId f : h.incident(w)) {
        VertexId x = h.other(f, w);
        if (index[x] == npos || index[x] <= i || t.residuals[w].contains(f)) continue;
        if (!instance.system(w).accepts(joined[w].with(f))) {
          t.residuals[w].insert(f);
          fresh.insert(f);
        }
      }
    }
    for (EdgeId f : fresh) {
      for (VertexId x : h.edge(f)) {
        if (index[x] != npos && index[x] > i) t.parts[x].erase(f);
      }
    }
    t.independent |= answer;
    t.iterations.push_back({v, 0, t.parts[v], answer, EdgeSet{}});

    if (options.debug_checks) {
      const char* where = "bipartite-approx";
      if (!answer.is_subset_of(t.parts[v])) throw Error(std::string(where) + ": I_v outside P_v");
      EdgeSet joined_union;
      for (VertexId w : right) {
        if (joined_union.intersects(joined[w])) throw Error(std::string(where) + ": J overlap");
        joined_union |= joined[w];
        const LocalSystem& sys = instance.system(w);
        if (!sys.accepts(joined[w])) throw Error(std::string(where) + ": J_w dependent");
        for (EdgeId r : t.residuals[w]) {
          if (sys.accepts(joined[w].with(r))) {
            throw Error(std::string(where) + ": J_w not maximal in J_w + R_w at vertex " +
                        std::to_string(w));
          }
        }
      }
      if (!(joined_union == t.independent)) {
        throw Error(std::string(where) + ": J does not partition the partial solution");
      }
      check_subpartition(t, h.all_edges(), where);
      if (!instance.is_independent(t.independent)) {
        throw IndependenceViolation(std::string(where) + ": partial solution is dependent");
      }
    }
  }
  t.queries = session.log();
  finish(instance, t);
  Bound& b = t.bound;
  b.alpha = instance.alpha_over(left);
  b.vertices = n;
  b.rank = h.rank();
  b.k = k;
  b.formula = "alpha + k";
  b.value = b.alpha + k;
  return t;
}

SolveTrace ordered_approx_hyper(const Instance& instance, const VertexOrder& order,
                                const SolveOptions& options) {
  require_order(instance, order);
  const Hypergraph& h = instance.structure();
  OracleSession session(instance);
  SolveTrace t = ordered_hyper_run(instance, order.sequence(), h.all_edges(), session, options);
  t.queries = session.log();
  Bound& b = t.bound;
  b.alpha = instance.alpha();
  b.vertices = instance.num_vertices();
  b.width = order.width();
  b.rank = h.rank();
  b.formula = "alpha + delta*(gamma - 1)";
  b.value = b.alpha + clamp_min(b.rank, 2) * (clamp_min(b.width, 1) - 1);
  b.guaranteed = downward_edges_meet_only_at_vertex(h, order);
  if (!instance.is_independent(t.independent)) {
    throw IndependenceViolation(
        std::string("ordered-approx-hyper produced a dependent set ") +
        t.independent.to_string() +
        (b.guaranteed ? "" : " (downward edges of some vertex share more than that vertex)"));
  }
  finish(instance, t);
  return t;
}

SolveTrace decom_approx_hyper(const Instance& instance, const VertexOrder& order,
                              const SolveOptions& options) {
  require_order(instance, order);
  const Hypergraph& h = instance.structure();
  SolveTrace t = run_classes(instance, order, width1_decompose(h, order), ordered_hyper_run,
                             Algorithm::DecomApproxHyper, options);
  finish(instance, t);
  Bound& b = t.bound;
  b.alpha = instance.alpha();
  b.vertices = instance.num_vertices();
  b.width = order.width();
  b.rank = h.rank();
  b.formula = "alpha * ((delta - 1)*(gamma - 1) + 1)";
  b.value = b.alpha * ((clamp_min(b.rank, 2) - 1) * (clamp_min(b.width, 1) - 1) + 1);
  return t;
}

SolveTrace solve(const Instance& instance, Algorithm algorithm,
                 const std::optional<std::vector<VertexId>>& sequence,
                 const SolveOptions& options) {
  const Hypergraph& h = instance.structure();
  auto make_order = [&] {
    return sequence ? VertexOrder(h, *sequence) : degeneracy_order(h);
  };
  switch (algorithm) {
    case Algorithm::FixedOrder:
      return fixed_order(instance, make_order(), options);
    case Algorithm::Greedy:
      return greedy(instance, options);
    case Algorithm::OrderedApprox:
      return ordered_approx(instance, make_order(), options);
    case Algorithm::DecomApprox:
      return decom_approx(instance, make_order(), options);
    case Algorithm::BipartiteApprox:
      return bipartite_approx(instance, options);
    case Algorithm::OrderedApproxHyper:
      return ordered_approx_hyper(instance, make_order(), options);
    case Algorithm::DecomApproxHyper:
      return decom_approx_hyper(instance, make_order(), options);
  }
  throw InvalidInput("unknown algorithm");
}

}  // namespace locind
