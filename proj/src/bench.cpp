#include "locind/bench.hpp"

#include <array>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <thread>

#include "locind/errors.hpp"
#include "locind/exact.hpp"
#include "locind/generators.hpp"
#include "locind/reductions.hpp"

namespace locind {

namespace {

constexpr std::array<std::pair<Family, const char*>, 9> kFamilies{{
    {Family::Gnp, "gnp"},
    {Family::Tree, "tree"},
    {Family::Degenerate, "degenerate"},
    {Family::Uniform, "uniform"},
    {Family::Hyper, "hyper"},
    {Family::Bipartite, "bipartite"},
    {Family::Maxsat, "maxsat"},
    {Family::Timed, "timed"},
    {Family::Bmatching, "bmatching"},
}};

std::string opt_text(const std::optional<Rational>& r) { return r ? to_string(*r) : "-"; }

std::string float_text(const std::optional<Rational>& r) {
  if (!r) return "-";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", to_double(*r));
  return buf;
}

Instance with_oracles(const Hypergraph& h, std::vector<LocalSystem> systems,
                      const FamilySpec& spec, Rng& rng,
                      std::optional<Bipartition> bp = std::nullopt) {
  std::vector<LocalOracle> oracles = random_oracles(systems, spec.strategies, rng);
  return Instance(h, std::move(systems), std::move(oracles), std::move(bp));
}

BenchRow run_one(const Instance& instance, Algorithm algorithm, const BenchConfig& cfg) {
  BenchRow row;
  row.algorithm = algorithm;
  const Hypergraph& h = instance.structure();
  row.n = h.num_vertices();
  row.m = h.num_edges();
  row.delta = h.rank();
  row.gamma = degeneracy_order(h).width();
  row.alpha = instance.alpha();
  if (algorithm == Algorithm::OrderedApproxHyper) {
    row.guaranteed = downward_edges_meet_only_at_vertex(h, degeneracy_order(h));
  }
  auto start = std::chrono::steady_clock::now();
  try {
    SolveTrace trace = solve(instance, algorithm);
    row.runtime_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    row.size = trace.independent.size();
    row.bound = trace.bound.value;
    row.guaranteed = trace.bound.guaranteed;
    row.k = trace.bound.k;
    row.alpha = trace.bound.alpha;
    row.gamma = uses_vertex_order(algorithm) ? trace.bound.width : row.gamma;
    if (h.num_edges() <= cfg.cap) {
      RatioReport report = verify_ratio(trace, instance, cfg.cap);
      row.opt = report.opt_size;
      row.ratio = report.ratio;
      row.lemma_bound = report.lemma_bound;
      row.status = report.pass() ? "pass" : "fail";
      if (!report.pass()) {
        row.detail = report.theorem_ok ? "residual bound violated" : "theorem bound violated";
      }
    } else {
      row.status = "pass";
      row.detail = "opt not computed";
    }
  } catch (const IndependenceViolation& e) {
    row.status = row.guaranteed ? "error" : "outside";
    row.detail = e.what();
  } catch (const Error& e) {
    row.status = "error";
    row.detail = e.what();
  }
  return row;
}

}  // namespace

const char* to_string(Family family) {
  for (const auto& [f, name] : kFamilies) {
    if (f == family) return name;
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (const auto& [f, n] : kFamilies) {
    if (name == n) return f;
  }
  throw InvalidInput("unknown family '" + std::string(name) + "'");
}

bool is_hypergraph_family(Family family) {
  return family == Family::Uniform || family == Family::Hyper;
}

bool is_bipartite_family(Family family) {
  return family == Family::Bipartite || family == Family::Maxsat;
}

bool compatible(Algorithm algorithm, Family family) {
  if (algorithm == Algorithm::BipartiteApprox) return is_bipartite_family(family);
  if (is_hypergraph_family(family)) return accepts_hypergraphs(algorithm);
  return true;
}

Instance make_instance(const FamilySpec& spec, std::uint64_t seed) {
  Rng rng(seed);
  switch (spec.family) {
    case Family::Gnp: {
      Hypergraph h = random_gnp(spec.n, spec.p, rng);
      return with_oracles(h, random_systems(h, spec.kinds, rng), spec, rng);
    }
    case Family::Tree: {
      Hypergraph h = random_tree(spec.n, rng);
      return with_oracles(h, random_systems(h, spec.kinds, rng), spec, rng);
    }
    case Family::Degenerate: {
      Hypergraph h = random_degenerate(spec.n, spec.k, rng);
      return with_oracles(h, random_systems(h, spec.kinds, rng), spec, rng);
    }
    case Family::Uniform: {
      Hypergraph h = random_uniform_hypergraph(spec.n, spec.m, spec.d, rng);
      return with_oracles(h, random_systems(h, spec.kinds, rng), spec, rng);
    }
    case Family::Hyper: {
      Hypergraph h = random_hypergraph(spec.n, spec.m, spec.d, rng);
      return with_oracles(h, random_systems(h, spec.kinds, rng), spec, rng);
    }
    case Family::Bipartite: {
      auto [h, bp] = random_bipartite(spec.n, spec.right, spec.p, rng);
      return with_oracles(h, random_systems(h, spec.kinds, rng), spec, rng, bp);
    }
    case Family::Maxsat:
      return maxsat_to_instance(random_cnf(spec.n, spec.m, 3, rng));
    case Family::Timed: {
      Hypergraph h = random_gnp(spec.n, spec.p, rng);
      std::vector<std::vector<std::int64_t>> labels(h.num_edges());
      for (auto& ls : labels) {
        ls.push_back(std::uniform_int_distribution<std::int64_t>(1, 4)(rng));
      }
      return timed_to_instance(h, labels).instance;
    }
    case Family::Bmatching: {
      Hypergraph h = random_gnp(spec.n, spec.p, rng);
      std::vector<std::size_t> b(h.num_vertices());
      for (auto& x : b) x = std::uniform_int_distribution<std::size_t>(1, 2)(rng);
      return bmatching_to_instance(h, b);
    }
  }
  throw InvalidInput("unknown family");
}

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  for (Algorithm a : config.algorithms) {
    if (!compatible(a, config.spec.family)) {
      throw UnsupportedInstance(std::string(to_string(a)) + " cannot run on family " +
                                to_string(config.spec.family));
    }
  }
  const std::size_t per = config.algorithms.size();
  std::vector<BenchRow> rows(config.seeds * per);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= config.seeds) return;
      const std::uint64_t seed = config.seed + i;
      Instance instance = make_instance(config.spec, seed);
      for (std::size_t a = 0; a < per; ++a) {
        BenchRow row = run_one(instance, config.algorithms[a], config);
        row.instance_id = std::string(to_string(config.spec.family)) + "-" + std::to_string(i);
        row.seed = seed;
        rows[i * per + a] = std::move(row);
      }
    }
  };
  const unsigned threads = std::max(1u, config.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows, bool timing) {
  std::ostringstream out;
  out << "instance,seed,algorithm,n,m,gamma,k,delta,alpha,size,opt,ratio,ratio_float,bound,"
         "bound_float,guaranteed,lemma_bound,lemma_float,status";
  if (timing) out << ",runtime_ms";
  out << '\n';
  for (const auto& r : rows) {
    out << r.instance_id << ',' << r.seed << ',' << to_string(r.algorithm) << ',' << r.n << ','
        << r.m << ',' << r.gamma << ',' << opt_text(r.k) << ',' << r.delta << ','
        << to_string(r.alpha) << ',' << r.size << ','
        << (r.opt ? std::to_string(*r.opt) : std::string("-")) << ',' << opt_text(r.ratio)
        << ',' << float_text(r.ratio) << ',' << to_string(r.bound) << ','
        << float_text(r.bound) << ',' << (r.guaranteed ? "yes" : "no") << ','
        << opt_text(r.lemma_bound) << ',' << float_text(r.lemma_bound) << ',' << r.status;
    if (timing) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", r.runtime_ms);
      out << ',' << buf;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace locind
