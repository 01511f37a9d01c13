// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when
// any criterion fails.

#include <chrono>
#include <cstdio>
#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "brute.hpp"
#include "locind/algorithms.hpp"
#include "locind/bench.hpp"
#include "locind/errors.hpp"
#include "locind/exact.hpp"
#include "locind/generators.hpp"
#include "locind/ordering.hpp"
#include "locind/reductions.hpp"

using namespace locind;

namespace {

const std::vector<SystemKind> kAllKinds{SystemKind::Free,  SystemKind::Cardinality,
                                        SystemKind::Partition, SystemKind::Timed,
                                        SystemKind::Sign,  SystemKind::Explicit};
const std::vector<OracleStrategy> kMixed{OracleStrategy::Exhaustive, OracleStrategy::GreedyPref};

Rational q(std::size_t x) { return Rational(static_cast<std::int64_t>(x)); }

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

// Test-side restatement of the greedy ratio.
Rational rho_reference(const Rational& a, std::size_t n) {
  Rational m = q(n) - 1;
  if ((a - 1) * m >= a * (a + 1)) return a + (2 * a - 1) / (2 * a) * m - Rational(1, 2);
  if ((a - 1) * m >= a) return a + a / (a + 1) * m;
  return q(n) / 2;
}

std::size_t up_width(const Hypergraph& h, const std::vector<VertexId>& seq, const EdgeSet& edges) {
  std::vector<std::size_t> pos(h.num_vertices()), up(h.num_vertices(), 0);
  for (std::size_t i = 0; i < seq.size(); ++i) pos[seq[i]] = i;
  for (auto e : edges) {
    auto vs = h.edge(e);
    VertexId last = vs[0];
    for (auto v : vs)
      if (pos[v] > pos[last]) last = v;
    for (auto v : vs)
      if (v != last) ++up[v];
  }
  std::size_t w = 0;
  for (auto u : up) w = std::max(w, u);
  return w;
}

// |OPT| <= bound * |I| with the bound restated from the instance parameters.
Rational expected_bound(Algorithm alg, const Instance& inst, const SolveTrace& t) {
  const auto& h = inst.structure();
  Rational alpha = inst.alpha();
  std::size_t n = std::max<std::size_t>(h.num_vertices(), 2);
  std::size_t gamma = std::max<std::size_t>(brute::width(h, t.order), 1);
  std::size_t delta = std::max<std::size_t>(h.rank(), 2);
  switch (alg) {
    case Algorithm::FixedOrder:
      return alpha + q(n) - 2;
    case Algorithm::Greedy:
      return rho_reference(alpha, std::max<std::size_t>(h.num_vertices(), 1));
    case Algorithm::OrderedApprox:
      return alpha + 2 * q(gamma) - 2;
    case Algorithm::DecomApprox:
      return alpha * q(gamma);
    case Algorithm::BipartiteApprox: {
      const auto& bp = *inst.bipartition();
      Rational k(1);
      if (inst.declared_k()) {
        k = *inst.declared_k();
      } else {
        for (auto v : bp.right) k = std::max(k, brute::kparam(inst.system(v)));
      }
      return inst.alpha_over(bp.left) + k;
    }
    case Algorithm::OrderedApproxHyper:
      return alpha + q(delta) * (q(gamma) - 1);
    case Algorithm::DecomApproxHyper:
      return alpha * (q(delta - 1) * q(gamma - 1) + 1);
  }
  return Rational(0);
}

Instance with_random_systems(const Hypergraph& h, std::mt19937_64& rng,
                             std::optional<Bipartition> bp = std::nullopt) {
  auto systems = random_systems(h, kAllKinds, rng);
  auto oracles = random_oracles(systems, kMixed, rng);
  return Instance(h, systems, oracles, bp);
}

Outcome criterion1() {
  Outcome out;
  std::mt19937_64 rng(101);
  std::vector<SystemKind> kinds{SystemKind::Free, SystemKind::Cardinality, SystemKind::Sign,
                                SystemKind::Timed};
  for (int i = 0; i < 200; ++i) {
    auto tree = random_tree(2 + i % 11, rng);
    Instance inst(tree, random_systems(tree, kinds, rng));
    auto t = ordered_approx(inst, degeneracy_order(tree));
    auto opt = brute::opt(inst);
    if (t.independent.size() != opt || !brute::independent(inst, t.independent))
      out.fail("tree " + std::to_string(i) + ": |I|=" + std::to_string(t.independent.size()) +
               " |OPT|=" + std::to_string(opt));
  }
  out.detail = out.ok ? "200 trees, |I| = |OPT|" : out.detail;
  return out;
}

Outcome criterion2() {
  Outcome out;
  std::mt19937_64 rng(202);
  std::ostringstream summary;
  for (auto alg : all_algorithms()) {
    int done = 0, attempts = 0;
    Rational worst(0);
    while (done < 500 && attempts < 100000) {
      ++attempts;
      std::optional<Instance> inst;
      std::optional<std::vector<VertexId>> seq;
      if (alg == Algorithm::BipartiteApprox) {
        auto [g, bp] = random_bipartite(1 + rng() % 5, 1 + rng() % 4, 0.5, rng);
        if (g.num_edges() == 0 || g.num_edges() > 14) continue;
        inst.emplace(with_random_systems(g, rng, bp));
      } else if (accepts_hypergraphs(alg) && done % 5 != 4) {
        auto h = random_hypergraph(3 + rng() % 5, 1 + rng() % 10, 3, rng);
        inst.emplace(with_random_systems(h, rng));
      } else {
        auto g = random_gnp(2 + rng() % 8, 0.25 + 0.1 * static_cast<double>(rng() % 5), rng);
        if (g.num_edges() == 0 || g.num_edges() > 14) continue;
        inst.emplace(with_random_systems(g, rng));
      }
      const auto& h = inst->structure();
      if (alg == Algorithm::FixedOrder) {
        std::vector<VertexId> s(h.num_vertices());
        std::iota(s.begin(), s.end(), 0);
        std::shuffle(s.begin(), s.end(), rng);
        seq = s;
      }
      if (alg == Algorithm::OrderedApproxHyper &&
          !downward_edges_meet_only_at_vertex(h, degeneracy_order(h)))
        continue;
      SolveTrace t;
      try {
        t = solve(*inst, alg, seq);
      } catch (const Error& e) {
        out.fail(std::string(to_string(alg)) + " threw: " + e.what());
        break;
      }
      ++done;
      auto bound = expected_bound(alg, *inst, t);
      if (bound != t.bound.value || !t.bound.guaranteed)
        out.fail(std::string(to_string(alg)) + ": reported bound " + to_string(t.bound.value) +
                 " expected " + to_string(bound));
      if (!brute::independent(*inst, t.independent))
        out.fail(std::string(to_string(alg)) + ": dependent output");
      auto opt = q(brute::opt(*inst));
      auto size = q(t.independent.size());
      if (opt > bound * size)
        out.fail(std::string(to_string(alg)) + ": |OPT|=" + to_string(opt) + " > " +
                 to_string(bound) + " * " + to_string(size));
      if (size > 0) worst = std::max(worst, opt / size);
    }
    if (done < 500) out.fail(std::string(to_string(alg)) + ": only " + std::to_string(done) + " runs");
    summary << to_string(alg) << "=" << done << " (max ratio " << to_string(worst) << ") ";
  }
  if (out.ok) out.detail = summary.str();
  return out;
}

Outcome criterion3() {
  Outcome out;
  std::ostringstream summary;

  auto star = lowerbound_fixture(Fixture::StarFixedOrder, {Rational(1), 6});
  auto st = solve(star.instance, star.algorithm, star.order);
  Rational star_ratio = q(brute::opt(star.instance)) / q(st.independent.size());
  if (star_ratio != Rational(5)) out.fail("star ratio " + to_string(star_ratio));
  summary << "star=" << to_string(star_ratio) << " ";

  // All-free systems: OPT is the whole edge set once it is independent.
  auto all_free_opt = [](const Instance& inst) -> std::size_t {
    auto all = inst.structure().all_edges();
    return brute::independent(inst, all) ? all.size() : 0;
  };

  auto kn = lowerbound_fixture(Fixture::CompleteGreedy, {Rational(1), 8});
  auto kt = solve(kn.instance, kn.algorithm);
  Rational kn_ratio = q(all_free_opt(kn.instance)) / q(kt.independent.size());
  if (kn_ratio != Rational(4)) out.fail("K8 ratio " + to_string(kn_ratio));
  summary << "K8=" << to_string(kn_ratio) << " ";

  auto uw = lowerbound_fixture(Fixture::UwGreedy, {Rational(2), 10});
  auto ut = solve(uw.instance, uw.algorithm);
  Rational uw_ratio = q(all_free_opt(uw.instance)) / q(ut.independent.size());
  Rational target = rho_reference(Rational(2), 10) - Rational(2) / 2;
  if (uw_ratio < target) out.fail("uw ratio " + to_string(uw_ratio) + " < " + to_string(target));
  if (max_independent(uw.instance, uw.instance.structure().all_edges(), 64).opt_size !=
      uw.instance.num_edges())
    out.fail("uw optimum disagrees with the exact solver");
  summary << "uw=" << to_string(uw_ratio) << " >= " << to_string(target);
  if (out.ok) out.detail = summary.str();
  return out;
}

Outcome criterion4() {
  Outcome out;
  for (std::size_t n = 1; n <= 100; ++n)
    if (rho(Rational(1), n) != q(n) / 2) out.fail("rho(1," + std::to_string(n) + ")");
  if (rho(Rational(2), 7) != Rational(6)) out.fail("rho(2,7)");
  if (rho(Rational(2), 4) != Rational(4)) out.fail("rho(2,4)");
  std::size_t points = 0;
  for (std::int64_t num = 4; num <= 40; ++num) {
    Rational a(num, 4);
    for (std::size_t n = 1; n <= 100; ++n) {
      ++points;
      Rational m = q(n) - 1;
      bool b1 = (a - 1) * m >= a * (a + 1);
      bool b2 = a <= (a - 1) * m && (a - 1) * m < a * (a + 1);
      bool b3 = (a - 1) * m < a;
      int holding = b1 + b2 + b3;
      int expect = b1 ? 1 : b2 ? 2 : 3;
      if (holding != 1) out.fail("branches overlap or miss at alpha " + to_string(a));
      if (rho_branch(a, n) != expect || rho(a, n) != rho_reference(a, n))
        out.fail("rho mismatch at alpha " + to_string(a) + " n " + std::to_string(n));
    }
  }
  if (out.ok) out.detail = "examples hold; " + std::to_string(points) + " grid points in exactly one branch";
  return out;
}

Outcome criterion5() {
  Outcome out;
  std::mt19937_64 rng(505);
  for (int i = 0; i < 100; ++i) {
    auto f = random_cnf(3 + rng() % 4, 1 + rng() % 10, 3, rng);
    auto inst = maxsat_to_instance(f);
    auto t = bipartite_approx(inst);
    auto assignment = decode_assignment(f, t.independent);
    std::uint64_t mask = 0;
    for (std::size_t v = 0; v < assignment.size(); ++v)
      if (assignment[v]) mask |= std::uint64_t{1} << v;
    auto sat = brute::satisfied(f, mask);
    auto opt = brute::maxsat_opt(f);
    if (sat != satisfied_clauses(f, assignment)) out.fail("decoded count disagrees on cnf " + std::to_string(i));
    if (sat < t.independent.size()) out.fail("assignment misses a selected clause on cnf " + std::to_string(i));
    if (2 * sat < opt) out.fail("cnf " + std::to_string(i) + ": " + std::to_string(sat) + " < ceil(" + std::to_string(opt) + "/2)");
  }
  if (out.ok) out.detail = "100 cnfs, decoded assignments re-verified";
  return out;
}

Outcome criterion6() {
  Outcome out;
  std::mt19937_64 rng(606);
  int done = 0;
  Rational worst(0);
  while (done < 100) {
    auto h = random_gnp(3 + rng() % 4, 0.5, rng);
    if (h.num_edges() == 0 || h.num_edges() > 10) continue;
    Instance inst(h, random_systems(h, kAllKinds, rng));
    Rational k(1);
    for (VertexId v = 0; v < h.num_vertices(); ++v) k = std::max(k, brute::kparam(inst.system(v)));
    auto global = global_ksystem_param(inst);
    if (global != brute::kparam(inst)) out.fail("global parameter disagrees with brute force");
    if (global > 2 * k) out.fail("global " + to_string(global) + " > 2 * " + to_string(k));
    worst = std::max(worst, global / k);
    ++done;
  }
  if (out.ok) out.detail = "100 instances, max global/local " + to_string(worst);
  return out;
}

Outcome criterion7() {
  Outcome out;
  std::mt19937_64 rng(707);
  for (int i = 0; i < 200; ++i) {
    auto g = random_gnp(3 + rng() % 8, 0.4, rng);
    auto inst = with_random_systems(g, rng);
    std::vector<VertexId> seq(g.num_vertices());
    std::iota(seq.begin(), seq.end(), 0);
    if (i % 2) std::shuffle(seq.begin(), seq.end(), rng);
    VertexOrder order(g, seq);
    auto a = ordered_approx(inst, order);
    auto b = ordered_approx_hyper(inst, order);
    if (a.independent != b.independent || a.parts != b.parts)
      out.fail("graph run " + std::to_string(i) + " differs");
    auto classes = forest_decompose(g, order);
    for (const auto& c : classes)
      if (up_width(g, seq, c) > 1) out.fail("forest class wider than 1");
  }
  for (int i = 0; i < 300; ++i) {
    auto h = random_hypergraph(4 + rng() % 6, 1 + rng() % 12, 2 + rng() % 3, rng);
    auto order = degeneracy_order(h);
    auto classes = width1_decompose(h, order);
    std::size_t gamma = std::max<std::size_t>(brute::width(h, order.sequence()), 1);
    std::size_t delta = std::max<std::size_t>(h.rank(), 2);
    if (classes.size() > (delta - 1) * (gamma - 1) + 1) out.fail("too many width-1 classes");
    EdgeSet all;
    for (const auto& c : classes) {
      if (up_width(h, order.sequence(), c) > 1) out.fail("width-1 class wider than 1");
      if (all.intersects(c)) out.fail("classes overlap");
      all |= c;
    }
    if (all != h.all_edges()) out.fail("classes do not cover the edges");
  }
  if (out.ok) out.detail = "200 graph runs identical; 300 hypergraph decompositions within bound";
  return out;
}

Outcome criterion8() {
  Outcome out;
  std::mt19937_64 rng(808);
  std::size_t checked = 0;
  for (int round = 0; round < 40; ++round) {
    Hypergraph h = round % 2 ? random_hypergraph(6, 10, 3, rng) : random_gnp(8, 0.6, rng);
    for (const auto& s : random_systems(h, kAllKinds, rng)) {
      if (s.ground().size() > 10) continue;
      auto ground = s.ground().to_vector();
      auto k = brute::kparam(s);
      std::vector<EdgeId> pref = ground;
      std::shuffle(pref.begin(), pref.end(), rng);
      std::vector<ScriptEntry> script;
      for (int j = 0; j < 3; ++j) {
        auto f = brute::subset(ground, rng());
        bool seen = false;
        for (const auto& entry : script) seen |= entry.query == f;
        if (!seen) script.push_back({f, exhaustive_local_max(s, f)});
      }
      std::vector<std::pair<std::string, LocalOracle>> oracles{
          {"exhaustive", LocalOracle::exhaustive()},
          {"greedy", LocalOracle::greedy(k, pref)},
          {"scripted", LocalOracle::scripted(Rational(1), script)},
          {"scripted-greedy",
           LocalOracle::scripted(k, {{s.ground(), exhaustive_local_max(s, s.ground())}},
                                 OracleStrategy::GreedyPref, pref)}};
      for (const auto& [name, oracle] : oracles) {
        auto report = validate_oracle(s, oracle);
        ++checked;
        if (!report.valid) out.fail(name + " rejected on " + s.descriptor() + ": " + report.first_violation);
      }
      if (!ground.empty()) {
        EdgeSet f{ground.front()};
        auto broken = LocalOracle::scripted(Rational(1), {{f, EdgeSet{}}});
        if (validate_oracle(s, broken).valid) out.fail("empty-answer oracle accepted");
        ++checked;
      }
    }
  }
  if (out.ok) out.detail = std::to_string(checked) + " validations";
  return out;
}

Outcome criterion9() {
  Outcome out;
  auto suite = [](unsigned threads) {
    std::string csv;
    for (auto f : {Family::Gnp, Family::Tree, Family::Degenerate, Family::Uniform, Family::Hyper,
                   Family::Bipartite, Family::Maxsat, Family::Timed, Family::Bmatching}) {
      BenchConfig config;
      config.spec.family = f;
      config.spec.kinds = kAllKinds;
      config.spec.strategies = kMixed;
      for (auto a : all_algorithms())
        if (compatible(a, f)) config.algorithms.push_back(a);
      config.seed = 99;
      config.seeds = 8;
      config.threads = threads;
      csv += bench_csv(run_bench(config), false);
    }
    return csv;
  };
  auto first = suite(1), second = suite(1), threaded = suite(4);
  if (first != second) out.fail("repeat run differs");
  if (first != threaded) out.fail("threaded run differs");
  if (first.find(",fail,") != std::string::npos || first.find(",error,") != std::string::npos)
    out.fail("bench rows report failures");
  if (out.ok) out.detail = std::to_string(first.size()) + " bytes identical across runs and thread counts";
  return out;
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"forest optimality", criterion1},   {"theorem bound sweep", criterion2},
      {"lower-bound fixtures", criterion3}, {"rho function", criterion4},
      {"max-sat pipeline", criterion5},     {"2k-system lemma", criterion6},
      {"equivalence and decompositions", criterion7},
      {"oracle validation", criterion8},    {"bench determinism", criterion9}};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[i].second();
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %zu %s: %s (%.2fs)\n", out.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                out.detail.c_str(), secs);
    std::fflush(stdout);
    failures += !out.ok;
  }
  return failures == 0 ? 0 : 1;
}
