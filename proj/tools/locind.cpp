#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "locind/algorithms.hpp"
#include "locind/bench.hpp"
#include "locind/errors.hpp"
#include "locind/exact.hpp"
#include "locind/generators.hpp"
#include "locind/io.hpp"
#include "locind/reductions.hpp"

using namespace locind;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_file(path, text);
  }
}

// "peel", "identity", or a file of whitespace-separated vertex ids.
std::optional<std::vector<VertexId>> resolve_order(const std::string& source,
                                                   const Instance& instance) {
  if (source == "peel") return std::nullopt;
  std::vector<VertexId> seq;
  if (source == "identity") {
    for (VertexId v = 0; v < instance.num_vertices(); ++v) seq.push_back(v);
    return seq;
  }
  std::istringstream in(read_file(source));
  std::string tok;
  while (in >> tok) {
    if (tok == "order") continue;
    seq.push_back(static_cast<VertexId>(std::stoul(tok)));
  }
  return seq;
}

struct GenOptions {
  std::string what;
  std::string name;
  FamilySpec spec;
  std::string kinds = "free";
  std::string oracles = "exhaustive";
  std::string family_name;
  std::string alpha = "1";
  std::string input;
  std::uint64_t seed = 1;
  std::string out;
};

int run_gen(GenOptions& o) {
  if (o.what == "fixture") {
    FixtureParams params{parse_rational(o.alpha), o.spec.n};
    FixtureInstance fx = lowerbound_fixture(parse_fixture(o.name), params);
    emit(o.out, write_instance(fx.instance));
    std::cerr << "fixture " << o.name << ": run " << to_string(fx.algorithm)
              << (fx.algorithm == Algorithm::FixedOrder ? " --order identity" : "")
              << "; expected ratio " << (fx.exact ? "" : ">= ") << to_string(fx.expected_ratio)
              << '\n';
    return kPass;
  }
  if (o.what == "dimacs") {
    if (o.input.empty()) throw InvalidInput("gen dimacs needs --input");
    emit(o.out, write_instance(maxsat_to_instance(parse_dimacs(read_file(o.input)))));
    return kPass;
  }
  o.spec.family = parse_family(o.what);
  o.spec.kinds.clear();
  for (const auto& k : split_commas(o.kinds)) o.spec.kinds.push_back(parse_system_kind(k));
  o.spec.strategies.clear();
  for (const auto& s : split_commas(o.oracles)) {
    o.spec.strategies.push_back(parse_oracle_strategy(s));
  }
  emit(o.out, write_instance(make_instance(o.spec, o.seed)));
  return kPass;
}

struct SolveOptionsCli {
  std::string instance;
  std::string algorithm;
  std::string order = "peel";
  bool debug = false;
  bool iterations = false;
  std::string out;
};

int run_solve(const SolveOptionsCli& o) {
  Instance instance = load_instance(o.instance);
  SolveTrace trace = solve(instance, parse_algorithm(o.algorithm),
                           resolve_order(o.order, instance), SolveOptions{o.debug});
  emit(o.out, write_result(to_result(trace), o.iterations));
  if (!o.out.empty() && o.out != "-") {
    std::cout << to_string(trace.algorithm) << ": |I|=" << trace.independent.size()
              << " bound=" << to_string(trace.bound.value)
              << (trace.bound.guaranteed ? "" : " (not guaranteed)") << '\n';
  }
  return kPass;
}

struct VerifyOptions {
  std::string instance;
  std::string result;
  std::string algorithm;
  std::string order = "peel";
  std::size_t cap = 0;
};

int run_verify(const VerifyOptions& o) {
  Instance instance = load_instance(o.instance);
  const std::size_t cap = o.cap ? o.cap : default_exact_cap();
  SolveTrace trace;
  if (!o.result.empty()) {
    ResultFile r = read_result(read_file(o.result));
    if (!r.independent.is_subset_of(instance.structure().all_edges()) ||
        !r.residual.is_subset_of(instance.structure().all_edges())) {
      throw InvalidInput("result refers to edges outside the instance");
    }
    trace.algorithm = r.algorithm;
    trace.independent = r.independent;
    trace.residual = r.residual;
    trace.bound = r.bound;
  } else if (!o.algorithm.empty()) {
    trace = solve(instance, parse_algorithm(o.algorithm), resolve_order(o.order, instance));
  } else {
    throw InvalidInput("verify needs --result or --alg");
  }
  RatioReport rep = verify_ratio(trace, instance, cap);
  std::cout << (rep.pass() ? "PASS" : "FAIL") << ' ' << to_string(trace.algorithm)
            << " |I|=" << rep.solution_size << " |OPT|=" << rep.opt_size
            << " bound=" << to_string(rep.bound.value)
            << (rep.bound.guaranteed ? "" : "(not-guaranteed)")
            << " ratio=" << (rep.ratio ? to_string(*rep.ratio) : std::string("-"))
            << " residual_bound="
            << (rep.lemma_bound ? to_string(*rep.lemma_bound) : std::string("-"))
            << (rep.independent ? "" : " dependent") << '\n';
  return rep.pass() ? kPass : kFail;
}

struct BenchOptions {
  FamilySpec spec;
  std::string family = "gnp";
  std::string kinds = "free";
  std::string oracles = "exhaustive";
  std::vector<std::string> algorithms;
  std::uint64_t seed = 1;
  std::size_t seeds = 10;
  std::size_t cap = 0;
  unsigned threads = 1;
  bool timing = false;
  std::string out;
};

int run_bench_cmd(BenchOptions& o) {
  BenchConfig cfg;
  cfg.spec = o.spec;
  cfg.spec.family = parse_family(o.family);
  cfg.spec.kinds.clear();
  for (const auto& k : split_commas(o.kinds)) cfg.spec.kinds.push_back(parse_system_kind(k));
  cfg.spec.strategies.clear();
  for (const auto& s : split_commas(o.oracles)) {
    cfg.spec.strategies.push_back(parse_oracle_strategy(s));
  }
  for (const auto& name : o.algorithms) {
    if (name == "all") {
      for (Algorithm a : all_algorithms()) {
        if (compatible(a, cfg.spec.family)) cfg.algorithms.push_back(a);
      }
    } else {
      cfg.algorithms.push_back(parse_algorithm(name));
    }
  }
  if (cfg.algorithms.empty()) throw InvalidInput("bench needs at least one --alg");
  cfg.seed = o.seed;
  cfg.seeds = o.seeds;
  cfg.cap = o.cap ? o.cap : default_exact_cap();
  cfg.threads = o.threads;
  cfg.timing = o.timing;
  std::vector<BenchRow> rows = run_bench(cfg);
  emit(o.out, bench_csv(rows, o.timing));
  std::size_t bad = 0;
  for (const auto& r : rows) {
    if (r.status == "outside") {
      std::cerr << r.instance_id << ' ' << to_string(r.algorithm) << ": outside guarantee\n";
    } else if (r.status != "pass") {
      ++bad;
      std::cerr << r.instance_id << ' ' << to_string(r.algorithm) << ": " << r.status << ' '
                << r.detail << '\n';
    }
  }
  return bad ? kFail : kPass;
}

void add_family_flags(CLI::App* cmd, FamilySpec& spec, std::string& kinds, std::string& oracles) {
  cmd->add_option("--n", spec.n, "vertices (bipartite: left side; maxsat: variables)");
  cmd->add_option("--m", spec.m, "edges for hypergraph families, clauses for maxsat");
  cmd->add_option("--right", spec.right, "right side of bipartite instances");
  cmd->add_option("--p", spec.p, "edge probability");
  cmd->add_option("--k", spec.k, "width of degenerate graphs");
  cmd->add_option("--d", spec.d, "hyperedge size (uniform) or max rank (hyper)");
  cmd->add_option("--kinds", kinds, "local system kinds, comma separated");
  cmd->add_option("--oracles", oracles, "oracle strategies, comma separated");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Independence systems with local oracles: solve, verify and benchmark"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "write an instance file");
  gen_cmd->add_option("what", gen.what, "family name, 'fixture' or 'dimacs'")->required();
  gen_cmd->add_option("name", gen.name, "fixture name");
  add_family_flags(gen_cmd, gen.spec, gen.kinds, gen.oracles);
  gen_cmd->add_option("--alpha", gen.alpha, "fixture oracle ratio");
  gen_cmd->add_option("--input", gen.input, "DIMACS file for 'dimacs'");
  gen_cmd->add_option("--seed", gen.seed, "random seed");
  gen_cmd->add_option("-o,--out", gen.out, "output path (default stdout)");

  SolveOptionsCli sol;
  auto* solve_cmd = app.add_subcommand("solve", "run one algorithm and write a result file");
  solve_cmd->add_option("--instance", sol.instance)->required();
  solve_cmd->add_option("--alg", sol.algorithm)->required();
  solve_cmd->add_option("--order", sol.order, "peel, identity or a file of vertex ids");
  solve_cmd->add_flag("--debug", sol.debug, "check loop invariants every iteration");
  solve_cmd->add_flag("--iterations", sol.iterations, "write per-iteration audit lines");
  solve_cmd->add_option("-o,--out", sol.out, "output path (default stdout)");

  VerifyOptions ver;
  auto* verify_cmd = app.add_subcommand("verify", "check a solution against the exact optimum");
  verify_cmd->add_option("--instance", ver.instance)->required();
  verify_cmd->add_option("--result", ver.result, "result file from solve");
  verify_cmd->add_option("--alg", ver.algorithm, "solve first with this algorithm");
  verify_cmd->add_option("--order", ver.order, "peel, identity or a file of vertex ids");
  verify_cmd->add_option("--cap", ver.cap, "exact search cap (default LOCIND_EXACT_CAP or 22)");

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "sweep a random family and write CSV");
  bench_cmd->add_option("--family", bench.family);
  add_family_flags(bench_cmd, bench.spec, bench.kinds, bench.oracles);
  bench_cmd->add_option("--alg", bench.algorithms, "algorithm name or 'all' (repeatable)");
  bench_cmd->add_option("--seed", bench.seed);
  bench_cmd->add_option("--seeds", bench.seeds, "number of instances");
  bench_cmd->add_option("--cap", bench.cap, "exact search cap");
  bench_cmd->add_option("--threads", bench.threads);
  bench_cmd->add_flag("--timing", bench.timing, "append a runtime column");
  bench_cmd->add_option("-o,--out", bench.out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*solve_cmd) return run_solve(sol);
    if (*verify_cmd) return run_verify(ver);
    if (*bench_cmd) return run_bench_cmd(bench);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UnsupportedInstance& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "failure: " << e.what() << '\n';
    return kFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
