#include "locind/reductions.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

#include "locind/errors.hpp"

namespace locind {

namespace {


// Scripts every nonempty subset F of `ground` (or only the full set when the
// ground is large) with the first min(|F|, size) edges of F in `pref` order.
std::vector<ScriptEntry> truncated_script(const std::vector<EdgeId>& ground,
                                          const std::vector<EdgeId>& pref, std::size_t size) {
  auto answer_for = [&](const EdgeSet& f) {
    EdgeSet out;
    for (EdgeId e : pref) {
      if (out.size() == size) break;
      if (f.contains(e)) out.insert(e);
    }
    return out;
  };
  std::vector<ScriptEntry> entries;
  if (ground.size() > kFixtureScriptDegree) {
    EdgeSet all(ground);
    entries.push_back({all, answer_for(all)});
    return entries;
  }
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << ground.size()); ++mask) {
    EdgeSet f;
    for (std::size_t i = 0; i < ground.size(); ++i) {
      if ((mask >> i) & 1u) f.insert(ground[i]);
    }
    entries.push_back({f, answer_for(f)});
  }
  return entries;
}

std::vector<LocalSystem> free_systems(const Hypergraph& g) {
  std::vector<LocalSystem> systems;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    systems.push_back(LocalSystem::free(g.incident_set(v)));
  }
  return systems;
}

FixtureInstance star_fixedorder(const FixtureParams& p) {
  const std::int64_t fa = floor(p.alpha);
  if (p.alpha < 1 || p.n < 2 || fa > static_cast<std::int64_t>(p.n) - 1) {
    throw InvalidInput("star_fixedorder needs alpha >= 1, n >= 2 and floor(alpha) <= n - 1");
  }
  // s = 0, t = 1, spoke vertices 2..n-1.
  std::vector<std::pair<VertexId, VertexId>> pairs{{0, 1}};
  for (std::int64_t i = 0; i < fa - 1; ++i) pairs.emplace_back(0, 2 + i);
  for (std::size_t i = 0; i + 2 < p.n; ++i) pairs.emplace_back(1, 2 + i);
  Hypergraph g = Hypergraph::graph(p.n, pairs);
  std::vector<LocalOracle> oracles(p.n, LocalOracle::exhaustive());
  std::vector<EdgeId> ground = g.incident_set(0).to_vector();
  oracles[0] = LocalOracle::scripted(p.alpha, truncated_script(ground, ground, 1));

  FixtureInstance out;
  out.instance = Instance(g, free_systems(g), std::move(oracles));
  out.algorithm = Algorithm::FixedOrder;
  for (VertexId v = 0; v < p.n; ++v) out.order.push_back(v);
  out.expected_ratio = Rational(fa + static_cast<std::int64_t>(p.n) - 2);
  return out;
}

FixtureInstance complete_greedy(const FixtureParams& p) {
  if (p.n < 2) throw InvalidInput("complete_greedy needs n >= 2");
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId a = 0; a < p.n; ++a) {
    for (VertexId b = a + 1; b < p.n; ++b) pairs.emplace_back(a, b);
  }
  Hypergraph g = Hypergraph::graph(p.n, pairs);
  std::vector<LocalOracle> oracles;
  for (VertexId v = 0; v < p.n; ++v) {
    EdgeSet all = g.incident_set(v);
    oracles.push_back(LocalOracle::scripted(Rational(1), {{all, all}}));
  }
  FixtureInstance out;
  out.instance = Instance(g, free_systems(g), std::move(oracles));
  out.algorithm = Algorithm::Greedy;
  out.expected_ratio = Rational(static_cast<std::int64_t>(p.n), 2);
  return out;
}

FixtureInstance uw_greedy(const FixtureParams& p) {
  if (p.n < 2 || p.alpha < 1 || rho_branch(p.alpha, p.n) != 1) {
    throw InvalidInput("uw_greedy needs (alpha - 1)(n - 1) >= alpha(alpha + 1)");
  }
  const std::int64_t c = ceil(Rational(static_cast<std::int64_t>(p.n) - 1) / p.alpha);
  const auto u_count = static_cast<std::size_t>(c + 1);
  if (u_count > p.n) throw InvalidInput("uw_greedy: U does not fit in n vertices");
  // U = 0..c, W = c+1..n-1; edges are all pairs with an endpoint in U.
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId a = 0; a < u_count; ++a) {
    for (VertexId b = a + 1; b < p.n; ++b) pairs.emplace_back(a, b);
  }
  Hypergraph g = Hypergraph::graph(p.n, pairs);
  std::vector<LocalOracle> oracles;
  for (VertexId v = 0; v < p.n; ++v) {
    std::vector<EdgeId> ground = g.incident_set(v).to_vector();
    std::vector<EdgeId> pref;
    if (v < u_count) {
      // Edges into U first, so A_v(E_v) is exactly the U-clique star at v.
      for (EdgeId e : ground) {
        if (g.other(e, v) < u_count) pref.push_back(e);
      }
      for (EdgeId e : ground) {
        if (g.other(e, v) >= u_count) pref.push_back(e);
      }
    } else {
      pref = ground;
    }
    oracles.push_back(LocalOracle::scripted(
        p.alpha, truncated_script(ground, pref, static_cast<std::size_t>(c))));
  }
  FixtureInstance out;
  out.instance = Instance(g, free_systems(g), std::move(oracles));
  out.algorithm = Algorithm::Greedy;
  out.expected_ratio = rho(p.alpha, p.n) - p.alpha / 2;
  out.exact = false;
  return out;
}

}  // namespace

void validate_cnf(const Cnf& cnf) {
  for (std::size_t i = 0; i < cnf.clauses.size(); ++i) {
    const auto& clause = cnf.clauses[i];
    if (clause.empty()) throw InvalidInput("clause " + std::to_string(i + 1) + " is empty");
    std::set<int> seen(clause.begin(), clause.end());
    for (int lit : clause) {
      auto var = static_cast<std::size_t>(std::abs(lit));
      if (lit == 0 || var > cnf.num_variables) {
        throw InvalidInput("clause " + std::to_string(i + 1) + " has literal " +
                           std::to_string(lit) + " outside the declared variables");
      }
      if (seen.count(-lit)) {
        throw InvalidInput("clause " + std::to_string(i + 1) + " is tautological");
      }
    }
  }
}

Cnf parse_dimacs(std::string_view text) {
  Cnf cnf;
  bool header = false;
  std::size_t declared_clauses = 0;
  std::vector<int> current;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first[0] == 'c' || first[0] == '%') continue;
    if (first == "p") {
      std::string format;
      if (header || !(ls >> format >> cnf.num_variables >> declared_clauses) || format != "cnf") {
        throw InvalidInput("bad DIMACS header: " + line);
      }
      header = true;
      continue;
    }
    if (!header) throw InvalidInput("DIMACS clause before the header");
    std::istringstream tokens(line);
    std::string tok;
    while (tokens >> tok) {
      char* end = nullptr;
      long lit = std::strtol(tok.c_str(), &end, 10);
      if (*end != '\0') throw InvalidInput("bad DIMACS literal '" + tok + "'");
      if (lit == 0) {
        cnf.clauses.push_back(current);
        current.clear();
      } else {
        current.push_back(static_cast<int>(lit));
      }
    }
  }
  if (!header) throw InvalidInput("missing DIMACS header");
  if (!current.empty()) cnf.clauses.push_back(current);
  if (cnf.clauses.size() != declared_clauses) {
    throw InvalidInput("DIMACS header declares " + std::to_string(declared_clauses) +
                       " clauses, found " + std::to_string(cnf.clauses.size()));
  }
  validate_cnf(cnf);
  return cnf;
}

std::string to_dimacs(const Cnf& cnf) {
  std::ostringstream out;
  out << "p cnf " << cnf.num_variables << ' ' << cnf.clauses.size() << '\n';
  for (const auto& clause : cnf.clauses) {
    for (int lit : clause) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

std::vector<MaxSatEdge> maxsat_edges(const Cnf& cnf) {
  std::vector<MaxSatEdge> edges;
  for (std::size_t c = 0; c < cnf.clauses.size(); ++c) {
    std::map<std::size_t, bool> vars;
    for (int lit : cnf.clauses[c]) vars[static_cast<std::size_t>(std::abs(lit)) - 1] = lit > 0;
    for (const auto& [x, positive] : vars) edges.push_back({x, c, positive});
  }
  return edges;
}

Instance maxsat_to_instance(const Cnf& cnf) {
  validate_cnf(cnf);
  const std::size_t nv = cnf.num_variables;
  const std::size_t nc = cnf.clauses.size();
  std::vector<MaxSatEdge> edges = maxsat_edges(cnf);
  std::vector<std::pair<VertexId, VertexId>> pairs;
  std::vector<EdgeSet> pos(nv), neg(nv);
  for (EdgeId e = 0; e < edges.size(); ++e) {
    pairs.emplace_back(edges[e].variable, nv + edges[e].clause);
    (edges[e].positive ? pos : neg)[edges[e].variable].insert(e);
  }
  Hypergraph g = Hypergraph::graph(nv + nc, pairs);
  std::vector<LocalSystem> systems;
  Bipartition parts;
  for (VertexId x = 0; x < nv; ++x) {
    systems.push_back(LocalSystem::sign(pos[x], neg[x]));
    parts.left.push_back(x);
  }
  for (std::size_t c = 0; c < nc; ++c) {
    auto v = static_cast<VertexId>(nv + c);
    systems.push_back(LocalSystem::cardinality(g.incident_set(v), 1));
    parts.right.push_back(v);
  }
  return Instance(std::move(g), std::move(systems), {}, std::move(parts), Rational(1));
}

std::vector<bool> decode_assignment(const Cnf& cnf, const EdgeSet& independent) {
  std::vector<bool> assignment(cnf.num_variables, false);
  std::vector<MaxSatEdge> edges = maxsat_edges(cnf);
  for (EdgeId e : independent) {
    if (e >= edges.size()) throw InvalidInput("edge id outside the MAX-SAT instance");
    if (edges[e].positive) assignment[edges[e].variable] = true;
  }
  return assignment;
}

std::size_t satisfied_clauses(const Cnf& cnf, const std::vector<bool>& assignment) {
  std::size_t count = 0;
  for (const auto& clause : cnf.clauses) {
    for (int lit : clause) {
      bool value = assignment[static_cast<std::size_t>(std::abs(lit)) - 1];
      if (value == (lit > 0)) {
        ++count;
        break;
      }
    }
  }
  return count;
}

TimedInstance timed_to_instance(const Hypergraph& g,
                                const std::vector<std::vector<std::int64_t>>& labels,
                                std::size_t k_cap) {
  if (labels.size() != g.num_edges()) {
    throw InvalidInput("timed instance needs one label set per edge");
  }
  std::vector<LocalSystem> systems;
  TimedInstance out;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    TimeLabels local;
    for (EdgeId e : g.incident(v)) local[e] = labels[e];
    systems.push_back(LocalSystem::timed(std::move(local)));
    if (g.degree(v) <= k_cap) {
      out.local_k.push_back(ksystem_param_exact(systems.back(), k_cap));
    } else {
      out.local_k.push_back(std::nullopt);
    }
  }
  out.instance = Instance(g, std::move(systems));
  return out;
}

Instance bmatching_to_instance(const Hypergraph& g, const std::vector<std::size_t>& b) {
  if (b.size() != g.num_vertices()) throw InvalidInput("b-matching needs one capacity per vertex");
  std::vector<LocalSystem> systems;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    systems.push_back(LocalSystem::cardinality(g.incident_set(v), b[v]));
  }
  return Instance(g, std::move(systems), {}, std::nullopt, std::nullopt,
                  SingletonPolicy::Lenient);
}

const char* to_string(Fixture fixture) {
  switch (fixture) {
    case Fixture::StarFixedOrder: return "star_fixedorder";
    case Fixture::CompleteGreedy: return "complete_greedy";
    case Fixture::UwGreedy: return "uw_greedy";
  }
  return "?";
}

Fixture parse_fixture(std::string_view name) {
  for (Fixture f : {Fixture::StarFixedOrder, Fixture::CompleteGreedy, Fixture::UwGreedy}) {
    if (name == to_string(f)) return f;
  }
  throw InvalidInput("unknown fixture '" + std::string(name) + "'");
}

FixtureInstance lowerbound_fixture(Fixture fixture, const FixtureParams& params) {
  switch (fixture) {
    case Fixture::StarFixedOrder: return star_fixedorder(params);
    case Fixture::CompleteGreedy: return complete_greedy(params);
    case Fixture::UwGreedy: return uw_greedy(params);
  }
  throw InvalidInput("unknown fixture");
}

}  // namespace locind
