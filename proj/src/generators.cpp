#include "locind/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "locind/errors.hpp"

namespace locind {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

std::vector<VertexId> permutation(std::size_t n, Rng& rng) {
  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), VertexId{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

std::vector<VertexId> sample_distinct(std::size_t n, std::size_t count, Rng& rng) {
  std::vector<VertexId> pool = permutation(n, rng);
  pool.resize(count);
  std::sort(pool.begin(), pool.end());
  return pool;
}

// Downward closure of a few random subsets plus all singletons, as masks.
std::vector<std::uint32_t> random_closed_family(std::size_t d, Rng& rng) {
  std::set<std::uint32_t> family{0};
  for (std::size_t i = 0; i < d; ++i) family.insert(std::uint32_t{1} << i);
  const std::uint32_t full = (std::uint32_t{1} << d) - 1;
  std::size_t generators = uniform(rng, 1, 3);
  for (std::size_t g = 0; g < generators; ++g) {
    std::uint32_t top = std::uniform_int_distribution<std::uint32_t>(0, full)(rng);
    for (std::uint32_t s = top;; s = (s - 1) & top) {
      family.insert(s);
      if (s == 0) break;
    }
  }
  return {family.begin(), family.end()};
}

}  // namespace

Hypergraph random_gnp(std::size_t n, double p, Rng& rng) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      if (coin(rng, p)) pairs.emplace_back(a, b);
    }
  }
  return Hypergraph::graph(n, pairs);
}

Hypergraph random_tree(std::size_t n, Rng& rng) {
  std::vector<VertexId> label = permutation(n, rng);
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (std::size_t i = 1; i < n; ++i) {
    pairs.emplace_back(label[uniform(rng, 0, i - 1)], label[i]);
  }
  return Hypergraph::graph(n, pairs);
}

Hypergraph random_degenerate(std::size_t n, std::size_t k, Rng& rng) {
  std::vector<VertexId> order = permutation(n, rng);
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t later = n - i - 1;
    std::size_t count = uniform(rng, 0, std::min(k, later));
    for (VertexId j : sample_distinct(later, count, rng)) {
      pairs.emplace_back(order[i], order[i + 1 + j]);
    }
  }
  return Hypergraph::graph(n, pairs);
}

Hypergraph random_uniform_hypergraph(std::size_t n, std::size_t m, std::size_t d, Rng& rng) {
  if (d < 2 || d > n) throw InvalidInput("hyperedge size must lie in [2, n]");
  std::vector<std::vector<VertexId>> edges;
  for (std::size_t i = 0; i < m; ++i) edges.push_back(sample_distinct(n, d, rng));
  return Hypergraph(n, std::move(edges), StructureKind::Hypergraph);
}

Hypergraph random_hypergraph(std::size_t n, std::size_t m, std::size_t max_rank, Rng& rng) {
  if (n < 2 || max_rank < 2) throw InvalidInput("hypergraph needs n >= 2 and max rank >= 2");
  std::vector<std::vector<VertexId>> edges;
  for (std::size_t i = 0; i < m; ++i) {
    edges.push_back(sample_distinct(n, uniform(rng, 2, std::min(max_rank, n)), rng));
  }
  return Hypergraph(n, std::move(edges), StructureKind::Hypergraph);
}

std::pair<Hypergraph, Bipartition> random_bipartite(std::size_t n1, std::size_t n2, double p,
                                                    Rng& rng) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId a = 0; a < n1; ++a) {
    for (std::size_t b = 0; b < n2; ++b) {
      if (coin(rng, p)) pairs.emplace_back(a, static_cast<VertexId>(n1 + b));
    }
  }
  Bipartition parts;
  for (VertexId a = 0; a < n1; ++a) parts.left.push_back(a);
  for (std::size_t b = 0; b < n2; ++b) parts.right.push_back(static_cast<VertexId>(n1 + b));
  return {Hypergraph::graph(n1 + n2, pairs), std::move(parts)};
}

Cnf random_cnf(std::size_t num_variables, std::size_t num_clauses, std::size_t width,
               Rng& rng) {
  if (num_variables == 0 || width == 0) throw InvalidInput("CNF needs variables and width");
  Cnf cnf;
  cnf.num_variables = num_variables;
  for (std::size_t c = 0; c < num_clauses; ++c) {
    std::vector<int> clause;
    for (VertexId x : sample_distinct(num_variables, std::min(width, num_variables), rng)) {
      int lit = static_cast<int>(x) + 1;
      clause.push_back(coin(rng, 0.5) ? lit : -lit);
    }
    cnf.clauses.push_back(std::move(clause));
  }
  return cnf;
}

std::vector<LocalSystem> random_systems(const Hypergraph& h, std::span<const SystemKind> kinds,
                                        Rng& rng) {
  if (kinds.empty()) throw InvalidInput("no system kinds to draw from");
  std::vector<std::vector<std::int64_t>> labels(h.num_edges());
  for (auto& ls : labels) {
    std::size_t count = uniform(rng, 1, 2);
    for (std::size_t i = 0; i < count; ++i) {
      ls.push_back(static_cast<std::int64_t>(uniform(rng, 1, 4)));
    }
  }
  std::vector<LocalSystem> systems;
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    const EdgeSet ground = h.incident_set(v);
    const std::vector<EdgeId> edges = ground.to_vector();
    const std::size_t d = edges.size();
    SystemKind kind = kinds[uniform(rng, 0, kinds.size() - 1)];
    if (kind == SystemKind::Explicit && d > 8) kind = SystemKind::Cardinality;
    switch (kind) {
      case SystemKind::Free:
        systems.push_back(LocalSystem::free(ground));
        break;
      case SystemKind::Cardinality:
        systems.push_back(LocalSystem::cardinality(ground, uniform(rng, 1, std::max<std::size_t>(d, 1))));
        break;
      case SystemKind::Partition: {
        std::size_t count = uniform(rng, 1, 3);
        std::vector<PartitionBlock> blocks(count);
        for (EdgeId e : edges) blocks[uniform(rng, 0, count - 1)].edges.insert(e);
        std::vector<PartitionBlock> kept;
        for (auto& b : blocks) {
          if (b.edges.empty()) continue;
          b.capacity = uniform(rng, 1, b.edges.size());
          kept.push_back(std::move(b));
        }
        systems.push_back(LocalSystem::partition(std::move(kept)));
        break;
      }
      case SystemKind::Timed: {
        TimeLabels local;
        for (EdgeId e : edges) local[e] = labels[e];
        systems.push_back(LocalSystem::timed(std::move(local)));
        break;
      }
      case SystemKind::Sign: {
        EdgeSet pos, neg;
        for (EdgeId e : edges) (coin(rng, 0.5) ? pos : neg).insert(e);
        systems.push_back(LocalSystem::sign(pos, neg));
        break;
      }
      case SystemKind::Explicit:
        systems.push_back(LocalSystem::explicit_family(ground, random_closed_family(d, rng)));
        break;
    }
  }
  return systems;
}

std::vector<LocalOracle> random_oracles(const std::vector<LocalSystem>& systems,
                                        std::span<const OracleStrategy> strategies, Rng& rng,
                                        Rational fallback_alpha) {
  if (strategies.empty()) throw InvalidInput("no oracle strategies to draw from");
  std::vector<LocalOracle> oracles;
  for (const LocalSystem& system : systems) {
    OracleStrategy s = strategies[uniform(rng, 0, strategies.size() - 1)];
    if (s != OracleStrategy::GreedyPref) {
      oracles.push_back(LocalOracle::exhaustive());
      continue;
    }
    std::vector<EdgeId> pref = system.ground().to_vector();
    std::shuffle(pref.begin(), pref.end(), rng);
    Rational alpha = fallback_alpha;
    if (system.ground().size() <= 14) alpha = ksystem_param_exact(system, 14);
    oracles.push_back(LocalOracle::greedy(alpha, std::move(pref)));
  }
  return oracles;
}

}  // namespace locind
