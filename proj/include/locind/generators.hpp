#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "locind/hypergraph.hpp"
#include "locind/instance.hpp"
#include "locind/local_system.hpp"
#include "locind/oracle.hpp"
#include "locind/reductions.hpp"

namespace locind {

using Rng = std::mt19937_64;

// G(n, p) on vertices 0..n-1; edges listed in lexicographic pair order.
Hypergraph random_gnp(std::size_t n, double p, Rng& rng);
// Uniform random recursive tree on shuffled labels.
Hypergraph random_tree(std::size_t n, Rng& rng);
// Random vertex order; each vertex gets up to k edges to distinct uniformly
// random later vertices, so that order has width at most k.
Hypergraph random_degenerate(std::size_t n, std::size_t k, Rng& rng);
// m edges of exactly d distinct vertices (d <= n).
Hypergraph random_uniform_hypergraph(std::size_t n, std::size_t m, std::size_t d, Rng& rng);
// m edges with sizes uniform in [2, max_rank].
Hypergraph random_hypergraph(std::size_t n, std::size_t m, std::size_t max_rank, Rng& rng);
// Bipartite G(n1, n2, p); left vertices are 0..n1-1.
std::pair<Hypergraph, Bipartition> random_bipartite(std::size_t n1, std::size_t n2, double p,
                                                    Rng& rng);
// Each clause has min(width, num_variables) distinct variables with random
// signs.
Cnf random_cnf(std::size_t num_variables, std::size_t num_clauses, std::size_t width, Rng& rng);

// One random local system per vertex, kind drawn uniformly from `kinds`.
// Timed systems share one global label set per edge. Explicit systems are
// random downward closures that contain every singleton; they fall back to
// cardinality systems above 8 incident edges.
std::vector<LocalSystem> random_systems(const Hypergraph& h, std::span<const SystemKind> kinds,
                                        Rng& rng);

// Per-vertex oracles with strategies drawn from `strategies`. GreedyPref
// oracles get a random preference and the exact k-system parameter as alpha
// (or `fallback_alpha` when the vertex is past the enumeration cap).
std::vector<LocalOracle> random_oracles(const std::vector<LocalSystem>& systems,
                                        std::span<const OracleStrategy> strategies, Rng& rng,
                                        Rational fallback_alpha = Rational(2));

}  // namespace locind
