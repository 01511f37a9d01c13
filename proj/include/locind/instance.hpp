#pragma once

#include <optional>
#include <span>
#include <vector>

#include "locind/edge_set.hpp"
#include "locind/hypergraph.hpp"
#include "locind/local_system.hpp"
#include "locind/oracle.hpp"
#include "locind/rational.hpp"

namespace locind {

// How to treat an edge e whose singleton {e} is dependent at an endpoint.
// Strict rejects the instance; Lenient drops such edges and renumbers the rest.
enum class SingletonPolicy { Strict, Lenient };

struct Bipartition {
  std::vector<VertexId> left;   // V1, vertices with local oracles
  std::vector<VertexId> right;  // V2, vertices queried by membership only
  bool operator==(const Bipartition&) const = default;
};

// A locally defined independence system together with its local oracles.
// Immutable after construction.
class Instance {
 public:
  Instance() = default;
  // `oracles` may be empty, meaning exhaustive oracles everywhere.
  Instance(Hypergraph structure, std::vector<LocalSystem> systems,
           std::vector<LocalOracle> oracles = {},
           std::optional<Bipartition> bipartition = std::nullopt,
           std::optional<Rational> declared_k = std::nullopt,
           SingletonPolicy policy = SingletonPolicy::Strict);

  const Hypergraph& structure() const { return structure_; }
  std::size_t num_vertices() const { return structure_.num_vertices(); }
  std::size_t num_edges() const { return structure_.num_edges(); }
  const LocalSystem& system(VertexId v) const { return systems_[v]; }
  const LocalOracle& oracle(VertexId v) const { return oracles_[v]; }
  const std::vector<LocalSystem>& systems() const { return systems_; }
  const std::vector<LocalOracle>& oracles() const { return oracles_; }
  const std::optional<Bipartition>& bipartition() const { return bipartition_; }
  // Upper bound on the k-system parameter of every V2 system, if declared.
  const std::optional<Rational>& declared_k() const { return declared_k_; }
  // Original ids of the edges removed under SingletonPolicy::Lenient.
  const std::vector<EdgeId>& dropped_edges() const { return dropped_; }

  // Largest declared oracle ratio (1 for an instance without vertices).
  Rational alpha() const;
  Rational alpha_over(std::span<const VertexId> vertices) const;

  // I ∩ E_v is a member of I_v for every vertex v.
  bool is_independent(const EdgeSet& edges) const;
  // Same check restricted to the endpoints of the edges in `edges`.
  bool independent_at(VertexId v, const EdgeSet& edges) const;

 private:
  Hypergraph structure_;
  std::vector<LocalSystem> systems_;
  std::vector<LocalOracle> oracles_;
  std::optional<Bipartition> bipartition_;
  std::optional<Rational> declared_k_;
  std::vector<EdgeId> dropped_;
};

}  // namespace locind
