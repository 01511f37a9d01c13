#include "locind/instance.hpp"

#include <string>

#include "locind/errors.hpp"

namespace locind {

Instance::Instance(Hypergraph structure, std::vector<LocalSystem> systems,
                   std::vector<LocalOracle> oracles, std::optional<Bipartition> bipartition,
                   std::optional<Rational> declared_k, SingletonPolicy policy)
    : structure_(std::move(structure)),
      systems_(std::move(systems)),
      oracles_(std::move(oracles)),
      bipartition_(std::move(bipartition)),
      declared_k_(declared_k) {
  const std::size_t n = structure_.num_vertices();
  if (systems_.size() != n) {
    throw InvalidInput("expected " + std::to_string(n) + " local systems, got " +
                       std::to_string(systems_.size()));
  }
  if (oracles_.empty()) oracles_.assign(n, LocalOracle::exhaustive());
  if (oracles_.size() != n) {
    throw InvalidInput("expected " + std::to_string(n) + " local oracles, got " +
                       std::to_string(oracles_.size()));
  }
  for (VertexId v = 0; v < n; ++v) {
    if (systems_[v].ground() != structure_.incident_set(v)) {
      throw InvalidInput("local system of vertex " + std::to_string(v) +
                         " is not defined on its incident edges " +
                         structure_.incident_set(v).to_string());
    }
    if (oracles_[v].alpha() < 1) {
      throw InvalidInput("oracle of vertex " + std::to_string(v) + " declares alpha < 1");
    }
  }
  if (declared_k_ && *declared_k_ < 1) throw InvalidInput("declared k must be at least 1");

  std::vector<EdgeId> offending;
  for (EdgeId e = 0; e < structure_.num_edges(); ++e) {
    for (VertexId v : structure_.edge(e)) {
      if (!systems_[v].accepts(EdgeSet{e})) {
        offending.push_back(e);
        break;
      }
    }
  }
  if (!offending.empty()) {
    if (policy == SingletonPolicy::Strict) {
      throw InvalidInput("edge " + std::to_string(offending.front()) +
                         " is not independent on its own at one of its endpoints");
    }
    std::vector<EdgeId> new_ids(structure_.num_edges(), LocalSystem::kDropped);
    std::vector<std::vector<VertexId>> kept;
    std::size_t next = 0;
    for (EdgeId e = 0; e < structure_.num_edges(); ++e) {
      if (next < offending.size() && offending[next] == e) {
        ++next;
        continue;
      }
      new_ids[e] = static_cast<EdgeId>(kept.size());
      kept.emplace_back(structure_.edge(e).begin(), structure_.edge(e).end());
    }
    structure_ = Hypergraph(n, std::move(kept), structure_.kind());
    for (auto& s : systems_) s = s.remap(new_ids);
    for (auto& o : oracles_) o = o.remap(new_ids);
    dropped_ = std::move(offending);
  }

  if (bipartition_) {
    std::vector<int> side(n, -1);
    for (VertexId v : bipartition_->left) {
      if (v >= n || side[v] != -1) throw InvalidInput("invalid bipartition vertex list");
      side[v] = 0;
    }
    for (VertexId v : bipartition_->right) {
      if (v >= n || side[v] != -1) throw InvalidInput("invalid bipartition vertex list");
      side[v] = 1;
    }
    for (VertexId v = 0; v < n; ++v) {
      if (side[v] == -1) throw InvalidInput("bipartition misses vertex " + std::to_string(v));
    }
    for (EdgeId e = 0; e < structure_.num_edges(); ++e) {
      auto ends = structure_.edge(e);
      if (ends.size() != 2 || side[ends[0]] == side[ends[1]]) {
        throw InvalidInput("edge " + std::to_string(e) + " does not cross the bipartition");
      }
    }
  }
}

Rational Instance::alpha() const {
  Rational best(1);
  for (const auto& o : oracles_) best = std::max(best, o.alpha());
  return best;
}

Rational Instance::alpha_over(std::span<const VertexId> vertices) const {
  Rational best(1);
  for (VertexId v : vertices) best = std::max(best, oracles_[v].alpha());
  return best;
}

bool Instance::independent_at(VertexId v, const EdgeSet& edges) const {
  return systems_[v].accepts(edges & systems_[v].ground());
}

bool Instance::is_independent(const EdgeSet& edges) const {
  if (!edges.is_subset_of(structure_.all_edges())) return false;
  for (VertexId v = 0; v < num_vertices(); ++v) {
    if (!independent_at(v, edges)) return false;
  }
  return true;
}

}  // namespace locind
