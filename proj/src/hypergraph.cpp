#include "locind/hypergraph.hpp"

#include <algorithm>
#include <string>

#include "locind/errors.hpp"

namespace locind {

Hypergraph::Hypergraph(std::size_t num_vertices, std::vector<std::vector<VertexId>> edges,
                       StructureKind kind)
    : kind_(kind), edges_(std::move(edges)), incidence_(num_vertices) {
  for (std::size_t id = 0; id < edges_.size(); ++id) {
    auto& e = edges_[id];
    std::sort(e.begin(), e.end());
    if (e.size() < 2) {
      throw InvalidInput("edge " + std::to_string(id) + " has fewer than two vertices");
    }
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw InvalidInput("edge " + std::to_string(id) + " repeats a vertex");
    }
    if (e.back() >= num_vertices) {
      throw InvalidInput("edge " + std::to_string(id) + " references vertex " +
                         std::to_string(e.back()) + " out of range");
    }
    if (kind_ == StructureKind::Graph && e.size() != 2) {
      throw InvalidInput("graph edge " + std::to_string(id) + " must have two endpoints");
    }
    rank_ = std::max(rank_, e.size());
    for (VertexId v : e) incidence_[v].push_back(static_cast<EdgeId>(id));
  }
}

Hypergraph Hypergraph::graph(std::size_t num_vertices,
                             const std::vector<std::pair<VertexId, VertexId>>& edges) {
  std::vector<std::vector<VertexId>> lists;
  lists.reserve(edges.size());
  for (auto [u, v] : edges) lists.push_back({u, v});
  return Hypergraph(num_vertices, std::move(lists), StructureKind::Graph);
}

EdgeSet Hypergraph::incident_set(VertexId v) const { return EdgeSet(incident(v)); }

bool Hypergraph::contains_vertex(EdgeId e, VertexId v) const {
  return std::binary_search(edges_[e].begin(), edges_[e].end(), v);
}

InducedSubhypergraph induced_subhypergraph(const Hypergraph& h,
                                           std::span<const VertexId> vertices) {
  std::vector<char> keep(h.num_vertices(), 0);
  for (VertexId v : vertices) {
    if (v >= h.num_vertices()) throw InvalidInput("induced vertex out of range");
    keep[v] = 1;
  }
  std::vector<std::vector<VertexId>> edges;
  std::vector<EdgeId> origin;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    std::vector<VertexId> kept;
    for (VertexId v : h.edge(e)) {
      if (keep[v]) kept.push_back(v);
    }
    if (kept.size() >= 2) {
      edges.push_back(std::move(kept));
      origin.push_back(e);
    }
  }
  return {Hypergraph(h.num_vertices(), std::move(edges), h.kind()), std::move(origin)};
}

}  // namespace locind
