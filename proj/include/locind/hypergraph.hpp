#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "locind/edge_set.hpp"

namespace locind {

enum class StructureKind { Graph, Hypergraph };

// Undirected (hyper)graph over dense vertex ids 0..n-1 and dense edge ids
// 0..m-1. A graph is the special case where every edge has exactly two
// endpoints. Parallel edges are allowed (they carry distinct ids); loops and
// repeated vertices inside an edge are not.
class Hypergraph {
 public:
  Hypergraph() = default;
  // Each edge is a vertex list; it is stored sorted. Throws InvalidInput on
  // an out-of-range vertex, a repeated vertex, an edge with fewer than two
  // vertices, or a Graph-kind edge with more than two.
  Hypergraph(std::size_t num_vertices, std::vector<std::vector<VertexId>> edges,
             StructureKind kind = StructureKind::Hypergraph);

  static Hypergraph graph(std::size_t num_vertices,
                          const std::vector<std::pair<VertexId, VertexId>>& edges);

  std::size_t num_vertices() const { return incidence_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  StructureKind kind() const { return kind_; }
  // True when every edge has exactly two endpoints.
  bool is_graph() const { return rank_ <= 2; }
  // Maximum edge size (delta); 0 for an edgeless structure.
  std::size_t rank() const { return rank_; }

  std::span<const VertexId> edge(EdgeId e) const { return edges_[e]; }
  const std::vector<std::vector<VertexId>>& edges() const { return edges_; }
  // E_v in ascending edge id order.
  std::span<const EdgeId> incident(VertexId v) const { return incidence_[v]; }
  EdgeSet incident_set(VertexId v) const;
  std::size_t degree(VertexId v) const { return incidence_[v].size(); }
  EdgeSet all_edges() const { return EdgeSet::range(edges_.size()); }

  // Other endpoint of a two-vertex edge.
  VertexId other(EdgeId e, VertexId v) const {
    return edges_[e][0] == v ? edges_[e][1] : edges_[e][0];
  }
  bool contains_vertex(EdgeId e, VertexId v) const;

  bool operator==(const Hypergraph& other) const {
    return kind_ == other.kind_ && edges_ == other.edges_ &&
           incidence_.size() == other.incidence_.size();
  }

 private:
  StructureKind kind_ = StructureKind::Graph;
  std::vector<std::vector<VertexId>> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
  std::size_t rank_ = 0;
};

struct InducedSubhypergraph {
  // Same vertex ids as the parent; edges are the surviving intersections.
  Hypergraph structure;
  // origin[i] is the parent edge id of edge i.
  std::vector<EdgeId> origin;
};

// G[W]: every edge e with |e ∩ W| >= 2 survives as e ∩ W. Distinct parent
// edges with equal intersections stay distinct (parallel) so that every
// surviving edge keeps its parent id.
InducedSubhypergraph induced_subhypergraph(const Hypergraph& h,
                                           std::span<const VertexId> vertices);

}  // namespace locind
