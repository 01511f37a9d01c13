#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "locind/edge_set.hpp"
#include "locind/hypergraph.hpp"

namespace locind {

// A linear order on the vertices together with the upward and downward edge
// sets it induces over an active edge set. For a graph, an edge is upward at
// its earlier endpoint and downward at its later one. For a hypergraph, an
// edge is upward at every vertex that has a later vertex in the edge and
// downward exactly at its last vertex.
class VertexOrder {
 public:
  VertexOrder() = default;
  // `sequence` must be a permutation of the vertices; v_1 comes first.
  // Without `active`, every edge is active.
  VertexOrder(const Hypergraph& h, std::vector<VertexId> sequence,
              const EdgeSet* active = nullptr);

  const std::vector<VertexId>& sequence() const { return sequence_; }
  std::size_t position(VertexId v) const { return position_[v]; }
  bool precedes(VertexId a, VertexId b) const { return position_[a] < position_[b]; }
  const EdgeSet& up(VertexId v) const { return up_[v]; }
  const EdgeSet& down(VertexId v) const { return down_[v]; }
  // max_v |U_v|.
  std::size_t width() const { return width_; }

  // Restricts the active edges, keeping the vertex sequence.
  VertexOrder restricted(const Hypergraph& h, const EdgeSet& active) const {
    return VertexOrder(h, sequence_, &active);
  }

 private:
  std::vector<VertexId> sequence_;
  std::vector<std::size_t> position_;
  std::vector<EdgeSet> up_;
  std::vector<EdgeSet> down_;
  std::size_t width_ = 0;
};

// Repeatedly removes a vertex of minimum remaining degree (lowest id on ties)
// and returns the removal sequence as the order, so every vertex's upward
// edges lead to vertices removed after it. The remaining degree of v counts
// the edges through v that still have another remaining vertex, which is the
// induced-subhypergraph degree without merging coinciding intersections. The
// resulting width is the minimum over all orders.
VertexOrder degeneracy_order(const Hypergraph& h, const EdgeSet* active = nullptr);

std::size_t width_of(const Hypergraph& h, std::span<const VertexId> sequence,
                     const EdgeSet* active = nullptr);

// Graph only. The upward edges of each vertex, sorted by the position of
// their other endpoint, go to classes 1, 2, ... in turn, so each class has
// width 1. Returns exactly `width` classes.
std::vector<EdgeSet> forest_decompose(const Hypergraph& g, const VertexOrder& order);

// Splits the active edges into classes of width 1. Edges are visited by
// their first vertex in the order (ascending edge id within a vertex); each
// goes to the earliest class that has no upward edge at any of its vertices
// other than its last one, or to a new class.
std::vector<EdgeSet> width1_decompose(const Hypergraph& h, const VertexOrder& order);

// max_v |Q ∩ U_v|.
std::size_t class_width(const VertexOrder& order, const EdgeSet& edges);

}  // namespace locind
