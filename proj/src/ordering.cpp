#include "locind/ordering.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "locind/errors.hpp"

namespace locind {

VertexOrder::VertexOrder(const Hypergraph& h, std::vector<VertexId> sequence,
                         const EdgeSet* active)
    : sequence_(std::move(sequence)),
      position_(h.num_vertices(), h.num_vertices()),
      up_(h.num_vertices()),
      down_(h.num_vertices()) {
  const std::size_t n = h.num_vertices();
  if (sequence_.size() != n) throw InvalidInput("vertex order is not a permutation");
  for (std::size_t i = 0; i < n; ++i) {
    VertexId v = sequence_[i];
    if (v >= n || position_[v] != n) throw InvalidInput("vertex order is not a permutation");
    position_[v] = i;
  }
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    if (active != nullptr && !active->contains(e)) continue;
    auto ends = h.edge(e);
    VertexId last = *std::max_element(ends.begin(), ends.end(), [&](VertexId a, VertexId b) {
      return position_[a] < position_[b];
    });
    for (VertexId v : ends) {
      if (v == last) {
        down_[v].insert(e);
      } else {
        up_[v].insert(e);
      }
    }
  }
  for (const auto& u : up_) width_ = std::max(width_, u.size());
}

VertexOrder degeneracy_order(const Hypergraph& h, const EdgeSet* active) {
  const std::size_t n = h.num_vertices();
  std::vector<std::size_t> degree(n, 0);
  std::vector<std::size_t> alive_count(h.num_edges(), 0);
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    if (active != nullptr && !active->contains(e)) continue;
    alive_count[e] = h.edge(e).size();
    for (VertexId v : h.edge(e)) ++degree[v];
  }
  std::vector<char> removed(n, 0);
  std::set<std::pair<std::size_t, VertexId>> queue;
  for (VertexId v = 0; v < n; ++v) queue.emplace(degree[v], v);

  std::vector<VertexId> sequence;
  sequence.reserve(n);
  while (!queue.empty()) {
    auto [deg, v] = *queue.begin();
    queue.erase(queue.begin());
    removed[v] = 1;
    sequence.push_back(v);
    for (EdgeId e : h.incident(v)) {
      if (alive_count[e] < 2) continue;
      if (--alive_count[e] == 1) {
        // The edge no longer has two remaining vertices; its last one loses it.
        for (VertexId w : h.edge(e)) {
          if (!removed[w]) {
            queue.erase({degree[w], w});
            --degree[w];
            queue.emplace(degree[w], w);
          }
        }
      }
    }
  }
  return VertexOrder(h, std::move(sequence), active);
}

std::size_t width_of(const Hypergraph& h, std::span<const VertexId> sequence,
                     const EdgeSet* active) {
  return VertexOrder(h, {sequence.begin(), sequence.end()}, active).width();
}

std::vector<EdgeSet> forest_decompose(const Hypergraph& g, const VertexOrder& order) {
  if (!g.is_graph()) throw UnsupportedInstance("forest decomposition needs a graph");
  std::vector<EdgeSet> classes(order.width());
  for (VertexId v : order.sequence()) {
    auto upward = order.up(v).to_vector();
    std::stable_sort(upward.begin(), upward.end(), [&](EdgeId a, EdgeId b) {
      return order.position(g.other(a, v)) < order.position(g.other(b, v));
    });
    for (std::size_t i = 0; i < upward.size(); ++i) classes[i].insert(upward[i]);
  }
  return classes;
}

std::vector<EdgeSet> width1_decompose(const Hypergraph& h, const VertexOrder& order) {
  std::vector<EdgeSet> classes;
  for (VertexId v : order.sequence()) {
    for (EdgeId e : order.up(v)) {
      auto ends = h.edge(e);
      bool first = std::all_of(ends.begin(), ends.end(), [&](VertexId w) {
        return w == v || order.precedes(v, w);
      });
      if (!first) continue;
      VertexId last = *std::max_element(ends.begin(), ends.end(), [&](VertexId a, VertexId b) {
        return order.position(a) < order.position(b);
      });
      auto compatible = [&](const EdgeSet& q) {
        return std::none_of(ends.begin(), ends.end(), [&](VertexId w) {
          return w != last && q.intersects(order.up(w));
        });
      };
      auto it = std::find_if(classes.begin(), classes.end(), compatible);
      if (it == classes.end()) {
        classes.emplace_back();
        it = std::prev(classes.end());
      }
      it->insert(e);
    }
  }
  return classes;
}

std::size_t class_width(const VertexOrder& order, const EdgeSet& edges) {
  std::size_t w = 0;
  for (VertexId v : order.sequence()) w = std::max(w, (order.up(v) & edges).size());
  return w;
}

}  // namespace locind
