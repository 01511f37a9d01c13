#pragma once

// Naive reference computations used to check the library. Nothing here calls
// into the library's solvers; only the raw system data is read.

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <cstdint>
#include <numeric>
#include <vector>

#include "locind/edge_set.hpp"
#include "locind/hypergraph.hpp"
#include "locind/instance.hpp"
#include "locind/local_system.hpp"
#include "locind/rational.hpp"
#include "locind/reductions.hpp"

namespace brute {

using namespace locind;

inline EdgeSet subset(const std::vector<EdgeId>& items, std::uint64_t mask) {
  EdgeSet s;
  for (std::size_t i = 0; i < items.size(); ++i)
    if ((mask >> i) & 1u) s.insert(items[i]);
  return s;
}

// Membership straight from the kind's defining rule.
inline bool member(const LocalSystem& s, const EdgeSet& j) {
  switch (s.kind()) {
    case SystemKind::Free:
      return true;
    case SystemKind::Cardinality:
      return j.size() <= s.cardinality_bound();
    case SystemKind::Partition:
      for (const auto& b : s.blocks())
        if ((j & b.edges).size() > b.capacity) return false;
      return true;
    case SystemKind::Timed: {
      auto v = j.to_vector();
      for (std::size_t a = 0; a < v.size(); ++a)
        for (std::size_t b = a + 1; b < v.size(); ++b)
          for (auto x : s.labels().at(v[a]))
            for (auto y : s.labels().at(v[b]))
              if (x == y) return false;
      return true;
    }
    case SystemKind::Sign:
      return j.is_subset_of(s.positive()) || j.is_subset_of(s.negative());
    case SystemKind::Explicit: {
      auto ground = s.ground().to_vector();
      std::uint32_t mask = 0;
      for (std::size_t i = 0; i < ground.size(); ++i)
        if (j.contains(ground[i])) mask |= 1u << i;
      const auto& m = s.explicit_members();
      return std::find(m.begin(), m.end(), mask) != m.end();
    }
  }
  return false;
}

inline bool independent(const Instance& inst, const EdgeSet& j) {
  const auto& h = inst.structure();
  for (VertexId v = 0; v < h.num_vertices(); ++v)
    if (!member(inst.system(v), j & h.incident_set(v))) return false;
  return true;
}

// max |J| over independent J ⊆ f, by trying all 2^|f| subsets.
inline std::size_t opt(const Instance& inst, const EdgeSet& f) {
  auto items = f.to_vector();
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << items.size()); ++mask) {
    auto c = static_cast<std::size_t>(std::popcount(mask));
    if (c <= best) continue;
    if (independent(inst, subset(items, mask))) best = c;
  }
  return best;
}

inline std::size_t opt(const Instance& inst) {
  return opt(inst, inst.structure().all_edges());
}

// k-system parameter of a family given by a membership predicate on subsets
// of `ground`: max over F of (largest maximal / smallest maximal) in F.
template <class Member>
Rational kparam(const std::vector<EdgeId>& ground, Member&& is_member) {
  Rational k(1);
  std::uint64_t full = std::uint64_t{1} << ground.size();
  std::vector<char> ok(full);
  for (std::uint64_t m = 0; m < full; ++m) ok[m] = is_member(subset(ground, m));
  for (std::uint64_t f = 1; f < full; ++f) {
    std::size_t lo = 1000, hi = 0;
    for (std::uint64_t j = f;; j = (j - 1) & f) {
      if (ok[j]) {
        bool maximal = true;
        for (std::size_t i = 0; i < ground.size(); ++i) {
          std::uint64_t bit = std::uint64_t{1} << i;
          if ((f & bit) && !(j & bit) && ok[j | bit]) {
            maximal = false;
            break;
          }
        }
        if (maximal) {
          auto c = static_cast<std::size_t>(std::popcount(j));
          lo = std::min(lo, c);
          hi = std::max(hi, c);
        }
      }
      if (j == 0) break;
    }
    if (lo > 0) k = std::max(k, Rational(static_cast<std::int64_t>(hi), static_cast<std::int64_t>(lo)));
  }
  return k;
}

inline Rational kparam(const LocalSystem& s) {
  return kparam(s.ground().to_vector(), [&](const EdgeSet& j) { return member(s, j); });
}

inline Rational kparam(const Instance& inst) {
  auto ground = inst.structure().all_edges().to_vector();
  return kparam(ground, [&](const EdgeSet& j) { return independent(inst, j); });
}

// Width of one order: each edge is upward at every vertex but its last.
inline std::size_t width(const Hypergraph& h, const std::vector<VertexId>& seq) {
  std::vector<std::size_t> pos(h.num_vertices()), up(h.num_vertices(), 0);
  for (std::size_t i = 0; i < seq.size(); ++i) pos[seq[i]] = i;
  for (const auto& e : h.edges()) {
    VertexId last = e[0];
    for (auto v : e)
      if (pos[v] > pos[last]) last = v;
    for (auto v : e)
      if (v != last) ++up[v];
  }
  std::size_t w = 0;
  for (auto u : up) w = std::max(w, u);
  return w;
}

// Minimum width over every permutation.
inline std::size_t min_width(const Hypergraph& h) {
  std::vector<VertexId> seq(h.num_vertices());
  std::iota(seq.begin(), seq.end(), 0);
  std::size_t best = width(h, seq);
  while (std::next_permutation(seq.begin(), seq.end())) best = std::min(best, width(h, seq));
  return best;
}

// Largest edge set with at most b(v) edges at every vertex.
inline std::size_t max_bmatching(const Hypergraph& g, const std::vector<std::size_t>& b) {
  std::size_t m = g.num_edges(), best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<std::size_t> deg(g.num_vertices(), 0);
    bool ok = true;
    for (std::size_t e = 0; e < m && ok; ++e)
      if ((mask >> e) & 1u)
        for (auto v : g.edge(static_cast<EdgeId>(e)))
          if (++deg[v] > b[v]) ok = false;
    if (ok) best = std::max(best, static_cast<std::size_t>(std::popcount(mask)));
  }
  return best;
}

inline std::size_t satisfied(const Cnf& cnf, std::uint64_t assignment) {
  std::size_t count = 0;
  for (const auto& c : cnf.clauses)
    for (int lit : c) {
      bool value = (assignment >> (std::abs(lit) - 1)) & 1u;
      if ((lit > 0) == value) {
        ++count;
        break;
      }
    }
  return count;
}

inline std::size_t maxsat_opt(const Cnf& cnf) {
  std::size_t best = 0;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << cnf.num_variables); ++a)
    best = std::max(best, satisfied(cnf, a));
  return best;
}

}  // namespace brute
