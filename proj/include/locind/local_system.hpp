#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "locind/edge_set.hpp"
#include "locind/rational.hpp"

namespace locind {

enum class SystemKind { Free, Cardinality, Partition, Timed, Sign, Explicit };

const char* to_string(SystemKind kind);
// Inverse of to_string; throws InvalidInput on an unknown name.
SystemKind parse_system_kind(std::string_view name);

struct PartitionBlock {
  EdgeSet edges;
  std::size_t capacity = 0;
  bool operator==(const PartitionBlock&) const = default;
};

using TimeLabels = std::map<EdgeId, std::vector<std::int64_t>>;

// A downward-closed family over a ground set of edge ids, the local
// independence system of one vertex. The ground set starts as E_v and shrinks
// under restrict_to(); kind data keeps referring to the original domain, which
// is sound because every family here is downward closed.
class LocalSystem {
 public:
  static constexpr std::size_t kExplicitLimit = 20;

  static LocalSystem free(EdgeSet ground);
  static LocalSystem cardinality(EdgeSet ground, std::size_t bound);
  // Blocks must be pairwise disjoint; the ground set is their union.
  static LocalSystem partition(std::vector<PartitionBlock> blocks);
  // The ground set is the key set. Each label list is deduplicated.
  static LocalSystem timed(TimeLabels labels);
  // Members are the subsets of one sign class. The classes must be disjoint.
  static LocalSystem sign(EdgeSet positive, EdgeSet negative);
  // Members are given as bitmasks over the ground set in ascending edge id
  // order (bit i = i-th smallest edge). The list must contain 0 and be
  // downward closed; both are verified exhaustively.
  static LocalSystem explicit_family(EdgeSet ground, std::vector<std::uint32_t> members);

  SystemKind kind() const;
  const EdgeSet& ground() const { return ground_; }
  bool is_matroid_kind() const;

  // Throws InvalidInput when j is not a subset of the ground set.
  bool is_member(const EdgeSet& j) const;
  // Membership without the subset check; j must lie in the original domain.
  bool accepts(const EdgeSet& j) const;

  // Cheap kind-specific upper bound on the largest member inside f.
  std::size_t size_upper_bound(const EdgeSet& f) const;

  // I_v[F]. Throws InvalidInput when f is not a subset of the ground set.
  LocalSystem restrict_to(const EdgeSet& f) const;

  // Renames edges: new_ids[e] is the new id of e, or kDropped to remove e.
  static constexpr EdgeId kDropped = 0xffffffffu;
  LocalSystem remap(std::span<const EdgeId> new_ids) const;

  // Instance-file descriptor, e.g. "card 2" or "sign 0 1 | 2".
  std::string descriptor() const;

  std::size_t cardinality_bound() const;
  const std::vector<PartitionBlock>& blocks() const;
  const TimeLabels& labels() const;
  const EdgeSet& positive() const;
  const EdgeSet& negative() const;
  const std::vector<std::uint32_t>& explicit_members() const;

  bool operator==(const LocalSystem& other) const;

 private:
  struct FreeData {};
  struct CardinalityData {
    std::size_t bound;
  };
  struct PartitionData {
    std::vector<PartitionBlock> blocks;
  };
  struct TimedData {
    TimeLabels labels;
  };
  struct SignData {
    EdgeSet positive, negative;
  };
  struct ExplicitData {
    std::vector<EdgeId> domain;
    std::vector<std::uint32_t> members;  // sorted
    std::vector<bool> table;             // indexed by mask over domain
    std::uint32_t mask_of(const EdgeSet& j) const;
  };
  using Data =
      std::variant<FreeData, CardinalityData, PartitionData, TimedData, SignData, ExplicitData>;

  LocalSystem(EdgeSet ground, Data data) : ground_(std::move(ground)), data_(std::move(data)) {}

  EdgeSet ground_;
  Data data_;
};

// Scans f in preference order (edges of f listed in pref first, the rest
// ascending) and keeps every edge whose addition preserves membership. The
// result is a maximal member of I[f].
EdgeSet greedy_maximal(const LocalSystem& system, const EdgeSet& f,
                       std::span<const EdgeId> pref = {});

// True when j is a member inside f and no edge of f \ j can be added.
bool is_maximal_in(const LocalSystem& system, const EdgeSet& f, const EdgeSet& j);

// Smallest k with k|I| >= |J| for all maximal I, J of every restriction
// I[F], by exhaustive enumeration. Throws CapExceeded when the ground set has
// more than `cap` edges.
Rational ksystem_param_exact(const LocalSystem& system, std::size_t cap = 18);

// Shared enumeration kernel: `independent` has 2^d entries indexed by mask.
// Returns the k-system parameter of the family it describes.
Rational ksystem_param_from_table(const std::vector<bool>& independent, std::size_t d);

}  // namespace locind
