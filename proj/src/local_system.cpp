#include "locind/local_system.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "locind/errors.hpp"

namespace locind {

const char* to_string(SystemKind kind) {
  switch (kind) {
    case SystemKind::Free: return "free";
    case SystemKind::Cardinality: return "card";
    case SystemKind::Partition: return "partition";
    case SystemKind::Timed: return "timed";
    case SystemKind::Sign: return "sign";
    case SystemKind::Explicit: return "explicit";
  }
  return "?";
}

SystemKind parse_system_kind(std::string_view name) {
  for (SystemKind k : {SystemKind::Free, SystemKind::Cardinality, SystemKind::Partition,
                       SystemKind::Timed, SystemKind::Sign, SystemKind::Explicit}) {
    if (name == to_string(k)) return k;
  }
  throw InvalidInput("unknown system kind '" + std::string(name) + "'");
}

std::uint32_t LocalSystem::ExplicitData::mask_of(const EdgeSet& j) const {
  std::uint32_t mask = 0;
  for (EdgeId e : j) {
    auto it = std::lower_bound(domain.begin(), domain.end(), e);
    if (it == domain.end() || *it != e) throw InvalidInput("edge outside explicit domain");
    mask |= std::uint32_t{1} << (it - domain.begin());
  }
  return mask;
}

LocalSystem LocalSystem::free(EdgeSet ground) { return {std::move(ground), FreeData{}}; }

LocalSystem LocalSystem::cardinality(EdgeSet ground, std::size_t bound) {
  return {std::move(ground), CardinalityData{bound}};
}

LocalSystem LocalSystem::partition(std::vector<PartitionBlock> blocks) {
  EdgeSet ground;
  for (const auto& block : blocks) {
    if (ground.intersects(block.edges)) throw InvalidInput("partition blocks overlap");
    ground |= block.edges;
  }
  std::sort(blocks.begin(), blocks.end(), [](const PartitionBlock& a, const PartitionBlock& b) {
    return a.edges < b.edges;
  });
  return {std::move(ground), PartitionData{std::move(blocks)}};
}

LocalSystem LocalSystem::timed(TimeLabels labels) {
  EdgeSet ground;
  for (auto& [e, ls] : labels) {
    std::sort(ls.begin(), ls.end());
    ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
    ground.insert(e);
  }
  return {std::move(ground), TimedData{std::move(labels)}};
}

LocalSystem LocalSystem::sign(EdgeSet positive, EdgeSet negative) {
  if (positive.intersects(negative)) throw InvalidInput("sign classes overlap");
  EdgeSet ground = positive | negative;
  return {std::move(ground), SignData{std::move(positive), std::move(negative)}};
}

LocalSystem LocalSystem::explicit_family(EdgeSet ground, std::vector<std::uint32_t> members) {
  std::size_t d = ground.size();
  if (d > kExplicitLimit) {
    throw InvalidInput("explicit family limited to " + std::to_string(kExplicitLimit) +
                       " edges, got " + std::to_string(d));
  }
  std::vector<bool> table(std::size_t{1} << d, false);
  for (auto m : members) {
    if (d < 32 && (m >> d) != 0) throw InvalidInput("explicit member mask exceeds ground set");
    table[m] = true;
  }
  if (!table[0]) throw InvalidInput("explicit family must contain the empty set");
  for (std::uint32_t m = 0; m < table.size(); ++m) {
    if (!table[m]) continue;
    for (std::uint32_t rest = m; rest; rest &= rest - 1) {
      std::uint32_t bit = rest & (~rest + 1);
      if (!table[m ^ bit]) throw InvalidInput("explicit family is not downward closed");
    }
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  auto domain = ground.to_vector();
  return {std::move(ground), ExplicitData{std::move(domain), std::move(members), std::move(table)}};
}

SystemKind LocalSystem::kind() const { return static_cast<SystemKind>(data_.index()); }

bool LocalSystem::is_matroid_kind() const {
  auto k = kind();
  return k == SystemKind::Free || k == SystemKind::Cardinality || k == SystemKind::Partition;
}

bool LocalSystem::is_member(const EdgeSet& j) const {
  if (!j.is_subset_of(ground_)) {
    throw InvalidInput("set " + j.to_string() + " is not within ground " + ground_.to_string());
  }
  return accepts(j);
}

bool LocalSystem::accepts(const EdgeSet& j) const {
  struct Visitor {
    const EdgeSet& j;
    bool operator()(const FreeData&) const { return true; }
    bool operator()(const CardinalityData& d) const { return j.size() <= d.bound; }
    bool operator()(const PartitionData& d) const {
      for (const auto& block : d.blocks) {
        if ((j & block.edges).size() > block.capacity) return false;
      }
      return true;
    }
    bool operator()(const TimedData& d) const {
      std::vector<std::int64_t> all;
      for (EdgeId e : j) {
        auto it = d.labels.find(e);
        if (it != d.labels.end()) all.insert(all.end(), it->second.begin(), it->second.end());
      }
      std::sort(all.begin(), all.end());
      return std::adjacent_find(all.begin(), all.end()) == all.end();
    }
    bool operator()(const SignData& d) const {
      return j.is_subset_of(d.positive) || j.is_subset_of(d.negative);
    }
    bool operator()(const ExplicitData& d) const { return d.table[d.mask_of(j)]; }
  };
  return std::visit(Visitor{j}, data_);
}

std::size_t LocalSystem::size_upper_bound(const EdgeSet& f) const {
  struct Visitor {
    const EdgeSet& f;
    std::size_t operator()(const FreeData&) const { return f.size(); }
    std::size_t operator()(const CardinalityData& d) const { return std::min(d.bound, f.size()); }
    std::size_t operator()(const PartitionData& d) const {
      std::size_t total = 0;
      for (const auto& block : d.blocks) total += std::min(block.capacity, (f & block.edges).size());
      return total;
    }
    std::size_t operator()(const TimedData&) const { return f.size(); }
    std::size_t operator()(const SignData& d) const {
      return std::max((f & d.positive).size(), (f & d.negative).size());
    }
    std::size_t operator()(const ExplicitData&) const { return f.size(); }
  };
  return std::visit(Visitor{f}, data_);
}

LocalSystem LocalSystem::restrict_to(const EdgeSet& f) const {
  if (!f.is_subset_of(ground_)) {
    throw InvalidInput("restriction " + f.to_string() + " is not within ground " +
                       ground_.to_string());
  }
  return {f, data_};
}

namespace {

EdgeSet remap_set(const EdgeSet& s, std::span<const EdgeId> new_ids) {
  EdgeSet out;
  for (EdgeId e : s) {
    if (e >= new_ids.size()) throw InvalidInput("remap table too short");
    if (new_ids[e] != LocalSystem::kDropped) out.insert(new_ids[e]);
  }
  return out;
}

}  // namespace

LocalSystem LocalSystem::remap(std::span<const EdgeId> new_ids) const {
  EdgeSet ground = remap_set(ground_, new_ids);
  switch (kind()) {
    case SystemKind::Free: return free(std::move(ground));
    case SystemKind::Cardinality: return cardinality(std::move(ground), cardinality_bound());
    case SystemKind::Partition: {
      std::vector<PartitionBlock> blocks;
      for (const auto& block : this->blocks()) {
        PartitionBlock b{remap_set(block.edges & ground_, new_ids), block.capacity};
        if (!b.edges.empty()) blocks.push_back(std::move(b));
      }
      return partition(std::move(blocks));
    }
    case SystemKind::Timed: {
      TimeLabels out;
      for (const auto& [e, ls] : labels()) {
        if (ground_.contains(e) && new_ids[e] != kDropped) out[new_ids[e]] = ls;
      }
      return timed(std::move(out));
    }
    case SystemKind::Sign:
      return sign(remap_set(positive() & ground_, new_ids),
                  remap_set(negative() & ground_, new_ids));
    case SystemKind::Explicit: {
      const auto& d = std::get<ExplicitData>(data_);
      // New bit positions follow the ascending order of the new ids.
      std::vector<std::pair<EdgeId, std::size_t>> kept;  // (new id, old position)
      for (std::size_t pos = 0; pos < d.domain.size(); ++pos) {
        EdgeId e = d.domain[pos];
        if (ground_.contains(e) && new_ids[e] != kDropped) kept.emplace_back(new_ids[e], pos);
      }
      std::sort(kept.begin(), kept.end());
      std::vector<std::uint32_t> members;
      for (std::uint32_t m = 0; m < (std::uint32_t{1} << kept.size()); ++m) {
        std::uint32_t old_mask = 0;
        for (std::size_t i = 0; i < kept.size(); ++i) {
          if ((m >> i) & 1u) old_mask |= std::uint32_t{1} << kept[i].second;
        }
        if (d.table[old_mask]) members.push_back(m);
      }
      return explicit_family(std::move(ground), std::move(members));
    }
  }
  throw Error("unreachable system kind");
}

std::string LocalSystem::descriptor() const {
  std::ostringstream out;
  out << to_string(kind());
  switch (kind()) {
    case SystemKind::Free: break;
    case SystemKind::Cardinality: out << ' ' << cardinality_bound(); break;
    case SystemKind::Partition:
      for (const auto& block : blocks()) {
        out << ' ';
        bool first = true;
        for (EdgeId e : block.edges) {
          out << (first ? "" : ",") << e;
          first = false;
        }
        out << ':' << block.capacity;
      }
      break;
    case SystemKind::Timed:
      for (const auto& [e, ls] : labels()) {
        out << ' ' << e << ':';
        for (std::size_t i = 0; i < ls.size(); ++i) out << (i ? "," : "") << ls[i];
      }
      break;
    case SystemKind::Sign:
      for (EdgeId e : positive()) out << ' ' << e;
      out << " |";
      for (EdgeId e : negative()) out << ' ' << e;
      break;
    case SystemKind::Explicit:
      out << std::hex;
      for (auto m : explicit_members()) out << ' ' << m;
      break;
  }
  return out.str();
}

std::size_t LocalSystem::cardinality_bound() const {
  return std::get<CardinalityData>(data_).bound;
}
const std::vector<PartitionBlock>& LocalSystem::blocks() const {
  return std::get<PartitionData>(data_).blocks;
}
const TimeLabels& LocalSystem::labels() const { return std::get<TimedData>(data_).labels; }
const EdgeSet& LocalSystem::positive() const { return std::get<SignData>(data_).positive; }
const EdgeSet& LocalSystem::negative() const { return std::get<SignData>(data_).negative; }
const std::vector<std::uint32_t>& LocalSystem::explicit_members() const {
  return std::get<ExplicitData>(data_).members;
}

bool LocalSystem::operator==(const LocalSystem& other) const {
  return ground_ == other.ground_ && kind() == other.kind() &&
         descriptor() == other.descriptor();
}

EdgeSet greedy_maximal(const LocalSystem& system, const EdgeSet& f,
                       std::span<const EdgeId> pref) {
  EdgeSet chosen;
  EdgeSet seen;
  auto consider = [&](EdgeId e) {
    if (!f.contains(e) || seen.contains(e)) return;
    seen.insert(e);
    if (system.accepts(chosen.with(e))) chosen.insert(e);
  };
  for (EdgeId e : pref) consider(e);
  for (EdgeId e : f) consider(e);
  return chosen;
}

bool is_maximal_in(const LocalSystem& system, const EdgeSet& f, const EdgeSet& j) {
  if (!j.is_subset_of(f) || !system.accepts(j)) return false;
  for (EdgeId e : f - j) {
    if (system.accepts(j.with(e))) return false;
  }
  return true;
}

Rational ksystem_param_from_table(const std::vector<bool>& independent, std::size_t d) {
  const std::uint32_t full = d == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << d) - 1;
  const std::size_t count = std::size_t{1} << d;
  std::vector<std::uint8_t> min_size(count, 0xff);
  std::vector<std::uint8_t> max_size(count, 0);
  for (std::uint32_t s = 0; s < count; ++s) {
    if (!independent[s]) continue;
    std::uint32_t extendable = 0;
    for (std::uint32_t rest = full & ~s; rest; rest &= rest - 1) {
      std::uint32_t bit = rest & (~rest + 1);
      if (independent[s | bit]) extendable |= bit;
    }
    // s is maximal in exactly the sets s ∪ t with t avoiding every extendable edge.
    const std::uint32_t free_bits = full & ~s & ~extendable;
    const auto size = static_cast<std::uint8_t>(std::popcount(s));
    for (std::uint32_t t = free_bits;; t = (t - 1) & free_bits) {
      std::uint32_t f = s | t;
      min_size[f] = std::min(min_size[f], size);
      max_size[f] = std::max(max_size[f], size);
      if (t == 0) break;
    }
  }
  Rational k(1);
  for (std::size_t f = 0; f < count; ++f) {
    if (max_size[f] == 0) continue;
    Rational ratio(max_size[f], min_size[f]);
    if (ratio > k) k = ratio;
  }
  return k;
}

Rational ksystem_param_exact(const LocalSystem& system, std::size_t cap) {
  auto domain = system.ground().to_vector();
  std::size_t d = domain.size();
  if (d > cap || d > 24) {
    throw CapExceeded("k-system parameter needs exhaustive enumeration over " +
                      std::to_string(d) + " edges (cap " + std::to_string(cap) + ")");
  }
  std::vector<bool> independent(std::size_t{1} << d);
  for (std::uint32_t m = 0; m < independent.size(); ++m) {
    EdgeSet j;
    for (std::size_t i = 0; i < d; ++i) {
      if ((m >> i) & 1u) j.insert(domain[i]);
    }
    independent[m] = system.accepts(j);
  }
  return ksystem_param_from_table(independent, d);
}

}  // namespace locind
