#include "locind/oracle.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "locind/errors.hpp"
#include "locind/instance.hpp"

namespace locind {

const char* to_string(OracleStrategy strategy) {
  switch (strategy) {
    case OracleStrategy::Exhaustive: return "exhaustive";
    case OracleStrategy::GreedyPref: return "greedy";
    case OracleStrategy::Scripted: return "scripted";
  }
  return "?";
}

OracleStrategy parse_oracle_strategy(std::string_view name) {
  if (name == "exhaustive") return OracleStrategy::Exhaustive;
  if (name == "greedy") return OracleStrategy::GreedyPref;
  if (name == "scripted") return OracleStrategy::Scripted;
  throw InvalidInput("unknown oracle strategy '" + std::string(name) + "'");
}

namespace {

class MaxSearch {
 public:
  MaxSearch(const LocalSystem& system, const EdgeSet& f)
      : system_(system), edges_(f.to_vector()), upper_(system.size_upper_bound(f)) {}

  EdgeSet run() {
    dfs(0);
    return best_;
  }

 private:
  void dfs(std::size_t i) {
    if (done_) return;
    if (current_.size() > best_size_) {
      best_ = current_;
      best_size_ = current_.size();
      if (best_size_ >= upper_) {
        done_ = true;
        return;
      }
    }
    if (i == edges_.size() || current_.size() + (edges_.size() - i) <= best_size_) return;
    EdgeId e = edges_[i];
    current_.insert(e);
    if (system_.accepts(current_)) dfs(i + 1);
    current_.erase(e);
    dfs(i + 1);
  }

  const LocalSystem& system_;
  std::vector<EdgeId> edges_;
  std::size_t upper_;
  EdgeSet current_;
  EdgeSet best_;
  std::size_t best_size_ = 0;
  bool done_ = false;
};

class GreedyEnvelope {
 public:
  GreedyEnvelope(const LocalSystem& system, std::span<const EdgeId> pref)
      : system_(system), pref_(pref) {}

  const EdgeSet& best(const EdgeSet& f) {
    if (auto it = memo_.find(f); it != memo_.end()) return it->second;
    EdgeSet result = greedy_maximal(system_, f, pref_);
    const std::size_t upper = system_.size_upper_bound(f);
    if (result.size() < upper) {
      for (EdgeId e : f) {
        const EdgeSet& candidate = best(f.without(e));
        if (candidate.size() > result.size()) {
          result = candidate;
          if (result.size() >= upper) break;
        }
      }
    }
    return memo_.emplace(f, std::move(result)).first->second;
  }

 private:
  const LocalSystem& system_;
  std::span<const EdgeId> pref_;
  std::unordered_map<EdgeSet, EdgeSet, EdgeSetHash> memo_;
};

}  // namespace

EdgeSet exhaustive_local_max(const LocalSystem& system, const EdgeSet& f) {
  return MaxSearch(system, f).run();
}

LocalOracle LocalOracle::exhaustive() { return LocalOracle(); }

LocalOracle LocalOracle::greedy(Rational alpha, std::vector<EdgeId> pref) {
  LocalOracle o;
  o.strategy_ = OracleStrategy::GreedyPref;
  o.fallback_ = OracleStrategy::GreedyPref;
  o.alpha_ = alpha;
  o.pref_ = std::move(pref);
  return o;
}

LocalOracle LocalOracle::scripted(Rational alpha, std::vector<ScriptEntry> entries,
                                  OracleStrategy fallback, std::vector<EdgeId> pref) {
  if (fallback == OracleStrategy::Scripted) {
    throw InvalidInput("a scripted oracle cannot fall back to another script");
  }
  LocalOracle o;
  o.strategy_ = OracleStrategy::Scripted;
  o.fallback_ = fallback;
  o.alpha_ = alpha;
  o.pref_ = std::move(pref);
  o.entries_ = std::move(entries);
  for (std::size_t i = 0; i < o.entries_.size(); ++i) {
    if (!o.index_.emplace(o.entries_[i].query, i).second) {
      throw InvalidInput("duplicate scripted query " + o.entries_[i].query.to_string());
    }
  }
  return o;
}

EdgeSet LocalOracle::answer(const LocalSystem& system, const EdgeSet& f) const {
  if (!f.is_subset_of(system.ground())) {
    throw InvalidInput("oracle query " + f.to_string() + " is not within " +
                       system.ground().to_string());
  }
  if (strategy_ == OracleStrategy::Scripted) {
    if (auto it = index_.find(f); it != index_.end()) return entries_[it->second].answer;
    return answer_with(fallback_, system, f);
  }
  return answer_with(strategy_, system, f);
}

EdgeSet LocalOracle::answer_with(OracleStrategy strategy, const LocalSystem& system,
                                 const EdgeSet& f) const {
  if (strategy == OracleStrategy::GreedyPref) {
    if (f.size() > kGreedyEnvelopeLimit) return greedy_maximal(system, f, pref_);
    return GreedyEnvelope(system, pref_).best(f);
  }
  return exhaustive_local_max(system, f);
}

LocalOracle LocalOracle::remap(std::span<const EdgeId> new_ids) const {
  auto map_set = [&](const EdgeSet& s, bool& lost) {
    EdgeSet out;
    for (EdgeId e : s) {
      if (new_ids[e] == LocalSystem::kDropped) {
        lost = true;
      } else {
        out.insert(new_ids[e]);
      }
    }
    return out;
  };
  std::vector<EdgeId> pref;
  for (EdgeId e : pref_) {
    if (e < new_ids.size() && new_ids[e] != LocalSystem::kDropped) pref.push_back(new_ids[e]);
  }
  if (strategy_ == OracleStrategy::Exhaustive) return exhaustive();
  if (strategy_ == OracleStrategy::GreedyPref) return greedy(alpha_, std::move(pref));
  std::vector<ScriptEntry> entries;
  for (const auto& entry : entries_) {
    bool lost = false;
    ScriptEntry mapped{map_set(entry.query, lost), map_set(entry.answer, lost)};
    // Queries mentioning a dropped edge can no longer be issued.
    if (!lost) entries.push_back(std::move(mapped));
  }
  return scripted(alpha_, std::move(entries), fallback_, std::move(pref));
}

EdgeSet query(const LocalOracle& oracle, const LocalSystem& system, const EdgeSet& f) {
  return oracle.answer(system, f);
}

EdgeSet OracleSession::query(VertexId v, const EdgeSet& f) {
  const LocalSystem& system = instance_->system(v);
  const LocalOracle& oracle = instance_->oracle(v);
  if (memo_.empty()) memo_.resize(instance_->num_vertices());
  if (auto it = memo_[v].find(f); it != memo_[v].end()) return log_[it->second].answer;

  EdgeSet answer = oracle.answer(system, f);
  const std::string where = "oracle of vertex " + std::to_string(v) + " on " + f.to_string();
  if (!answer.is_subset_of(f) || !system.accepts(answer)) {
    throw OracleViolation(where + " returned infeasible " + answer.to_string());
  }
  if (oracle.strategy() == OracleStrategy::Scripted) {
    std::size_t optimum = exhaustive_local_max(system, f).size();
    if (oracle.alpha() * static_cast<std::int64_t>(answer.size()) <
        Rational(static_cast<std::int64_t>(optimum))) {
      throw OracleViolation(where + " returned " + answer.to_string() +
                            ", too small for alpha " + to_string(oracle.alpha()) +
                            " against optimum " + std::to_string(optimum));
    }
    for (const auto& record : log_) {
      if (record.vertex != v) continue;
      bool below = record.query.is_subset_of(f) && record.answer.size() > answer.size();
      bool above = f.is_subset_of(record.query) && answer.size() > record.answer.size();
      if (below || above) {
        throw OracleViolation(where + " breaks monotonicity against earlier query " +
                              record.query.to_string());
      }
    }
  }
  memo_[v].emplace(f, log_.size());
  log_.push_back({v, f, answer});
  return answer;
}

ValidationReport validate_oracle(const LocalSystem& system, const LocalOracle& oracle,
                                 std::size_t budget, std::uint64_t seed) {
  const auto ground = system.ground().to_vector();
  const std::size_t d = ground.size();
  if (d > 24) throw CapExceeded("oracle validation needs exhaustive maxima; ground too large");

  std::vector<EdgeSet> queries;
  for (const auto& entry : oracle.script()) {
    if (entry.query.is_subset_of(system.ground())) queries.push_back(entry.query);
  }
  auto from_mask = [&](std::uint64_t mask) {
    EdgeSet s;
    for (std::size_t i = 0; i < d; ++i) {
      if ((mask >> i) & 1u) s.insert(ground[i]);
    }
    return s;
  };
  std::mt19937_64 rng(seed);
  if (d < 63 && (std::uint64_t{1} << d) <= budget) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << d); ++m) queries.push_back(from_mask(m));
  } else {
    std::bernoulli_distribution coin(0.5);
    for (std::size_t i = 0; i < budget; ++i) {
      EdgeSet s;
      for (EdgeId e : ground) {
        if (coin(rng)) s.insert(e);
      }
      queries.push_back(std::move(s));
    }
  }
  auto perm = ground;
  std::shuffle(perm.begin(), perm.end(), rng);
  EdgeSet prefix;
  queries.push_back(prefix);
  for (EdgeId e : perm) {
    prefix.insert(e);
    queries.push_back(prefix);
  }
  std::sort(queries.begin(), queries.end());
  queries.erase(std::unique(queries.begin(), queries.end()), queries.end());

  ValidationReport report;
  auto fail = [&](std::string message) {
    if (report.valid) report.first_violation = std::move(message);
    report.valid = false;
  };
  std::vector<std::size_t> sizes(queries.size(), 0);
  for (std::size_t q = 0; q < queries.size(); ++q) {
    const EdgeSet& f = queries[q];
    EdgeSet answer;
    try {
      answer = oracle.answer(system, f);
    } catch (const Error& err) {
      fail("query " + f.to_string() + " raised: " + err.what());
      continue;
    }
    ++report.queries_checked;
    sizes[q] = answer.size();
    if (!answer.is_subset_of(f) || !system.accepts(answer)) {
      fail("feasibility: answer " + answer.to_string() + " to " + f.to_string() +
           " is not an independent subset of the query");
      continue;
    }
    auto optimum = static_cast<std::int64_t>(exhaustive_local_max(system, f).size());
    auto got = static_cast<std::int64_t>(answer.size());
    if (got == 0) {
      if (optimum > 0) {
        fail("ratio: empty answer to " + f.to_string() + " while optimum is " +
             std::to_string(optimum));
      }
      continue;
    }
    Rational ratio(optimum, got);
    report.measured_alpha = std::max(report.measured_alpha, ratio);
    if (oracle.alpha() * got < Rational(optimum)) {
      fail("ratio: answer " + answer.to_string() + " to " + f.to_string() + " has size " +
           std::to_string(got) + " but optimum is " + std::to_string(optimum) +
           " at alpha " + to_string(oracle.alpha()));
    }
  }
  for (std::size_t a = 0; a < queries.size(); ++a) {
    for (std::size_t b = 0; b < queries.size(); ++b) {
      if (a != b && sizes[a] > sizes[b] && queries[a].is_subset_of(queries[b])) {
        fail("monotonicity: |A(" + queries[a].to_string() + ")| = " +
             std::to_string(sizes[a]) + " exceeds |A(" + queries[b].to_string() +
             ")| = " + std::to_string(sizes[b]));
      }
    }
  }
  return report;
}

}  // namespace locind
