#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "locind/algorithms.hpp"
#include "locind/edge_set.hpp"
#include "locind/instance.hpp"
#include "locind/local_system.hpp"
#include "locind/oracle.hpp"

namespace locind {

// "{0,3,5}" or "{}".
EdgeSet parse_edge_set(std::string_view text);

// Inverse of LocalSystem::descriptor(). Free, card, sign and explicit
// systems take `ground` as their ground set; partition and timed systems
// carry their own, which must equal `ground`.
LocalSystem parse_system_descriptor(std::string_view text, const EdgeSet& ground);

// Scripted-oracle file:
//   fallback <exhaustive|greedy>
//   alpha <rational>            (optional, default 1)
//   <v>: {F} -> {A}
struct ScriptFile {
  OracleStrategy fallback = OracleStrategy::Exhaustive;
  Rational alpha{1};
  std::map<VertexId, std::vector<ScriptEntry>> entries;
};
ScriptFile parse_script_file(std::string_view text);
std::string write_script_file(const ScriptFile& file);

// Instance file:
//   locind-instance 1
//   kind graph|hypergraph
//   vertices <n>
//   edge <v> <w> [...]                       one line per edge, in id order
//   system <v> <descriptor>                  one line per vertex
//   oracle <v> <strategy> alpha <r> [fallback <s>] [pref <e,e,...>]
//   script <v> {F} -> {A}
//   scripts <path>                           scripted-oracle file, relative
//   bipartition <left ids> | <right ids>
//   k <rational>
//   policy strict|lenient
// Vertices without an oracle line use the exhaustive oracle. '#' starts a
// comment.
std::string write_instance(const Instance& instance);
Instance read_instance(std::string_view text, const std::filesystem::path& base_dir = {});
Instance load_instance(const std::filesystem::path& path);
void save_instance(const std::filesystem::path& path, const Instance& instance);

struct ResultFile {
  Algorithm algorithm = Algorithm::FixedOrder;
  EdgeSet independent;
  // E minus the union of the parts.
  EdgeSet residual;
  Bound bound;
  std::vector<VertexId> order;
  std::optional<std::size_t> chosen_class;
  std::size_t class_count = 0;
  std::vector<IterationRecord> iterations;
  std::vector<QueryRecord> queries;
};

ResultFile to_result(const SolveTrace& trace);
std::string write_result(const ResultFile& result, bool with_iterations = true);
ResultFile read_result(std::string_view text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view text);

}  // namespace locind
