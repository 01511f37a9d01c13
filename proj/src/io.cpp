#include "locind/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "locind/errors.hpp"

namespace locind {

namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view tok, const char* what) {
  T value{};
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw InvalidInput(std::string("bad ") + what + " '" + std::string(tok) + "'");
  }
  return value;
}

std::size_t parse_size(std::string_view tok) { return parse_number<std::size_t>(tok, "count"); }
VertexId parse_vertex(std::string_view tok) { return parse_number<VertexId>(tok, "vertex id"); }
EdgeId parse_edge(std::string_view tok) { return parse_number<EdgeId>(tok, "edge id"); }

std::vector<EdgeId> parse_edge_list(std::string_view tok) {
  std::vector<EdgeId> out;
  if (tok.empty() || tok == "-") return out;
  for (const auto& part : split(tok, ',')) out.push_back(parse_edge(part));
  return out;
}

std::string join_edges(std::span<const EdgeId> edges) {
  if (edges.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(edges[i]);
  }
  return out;
}

// Strips comments and surrounding blanks.
std::string_view clean(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) {
    line.remove_prefix(1);
  }
  while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) {
    line.remove_suffix(1);
  }
  return line;
}

// The remainder of `line` after its first `count` whitespace-separated tokens.
std::string_view after_tokens(std::string_view line, std::size_t count) {
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  std::size_t i = 0;
  for (std::size_t t = 0; t < count; ++t) {
    while (i < line.size() && is_space(line[i])) ++i;
    while (i < line.size() && !is_space(line[i])) ++i;
  }
  while (i < line.size() && is_space(line[i])) ++i;
  return line.substr(i);
}

std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    out.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

// "<F> -> <A>" from tokens starting at `from`.
ScriptEntry parse_script_tokens(const std::vector<std::string>& toks, std::size_t from,
                                std::string_view line) {
  if (toks.size() != from + 3 || toks[from + 1] != "->") {
    throw InvalidInput("bad script line '" + std::string(line) + "'");
  }
  return {parse_edge_set(toks[from]), parse_edge_set(toks[from + 2])};
}

[[noreturn]] void fail_line(std::size_t number, const std::string& message) {
  throw InvalidInput("line " + std::to_string(number) + ": " + message);
}

}  // namespace

EdgeSet parse_edge_set(std::string_view text) {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
    throw InvalidInput("bad edge set '" + std::string(text) + "'");
  }
  std::string_view inner = text.substr(1, text.size() - 2);
  EdgeSet out;
  if (inner.empty()) return out;
  for (const auto& part : split(inner, ',')) out.insert(parse_edge(part));
  return out;
}

LocalSystem parse_system_descriptor(std::string_view text, const EdgeSet& ground) {
  std::vector<std::string> toks = split_ws(text);
  if (toks.empty()) throw InvalidInput("empty system descriptor");
  const std::string& kind = toks[0];
  std::optional<LocalSystem> system;
  if (kind == "free") {
    if (toks.size() != 1) throw InvalidInput("free takes no arguments");
    return LocalSystem::free(ground);
  }
  if (kind == "card") {
    if (toks.size() != 2) throw InvalidInput("card takes one bound");
    return LocalSystem::cardinality(ground, parse_size(toks[1]));
  }
  if (kind == "partition") {
    std::vector<PartitionBlock> blocks;
    for (std::size_t i = 1; i < toks.size(); ++i) {
      auto colon = toks[i].rfind(':');
      if (colon == std::string::npos) throw InvalidInput("partition block needs edges:cap");
      PartitionBlock block;
      for (EdgeId e : parse_edge_list(std::string_view(toks[i]).substr(0, colon))) {
        block.edges.insert(e);
      }
      block.capacity = parse_size(std::string_view(toks[i]).substr(colon + 1));
      blocks.push_back(std::move(block));
    }
    system = LocalSystem::partition(std::move(blocks));
  } else if (kind == "timed") {
    TimeLabels labels;
    for (std::size_t i = 1; i < toks.size(); ++i) {
      auto colon = toks[i].find(':');
      if (colon == std::string::npos) throw InvalidInput("timed entry needs edge:labels");
      EdgeId e = parse_edge(std::string_view(toks[i]).substr(0, colon));
      std::vector<std::int64_t> ls;
      std::string_view rest = std::string_view(toks[i]).substr(colon + 1);
      if (!rest.empty()) {
        for (const auto& part : split(rest, ',')) {
          ls.push_back(parse_number<std::int64_t>(part, "time label"));
        }
      }
      labels[e] = std::move(ls);
    }
    system = LocalSystem::timed(std::move(labels));
  } else if (kind == "sign") {
    EdgeSet pos, neg;
    bool right = false;
    for (std::size_t i = 1; i < toks.size(); ++i) {
      if (toks[i] == "|") {
        if (right) throw InvalidInput("sign descriptor has two separators");
        right = true;
        continue;
      }
      (right ? neg : pos).insert(parse_edge(toks[i]));
    }
    if (!right) throw InvalidInput("sign descriptor needs 'POS | NEG'");
    if (!((pos | neg) == ground)) {
      throw InvalidInput("sign classes do not cover the incident edges");
    }
    return LocalSystem::sign(pos, neg);
  } else if (kind == "explicit") {
    std::vector<std::uint32_t> masks;
    for (std::size_t i = 1; i < toks.size(); ++i) {
      std::uint32_t m = 0;
      auto [ptr, ec] =
          std::from_chars(toks[i].data(), toks[i].data() + toks[i].size(), m, 16);
      if (ec != std::errc() || ptr != toks[i].data() + toks[i].size()) {
        throw InvalidInput("bad explicit mask '" + toks[i] + "'");
      }
      masks.push_back(m);
    }
    return LocalSystem::explicit_family(ground, std::move(masks));
  } else {
    throw InvalidInput("unknown system kind '" + kind + "'");
  }
  if (!(system->ground() == ground)) {
    throw InvalidInput(kind + " system ground " + system->ground().to_string() +
                       " differs from the incident edges " + ground.to_string());
  }
  return *system;
}

ScriptFile parse_script_file(std::string_view text) {
  ScriptFile file;
  std::size_t number = 0;
  for (std::string_view raw : lines_of(text)) {
    ++number;
    std::string_view line = clean(raw);
    if (line.empty()) continue;
    std::vector<std::string> toks = split_ws(line);
    try {
      if (toks[0] == "fallback" && toks.size() == 2) {
        file.fallback = parse_oracle_strategy(toks[1]);
        if (file.fallback == OracleStrategy::Scripted) {
          throw InvalidInput("fallback cannot be scripted");
        }
      } else if (toks[0] == "alpha" && toks.size() == 2) {
        file.alpha = parse_rational(toks[1]);
      } else if (toks[0].size() > 1 && toks[0].back() == ':') {
        VertexId v = parse_vertex(std::string_view(toks[0]).substr(0, toks[0].size() - 1));
        file.entries[v].push_back(parse_script_tokens(toks, 1, line));
      } else {
        throw InvalidInput("unrecognized line '" + std::string(line) + "'");
      }
    } catch (const InvalidInput& e) {
      fail_line(number, e.what());
    }
  }
  return file;
}

std::string write_script_file(const ScriptFile& file) {
  std::ostringstream out;
  out << "fallback " << to_string(file.fallback) << '\n';
  out << "alpha " << to_string(file.alpha) << '\n';
  for (const auto& [v, entries] : file.entries) {
    for (const auto& e : entries) {
      out << v << ": " << e.query.to_string() << " -> " << e.answer.to_string() << '\n';
    }
  }
  return out.str();
}

std::string write_instance(const Instance& instance) {
  const Hypergraph& h = instance.structure();
  std::ostringstream out;
  out << "locind-instance 1\n";
  out << "kind " << (h.kind() == StructureKind::Graph ? "graph" : "hypergraph") << '\n';
  out << "vertices " << h.num_vertices() << '\n';
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    out << "edge";
    for (VertexId v : h.edge(e)) out << ' ' << v;
    out << '\n';
  }
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    out << "system " << v << ' ' << instance.system(v).descriptor() << '\n';
  }
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    const LocalOracle& o = instance.oracle(v);
    if (o.strategy() == OracleStrategy::Exhaustive && o.alpha() == 1) continue;
    out << "oracle " << v << ' ' << to_string(o.strategy()) << " alpha " << to_string(o.alpha());
    if (o.strategy() == OracleStrategy::Scripted) out << " fallback " << to_string(o.fallback());
    out << " pref " << join_edges(o.preference()) << '\n';
    for (const auto& entry : o.script()) {
      out << "script " << v << ' ' << entry.query.to_string() << " -> "
          << entry.answer.to_string() << '\n';
    }
  }
  if (const auto& bp = instance.bipartition()) {
    out << "bipartition";
    for (VertexId v : bp->left) out << ' ' << v;
    out << " |";
    for (VertexId v : bp->right) out << ' ' << v;
    out << '\n';
  }
  if (const auto& k = instance.declared_k()) out << "k " << to_string(*k) << '\n';
  return out.str();
}

Instance read_instance(std::string_view text, const std::filesystem::path& base_dir) {
  struct OracleSpec {
    OracleStrategy strategy = OracleStrategy::Exhaustive;
    OracleStrategy fallback = OracleStrategy::Exhaustive;
    Rational alpha{1};
    std::vector<EdgeId> pref;
    std::vector<ScriptEntry> script;
    bool declared = false;
  };
  std::optional<StructureKind> kind;
  std::optional<std::size_t> n;
  std::vector<std::vector<VertexId>> edges;
  std::map<VertexId, std::string> descriptors;
  std::map<VertexId, OracleSpec> specs;
  std::optional<ScriptFile> script_file;
  std::optional<Bipartition> bipartition;
  std::optional<Rational> k;
  SingletonPolicy policy = SingletonPolicy::Strict;
  bool header = false;

  std::size_t number = 0;
  for (std::string_view raw : lines_of(text)) {
    ++number;
    std::string_view line = clean(raw);
    if (line.empty()) continue;
    std::vector<std::string> toks = split_ws(line);
    const std::string& key = toks[0];
    try {
      if (!header) {
        if (key != "locind-instance" || toks.size() != 2 || toks[1] != "1") {
          throw InvalidInput("expected header 'locind-instance 1'");
        }
        header = true;
      } else if (key == "kind" && toks.size() == 2) {
        if (toks[1] == "graph") {
          kind = StructureKind::Graph;
        } else if (toks[1] == "hypergraph") {
          kind = StructureKind::Hypergraph;
        } else {
          throw InvalidInput("unknown kind '" + toks[1] + "'");
        }
      } else if (key == "vertices" && toks.size() == 2) {
        n = parse_size(toks[1]);
      } else if (key == "edges" && toks.size() == 2) {
        // Optional count line; the edge lines are authoritative.
      } else if (key == "edge") {
        std::vector<VertexId> e;
        for (std::size_t i = 1; i < toks.size(); ++i) e.push_back(parse_vertex(toks[i]));
        edges.push_back(std::move(e));
      } else if (key == "system" && toks.size() >= 3) {
        VertexId v = parse_vertex(toks[1]);
        std::string_view rest = after_tokens(line, 2);
        if (!descriptors.emplace(v, std::string(rest)).second) {
          throw InvalidInput("duplicate system for vertex " + toks[1]);
        }
      } else if (key == "oracle" && toks.size() >= 3) {
        VertexId v = parse_vertex(toks[1]);
        OracleSpec& spec = specs[v];
        if (spec.declared) throw InvalidInput("duplicate oracle for vertex " + toks[1]);
        spec.declared = true;
        spec.strategy = parse_oracle_strategy(toks[2]);
        for (std::size_t i = 3; i < toks.size(); i += 2) {
          if (i + 1 >= toks.size()) throw InvalidInput("oracle option without value");
          if (toks[i] == "alpha") {
            spec.alpha = parse_rational(toks[i + 1]);
          } else if (toks[i] == "fallback") {
            spec.fallback = parse_oracle_strategy(toks[i + 1]);
          } else if (toks[i] == "pref") {
            spec.pref = parse_edge_list(toks[i + 1]);
          } else {
            throw InvalidInput("unknown oracle option '" + toks[i] + "'");
          }
        }
      } else if (key == "script" && toks.size() >= 2) {
        VertexId v = parse_vertex(toks[1]);
        specs[v].script.push_back(parse_script_tokens(toks, 2, line));
      } else if (key == "scripts" && toks.size() == 2) {
        std::filesystem::path p = toks[1];
        if (p.is_relative()) p = base_dir / p;
        script_file = parse_script_file(read_file(p));
      } else if (key == "bipartition") {
        Bipartition bp;
        bool right = false;
        for (std::size_t i = 1; i < toks.size(); ++i) {
          if (toks[i] == "|") {
            right = true;
            continue;
          }
          (right ? bp.right : bp.left).push_back(parse_vertex(toks[i]));
        }
        if (!right) throw InvalidInput("bipartition needs 'LEFT | RIGHT'");
        bipartition = std::move(bp);
      } else if (key == "k" && toks.size() == 2) {
        k = parse_rational(toks[1]);
      } else if (key == "policy" && toks.size() == 2) {
        if (toks[1] == "strict") {
          policy = SingletonPolicy::Strict;
        } else if (toks[1] == "lenient") {
          policy = SingletonPolicy::Lenient;
        } else {
          throw InvalidInput("unknown policy '" + toks[1] + "'");
        }
      } else {
        throw InvalidInput("unrecognized line '" + std::string(line) + "'");
      }
    } catch (const InvalidInput& e) {
      fail_line(number, e.what());
    }
  }
  if (!header) throw InvalidInput("empty instance file");
  if (!kind || !n) throw InvalidInput("instance file needs 'kind' and 'vertices' lines");

  Hypergraph h(*n, std::move(edges), *kind);
  std::vector<LocalSystem> systems;
  for (VertexId v = 0; v < *n; ++v) {
    auto it = descriptors.find(v);
    EdgeSet ground = h.incident_set(v);
    if (it == descriptors.end()) {
      systems.push_back(LocalSystem::free(ground));
      continue;
    }
    try {
      systems.push_back(parse_system_descriptor(it->second, ground));
    } catch (const InvalidInput& e) {
      throw InvalidInput("system of vertex " + std::to_string(v) + ": " + e.what());
    }
  }
  if (descriptors.size() && descriptors.rbegin()->first >= *n) {
    throw InvalidInput("system line for a vertex outside 0.." + std::to_string(*n - 1));
  }
  if (script_file) {
    for (auto& [v, entries] : script_file->entries) {
      OracleSpec& spec = specs[v];
      if (!spec.declared) {
        spec.declared = true;
        spec.strategy = OracleStrategy::Scripted;
        spec.alpha = script_file->alpha;
        spec.fallback = script_file->fallback;
      }
      spec.script.insert(spec.script.end(), entries.begin(), entries.end());
    }
  }
  std::vector<LocalOracle> oracles(*n, LocalOracle::exhaustive());
  for (auto& [v, spec] : specs) {
    if (v >= *n) throw InvalidInput("oracle for a vertex outside the instance");
    if (!spec.script.empty() && spec.strategy != OracleStrategy::Scripted) {
      if (spec.declared) {
        throw InvalidInput("script lines for vertex " + std::to_string(v) +
                           " whose oracle is not scripted");
      }
      spec.strategy = OracleStrategy::Scripted;
    }
    switch (spec.strategy) {
      case OracleStrategy::Exhaustive:
        if (spec.alpha != 1) throw InvalidInput("exhaustive oracles have alpha 1");
        break;
      case OracleStrategy::GreedyPref:
        oracles[v] = LocalOracle::greedy(spec.alpha, std::move(spec.pref));
        break;
      case OracleStrategy::Scripted:
        oracles[v] = LocalOracle::scripted(spec.alpha, std::move(spec.script), spec.fallback,
                                           std::move(spec.pref));
        break;
    }
  }
  return Instance(std::move(h), std::move(systems), std::move(oracles), std::move(bipartition),
                  k, policy);
}

Instance load_instance(const std::filesystem::path& path) {
  return read_instance(read_file(path), path.parent_path());
}

void save_instance(const std::filesystem::path& path, const Instance& instance) {
  write_file(path, write_instance(instance));
}

ResultFile to_result(const SolveTrace& trace) {
  ResultFile r;
  r.algorithm = trace.algorithm;
  r.independent = trace.independent;
  r.residual = trace.residual;
  r.bound = trace.bound;
  r.order = trace.order;
  r.chosen_class = trace.chosen_class;
  r.class_count = trace.classes.size();
  r.iterations = trace.iterations;
  r.queries = trace.queries;
  return r;
}

std::string write_result(const ResultFile& r, bool with_iterations) {
  std::ostringstream out;
  out << "locind-result 1\n";
  out << "algorithm " << to_string(r.algorithm) << '\n';
  out << "independent " << r.independent.to_string() << '\n';
  out << "size " << r.independent.size() << '\n';
  out << "residual " << r.residual.to_string() << '\n';
  out << "bound " << to_string(r.bound.value) << ' '
      << (r.bound.guaranteed ? "guaranteed" : "not-guaranteed") << '\n';
  out << "formula " << r.bound.formula << '\n';
  out << "params alpha " << to_string(r.bound.alpha) << " n " << r.bound.vertices << " gamma "
      << r.bound.width << " delta " << r.bound.rank << " k "
      << (r.bound.k ? to_string(*r.bound.k) : std::string("-")) << '\n';
  out << "order";
  for (VertexId v : r.order) out << ' ' << v;
  out << '\n';
  if (r.class_count > 0) {
    out << "classes " << r.class_count << " chosen "
        << (r.chosen_class ? std::to_string(*r.chosen_class) : std::string("-")) << '\n';
  }
  if (with_iterations) {
    for (const auto& it : r.iterations) {
      out << "iteration " << it.vertex << " case " << it.case_taken << " part "
          << it.part.to_string() << " chosen " << it.chosen.to_string() << " residual "
          << it.residual.to_string() << '\n';
    }
  }
  for (const auto& q : r.queries) {
    out << "query " << q.vertex << ' ' << q.query.to_string() << " -> " << q.answer.to_string()
        << '\n';
  }
  return out.str();
}

ResultFile read_result(std::string_view text) {
  ResultFile r;
  bool header = false;
  std::size_t number = 0;
  std::optional<std::size_t> size;
  for (std::string_view raw : lines_of(text)) {
    ++number;
    std::string_view line = clean(raw);
    if (line.empty()) continue;
    std::vector<std::string> toks = split_ws(line);
    const std::string& key = toks[0];
    try {
      if (!header) {
        if (key != "locind-result" || toks.size() != 2 || toks[1] != "1") {
          throw InvalidInput("expected header 'locind-result 1'");
        }
        header = true;
      } else if (key == "algorithm" && toks.size() == 2) {
        r.algorithm = parse_algorithm(toks[1]);
      } else if (key == "independent" && toks.size() == 2) {
        r.independent = parse_edge_set(toks[1]);
      } else if (key == "residual" && toks.size() == 2) {
        r.residual = parse_edge_set(toks[1]);
      } else if (key == "size" && toks.size() == 2) {
        size = parse_size(toks[1]);
      } else if (key == "bound" && toks.size() == 3) {
        r.bound.value = parse_rational(toks[1]);
        if (toks[2] != "guaranteed" && toks[2] != "not-guaranteed") {
          throw InvalidInput("bound must be 'guaranteed' or 'not-guaranteed'");
        }
        r.bound.guaranteed = toks[2] == "guaranteed";
      } else if (key == "formula") {
        r.bound.formula = std::string(after_tokens(line, 1));
      } else if (key == "params" && toks.size() == 11) {
        r.bound.alpha = parse_rational(toks[2]);
        r.bound.vertices = parse_size(toks[4]);
        r.bound.width = parse_size(toks[6]);
        r.bound.rank = parse_size(toks[8]);
        if (toks[10] != "-") r.bound.k = parse_rational(toks[10]);
      } else if (key == "order") {
        for (std::size_t i = 1; i < toks.size(); ++i) r.order.push_back(parse_vertex(toks[i]));
      } else if (key == "classes" && toks.size() == 4) {
        r.class_count = parse_size(toks[1]);
        if (toks[3] != "-") r.chosen_class = parse_size(toks[3]);
      } else if (key == "iteration" && toks.size() == 10) {
        IterationRecord it;
        it.vertex = parse_vertex(toks[1]);
        it.case_taken = parse_number<int>(toks[3], "case");
        it.part = parse_edge_set(toks[5]);
        it.chosen = parse_edge_set(toks[7]);
        it.residual = parse_edge_set(toks[9]);
        r.iterations.push_back(std::move(it));
      } else if (key == "query" && toks.size() == 5) {
        ScriptEntry e = parse_script_tokens(toks, 2, line);
        r.queries.push_back({parse_vertex(toks[1]), e.query, e.answer});
      } else {
        throw InvalidInput("unrecognized line '" + std::string(line) + "'");
      }
    } catch (const InvalidInput& e) {
      fail_line(number, e.what());
    }
  }
  if (!header) throw InvalidInput("empty result file");
  if (size && *size != r.independent.size()) {
    throw InvalidInput("result size line disagrees with the independent set");
  }
  return r;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw InvalidInput("failed writing '" + path.string() + "'");
}

}  // namespace locind
