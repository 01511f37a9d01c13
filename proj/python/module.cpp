#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "locind/algorithms.hpp"
#include "locind/bench.hpp"
#include "locind/errors.hpp"
#include "locind/exact.hpp"
#include "locind/io.hpp"
#include "locind/ordering.hpp"
#include "locind/reductions.hpp"

namespace py = pybind11;
using namespace locind;

namespace {

std::vector<EdgeId> ids(const EdgeSet& s) { return s.to_vector(); }

EdgeSet edge_set(const std::vector<EdgeId>& v) { return EdgeSet(std::span<const EdgeId>(v)); }

std::optional<std::string> opt_str(const std::optional<Rational>& r) {
  if (!r) return std::nullopt;
  return to_string(*r);
}

std::vector<SystemKind> parse_kinds(const std::vector<std::string>& names) {
  std::vector<SystemKind> out;
  for (const auto& n : names) out.push_back(parse_system_kind(n));
  return out;
}

FamilySpec make_spec(const std::string& family, std::size_t n, std::size_t m, std::size_t right,
                     double p, std::size_t k, std::size_t d, const std::vector<std::string>& kinds,
                     const std::vector<std::string>& oracles) {
  FamilySpec spec;
  spec.family = parse_family(family);
  spec.n = n;
  spec.m = m;
  spec.right = right;
  spec.p = p;
  spec.k = k;
  spec.d = d;
  spec.kinds = parse_kinds(kinds);
  spec.strategies.clear();
  for (const auto& o : oracles) spec.strategies.push_back(parse_oracle_strategy(o));
  return spec;
}

}  // namespace

PYBIND11_MODULE(_locind, m) {
  m.doc() = "Locally defined independence systems under approximate local oracles";

  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
  py::register_exception<OracleViolation>(m, "OracleViolation", PyExc_RuntimeError);
  py::register_exception<IndependenceViolation>(m, "IndependenceViolation", PyExc_RuntimeError);
  py::register_exception<UnsupportedInstance>(m, "UnsupportedInstance", PyExc_ValueError);

  py::class_<Instance>(m, "Instance")
      .def_static("from_text", [](const std::string& text) { return read_instance(text); })
      .def_static("load", [](const std::string& path) { return load_instance(path); })
      .def("to_text", [](const Instance& i) { return write_instance(i); })
      .def("save", [](const Instance& i, const std::string& path) { save_instance(path, i); })
      .def_property_readonly("num_vertices", &Instance::num_vertices)
      .def_property_readonly("num_edges", &Instance::num_edges)
      .def_property_readonly("edges", [](const Instance& i) { return i.structure().edges(); })
      .def_property_readonly("rank", [](const Instance& i) { return i.structure().rank(); })
      .def_property_readonly("alpha", [](const Instance& i) { return to_string(i.alpha()); })
      .def_property_readonly("systems",
                             [](const Instance& i) {
                               std::vector<std::string> out;
                               for (const auto& s : i.systems()) out.push_back(s.descriptor());
                               return out;
                             })
      .def_property_readonly("bipartition",
                             [](const Instance& i) -> std::optional<py::tuple> {
                               if (!i.bipartition()) return std::nullopt;
                               return py::make_tuple(i.bipartition()->left, i.bipartition()->right);
                             })
      .def("is_independent",
           [](const Instance& i, const std::vector<EdgeId>& e) { return i.is_independent(edge_set(e)); });

  py::class_<SolveTrace>(m, "Trace")
      .def_property_readonly("algorithm", [](const SolveTrace& t) { return to_string(t.algorithm); })
      .def_property_readonly("independent", [](const SolveTrace& t) { return ids(t.independent); })
      .def_property_readonly("residual", [](const SolveTrace& t) { return ids(t.residual); })
      .def_property_readonly("parts",
                             [](const SolveTrace& t) {
                               std::vector<std::vector<EdgeId>> out;
                               for (const auto& p : t.parts) out.push_back(ids(p));
                               return out;
                             })
      .def_property_readonly("bound", [](const SolveTrace& t) { return to_string(t.bound.value); })
      .def_property_readonly("guaranteed", [](const SolveTrace& t) { return t.bound.guaranteed; })
      .def_property_readonly("formula", [](const SolveTrace& t) { return t.bound.formula; })
      .def_property_readonly("order", [](const SolveTrace& t) { return t.order; })
      .def_property_readonly("classes",
                             [](const SolveTrace& t) {
                               std::vector<std::vector<EdgeId>> out;
                               for (const auto& c : t.classes) out.push_back(ids(c));
                               return out;
                             })
      .def_property_readonly("chosen_class", [](const SolveTrace& t) { return t.chosen_class; })
      .def_property_readonly("num_iterations", [](const SolveTrace& t) { return t.iterations.size(); })
      .def_property_readonly("num_queries", [](const SolveTrace& t) { return t.queries.size(); })
      .def("to_text", [](const SolveTrace& t, bool iterations) { return write_result(to_result(t), iterations); },
           py::arg("iterations") = false);

  m.def("algorithms", [] {
    std::vector<std::string> out;
    for (auto a : all_algorithms()) out.push_back(to_string(a));
    return out;
  });

  m.def(
      "solve",
      [](const Instance& inst, const std::string& algorithm,
         const std::optional<std::vector<VertexId>>& order, bool debug) {
        py::gil_scoped_release release;
        return solve(inst, parse_algorithm(algorithm), order, {debug});
      },
      py::arg("instance"), py::arg("algorithm"), py::arg("order") = std::nullopt,
      py::arg("debug") = false);

  m.def(
      "verify",
      [](const SolveTrace& t, const Instance& inst, std::size_t cap) {
        RatioReport r;
        {
          py::gil_scoped_release release;
          r = verify_ratio(t, inst, cap);
        }
        py::dict d;
        d["solution_size"] = r.solution_size;
        d["opt_size"] = r.opt_size;
        d["residual_opt"] = r.residual_opt;
        d["bound"] = to_string(r.bound.value);
        d["guaranteed"] = r.bound.guaranteed;
        d["ratio"] = opt_str(r.ratio);
        d["lemma_bound"] = opt_str(r.lemma_bound);
        d["independent"] = r.independent;
        d["passed"] = r.pass();
        return d;
      },
      py::arg("trace"), py::arg("instance"), py::arg("cap") = default_exact_cap());

  m.def(
      "max_independent",
      [](const Instance& inst, std::size_t cap) {
        auto r = max_independent(inst, inst.structure().all_edges(), cap);
        return py::make_tuple(r.opt_size, ids(r.witness));
      },
      py::arg("instance"), py::arg("cap") = default_exact_cap());

  m.def(
      "global_ksystem_param",
      [](const Instance& inst, std::size_t cap) { return to_string(global_ksystem_param(inst, cap)); },
      py::arg("instance"), py::arg("cap") = 12);

  m.def("rho", [](const std::string& alpha, std::size_t n) { return to_string(rho(parse_rational(alpha), n)); });
  m.def("rho_branch", [](const std::string& alpha, std::size_t n) { return rho_branch(parse_rational(alpha), n); });

  m.def("degeneracy_order", [](const Instance& inst) {
    auto o = degeneracy_order(inst.structure());
    return py::make_tuple(o.sequence(), o.width());
  });

  m.def(
      "fixture",
      [](const std::string& name, const std::string& alpha, std::size_t n) {
        auto fx = lowerbound_fixture(parse_fixture(name), {parse_rational(alpha), n});
        py::dict d;
        d["instance"] = fx.instance;
        d["algorithm"] = to_string(fx.algorithm);
        d["order"] = fx.order;
        d["expected_ratio"] = to_string(fx.expected_ratio);
        d["exact"] = fx.exact;
        return d;
      },
      py::arg("name"), py::arg("alpha") = "1", py::arg("n") = 6);

  m.def("maxsat_instance", [](const std::string& dimacs) { return maxsat_to_instance(parse_dimacs(dimacs)); });
  m.def("maxsat_assignment", [](const std::string& dimacs, const std::vector<EdgeId>& independent) {
    auto cnf = parse_dimacs(dimacs);
    auto a = decode_assignment(cnf, edge_set(independent));
    return py::make_tuple(a, satisfied_clauses(cnf, a));
  });

  py::class_<FamilySpec>(m, "FamilySpec");
  m.def("generate", &make_instance, py::arg("spec"), py::arg("seed"));
  m.def("family_spec", &make_spec, py::arg("family") = "gnp", py::arg("n") = 8, py::arg("m") = 8,
        py::arg("right") = 4, py::arg("p") = 0.4, py::arg("k") = 2, py::arg("d") = 3,
        py::arg("kinds") = std::vector<std::string>{"free"},
        py::arg("oracles") = std::vector<std::string>{"exhaustive"});

  m.def(
      "bench",
      [](const FamilySpec& spec, const std::vector<std::string>& algorithms, std::uint64_t seed,
         std::size_t seeds, std::size_t cap, unsigned threads) {
        BenchConfig config;
        config.spec = spec;
        for (const auto& a : algorithms) config.algorithms.push_back(parse_algorithm(a));
        config.seed = seed;
        config.seeds = seeds;
        config.cap = cap;
        config.threads = threads;
        py::gil_scoped_release release;
        return bench_csv(run_bench(config), false);
      },
      py::arg("spec"), py::arg("algorithms"), py::arg("seed") = 1, py::arg("seeds") = 10,
      py::arg("cap") = 22, py::arg("threads") = 1);
}
