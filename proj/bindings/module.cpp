#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spider/demos.hpp"
#include "spider/overlay.hpp"
#include "spider/solvers.hpp"

namespace py = pybind11;
using namespace spider;

namespace {

py::int_ to_py(const BigInt& value) {
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(value.str().c_str(), nullptr, 10));
}

BigInt from_py(const py::int_& value) {
  return BigInt(py::str(value).cast<std::string>());
}

Graph load(const std::string& path, const std::string& format) {
  return load_graph(path, graph_format_from_string(format));
}

SolverOptions options_for(const std::string& mode,
                          std::optional<Step> budget) {
  SolverOptions o;
  o.mode = overlay_mode_from_string(mode);
  o.budget = budget;
  return o;
}

py::object py_shortest_path(const Graph& g, const std::string& source,
                            const std::string& destination,
                            const std::string& mode,
                            std::optional<Step> budget) {
  auto out = shortest_path(g, source, destination, options_for(mode, budget));
  if (!out.result) return py::none();
  py::dict d;
  d["distance"] = out.result->distance;
  d["path"] = out.result->vertices;
  d["vertex_set"] = out.result->vertex_set;
  d["amplitude"] = to_py(out.result->arrival_amplitude);
  d["steps"] = out.result->arrival_step;
  d["signals_created"] = out.stats.signals_created;
  return d;
}

py::object py_hamiltonian_cycle(const Graph& g, const std::string& start,
                                std::optional<Step> budget) {
  auto out = hamiltonian_cycle(g, start, options_for("enumerate", budget));
  if (!out.result) return py::none();
  py::dict d;
  d["cycle"] = out.result->vertices;
  d["weight"] = out.result->total_weight;
  d["steps"] = out.result->arrival_step;
  d["signals_created"] = out.stats.signals_created;
  return d;
}

py::list py_enumerate_paths(const Graph& g, const std::string& source,
                            const std::string& destination, Step budget) {
  auto out = enumerate_paths(g, source, destination, budget);
  py::list result;
  for (const auto& [path, weight] : out.paths) {
    result.append(py::make_tuple(path, weight));
  }
  return result;
}

py::dict py_prime_labels(const Graph& g) {
  auto labeling = assign_primes(g);
  py::dict d;
  for (const auto& v : g.vertices()) d[py::str(v)] = to_py(labeling.prime(v));
  return d;
}

py::set py_factor_amplitude(const Graph& g, const py::int_& amplitude) {
  auto labeling = assign_primes(g);
  py::set out;
  for (const auto& v : factor_amplitude(from_py(amplitude), labeling)) {
    out.add(py::str(v));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(spidersim, m) {
  m.doc() = "signal-propagation network simulator: graph solvers and demos";

  py::class_<Graph>(m, "Graph")
      .def_property_readonly("vertices", &Graph::vertices)
      .def("edge_weight", &Graph::edge_weight)
      .def("total_weight", &Graph::total_weight)
      .def("__len__", [](const Graph& g) { return g.vertices().size(); });

  m.def("parse_graph",
        [](const std::string& text, const std::string& format) {
          return parse_graph(text, graph_format_from_string(format));
        },
        py::arg("text"), py::arg("format") = "autodetect",
        "Parse an edge-list or DIMACS graph from a string.");
  m.def("load_graph", &load, py::arg("path"),
        py::arg("format") = "autodetect",
        "Load an edge-list or DIMACS graph file.");

  m.def("shortest_path", &py_shortest_path, py::arg("graph"),
        py::arg("source"), py::arg("destination"), py::arg("mode") = "bfs",
        py::arg("budget") = py::none(),
        "Minimum-weight path query; None when unreachable.");
  m.def("hamiltonian_cycle", &py_hamiltonian_cycle, py::arg("graph"),
        py::arg("start"), py::arg("budget") = py::none(),
        "Hamiltonian cycle search; None when the graph has no cycle.");
  m.def("enumerate_paths", &py_enumerate_paths, py::arg("graph"),
        py::arg("source"), py::arg("destination"), py::arg("budget"),
        "All simple paths discovered within the step budget, ordered by "
        "nondecreasing weight.");

  m.def("prime_labels", &py_prime_labels, py::arg("graph"),
        "Vertex -> prime label, ascending vertex order.");
  m.def("factor_amplitude", &py_factor_amplitude, py::arg("graph"),
        py::arg("amplitude"),
        "Recover the visited-vertex set from a squarefree amplitude.");

  m.def("run_demo",
        [](const std::string& name, int length, const py::int_& amplitude,
           Step steps) {
          return spider::run_demo(name, length, from_py(amplitude), steps);
        },
        py::arg("name"), py::arg("length") = 1, py::arg("amplitude") = 1,
        py::arg("steps") = 12,
        "Render one occupancy frame per step for a built-in demo network.");
}
