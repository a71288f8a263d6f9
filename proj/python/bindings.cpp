#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "pentaflag/cli.hpp"
#include "pentaflag/extremal.hpp"
#include "pentaflag/graph.hpp"
#include "pentaflag/graph6.hpp"
#include "pentaflag/symbolic.hpp"

namespace py = pybind11;
using namespace pentaflag;

namespace {

py::object to_fraction(const symbolic::Rational& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(py::int_(py::str(q.get_num().get_str())), py::int_(py::str(q.get_den().get_str())));
}

py::int_ to_int(const symbolic::Integer& z) { return py::int_(py::str(z.get_str())); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact C5-density certificate verification";
  m.attr("module_version") = std::string(cli::kModuleVersion);

  m.def("opt_formula", [](long k) { return to_fraction(extremal::opt_formula(k)); }, py::arg("k"),
        "Limit of the maximum C5 density over K_{k+1}-free graphs, as a Fraction.");
  m.def(
      "multipartite_c5_count",
      [](std::vector<int> parts) { return to_int(extremal::multipartite_c5_count(graph::PartSizes(std::move(parts)))); },
      py::arg("parts"));
  m.def(
      "turan_density_c5", [](int k, long n) { return to_fraction(extremal::turan_density_c5(k, n).value); },
      py::arg("k"), py::arg("n"), "nu(C5, T_k(n)) / C(n, 5).");
  m.def(
      "enumerate_graph6",
      [](int n) {
        std::vector<std::string> out;
        for (const auto& g : graph::enumerate_graphs(n)) out.push_back(g.canon_key());
        return out;
      },
      py::arg("n"), "Canonical graph6 strings of all classes on n vertices.");
  m.def(
      "five_cycle_count", [](const std::string& g6) { return graph::count_five_cycles(graph6::decode(g6)); },
      py::arg("graph6"));
  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        int code;
        {
          py::gil_scoped_release release;
          code = cli::main_with_args(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the command-line tool; returns (exit code, stdout, stderr).");
}
