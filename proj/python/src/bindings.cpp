#include <sstream>
#include <string>
#include <vector>

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qcc/classifier4.hpp"
#include "qcc/cli.hpp"
#include "qcc/criteria.hpp"
#include "qcc/lie_closure.hpp"
#include "qcc/model_zoo.hpp"
#include "qcc/report.hpp"
#include "qcc/spec_file.hpp"

namespace py = pybind11;

namespace qcc {
namespace {

std::vector<double> to_vector(std::span<const double> s) {
  return {s.begin(), s.end()};
}

// JSON crosses the boundary as text; the Python side decodes it.
std::string check(const SystemSpec& spec, bool oracle, double eps_param,
                  double eps_rank) {
  SpecFile file = to_spec_file(spec, "python");
  return report_json(make_report(file, eps_param, eps_rank, oracle)).dump();
}

py::dict params_dict(const DerivedParams& p) {
  py::dict d;
  d["mu"] = p.mu;
  d["v"] = p.v;
  d["trace_h0"] = p.trace_h0;
  d["trace_zero"] = p.trace_zero();
  d["equally_spaced"] = p.equally_spaced;
  d["eps_param"] = p.eps_param;
  return d;
}

py::tuple run(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"qcc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code =
      run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace
}  // namespace qcc

PYBIND11_MODULE(_core, m) {
  using namespace qcc;
  m.doc() = "Controllability of dipole-coupled N-level systems";

  py::register_exception<SpecFileError>(m, "SpecFileError", PyExc_ValueError);

  m.attr("DEFAULT_EPS_PARAM") = kDefaultEpsParam;
  m.attr("DEFAULT_EPS_RANK") = kDefaultEpsRank;

  py::class_<SystemSpec>(m, "SystemSpec")
      .def(py::init<std::vector<double>, std::vector<double>>(),
           py::arg("levels"), py::arg("dipoles"))
      .def_property_readonly("size", &SystemSpec::size)
      .def_property_readonly(
          "levels", [](const SystemSpec& s) { return to_vector(s.levels()); })
      .def_property_readonly(
          "dipoles", [](const SystemSpec& s) { return to_vector(s.dipoles()); })
      .def(py::self == py::self)
      .def("__repr__", [](const SystemSpec& s) {
        return "SystemSpec(N=" + std::to_string(s.size()) + ")";
      });

  m.def(
      "derive_params",
      [](const SystemSpec& s, double eps) {
        return params_dict(derive_params(s, eps));
      },
      py::arg("spec"), py::arg("eps_param") = kDefaultEpsParam);

  m.def("check_json", &check, py::arg("spec"), py::arg("oracle") = false,
        py::arg("eps_param") = kDefaultEpsParam,
        py::arg("eps_rank") = kDefaultEpsRank);

  py::class_<LieClosureResult>(m, "ClosureResult")
      .def_readonly("size", &LieClosureResult::size)
      .def_readonly("dimension", &LieClosureResult::dimension)
      .def_readonly("contains_identity", &LieClosureResult::contains_identity)
      .def_readonly("generations", &LieClosureResult::generations)
      .def_readonly("commutators", &LieClosureResult::commutators)
      .def_readonly("fragile", &LieClosureResult::fragile)
      .def_readonly("grading_blocks", &LieClosureResult::grading_blocks)
      .def_property_readonly("identification",
                             [](const LieClosureResult& r) {
                               return r.identification.tag();
                             })
      .def_property_readonly("label",
                             [](const LieClosureResult& r) {
                               return r.identification.label(r.size);
                             })
      .def("max_error_bound", &LieClosureResult::max_error_bound);

  m.def(
      "dynamical_algebra",
      [](const SystemSpec& s, double eps_rank, bool use_grading,
         bool reject_fragile) {
        ClosureOptions o;
        o.eps_rank = eps_rank;
        o.use_grading = use_grading;
        o.reject_fragile = reject_fragile;
        return dynamical_algebra(s, o);
      },
      py::arg("spec"), py::arg("eps_rank") = kDefaultEpsRank,
      py::arg("use_grading") = true, py::arg("reject_fragile") = false);

  m.def(
      "classify4",
      [](const SystemSpec& s, double eps) {
        const auto [c, v] = classify4(s, derive_params(s, eps));
        py::dict d;
        d["row"] = c.table_row;
        d["case"] = std::string(to_string(c.tag));
        d["algebra"] = c.expected.tag;
        d["dimension"] = c.expected.dimension;
        d["conclusion"] = std::string(to_string(v.conclusion));
        return d;
      },
      py::arg("spec"), py::arg("eps_param") = kDefaultEpsParam);

  py::class_<ModelParams>(m, "ModelParams")
      .def(py::init<>())
      .def_readwrite("size", &ModelParams::size)
      .def_readwrite("ground_energy", &ModelParams::ground_energy)
      .def_readwrite("b", &ModelParams::b)
      .def_readwrite("c", &ModelParams::c)
      .def_readwrite("z", &ModelParams::z)
      .def_readwrite("spacing", &ModelParams::spacing)
      .def_readwrite("delta", &ModelParams::delta)
      .def_readwrite("coupling", &ModelParams::coupling)
      .def_readwrite("upper_energy", &ModelParams::upper_energy)
      .def_readwrite("mu1", &ModelParams::mu1)
      .def_readwrite("mu2", &ModelParams::mu2)
      .def_readwrite("odd_spacings", &ModelParams::odd_spacings)
      .def_readwrite("dipoles", &ModelParams::dipoles)
      .def_property(
          "model",
          [](const ModelParams& p) { return std::string(to_string(p.model)); },
          [](ModelParams& p, const std::string& name) {
            p.model = model_from_string(name);
          })
      .def_property(
          "variant",
          [](const ModelParams& p) {
            return std::string(p.variant == DipoleVariant::uniform
                                   ? "uniform"
                                   : "sqrt_ladder");
          },
          [](ModelParams& p, const std::string& v) {
            if (v == "uniform") {
              p.variant = DipoleVariant::uniform;
            } else if (v == "sqrt_ladder") {
              p.variant = DipoleVariant::sqrt_ladder;
            } else {
              throw std::invalid_argument("unknown dipole variant '" + v + "'");
            }
          });

  m.def("make_model", &make_model, py::arg("params"));
  m.def("theorem4_family", &theorem4_family, py::arg("n"), py::arg("d1"));

  m.def(
      "parse_spec",
      [](const std::string& text) {
        return parse_spec_file(text, "<string>").to_spec();
      },
      py::arg("text"));
  m.def(
      "dump_spec",
      [](const SystemSpec& s, const std::string& name) {
        return dump_spec_file(to_spec_file(s, name));
      },
      py::arg("spec"), py::arg("name") = "");

  m.def("run_cli", &run, py::arg("args"));
}
