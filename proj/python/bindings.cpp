#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "ssg/benchmarks.hpp"
#include "ssg/cli.hpp"
#include "ssg/errors.hpp"
#include "ssg/oracle.hpp"
#include "ssg/report.hpp"
#include "ssg/system.hpp"

namespace py = pybind11;

namespace {

std::vector<std::string> to_strings(const std::vector<ssg::Polynomial>& polys,
                                    const ssg::SystemDescription& desc) {
  std::vector<std::string> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(ssg::format_polynomial(p, desc.variables));
  return out;
}

// Polynomials given as text, read in the ring of `desc`.
std::vector<ssg::Polynomial> parse_in(const ssg::SystemDescription& desc,
                                      const std::vector<std::string>& polys) {
  std::string text = ssg::format_ring_header(desc) + "\n";
  for (const auto& p : polys) text += p + "\n";
  return ssg::parse_system(text).generators;
}

py::dict stats_dict(const ssg::RunStats& s) {
  py::dict d;
  d["iterations"] = s.iterations;
  d["pairs_generated"] = s.pairs_generated;
  d["pairs_pruned"] = s.pairs_pruned;
  d["zero_reductions"] = s.zero_reductions;
  d["reduction_steps"] = s.reduction_steps;
  d["basis_size_raw"] = s.basis_size_raw;
  d["basis_size_reduced"] = s.basis_size_reduced;
  d["wall_time"] = s.wall_time;
  return d;
}

struct PyReport {
  std::vector<std::string> basis;
  std::vector<std::string> raw;
  std::string basis_text;
  std::string algorithm;
  py::dict stats;
  py::dict verdicts;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Groebner bases over prime fields with a signature-based algorithm";

  py::register_exception<ssg::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ssg::ContractError>(m, "ContractError", PyExc_ValueError);
  py::register_exception<ssg::InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

  py::class_<ssg::SystemDescription>(m, "System")
      .def_property_readonly("modulus",
                             [](const ssg::SystemDescription& d) { return d.ring.field().modulus(); })
      .def_property_readonly(
          "order",
          [](const ssg::SystemDescription& d) { return std::string(ssg::to_string(d.ring.order().kind())); })
      .def_readonly("variables", &ssg::SystemDescription::variables)
      .def_property_readonly("generators",
                             [](const ssg::SystemDescription& d) { return to_strings(d.generators, d); })
      .def_property_readonly("text", &ssg::format_system)
      .def("__repr__", [](const ssg::SystemDescription& d) {
        return "<ssg.System " + ssg::format_ring_header(d) + ", " +
               std::to_string(d.generators.size()) + " generators>";
      });

  py::class_<PyReport>(m, "Report")
      .def_readonly("basis", &PyReport::basis)
      .def_readonly("raw", &PyReport::raw)
      .def_readonly("basis_text", &PyReport::basis_text)
      .def_readonly("algorithm", &PyReport::algorithm)
      .def_readonly("stats", &PyReport::stats)
      .def_readonly("verdicts", &PyReport::verdicts);

  m.def("parse_system", &ssg::parse_system, py::arg("text"));

  m.def(
      "benchmark",
      [](const std::string& family, int n, std::uint32_t modulus, const std::string& order) {
        return ssg::gen_benchmark(ssg::benchmark_family_from_string(family), n, modulus,
                                  ssg::order_kind_from_string(order));
      },
      py::arg("family"), py::arg("n"), py::arg("modulus") = ssg::PrimeField::kDefaultModulus,
      py::arg("order") = "grevlex");

  m.def(
      "random_system",
      [](std::uint64_t seed, std::uint32_t modulus, const std::string& order) {
        ssg::RandomSystemParams params;
        params.modulus = modulus;
        params.order = ssg::order_kind_from_string(order);
        return ssg::random_system(seed, params);
      },
      py::arg("seed"), py::arg("modulus") = ssg::PrimeField::kDefaultModulus,
      py::arg("order") = "grevlex");

  m.def(
      "groebner",
      [](const ssg::SystemDescription& desc, const std::string& algorithm, bool certify,
         bool check_invariants, bool verify) {
        ssg::RunOptions options;
        options.algorithm = ssg::algorithm_from_string(algorithm);
        options.certify = certify;
        options.verify = verify;
        options.engine.check_invariants = check_invariants;
        ssg::RunReport report;
        {
          py::gil_scoped_release release;
          report = ssg::run_system(desc, options);
        }
        PyReport out;
        out.basis = to_strings(report.basis, desc);
        out.raw = to_strings(report.raw, desc);
        out.basis_text = ssg::format_basis(report.basis, desc);
        out.algorithm = std::string(ssg::to_string(report.algorithm));
        out.stats = stats_dict(report.stats);
        const auto& v = report.verdicts;
        if (v.gb_check) out.verdicts["gb_check"] = *v.gb_check;
        if (v.ideal_equality) out.verdicts["ideal_equality"] = *v.ideal_equality;
        if (v.certify) out.verdicts["certify"] = *v.certify;
        return out;
      },
      py::arg("system"), py::kw_only(), py::arg("algorithm") = "ssg", py::arg("certify") = false,
      py::arg("check_invariants") = false, py::arg("verify") = false);

  m.def(
      "buchberger",
      [](const ssg::SystemDescription& desc) {
        std::vector<ssg::Polynomial> basis;
        {
          py::gil_scoped_release release;
          basis = ssg::oracle::buchberger(desc.ring, desc.generators);
        }
        return to_strings(basis, desc);
      },
      py::arg("system"), "Unreduced Groebner basis from the reference Buchberger implementation.");

  m.def(
      "is_groebner_basis",
      [](const ssg::SystemDescription& desc, const std::vector<std::string>& basis) {
        return ssg::oracle::is_groebner_basis(desc.ring, parse_in(desc, basis));
      },
      py::arg("system"), py::arg("basis"));

  m.def(
      "verify",
      [](const ssg::SystemDescription& desc, const std::vector<std::string>& basis) {
        ssg::BasisCheck check = ssg::check_basis(desc.ring, desc.generators, parse_in(desc, basis));
        py::dict d;
        d["gb_check"] = check.groebner;
        d["ideal_equality"] = check.same_ideal;
        return d;
      },
      py::arg("system"), py::arg("basis"));

  m.def(
      "cli",
      [](const std::vector<std::string>& args) {
        std::vector<const char*> argv{"ssg"};
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        int code = ssg::cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the command line tool in-process; returns (exit_code, stdout, stderr).");
}
