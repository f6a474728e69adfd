// Python bindings for the lacunary core. Big integers cross the boundary as
// Python ints (via their decimal text); jobs cross it as JSON text.

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <Python.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "lacunary/arith.hpp"
#include "lacunary/dependence.hpp"
#include "lacunary/error.hpp"
#include "lacunary/job.hpp"
#include "lacunary/pell.hpp"

namespace py = pybind11;
using namespace lacunary;

namespace {

Integer to_integer(const py::int_& v) { return Integer(std::string(py::str(v))); }

py::int_ to_py(const Integer& v) {
  PyObject* obj = PyLong_FromString(v.get_str().c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

std::vector<std::tuple<py::int_, unsigned>> py_factor(const py::int_& n,
                                                      std::uint64_t budget) {
  std::vector<std::tuple<py::int_, unsigned>> out;
  for (const auto& f : factor(to_integer(n), budget).factors)
    out.emplace_back(to_py(f.prime), f.exponent);
  return out;
}

std::tuple<py::int_, py::int_> py_crt(const std::vector<std::tuple<py::int_, py::int_>>& sys) {
  std::vector<Congruence> cs;
  for (const auto& [r, m] : sys) cs.push_back({to_integer(r), to_integer(m)});
  const CrtSolution s = crt_solve(cs);
  return {to_py(s.x), to_py(s.alpha)};
}

std::optional<std::tuple<py::int_, py::int_>> py_condition_i(
    std::tuple<std::uint64_t, unsigned> a, std::tuple<std::uint64_t, unsigned> b) {
  const auto w = condition_i_witness({std::get<0>(a), std::get<1>(a)},
                                     {std::get<0>(b), std::get<1>(b)});
  if (!w) return std::nullopt;
  return std::make_tuple(to_py(w->u), to_py(w->v));
}

}  // namespace

PYBIND11_MODULE(_lacunary, m) {
  m.doc() = "Lacunary series toolkit (C++ core)";
  m.attr("__version__") = LACUNARY_VERSION;

  static py::exception<Error> error(m, "LacunaryError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      error(e.what());
    }
  });

  m.def("is_prime", [](const py::int_& n) { return is_prime(to_integer(n)); }, py::arg("n"));
  m.def("factor", &py_factor, py::arg("n"), py::arg("budget") = kDefaultFactorBudget,
        "Prime factorization as a list of (prime, exponent).");
  m.def(
      "int_nth_root",
      [](const py::int_& n, unsigned long k) {
        const RootResult r = int_nth_root(to_integer(n), k);
        return std::make_tuple(to_py(r.root), r.exact);
      },
      py::arg("n"), py::arg("k"), "(floor(n^(1/k)), exact)");
  m.def("crt_solve", &py_crt, py::arg("congruences"),
        "Least nonnegative x and combined modulus for [(residue, modulus), ...].");
  m.def(
      "pell_fundamental",
      [](std::uint64_t D) {
        const PellSolution s = pell_fundamental(D);
        return std::make_tuple(to_py(s.x), to_py(s.y));
      },
      py::arg("D"));
  m.def(
      "pell_stream",
      [](std::uint64_t D, std::size_t count) {
        std::vector<std::tuple<py::int_, py::int_>> out;
        for (const auto& s : pell_stream(D, count)) out.emplace_back(to_py(s.x), to_py(s.y));
        return out;
      },
      py::arg("D"), py::arg("count"));
  m.def("condition_i_witness", &py_condition_i, py::arg("first"), py::arg("second"),
        "Minimal (u, v) with i1 u^j1 = i2 v^j2, or None.");
  m.def(
      "enumerate_equation_solutions",
      [](std::uint64_t i0, unsigned j0, std::uint64_t i, unsigned j, std::uint64_t u_max,
         std::uint64_t x_max) {
        std::vector<std::tuple<py::int_, py::int_, std::uint64_t, int>> out;
        for (const auto& s : enumerate_equation_solutions(i0, j0, i, j, u_max, x_max))
          out.emplace_back(to_py(s.x), to_py(s.y), s.u, s.sign);
        return out;
      },
      py::arg("i0"), py::arg("j0"), py::arg("i"), py::arg("j"), py::arg("u_max"),
      py::arg("x_max"), "(x, y, u, sign) with i0 x^j0 - i y^j = sign * u.");
  m.def(
      "run_job_json",
      [](const std::string& spec) {
        nlohmann::json parsed;
        try {
          parsed = nlohmann::json::parse(spec);
        } catch (const nlohmann::json::parse_error& e) {
          throw Error(ErrorCode::InvalidArgument, std::string("spec is not valid JSON: ") + e.what());
        }
        Report r;
        {
          py::gil_scoped_release release;
          r = run_job(parsed);
        }
        return std::make_tuple(r.body.dump(), r.exit_code);
      },
      py::arg("spec"), "Runs a JSON job; returns (report JSON, exit code).");
}
