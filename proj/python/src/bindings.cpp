#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mzv/error.hpp"
#include "mzv/numerics.hpp"
#include "mzv/regularization.hpp"
#include "mzv/verify.hpp"

namespace py = pybind11;
using namespace mzv;

namespace {

Index to_index(const std::vector<int>& parts) {
  for (int p : parts)
    if (p < 1) throw Error(ErrorKind::ParseError, "index parts must be positive");
  return Index(parts);
}

EvalConfig config(double tol) {
  EvalConfig cfg;
  cfg.tol = tol;
  cfg.validate();
  return cfg;
}

py::tuple estimate(const Estimate& e) { return py::make_tuple(e.value, e.error); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Multiple zeta values, regularized polynomials and Kawashima functions";

  py::register_exception<Error>(m, "MzvError", PyExc_ValueError);

  m.def("zeta", [](const std::vector<int>& k, double tol) { return zeta_value(to_index(k), config(tol)); }, py::arg("k"),
        py::arg("tol") = 1e-12);
  m.def("zeta_star", [](const std::vector<int>& k, double tol) { return zeta_star_value(to_index(k), config(tol)); },
        py::arg("k"), py::arg("tol") = 1e-12);
  m.def("hurwitz_zeta",
        [](const std::vector<int>& k, double x, double tol) { return hurwitz_zeta_value(to_index(k), x, config(tol)); },
        py::arg("k"), py::arg("x"), py::arg("tol") = 1e-12);
  m.def("li", [](const std::vector<int>& k, double t, double x, double tol) {
        return estimate(li_hurwitz(to_index(k), x, t, config(tol)));
      },
        py::arg("k"), py::arg("t"), py::arg("x") = 0.0, py::arg("tol") = 1e-12, "(value, error) of Li^(x)_k(t)");
  m.def("digamma_1px", &digamma_1px, py::arg("x"), "psi(1+x)");

  m.def("kawashima",
        [](const std::vector<int>& k, double x, const std::string& method, double tol) -> py::object {
          const Index idx = to_index(k);
          const EvalConfig cfg = config(tol);
          if (method == "taylor") return estimate(f_taylor(idx, x, cfg));
          if (method == "theorem") return py::make_tuple(f_via_theorem(idx, x, 0.0, cfg), tol);
          if (method == "oracle") return py::make_tuple(f_partial_oracle(idx, x, cfg.cutoff_N), py::none());
          throw Error(ErrorKind::UsageError, "method must be taylor, theorem or oracle");
        },
        py::arg("k"), py::arg("x"), py::arg("method") = "taylor", py::arg("tol") = 1e-10, "(value, error) of F(k;x)");

  m.def("taylor_coefficients",
        [](const std::vector<int>& k, int order) { return taylor_hurwitz_coeffs(to_index(k), order).values; }, py::arg("k"),
        py::arg("order"));

  m.def("stuffle_reduce", [](const std::vector<int>& k) { return pretty(stuffle_reduce(to_index(k))); }, py::arg("k"));
  m.def("z_star", [](const std::vector<int>& k) { return pretty(z_star_star(to_index(k))); }, py::arg("k"));

  m.def("suite_names", &verify::suite_names);
  m.def("run_suite",
        [](const std::string& name, int max_weight) {
          verify::SuiteSpec o;
          o.max_weight = max_weight;
          const verify::CheckReport r = verify::run_suite(verify::merge_spec(name, o));
          py::dict out;
          out["suite"] = r.suite;
          out["checks"] = r.checks.size();
          out["failures"] = r.failures();
          out["passed"] = r.passed();
          out["wall_seconds"] = r.wall_seconds;
          out["jsonl"] = verify::to_jsonl(r);
          return out;
        },
        py::arg("name"), py::arg("max_weight") = 0, "Run a suite; max_weight 0 keeps the suite default");
}
