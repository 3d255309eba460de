#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "abzeta/cli.hpp"
#include "abzeta/errors.hpp"
#include "abzeta/format.hpp"
#include "abzeta/group.hpp"
#include "abzeta/series.hpp"
#include "abzeta/sigma.hpp"
#include "abzeta/xpoly.hpp"

namespace py = pybind11;
using namespace abzeta;

// Big numbers cross the boundary as decimal strings; the Python wrapper
// turns them into int / Fraction.
namespace {

Integer to_integer(const py::int_& x) { return Integer(py::str(py::handle(x)).cast<std::string>()); }

GroupShape shape(const py::int_& p, const std::vector<int>& f) { return GroupShape(to_integer(p), f); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact subgroup sums of finite abelian p-groups";

  py::register_exception<NotDivisible>(m, "NotDivisible", PyExc_ArithmeticError);
  py::register_exception<NonIntegerCoefficient>(m, "NonIntegerCoefficient", PyExc_ArithmeticError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<NonIntegralPower>(m, "NonIntegralPower", PyExc_ValueError);
  py::register_exception<PoleHit>(m, "PoleHit", PyExc_ZeroDivisionError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  m.def(
      "sigma_poly",
      [](const std::vector<int>& f, const std::string& method) {
        const SigmaMethod mth = parse_method(method);
        if (mth == SigmaMethod::kOracle) throw DomainError("the oracle needs a prime; use order_profile");
        return to_string(sigma_poly(GroupShape(2, f), mth));
      },
      py::arg("f"), py::arg("method") = "fast");

  m.def(
      "sigma_value",
      [](const py::int_& p, long a, const std::vector<int>& f, const std::string& method) {
        return sigma_value(shape(p, f), a, parse_method(method)).get_str();
      },
      py::arg("p"), py::arg("a"), py::arg("f"), py::arg("method") = "fast");

  m.def(
      "order_profile",
      [](const py::int_& p, const std::vector<int>& f) {
        std::vector<std::string> out;
        for (const auto& c : order_profile(shape(p, f)).counts) out.push_back(c.get_str());
        return out;
      },
      py::arg("p"), py::arg("f"));

  m.def(
      "series_numerator", [](int rank) { return to_string(normalize_to_B(q_series_recursive(rank))); },
      py::arg("rank"));

  m.def(
      "det_numerator",
      [](int rank, bool q_one) {
        std::map<int, std::string> out;
        for (const auto& [n, c] : specialize_det(q_series_recursive(rank), q_one).num) out[n] = to_string(c);
        return out;
      },
      py::arg("rank"), py::arg("q_one") = false);

  m.def(
      "dirichlet_p_factor",
      [](int rank, long a, const py::int_& p, const std::string& s) {
        return dirichlet_p_factor(rank, a, to_integer(p), parse_rational(s)).get_str();
      },
      py::arg("rank"), py::arg("a"), py::arg("p"), py::arg("s"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        int code = 0;
        {
          py::gil_scoped_release release;
          code = run_cli(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
