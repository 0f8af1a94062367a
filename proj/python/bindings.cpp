// Python entry points mirroring the CLI commands.

#include "logsplit/frontend.hpp"
#include "logsplit/numcheck.hpp"
#include "logsplit/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace logsplit;

namespace {

ProblemText text(std::string equation, std::string h, std::string e, std::string field) {
  ProblemText in;
  in.equation = std::move(equation);
  in.h = std::move(h);
  in.e = std::move(e);
  in.field = std::move(field);
  return in;
}

void require_k(long k) {
  if (k == 0)
    throw std::invalid_argument("k must be nonzero");
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Witness search for log-derivative pullbacks of y^(m) = f";

  auto parse_error = py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<OrderViolation>(m, "OrderViolation", parse_error.ptr());
  py::register_exception<FieldViolation>(m, "FieldViolation", parse_error.ptr());
  py::register_exception<SingularInstance>(m, "SingularInstance", PyExc_RuntimeError);

  m.def(
      "search_json",
      [](const std::string &equation, int degree, int kmax, const std::string &field, int e_tdeg) {
        const Problem p = load_problem(text(equation, "", "0", field), true, false);
        SearchOptions opts;
        opts.e_tdeg = e_tdeg;
        SearchReport r;
        {
          py::gil_scoped_release release;
          r = search_witness(*p.f, degree, kmax, p.cfg, opts);
        }
        return py::make_tuple(render_json(r), r.notes);
      },
      py::arg("equation"), py::arg("degree") = 3, py::arg("kmax") = 3, py::arg("field") = "auto",
      py::arg("e_tdeg") = 2, "Search report as a JSON string, plus the diagnostic notes.");

  m.def(
      "verify",
      [](const std::string &equation, const std::string &h, const std::string &e, long k, const std::string &field) {
        require_k(k);
        const Problem p = load_problem(text(equation, h, e, field), true, true);
        return verify_witness(*p.f, Witness{*p.h, p.e, k}, p.cfg);
      },
      py::arg("equation"), py::arg("h"), py::arg("e") = "0", py::arg("k") = 1, py::arg("field") = "auto",
      "Exact check of (k*x0 - e)*h = Lie(h).");

  m.def(
      "construct",
      [](const std::string &h, const std::string &e, long k, int order, const std::string &field) {
        require_k(k);
        const std::string lhs = order > 0 ? "y^(" + std::to_string(order) + ")" : "";
        const Problem p = load_problem(text(lhs, h, e, field), false, true);
        const RatFun f = construct_f(*p.h, p.e, k, p.cfg);
        py::dict out;
        out["f"] = f.to_string();
        out["equation"] = equation_text(p.m, f);
        return out;
      },
      py::arg("h"), py::arg("e") = "0", py::arg("k") = 1, py::arg("order") = 0, py::arg("field") = "auto",
      "The f making (h, e, k) a witness; order 0 infers m from h.");

  m.def(
      "numcheck",
      [](const std::string &equation, const std::string &h, const std::string &e, long k, int trials,
         const std::string &field) {
        require_k(k);
        const Problem p = load_problem(text(equation, h, e, field), true, true);
        NumericReport r;
        {
          py::gil_scoped_release release;
          r = check_witness_numeric(*p.f, Witness{*p.h, p.e, k}, trials, p.cfg);
        }
        py::dict out;
        out["max_drift"] = r.max_drift;
        out["pass"] = r.pass;
        out["trials"] = r.trials;
        out["rejected"] = r.rejected;
        out["truncated"] = r.truncated;
        return out;
      },
      py::arg("equation"), py::arg("h"), py::arg("e") = "0", py::arg("k") = 1, py::arg("trials") = 5,
      py::arg("field") = "auto", "RK4 drift report for a candidate witness.");
}
