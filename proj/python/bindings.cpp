#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "seqdim/dimension.hpp"
#include "seqdim/equation_io.hpp"
#include "seqdim/errors.hpp"
#include "seqdim/pencil.hpp"
#include "seqdim/subprocess_oracle.hpp"
#include "seqdim/unfolding.hpp"
#include "seqdim/window_oracle.hpp"

namespace py = pybind11;
using namespace seqdim;

namespace {

using Callback = std::function<std::string(std::int64_t)>;

// Oracle coefficients resolve to a Python callable when one is given, else
// to the subprocess named by `command` (or the one stored in the file).
OracleResolver resolver(std::optional<Callback> callback, std::optional<std::string> command) {
  return [callback, command](const std::string& stored) {
    if (callback) {
      auto fn = *callback;
      return OracleSequence(
          [fn](std::int64_t n) {
            py::gil_scoped_acquire gil;
            return Rational::parse(fn(n));
          },
          stored);
    }
    const std::string cmd = command.value_or(stored);
    if (cmd.empty()) return OracleSequence(OracleSequence::Evaluator{}, stored);
    return subprocess_sequence(cmd);
  };
}

DifferenceEquation load(const std::string& text) { return parse_equation(text); }

py::object dimension_value(const Dimension& d) {
  if (d.is_infinite()) return py::none();
  return py::int_(d.value());
}

std::vector<std::vector<std::string>> matrix_strings(const RatMatrix& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i].push_back(m(i, j).to_string());
  }
  return out;
}

std::string dump(const DifferenceEquation& e) { return to_json(e).dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact solution-space dimensions of linear difference equations";

  auto base = py::register_exception<Error>(m, "SeqdimError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  auto domain = py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<NonPeriodicCoefficients>(m, "NonPeriodicCoefficients", domain.ptr());
  py::register_exception<OracleError>(m, "OracleError", base.ptr());
  py::register_exception<RouteMismatch>(m, "RouteMismatch", base.ptr());

  m.def(
      "dimension",
      [](const std::string& text, const std::string& method, std::optional<std::size_t> h) {
        const DifferenceEquation e = load(text);
        DimensionReport r;
        {
          py::gil_scoped_release release;
          r = analyze(e, parse_method(method), h);
        }
        return py::make_tuple(dimension_value(r.dimension), r.block_size);
      },
      py::arg("equation"), py::arg("method") = "pencil", py::arg("H") = py::none(),
      "(dimension or None for infinite, H) for an equation in JSON form.");

  m.def(
      "unfold",
      [](const std::string& text, std::optional<std::size_t> h) {
        const DifferenceEquation e = load(text);
        const UnfoldedSystem s = h ? unfold(e, *h) : unfold(e);
        const UniPoly det = pencil_determinant(pencil_from_unfolded(s));
        std::vector<std::string> coeffs;
        for (const auto& c : det.coefficients()) coeffs.push_back(c.to_string());
        py::dict out;
        out["H"] = s.block_size;
        out["A0"] = matrix_strings(s.same_block);
        out["A1"] = matrix_strings(s.next_block);
        out["det"] = coeffs;
        out["det_text"] = det.to_string("t");
        return out;
      },
      py::arg("equation"), py::arg("H") = py::none());

  m.def(
      "interlace",
      [](const std::vector<std::string>& parts) {
        std::vector<DifferenceEquation> eqs;
        for (const auto& p : parts) eqs.push_back(load(p));
        return dump(interlace(eqs));
      },
      py::arg("equations"));

  m.def(
      "rotate", [](const std::string& text, std::int64_t s) { return dump(rotate(load(text), s)); },
      py::arg("equation"), py::arg("shift"));

  m.def("free_window_equation", [](std::size_t d) { return dump(free_window_equation(d)); });
  m.def("free_half_line_equation", [] { return dump(free_half_line_equation()); });
  m.def("zero_solution_equation", [](std::size_t r) { return dump(zero_solution_equation(r)); });
  m.def(
      "prescribed_dimension_equation",
      [](std::size_t r, std::optional<std::size_t> d) {
        return dump(prescribed_dimension_equation(r, d ? Dimension::finite(*d) : Dimension::infinite()));
      },
      py::arg("r"), py::arg("d"));
  m.def("binomial_equation", [](std::size_t a) { return dump(binomial_equation(a)); });
  m.def(
      "signal_equation",
      [](const std::string& command) {
        return dump(signal_equation(OracleSequence(OracleSequence::Evaluator{}, command)));
      },
      py::arg("command") = "");
  m.def(
      "finite_dichotomy_equation",
      [](std::size_t a, std::size_t b, const std::string& command) {
        return dump(
            finite_dichotomy_equation(a, b, OracleSequence(OracleSequence::Evaluator{}, command)));
      },
      py::arg("a"), py::arg("b"), py::arg("command") = "");
  m.def(
      "infinite_dichotomy_equation",
      [](std::size_t b, const std::string& command) {
        return dump(infinite_dichotomy_equation(b, OracleSequence(OracleSequence::Evaluator{}, command)));
      },
      py::arg("b"), py::arg("command") = "");

  m.def(
      "window_solution_dim",
      [](const std::string& text, std::size_t w) { return window_solution_dim(load(text), w); },
      py::arg("equation"), py::arg("radius"));

  m.def(
      "projected_dim",
      [](const std::string& text, std::size_t inner, std::size_t outer) {
        return projected_dim(load(text), inner, outer);
      },
      py::arg("equation"), py::arg("inner"), py::arg("outer"));

  m.def(
      "estimate_dimension",
      [](const std::string& text, std::size_t inner, std::optional<std::size_t> step,
         std::size_t stall, std::size_t cap, std::optional<std::string> command,
         std::optional<Callback> callback) {
        const DifferenceEquation e = parse_equation(text, resolver(callback, command));
        OracleConfig cfg;
        cfg.inner_start = inner;
        cfg.outer_step = step;
        cfg.stall_threshold = stall;
        cfg.cap = cap;
        OracleEstimate est;
        {
          py::gil_scoped_release release;
          est = estimate_dimension(e, cfg);
        }
        py::dict out;
        out["value"] = est.value;
        out["status"] = std::string(to_string(est.status));
        out["inner_radius"] = est.inner_radius;
        out["outer_radius"] = est.outer_radius;
        out["cap"] = est.cap;
        out["outer_step"] = est.outer_step;
        return out;
      },
      py::arg("equation"), py::arg("inner") = 4, py::arg("step") = py::none(),
      py::arg("stall") = 3, py::arg("cap") = 64, py::arg("command") = py::none(),
      py::arg("callback") = py::none());

  m.def(
      "normalize", [](const std::string& text) { return dump(load(text)); }, py::arg("equation"),
      "Validates an equation and returns it in canonical JSON form.");
}
