#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "lieconserve/adjointness.hpp"
#include "lieconserve/characteristics.hpp"
#include "lieconserve/cli.hpp"
#include "lieconserve/conservation.hpp"
#include "lieconserve/errors.hpp"
#include "lieconserve/parser.hpp"
#include "lieconserve/symmetry.hpp"

namespace py = pybind11;
using namespace lieconserve;

namespace {

const FunctionTable& table() { return FunctionTable::standard(); }

// Accepts either an Expr or expression text.
Expr as_expr(const py::object& value) {
  if (py::isinstance<py::str>(value)) return parse(value.cast<std::string>());
  return value.cast<Expr>();
}

std::optional<Expr> as_optional_expr(const py::object& value) {
  if (value.is_none()) return std::nullopt;
  return as_expr(value);
}

Symbol as_symbol(const std::string& name) {
  const auto s = Symbol::from_name(name);
  if (!s) throw py::value_error("not a jet coordinate: " + name);
  return *s;
}

WaveSpeed as_speed(const py::object& value) {
  return WaveSpeed(Polynomial::from_expr(as_expr(value), {"u"}));
}

Boundary as_boundary(const std::string& name) {
  if (name == "periodic") return Boundary::periodic;
  if (name == "compact" || name == "compact-support") return Boundary::compact_support;
  throw py::value_error("boundary must be 'periodic' or 'compact'");
}

}  // namespace

PYBIND11_MODULE(_lieconserve, m) {
  m.doc() = "Self-adjointness, Lie symmetries and conservation laws of u_t + f = 0";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<UnknownSymbolError>(m, "UnknownSymbolError", PyExc_ValueError);
  py::register_exception<EvalError>(m, "EvalError", PyExc_ArithmeticError);
  py::register_exception<RefusalError>(m, "RefusalError", PyExc_RuntimeError);
  py::register_exception<InconclusiveError>(m, "InconclusiveError", PyExc_RuntimeError);

  py::class_<Expr>(m, "Expr")
      .def("__str__", [](const Expr& e) { return to_string(e); })
      .def("__repr__", [](const Expr& e) { return "Expr('" + to_string(e) + "')"; })
      .def("__eq__", [](const Expr& a, const Expr& b) { return a == b; })
      .def("__add__", [](const Expr& a, const Expr& b) { return a + b; })
      .def("__sub__", [](const Expr& a, const Expr& b) { return a - b; })
      .def("__mul__", [](const Expr& a, const Expr& b) { return a * b; })
      .def("is_zero_literal", &Expr::is_zero_literal)
      .def(
          "diff", [](const Expr& e, const std::string& s) { return diff(e, as_symbol(s), table()); },
          py::arg("symbol"));

  m.def(
      "parse", [](const std::string& text) { return parse(text); }, py::arg("text"));
  m.def(
      "is_zero", [](const py::object& e) { return is_zero(as_expr(e), table()).zero; },
      py::arg("expr"), "Randomized identity test with the default configuration.");

  py::class_<EvolutionSpec>(m, "EvolutionSpec")
      .def_static(
          "generic", [](const py::object& f) { return EvolutionSpec::generic(as_expr(f)); },
          py::arg("f"))
      .def_static(
          "alpha_beta",
          [](const py::object& alpha, const py::object& beta) {
            return EvolutionSpec::alpha_beta(as_expr(alpha), as_expr(beta));
          },
          py::arg("alpha"), py::arg("beta") = "0")
      .def_static("burgers", [] { return EvolutionSpec::alpha_beta(parse("a(u)"), constant(0)); })
      .def_property_readonly("f", &EvolutionSpec::f)
      .def("equation", &EvolutionSpec::equation)
      .def("__str__", &EvolutionSpec::to_string);

  m.def(
      "adjoint", [](const EvolutionSpec& spec) { return adjoint_of(spec, table()); },
      py::arg("spec"));

  py::enum_<AdjointKind>(m, "AdjointKind")
      .value("self_adjoint", AdjointKind::self_adjoint)
      .value("quasi_self_adjoint", AdjointKind::quasi_self_adjoint)
      .value("not_quasi_self_adjoint", AdjointKind::not_quasi_self_adjoint)
      .value("inconclusive", AdjointKind::inconclusive);

  py::class_<AdjointnessVerdict>(m, "AdjointnessVerdict")
      .def_readonly("kind", &AdjointnessVerdict::kind)
      .def_readonly("phi", &AdjointnessVerdict::phi)
      .def_readonly("r", &AdjointnessVerdict::r)
      .def_readonly("lambda_", &AdjointnessVerdict::lambda)
      .def_readonly("phi_arbitrary", &AdjointnessVerdict::phi_arbitrary)
      .def_readonly("diagnostics", &AdjointnessVerdict::diagnostics)
      .def("__str__", [](const AdjointnessVerdict& v) { return std::string(to_string(v.kind)); });

  m.def(
      "classify", [](const EvolutionSpec& spec) { return classify(spec, table()); },
      py::arg("spec"));
  m.def(
      "verify_substitution",
      [](const EvolutionSpec& spec, const py::object& phi) {
        const auto check = verify_substitution(spec, as_expr(phi), table());
        return py::make_tuple(check.pass(), check.residual);
      },
      py::arg("spec"), py::arg("phi"), "Returns (passes, residual).");

  py::class_<Generator>(m, "Generator")
      .def_static(
          "make",
          [](const py::object& tau, const py::object& xi, const py::object& eta,
             const std::string& name) {
            return Generator::make(as_expr(tau), as_expr(xi), as_expr(eta), name);
          },
          py::arg("tau"), py::arg("xi"), py::arg("eta"), py::arg("name") = "")
      .def_readonly("tau", &Generator::tau)
      .def_readonly("xi", &Generator::xi)
      .def_readonly("eta", &Generator::eta)
      .def_readonly("name", &Generator::name)
      .def("scaled", [](const Generator& g, const py::object& lambda) {
        return scale_generator(as_expr(lambda), g);
      })
      .def("__str__", &Generator::to_string);

  m.def(
      "burgers_generator", [](const std::string& label) { return burgers_generator(label, table()); },
      py::arg("label"));
  m.def("burgers_catalog", [] { return burgers_catalog(table()); });
  m.def(
      "check_symmetry",
      [](const EvolutionSpec& spec, const Generator& g) {
        const auto check = check_symmetry(spec, g, table());
        return py::make_tuple(check.pass(), check.residuals.r1, check.residuals.r2);
      },
      py::arg("spec"), py::arg("generator"), "Returns (passes, R1, R2).");

  py::class_<ConservedVector>(m, "ConservedVector")
      .def(py::init([](const py::object& c0, const py::object& c1) {
             ConservedVector cv;
             cv.c0 = as_expr(c0);
             cv.c1 = as_expr(c1);
             return cv;
           }),
           py::arg("c0"), py::arg("c1"))
      .def_readonly("c0", &ConservedVector::c0)
      .def_readonly("c1", &ConservedVector::c1)
      .def_readonly("generator", &ConservedVector::generator)
      .def_readonly("label", &ConservedVector::label)
      .def_property_readonly("formula",
                             [](const ConservedVector& cv) { return to_string(cv.formula); })
      .def("instantiate", [](const ConservedVector& cv, const std::string& name,
                             const py::object& body) {
        return instantiate(cv, name, as_expr(body), table());
      });

  m.def(
      "build_vector",
      [](const EvolutionSpec& spec, const Generator& g, const py::object& phi) {
        return build_vector_self(spec, g, table(), as_optional_expr(phi));
      },
      py::arg("spec"), py::arg("generator"), py::arg("phi") = py::none());
  m.def(
      "burgers_claw", [](const std::string& label) { return burgers_claw(label, table()); },
      py::arg("label"));
  m.def("burgers_claw_catalog", [] { return burgers_claw_catalog(table()); });
  m.def(
      "check_divergence",
      [](const ConservedVector& cv, const EvolutionSpec& spec) {
        const auto check = check_divergence(cv, spec, table());
        return py::make_tuple(check.pass(), check.residual);
      },
      py::arg("vector"), py::arg("spec"), "Returns (passes, residual).");

  py::class_<Profile>(m, "Profile")
      .def_static("sine", &Profile::sine)
      .def_static("gaussian", &Profile::gaussian, py::arg("center") = 0.0, py::arg("width") = 1.0,
                  py::arg("amplitude") = 1.0)
      .def_static("bump", &Profile::bump, py::arg("center") = 0.0, py::arg("radius") = 1.0,
                  py::arg("amplitude") = 1.0)
      .def_static(
          "polynomial",
          [](const py::object& p) {
            const Expr e = as_expr(p);
            return Profile::polynomial(Polynomial::from_expr(e, {"x"}), to_string(e));
          },
          py::arg("polynomial"))
      .def_readonly("name", &Profile::name)
      .def("__call__", [](const Profile& p, double x) { return p.value(x); });

  py::class_<CharacteristicSolution>(m, "CharacteristicSolution")
      .def(py::init([](const py::object& a, const Profile& u0, double lo, double hi,
                       const std::string& boundary, double tolerance) {
             return CharacteristicSolution(as_speed(a), u0, {lo, hi, as_boundary(boundary)},
                                           tolerance);
           }),
           py::arg("a"), py::arg("u0"), py::arg("lo"), py::arg("hi"),
           py::arg("boundary") = "periodic", py::arg("tolerance") = 1e-12)
      .def_property_readonly("shock_time", &CharacteristicSolution::shock_time)
      .def_property_readonly("max_time", &CharacteristicSolution::max_time)
      .def(
          "solve_at",
          [](const CharacteristicSolution& sol, double x, double t) {
            const auto p = sol.solve_at(x, t);
            return py::make_tuple(p.u, p.u_x);
          },
          py::arg("x"), py::arg("t"), "Returns (u, u_x).")
      .def(
          "integral",
          [](const CharacteristicSolution& sol, const py::object& density, double t, int nodes) {
            return conserved_integral(sol, as_expr(density), t, nodes, table());
          },
          py::arg("density"), py::arg("t"), py::arg("nodes") = 2048);

  py::class_<ConservationReport>(m, "ConservationReport")
      .def_readonly("density", &ConservationReport::density)
      .def_readonly("flux", &ConservationReport::flux)
      .def_readonly("times", &ConservationReport::times)
      .def_readonly("q", &ConservationReport::q)
      .def_readonly("q0", &ConservationReport::q0)
      .def_readonly("residuals", &ConservationReport::residuals)
      .def_readonly("drift", &ConservationReport::drift)
      .def_readonly("threshold", &ConservationReport::threshold)
      .def_readonly("passed", &ConservationReport::pass)
      .def_property_readonly("mode",
                             [](const ConservationReport& r) { return to_string(r.mode); });

  m.def(
      "shock_time",
      [](const py::object& a, const Profile& u0, double lo, double hi, const std::string& boundary) {
        return shock_time(as_speed(a), u0, {lo, hi, as_boundary(boundary)});
      },
      py::arg("a"), py::arg("u0"), py::arg("lo"), py::arg("hi"), py::arg("boundary") = "periodic");
  m.def(
      "verify_law",
      [](const CharacteristicSolution& sol, const ConservedVector& cv,
         const std::vector<double>& times, int nodes, double tol) {
        return verify_law(sol, cv, times, nodes, tol, table());
      },
      py::arg("solution"), py::arg("vector"), py::arg("times"), py::arg("nodes") = 2048,
      py::arg("tol") = 1e-6);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line tool in-process; returns (code, stdout, stderr).");
}
