#include "lieconserve/symmetry.hpp"

#include <stdexcept>

namespace lieconserve {
namespace {

void require_txu(const Expr& e, const char* what) {
  for (const auto& s : symbols_of(e)) {
    if (s != Symbol::t() && s != Symbol::x() && s != Symbol::u()) {
      throw std::invalid_argument(std::string(what) + " may only depend on t, x, u: " +
                                  to_string(e));
    }
  }
}

EvolutionSpec split(const EvolutionSpec& spec, const FunctionTable& table) {
  auto pair = spec.as_alpha_beta(table);
  if (!pair) {
    throw std::invalid_argument("determining pair needs f = alpha*u_x + beta, got " +
                                to_string(spec.f()));
  }
  return *pair;
}

}  // namespace

Generator Generator::make(Expr tau, Expr xi, Expr eta, std::string name) {
  tau = normalize(tau);
  xi = normalize(xi);
  eta = normalize(eta);
  require_txu(tau, "tau");
  require_txu(xi, "xi");
  require_txu(eta, "eta");
  return Generator{std::move(tau), std::move(xi), std::move(eta), std::move(name)};
}

std::string Generator::to_string() const {
  std::string out;
  auto add = [&](const Expr& c, const char* d) {
    if (c.is_zero_literal()) return;
    if (!out.empty()) out += " + ";
    out += c.is_one_literal() ? d : "(" + lieconserve::to_string(c) + ")*" + d;
  };
  add(tau, "d/dt");
  add(xi, "d/dx");
  add(eta, "d/du");
  if (out.empty()) out = "0";
  return name.empty() ? out : name + " = " + out;
}

Expr determining_residual_generic(const EvolutionSpec& spec, const Generator& g,
                                  const FunctionTable& table) {
  const Symbol t = Symbol::t();
  const Symbol x = Symbol::x();
  const Symbol u = Symbol::u();
  const Expr ux = symbol(Symbol::u(1));
  const Expr& f = spec.f();
  const Expr f_p = diff(f, Symbol::u(1), table);
  auto d = [&](const Expr& e, const Symbol& s) { return diff(e, s, table); };
  const Expr& tau = g.tau;
  const Expr& xi = g.xi;
  const Expr& eta = g.eta;
  return add_all({
      d(eta, t),
      -d(xi, t) * ux,
      (d(tau, t) - d(eta, u) + d(xi, u) * ux) * f,
      xi * d(f, x),
      tau * d(f, t),
      eta * d(f, u),
      -d(tau, u) * f * f,
      (d(eta, x) + d(eta, u) * ux - d(xi, x) * ux - d(xi, u) * ux * ux) * f_p,
      (d(tau, x) + d(tau, u) * ux) * f * f_p,
  });
}

ResidualPair determining_residual_pair(const EvolutionSpec& spec, const Generator& g,
                                       const FunctionTable& table) {
  const EvolutionSpec pair = split(spec, table);
  const Symbol t = Symbol::t();
  const Symbol x = Symbol::x();
  const Symbol u = Symbol::u();
  auto d = [&](const Expr& e, const Symbol& s) { return diff(e, s, table); };
  const Expr& alpha = pair.alpha();
  const Expr& beta = pair.beta();
  const Expr& tau = g.tau;
  const Expr& xi = g.xi;
  const Expr& eta = g.eta;
  Expr r1 = add_all({
      d(eta, t),
      beta * (d(tau, t) - d(eta, u)),
      d(beta, x) * xi,
      d(beta, t) * tau,
      d(beta, u) * eta,
      -beta * beta * d(tau, u),
      alpha * d(eta, x),
      alpha * beta * d(tau, x),
  });
  Expr r2 = add_all({
      -d(xi, t),
      alpha * d(tau, t),
      beta * d(xi, u),
      d(alpha, x) * xi,
      d(alpha, t) * tau,
      d(alpha, u) * eta,
      -alpha * beta * d(tau, u),
      -alpha * d(xi, x),
      alpha * alpha * d(tau, x),
  });
  return {std::move(r1), std::move(r2)};
}

Generator scale_generator(const Expr& lambda, const Generator& g) {
  for (const auto& s : symbols_of(lambda)) {
    if (s != Symbol::u()) {
      throw std::invalid_argument("lambda may only depend on u: " + to_string(lambda));
    }
  }
  std::string name = g.name;
  if (!name.empty() && !lambda.is_one_literal()) name = "(" + to_string(lambda) + ")*" + name;
  return Generator{lambda * g.tau, lambda * g.xi, lambda * g.eta, std::move(name)};
}

std::vector<Generator> burgers_catalog(const FunctionTable& table, std::string_view a) {
  const auto fn = table.resolve(a);
  if (!fn || !fn->is_base() || fn->decl->rewrite ||
      fn->decl->params != std::vector<std::string>{"u"}) {
    throw std::invalid_argument("'" + std::string(a) + "' must be a unary function of u");
  }
  const Expr t = symbol(Symbol::t());
  const Expr x = symbol(Symbol::x());
  const Expr u = symbol(Symbol::u());
  const Expr av = func(std::string(a), {u});
  const Expr ap = diff(av, Symbol::u(), table);
  const Expr zero = constant(0);
  const Expr one = constant(1);
  const Expr shift = x - t * av;
  return {
      Generator::make(one, zero, zero, "X1"),
      Generator::make(zero, one, zero, "X2"),
      Generator::make(t, x, zero, "X3"),
      Generator::make(t, zero, -av / ap, "X4"),
      Generator::make(zero, t, one / ap, "X5"),
      Generator::make(x, zero, -(av * av) / ap, "X6"),
      Generator::make(t * t, t * x, shift / ap, "X7"),
      Generator::make(t * x, x * x, av * shift / ap, "X8"),
      Generator::make(func("tau", {u}), func("xi", {u}), zero, "Xtx"),
  };
}

Generator burgers_generator(std::string_view label, const FunctionTable& table,
                            std::string_view a) {
  for (auto& g : burgers_catalog(table, a)) {
    if (g.name == label) return g;
  }
  throw std::out_of_range("no catalog generator '" + std::string(label) + "'");
}

Expr prolongation_residual(const EvolutionSpec& spec, const Generator& g,
                           const FunctionTable& table) {
  const Expr ut = symbol(Symbol::u(0, 1));
  const Expr ux = symbol(Symbol::u(1));
  const Expr characteristic = g.eta - g.tau * ut - g.xi * ux;
  const Expr eta_t = total_derivative(characteristic, Direction::t, table) +
                     g.tau * symbol(Symbol::u(0, 2)) + g.xi * symbol(Symbol::u(1, 1));
  const Expr eta_x = total_derivative(characteristic, Direction::x, table) +
                     g.tau * symbol(Symbol::u(1, 1)) + g.xi * symbol(Symbol::u(2));
  const Expr& f = spec.f();
  const Expr pr = eta_t + g.tau * diff(f, Symbol::t(), table) + g.xi * diff(f, Symbol::x(), table) +
                  g.eta * diff(f, Symbol::u(), table) + eta_x * diff(f, Symbol::u(1), table);
  return on_solution_reduce(pr, spec, table);
}

SymmetryCheck check_symmetry(const EvolutionSpec& spec, const Generator& g,
                             const FunctionTable& table, const ZeroTestConfig& config) {
  SymmetryCheck check;
  check.residuals = determining_residual_pair(spec, g, table);
  check.first = is_zero(check.residuals.r1, table, config);
  check.second = is_zero(check.residuals.r2, table, config);
  return check;
}

}  // namespace lieconserve
