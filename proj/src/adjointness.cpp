#include "lieconserve/adjointness.hpp"

#include "lieconserve/errors.hpp"

namespace lieconserve {
namespace {

bool vanishes_identically(const Expr& e, const FunctionTable& table, const ZeroTestConfig& config) {
  return is_zero(e, table, config).zero;
}

std::optional<Rational> constant_if_identical(const Expr& e) {
  return normalize(e).constant_value();
}

void classify_beta_zero(AdjointnessVerdict& out, const EvolutionSpec& spec,
                        const ZeroTestConfig& config) {
  const Expr alpha_x = diff(spec.alpha(), Symbol::x(), out.table);
  if (vanishes_identically(alpha_x, out.table, config)) {
    out.kind = AdjointKind::self_adjoint;
    out.phi = symbol(Symbol::u());
    out.factor = constant(-1);
    out.lambda = constant(0);
    out.phi_arbitrary = true;
    out.diagnostics.push_back(
        "beta = 0 and alpha = alpha(t, u): any phi(u) with phi' != 0 works, phi = u reported");
    return;
  }
  out.kind = AdjointKind::not_quasi_self_adjoint;
  out.diagnostics.push_back("beta = 0 forces phi(u) * alpha_x = 0, but alpha_x = " +
                            to_string(alpha_x) + " does not vanish");
  if (!depends_on(spec.alpha(), Symbol::u()) && !depends_on(spec.alpha(), Symbol::t())) {
    out.diagnostics.push_back(
        "transport with x-dependent speed alpha(x) is rejected; it is not covered by the "
        "quasi-self-adjointness conditions despite being of the form alpha*u_x + beta");
  }
}

void classify_beta_nonzero(AdjointnessVerdict& out, const EvolutionSpec& spec,
                           const ZeroTestConfig& config) {
  const FunctionTable& table = out.table;
  const Symbol u = Symbol::u();
  const Expr& alpha = spec.alpha();
  const Expr& beta = spec.beta();
  const Expr alpha_x = diff(alpha, Symbol::x(), table);
  const Expr r = (alpha_x - diff(beta, u, table)) / beta;
  out.r = r;
  out.diagnostics.push_back("beta != 0: r = (alpha_x - beta_u)/beta = " + to_string(r));

  const bool u_only = vanishes_identically(diff(r, Symbol::t(), table), table, config) &&
                      vanishes_identically(diff(r, Symbol::x(), table), table, config);
  if (!u_only) {
    out.kind = AdjointKind::not_quasi_self_adjoint;
    out.diagnostics.push_back("r depends on t or x, so phi'/phi = r has no solution phi(u)");
    return;
  }
  if (vanishes_identically(r, table, config)) {
    out.kind = AdjointKind::not_quasi_self_adjoint;
    out.diagnostics.push_back("r = 0 forces phi to be constant, so phi' = 0");
    return;
  }

  const Expr integrand = symbol(u) * alpha_x;
  const auto integral = integrate_in_u(integrand);
  if (!integral) {
    out.kind = AdjointKind::inconclusive;
    out.unintegrated = integrand;
    out.diagnostics.push_back("integral of " + to_string(integrand) +
                              " in u is not polynomial; self-adjointness undecided");
    return;
  }
  const Expr g = symbol(u) * beta - *integral;
  if (vanishes_identically(diff(g, u, table), table, config)) {
    out.kind = AdjointKind::self_adjoint;
    out.phi = symbol(u);
    out.factor = constant(-1);
    out.lambda = g;
    out.diagnostics.push_back("u*beta - int(u*alpha_x du) = " + to_string(g) +
                              " is free of u, so phi = u works with lambda = " + to_string(g));
    return;
  }

  out.kind = AdjointKind::quasi_self_adjoint;
  out.diagnostics.push_back("r depends on u alone; phi = exp(int r du), constant factor 1");
  if (const auto k = constant_if_identical(r * symbol(u))) {
    out.phi = pow(symbol(u), *k);
    out.diagnostics.push_back("r = " + to_string(constant(*k)) + "/u, phi = " +
                              to_string(*out.phi));
  } else {
    const std::string name = table.fresh_name("phi");
    const Expr phi = func_raw(name, {symbol(u)});
    out.table.declare_rewrite(
        name, RewriteRule{normalize(r * phi), r, RewriteRule::Integration::exponential, 1.0});
    out.phi = phi;
    out.diagnostics.push_back(name + " is opaque with " + name + "' = r*" + name);
  }
  out.factor = -diff(*out.phi, u, out.table);
}

}  // namespace

std::string_view to_string(AdjointKind kind) {
  switch (kind) {
    case AdjointKind::self_adjoint: return "self-adjoint";
    case AdjointKind::quasi_self_adjoint: return "quasi-self-adjoint";
    case AdjointKind::not_quasi_self_adjoint: return "not quasi-self-adjoint";
    case AdjointKind::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

AdjointnessVerdict classify(const EvolutionSpec& spec, const FunctionTable& table,
                            const ZeroTestConfig& config) {
  AdjointnessVerdict out;
  out.table = table;
  std::optional<EvolutionSpec> pair = spec.as_alpha_beta(table);
  if (!pair) {
    const Symbol ux = Symbol::u(1);
    const Expr second = diff(spec.f(), {ux, ux}, table);
    if (!vanishes_identically(second, table, config)) {
      out.kind = AdjointKind::not_quasi_self_adjoint;
      out.diagnostics.push_back("f is not linear in u_x: f_{u_x u_x} = " + to_string(second));
      return out;
    }
    out.kind = AdjointKind::inconclusive;
    out.diagnostics.push_back("f_{u_x u_x} vanishes numerically but f could not be split as "
                              "alpha*u_x + beta");
    return out;
  }
  if (vanishes_identically(pair->beta(), table, config)) {
    classify_beta_zero(out, *pair, config);
  } else {
    classify_beta_nonzero(out, *pair, config);
  }
  return out;
}

Expr substitute_v(const Expr& e, const Expr& phi, const FunctionTable& table) {
  std::vector<Binding> bindings;
  for (const auto& s : symbols_of(e)) {
    if (!s.is_jet() || s.field() != Field::v) continue;
    Expr value = phi;
    for (int i = 0; i < s.nx(); ++i) value = total_derivative(value, Direction::x, table);
    for (int i = 0; i < s.nt(); ++i) value = total_derivative(value, Direction::t, table);
    bindings.emplace_back(s, value);
  }
  return substitute(e, bindings);
}

SubstitutionCheck verify_substitution(const EvolutionSpec& spec, const Expr& phi,
                                      const FunctionTable& table, const ZeroTestConfig& config) {
  for (const auto& s : symbols_of(phi)) {
    if (s != Symbol::u()) {
      throw std::invalid_argument("phi may only depend on u: " + to_string(phi));
    }
  }
  const Expr adjoint = adjoint_of(spec, table);
  const Expr residual =
      substitute_v(adjoint, phi, table) + diff(phi, Symbol::u(), table) * spec.equation();
  return {residual, is_zero(residual, table, config)};
}

}  // namespace lieconserve
