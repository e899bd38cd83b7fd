#include "lieconserve/conservation.hpp"

#include <stdexcept>

#include "lieconserve/errors.hpp"

namespace lieconserve {
namespace {

// [eta + tau*beta + (tau*alpha - xi)*u_x]*m, [eta*alpha + xi*beta - (tau*alpha - xi)*u_t]*m
ConservedVector alpha_beta_vector(const Expr& alpha, const Expr& beta, const Generator& g,
                                  const Expr& multiplier, VectorFormula formula) {
  const Expr ux = symbol(Symbol::u(1));
  const Expr ut = symbol(Symbol::u(0, 1));
  const Expr lead = g.tau * alpha - g.xi;
  ConservedVector cv;
  cv.c0 = (g.eta + g.tau * beta + lead * ux) * multiplier;
  cv.c1 = (g.eta * alpha + g.xi * beta - lead * ut) * multiplier;
  cv.formula = formula;
  cv.generator = g.name;
  cv.multiplier = multiplier;
  return cv;
}

ConservedVector catalog_entry(std::string label, std::string generator, Expr c0, Expr c1) {
  ConservedVector cv;
  cv.c0 = normalize(c0);
  cv.c1 = normalize(c1);
  cv.formula = VectorFormula::catalog;
  cv.generator = std::move(generator);
  cv.label = std::move(label);
  cv.multiplier = symbol(Symbol::u());
  return cv;
}

}  // namespace

std::string_view to_string(VectorFormula formula) {
  switch (formula) {
    case VectorFormula::general: return "general";
    case VectorFormula::self_adjoint: return "self-adjoint";
    case VectorFormula::quasi_self_adjoint: return "quasi-self-adjoint";
    case VectorFormula::burgers: return "burgers";
    case VectorFormula::printed_variant: return "printed-variant";
    case VectorFormula::catalog: return "catalog";
  }
  return "general";
}

bool ConservedVector::has_v() const {
  for (const Expr* e : {&c0, &c1}) {
    for (const auto& s : symbols_of(*e)) {
      if (s.is_jet() && s.field() == Field::v) return true;
    }
  }
  return false;
}

ConservedVector build_vector_general(const EvolutionSpec& spec, const Generator& g,
                                     const FunctionTable& table) {
  const Expr& f = spec.f();
  const Expr w = g.eta + g.tau * f - g.xi * symbol(Symbol::u(1));
  const Expr v = symbol(Symbol::v());
  ConservedVector cv;
  cv.c0 = w * v;
  cv.c1 = w * v * diff(f, Symbol::u(1), table);
  cv.formula = VectorFormula::general;
  cv.generator = g.name;
  return cv;
}

ConservedVector build_vector_self(const EvolutionSpec& spec, const Generator& g,
                                  const FunctionTable& table, const std::optional<Expr>& phi,
                                  const ZeroTestConfig& config) {
  const auto pair = spec.as_alpha_beta(table);
  if (!pair) {
    throw std::invalid_argument("conserved vector needs f = alpha*u_x + beta, got " +
                                to_string(spec.f()));
  }
  if (phi) {
    if (is_zero(diff(*phi, Symbol::u(), table), table, config).zero) {
      throw RefusalError("multiplier " + to_string(*phi) + " is constant in u");
    }
    const auto check = verify_substitution(*pair, *phi, table, config);
    if (!check.pass()) {
      throw RefusalError("v = " + to_string(*phi) +
                         " does not turn the adjoint into a multiple of the equation; residual " +
                         to_string(check.residual));
    }
    const bool is_u = normalize(*phi) == symbol(Symbol::u());
    return alpha_beta_vector(pair->alpha(), pair->beta(), g, *phi,
                             is_u ? VectorFormula::self_adjoint
                                  : VectorFormula::quasi_self_adjoint);
  }
  const auto verdict = classify(*pair, table, config);
  if (verdict.kind != AdjointKind::self_adjoint) {
    std::string message = "equation is " + std::string(to_string(verdict.kind)) +
                          ", not self-adjoint; no conserved vector without a multiplier";
    if (verdict.kind == AdjointKind::quasi_self_adjoint && verdict.phi) {
      message += " (classification suggests phi = " + to_string(*verdict.phi) + ")";
    }
    throw RefusalError(message);
  }
  return alpha_beta_vector(pair->alpha(), pair->beta(), g, symbol(Symbol::u()),
                           VectorFormula::self_adjoint);
}

ConservedVector build_vector_burgers(const Generator& g, const FunctionTable& table,
                                     std::string_view a) {
  if (!table.contains(a)) throw std::invalid_argument("unknown function '" + std::string(a) + "'");
  const Expr av = func(std::string(a), {symbol(Symbol::u())});
  return alpha_beta_vector(av, constant(0), g, symbol(Symbol::u()), VectorFormula::burgers);
}

ConservedVector build_vector_printed_variant(const EvolutionSpec& spec, const Generator& g,
                                             const Expr& lambda, const FunctionTable& table) {
  const auto pair = spec.as_alpha_beta(table);
  if (!pair || !pair->beta().is_zero_literal()) {
    throw std::invalid_argument("the printed variant is stated for u_t + alpha(t, u)*u_x = 0");
  }
  const Expr u = symbol(Symbol::u());
  const Expr lead = g.tau * pair->alpha() - g.xi;
  ConservedVector cv;
  cv.c0 = lambda * (g.eta + lead * symbol(Symbol::u(1))) * u;
  cv.c1 = lambda * (g.eta - lead * symbol(Symbol::u(0, 1))) * u;
  cv.formula = VectorFormula::printed_variant;
  cv.generator = g.name;
  cv.multiplier = u;
  return cv;
}

std::vector<ConservedVector> burgers_claw_catalog(const FunctionTable& table, std::string_view a) {
  const auto fn = table.resolve(a);
  if (!fn || !fn->is_base()) throw std::invalid_argument("unknown function '" + std::string(a) + "'");
  if (!table.contains("A")) throw std::invalid_argument("catalog needs A with A' = u*a(u)");
  const Expr u = symbol(Symbol::u());
  const Expr t = symbol(Symbol::t());
  const Expr x = symbol(Symbol::x());
  const Expr av = func(std::string(a), {u});
  const Expr ap = diff(av, Symbol::u(), table);
  const Expr big_a = func("A", {u});
  const Expr shift = x - t * av;
  const Expr half_u2 = u * u / constant(2);
  return {
      catalog_entry("l1", "X3", half_u2, big_a),
      catalog_entry("l2", "X4", av * u / ap, av * av * u / ap - big_a),
      catalog_entry("l3", "X5", u / ap, av * u / ap - half_u2),
      catalog_entry("l4", "X6", av * av * u / ap + big_a, av * av * av * u / ap),
      catalog_entry("l5a", "X7", shift * u / ap + t * half_u2,
                    shift * av * u / ap + constant(2) * t * big_a - x * half_u2),
      catalog_entry("l5b", "X8", shift * av * u / ap + x * u * u - t * big_a,
                    shift * av * av * u / ap + x * big_a),
  };
}

ConservedVector burgers_claw(std::string_view label, const FunctionTable& table,
                             std::string_view a) {
  for (auto& cv : burgers_claw_catalog(table, a)) {
    if (cv.label == label) return cv;
  }
  throw std::out_of_range("no catalog conservation law '" + std::string(label) + "'");
}

Expr divergence_residual(const ConservedVector& cv, const EvolutionSpec& spec,
                         const FunctionTable& table, const std::optional<Expr>& phi) {
  Expr c0 = cv.c0;
  Expr c1 = cv.c1;
  if (phi) {
    c0 = substitute_v(c0, *phi, table);
    c1 = substitute_v(c1, *phi, table);
  }
  const Expr divergence =
      total_derivative(c0, Direction::t, table) + total_derivative(c1, Direction::x, table);
  ConservedVector substituted;
  substituted.c0 = c0;
  substituted.c1 = c1;
  return substituted.has_v() ? on_system_reduce(divergence, spec, table)
                             : on_solution_reduce(divergence, spec, table);
}

DivergenceCheck check_divergence(const ConservedVector& cv, const EvolutionSpec& spec,
                                 const FunctionTable& table, const std::optional<Expr>& phi,
                                 const ZeroTestConfig& config) {
  DivergenceCheck check;
  check.residual = divergence_residual(cv, spec, table, phi);
  check.verdict = is_zero(check.residual, table, config);
  return check;
}

ConservedVector instantiate(const ConservedVector& cv, std::string_view name, const Expr& body,
                            const FunctionTable& table) {
  ConservedVector out = cv;
  out.c0 = instantiate_function(cv.c0, name, body, table);
  out.c1 = instantiate_function(cv.c1, name, body, table);
  if (cv.multiplier) out.multiplier = instantiate_function(*cv.multiplier, name, body, table);
  return out;
}

}  // namespace lieconserve
