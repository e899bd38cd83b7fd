#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lieconserve/adjointness.hpp"
#include "lieconserve/symmetry.hpp"

namespace lieconserve {

/// Which construction produced a conserved vector.
enum class VectorFormula {
  /// (eta + tau*f - xi*u_x) * v * (1, f_{u_x}), v a free adjoint field
  general,
  /// (alpha, beta) form with v = u
  self_adjoint,
  /// (alpha, beta) form with v = phi(u)
  quasi_self_adjoint,
  /// (alpha, beta) form specialized to u_t + a(u)*u_x = 0
  burgers,
  /// The printed lambda-scaled variant whose flux lacks alpha on eta
  printed_variant,
  /// Simplified zero-order vectors of the Burgers catalog
  catalog,
};

std::string_view to_string(VectorFormula formula);

struct ConservedVector {
  Expr c0;
  Expr c1;
  VectorFormula formula = VectorFormula::general;
  /// Name of the generator the vector came from, if any.
  std::string generator;
  /// Catalog label such as "l1".
  std::string label;
  /// Multiplier substituted for v, when one was.
  std::optional<Expr> multiplier;

  [[nodiscard]] bool has_v() const;
};

ConservedVector build_vector_general(const EvolutionSpec& spec, const Generator& g,
                                     const FunctionTable& table);

/// (alpha, beta) conserved vector with multiplier u, or `phi` when given.
/// Without phi the spec must classify as self-adjoint; with phi the
/// substitution identity must hold. Throws RefusalError otherwise, and
/// std::invalid_argument when f is not linear in u_x. C1 keeps u_t.
ConservedVector build_vector_self(const EvolutionSpec& spec, const Generator& g,
                                  const FunctionTable& table,
                                  const std::optional<Expr>& phi = std::nullopt,
                                  const ZeroTestConfig& config = ZeroTestConfig::defaults());

/// [eta + (tau*a - xi)*u_x]*u, [eta*a - (tau*a - xi)*u_t]*u
ConservedVector build_vector_burgers(const Generator& g, const FunctionTable& table,
                                     std::string_view a = "a");

/// lambda*[eta + (tau*alpha - xi)*u_x]*u, lambda*[eta - (tau*alpha - xi)*u_t]*u
/// for beta = 0. Kept only as a negative control: it is not conserved in
/// general.
ConservedVector build_vector_printed_variant(const EvolutionSpec& spec, const Generator& g,
                                             const Expr& lambda, const FunctionTable& table);

/// Zero-order vectors l1 (from X3), l2 (X4), l3 (X5), l4 (X6), l5a (X7), l5b (X8).
std::vector<ConservedVector> burgers_claw_catalog(const FunctionTable& table,
                                                  std::string_view a = "a");

/// One catalog entry by label. Throws std::out_of_range.
ConservedVector burgers_claw(std::string_view label, const FunctionTable& table,
                             std::string_view a = "a");

/// D_t C0 + D_x C1 reduced on solutions. Vectors with v use phi when given
/// and the coupled system (equation and adjoint) otherwise.
Expr divergence_residual(const ConservedVector& cv, const EvolutionSpec& spec,
                         const FunctionTable& table,
                         const std::optional<Expr>& phi = std::nullopt);

struct DivergenceCheck {
  Expr residual;
  ZeroVerdict verdict;
  [[nodiscard]] bool pass() const { return verdict.zero; }
};

DivergenceCheck check_divergence(const ConservedVector& cv, const EvolutionSpec& spec,
                                 const FunctionTable& table,
                                 const std::optional<Expr>& phi = std::nullopt,
                                 const ZeroTestConfig& config = ZeroTestConfig::defaults());

/// Both components with `name` replaced by `body` (see instantiate_function).
ConservedVector instantiate(const ConservedVector& cv, std::string_view name, const Expr& body,
                            const FunctionTable& table);

}  // namespace lieconserve
