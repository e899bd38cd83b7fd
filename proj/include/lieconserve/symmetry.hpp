#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lieconserve/jet.hpp"
#include "lieconserve/zero_test.hpp"

namespace lieconserve {

/// X = tau d/dt + xi d/dx + eta d/du with coefficients over (t, x, u).
struct Generator {
  Expr tau;
  Expr xi;
  Expr eta;
  std::string name;

  /// Throws std::invalid_argument if a coefficient mentions a jet symbol
  /// other than t, x, u.
  static Generator make(Expr tau, Expr xi, Expr eta, std::string name = {});

  [[nodiscard]] std::string to_string() const;
};

/// Left side of the single determining equation for u_t + f = 0, all ten
/// terms, normalized.
Expr determining_residual_generic(const EvolutionSpec& spec, const Generator& g,
                                  const FunctionTable& table);

struct ResidualPair {
  Expr r1;
  Expr r2;
};

/// The two determining equations of u_t + alpha*u_x + beta = 0: the u_x-free
/// part and the u_x coefficient. Throws std::invalid_argument when the spec
/// cannot be split into (alpha, beta).
ResidualPair determining_residual_pair(const EvolutionSpec& spec, const Generator& g,
                                       const FunctionTable& table);

/// (lambda*tau, lambda*xi, lambda*eta). Symmetry-preserving for beta = 0;
/// callers should still check the residuals. Throws std::invalid_argument if
/// lambda depends on anything but u.
Generator scale_generator(const Expr& lambda, const Generator& g);

/// X1..X8 for u_t + a(u)*u_x = 0 followed by the family tau(u) d/dt + xi(u) d/dx
/// (named "Xtx"). `a` must be a unary primed function in `table`; every entry
/// assumes a'(u) != 0.
std::vector<Generator> burgers_catalog(const FunctionTable& table, std::string_view a = "a");

/// One entry of burgers_catalog by label. Throws std::out_of_range.
Generator burgers_generator(std::string_view label, const FunctionTable& table,
                            std::string_view a = "a");

/// pr X (u_t + f) from the first prolongation, reduced on solutions.
Expr prolongation_residual(const EvolutionSpec& spec, const Generator& g,
                           const FunctionTable& table);

struct SymmetryCheck {
  ResidualPair residuals;
  ZeroVerdict first;
  ZeroVerdict second;
  [[nodiscard]] bool pass() const { return first.zero && second.zero; }
};

SymmetryCheck check_symmetry(const EvolutionSpec& spec, const Generator& g,
                             const FunctionTable& table,
                             const ZeroTestConfig& config = ZeroTestConfig::defaults());

}  // namespace lieconserve
