#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lieconserve/jet.hpp"
#include "lieconserve/zero_test.hpp"

namespace lieconserve {

enum class AdjointKind {
  self_adjoint,
  quasi_self_adjoint,
  not_quasi_self_adjoint,
  /// An integral needed by the decision fell outside the supported class.
  inconclusive,
};

std::string_view to_string(AdjointKind kind);

struct AdjointnessVerdict {
  AdjointKind kind = AdjointKind::inconclusive;
  /// u for self-adjoint equations. For quasi-self-adjoint ones either a
  /// closed form u^k or an opaque function registered in `table` whose
  /// derivative is r*phi.
  std::optional<Expr> phi;
  /// -phi'(u), the multiplier in F*|_{v = phi} = factor * F.
  std::optional<Expr> factor;
  /// phi'/phi when beta does not vanish.
  std::optional<Expr> r;
  /// The (t, x) function in beta = (1/u) * int(u*alpha_x du) + lambda/u.
  std::optional<Expr> lambda;
  /// Integrand that could not be integrated, for inconclusive verdicts.
  std::optional<Expr> unintegrated;
  /// beta = 0 and alpha = alpha(t, u): every phi(u) works, u is reported.
  bool phi_arbitrary = false;
  std::vector<std::string> diagnostics;
  /// The caller's table, extended with the opaque phi when one was created.
  FunctionTable table;
};

/// Self-adjoint, quasi-self-adjoint or neither. Generic specs must be linear
/// in u_x; otherwise the verdict is not_quasi_self_adjoint.
AdjointnessVerdict classify(const EvolutionSpec& spec, const FunctionTable& table,
                            const ZeroTestConfig& config = ZeroTestConfig::defaults());

struct SubstitutionCheck {
  /// F*|_{v = phi(u)} + phi'(u) * (u_t + f)
  Expr residual;
  ZeroVerdict verdict;
  [[nodiscard]] bool pass() const { return verdict.zero; }
};

/// Substitutes v = phi(u) (and its total derivatives) into the adjoint and
/// tests the quasi-self-adjointness identity with factor -phi'(u).
SubstitutionCheck verify_substitution(const EvolutionSpec& spec, const Expr& phi,
                                      const FunctionTable& table,
                                      const ZeroTestConfig& config = ZeroTestConfig::defaults());

/// Replaces v and its jet symbols by phi(u) and the matching total
/// derivatives.
Expr substitute_v(const Expr& e, const Expr& phi, const FunctionTable& table);

}  // namespace lieconserve
