#pragma once

#include "lieconserve/calculus.hpp"
#include "lieconserve/expr.hpp"
#include "lieconserve/function_table.hpp"

namespace lieconserve {

enum class Direction { t, x };

Symbol direction_symbol(Direction d);

/// The equation u_t + f(t, x, u, u_x) = 0, given either by f directly or by
/// the pair (alpha, beta) with f = alpha*u_x + beta.
class EvolutionSpec {
 public:
  /// Throws std::invalid_argument if f mentions anything beyond t, x, u, u_x.
  static EvolutionSpec generic(Expr f);
  /// Throws std::invalid_argument if alpha or beta mention a jet symbol other
  /// than t, x, u, or if alpha is literally zero.
  static EvolutionSpec alpha_beta(Expr alpha, Expr beta);

  [[nodiscard]] bool is_alpha_beta() const { return alpha_beta_; }
  [[nodiscard]] const Expr& f() const { return f_; }
  /// Throws std::logic_error on a generic spec.
  [[nodiscard]] const Expr& alpha() const;
  [[nodiscard]] const Expr& beta() const;

  /// u_t + f
  [[nodiscard]] Expr equation() const;

  /// Recovers (alpha, beta) from a generic f that is linear in u_x. Returns
  /// nullopt when f_{u_x u_x} does not vanish structurally.
  [[nodiscard]] std::optional<EvolutionSpec> as_alpha_beta(const FunctionTable& table) const;

  [[nodiscard]] std::string to_string() const;

 private:
  EvolutionSpec() = default;

  Expr f_;
  Expr alpha_;
  Expr beta_;
  bool alpha_beta_ = false;
};

/// D_t or D_x on the jet space. Throws UnsupportedDepthError when a symbol of
/// order Symbol::kMaxOrder would be pushed higher.
Expr total_derivative(const Expr& e, Direction d, const FunctionTable& table);

/// Eliminates every t-derivative of u using u_t = -f and its consequences.
/// The result contains no u_t, u_xt, u_tt, ...
Expr on_solution_reduce(const Expr& e, const EvolutionSpec& spec, const FunctionTable& table);

/// As on_solution_reduce, and additionally eliminates t-derivatives of v with
/// the adjoint equation F* = 0.
Expr on_system_reduce(const Expr& e, const EvolutionSpec& spec, const FunctionTable& table);

/// True when `e` mentions a t-derivative of `field`.
bool has_time_derivative(const Expr& e, Field field = Field::u);

/// Variational derivative of L with respect to u, summing (-D)^s dL/du_s over
/// every u-jet symbol present.
Expr euler_lagrange(const Expr& lagrangian, const FunctionTable& table);

/// Formal Lagrangian v*(u_t + f).
Expr formal_lagrangian(const EvolutionSpec& spec);

/// Adjoint F* built as the variational derivative of the formal Lagrangian.
/// Cross-checked against adjoint_transcribed; a disagreement throws
/// std::logic_error.
Expr adjoint_of(const EvolutionSpec& spec, const FunctionTable& table);

/// F* = -v_t - v_x f_{u_x} + v f_u - v f_{x u_x} - v u_x f_{u u_x} - v f_{u_x u_x} u_xx
Expr adjoint_transcribed(const EvolutionSpec& spec, const FunctionTable& table);

}  // namespace lieconserve
