#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lieconserve/expr.hpp"

namespace lieconserve {

/// Derivative defined by an expression instead of a fresh primed symbol,
/// e.g. A'(u) = u*a(u). Templates are written over the placeholder `u`.
struct RewriteRule {
  enum class Integration {
    /// value(w) = integral of `integrand` from base_point to w
    antiderivative,
    /// value(w) = exp(integral of `integrand` from sign(w)*base_point to w)
    exponential,
  };

  Expr derivative;
  Expr integrand;
  Integration integration = Integration::antiderivative;
  double base_point = 0.0;
};

/// An opaque function symbol. `params` names the variables an instantiation
/// polynomial is written in; it also fixes the arity.
struct FunctionDecl {
  std::string name;
  std::vector<std::string> params;
  std::optional<RewriteRule> rewrite;

  [[nodiscard]] std::size_t arity() const { return params.size(); }
};

/// A registered name or one of its derivatives: a'' resolves to {a, {2}},
/// lam_d12 to {lam, {1, 1}}.
struct ResolvedFunction {
  const FunctionDecl* decl = nullptr;
  std::vector<int> partials;

  [[nodiscard]] bool is_base() const;
};

class FunctionTable {
 public:
  /// a(u) with primed derivatives, A(u) with A' = u*a(u), q(x), tau(u),
  /// xi(u), lam(t, x) and the generic flux f(t, x, u, u_x).
  static const FunctionTable& standard();

  /// Primed-derivative symbol. Throws std::invalid_argument on a clash or a
  /// malformed name.
  void declare(const std::string& name, std::vector<std::string> params);
  /// Unary symbol whose derivative is `rule.derivative` (over u).
  void declare_rewrite(const std::string& name, RewriteRule rule);

  [[nodiscard]] bool contains(std::string_view name) const;
  [[nodiscard]] std::optional<ResolvedFunction> resolve(std::string_view name) const;
  [[nodiscard]] std::vector<std::string> names() const;

  /// Name of the function obtained by differentiating `fn` in argument `arg`.
  [[nodiscard]] std::string derivative_name(const ResolvedFunction& fn,
                                            std::size_t arg) const;

  /// Partial derivative of `app` with respect to its argument `arg`.
  [[nodiscard]] Expr partial(const FuncApp& app, std::size_t arg) const;

  /// Declaration-only: a fresh name derived from `stem` not yet in the table.
  [[nodiscard]] std::string fresh_name(const std::string& stem) const;

 private:
  std::map<std::string, FunctionDecl, std::less<>> decls_;
};

}  // namespace lieconserve
