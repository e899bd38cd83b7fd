#pragma once

#include <span>
#include <string>
#include <vector>

#include "lieconserve/expr.hpp"

namespace lieconserve {

/// Sparse multivariate polynomial with exact coefficients; the concrete
/// stand-in for an opaque function during numeric evaluation.
class Polynomial {
 public:
  struct Term {
    std::vector<int> exponents;
    Rational coefficient;
    double value;  // coefficient as double
  };

  explicit Polynomial(std::size_t arity = 1) : arity_(arity) {}

  /// Univariate polynomial from ascending coefficients.
  static Polynomial univariate(const std::vector<Rational>& coefficients);

  /// Converts an expression that is polynomial in the named variables.
  /// Throws std::invalid_argument for anything else (functions, negative or
  /// fractional powers, foreign symbols).
  static Polynomial from_expr(const Expr& e, const std::vector<std::string>& vars);

  [[nodiscard]] std::size_t arity() const { return arity_; }
  [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  void add_term(std::vector<int> exponents, const Rational& coefficient);

  [[nodiscard]] double evaluate(std::span<const double> args) const;
  [[nodiscard]] double evaluate(double arg) const { return evaluate(std::span(&arg, 1)); }

  /// Mixed partial derivative; `partials[i]` differentiations in argument i.
  [[nodiscard]] Polynomial derivative(const std::vector<int>& partials) const;
  [[nodiscard]] Polynomial derivative(std::size_t var) const;

  /// Antiderivative of a univariate polynomial vanishing at 0.
  [[nodiscard]] Polynomial antiderivative() const;

  [[nodiscard]] Expr to_expr(const std::vector<std::string>& vars) const;

 private:
  std::size_t arity_;
  std::vector<Term> terms_;
};

}  // namespace lieconserve
