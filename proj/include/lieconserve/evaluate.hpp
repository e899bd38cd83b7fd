#pragma once

#include <map>
#include <string>

#include "lieconserve/expr.hpp"
#include "lieconserve/function_table.hpp"
#include "lieconserve/polynomial.hpp"

namespace lieconserve {

/// Concrete polynomials standing in for opaque function symbols, keyed by the
/// base name. Derivative symbols (a', lam_d1) evaluate as true derivatives.
using Instantiation = std::map<std::string, Polynomial, std::less<>>;

/// Instantiation from "name := polynomial" text, the polynomial written over
/// the declared parameter names (e.g. "a := 2 + u^2").
std::pair<std::string, Polynomial> parse_instantiation(std::string_view text,
                                                       const FunctionTable& table);

/// Values for jet coordinates.
class JetPoint {
 public:
  JetPoint() = default;
  JetPoint(std::initializer_list<std::pair<const Symbol, double>> values) : values_(values) {}

  void set(const Symbol& s, double value) { values_[s] = value; }
  [[nodiscard]] bool contains(const Symbol& s) const { return values_.count(s) != 0; }
  [[nodiscard]] double at(const Symbol& s) const;
  [[nodiscard]] const std::map<Symbol, double>& values() const { return values_; }

  [[nodiscard]] std::string to_string() const;

 private:
  std::map<Symbol, double> values_;
};

struct Evaluation {
  double value = 0.0;
  /// Largest magnitude of any evaluated subterm.
  double scale = 0.0;
};

/// Floating evaluation of `e`. Throws EvalError on poles, negative bases with
/// fractional exponents, unassigned symbols, missing instantiations, or
/// non-finite intermediate values.
Evaluation evaluate(const Expr& e, const JetPoint& point, const Instantiation& functions,
                    const FunctionTable& table);

inline double eval(const Expr& e, const JetPoint& point, const Instantiation& functions,
                   const FunctionTable& table) {
  return evaluate(e, point, functions, table).value;
}

}  // namespace lieconserve
