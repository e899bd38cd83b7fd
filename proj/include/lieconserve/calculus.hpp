#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lieconserve/expr.hpp"
#include "lieconserve/function_table.hpp"

namespace lieconserve {

using Binding = std::pair<Symbol, Expr>;

/// Partial derivative treating every other jet coordinate as independent.
/// Opaque functions differentiate through the chain rule and the table's
/// derivative rules. Result is normalized.
Expr diff(const Expr& e, const Symbol& s, const FunctionTable& table);

/// Repeated partial derivative, applied left to right.
Expr diff(const Expr& e, std::initializer_list<Symbol> symbols,
          const FunctionTable& table);

/// Simultaneous substitution of symbols. Throws std::invalid_argument when two
/// bindings share a target.
Expr substitute(const Expr& e, const std::vector<Binding>& bindings);

/// Replaces every application of `name` (and of its derivatives) by `body`,
/// written over the declaration's parameter names, differentiated as needed.
Expr substitute_function(const Expr& e, std::string_view name, const Expr& body,
                         const FunctionTable& table);

/// substitute_function, then closes antiderivative-rule functions whose
/// integrand mentions `name` when the instantiated integrand is a polynomial
/// in u: with a := u, A(u) becomes u^3/3.
Expr instantiate_function(const Expr& e, std::string_view name, const Expr& body,
                          const FunctionTable& table);

/// True when `s` occurs anywhere in `e`, including inside function arguments.
bool depends_on(const Expr& e, const Symbol& s);

std::set<Symbol> symbols_of(const Expr& e);
std::set<std::string> functions_of(const Expr& e);

/// Antiderivative in u (zero constant of integration) of an expression that is
/// a polynomial in u with u-free coefficients. Returns nullopt otherwise.
std::optional<Expr> integrate_in_u(const Expr& e);

}  // namespace lieconserve
