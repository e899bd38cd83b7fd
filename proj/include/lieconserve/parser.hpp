#pragma once

#include <string_view>

#include "lieconserve/expr.hpp"
#include "lieconserve/function_table.hpp"

namespace lieconserve {

/// Parses an expression and returns it normalized.
///
/// Grammar: identifiers [A-Za-z][A-Za-z0-9_]* with optional trailing primes
/// (a', a'' name derivatives of unary functions); integer and decimal
/// literals (decimals become exact rationals); binary + - * / ^ with ^ right
/// associative; unary minus binding tighter than * but looser than ^;
/// parentheses; function application name(arg, ...). Bare identifiers must be
/// jet coordinates (t, x, u, u_x, u_xt, v, v_t, ...).
///
/// Throws ParseError (with offset) or UnknownSymbolError.
Expr parse(std::string_view text, const FunctionTable& table = FunctionTable::standard());

}  // namespace lieconserve
