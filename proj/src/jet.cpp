#include "lieconserve/jet.hpp"

#include <map>
#include <stdexcept>

#include "lieconserve/errors.hpp"
#include "lieconserve/zero_test.hpp"

namespace lieconserve {
namespace {

void require_symbols(const Expr& e, std::initializer_list<Symbol> allowed, const char* what) {
  for (const auto& s : symbols_of(e)) {
    bool ok = false;
    for (const auto& a : allowed) ok = ok || a == s;
    if (!ok) {
      throw std::invalid_argument(std::string(what) + " may not depend on " + s.name() + ": " +
                                  to_string(e));
    }
  }
}

// D_x^nx D_t^nt applied to `e`.
Expr total_derivative_n(Expr e, int nx, int nt, const FunctionTable& table) {
  for (int i = 0; i < nx; ++i) e = total_derivative(e, Direction::x, table);
  for (int i = 0; i < nt; ++i) e = total_derivative(e, Direction::t, table);
  return e;
}

bool has_time_derivative_of(const Expr& e, Field field) {
  for (const auto& s : symbols_of(e)) {
    if (s.is_jet() && s.field() == field && s.nt() > 0) return true;
  }
  return false;
}

// Replaces each t-derivative of `field` by D_x^nx D_t^(nt-1) of `rhs`, where
// rhs is the value of the first t-derivative, until none remain.
Expr eliminate(const Expr& e, Field field, const Expr& rhs,
               const std::function<Expr(const Expr&)>& reduce_rhs, const FunctionTable& table) {
  Expr current = normalize(e);
  std::map<Symbol, Expr> cache;
  for (int pass = 0; pass < 2 * Symbol::kMaxOrder + 2; ++pass) {
    std::vector<Binding> bindings;
    for (const auto& s : symbols_of(current)) {
      if (!s.is_jet() || s.field() != field || s.nt() == 0) continue;
      auto it = cache.find(s);
      if (it == cache.end()) {
        const Expr value = reduce_rhs(total_derivative_n(rhs, s.nx(), s.nt() - 1, table));
        it = cache.emplace(s, value).first;
      }
      bindings.emplace_back(s, it->second);
    }
    if (bindings.empty()) return current;
    current = substitute(current, bindings);
  }
  throw std::logic_error("on-solution reduction did not terminate for " + to_string(e));
}

}  // namespace

Symbol direction_symbol(Direction d) { return d == Direction::t ? Symbol::t() : Symbol::x(); }

EvolutionSpec EvolutionSpec::generic(Expr f) {
  f = normalize(f);
  require_symbols(f, {Symbol::t(), Symbol::x(), Symbol::u(), Symbol::u(1)}, "f");
  EvolutionSpec spec;
  spec.f_ = std::move(f);
  return spec;
}

EvolutionSpec EvolutionSpec::alpha_beta(Expr alpha, Expr beta) {
  alpha = normalize(alpha);
  beta = normalize(beta);
  require_symbols(alpha, {Symbol::t(), Symbol::x(), Symbol::u()}, "alpha");
  require_symbols(beta, {Symbol::t(), Symbol::x(), Symbol::u()}, "beta");
  if (alpha.is_zero_literal()) throw std::invalid_argument("alpha must not vanish");
  EvolutionSpec spec;
  spec.f_ = alpha * symbol(Symbol::u(1)) + beta;
  spec.alpha_ = std::move(alpha);
  spec.beta_ = std::move(beta);
  spec.alpha_beta_ = true;
  return spec;
}

const Expr& EvolutionSpec::alpha() const {
  if (!alpha_beta_) throw std::logic_error("generic spec has no alpha");
  return alpha_;
}

const Expr& EvolutionSpec::beta() const {
  if (!alpha_beta_) throw std::logic_error("generic spec has no beta");
  return beta_;
}

Expr EvolutionSpec::equation() const { return symbol(Symbol::u(0, 1)) + f_; }

std::optional<EvolutionSpec> EvolutionSpec::as_alpha_beta(const FunctionTable& table) const {
  if (alpha_beta_) return *this;
  const Symbol ux = Symbol::u(1);
  const Expr alpha = diff(f_, ux, table);
  if (depends_on(alpha, ux)) return std::nullopt;
  const Expr beta = f_ - alpha * symbol(ux);
  if (depends_on(beta, ux) || alpha.is_zero_literal()) return std::nullopt;
  return alpha_beta(alpha, beta);
}

std::string EvolutionSpec::to_string() const {
  return "u_t + " + lieconserve::to_string(f_) + " = 0";
}

Expr total_derivative(const Expr& e, Direction d, const FunctionTable& table) {
  const Symbol dir = direction_symbol(d);
  std::vector<Expr> terms;
  for (const auto& s : symbols_of(e)) {
    if (s.is_independent()) {
      if (s == dir) terms.push_back(diff(e, s, table));
      continue;
    }
    if (s.order() >= Symbol::kMaxOrder) {
      throw UnsupportedDepthError("total derivative of " + s.name() +
                                  " exceeds the supported jet order " +
                                  std::to_string(Symbol::kMaxOrder));
    }
    terms.push_back(diff(e, s, table) * symbol(s.shifted(dir)));
  }
  return add_all(terms);
}

bool has_time_derivative(const Expr& e, Field field) { return has_time_derivative_of(e, field); }

Expr on_solution_reduce(const Expr& e, const EvolutionSpec& spec, const FunctionTable& table) {
  const Expr rhs = -spec.f();
  std::function<Expr(const Expr&)> reduce = [&](const Expr& value) {
    return eliminate(value, Field::u, rhs, reduce, table);
  };
  return reduce(e);
}

Expr on_system_reduce(const Expr& e, const EvolutionSpec& spec, const FunctionTable& table) {
  // F* = -v_t + R, so v_t = R on solutions of the adjoint equation.
  const Expr r = adjoint_of(spec, table) + symbol(Symbol::v(0, 1));
  const Expr reduced_u = on_solution_reduce(e, spec, table);
  std::function<Expr(const Expr&)> reduce = [&](const Expr& value) {
    return eliminate(on_solution_reduce(value, spec, table), Field::v, r, reduce, table);
  };
  return on_solution_reduce(reduce(reduced_u), spec, table);
}

Expr euler_lagrange(const Expr& lagrangian, const FunctionTable& table) {
  std::vector<Expr> terms;
  for (const auto& s : symbols_of(lagrangian)) {
    if (!s.is_jet() || s.field() != Field::u) continue;
    Expr term = total_derivative_n(diff(lagrangian, s, table), s.nx(), s.nt(), table);
    if (s.order() % 2 != 0) term = -term;
    terms.push_back(term);
  }
  return add_all(terms);
}

Expr formal_lagrangian(const EvolutionSpec& spec) {
  return symbol(Symbol::v()) * spec.equation();
}

Expr adjoint_of(const EvolutionSpec& spec, const FunctionTable& table) {
  const Expr variational = euler_lagrange(formal_lagrangian(spec), table);
  const Expr transcribed = adjoint_transcribed(spec, table);
  if (variational != transcribed && !is_zero(variational - transcribed, table).zero) {
    throw std::logic_error("adjoint mismatch between the variational derivative and the direct form: " +
                           to_string(variational - transcribed));
  }
  return variational;
}

Expr adjoint_transcribed(const EvolutionSpec& spec, const FunctionTable& table) {
  const Symbol u = Symbol::u();
  const Symbol ux = Symbol::u(1);
  const Expr& f = spec.f();
  const Expr f_p = diff(f, ux, table);
  const Expr v = symbol(Symbol::v());
  return -symbol(Symbol::v(0, 1)) - symbol(Symbol::v(1)) * f_p + v * diff(f, u, table) -
         v * diff(f_p, Symbol::x(), table) - v * symbol(ux) * diff(f_p, u, table) -
         v * diff(f_p, ux, table) * symbol(Symbol::u(2));
}

}  // namespace lieconserve
