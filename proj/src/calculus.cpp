#include "lieconserve/calculus.hpp"

#include <map>
#include <stdexcept>

namespace lieconserve {
namespace {

Expr diff_raw(const Expr& e, const Symbol& s, const FunctionTable& table) {
  return std::visit(
      [&](const auto& n) -> Expr {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Constant>) {
          return constant(0);
        } else if constexpr (std::is_same_v<T, Symbol>) {
          return constant(n == s ? 1 : 0);
        } else if constexpr (std::is_same_v<T, FuncApp>) {
          std::vector<Expr> terms;
          for (std::size_t i = 0; i < n.args.size(); ++i) {
            Expr inner = diff_raw(n.args[i], s, table);
            if (normalize(inner).is_zero_literal()) continue;
            terms.push_back(product_raw({table.partial(n, i), inner}));
          }
          return terms.empty() ? constant(0) : sum_raw(std::move(terms));
        } else if constexpr (std::is_same_v<T, Sum>) {
          std::vector<Expr> terms;
          terms.reserve(n.terms.size());
          for (const auto& t : n.terms) terms.push_back(diff_raw(t, s, table));
          return sum_raw(std::move(terms));
        } else if constexpr (std::is_same_v<T, Product>) {
          std::vector<Expr> terms;
          for (std::size_t i = 0; i < n.factors.size(); ++i) {
            Expr d = diff_raw(n.factors[i], s, table);
            if (d.is_zero_literal()) continue;
            std::vector<Expr> factors = n.factors;
            factors[i] = d;
            terms.push_back(product_raw(std::move(factors)));
          }
          return terms.empty() ? constant(0) : sum_raw(std::move(terms));
        } else if constexpr (std::is_same_v<T, Power>) {
          Expr d = diff_raw(n.base, s, table);
          if (d.is_zero_literal()) return constant(0);
          return product_raw({constant(n.exponent), power_raw(n.base, n.exponent - 1), d});
        } else {
          return neg_raw(diff_raw(n.operand, s, table));
        }
      },
      e.node().value);
}

Expr substitute_raw(const Expr& e, const std::map<Symbol, Expr>& map) {
  return std::visit(
      [&](const auto& n) -> Expr {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Constant>) {
          return e;
        } else if constexpr (std::is_same_v<T, Symbol>) {
          auto it = map.find(n);
          return it == map.end() ? e : it->second;
        } else if constexpr (std::is_same_v<T, FuncApp>) {
          std::vector<Expr> args;
          for (const auto& a : n.args) args.push_back(substitute_raw(a, map));
          return func_raw(n.name, std::move(args));
        } else if constexpr (std::is_same_v<T, Sum>) {
          std::vector<Expr> terms;
          for (const auto& t : n.terms) terms.push_back(substitute_raw(t, map));
          return sum_raw(std::move(terms));
        } else if constexpr (std::is_same_v<T, Product>) {
          std::vector<Expr> factors;
          for (const auto& f : n.factors) factors.push_back(substitute_raw(f, map));
          return product_raw(std::move(factors));
        } else if constexpr (std::is_same_v<T, Power>) {
          return power_raw(substitute_raw(n.base, map), n.exponent);
        } else {
          return neg_raw(substitute_raw(n.operand, map));
        }
      },
      e.node().value);
}

template <class Visitor>
void walk(const Expr& e, Visitor&& visit) {
  visit(e);
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, FuncApp>) {
          for (const auto& a : n.args) walk(a, visit);
        } else if constexpr (std::is_same_v<T, Sum>) {
          for (const auto& t : n.terms) walk(t, visit);
        } else if constexpr (std::is_same_v<T, Product>) {
          for (const auto& f : n.factors) walk(f, visit);
        } else if constexpr (std::is_same_v<T, Power>) {
          walk(n.base, visit);
        } else if constexpr (std::is_same_v<T, Neg>) {
          walk(n.operand, visit);
        }
      },
      e.node().value);
}

}  // namespace

Expr diff(const Expr& e, const Symbol& s, const FunctionTable& table) {
  return normalize(diff_raw(e, s, table));
}

Expr diff(const Expr& e, std::initializer_list<Symbol> symbols, const FunctionTable& table) {
  Expr out = e;
  for (const auto& s : symbols) out = diff(out, s, table);
  return out;
}

Expr substitute(const Expr& e, const std::vector<Binding>& bindings) {
  std::map<Symbol, Expr> map;
  for (const auto& [target, value] : bindings) {
    if (!map.emplace(target, value).second) {
      throw std::invalid_argument("duplicate substitution target " + target.name());
    }
  }
  return normalize(substitute_raw(e, map));
}

Expr substitute_function(const Expr& e, std::string_view name, const Expr& body,
                         const FunctionTable& table) {
  const auto base = table.resolve(name);
  if (!base || !base->is_base()) {
    throw std::invalid_argument("unknown function '" + std::string(name) + "'");
  }
  const auto& params = base->decl->params;
  std::vector<Symbol> param_symbols;
  for (const auto& p : params) param_symbols.push_back(*Symbol::from_name(p));

  std::map<std::vector<int>, Expr> derivative_cache;
  auto body_derivative = [&](const std::vector<int>& partials) -> const Expr& {
    auto it = derivative_cache.find(partials);
    if (it != derivative_cache.end()) return it->second;
    Expr d = normalize(body);
    for (std::size_t i = 0; i < partials.size(); ++i) {
      for (int k = 0; k < partials[i]; ++k) d = diff(d, param_symbols[i], table);
    }
    return derivative_cache.emplace(partials, d).first->second;
  };

  std::function<Expr(const Expr&)> rewrite = [&](const Expr& node) -> Expr {
    return std::visit(
        [&](const auto& n) -> Expr {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Constant> || std::is_same_v<T, Symbol>) {
            return node;
          } else if constexpr (std::is_same_v<T, FuncApp>) {
            std::vector<Expr> args;
            for (const auto& a : n.args) args.push_back(rewrite(a));
            const auto fn = table.resolve(n.name);
            if (!fn || fn->decl != base->decl) return func_raw(n.name, std::move(args));
            std::vector<Binding> bindings;
            for (std::size_t i = 0; i < args.size(); ++i) {
              bindings.emplace_back(param_symbols[i], args[i]);
            }
            return substitute(body_derivative(fn->partials), bindings);
          } else if constexpr (std::is_same_v<T, Sum>) {
            std::vector<Expr> terms;
            for (const auto& t : n.terms) terms.push_back(rewrite(t));
            return sum_raw(std::move(terms));
          } else if constexpr (std::is_same_v<T, Product>) {
            std::vector<Expr> factors;
            for (const auto& f : n.factors) factors.push_back(rewrite(f));
            return product_raw(std::move(factors));
          } else if constexpr (std::is_same_v<T, Power>) {
            return power_raw(rewrite(n.base), n.exponent);
          } else {
            return neg_raw(rewrite(n.operand));
          }
        },
        node.node().value);
  };
  return normalize(rewrite(e));
}

bool depends_on(const Expr& e, const Symbol& s) {
  bool found = false;
  walk(e, [&](const Expr& node) {
    if (const auto* sym = node.as<Symbol>(); sym != nullptr && *sym == s) found = true;
  });
  return found;
}

std::set<Symbol> symbols_of(const Expr& e) {
  std::set<Symbol> out;
  walk(e, [&](const Expr& node) {
    if (const auto* sym = node.as<Symbol>()) out.insert(*sym);
  });
  return out;
}

std::set<std::string> functions_of(const Expr& e) {
  std::set<std::string> out;
  walk(e, [&](const Expr& node) {
    if (const auto* app = node.as<FuncApp>()) out.insert(app->name);
  });
  return out;
}

std::optional<Expr> integrate_in_u(const Expr& e) {
  const Expr normalized = normalize(e);
  const Symbol u = Symbol::u();
  const Expr u_expr = symbol(u);
  std::vector<Expr> terms;
  if (const auto* s = normalized.as<Sum>()) {
    terms = s->terms;
  } else {
    terms = {normalized};
  }
  std::vector<Expr> integrated;
  for (const Expr& raw_term : terms) {
    Expr term = raw_term;
    bool negative = false;
    if (const auto* n = term.as<Neg>()) {
      term = n->operand;
      negative = true;
    }
    std::vector<Expr> factors;
    if (const auto* p = term.as<Product>()) {
      factors = p->factors;
    } else {
      factors = {term};
    }
    Rational power(0);
    std::vector<Expr> coefficient;
    for (const auto& f : factors) {
      if (const auto* sym = f.as<Symbol>(); sym != nullptr && *sym == u) {
        power += 1;
      } else if (const auto* pw = f.as<Power>();
                 pw != nullptr && pw->base.as<Symbol>() != nullptr &&
                 *pw->base.as<Symbol>() == u) {
        power += pw->exponent;
      } else if (depends_on(f, u)) {
        return std::nullopt;
      } else {
        coefficient.push_back(f);
      }
    }
    if (!is_integer(power) || power < 0) return std::nullopt;
    const Rational next = power + 1;
    coefficient.push_back(constant(Rational(1) / next));
    coefficient.push_back(power_raw(u_expr, next));
    Expr piece = product_raw(std::move(coefficient));
    integrated.push_back(negative ? neg_raw(piece) : piece);
  }
  return add_all(integrated);
}

Expr instantiate_function(const Expr& e, std::string_view name, const Expr& body,
                          const FunctionTable& table) {
  const auto target = table.resolve(name);
  if (!target) throw std::invalid_argument("unknown function '" + std::string(name) + "'");
  Expr out = substitute_function(e, name, body, table);
  for (const auto& fname : functions_of(out)) {
    const auto fn = table.resolve(fname);
    if (!fn || !fn->decl->rewrite) continue;
    const RewriteRule& rule = *fn->decl->rewrite;
    if (rule.integration != RewriteRule::Integration::antiderivative) continue;
    bool mentions = false;
    for (const auto& inner : functions_of(rule.integrand)) {
      const auto r = table.resolve(inner);
      mentions = mentions || (r && r->decl == target->decl);
    }
    if (!mentions) continue;
    const auto primitive =
        integrate_in_u(substitute_function(rule.integrand, name, body, table));
    if (!primitive) continue;
    const Expr at_base =
        substitute(*primitive, {{Symbol::u(), constant(Rational(rule.base_point))}});
    out = substitute_function(out, fname, *primitive - at_base, table);
  }
  return normalize(out);
}

}  // namespace lieconserve
