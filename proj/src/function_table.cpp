#include "lieconserve/function_table.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "lieconserve/calculus.hpp"

namespace lieconserve {
namespace {

bool valid_identifier(std::string_view name) {
  if (name.empty() || std::isalpha(static_cast<unsigned char>(name[0])) == 0) {
    return false;
  }
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
  });
}

// "name_d12" style suffixes are reserved for partial derivatives.
std::optional<std::size_t> derivative_suffix(std::string_view name) {
  const auto pos = name.rfind("_d");
  if (pos == std::string_view::npos || pos == 0 || pos + 2 == name.size()) {
    return std::nullopt;
  }
  for (char c : name.substr(pos + 2)) {
    if (std::isdigit(static_cast<unsigned char>(c)) == 0) return std::nullopt;
  }
  return pos;
}

}  // namespace

bool ResolvedFunction::is_base() const {
  return std::all_of(partials.begin(), partials.end(), [](int k) { return k == 0; });
}

const FunctionTable& FunctionTable::standard() {
  static const FunctionTable table = [] {
    FunctionTable t;
    t.declare("a", {"u"});
    const Expr u = symbol(Symbol::u());
    const Expr antiderivative_rhs = u * func("a", {u});
    t.declare_rewrite("A", RewriteRule{antiderivative_rhs, antiderivative_rhs,
                                       RewriteRule::Integration::antiderivative, 0.0});
    t.declare("q", {"x"});
    t.declare("tau", {"u"});
    t.declare("xi", {"u"});
    t.declare("lam", {"t", "x"});
    t.declare("f", {"t", "x", "u", "u_x"});
    return t;
  }();
  return table;
}

void FunctionTable::declare(const std::string& name, std::vector<std::string> params) {
  if (!valid_identifier(name) || derivative_suffix(name)) {
    throw std::invalid_argument("invalid function name '" + name + "'");
  }
  if (Symbol::from_name(name)) {
    throw std::invalid_argument("'" + name + "' is a jet symbol");
  }
  if (params.empty()) {
    throw std::invalid_argument("function '" + name + "' needs at least one argument");
  }
  for (const auto& p : params) {
    if (!Symbol::from_name(p)) {
      throw std::invalid_argument("parameter '" + p + "' of '" + name +
                                  "' is not a jet coordinate");
    }
  }
  if (resolve(name)) throw std::invalid_argument("function '" + name + "' already declared");
  decls_.emplace(name, FunctionDecl{name, std::move(params), std::nullopt});
}

void FunctionTable::declare_rewrite(const std::string& name, RewriteRule rule) {
  declare(name, {"u"});
  for (const Expr* e : {&rule.derivative, &rule.integrand}) {
    for (const auto& s : symbols_of(*e)) {
      if (s != Symbol::u()) {
        decls_.erase(name);
        throw std::invalid_argument("derivative rule of '" + name +
                                    "' may only depend on u");
      }
    }
  }
  decls_.find(name)->second.rewrite = std::move(rule);
}

bool FunctionTable::contains(std::string_view name) const { return resolve(name).has_value(); }

std::optional<ResolvedFunction> FunctionTable::resolve(std::string_view name) const {
  if (auto it = decls_.find(name); it != decls_.end()) {
    return ResolvedFunction{&it->second, std::vector<int>(it->second.arity(), 0)};
  }
  std::size_t primes = 0;
  while (primes < name.size() && name[name.size() - 1 - primes] == '\'') ++primes;
  if (primes > 0) {
    auto it = decls_.find(name.substr(0, name.size() - primes));
    if (it == decls_.end() || it->second.arity() != 1 || it->second.rewrite) {
      return std::nullopt;
    }
    return ResolvedFunction{&it->second, {static_cast<int>(primes)}};
  }
  const auto pos = derivative_suffix(name);
  if (!pos) return std::nullopt;
  auto it = decls_.find(name.substr(0, *pos));
  if (it == decls_.end() || it->second.arity() < 2) return std::nullopt;
  ResolvedFunction out{&it->second, std::vector<int>(it->second.arity(), 0)};
  char previous = '0';
  for (char c : name.substr(*pos + 2)) {
    const auto index = static_cast<std::size_t>(c - '1');
    if (c < previous || index >= out.partials.size()) return std::nullopt;
    ++out.partials[index];
    previous = c;
  }
  return out;
}

std::vector<std::string> FunctionTable::names() const {
  std::vector<std::string> out;
  out.reserve(decls_.size());
  for (const auto& [name, decl] : decls_) out.push_back(name);
  return out;
}

std::string FunctionTable::derivative_name(const ResolvedFunction& fn,
                                           std::size_t arg) const {
  std::vector<int> partials = fn.partials;
  ++partials.at(arg);
  std::string out = fn.decl->name;
  if (fn.decl->arity() == 1) {
    out.append(static_cast<std::size_t>(partials[0]), '\'');
    return out;
  }
  out += "_d";
  for (std::size_t i = 0; i < partials.size(); ++i) {
    out.append(static_cast<std::size_t>(partials[i]), static_cast<char>('1' + i));
  }
  return out;
}

Expr FunctionTable::partial(const FuncApp& app, std::size_t arg) const {
  const auto fn = resolve(app.name);
  if (!fn) throw std::invalid_argument("unknown function '" + app.name + "'");
  if (const auto& rule = fn->decl->rewrite) {
    return substitute(rule->derivative, {{Symbol::u(), app.args.at(0)}});
  }
  return func(derivative_name(*fn, arg), app.args);
}

std::string FunctionTable::fresh_name(const std::string& stem) const {
  if (!contains(stem)) return stem;
  for (int i = 2;; ++i) {
    std::string candidate = stem + std::to_string(i);
    if (!contains(candidate)) return candidate;
  }
}

}  // namespace lieconserve
