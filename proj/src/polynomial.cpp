#include "lieconserve/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lieconserve {

Polynomial Polynomial::univariate(const std::vector<Rational>& coefficients) {
  Polynomial p(1);
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    p.add_term({static_cast<int>(k)}, coefficients[k]);
  }
  return p;
}

void Polynomial::add_term(std::vector<int> exponents, const Rational& coefficient) {
  if (exponents.size() != arity_) throw std::invalid_argument("exponent arity mismatch");
  if (coefficient == 0) return;
  auto it = std::find_if(terms_.begin(), terms_.end(),
                         [&](const Term& t) { return t.exponents == exponents; });
  if (it != terms_.end()) {
    it->coefficient += coefficient;
    it->value = static_cast<double>(it->coefficient);
    if (it->coefficient == 0) terms_.erase(it);
    return;
  }
  terms_.push_back(Term{std::move(exponents), coefficient, static_cast<double>(coefficient)});
}

Polynomial Polynomial::from_expr(const Expr& e, const std::vector<std::string>& vars) {
  const Expr normalized = normalize(e);
  Polynomial p(vars.size());
  auto var_index = [&](const Expr& node) -> std::optional<std::size_t> {
    const auto* sym = node.as<Symbol>();
    if (sym == nullptr) return std::nullopt;
    auto it = std::find(vars.begin(), vars.end(), sym->name());
    if (it == vars.end()) return std::nullopt;
    return static_cast<std::size_t>(it - vars.begin());
  };
  auto reject = [&]() {
    return std::invalid_argument("'" + to_string(normalized) + "' is not a polynomial in the declared arguments");
  };

  std::vector<Expr> terms;
  if (const auto* s = normalized.as<Sum>()) {
    terms = s->terms;
  } else if (!normalized.is_zero_literal()) {
    terms = {normalized};
  }
  for (Expr term : terms) {
    Rational coefficient(1);
    if (const auto* n = term.as<Neg>()) {
      coefficient = -1;
      term = n->operand;
    }
    std::vector<Expr> factors;
    if (const auto* prod = term.as<Product>()) {
      factors = prod->factors;
    } else {
      factors = {term};
    }
    std::vector<int> exponents(vars.size(), 0);
    for (const auto& f : factors) {
      if (auto c = f.constant_value()) {
        coefficient *= *c;
      } else if (auto i = var_index(f)) {
        exponents[*i] += 1;
      } else if (const auto* pw = f.as<Power>()) {
        auto j = var_index(pw->base);
        if (!j || !is_integer(pw->exponent) || pw->exponent < 0) throw reject();
        exponents[*j] += static_cast<int>(numerator(pw->exponent));
      } else {
        throw reject();
      }
    }
    p.add_term(std::move(exponents), coefficient);
  }
  return p;
}

double Polynomial::evaluate(std::span<const double> args) const {
  if (args.size() != arity_) throw std::invalid_argument("polynomial arity mismatch");
  double total = 0.0;
  for (const auto& term : terms_) {
    double v = term.value;
    for (std::size_t i = 0; i < arity_; ++i) {
      for (int k = 0; k < term.exponents[i]; ++k) v *= args[i];
    }
    total += v;
  }
  return total;
}

Polynomial Polynomial::derivative(const std::vector<int>& partials) const {
  Polynomial out(arity_);
  for (const auto& term : terms_) {
    Rational c = term.coefficient;
    std::vector<int> e = term.exponents;
    for (std::size_t i = 0; i < arity_ && c != 0; ++i) {
      for (int k = 0; k < partials.at(i); ++k) {
        c *= e[i];
        e[i] = std::max(e[i] - 1, 0);
        if (c == 0) break;
      }
    }
    out.add_term(std::move(e), c);
  }
  return out;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  std::vector<int> partials(arity_, 0);
  partials.at(var) = 1;
  return derivative(partials);
}

Polynomial Polynomial::antiderivative() const {
  if (arity_ != 1) throw std::invalid_argument("antiderivative needs a univariate polynomial");
  Polynomial out(1);
  for (const auto& term : terms_) {
    const int k = term.exponents[0];
    out.add_term({k + 1}, term.coefficient / (k + 1));
  }
  return out;
}

Expr Polynomial::to_expr(const std::vector<std::string>& vars) const {
  if (vars.size() != arity_) throw std::invalid_argument("variable list arity mismatch");
  std::vector<Expr> terms;
  for (const auto& term : terms_) {
    std::vector<Expr> factors{constant(term.coefficient)};
    for (std::size_t i = 0; i < arity_; ++i) {
      if (term.exponents[i] == 0) continue;
      const auto sym = Symbol::from_name(vars[i]);
      if (!sym) throw std::invalid_argument("'" + vars[i] + "' is not a jet coordinate");
      factors.push_back(power_raw(symbol(*sym), Rational(term.exponents[i])));
    }
    terms.push_back(product_raw(std::move(factors)));
  }
  return add_all(terms);
}

}  // namespace lieconserve
