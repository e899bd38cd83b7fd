#include "lieconserve/zero_test.hpp"

#include <cmath>
#include <random>

#include "lieconserve/calculus.hpp"
#include "lieconserve/errors.hpp"

namespace lieconserve {
namespace {

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

// Degree <= 2 in every argument, coefficients k/4 with k in [-8, 8], constant
// term bounded away from zero.
Polynomial random_polynomial(std::size_t arity, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-8, 8);
  std::uniform_int_distribution<int> offset(4, 8);
  Polynomial p(arity);
  p.add_term(std::vector<int>(arity, 0), Rational(offset(rng), 4));
  for (std::size_t i = 0; i < arity; ++i) {
    for (int k = 1; k <= 2; ++k) {
      std::vector<int> e(arity, 0);
      e[i] = k;
      p.add_term(std::move(e), Rational(coeff(rng), 4));
    }
  }
  return p;
}

// Functions reachable from `e`, including those inside derivative rules.
std::set<std::string> base_functions(const Expr& e, const FunctionTable& table) {
  std::set<std::string> out;
  std::vector<Expr> pending{e};
  std::set<std::string> seen_rules;
  while (!pending.empty()) {
    const Expr current = pending.back();
    pending.pop_back();
    for (const auto& name : functions_of(current)) {
      const auto fn = table.resolve(name);
      if (!fn) continue;
      if (const auto& rule = fn->decl->rewrite) {
        if (seen_rules.insert(fn->decl->name).second) {
          pending.push_back(rule->derivative);
          pending.push_back(rule->integrand);
        }
      } else {
        out.insert(fn->decl->name);
      }
    }
  }
  return out;
}

}  // namespace

ZeroTestConfig ZeroTestConfig::defaults() {
  ZeroTestConfig config;
  const std::vector<std::vector<Rational>> a_choices = {
      {Rational(0), Rational(1)},
      {Rational(2), Rational(0), Rational(1)},
      {Rational(0), Rational(1), Rational(0), Rational(1, 3)},
  };
  for (const auto& coefficients : a_choices) {
    Instantiation inst;
    inst.emplace("a", Polynomial::univariate(coefficients));
    config.instantiations.push_back(std::move(inst));
  }
  return config;
}

ZeroVerdict is_zero(const Expr& e, const FunctionTable& table, const ZeroTestConfig& config) {
  ZeroVerdict verdict;
  const Expr normalized = normalize(e);
  if (normalized.is_zero_literal()) {
    verdict.zero = true;
    verdict.structural = true;
    return verdict;
  }
  const auto symbols = symbols_of(normalized);
  const auto functions = base_functions(normalized, table);

  std::vector<Instantiation> sets = config.instantiations;
  if (sets.empty()) sets.emplace_back();
  for (std::size_t k = 0; k < sets.size(); ++k) {
    for (const auto& name : functions) {
      if (sets[k].count(name) != 0) continue;
      std::mt19937_64 rng(config.seed ^ fnv1a(name) ^ (0x9e3779b97f4a7c15ULL * (k + 1)));
      sets[k].emplace(name, random_polynomial(table.resolve(name)->decl->arity(), rng));
    }
  }

  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> magnitude(config.box_lo, config.box_hi);
  std::bernoulli_distribution negative(0.5);
  for (std::size_t k = 0; k < sets.size(); ++k) {
    for (int i = 0; i < config.samples; ++i) {
      JetPoint point;
      for (const auto& s : symbols) {
        const double m = magnitude(rng);
        point.set(s, negative(rng) ? -m : m);
      }
      Evaluation result;
      try {
        result = evaluate(normalized, point, sets[k], table);
      } catch (const EvalError&) {
        ++verdict.skipped;
        continue;
      }
      ++verdict.evaluations;
      if (std::abs(result.value) > config.tolerance * (1.0 + result.scale)) {
        verdict.zero = false;
        verdict.witness = Witness{point, sets[k], k, result.value, result.scale};
        return verdict;
      }
    }
  }
  if (verdict.evaluations == 0) {
    throw InconclusiveError("zero test: every sample point hit a pole or domain error for " +
                            to_string(normalized));
  }
  verdict.zero = true;
  return verdict;
}

bool vanishes(const Expr& e, const FunctionTable& table, const ZeroTestConfig& config) {
  return is_zero(e, table, config).zero;
}

}  // namespace lieconserve
