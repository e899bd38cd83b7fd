#include "lieconserve/evaluate.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "lieconserve/errors.hpp"
#include "lieconserve/parser.hpp"

namespace lieconserve {

std::pair<std::string, Polynomial> parse_instantiation(std::string_view text,
                                                       const FunctionTable& table) {
  const auto pos = text.find(":=");
  if (pos == std::string_view::npos) {
    throw std::invalid_argument("instantiation must look like 'name := polynomial'");
  }
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  const std::string name(trim(text.substr(0, pos)));
  const auto fn = table.resolve(name);
  if (!fn || !fn->is_base()) throw UnknownSymbolError(name);
  if (fn->decl->rewrite) {
    throw std::invalid_argument("'" + name + "' is defined by its derivative rule");
  }
  const Expr body = parse(trim(text.substr(pos + 2)), table);
  return {name, Polynomial::from_expr(body, fn->decl->params)};
}

double JetPoint::at(const Symbol& s) const {
  auto it = values_.find(s);
  if (it == values_.end()) throw EvalError("no value assigned", s.name());
  return it->second;
}

std::string JetPoint::to_string() const {
  std::ostringstream os;
  os.precision(12);
  os << '{';
  bool first = true;
  for (const auto& [s, v] : values_) {
    if (!first) os << ", ";
    os << s.name() << ": " << v;
    first = false;
  }
  os << '}';
  return os.str();
}

namespace {

class Evaluator {
 public:
  Evaluator(const JetPoint& point, const Instantiation& functions, const FunctionTable& table)
      : point_(point), functions_(functions), table_(table) {}

  double run(const Expr& e) {
    const double v = visit(e);
    note(e, v);
    return v;
  }

  [[nodiscard]] double scale() const { return scale_; }

 private:
  void note(const Expr& e, double v) {
    if (!std::isfinite(v)) throw EvalError("non-finite value", lieconserve::to_string(e));
    scale_ = std::max(scale_, std::abs(v));
  }

  double visit(const Expr& e) {
    return std::visit(
        [&](const auto& n) -> double {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Constant>) {
            return static_cast<double>(n.value);
          } else if constexpr (std::is_same_v<T, Symbol>) {
            return point_.at(n);
          } else if constexpr (std::is_same_v<T, FuncApp>) {
            return apply(e, n);
          } else if constexpr (std::is_same_v<T, Sum>) {
            double total = 0.0;
            for (const auto& t : n.terms) total += run(t);
            return total;
          } else if constexpr (std::is_same_v<T, Product>) {
            double total = 1.0;
            for (const auto& f : n.factors) total *= run(f);
            return total;
          } else if constexpr (std::is_same_v<T, Power>) {
            const double base = run(n.base);
            return power(e, base, n.exponent);
          } else {
            return -run(n.operand);
          }
        },
        e.node().value);
  }

  static double power(const Expr& e, double base, const Rational& exponent) {
    if (base == 0.0 && exponent < 0) throw EvalError("pole", lieconserve::to_string(e));
    if (is_integer(exponent)) {
      return std::pow(base, static_cast<double>(numerator(exponent)));
    }
    if (base < 0.0) {
      throw EvalError("negative base with fractional exponent", lieconserve::to_string(e));
    }
    return std::pow(base, static_cast<double>(exponent));
  }

  double apply(const Expr& e, const FuncApp& app) {
    const auto fn = table_.resolve(app.name);
    if (!fn) throw EvalError("unknown function", lieconserve::to_string(e));
    std::vector<double> args;
    args.reserve(app.args.size());
    for (const auto& a : app.args) args.push_back(run(a));
    if (args.size() != fn->decl->arity()) {
      throw EvalError("wrong number of arguments", lieconserve::to_string(e));
    }
    if (const auto& rule = fn->decl->rewrite) {
      const auto key = std::make_pair(fn->decl->name, args[0]);
      auto cached = rule_values_.find(key);
      if (cached == rule_values_.end()) {
        cached = rule_values_.emplace(key, integrate_rule(e, *rule, args[0])).first;
      }
      return cached->second;
    }
    auto it = functions_.find(fn->decl->name);
    if (it == functions_.end()) {
      throw EvalError("no instantiation for '" + fn->decl->name + "'", lieconserve::to_string(e));
    }
    if (fn->is_base()) return it->second.evaluate(args);
    return it->second.derivative(fn->partials).evaluate(args);
  }

  // Values of functions defined through their derivative: adaptive
  // Gauss-Kronrod on the rule's integrand (exact for polynomial integrands).
  double integrate_rule(const Expr& e, const RewriteRule& rule, double w) {
    double lo = rule.base_point;
    if (rule.integration == RewriteRule::Integration::exponential && w < 0.0) lo = -lo;
    auto integrand = [&](double s) {
      JetPoint local;
      local.set(Symbol::u(), s);
      Evaluator inner(local, functions_, table_);
      return inner.run(rule.integrand);
    };
    double error = 0.0;
    double l1 = 0.0;
    const double integral = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        integrand, lo, w, 10, 1e-12, &error, &l1);
    if (!(error <= 1e-9 * std::max(1.0, l1))) {
      throw EvalError("derivative-rule quadrature did not converge", lieconserve::to_string(e));
    }
    return rule.integration == RewriteRule::Integration::exponential ? std::exp(integral)
                                                                     : integral;
  }

  const JetPoint& point_;
  const Instantiation& functions_;
  const FunctionTable& table_;
  double scale_ = 0.0;
  std::map<std::pair<std::string, double>, double> rule_values_;
};

}  // namespace

Evaluation evaluate(const Expr& e, const JetPoint& point, const Instantiation& functions,
                    const FunctionTable& table) {
  Evaluator evaluator(point, functions, table);
  const double value = evaluator.run(e);
  return {value, evaluator.scale()};
}

}  // namespace lieconserve
