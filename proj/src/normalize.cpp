// Canonical form via a sparse "generalized polynomial": a map from monomials
// (products of atom^rational-exponent) to exact rational coefficients.

#include <map>
#include <utility>

#include "lieconserve/errors.hpp"
#include "lieconserve/expr.hpp"

namespace lieconserve {
namespace {

// Products of sums raised to larger powers stay unexpanded.
constexpr long kMaxExpandPower = 12;

using Factor = std::pair<Expr, Rational>;
using Monomial = std::vector<Factor>;

Rational degree(const Monomial& m) {
  Rational d(0);
  for (const auto& [base, e] : m) d += e < 0 ? Rational(-e) : e;
  return d;
}

int compare_monomials(const Monomial& a, const Monomial& b) {
  const Rational da = degree(a);
  const Rational db = degree(b);
  if (da != db) return da < db ? -1 : 1;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (int c = compare(a[i].first, b[i].first); c != 0) return c;
    if (a[i].second != b[i].second) return a[i].second < b[i].second ? -1 : 1;
  }
  if (a.size() == b.size()) return 0;
  return a.size() < b.size() ? -1 : 1;
}

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return compare_monomials(a, b) < 0;
  }
};

using Poly = std::map<Monomial, Rational, MonomialLess>;

void accumulate(Poly& p, const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = p.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

Poly constant_poly(const Rational& c) {
  Poly p;
  accumulate(p, {}, c);
  return p;
}

// Multiplies monomials, merging equal bases. Constant bases whose exponent
// becomes an integer fold into the returned coefficient.
std::pair<Rational, Monomial> multiply(const Monomial& a, const Monomial& b) {
  Rational coef(1);
  Monomial out;
  out.reserve(a.size() + b.size());
  auto push = [&](const Expr& base, const Rational& e) {
    if (e == 0) return;
    if (auto c = base.constant_value(); c && is_integer(e)) {
      coef *= rational_pow(*c, static_cast<long>(numerator(e)));
      return;
    }
    out.emplace_back(base, e);
  };
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      push(a[i].first, a[i].second);
      ++i;
    } else if (i == a.size()) {
      push(b[j].first, b[j].second);
      ++j;
    } else {
      const int c = compare(a[i].first, b[j].first);
      if (c < 0) {
        push(a[i].first, a[i].second);
        ++i;
      } else if (c > 0) {
        push(b[j].first, b[j].second);
        ++j;
      } else {
        push(a[i].first, a[i].second + b[j].second);
        ++i;
        ++j;
      }
    }
  }
  return {coef, std::move(out)};
}

Poly multiply(const Poly& p, const Poly& q) {
  Poly out;
  for (const auto& [ma, ca] : p) {
    for (const auto& [mb, cb] : q) {
      auto [coef, m] = multiply(ma, mb);
      accumulate(out, m, coef * ca * cb);
    }
  }
  return out;
}

Poly negate(Poly p) {
  for (auto& [m, c] : p) c = -c;
  return p;
}

Expr to_expr(const Poly& p);
Poly to_poly(const Expr& e);

Expr term_expr(const Monomial& m, const Rational& coef) {
  if (m.empty()) return constant(coef);
  std::vector<Expr> factors;
  factors.reserve(m.size() + 1);
  const Rational magnitude = coef < 0 ? Rational(-coef) : coef;
  if (magnitude != 1) factors.push_back(constant(magnitude));
  for (const auto& [base, e] : m) {
    factors.push_back(e == 1 ? base : power_raw(base, e));
  }
  Expr term = factors.size() == 1 ? factors.front() : product_raw(std::move(factors));
  return coef < 0 ? neg_raw(term) : term;
}

Expr to_expr(const Poly& p) {
  if (p.empty()) return constant(0);
  std::vector<Expr> terms;
  terms.reserve(p.size());
  for (const auto& [m, c] : p) terms.push_back(term_expr(m, c));
  if (terms.size() == 1) return terms.front();
  return sum_raw(std::move(terms));
}

Poly atom_poly(const Expr& atom, const Rational& exponent = Rational(1)) {
  Poly p;
  p.emplace(Monomial{{atom, exponent}}, Rational(1));
  return p;
}

Poly power_poly(const Poly& base, const Rational& q) {
  if (q == 0) return constant_poly(1);
  if (base.empty()) {
    if (q < 0) throw DivisionByZero("division by zero during simplification");
    return {};
  }
  const bool integral = is_integer(q);
  if (base.size() == 1) {
    const auto& [m, c] = *base.begin();
    if (integral) {
      const long n = static_cast<long>(numerator(q));
      Monomial scaled;
      for (const auto& [b, e] : m) scaled.emplace_back(b, e * q);
      // Re-run through multiply() to fold constant bases.
      auto [coef, folded] = multiply(scaled, {});
      Poly out;
      accumulate(out, folded, coef * rational_pow(c, n));
      return out;
    }
    if (m.empty()) {
      if (c == 1) return constant_poly(1);
      return atom_poly(constant(c), q);
    }
    if (c == 1 && m.size() == 1) return atom_poly(m.front().first, m.front().second * q);
    return atom_poly(to_expr(base), q);
  }
  if (integral && q > 0 && q <= kMaxExpandPower) {
    long n = static_cast<long>(numerator(q));
    Poly result = constant_poly(1);
    Poly square = base;
    while (n > 0) {
      if (n & 1) result = multiply(result, square);
      n >>= 1;
      if (n > 0) square = multiply(square, square);
    }
    return result;
  }
  // Unexpandable sum power. Integer powers get a base with leading
  // coefficient 1 so that (x - y)^-1 and (y - x)^-1 share one spelling.
  Rational content(1);
  Poly b = base;
  if (integral) {
    content = b.begin()->second;
    for (auto& [m, c] : b) c /= content;
  }
  Poly out;
  out.emplace(Monomial{{to_expr(b), q}}, rational_pow(content, static_cast<long>(numerator(q))));
  return out;
}

Poly to_poly(const Expr& e) {
  return std::visit(
      [&](const auto& n) -> Poly {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Constant>) {
          return constant_poly(n.value);
        } else if constexpr (std::is_same_v<T, Symbol>) {
          return atom_poly(e);
        } else if constexpr (std::is_same_v<T, FuncApp>) {
          std::vector<Expr> args;
          args.reserve(n.args.size());
          for (const auto& a : n.args) args.push_back(normalize(a));
          return atom_poly(func_raw(n.name, std::move(args)));
        } else if constexpr (std::is_same_v<T, Sum>) {
          Poly out;
          for (const auto& term : n.terms) {
            for (const auto& [m, c] : to_poly(term)) accumulate(out, m, c);
          }
          return out;
        } else if constexpr (std::is_same_v<T, Product>) {
          Poly out = constant_poly(1);
          for (const auto& f : n.factors) {
            out = multiply(out, to_poly(f));
            if (out.empty()) break;
          }
          return out;
        } else if constexpr (std::is_same_v<T, Power>) {
          if (is_integer(n.exponent)) {
            // Integer powers distribute over the raw base first, so that
            // 1/(2*(x + 1)^3) and (x + 1)^-3/2 normalize identically.
            if (const auto* inner = n.base.template as<Power>()) {
              return to_poly(power_raw(inner->base, inner->exponent * n.exponent));
            }
            if (const auto* prod = n.base.template as<Product>()) {
              std::vector<Expr> factors;
              factors.reserve(prod->factors.size());
              for (const auto& f : prod->factors) factors.push_back(power_raw(f, n.exponent));
              return to_poly(product_raw(std::move(factors)));
            }
            if (const auto* neg = n.base.template as<Neg>()) {
              const Poly p = to_poly(power_raw(neg->operand, n.exponent));
              return numerator(n.exponent) % 2 != 0 ? negate(p) : p;
            }
          }
          return power_poly(to_poly(n.base), n.exponent);
        } else {
          return negate(to_poly(n.operand));
        }
      },
      e.node().value);
}

}  // namespace

Expr normalize(const Expr& e) { return to_expr(to_poly(e)); }

}  // namespace lieconserve
