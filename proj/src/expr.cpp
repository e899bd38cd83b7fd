#include "lieconserve/expr.hpp"

#include <sstream>

#include "lieconserve/errors.hpp"

namespace lieconserve {

Rational rational_pow(const Rational& base, long exponent) {
  if (exponent == 0) return Rational(1);
  if (base == 0) {
    if (exponent < 0) throw DivisionByZero("0 raised to a negative power");
    return Rational(0);
  }
  using boost::multiprecision::cpp_int;
  const auto n = static_cast<unsigned>(exponent < 0 ? -exponent : exponent);
  cpp_int num = boost::multiprecision::pow(numerator(base), n);
  cpp_int den = boost::multiprecision::pow(denominator(base), n);
  const Rational magnitude(num, den);
  return exponent > 0 ? magnitude : Rational(1) / magnitude;
}

bool is_integer(const Rational& q) { return denominator(q) == 1; }

std::string to_string(const Rational& q) {
  if (is_integer(q)) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

// ---------------------------------------------------------------------------
// Symbol

Symbol Symbol::jet(Field field, int nx, int nt) {
  return Symbol(Kind::jet, field, nx, nt);
}

std::optional<Symbol> Symbol::from_name(std::string_view name) {
  if (name == "t") return t();
  if (name == "x") return x();
  if (name.empty() || (name[0] != 'u' && name[0] != 'v')) return std::nullopt;
  const Field field = name[0] == 'u' ? Field::u : Field::v;
  if (name.size() == 1) return jet(field);
  if (name.size() < 3 || name[1] != '_') return std::nullopt;
  int nx = 0;
  int nt = 0;
  for (char c : name.substr(2)) {
    if (c == 'x') {
      ++nx;
    } else if (c == 't') {
      ++nt;
    } else {
      return std::nullopt;
    }
  }
  if (nx + nt > kMaxOrder) return std::nullopt;
  return jet(field, nx, nt);
}

Symbol Symbol::shifted(const Symbol& direction) const {
  if (!is_jet()) return *this;
  return direction.kind() == Kind::time ? jet(field_, nx_, nt_ + 1)
                                        : jet(field_, nx_ + 1, nt_);
}

std::string Symbol::name() const {
  switch (kind_) {
    case Kind::time: return "t";
    case Kind::space: return "x";
    case Kind::jet: break;
  }
  std::string out(1, field_ == Field::u ? 'u' : 'v');
  if (order() > 0) {
    out += '_';
    out.append(static_cast<std::size_t>(nx_), 'x');
    out.append(static_cast<std::size_t>(nt_), 't');
  }
  return out;
}

std::strong_ordering operator<=>(const Symbol& a, const Symbol& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  if (auto c = a.field_ <=> b.field_; c != 0) return c;
  if (auto c = a.order() <=> b.order(); c != 0) return c;
  return a.nt_ <=> b.nt_;
}

// ---------------------------------------------------------------------------
// Expr

namespace {

Expr make(Node node) { return Expr(std::make_shared<const Node>(std::move(node))); }

const Expr& zero_constant() {
  static const Expr zero = make(Node{Constant{Rational(0)}});
  return zero;
}

}  // namespace

Expr::Expr() : node_(zero_constant().node_) {}

std::optional<Rational> Expr::constant_value() const {
  if (const auto* c = as<Constant>()) return c->value;
  return std::nullopt;
}

bool Expr::is_zero_literal() const {
  const auto* c = as<Constant>();
  return c != nullptr && c->value == 0;
}

bool Expr::is_one_literal() const {
  const auto* c = as<Constant>();
  return c != nullptr && c->value == 1;
}

Expr constant(Rational value) { return make(Node{Constant{std::move(value)}}); }
Expr constant(long value) { return constant(Rational(value)); }
Expr symbol(const Symbol& s) { return make(Node{s}); }
Expr func_raw(std::string name, std::vector<Expr> args) {
  return make(Node{FuncApp{std::move(name), std::move(args)}});
}
Expr sum_raw(std::vector<Expr> terms) { return make(Node{Sum{std::move(terms)}}); }
Expr product_raw(std::vector<Expr> factors) {
  return make(Node{Product{std::move(factors)}});
}
Expr power_raw(Expr base, Rational exponent) {
  return make(Node{Power{std::move(base), std::move(exponent)}});
}
Expr neg_raw(Expr operand) { return make(Node{Neg{std::move(operand)}}); }

Expr operator+(const Expr& a, const Expr& b) { return normalize(sum_raw({a, b})); }
Expr operator-(const Expr& a, const Expr& b) {
  return normalize(sum_raw({a, neg_raw(b)}));
}
Expr operator*(const Expr& a, const Expr& b) {
  return normalize(product_raw({a, b}));
}
Expr operator/(const Expr& a, const Expr& b) {
  return normalize(product_raw({a, power_raw(b, Rational(-1))}));
}
Expr operator-(const Expr& a) { return normalize(neg_raw(a)); }
Expr pow(const Expr& base, const Rational& exponent) {
  return normalize(power_raw(base, exponent));
}
Expr func(std::string name, std::vector<Expr> args) {
  return normalize(func_raw(std::move(name), std::move(args)));
}
Expr add_all(const std::vector<Expr>& terms) {
  if (terms.empty()) return Expr();
  return normalize(sum_raw(terms));
}
Expr multiply_all(const std::vector<Expr>& factors) {
  if (factors.empty()) return constant(1);
  return normalize(product_raw(factors));
}

// ---------------------------------------------------------------------------
// Ordering

namespace {

// Factor order inside products: constants, t and x, opaque functions, jet
// coordinates, then composite nodes.
int rank(const Expr& e) {
  return std::visit(
      [](const auto& n) -> int {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Constant>) return 0;
        if constexpr (std::is_same_v<T, Symbol>) return n.is_jet() ? 3 : 1;
        if constexpr (std::is_same_v<T, FuncApp>) return 2;
        if constexpr (std::is_same_v<T, Power>) return 4;
        if constexpr (std::is_same_v<T, Product>) return 5;
        if constexpr (std::is_same_v<T, Sum>) return 6;
        if constexpr (std::is_same_v<T, Neg>) return 7;
      },
      e.node().value);
}

int compare_lists(const std::vector<Expr>& a, const std::vector<Expr>& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (int c = compare(a[i], b[i]); c != 0) return c;
  }
  if (a.size() == b.size()) return 0;
  return a.size() < b.size() ? -1 : 1;
}

template <class T>
int sign_of(const T& a, const T& b) {
  if (a < b) return -1;
  if (b < a) return 1;
  return 0;
}

}  // namespace

int compare(const Expr& a, const Expr& b) {
  if (&a.node() == &b.node()) return 0;
  const int ra = rank(a);
  const int rb = rank(b);
  if (ra != rb) return ra < rb ? -1 : 1;
  const auto& va = a.node().value;
  const auto& vb = b.node().value;
  if (va.index() != vb.index()) return va.index() < vb.index() ? -1 : 1;
  return std::visit(
      [&](const auto& na) -> int {
        using T = std::decay_t<decltype(na)>;
        const auto& nb = std::get<T>(vb);
        if constexpr (std::is_same_v<T, Constant>) {
          return sign_of(na.value, nb.value);
        } else if constexpr (std::is_same_v<T, Symbol>) {
          return sign_of(na, nb);
        } else if constexpr (std::is_same_v<T, FuncApp>) {
          if (int c = na.name.compare(nb.name); c != 0) return c < 0 ? -1 : 1;
          return compare_lists(na.args, nb.args);
        } else if constexpr (std::is_same_v<T, Sum>) {
          return compare_lists(na.terms, nb.terms);
        } else if constexpr (std::is_same_v<T, Product>) {
          return compare_lists(na.factors, nb.factors);
        } else if constexpr (std::is_same_v<T, Power>) {
          if (int c = compare(na.base, nb.base); c != 0) return c;
          return sign_of(na.exponent, nb.exponent);
        } else {
          return compare(na.operand, nb.operand);
        }
      },
      va);
}

// ---------------------------------------------------------------------------
// Printing

namespace {

// Binding strengths mirror the parser.
constexpr int kPrecSum = 1;
constexpr int kPrecProduct = 2;
constexpr int kPrecUnary = 3;
constexpr int kPrecPower = 4;
constexpr int kPrecAtom = 5;

int precedence(const Expr& e) {
  if (const auto* c = e.as<Constant>()) {
    if (c->value < 0) return kPrecUnary;
    return is_integer(c->value) ? kPrecAtom : kPrecProduct;
  }
  if (e.as<Sum>() != nullptr) return kPrecSum;
  if (e.as<Product>() != nullptr) return kPrecProduct;
  if (const auto* p = e.as<Power>()) {
    return p->exponent < 0 ? kPrecProduct : kPrecPower;
  }
  if (e.as<Neg>() != nullptr) return kPrecUnary;
  return kPrecAtom;
}

void print(std::ostream& os, const Expr& e, int context);

void print_wrapped(std::ostream& os, const Expr& e, int context) {
  if (precedence(e) < context) {
    os << '(';
    print(os, e, 0);
    os << ')';
  } else {
    print(os, e, context);
  }
}

void print_exponent(std::ostream& os, const Rational& q) {
  if (is_integer(q) && q >= 0) {
    os << to_string(q);
  } else {
    os << '(' << to_string(q) << ')';
  }
}

void print_factor_list(std::ostream& os, const std::vector<Expr>& factors) {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) os << '*';
    print_wrapped(os, factors[i], i == 0 ? kPrecUnary : kPrecPower);
  }
}

void print_product(std::ostream& os, const std::vector<Expr>& factors) {
  std::vector<Expr> numer;
  std::vector<Expr> denom;
  for (const auto& f : factors) {
    if (const auto* c = f.as<Constant>(); c != nullptr && !is_integer(c->value)) {
      if (numerator(c->value) != 1) numer.push_back(constant(Rational(numerator(c->value))));
      denom.push_back(constant(Rational(denominator(c->value))));
    } else if (const auto* p = f.as<Power>(); p != nullptr && p->exponent < 0) {
      const Rational flipped = -p->exponent;
      denom.push_back(flipped == 1 ? p->base : power_raw(p->base, flipped));
    } else {
      numer.push_back(f);
    }
  }
  if (numer.empty()) {
    os << '1';
  } else {
    print_factor_list(os, numer);
  }
  if (denom.empty()) return;
  os << '/';
  if (denom.size() == 1) {
    print_wrapped(os, denom.front(), kPrecPower);
  } else {
    os << '(';
    print_factor_list(os, denom);
    os << ')';
  }
}

void print(std::ostream& os, const Expr& e, int context) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Constant>) {
          os << to_string(n.value);
        } else if constexpr (std::is_same_v<T, Symbol>) {
          os << n.name();
        } else if constexpr (std::is_same_v<T, FuncApp>) {
          os << n.name << '(';
          for (std::size_t i = 0; i < n.args.size(); ++i) {
            if (i > 0) os << ", ";
            print(os, n.args[i], 0);
          }
          os << ')';
        } else if constexpr (std::is_same_v<T, Sum>) {
          for (std::size_t i = 0; i < n.terms.size(); ++i) {
            const Expr& term = n.terms[i];
            if (i == 0) {
              print_wrapped(os, term, kPrecSum);
              continue;
            }
            if (const auto* ng = term.as<Neg>()) {
              os << " - ";
              print_wrapped(os, ng->operand, kPrecProduct);
            } else if (const auto* c = term.as<Constant>(); c != nullptr && c->value < 0) {
              os << " - " << to_string(-c->value);
            } else {
              os << " + ";
              print_wrapped(os, term, kPrecProduct);
            }
          }
        } else if constexpr (std::is_same_v<T, Product>) {
          print_product(os, n.factors);
        } else if constexpr (std::is_same_v<T, Power>) {
          if (n.exponent < 0) {
            print_product(os, {e});
          } else {
            print_wrapped(os, n.base, kPrecAtom);
            os << '^';
            print_exponent(os, n.exponent);
          }
        } else {
          os << '-';
          print_wrapped(os, n.operand, kPrecProduct);
        }
      },
      e.node().value);
  (void)context;
}

void print_tree(std::ostream& os, const Expr& e) {
  auto list = [&](const char* tag, const std::vector<Expr>& ops) {
    os << tag << '(';
    for (std::size_t i = 0; i < ops.size(); ++i) {
      if (i > 0) os << ", ";
      print_tree(os, ops[i]);
    }
    os << ')';
  };
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Constant>) {
          os << to_string(n.value);
        } else if constexpr (std::is_same_v<T, Symbol>) {
          os << n.name();
        } else if constexpr (std::is_same_v<T, FuncApp>) {
          list(n.name.c_str(), n.args);
        } else if constexpr (std::is_same_v<T, Sum>) {
          list("Sum", n.terms);
        } else if constexpr (std::is_same_v<T, Product>) {
          list("Product", n.factors);
        } else if constexpr (std::is_same_v<T, Power>) {
          os << "Power(";
          print_tree(os, n.base);
          os << ", " << to_string(n.exponent) << ')';
        } else {
          os << "Neg(";
          print_tree(os, n.operand);
          os << ')';
        }
      },
      e.node().value);
}

}  // namespace

std::string to_string(const Expr& e) {
  std::ostringstream os;
  print(os, e, 0);
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Expr& e) { return os << to_string(e); }

std::string tree_string(const Expr& e) {
  std::ostringstream os;
  print_tree(os, e);
  return os.str();
}

}  // namespace lieconserve
