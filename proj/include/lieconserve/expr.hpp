#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lieconserve {

using Rational = boost::multiprecision::cpp_rational;

/// Integer power of a rational; throws DivisionByZero for 0^(negative).
Rational rational_pow(const Rational& base, long exponent);
[[nodiscard]] bool is_integer(const Rational& q);
std::string to_string(const Rational& q);

/// Dependent fields on the jet space. `v` is the adjoint (nonlocal) variable.
enum class Field : std::uint8_t { u, v };

/// A coordinate of the jet space: one of the independent variables t, x, or a
/// derivative u_{x..xt..t} / v_{x..xt..t}. Mixed derivatives are stored as
/// counts, so u_xt and u_tx are the same symbol.
class Symbol {
 public:
  enum class Kind : std::uint8_t { time, space, jet };

  /// Deepest jet order accepted by the symbol alphabet.
  static constexpr int kMaxOrder = 3;

  static Symbol t() { return Symbol(Kind::time, Field::u, 0, 0); }
  static Symbol x() { return Symbol(Kind::space, Field::u, 0, 0); }
  static Symbol jet(Field field, int nx = 0, int nt = 0);
  static Symbol u(int nx = 0, int nt = 0) { return jet(Field::u, nx, nt); }
  static Symbol v(int nx = 0, int nt = 0) { return jet(Field::v, nx, nt); }

  /// Parses "t", "x", "u", "u_x", "u_tx", "v_t", ... (up to kMaxOrder).
  static std::optional<Symbol> from_name(std::string_view name);

  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] bool is_jet() const { return kind_ == Kind::jet; }
  [[nodiscard]] bool is_independent() const { return kind_ != Kind::jet; }
  [[nodiscard]] Field field() const { return field_; }
  [[nodiscard]] int nx() const { return nx_; }
  [[nodiscard]] int nt() const { return nt_; }
  [[nodiscard]] int order() const { return nx_ + nt_; }

  /// The jet symbol one derivative higher in `direction` (t or x). No depth
  /// check; callers enforce their own limits.
  [[nodiscard]] Symbol shifted(const Symbol& direction) const;

  /// Canonical spelling, x subscripts before t subscripts.
  [[nodiscard]] std::string name() const;

  friend bool operator==(const Symbol&, const Symbol&) = default;
  friend std::strong_ordering operator<=>(const Symbol& a, const Symbol& b);

 private:
  Symbol(Kind kind, Field field, int nx, int nt)
      : kind_(kind), field_(field), nx_(nx), nt_(nt) {}

  Kind kind_;
  Field field_;
  int nx_;
  int nt_;
};

struct Node;

/// Immutable expression handle. Copies share the underlying tree.
class Expr {
 public:
  /// The constant 0.
  Expr();
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  [[nodiscard]] const Node& node() const { return *node_; }

  template <class T>
  [[nodiscard]] const T* as() const;

  [[nodiscard]] std::optional<Rational> constant_value() const;
  [[nodiscard]] bool is_constant() const { return constant_value().has_value(); }
  [[nodiscard]] bool is_zero_literal() const;
  [[nodiscard]] bool is_one_literal() const;

 private:
  std::shared_ptr<const Node> node_;
};

struct Constant {
  Rational value;
};
struct FuncApp {
  std::string name;
  std::vector<Expr> args;
};
struct Sum {
  std::vector<Expr> terms;
};
struct Product {
  std::vector<Expr> factors;
};
struct Power {
  Expr base;
  Rational exponent;
};
struct Neg {
  Expr operand;
};

struct Node {
  std::variant<Constant, Symbol, FuncApp, Sum, Product, Power, Neg> value;
};

template <class T>
const T* Expr::as() const {
  return std::get_if<T>(&node_->value);
}

// Raw constructors build exactly the requested node without normalizing.
Expr constant(Rational value);
Expr constant(long value);
Expr symbol(const Symbol& s);
Expr func_raw(std::string name, std::vector<Expr> args);
Expr sum_raw(std::vector<Expr> terms);
Expr product_raw(std::vector<Expr> factors);
Expr power_raw(Expr base, Rational exponent);
Expr neg_raw(Expr operand);

/// Canonical form: Sums and Products flattened, like terms and powers
/// collected, products of sums expanded, operands in a fixed total order,
/// constants folded. Idempotent.
Expr normalize(const Expr& e);

// Normalizing arithmetic.
Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);
Expr pow(const Expr& base, const Rational& exponent);
Expr func(std::string name, std::vector<Expr> args);
Expr add_all(const std::vector<Expr>& terms);
Expr multiply_all(const std::vector<Expr>& factors);

/// Total structural order used for canonical operand ordering.
int compare(const Expr& a, const Expr& b);
inline bool operator==(const Expr& a, const Expr& b) { return compare(a, b) == 0; }
struct ExprLess {
  bool operator()(const Expr& a, const Expr& b) const { return compare(a, b) < 0; }
};

/// Prints in the parser's grammar; parse(to_string(e)) == e for normalized e.
std::string to_string(const Expr& e);
std::ostream& operator<<(std::ostream& os, const Expr& e);

/// Debug rendering of the raw tree, e.g. "Sum(u_t, Product(a(u), u_x))".
std::string tree_string(const Expr& e);

}  // namespace lieconserve
