#include "lieconserve/parser.hpp"

#include <algorithm>
#include <cctype>

#include "lieconserve/errors.hpp"

namespace lieconserve {
namespace {

enum class TokenKind { number, identifier, op, lparen, rparen, comma, end };

struct Token {
  TokenKind kind;
  std::string_view text;
  std::size_t offset;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::size_t start = pos_;
    if (pos_ == text_.size()) return {TokenKind::end, {}, start};
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      bool seen_dot = false;
      while (pos_ < text_.size()) {
        const char d = text_[pos_];
        if (d == '.' && !seen_dot) {
          seen_dot = true;
        } else if (!std::isdigit(static_cast<unsigned char>(d))) {
          break;
        }
        ++pos_;
      }
      const auto lexeme = text_.substr(start, pos_ - start);
      if (lexeme == ".") throw ParseError("malformed number", start);
      return {TokenKind::number, lexeme, start};
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      while (pos_ < text_.size() && text_[pos_] == '\'') ++pos_;
      return {TokenKind::identifier, text_.substr(start, pos_ - start), start};
    }
    ++pos_;
    switch (c) {
      case '+':
      case '-':
      case '*':
      case '/':
      case '^':
        return {TokenKind::op, text_.substr(start, 1), start};
      case '(':
        return {TokenKind::lparen, text_.substr(start, 1), start};
      case ')':
        return {TokenKind::rparen, text_.substr(start, 1), start};
      case ',':
        return {TokenKind::comma, text_.substr(start, 1), start};
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// Pratt parser over the token stream.
class Parser {
 public:
  Parser(std::string_view text, const FunctionTable& table) : lexer_(text), table_(table) {
    advance();
  }

  Expr parse_all() {
    Expr e = parse_expression(0);
    if (current_.kind != TokenKind::end) {
      throw ParseError("unexpected '" + std::string(current_.text) + "'", current_.offset);
    }
    return e;
  }

 private:
  static constexpr int kUnaryPower = 25;

  static int left_power(const Token& t) {
    if (t.kind != TokenKind::op) return -1;
    switch (t.text[0]) {
      case '+':
      case '-':
        return 10;
      case '*':
      case '/':
        return 20;
      case '^':
        return 30;
      default:
        return -1;
    }
  }

  void advance() { current_ = lexer_.next(); }

  void expect(TokenKind kind, const char* what) {
    if (current_.kind != kind) {
      throw ParseError(std::string("expected ") + what, current_.offset);
    }
    advance();
  }

  Expr parse_expression(int min_power) {
    Expr lhs = parse_prefix();
    for (;;) {
      const int power = left_power(current_);
      if (power < 0 || power <= min_power) break;
      const Token op = current_;
      advance();
      switch (op.text[0]) {
        case '+':
          lhs = sum_raw({lhs, parse_expression(power)});
          break;
        case '-':
          lhs = sum_raw({lhs, neg_raw(parse_expression(power))});
          break;
        case '*':
          lhs = product_raw({lhs, parse_expression(power)});
          break;
        case '/':
          lhs = product_raw({lhs, power_raw(parse_expression(power), Rational(-1))});
          break;
        case '^': {
          const std::size_t at = current_.offset;
          const Expr exponent = normalize(parse_expression(power - 1));
          auto q = exponent.constant_value();
          if (!q) throw ParseError("exponent must be a rational constant", at);
          lhs = power_raw(lhs, *q);
          break;
        }
        default:
          break;
      }
    }
    return lhs;
  }

  Expr parse_prefix() {
    const Token t = current_;
    switch (t.kind) {
      case TokenKind::number:
        advance();
        return constant(parse_number(t));
      case TokenKind::identifier:
        advance();
        return parse_identifier(t);
      case TokenKind::lparen: {
        advance();
        Expr inner = parse_expression(0);
        expect(TokenKind::rparen, "')'");
        return inner;
      }
      case TokenKind::op:
        if (t.text[0] == '-') {
          advance();
          return neg_raw(parse_expression(kUnaryPower));
        }
        throw ParseError("unexpected '" + std::string(t.text) + "'", t.offset);
      case TokenKind::end:
        throw ParseError("unexpected end of input", t.offset);
      default:
        throw ParseError("unexpected '" + std::string(t.text) + "'", t.offset);
    }
  }

  static Rational parse_number(const Token& t) {
    const auto dot = t.text.find('.');
    using boost::multiprecision::cpp_int;
    if (dot == std::string_view::npos) {
      std::string digits(t.text);
      digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
      return Rational(cpp_int(digits));
    }
    std::string digits(t.text.substr(0, dot));
    const std::string fraction(t.text.substr(dot + 1));
    digits += fraction;
    if (digits.empty()) throw ParseError("malformed number", t.offset);
    digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
    cpp_int scale = boost::multiprecision::pow(cpp_int(10), static_cast<unsigned>(fraction.size()));
    return Rational(cpp_int(digits), scale);
  }

  Expr parse_identifier(const Token& t) {
    if (current_.kind == TokenKind::lparen) {
      const auto fn = table_.resolve(t.text);
      if (!fn) throw UnknownSymbolError(std::string(t.text));
      advance();
      std::vector<Expr> args;
      if (current_.kind != TokenKind::rparen) {
        args.push_back(parse_expression(0));
        while (current_.kind == TokenKind::comma) {
          advance();
          args.push_back(parse_expression(0));
        }
      }
      const std::size_t close = current_.offset;
      expect(TokenKind::rparen, "')'");
      if (args.size() != fn->decl->arity()) {
        throw ParseError("'" + std::string(t.text) + "' takes " +
                             std::to_string(fn->decl->arity()) + " argument(s)",
                         close);
      }
      return func_raw(std::string(t.text), std::move(args));
    }
    if (auto s = Symbol::from_name(t.text)) return symbol(*s);
    throw UnknownSymbolError(std::string(t.text));
  }

  Lexer lexer_;
  const FunctionTable& table_;
  Token current_{TokenKind::end, {}, 0};
};

}  // namespace

Expr parse(std::string_view text, const FunctionTable& table) {
  return normalize(Parser(text, table).parse_all());
}

}  // namespace lieconserve
