#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lieconserve {

/// Malformed expression text. `offset` is the 0-based character position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : std::runtime_error(message + " at offset " + std::to_string(offset)),
        offset_(offset) {}
  [[nodiscard]] std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Identifier that is neither a jet symbol nor a registered function.
class UnknownSymbolError : public std::runtime_error {
 public:
  explicit UnknownSymbolError(const std::string& name)
      : std::runtime_error("unknown symbol '" + name + "'"), name_(name) {}
  [[nodiscard]] const std::string& name() const { return name_; }

 private:
  std::string name_;
};

/// Numeric evaluation failed (pole, domain error, missing binding).
/// `subexpression` is the printed form of the offending node.
class EvalError : public std::runtime_error {
 public:
  EvalError(const std::string& message, std::string subexpression)
      : std::runtime_error(message + ": " + subexpression),
        subexpression_(std::move(subexpression)) {}
  [[nodiscard]] const std::string& subexpression() const {
    return subexpression_;
  }

 private:
  std::string subexpression_;
};

/// Division by an exactly-zero constant during normalization.
class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Zero test could not evaluate the expression at any sample point.
class InconclusiveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A total derivative would exceed the supported jet order.
class UnsupportedDepthError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A conserved-vector construction was requested for an equation that does
/// not satisfy the formula's hypothesis.
class RefusalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lieconserve
