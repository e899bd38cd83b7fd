#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lieconserve/evaluate.hpp"

namespace lieconserve {

/// Randomized identity testing of expressions over opaque functions.
struct ZeroTestConfig {
  static constexpr std::uint64_t kDefaultSeed = 0x5eed1e5c0ffeeULL;

  /// Sample points per instantiation set.
  int samples = 200;
  /// Each coordinate is drawn from [-box_hi, -box_lo] U [box_lo, box_hi].
  double box_lo = 0.1;
  double box_hi = 2.0;
  /// Instantiation sets; functions missing from a set get a seeded random
  /// polynomial.
  std::vector<Instantiation> instantiations;
  /// Relative tolerance: |value| <= tolerance * (1 + largest subterm).
  double tolerance = 1e-9;
  std::uint64_t seed = kDefaultSeed;

  /// 200 samples, three instantiations of a: u, 2 + u^2, u + u^3/3.
  static ZeroTestConfig defaults();
};

struct Witness {
  JetPoint point;
  Instantiation functions;
  std::size_t instantiation_index = 0;
  double value = 0.0;
  double scale = 0.0;
};

struct ZeroVerdict {
  bool zero = false;
  /// Decided by normalization alone, without sampling.
  bool structural = false;
  std::size_t evaluations = 0;
  std::size_t skipped = 0;
  std::optional<Witness> witness;

  explicit operator bool() const { return zero; }
};

/// Throws InconclusiveError if every sample point hits a pole or domain error.
ZeroVerdict is_zero(const Expr& e, const FunctionTable& table,
                    const ZeroTestConfig& config = ZeroTestConfig::defaults());

/// Convenience: is_zero(...).zero
bool vanishes(const Expr& e, const FunctionTable& table,
              const ZeroTestConfig& config = ZeroTestConfig::defaults());

}  // namespace lieconserve
