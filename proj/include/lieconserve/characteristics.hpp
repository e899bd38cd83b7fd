#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "lieconserve/conservation.hpp"
#include "lieconserve/polynomial.hpp"

namespace lieconserve {

/// Initial data u0 with its derivative.
struct Profile {
  std::string name;
  std::function<double(double)> value;
  std::function<double(double)> derivative;

  static Profile sine();
  /// amplitude * exp(-((x - center)/width)^2)
  static Profile gaussian(double center = 0.0, double width = 1.0, double amplitude = 1.0);
  /// Cubic B-spline scaled to peak `amplitude`, supported on [center - radius, center + radius].
  static Profile bump(double center = 0.0, double radius = 1.0, double amplitude = 1.0);
  static Profile polynomial(const Polynomial& p, std::string name = "polynomial");
  static Profile constant(double c);
};

enum class Boundary { periodic, compact_support };

std::string_view to_string(Boundary b);

struct Domain {
  double lo = 0.0;
  double hi = 1.0;
  Boundary boundary = Boundary::periodic;

  /// Throws std::invalid_argument unless lo < hi, both finite.
  void validate() const;
  /// x mapped into [lo, hi) when periodic; unchanged otherwise.
  [[nodiscard]] double wrap(double x) const;
};

/// The wave speed a(u) as a concrete polynomial in u.
struct WaveSpeed {
  Polynomial a;
  Polynomial da;

  explicit WaveSpeed(Polynomial p);
  /// a(u) = u
  static WaveSpeed identity();

  [[nodiscard]] double operator()(double u) const { return a.evaluate(u); }
  [[nodiscard]] Expr to_expr() const { return a.to_expr({"u"}); }
};

constexpr double kInfiniteTime = std::numeric_limits<double>::infinity();

/// First crossing time of the characteristics x = xi + a(u0(xi))*t: -1/m with
/// m the minimum of d/dxi a(u0(xi)) over the domain, or +inf when m >= 0.
/// Samples `grid` points (at least 4096) and polishes the smallest with
/// Brent's method. Throws std::domain_error on non-finite samples.
double shock_time(const WaveSpeed& a, const Profile& u0, const Domain& domain,
                  int grid = 4096);

struct PointValue {
  double u = 0.0;
  double u_x = 0.0;
  /// Foot of the characteristic through (x, t).
  double xi = 0.0;
};

/// Exact classical solution of u_t + a(u)*u_x = 0 up to 0.95 of the shock time.
class CharacteristicSolution {
 public:
  /// Computes the shock time and checks that the characteristic map is
  /// increasing on a dense sample at the latest admissible time.
  CharacteristicSolution(WaveSpeed a, Profile u0, Domain domain, double tolerance = 1e-12);

  [[nodiscard]] double shock_time() const { return shock_time_; }
  /// 0.95 * shock_time(), or +inf.
  [[nodiscard]] double max_time() const;
  [[nodiscard]] const WaveSpeed& speed() const { return a_; }
  [[nodiscard]] const Profile& profile() const { return u0_; }
  [[nodiscard]] const Domain& domain() const { return domain_; }
  [[nodiscard]] double tolerance() const { return tolerance_; }

  /// u0 at xi, wrapped into the period when periodic.
  [[nodiscard]] double initial(double xi) const;
  [[nodiscard]] double initial_derivative(double xi) const;

  /// Solves xi + a(u0(xi))*t = x by bisection and Newton. Throws
  /// std::domain_error for t outside [0, max_time()] or x outside a
  /// non-periodic domain, std::runtime_error if no bracket is found.
  [[nodiscard]] PointValue solve_at(double x, double t) const;

 private:
  WaveSpeed a_;
  Profile u0_;
  Domain domain_;
  double tolerance_;
  double shock_time_;
};

/// Composite Simpson integral over the domain of `density` (in t, x, u, u_x,
/// with a and A allowed) at time t. `nodes` is the number of subintervals,
/// even and at least 64.
double conserved_integral(const CharacteristicSolution& sol, const Expr& density, double t,
                          int nodes, const FunctionTable& table);

struct ConservationReport {
  enum class Mode { drift, flux_balance };

  Expr density;
  Expr flux;
  Mode mode = Mode::drift;
  std::vector<double> times;
  std::vector<double> q;
  double q0 = 0.0;
  /// Per time: Q(t) - Q(0) for drift, dQ/dt + C1(hi) - C1(lo) for flux balance.
  std::vector<double> residuals;
  /// max |Q(t) - Q(0)|, or max |dQ/dt + C1(hi) - C1(lo)|.
  double drift = 0.0;
  /// Threshold the drift was compared against.
  double threshold = 0.0;
  bool pass = false;
};

std::string_view to_string(ConservationReport::Mode mode);

/// Numeric check of a conservation law on the solution. u_t is eliminated
/// from the vector and `a` is replaced by the solution's wave speed first.
/// A periodic domain with density and flux free of t and x checks
/// max |Q(t) - Q(0)| <= tol*(1 + |Q(0)|); otherwise each time checks
/// |dQ/dt + C1(hi) - C1(lo)| <= tol with a centered difference of step 1e-4.
/// Throws std::domain_error for times that are negative or not strictly
/// below max_time().
ConservationReport verify_law(const CharacteristicSolution& sol, const ConservedVector& cv,
                              const std::vector<double>& times, int nodes, double tol,
                              const FunctionTable& table);

/// Density and flux as they are evaluated numerically: a instantiated,
/// u_t eliminated.
ConservedVector numeric_form(const ConservedVector& cv, const WaveSpeed& a,
                             const FunctionTable& table);

}  // namespace lieconserve
