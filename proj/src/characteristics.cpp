#include "lieconserve/characteristics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>

#include "lieconserve/evaluate.hpp"

namespace lieconserve {
namespace {

constexpr double kFluxStep = 1e-4;
constexpr int kMonotoneSamples = 4096;

std::string describe(double value) {
  std::ostringstream os;
  os.precision(12);
  os << value;
  return os.str();
}

double cubic_bspline(double s) {
  s = std::abs(s);
  if (s >= 2.0) return 0.0;
  if (s >= 1.0) return (2.0 - s) * (2.0 - s) * (2.0 - s) / 6.0;
  return 2.0 / 3.0 - s * s + s * s * s / 2.0;
}

double cubic_bspline_derivative(double s) {
  const double sign = s < 0 ? -1.0 : 1.0;
  s = std::abs(s);
  if (s >= 2.0) return 0.0;
  if (s >= 1.0) return -sign * (2.0 - s) * (2.0 - s) / 2.0;
  return sign * (-2.0 * s + 1.5 * s * s);
}

Expr prepare(const Expr& e, const WaveSpeed& a, const FunctionTable& table) {
  const Expr av = a.to_expr();
  const Expr body = instantiate_function(e, "a", av, table);
  const auto spec = EvolutionSpec::generic(av * symbol(Symbol::u(1)));
  return on_solution_reduce(body, spec, table);
}

double evaluate_at(const Expr& e, double x, double t, const PointValue& p,
                   const FunctionTable& table) {
  const JetPoint point{{Symbol::t(), t}, {Symbol::x(), x}, {Symbol::u(), p.u},
                       {Symbol::u(1), p.u_x}};
  return eval(e, point, {}, table);
}

double simpson(const CharacteristicSolution& sol, const Expr& prepared, double t, int nodes,
               const FunctionTable& table) {
  if (nodes < 64 || nodes % 2 != 0) {
    throw std::invalid_argument("Simpson needs an even node count >= 64, got " +
                                std::to_string(nodes));
  }
  const Domain& d = sol.domain();
  const double h = (d.hi - d.lo) / nodes;
  double sum = 0.0;
  for (int i = 0; i <= nodes; ++i) {
    const double x = i == nodes ? d.hi : d.lo + i * h;
    const double w = (i == 0 || i == nodes) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    sum += w * evaluate_at(prepared, x, t, sol.solve_at(x, t), table);
  }
  return sum * h / 3.0;
}

}  // namespace

Profile Profile::sine() {
  return {"sin", [](double x) { return std::sin(x); }, [](double x) { return std::cos(x); }};
}

Profile Profile::gaussian(double center, double width, double amplitude) {
  if (!(width > 0)) throw std::invalid_argument("gaussian width must be positive");
  auto value = [=](double x) {
    const double s = (x - center) / width;
    return amplitude * std::exp(-s * s);
  };
  auto derivative = [=](double x) {
    const double s = (x - center) / width;
    return -2.0 * s / width * amplitude * std::exp(-s * s);
  };
  return {"gauss", value, derivative};
}

Profile Profile::bump(double center, double radius, double amplitude) {
  if (!(radius > 0)) throw std::invalid_argument("bump radius must be positive");
  const double scale = 1.5 * amplitude;
  auto value = [=](double x) { return scale * cubic_bspline(2.0 * (x - center) / radius); };
  auto derivative = [=](double x) {
    return scale * 2.0 / radius * cubic_bspline_derivative(2.0 * (x - center) / radius);
  };
  return {"bump", value, derivative};
}

Profile Profile::polynomial(const Polynomial& p, std::string name) {
  if (p.arity() != 1) throw std::invalid_argument("initial profile must be univariate");
  const Polynomial dp = p.derivative(std::size_t{0});
  return {std::move(name), [p](double x) { return p.evaluate(x); },
          [dp](double x) { return dp.evaluate(x); }};
}

Profile Profile::constant(double c) {
  return {"constant", [c](double) { return c; }, [](double) { return 0.0; }};
}

std::string_view to_string(Boundary b) {
  return b == Boundary::periodic ? "periodic" : "compact-support";
}

void Domain::validate() const {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw std::invalid_argument("domain needs finite bounds with lo < hi, got [" + describe(lo) +
                                ", " + describe(hi) + "]");
  }
}

double Domain::wrap(double x) const {
  if (boundary != Boundary::periodic) return x;
  const double period = hi - lo;
  double shifted = std::fmod(x - lo, period);
  if (shifted < 0) shifted += period;
  return lo + shifted;
}

WaveSpeed::WaveSpeed(Polynomial p) : a(std::move(p)), da(a.derivative(std::size_t{0})) {
  if (a.arity() != 1) throw std::invalid_argument("wave speed must be a polynomial in u");
}

WaveSpeed WaveSpeed::identity() { return WaveSpeed(Polynomial::univariate({0, 1})); }

double shock_time(const WaveSpeed& a, const Profile& u0, const Domain& domain, int grid) {
  domain.validate();
  grid = std::max(grid, 4096);
  auto slope = [&](double xi) {
    const double value = a.da.evaluate(u0.value(xi)) * u0.derivative(xi);
    if (!std::isfinite(value)) {
      throw std::domain_error("non-finite characteristic slope at xi = " + describe(xi));
    }
    return value;
  };
  const double h = (domain.hi - domain.lo) / grid;
  int best = 0;
  double m = slope(domain.lo);
  for (int i = 1; i <= grid; ++i) {
    const double value = slope(domain.lo + i * h);
    if (value < m) {
      m = value;
      best = i;
    }
  }
  const double left = std::max(domain.lo, domain.lo + (best - 1) * h);
  const double right = std::min(domain.hi, domain.lo + (best + 1) * h);
  const auto [where, refined] = boost::math::tools::brent_find_minima(
      slope, left, right, std::numeric_limits<double>::digits / 2);
  static_cast<void>(where);
  m = std::min(m, refined);
  return m < 0 ? -1.0 / m : kInfiniteTime;
}

CharacteristicSolution::CharacteristicSolution(WaveSpeed a, Profile u0, Domain domain,
                                               double tolerance)
    : a_(std::move(a)), u0_(std::move(u0)), domain_(domain), tolerance_(tolerance) {
  domain_.validate();
  if (!(tolerance_ > 0)) throw std::invalid_argument("inversion tolerance must be positive");
  if (domain_.boundary == Boundary::periodic) {
    const double left = u0_.value(domain_.lo);
    const double right = u0_.value(domain_.hi);
    if (std::abs(left - right) > 1e-8 * (1.0 + std::abs(left))) {
      throw std::invalid_argument("periodic domain needs u0(lo) = u0(hi), got " +
                                  describe(left) + " and " + describe(right));
    }
  }
  shock_time_ = lieconserve::shock_time(a_, u0_, domain_);
  if (std::isfinite(shock_time_)) {
    const double t = max_time();
    const double h = (domain_.hi - domain_.lo) / kMonotoneSamples;
    double previous = domain_.lo + t * a_(initial(domain_.lo));
    for (int i = 1; i <= kMonotoneSamples; ++i) {
      const double xi = domain_.lo + i * h;
      const double mapped = xi + t * a_(initial(xi));
      if (!(mapped > previous)) {
        throw std::logic_error("characteristic map not increasing at xi = " + describe(xi) +
                               ", t = " + describe(t));
      }
      previous = mapped;
    }
  }
}

double CharacteristicSolution::max_time() const { return 0.95 * shock_time_; }

double CharacteristicSolution::initial(double xi) const { return u0_.value(domain_.wrap(xi)); }

double CharacteristicSolution::initial_derivative(double xi) const {
  return u0_.derivative(domain_.wrap(xi));
}

PointValue CharacteristicSolution::solve_at(double x, double t) const {
  if (!(t >= 0) || t > max_time()) {
    throw std::domain_error("time " + describe(t) + " outside [0, " + describe(max_time()) +
                            "], the pre-shock window");
  }
  if (domain_.boundary == Boundary::periodic) {
    x = domain_.wrap(x);
  } else if (x < domain_.lo || x > domain_.hi) {
    throw std::domain_error("x = " + describe(x) + " outside the domain");
  }
  auto finish = [&](double xi) {
    const double u = initial(xi);
    const double du0 = initial_derivative(xi);
    return PointValue{u, du0 / (1.0 + t * a_.da.evaluate(u) * du0), xi};
  };
  if (t == 0) return finish(x);

  auto h = [&](double xi) { return xi + t * a_(initial(xi)) - x; };
  const double guess = x - t * a_(initial(x));
  double step = std::max(std::abs(guess - x), 1e-3 * (domain_.hi - domain_.lo));
  double lo = guess - step;
  double hi = guess + step;
  int expansions = 0;
  while ((h(lo) > 0 || h(hi) < 0) && expansions < 100) {
    step *= 2;
    if (h(lo) > 0) lo -= step;
    if (h(hi) < 0) hi += step;
    ++expansions;
  }
  if (h(lo) > 0 || h(hi) < 0) {
    throw std::runtime_error("no bracket for the characteristic through x = " + describe(x) +
                             ", t = " + describe(t) + ": h(" + describe(lo) + ") = " +
                             describe(h(lo)) + ", h(" + describe(hi) + ") = " + describe(h(hi)));
  }
  const auto [left, right] =
      boost::math::tools::bisect(h, lo, hi, boost::math::tools::eps_tolerance<double>(24));
  auto newton = [&](double xi) {
    const double u = initial(xi);
    return std::make_tuple(h(xi), 1.0 + t * a_.da.evaluate(u) * initial_derivative(xi));
  };
  std::uintmax_t iterations = 50;
  const double xi = left < right ? boost::math::tools::newton_raphson_iterate(
                                       newton, 0.5 * (left + right), left, right,
                                       std::numeric_limits<double>::digits - 4, iterations)
                                 : left;
  const double residual = std::abs(h(xi));
  if (residual > tolerance_ * std::max(1.0, std::abs(x))) {
    throw std::runtime_error("characteristic inversion residual " + describe(residual) +
                             " at x = " + describe(x) + ", t = " + describe(t));
  }
  return finish(xi);
}

double conserved_integral(const CharacteristicSolution& sol, const Expr& density, double t,
                          int nodes, const FunctionTable& table) {
  return simpson(sol, prepare(density, sol.speed(), table), t, nodes, table);
}

std::string_view to_string(ConservationReport::Mode mode) {
  return mode == ConservationReport::Mode::drift ? "drift" : "flux-balance";
}

ConservedVector numeric_form(const ConservedVector& cv, const WaveSpeed& a,
                             const FunctionTable& table) {
  if (cv.has_v()) {
    throw std::invalid_argument("conserved vector still contains the adjoint field v");
  }
  ConservedVector out = cv;
  out.c0 = prepare(cv.c0, a, table);
  out.c1 = prepare(cv.c1, a, table);
  if (cv.multiplier) out.multiplier = instantiate_function(*cv.multiplier, "a", a.to_expr(), table);
  return out;
}

ConservationReport verify_law(const CharacteristicSolution& sol, const ConservedVector& cv,
                              const std::vector<double>& times, int nodes, double tol,
                              const FunctionTable& table) {
  if (times.empty()) throw std::invalid_argument("no time samples");
  const ConservedVector law = numeric_form(cv, sol.speed(), table);
  ConservationReport report;
  report.density = law.c0;
  report.flux = law.c1;
  report.times = times;
  const bool autonomous = !depends_on(law.c0, Symbol::t()) && !depends_on(law.c0, Symbol::x()) &&
                          !depends_on(law.c1, Symbol::t()) && !depends_on(law.c1, Symbol::x());
  report.mode = sol.domain().boundary == Boundary::periodic && autonomous
                    ? ConservationReport::Mode::drift
                    : ConservationReport::Mode::flux_balance;
  const bool flux = report.mode == ConservationReport::Mode::flux_balance;
  for (double t : times) {
    const double earliest = flux ? kFluxStep : 0.0;
    const double latest = flux ? t + kFluxStep : t;
    if (!(t >= earliest) || !(latest < sol.max_time())) {
      throw std::domain_error("time " + describe(t) + " not strictly inside the pre-shock window (" +
                              describe(earliest) + ", " + describe(sol.max_time()) + ")");
    }
  }
  auto q = [&](double t) { return simpson(sol, law.c0, t, nodes, table); };
  report.q0 = q(0.0);
  const Domain& d = sol.domain();
  for (double t : times) {
    const double value = q(t);
    report.q.push_back(value);
    double residual = value - report.q0;
    if (flux) {
      const double rate = (q(t + kFluxStep) - q(t - kFluxStep)) / (2.0 * kFluxStep);
      const double right = evaluate_at(law.c1, d.hi, t, sol.solve_at(d.hi, t), table);
      const double left = evaluate_at(law.c1, d.lo, t, sol.solve_at(d.lo, t), table);
      residual = rate + right - left;
    }
    report.residuals.push_back(residual);
    report.drift = std::max(report.drift, std::abs(residual));
  }
  report.threshold = flux ? tol : tol * (1.0 + std::abs(report.q0));
  report.pass = report.drift <= report.threshold;
  return report;
}

}  // namespace lieconserve
