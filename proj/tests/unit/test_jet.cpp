#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "lieconserve/errors.hpp"
#include "lieconserve/jet.hpp"
#include "lieconserve/parser.hpp"
#include "lieconserve/zero_test.hpp"

using namespace lieconserve;
using lieconserve::testing::random_polynomial;

namespace {

const FunctionTable& table() { return FunctionTable::standard(); }

const std::vector<Symbol> kTxu = {Symbol::t(), Symbol::x(), Symbol::u()};

Expr nonzero_polynomial(std::mt19937_64& rng, int degree) {
  for (;;) {
    Expr p = random_polynomial(rng, kTxu, degree);
    if (!p.is_zero_literal()) return p;
  }
}

}  // namespace

TEST_SUITE("evolution spec") {
  TEST_CASE("alpha-beta converts exactly to the generic flux") {
    const auto spec = EvolutionSpec::alpha_beta(parse("2*x"), parse("u"));
    CHECK(spec.f() == parse("2*x*u_x + u"));
    const auto back = EvolutionSpec::generic(spec.f()).as_alpha_beta(table());
    REQUIRE(back);
    CHECK(back->alpha() == parse("2*x"));
    CHECK(back->beta() == parse("u"));
  }

  TEST_CASE("validation") {
    CHECK_THROWS_AS(EvolutionSpec::generic(parse("u_xx")), std::invalid_argument);
    CHECK_THROWS_AS(EvolutionSpec::generic(parse("u_t")), std::invalid_argument);
    CHECK_THROWS_AS(EvolutionSpec::alpha_beta(parse("u_x"), parse("0")), std::invalid_argument);
    CHECK_THROWS_AS(EvolutionSpec::alpha_beta(parse("u - u"), parse("1")), std::invalid_argument);
    CHECK_THROWS_AS(static_cast<void>(EvolutionSpec::generic(parse("u")).alpha()), std::logic_error);
    CHECK_FALSE(EvolutionSpec::generic(parse("u_x^2")).as_alpha_beta(table()));
    CHECK_FALSE(EvolutionSpec::generic(parse("f(t, x, u, u_x)")).as_alpha_beta(table()));
  }
}

TEST_SUITE("total derivative") {
  TEST_CASE("examples") {
    CHECK(total_derivative(parse("u^2/2"), Direction::t, table()) == parse("u*u_t"));
    CHECK(total_derivative(parse("A(u)"), Direction::x, table()) == parse("u*a(u)*u_x"));
    CHECK(total_derivative(parse("x*u"), Direction::x, table()) == parse("u + x*u_x"));
    CHECK(total_derivative(parse("v*u_x"), Direction::t, table()) == parse("v_t*u_x + v*u_xt"));
    CHECK(total_derivative(parse("lam(t, x)"), Direction::t, table()) == parse("lam_d1(t, x)"));
  }

  TEST_CASE("depth limit") {
    CHECK_NOTHROW(total_derivative(parse("u_xt"), Direction::x, table()));
    CHECK_THROWS_AS(total_derivative(parse("u_xxt"), Direction::x, table()), UnsupportedDepthError);
  }

  TEST_CASE("D_t and D_x commute on random first-order polynomials") {
    std::mt19937_64 rng(23);
    const std::vector<Symbol> vars = {Symbol::t(), Symbol::x(), Symbol::u(), Symbol::u(1),
                                      Symbol::u(0, 1), Symbol::v()};
    for (int i = 0; i < 40; ++i) {
      Expr e = random_polynomial(rng, vars, 3);
      if (i % 3 == 0) e = e * parse("a(u)");
      const Expr tx = total_derivative(total_derivative(e, Direction::t, table()), Direction::x, table());
      const Expr xt = total_derivative(total_derivative(e, Direction::x, table()), Direction::t, table());
      CHECK(is_zero(tx - xt, table()).zero);
    }
  }
}

TEST_SUITE("on-solution reduction") {
  TEST_CASE("examples") {
    const auto burgers = EvolutionSpec::alpha_beta(parse("a(u)"), parse("0"));
    CHECK(on_solution_reduce(parse("u_t + a(u)*u_x"), burgers, table()).is_zero_literal());
    const auto classical = EvolutionSpec::alpha_beta(parse("u"), parse("0"));
    CHECK(on_solution_reduce(parse("u_xt"), classical, table()) == parse("-u_x^2 - u*u_xx"));
    const auto generic = EvolutionSpec::generic(parse("f(t, x, u, u_x)"));
    CHECK(on_solution_reduce(parse("u_t"), generic, table()) == parse("-f(t, x, u, u_x)"));
  }

  TEST_CASE("second time derivative") {
    const auto classical = EvolutionSpec::alpha_beta(parse("u"), parse("0"));
    // u_tt = D_t(-u*u_x) = -u_t*u_x - u*u_xt with u_t = -u*u_x and u_xt = -u_x^2 - u*u_xx.
    CHECK(on_solution_reduce(parse("u_tt"), classical, table()) ==
          parse("2*u*u_x^2 + u^2*u_xx"));
  }

  TEST_CASE("idempotent and free of t-derivatives") {
    std::mt19937_64 rng(29);
    const std::vector<Symbol> vars = {Symbol::x(), Symbol::u(), Symbol::u(1), Symbol::u(0, 1),
                                      Symbol::u(1, 1), Symbol::u(0, 2)};
    for (int i = 0; i < 30; ++i) {
      const auto spec = EvolutionSpec::alpha_beta(nonzero_polynomial(rng, 2),
                                                  random_polynomial(rng, kTxu, 2));
      const Expr e = random_polynomial(rng, vars, 2);
      const Expr once = on_solution_reduce(e, spec, table());
      CHECK_FALSE(has_time_derivative(once));
      CHECK(on_solution_reduce(once, spec, table()) == once);
    }
  }

  TEST_CASE("system reduction also removes v_t") {
    const auto burgers = EvolutionSpec::alpha_beta(parse("a(u)"), parse("0"));
    const Expr r = on_system_reduce(parse("v_t*u + v*u_t"), burgers, table());
    CHECK_FALSE(has_time_derivative(r, Field::u));
    CHECK_FALSE(has_time_derivative(r, Field::v));
    CHECK(r == parse("-a(u)*v_x*u - v*a(u)*u_x"));
  }
}

TEST_SUITE("adjoint") {
  TEST_CASE("examples") {
    CHECK(adjoint_of(EvolutionSpec::generic(parse("a(u)*u_x")), table()) == parse("-v_t - a(u)*v_x"));
    CHECK(adjoint_of(EvolutionSpec::generic(parse("u*u_x")), table()) == parse("-v_t - u*v_x"));
    CHECK(adjoint_of(EvolutionSpec::generic(parse("u_x")), table()) == parse("-v_t - v_x"));
  }

  TEST_CASE("opaque flux") {
    const auto spec = EvolutionSpec::generic(parse("f(t, x, u, u_x)"));
    CHECK(adjoint_of(spec, table()) == adjoint_transcribed(spec, table()));
  }

  TEST_CASE("nonlinear flux keeps the second-order term") {
    const auto spec = EvolutionSpec::generic(parse("u_x^2/2"));
    CHECK(adjoint_of(spec, table()) == parse("-v_t - u_x*v_x - v*u_xx"));
  }

  TEST_CASE("variational and transcribed forms agree on random linear specs") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 20; ++i) {
      Expr alpha = nonzero_polynomial(rng, 3);
      if (i % 4 == 0) alpha = alpha * parse("a(u)");
      const auto spec = EvolutionSpec::alpha_beta(alpha, random_polynomial(rng, kTxu, 3));
      const Expr diff_form = euler_lagrange(formal_lagrangian(spec), table()) -
                             adjoint_transcribed(spec, table());
      CHECK(is_zero(diff_form, table()).zero);
    }
  }
}
