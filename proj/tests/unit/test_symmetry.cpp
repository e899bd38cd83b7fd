#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "lieconserve/parser.hpp"
#include "lieconserve/symmetry.hpp"

using namespace lieconserve;
using lieconserve::testing::random_polynomial;

namespace {

const FunctionTable& table() { return FunctionTable::standard(); }

EvolutionSpec burgers() { return EvolutionSpec::alpha_beta(parse("a(u)"), parse("0")); }

Generator gen(const char* tau, const char* xi, const char* eta) {
  return Generator::make(parse(tau), parse(xi), parse(eta));
}

bool is_symmetry(const EvolutionSpec& spec, const Generator& g) {
  return check_symmetry(spec, g, table()).pass();
}

const std::vector<Symbol> kTxu = {Symbol::t(), Symbol::x(), Symbol::u()};

}  // namespace

TEST_SUITE("determining equation") {
  TEST_CASE("generic residual examples") {
    const auto spec = EvolutionSpec::generic(parse("a(u)*u_x"));
    CHECK(determining_residual_generic(spec, gen("1", "0", "0"), table()).is_zero_literal());
    CHECK(determining_residual_generic(spec, gen("0", "0", "1"), table()) == parse("a'(u)*u_x"));
    const auto x7 = burgers_generator("X7", table());
    CHECK(is_zero(determining_residual_generic(spec, x7, table()), table()).zero);
  }

  TEST_CASE("pair residual examples") {
    const auto x4 = determining_residual_pair(burgers(), burgers_generator("X4", table()), table());
    CHECK(is_zero(x4.r1, table()).zero);
    CHECK(is_zero(x4.r2, table()).zero);
    const auto family = check_symmetry(burgers(), burgers_generator("Xtx", table()), table());
    CHECK(family.pass());
    const auto dilation = determining_residual_pair(burgers(), gen("0", "x", "0"), table());
    CHECK(dilation.r1.is_zero_literal());
    CHECK(dilation.r2 == parse("-a(u)"));
  }

  TEST_CASE("generators validate their coefficients") {
    CHECK_THROWS_AS(gen("u_x", "0", "0"), std::invalid_argument);
    CHECK_THROWS_AS(gen("0", "v", "0"), std::invalid_argument);
    CHECK_THROWS_AS(scale_generator(parse("x"), gen("1", "0", "0")), std::invalid_argument);
  }

  TEST_CASE("pair needs a linear flux") {
    CHECK_THROWS_AS(determining_residual_pair(EvolutionSpec::generic(parse("u_x^2")),
                                              gen("1", "0", "0"), table()),
                    std::invalid_argument);
  }

  TEST_CASE("generic residual splits into R1 + u_x*R2") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 30; ++i) {
      Expr alpha = random_polynomial(rng, kTxu, 3);
      if (alpha.is_zero_literal()) alpha = constant(1);
      const auto spec = EvolutionSpec::alpha_beta(alpha, random_polynomial(rng, kTxu, 3));
      const auto g = Generator::make(random_polynomial(rng, kTxu, 3), random_polynomial(rng, kTxu, 3),
                                     random_polynomial(rng, kTxu, 3));
      const auto pair = determining_residual_pair(spec, g, table());
      const Expr gap = determining_residual_generic(spec, g, table()) -
                       (pair.r1 + symbol(Symbol::u(1)) * pair.r2);
      CHECK_MESSAGE(gap.is_zero_literal(), to_string(gap));
    }
  }
}

TEST_SUITE("catalog") {
  TEST_CASE("printed entries") {
    const auto x5 = burgers_generator("X5", table());
    CHECK(x5.tau.is_zero_literal());
    CHECK(x5.xi == parse("t"));
    CHECK(x5.eta == parse("1/a'(u)"));
    const auto x8 = burgers_generator("X8", table());
    CHECK(x8.tau == parse("t*x"));
    CHECK(x8.xi == parse("x^2"));
    CHECK(x8.eta == parse("a(u)*(x - t*a(u))/a'(u)"));
    CHECK(burgers_catalog(table()).size() == 9);
    CHECK_THROWS_AS(burgers_generator("X9", table()), std::out_of_range);
    CHECK_THROWS_AS(burgers_catalog(table(), "A"), std::invalid_argument);
    CHECK(x5.to_string() == "X5 = (t)*d/dx + (1/a'(u))*d/du");
  }

  TEST_CASE("every entry is a symmetry") {
    for (const auto& g : burgers_catalog(table())) {
      CHECK_MESSAGE(is_symmetry(burgers(), g), g.to_string());
    }
  }

  TEST_CASE("u-dependent scalings remain symmetries") {
    for (const char* lambda : {"1", "u", "u^2", "1 + u^3"}) {
      for (const auto& g : burgers_catalog(table())) {
        const auto scaled = scale_generator(parse(lambda), g);
        CHECK_MESSAGE(is_symmetry(burgers(), scaled), scaled.to_string());
      }
    }
    const auto g = gen("1", "0", "0");
    const auto same = scale_generator(parse("1"), g);
    CHECK(same.tau == g.tau);
    CHECK(same.eta == g.eta);
    CHECK(scale_generator(parse("u^2"), g).tau == parse("u^2"));
  }

  TEST_CASE("negative controls report witnesses") {
    const auto du = check_symmetry(burgers(), gen("0", "0", "1"), table());
    CHECK_FALSE(du.pass());
    REQUIRE(du.second.witness);
    const auto dilation = check_symmetry(burgers(), gen("0", "x", "0"), table());
    CHECK_FALSE(dilation.pass());
  }

  TEST_CASE("scaling can break symmetry when beta is nonzero") {
    const auto spec = EvolutionSpec::alpha_beta(parse("1"), parse("u"));
    const auto g = gen("1", "0", "0");
    CHECK(is_symmetry(spec, g));
    CHECK_FALSE(is_symmetry(spec, scale_generator(parse("u"), g)));
  }
}

TEST_SUITE("prolongation") {
  TEST_CASE("examples") {
    const auto spec = EvolutionSpec::generic(parse("a(u)*u_x"));
    CHECK(prolongation_residual(spec, gen("1", "0", "0"), table()).is_zero_literal());
    CHECK(prolongation_residual(spec, gen("0", "0", "1"), table()) == parse("a'(u)*u_x"));
  }

  TEST_CASE("agrees with the determining equation on random specs") {
    std::mt19937_64 rng(43);
    const std::vector<Symbol> jet = {Symbol::t(), Symbol::x(), Symbol::u(), Symbol::u(1)};
    for (int i = 0; i < 20; ++i) {
      const auto spec = EvolutionSpec::generic(random_polynomial(rng, jet, 3));
      const auto g = Generator::make(random_polynomial(rng, kTxu, 2), random_polynomial(rng, kTxu, 2),
                                     random_polynomial(rng, kTxu, 2));
      const Expr gap = prolongation_residual(spec, g, table()) -
                       determining_residual_generic(spec, g, table());
      CHECK_MESSAGE(is_zero(gap, table()).zero, spec.to_string(), " ", g.to_string());
    }
  }

  TEST_CASE("opaque flux") {
    const auto spec = EvolutionSpec::generic(parse("f(t, x, u, u_x)"));
    const auto g = gen("tau(u)", "x*t", "u^2");
    CHECK(is_zero(prolongation_residual(spec, g, table()) -
                      determining_residual_generic(spec, g, table()),
                  table())
              .zero);
  }
}
