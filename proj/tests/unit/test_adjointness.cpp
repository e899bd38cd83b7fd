#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "lieconserve/adjointness.hpp"
#include "lieconserve/parser.hpp"

using namespace lieconserve;
using lieconserve::testing::random_polynomial;

namespace {

const FunctionTable& table() { return FunctionTable::standard(); }

EvolutionSpec pair(const char* alpha, const char* beta) {
  return EvolutionSpec::alpha_beta(parse(alpha), parse(beta));
}

const std::vector<const char*> kProbes = {"u", "u^2", "u^3 + u", "2 + u + u^2"};

}  // namespace

TEST_SUITE("classify") {
  TEST_CASE("inviscid Burgers is self-adjoint") {
    const auto v = classify(pair("a(u)", "0"), table());
    CHECK(v.kind == AdjointKind::self_adjoint);
    REQUIRE(v.phi);
    CHECK(*v.phi == parse("u"));
    CHECK(v.phi_arbitrary);
    CHECK(*v.factor == constant(-1));
  }

  TEST_CASE("alpha = 2x, beta = u is self-adjoint with lambda = 0") {
    const auto v = classify(pair("2*x", "u"), table());
    CHECK(v.kind == AdjointKind::self_adjoint);
    CHECK(*v.phi == parse("u"));
    REQUIRE(v.lambda);
    CHECK(v.lambda->is_zero_literal());
    CHECK(*v.r == parse("1/u"));
  }

  TEST_CASE("transport with speed q(x) is rejected") {
    const auto v = classify(pair("q(x)", "0"), table());
    CHECK(v.kind == AdjointKind::not_quasi_self_adjoint);
    CHECK_FALSE(v.phi);
    CHECK(v.diagnostics.size() == 2);
  }

  TEST_CASE("alpha = u, beta = u^2 has the power multiplier u^-2") {
    // r = (alpha_x - beta_u)/beta = -2/u depends on u alone.
    const auto v = classify(pair("u", "u^2"), table());
    CHECK(v.kind == AdjointKind::quasi_self_adjoint);
    REQUIRE(v.phi);
    CHECK(*v.phi == parse("u^-2"));
    CHECK(*v.factor == parse("2/u^3"));
    CHECK(verify_substitution(pair("u", "u^2"), *v.phi, table()).pass());
  }

  TEST_CASE("opaque multiplier when r*u is not constant") {
    const auto spec = pair("u", "u^2 + 1");
    const auto v = classify(spec, table());
    CHECK(v.kind == AdjointKind::quasi_self_adjoint);
    REQUIRE(v.phi);
    CHECK(to_string(*v.phi) == "phi(u)");
    CHECK(v.table.contains("phi"));
    CHECK(verify_substitution(spec, *v.phi, v.table).pass());
    CHECK_FALSE(verify_substitution(spec, parse("u"), v.table).pass());
  }

  TEST_CASE("pole in r") {
    const auto spec = pair("x*u", "u");
    const auto v = classify(spec, table());
    CHECK(v.kind == AdjointKind::quasi_self_adjoint);
    CHECK(verify_substitution(spec, *v.phi, v.table).pass());
  }

  TEST_CASE("negative outcomes") {
    CHECK(classify(pair("t*x", "u"), table()).kind == AdjointKind::not_quasi_self_adjoint);
    CHECK(classify(pair("x*u", "x*u"), table()).kind == AdjointKind::not_quasi_self_adjoint);
    // r = 0: alpha_x = beta_u forces a constant phi.
    CHECK(classify(pair("x*u", "u^2/2"), table()).kind == AdjointKind::not_quasi_self_adjoint);
    CHECK(classify(EvolutionSpec::generic(parse("u_x^2")), table()).kind ==
          AdjointKind::not_quasi_self_adjoint);
  }

  TEST_CASE("non-polynomial integrand is inconclusive") {
    const auto v = classify(pair("x*a(u)", "1"), table());
    CHECK(v.kind == AdjointKind::inconclusive);
    REQUIRE(v.unintegrated);
    CHECK(*v.unintegrated == parse("u*a(u)"));
  }

  TEST_CASE("generic linear flux is split first") {
    const auto v = classify(EvolutionSpec::generic(parse("2*x*u_x + u")), table());
    CHECK(v.kind == AdjointKind::self_adjoint);
  }
}

TEST_SUITE("verify_substitution") {
  TEST_CASE("examples") {
    CHECK(verify_substitution(pair("a(u)", "0"), parse("u"), table()).pass());
    CHECK(verify_substitution(pair("2*x", "u"), parse("u"), table()).pass());
    const auto bad = verify_substitution(pair("u", "u^2"), parse("u"), table());
    CHECK_FALSE(bad.pass());
    REQUIRE(bad.verdict.witness);
    CHECK(bad.residual == parse("3*u^2"));
  }

  TEST_CASE("phi must be a function of u") {
    CHECK_THROWS_AS(verify_substitution(pair("u", "0"), parse("x*u"), table()),
                    std::invalid_argument);
  }

  TEST_CASE("beta = 0: every probe with nonzero derivative works") {
    for (const char* alpha : {"a(u)", "(1 + t^2)*a(u)", "t*u + u^3"}) {
      const auto spec = pair(alpha, "0");
      for (const char* probe : kProbes) {
        CHECK_MESSAGE(verify_substitution(spec, parse(probe), table()).pass(), alpha, " ", probe);
      }
      CHECK(verify_substitution(spec, parse("tau(u)"), table()).pass());
    }
  }

  TEST_CASE("rejected specs fail every probe") {
    for (const auto& spec : {pair("q(x)", "0"), pair("t*x", "u"), pair("x*u", "x*u")}) {
      REQUIRE(classify(spec, table()).kind == AdjointKind::not_quasi_self_adjoint);
      for (const char* probe : kProbes) {
        CHECK_FALSE(verify_substitution(spec, parse(probe), table()).pass());
      }
    }
  }
}

TEST_SUITE("self-adjoint corpus") {
  TEST_CASE("beta built from alpha and lambda is self-adjoint; adding u^2 breaks it") {
    std::mt19937_64 rng(37);
    const std::vector<Symbol> txu = {Symbol::t(), Symbol::x(), Symbol::u()};
    const std::vector<Symbol> tx = {Symbol::t(), Symbol::x()};
    int built = 0;
    while (built < 25) {
      const Expr alpha = random_polynomial(rng, txu, 3);
      if (alpha.is_zero_literal()) continue;
      const Expr lambda = random_polynomial(rng, tx, 2);
      const Expr u = symbol(Symbol::u());
      const Expr beta =
          (*integrate_in_u(u * diff(alpha, Symbol::x(), table())) + lambda) / u;
      const auto spec = EvolutionSpec::alpha_beta(alpha, beta);
      const auto v = classify(spec, table());
      CHECK_MESSAGE(v.kind == AdjointKind::self_adjoint, spec.to_string());
      CHECK(verify_substitution(spec, u, table()).pass());

      const auto perturbed = EvolutionSpec::alpha_beta(alpha, beta + u * u);
      const auto w = classify(perturbed, table());
      CHECK_MESSAGE(w.kind != AdjointKind::self_adjoint, perturbed.to_string());
      CHECK_FALSE(verify_substitution(perturbed, u, table()).pass());
      if (w.phi) CHECK(verify_substitution(perturbed, *w.phi, w.table).pass());
      ++built;
    }
  }
}
