#include <doctest.h>

#include "lieconserve/conservation.hpp"
#include "lieconserve/errors.hpp"
#include "lieconserve/parser.hpp"

using namespace lieconserve;

namespace {

const FunctionTable& table() { return FunctionTable::standard(); }

EvolutionSpec burgers() { return EvolutionSpec::alpha_beta(parse("a(u)"), parse("0")); }
EvolutionSpec classical() { return EvolutionSpec::alpha_beta(parse("u"), parse("0")); }

Generator gen(const char* tau, const char* xi, const char* eta, const char* name = "") {
  return Generator::make(parse(tau), parse(xi), parse(eta), name);
}

bool conserved(const ConservedVector& cv, const EvolutionSpec& spec,
               const std::optional<Expr>& phi = std::nullopt) {
  return check_divergence(cv, spec, table(), phi).pass();
}

}  // namespace

TEST_SUITE("general vector") {
  TEST_CASE("examples") {
    const auto spec = EvolutionSpec::generic(parse("a(u)*u_x"));
    const auto x1 = build_vector_general(spec, gen("1", "0", "0"), table());
    CHECK(x1.c0 == parse("a(u)*u_x*v"));
    CHECK(x1.c1 == parse("a(u)^2*u_x*v"));
    const auto opaque = EvolutionSpec::generic(parse("f(t, x, u, u_x)"));
    const auto x2 = build_vector_general(opaque, gen("0", "1", "0"), table());
    CHECK(x2.c0 == parse("-u_x*v"));
    CHECK(x2.c1 == parse("-u_x*v*f_d4(t, x, u, u_x)"));
    const auto x5 = build_vector_general(EvolutionSpec::generic(parse("u*u_x")),
                                         gen("0", "t", "1"), table());
    CHECK(x5.c0 == parse("(1 - t*u_x)*v"));
    CHECK(x5.has_v());
  }

  TEST_CASE("conserved on solutions of the coupled system") {
    const auto spec = EvolutionSpec::generic(parse("a(u)*u_x"));
    for (const auto& g : burgers_catalog(table())) {
      CHECK_MESSAGE(conserved(build_vector_general(spec, g, table()), spec), g.name);
    }
    const auto linear = EvolutionSpec::generic(parse("x*u_x + t*u"));
    CHECK(conserved(build_vector_general(linear, gen("0", "0", "u"), table()), linear));
  }

  TEST_CASE("multiplier closes the system") {
    const auto spec = EvolutionSpec::generic(parse("a(u)*u_x"));
    const auto x7 = build_vector_general(spec, burgers_generator("X7", table()), table());
    CHECK(conserved(x7, spec, parse("u")));
    CHECK(conserved(x7, spec, parse("u^3 + 1")));
  }
}

TEST_SUITE("self-adjoint vector") {
  TEST_CASE("X3 for inviscid Burgers") {
    const auto cv = build_vector_self(burgers(), burgers_generator("X3", table()), table());
    CHECK(cv.c0 == parse("(t*a(u) - x)*u*u_x"));
    CHECK(cv.c1 == parse("(x - t*a(u))*u*u_t"));
    CHECK(cv.formula == VectorFormula::self_adjoint);
    CHECK(conserved(cv, burgers()));
  }

  TEST_CASE("X5 at a = u") {
    const auto x5 = burgers_generator("X5", table());
    const auto cv = instantiate(build_vector_self(burgers(), x5, table()), "a", parse("u"), table());
    CHECK(cv.c0 == parse("u - t*u*u_x"));
    CHECK(cv.c1 == parse("u^2 + t*u*u_t"));
    CHECK(divergence_residual(cv, classical(), table()).is_zero_literal());
  }

  TEST_CASE("alpha = 2x, beta = u under time translation") {
    const auto spec = EvolutionSpec::alpha_beta(parse("2*x"), parse("u"));
    const auto cv = build_vector_self(spec, gen("1", "0", "0"), table());
    CHECK(cv.c0 == parse("(u + 2*x*u_x)*u"));
    CHECK(cv.c1 == parse("-2*x*u_t*u"));
    CHECK(conserved(cv, spec));
  }

  TEST_CASE("the displayed Theorem-5 vectors of X4..X8") {
    CHECK(build_vector_self(burgers(), burgers_generator("X4", table()), table()).c0 ==
          parse("-a(u)*u/a'(u) + t*a(u)*u*u_x"));
    CHECK(build_vector_self(burgers(), burgers_generator("X6", table()), table()).c1 ==
          parse("-a(u)^3*u/a'(u) - x*a(u)*u*u_t"));
    CHECK(build_vector_self(burgers(), burgers_generator("X8", table()), table()).c0 ==
          parse("(x - t*a(u))*a(u)*u/a'(u) + (t*x*a(u) - x^2)*u*u_x"));
  }

  TEST_CASE("every catalog generator and scaling gives a conserved vector") {
    for (const char* lambda : {"1", "u", "u^2"}) {
      for (const auto& g : burgers_catalog(table())) {
        const auto cv = build_vector_self(burgers(), scale_generator(parse(lambda), g), table());
        CHECK_MESSAGE(conserved(cv, burgers()), lambda, " ", g.name);
      }
    }
  }

  TEST_CASE("translations give trivial laws") {
    const auto x2 = build_vector_burgers(burgers_generator("X2", table()), table());
    CHECK(x2.c0 == parse("-u*u_x"));
    CHECK(x2.c0 == -total_derivative(parse("u^2/2"), Direction::x, table()));
    CHECK(conserved(x2, burgers()));
    const auto x1 = build_vector_burgers(burgers_generator("X1", table()), table());
    CHECK(conserved(x1, burgers()));
  }

  TEST_CASE("burgers form equals the alpha-beta form") {
    for (const auto& g : burgers_catalog(table())) {
      const auto a = build_vector_burgers(g, table());
      const auto b = build_vector_self(burgers(), g, table());
      CHECK(a.c0 == b.c0);
      CHECK(a.c1 == b.c1);
    }
  }

  TEST_CASE("refusals") {
    const auto x1 = gen("1", "0", "0");
    CHECK_THROWS_AS(build_vector_self(EvolutionSpec::alpha_beta(parse("u"), parse("u^2")), x1, table()),
                    RefusalError);
    CHECK_THROWS_AS(build_vector_self(EvolutionSpec::alpha_beta(parse("q(x)"), parse("0")), x1, table()),
                    RefusalError);
    CHECK_THROWS_AS(build_vector_self(burgers(), x1, table(), parse("1")),
                    RefusalError);
    CHECK_THROWS_AS(build_vector_self(EvolutionSpec::generic(parse("u_x^2")), x1, table()),
                    std::invalid_argument);
  }

  TEST_CASE("quasi multiplier supplied explicitly") {
    const auto spec = EvolutionSpec::alpha_beta(parse("u"), parse("u^2"));
    const auto cv = build_vector_self(spec, gen("1", "0", "0"), table(), parse("u^-2"));
    CHECK(cv.formula == VectorFormula::quasi_self_adjoint);
    CHECK(conserved(cv, spec));
    const auto cv2 = build_vector_self(spec, gen("0", "1", "0"), table(), parse("u^-2"));
    CHECK(conserved(cv2, spec));
  }

  TEST_CASE("opaque quasi multiplier") {
    const auto spec = EvolutionSpec::alpha_beta(parse("u"), parse("u^2 + 1"));
    const auto verdict = classify(spec, table());
    REQUIRE(verdict.kind == AdjointKind::quasi_self_adjoint);
    const auto cv = build_vector_self(spec, gen("1", "0", "0"), verdict.table, verdict.phi);
    CHECK(check_divergence(cv, spec, verdict.table).pass());
  }

  TEST_CASE("Case 2 accepts any multiplier") {
    const auto cv = build_vector_self(burgers(), burgers_generator("X5", table()), table(),
                                      parse("u^3 + u"));
    CHECK(conserved(cv, burgers()));
  }
}

TEST_SUITE("catalog laws") {
  TEST_CASE("entries") {
    const auto l1 = burgers_claw("l1", table());
    CHECK(l1.c0 == parse("u^2/2"));
    CHECK(l1.c1 == parse("A(u)"));
    CHECK(l1.generator == "X3");
    const auto l3 = instantiate(burgers_claw("l3", table()), "a", parse("u"), table());
    CHECK(l3.c0 == parse("u"));
    CHECK(l3.c1 == parse("u^2/2"));
    const auto l1u = instantiate(l1, "a", parse("u"), table());
    CHECK(l1u.c1 == parse("u^3/3"));
    CHECK(burgers_claw_catalog(table()).size() == 6);
    CHECK_THROWS_AS(burgers_claw("l5", table()), std::out_of_range);
  }

  TEST_CASE("every entry is conserved") {
    for (const auto& cv : burgers_claw_catalog(table())) {
      const auto check = check_divergence(cv, burgers(), table());
      CHECK_MESSAGE(check.pass(), cv.label, ": ", to_string(check.residual));
    }
    CHECK(divergence_residual(burgers_claw("l1", table()), burgers(), table()).is_zero_literal());
  }

  TEST_CASE("simplified and raw vectors differ by a conserved vector") {
    for (const auto& simplified : burgers_claw_catalog(table())) {
      const auto raw = build_vector_self(burgers(), burgers_generator(simplified.generator, table()),
                                         table());
      ConservedVector gap = raw;
      gap.c0 = raw.c0 - simplified.c0;
      gap.c1 = raw.c1 - simplified.c1;
      CHECK_MESSAGE(conserved(gap, burgers()), simplified.label);
    }
  }
}

TEST_SUITE("printed variant") {
  TEST_CASE("missing alpha on eta breaks conservation") {
    const auto x5 = instantiate_function(burgers_generator("X5", table()).eta, "a", parse("u"), table());
    const auto g = Generator::make(parse("0"), parse("t"), x5, "X5");
    const auto cv = build_vector_printed_variant(classical(), g, parse("1"), table());
    CHECK(cv.c1 == parse("(1 + t*u_t)*u"));
    const auto check = check_divergence(cv, classical(), table());
    CHECK_FALSE(check.pass());
    CHECK(check.residual == parse("u_x - 2*u*u_x"));
  }

  TEST_CASE("agrees with the corrected form when eta vanishes") {
    const auto g = burgers_generator("X3", table());
    const auto cv = build_vector_printed_variant(burgers(), g, parse("u"), table());
    CHECK(conserved(cv, burgers()));
  }

  TEST_CASE("requires beta = 0") {
    CHECK_THROWS_AS(build_vector_printed_variant(EvolutionSpec::alpha_beta(parse("u"), parse("1")),
                                                 gen("1", "0", "0"), parse("1"), table()),
                    std::invalid_argument);
  }
}
