import json
import math

import pytest

import lieconserve as lc


def test_parse_round_trip():
    e = lc.parse("a(u)*(x - t*a(u))/a'(u)")
    assert lc.parse(str(e)) == e
    assert str(lc.parse("u").diff("u")) == "1"
    with pytest.raises(lc.ParseError):
        lc.parse("u +")
    with pytest.raises(lc.UnknownSymbolError):
        lc.parse("g(u)")


def test_adjoint_and_classification():
    burgers = lc.EvolutionSpec.burgers()
    assert lc.adjoint(burgers) == lc.parse("-v_t - a(u)*v_x")
    assert lc.classify(burgers).kind == lc.AdjointKind.self_adjoint
    verdict = lc.classify(lc.EvolutionSpec.alpha_beta("u", "u^2"))
    assert verdict.kind == lc.AdjointKind.quasi_self_adjoint
    assert str(verdict.phi) == "1/u^2"
    assert lc.classify(lc.EvolutionSpec.alpha_beta("q(x)")).kind == \
        lc.AdjointKind.not_quasi_self_adjoint
    ok, _ = lc.verify_substitution(lc.EvolutionSpec.alpha_beta("2*x", "u"), "u")
    assert ok


def test_symmetries():
    burgers = lc.EvolutionSpec.burgers()
    assert len(lc.burgers_catalog()) == 9
    for g in lc.burgers_catalog():
        assert lc.check_symmetry(burgers, g)[0], str(g)
    x5 = lc.burgers_generator("X5").scaled("u^2")
    assert lc.check_symmetry(burgers, x5)[0]
    passes, r1, r2 = lc.check_symmetry(burgers, lc.Generator.make("0", "0", "1"))
    assert not passes
    assert str(r2) == "a'(u)"


def test_conservation_laws():
    burgers = lc.EvolutionSpec.burgers()
    for cv in lc.burgers_claw_catalog():
        assert lc.check_divergence(cv, burgers)[0], cv.label
    x3 = lc.build_vector(burgers, lc.burgers_generator("X3"))
    assert x3.c0 == lc.parse("(t*a(u) - x)*u*u_x")
    with pytest.raises(lc.RefusalError):
        lc.build_vector(lc.EvolutionSpec.alpha_beta("u", "u^2"), lc.burgers_generator("X1"))
    quasi = lc.build_vector(lc.EvolutionSpec.alpha_beta("u", "u^2"),
                            lc.Generator.make("1", "0", "0"), phi="u^-2")
    assert quasi.formula == "quasi-self-adjoint"


def test_numerics():
    sol = lc.CharacteristicSolution("u", lc.Profile.sine(), 0.0, 2 * math.pi)
    assert sol.shock_time == pytest.approx(1.0, abs=1e-6)
    u, u_x = sol.solve_at(math.pi, 0.5)
    assert u == pytest.approx(0.0, abs=1e-12)
    assert u_x == pytest.approx(-2.0)
    assert sol.integral("u^2/2", 0.9) == pytest.approx(math.pi / 2, rel=1e-6)
    report = lc.verify_law(sol, lc.burgers_claw("l1"), [0.25, 0.5, 0.75, 0.9])
    assert report.passed
    assert report.mode == "drift"
    assert str(report.flux) == "u^3/3"
    with pytest.raises(ValueError):
        sol.solve_at(1.0, 0.99)


def test_cli_in_process(tmp_path):
    out = tmp_path / "report.json"
    code, text, _ = lc.run_cli(["claw", "--builtin", "burgers", "--catalog", "l1", "--a", "u",
                                "--numeric", "sin", "--domain", "0", "6.283185307",
                                "--times", "0.25", "0.5", "--out", str(out)])
    assert code == 0
    assert "verdict: pass" in text
    report = json.loads(out.read_text())
    assert report["numeric"]["pass"] is True
    assert lc.run_cli(["classify", "--alpha", "q(x)"])[0] == 2
    assert lc.run_cli(["classify", "--alpha", "u +"])[0] == 1
