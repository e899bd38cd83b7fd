"""Self-adjointness, Lie point symmetries and conservation laws of u_t + f = 0."""

from ._lieconserve import (
    AdjointKind,
    AdjointnessVerdict,
    CharacteristicSolution,
    ConservationReport,
    ConservedVector,
    EvalError,
    EvolutionSpec,
    Expr,
    Generator,
    InconclusiveError,
    ParseError,
    Profile,
    RefusalError,
    UnknownSymbolError,
    adjoint,
    build_vector,
    burgers_catalog,
    burgers_claw,
    burgers_claw_catalog,
    burgers_generator,
    check_divergence,
    check_symmetry,
    classify,
    is_zero,
    parse,
    run_cli,
    shock_time,
    verify_law,
    verify_substitution,
)

__version__ = "0.1.0"
