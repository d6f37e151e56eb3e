"""Exact counting of standard Young tableaux and related linear extensions."""

from ._sytcount import (
    MemoLimitExceeded,
    MethodMismatch,
    ShapeError,
    canonical,
    count,
    methods,
    monte_carlo,
    run_cli,
    verify,
)

__all__ = [
    "MemoLimitExceeded",
    "MethodMismatch",
    "ShapeError",
    "canonical",
    "count",
    "methods",
    "monte_carlo",
    "run_cli",
    "verify",
]
