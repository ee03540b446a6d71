"""Exact enumeration of elementary functions, the diagonal computable real,
and certified inner Riemann sums for semi-algebraic volumes.

All values cross this boundary exactly: naturals as Python ints, rationals
as canonical fraction strings "p/q".
"""

from ._core import (
    AmbiguousAtBudget,
    BudgetExceeded,
    NoConvergenceAtBudget,
    ParseError,
    alpha_digits,
    alpha_interval,
    approximate_volume,
    beta,
    decode,
    enforce,
    epsilons,
    eval,
    g,
    riemann_volume,
)

__all__ = [
    "AmbiguousAtBudget",
    "BudgetExceeded",
    "NoConvergenceAtBudget",
    "ParseError",
    "alpha_digits",
    "alpha_interval",
    "approximate_volume",
    "beta",
    "decode",
    "enforce",
    "epsilons",
    "eval",
    "g",
    "riemann_volume",
]
