"""ε-noncrossing partitions, their lattices and ε-cumulants.

All values are exact: rationals come back as ``fractions.Fraction`` and may be
passed in as ``int``, ``Fraction`` or ``"p/q"`` strings.
"""

from ._core import (
    EpsilonMatrix,
    LatticeViolation,
    LimitExceeded,
    Model,
    bell_number,
    catalan_number,
    classical_cumulants,
    cumulants,
    enumerate_eps_nc,
    free_cumulants,
    is_eps_noncrossing,
    join,
    lattice,
    meet,
    suite_names,
    verify,
)

__all__ = [
    "EpsilonMatrix",
    "LatticeViolation",
    "LimitExceeded",
    "Model",
    "bell_number",
    "catalan_number",
    "classical_cumulants",
    "cumulants",
    "enumerate_eps_nc",
    "free_cumulants",
    "is_eps_noncrossing",
    "join",
    "lattice",
    "meet",
    "suite_names",
    "verify",
]
