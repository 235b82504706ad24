"""Certified verification toolkit for Pell equations whose X-coordinates
are products 2^{n1} 3^{n2} with n1 <= n2.

Layers, bottom to top:

- ``numkernel``: exact rationals, quadratic surds, and certified interval
  enclosures with escalating precision
- ``pell``: fundamental solutions, the X-coordinate sequence and its
  index-polynomial inversion
- ``sunit``: S-unit decomposition and enumeration
- ``cfrac``: certified continued-fraction expansion
- ``baker``: heights, the Matveev lower bound, log-bound shrinking
- ``reduction``: Legendre-type and Baker-Davenport bound reduction
- ``theorem1``: the effective-constants ledger and inequality audits
- ``theorem2``: the full five-stage verification pipeline
- ``oracle``: independent brute-force ground truth
- ``cli``: command-line frontend (``python -m pellsu.cli``)
"""

from .numkernel import (
    DEFAULT_PREC_BITS,
    ESCALATION_CAP_BITS,
    CertifiedReal,
    PrecisionExhausted,
    QuadraticSurd,
    Ternary,
    certified_compare,
    certified_floor,
    certified_log,
    sqrt_enclosure,
)
from .pell import PellContext, fundamental_solution, p_poly, p_poly_invert, x_at, x_iter
from .sunit import PrimeSet, SUnitDecomposition, as_2a3b_ordered, decompose

__version__ = "1.0.0"

__all__ = [
    "DEFAULT_PREC_BITS",
    "ESCALATION_CAP_BITS",
    "CertifiedReal",
    "PrecisionExhausted",
    "QuadraticSurd",
    "Ternary",
    "certified_compare",
    "certified_floor",
    "certified_log",
    "sqrt_enclosure",
    "PellContext",
    "fundamental_solution",
    "p_poly",
    "p_poly_invert",
    "x_at",
    "x_iter",
    "PrimeSet",
    "SUnitDecomposition",
    "as_2a3b_ordered",
    "decompose",
    "__version__",
]
