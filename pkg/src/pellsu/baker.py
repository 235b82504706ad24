"""Logarithmic heights, the Matveev lower bound for linear forms in
logarithms, and the log-bound shrinker used to close B <= alpha log B + beta
inequalities."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .numkernel import (
    DEFAULT_PREC_BITS,
    CertifiedReal,
    certified_e,
    certified_log,
    sqrt_enclosure,
)
from .pell import PellContext

Number = Union[int, Fraction, CertifiedReal]


def height_rational(z: Fraction, bits: int = DEFAULT_PREC_BITS) -> CertifiedReal:
    """h(p/q) = log max(|p|, q) for p/q in lowest terms."""
    z = Fraction(z)
    m = max(abs(z.numerator), z.denominator)
    if m == 1:
        return CertifiedReal.exact(0, bits)
    return certified_log(m, bits)


def height_pell_unit(ctx: PellContext, bits: int = DEFAULT_PREC_BITS) -> CertifiedReal:
    """h(gamma) = log(gamma) / 2 for the fundamental Pell unit."""
    return certified_log(ctx.gamma, bits) / 2


@dataclass(frozen=True)
class MatveevInstance:
    t: int
    dL: int
    A: Sequence[CertifiedReal]
    B: CertifiedReal

    def __post_init__(self):
        if self.t < 1 or self.dL < 1:
            raise ValueError("need t >= 1 and dL >= 1")
        if len(self.A) != self.t:
            raise ValueError(f"expected {self.t} A-values, got {len(self.A)}")
        floor_016 = Fraction(16, 100)
        for j, a in enumerate(self.A):
            if a.lo < floor_016:
                raise ValueError(f"A[{j}] not certified >= 0.16")
        if self.B.lo < 1:
            raise ValueError("B not certified >= 1")


def matveev_lower_bound(inst: MatveevInstance,
                        bits: int = DEFAULT_PREC_BITS) -> CertifiedReal:
    """L = 1.4 * 30^(t+3) * t^4.5 * dL^2 (1 + log dL)(1 + log B) prod A_j.

    The asserted inequality is log|Lambda| > -L for Lambda != 0; downstream
    consumers use the certified upper end of L, which is the sound side.
    """
    t, dL = inst.t, inst.dL
    L = CertifiedReal.exact(Fraction(7, 5) * 30 ** (t + 3) * t ** 4 * dL ** 2, bits)
    L = L * sqrt_enclosure(t, bits)  # t^4.5 = t^4 sqrt(t)
    if dL > 1:
        L = L * (1 + certified_log(dL, bits))
    L = L * (1 + certified_log(inst.B, bits))
    for a in inst.A:
        L = L * a
    return L


def absorb_one_plus_log(k: Fraction, n_min: Fraction,
                        bits: int = DEFAULT_PREC_BITS) -> CertifiedReal:
    """Certified sup of (1 + log(k*n)) / log(n) over n >= n_min > 1.

    For k >= 1 the ratio is decreasing in n, so the sup is at n_min.  Used
    to absorb Matveev's (1 + log B) factor, B = k*n, into a c * log(n) form.
    """
    k = Fraction(k)
    n_min = Fraction(n_min)
    if k < 1 or n_min <= 1:
        raise ValueError("need k >= 1 and n_min > 1")
    return (1 + certified_log(k * n_min, bits)) / certified_log(n_min, bits)


def shrink_bound(delta: Number, alpha: Number, beta: Number,
                 bits: int = DEFAULT_PREC_BITS) -> CertifiedReal:
    """Upper bound (2/delta)(alpha log(alpha/delta) + beta) for any
    non-negative integer B satisfying delta*B <= alpha log B + beta;
    requires alpha >= e*delta."""
    delta = _as_interval(delta, bits)
    alpha = _as_interval(alpha, bits)
    beta = _as_interval(beta, bits)
    if not (delta.lo > 0 and alpha.lo > 0):
        raise ValueError("need delta > 0 and alpha > 0, certified")
    ratio = alpha / delta
    if not ratio.lo >= certified_e(bits).hi:
        raise ValueError("precondition alpha >= e*delta not certified")
    return (2 / delta) * (alpha * certified_log(ratio, bits) + beta)


def _as_interval(x: Number, bits: int) -> CertifiedReal:
    if isinstance(x, CertifiedReal):
        return x
    return CertifiedReal.exact(x, bits)
