"""Certified continued-fraction expansion of irrationals.

A quotient is emitted only once its floor is unambiguous at the working
precision; otherwise the whole expansion restarts from a refined source
enclosure, so a single wrong quotient can never slip through.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator

from .numkernel import (
    DEFAULT_PREC_BITS,
    ESCALATION_CAP_BITS,
    CertifiedReal,
    PrecisionExhausted,
)

# a refinable source: bits -> certified enclosure of the same real number
Source = Callable[[int], CertifiedReal]


def constant_source(value: CertifiedReal) -> Source:
    return lambda bits: value


@dataclass
class CFExpansion:
    quotients: list = field(default_factory=list)
    convergents: list = field(default_factory=list)  # (p_t, q_t)
    truncated: bool = False  # hit the precision cap before `count` quotients

    def check_determinant(self) -> bool:
        """p_t q_{t-1} - p_{t-1} q_t = (-1)^{t-1} for all computed t."""
        for t in range(1, len(self.convergents)):
            p, q = self.convergents[t]
            pp, qp = self.convergents[t - 1]
            if p * qp - pp * q != (-1) ** (t - 1):
                return False
        return True


def quotient_stream(source: Source, start_bits: int = DEFAULT_PREC_BITS,
                    cap_bits: int = ESCALATION_CAP_BITS) -> Iterator[tuple]:
    """Yields (a_t, p_t, q_t) with certified quotients, escalating precision
    by restarting from a sharper source enclosure whenever a floor is
    ambiguous.  Raises PrecisionExhausted at the cap."""
    bits = start_bits
    emitted = 0
    while True:
        x = source(bits)
        if x.lo == x.hi:
            raise ValueError("rational input: continued fraction terminates")
        pm1, qm1 = 1, 0
        pm2, qm2 = 0, 1
        produced = []
        while True:
            f_lo = x.lo.__floor__()
            f_hi = x.hi.__floor__()
            if f_lo != f_hi:
                break  # ambiguous at this precision
            a = f_lo
            p = a * pm1 + pm2
            q = a * qm1 + qm2
            produced.append((a, p, q))
            if len(produced) > emitted:
                emitted += 1
                yield (a, p, q)
            pm2, qm2, pm1, qm1 = pm1, qm1, p, q
            frac = CertifiedReal(x.lo - a, x.hi - a, x.bits)
            if frac.lo <= 0:
                break  # cannot certify the next reciprocal yet
            x = 1 / frac
        bits *= 2
        if bits > cap_bits:
            raise PrecisionExhausted(
                f"continued fraction stalled after {emitted} quotients at the precision cap")


def expand(source: Source, count: int, start_bits: int = DEFAULT_PREC_BITS,
           cap_bits: int = ESCALATION_CAP_BITS) -> CFExpansion:
    """First `count` partial quotients and convergents of an irrational."""
    if count < 1:
        raise ValueError("count must be >= 1")
    exp = CFExpansion()
    try:
        for a, p, q in quotient_stream(source, start_bits, cap_bits):
            exp.quotients.append(a)
            exp.convergents.append((p, q))
            if len(exp.quotients) >= count:
                return exp
    except PrecisionExhausted:
        exp.truncated = True
    return exp


def a_of_M(source: Source, M: int, start_bits: int = DEFAULT_PREC_BITS,
           cap_bits: int = ESCALATION_CAP_BITS) -> tuple:
    """(N, q_N, a(M)): N minimal with q_N > M, and the largest partial
    quotient among a_0 ... a_N."""
    if M < 1:
        raise ValueError("M must be >= 1")
    a_max = 0
    for t, (a, p, q) in enumerate(quotient_stream(source, start_bits, cap_bits)):
        a_max = max(a_max, a)
        if q > M:
            return (t, q, a_max)
    raise AssertionError("unreachable")


def nearest_int_distance(x: CertifiedReal) -> CertifiedReal:
    """Certified enclosure of ||x|| = min_n |x - n|.

    The enclosure is the exact range of ||.|| over the interval: 0 enters
    if an integer lies inside, 1/2 if a half-integer does.
    """
    if x.hi - x.lo >= 1:
        return CertifiedReal(Fraction(0), Fraction(1, 2), x.bits)
    candidates = []
    for endpoint in (x.lo, x.hi):
        n = (endpoint + Fraction(1, 2)).__floor__()  # nearest integer
        candidates.append(abs(endpoint - n))
    lo = min(candidates)
    hi = max(candidates)
    if x.lo.__ceil__() <= x.hi:  # an integer lies inside
        lo = Fraction(0)
    first_half = (x.lo - Fraction(1, 2)).__ceil__() + Fraction(1, 2)
    if first_half <= x.hi:  # a half-integer lies inside
        hi = Fraction(1, 2)
    return CertifiedReal(lo, min(hi, Fraction(1, 2)), x.bits)
