"""Pell equation X^2 - d Y^2 = 1: fundamental solutions, the X-coordinate
sequence, and the integer polynomial P_l expressing X_l through X_1 alone."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

import gmpy2

from .numkernel import (
    CertifiedReal,
    QuadraticSurd,
    Ternary,
    certified_compare,
    is_square,
    sqrt_enclosure,
    surd_enclosure,
    surd_pow,
)


@dataclass(frozen=True)
class PellContext:
    d: int
    X1: int
    Y1: int
    gamma: QuadraticSurd
    eta: QuadraticSurd

    def __post_init__(self):
        if self.X1 * self.X1 - self.d * self.Y1 * self.Y1 != 1:
            raise ValueError("(X1, Y1) does not solve the Pell equation")


def fundamental_solution(d: int) -> PellContext:
    """Minimal positive solution of X^2 - d Y^2 = 1 via the continued
    fraction of sqrt(d).

    Successive convergents p/q are tested against p^2 - d q^2 = 1 directly,
    which handles both parities of the period (an odd period first hits the
    negative Pell equation, whose convergent is simply skipped).
    """
    if d <= 1:
        raise ValueError(f"d must be > 1, got {d}")
    a0 = math.isqrt(d)
    if a0 * a0 == d:
        raise ValueError(f"d is a perfect square: {d}")
    # PQa recursion for the continued fraction of sqrt(d)
    m, den, a = 0, 1, a0
    p_prev, q_prev = 1, 0
    p, q = a0, 1
    while True:
        if p * p - d * q * q == 1:
            gamma = QuadraticSurd(Fraction(p), Fraction(q), d)
            eta = QuadraticSurd(Fraction(p), Fraction(-q), d)
            return PellContext(d, p, q, gamma, eta)
        m = den * a - m
        den = (d - m * m) // den
        a = (a0 + m) // den
        p, p_prev = a * p + p_prev, p
        q, q_prev = a * q + q_prev, q


def x_iter(ctx_or_x1) -> Iterator[int]:
    """Yields X_1, X_2, X_3, ... via the two-term recurrence, exactly."""
    x1 = ctx_or_x1.X1 if isinstance(ctx_or_x1, PellContext) else int(ctx_or_x1)
    prev, cur = 1, x1  # X_0 = 1
    while True:
        yield cur
        prev, cur = cur, 2 * x1 * cur - prev


def x_at(ctx: PellContext, l: int) -> int:
    """X_l through the integer recurrence X_l = 2 X_1 X_{l-1} - X_{l-2}."""
    if l < 1:
        raise ValueError("l must be >= 1")
    prev, cur = 1, ctx.X1
    for _ in range(l - 1):
        prev, cur = cur, 2 * ctx.X1 * cur - prev
    return cur


def x_at_binet(ctx: PellContext, l: int) -> int:
    """X_l as (gamma^l + eta^l) / 2 using exact surd powers."""
    value = surd_pow(ctx.gamma, l) + surd_pow(ctx.eta, l)
    assert value.b == 0
    half = value.a / 2
    assert half.denominator == 1
    return half.numerator


def p_poly(x1: int, l: int) -> int:
    """P_l(x1) = ((x1 + sqrt(x1^2-1))^l + (x1 - sqrt(x1^2-1))^l) / 2.

    Integer-valued; agrees with X_l of any Pell context whose fundamental
    X-coordinate is x1.  Computed by the same two-term recurrence.
    """
    if l < 1:
        raise ValueError("l must be >= 1")
    prev, cur = 1, x1
    for _ in range(l - 1):
        prev, cur = cur, 2 * x1 * cur - prev
    return cur


def p_poly_invert(n: int, l: int) -> Optional[int]:
    """The unique integer x1 >= 2 with P_l(x1) = n, if one exists.

    P_l(x1) is within 1/2 of (x1 + sqrt(x1^2-1))^l / 2, so the candidate is
    recovered from the integer l-th root of 2n and confirmed exactly.
    """
    if n < 1 or l < 2:
        raise ValueError("need n >= 1 and l >= 2")
    root, _ = gmpy2.iroot(gmpy2.mpz(2 * n), l)
    # gamma = x1 + sqrt(x1^2-1) lies in (2 x1 - 1, 2 x1)
    base = int(root) // 2
    for x1 in range(max(2, base - 1), base + 3):
        if p_poly(x1, l) == n:
            return x1
    return None


def _certified_le(lhs, rhs, bits: int = 128) -> bool:
    """Certified lhs <= rhs for interval-producing closures, doubling the
    working precision until the comparison resolves.  Callers only pose
    strictly separated questions, so the loop terminates."""
    while True:
        order = certified_compare(lhs(bits), rhs(bits))
        if order is Ternary.LESS:
            return True
        if order is Ternary.GREATER:
            return False
        bits *= 2


def audit_growth(ctx: PellContext, l_max: int, bits: int = 128) -> bool:
    """Check gamma^l / (1+sqrt 2) <= X_l <= (2 - sqrt 2) gamma^l and the
    cruder gamma^l / 2.5 < X_l < gamma^l, for 1 <= l <= l_max."""
    if l_max < 1:
        raise ValueError("l_max must be >= 1")
    power = QuadraticSurd(Fraction(1), Fraction(0), ctx.d)
    for l in range(1, l_max + 1):
        power = power * ctx.gamma  # exact gamma^l
        xl = x_at(ctx, l)
        # strict sandwich gamma^l / 2.5 < X_l < gamma^l, exact comparisons
        if power.compare_rational(Fraction(5, 2) * xl) >= 0:
            return False
        if power.compare_rational(xl) <= 0:
            return False
        # sqrt(2)-weighted bounds need intervals: the fields Q(sqrt 2) and
        # Q(sqrt d) do not mix.  1/(1+sqrt 2) = sqrt(2) - 1.
        gl = power  # capture for the closures below
        lower_ok = _certified_le(
            lambda b: (sqrt_enclosure(2, b) - 1) * surd_enclosure(gl, b),
            lambda b: CertifiedReal.exact(xl, b),
            bits)
        upper_ok = _certified_le(
            lambda b: CertifiedReal.exact(xl, b),
            lambda b: (2 - sqrt_enclosure(2, b)) * surd_enclosure(gl, b),
            bits)
        if not (lower_ok and upper_ok):
            return False
    return True
