"""Effective constants c1..c9 for the finiteness theorem on X-coordinates
that are sums of S-units, the d-threshold splitting the at-most-c9 and
at-most-one regimes, and inequality audits on concrete solutions.

The constant chain mirrors the proof inequalities step by step; each
constant is the smallest certified value making its inequality true under
the main-branch assumption min(gamma, n_rs) >= 2.5 * r * p_s.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import sunit
from .baker import MatveevInstance, absorb_one_plus_log, matveev_lower_bound, shrink_bound
from .numkernel import (
    DEFAULT_PREC_BITS,
    ESCALATION_CAP_BITS,
    CertifiedReal,
    PrecisionExhausted,
    Ternary,
    certified_compare,
    certified_log,
    is_square,
)
from .pell import PellContext, x_at


@dataclass(frozen=True)
class Theorem1Params:
    s: int
    primes: sunit.PrimeSet
    r: int
    epsilon: Fraction

    def __post_init__(self):
        if self.s < 1 or len(self.primes) != self.s:
            raise ValueError("s must match the prime set size")
        if self.primes.primes[-1] == 2:
            raise ValueError("largest prime must be odd")
        if self.r < 1:
            raise ValueError("r must be >= 1")
        eps = Fraction(self.epsilon)
        if not (0 < eps < 1):
            raise ValueError("epsilon must lie in (0, 1)")
        object.__setattr__(self, "epsilon", eps)

    @property
    def p_s(self) -> int:
        return self.primes.primes[-1]

    @property
    def n_min(self) -> Fraction:
        # main-branch floor for both gamma and n_rs
        return Fraction(5, 2) * self.r * self.p_s


@dataclass(frozen=True)
class ConstantsLedger:
    params: Theorem1Params
    c1: CertifiedReal
    c2: CertifiedReal
    c3: CertifiedReal
    c4: CertifiedReal
    c5: CertifiedReal
    c6: CertifiedReal
    c7: CertifiedReal
    c8: CertifiedReal
    c9: CertifiedReal
    log_d_threshold: CertifiedReal  # threshold d = p_s^(2 c8) r^2, stored as log
    Td_bound: int


def _pos(x: CertifiedReal) -> CertifiedReal:
    """max(x, 0) as an interval."""
    return CertifiedReal(max(x.lo, Fraction(0)), max(x.hi, Fraction(0)), x.bits)


def constants(params: Theorem1Params, bits: int = DEFAULT_PREC_BITS) -> ConstantsLedger:
    s, r, eps = params.s, params.r, params.epsilon
    primes = params.primes.primes
    n_min = params.n_min
    one = CertifiedReal.exact(1, bits)
    eps_factor = Fraction(1 + eps, eps)  # (1+eps)/eps
    log_pmax = certified_log(params.p_s, bits)
    log_nmin = certified_log(n_min, bits)

    # c1: sum-of-small-terms coefficient (r-1) (4r)^(eps/(1+eps))
    if r == 1:
        c1 = CertifiedReal.exact(0, bits)
    else:
        exponent = CertifiedReal.exact(Fraction(eps, 1 + eps), bits)
        from .numkernel import certified_pow
        c1 = (r - 1) * certified_pow(4 * r, exponent, bits)
    c2 = c1 + 2 * r

    # c3: Matveev with t = s+2, dL = 2; log gamma enters as its own factor
    # (placeholder 1 in the A list) and (1 + log B), B = s*n, is absorbed at
    # the branch floor n >= n_min
    a_first = [CertifiedReal.exact(Fraction(16, 100), bits), one]
    a_primes = [2 * certified_log(p, bits) for p in primes]
    inst3 = MatveevInstance(t=s + 2, dL=2, A=a_first + a_primes,
                            B=CertifiedReal.exact(1, bits))
    c3 = matveev_lower_bound(inst3, bits) * absorb_one_plus_log(s, n_min, bits)

    # c4: n_rs < c4 (log n_rs)(log gamma), absorbing the log c2 offset
    c4 = eps_factor * (c3 + _pos(certified_log(c2, bits)) / (log_nmin * log_nmin))

    # c5: tail factor of the two-solution combination is at most 2
    c5 = 2 * c2

    # c6: Matveev with t = s+1, dL = 1, B = 2 s n^2 absorbed at n_min
    inst6 = MatveevInstance(t=s + 1, dL=1,
                            A=[2 * certified_log(2, bits)] + a_primes,
                            B=CertifiedReal.exact(1, bits))
    absorb6 = 2 + (1 + certified_log(2 * s, bits)) / log_nmin
    c6 = matveev_lower_bound(inst6, bits) * absorb6

    # c7: close a < (1+eps)/eps [log(2 s B(a) c5) + c6 log B(a)] with
    # B(a) = 2 T log T, T = 2 c4 a s log p_s.  Using log log T <= log T:
    # log B(a) <= log 2 + 2 log(K/2) + 2 log a with K = 4 c4 s log p_s.
    K_half = 2 * c4 * s * log_pmax
    alpha7 = 2 * eps_factor * (1 + c6)
    beta7 = eps_factor * (certified_log(2 * s * 1, bits) + certified_log(c5, bits)
                          + (1 + c6) * (certified_log(2, bits)
                                        + 2 * _pos(certified_log(K_half, bits))))
    c7 = shrink_bound(1, alpha7, beta7, bits)

    # c8 and the d threshold: d < p_s^(2 s c7) (2.5 r)^2 <= p_s^(2 c8) r^2
    c8 = s * c7 + certified_log(Fraction(5, 2), bits) / log_pmax
    log_d_threshold = 2 * c8 * log_pmax + 2 * certified_log(r, bits) \
        if r > 1 else 2 * c8 * log_pmax

    # c9: solution-count cap l2 < s b_rs with b_rs at its c7-driven maximum
    T7 = 2 * c4 * c7 * s * log_pmax
    c9 = 2 * s * T7 * certified_log(T7, bits)
    td = c9.hi.__ceil__()
    return ConstantsLedger(params, c1, c2, c3, c4, c5, c6, c7, c8, c9,
                           log_d_threshold, td)


class Classification:
    AT_MOST_C9 = "AtMostC9"
    AT_MOST_ONE = "AtMostOne"


def classify_d(d: int, ledger: ConstantsLedger, bits: int = DEFAULT_PREC_BITS) -> str:
    """AtMostOne for d at or above the threshold, else AtMostC9."""
    if d <= 1 or is_square(d):
        raise ValueError("d must be a non-square integer > 1")
    while True:
        order = certified_compare(certified_log(d, bits), ledger.log_d_threshold)
        if order is Ternary.LESS:
            return Classification.AT_MOST_C9
        if order is Ternary.GREATER:
            return Classification.AT_MOST_ONE
        bits *= 2
        if bits > ESCALATION_CAP_BITS:
            raise PrecisionExhausted("d indistinguishable from the threshold")


@dataclass(frozen=True)
class AuditRecord:
    growth_sandwich: bool      # gamma^l/2.5 < X_l < gamma^l
    sunit_size: bool           # p_s^n_rs <= X_l <= r p_s^(s n_rs)
    exponent_transfer: bool    # a_rs <= s b_rs + log r / log p_s
    log_gamma_window: bool     # n_rs log p_s <= l log gamma <= s n_rs log p_s + log 2.5r

    @property
    def passed(self) -> bool:
        return all((self.growth_sandwich, self.sunit_size,
                    self.exponent_transfer, self.log_gamma_window))


def _cert_le(lhs_fn, rhs_fn, bits: int) -> bool:
    while True:
        lhs, rhs = lhs_fn(bits), rhs_fn(bits)
        if lhs.hi <= rhs.lo:
            return True
        if lhs.lo > rhs.hi:
            return False
        bits *= 2
        if bits > ESCALATION_CAP_BITS:
            raise PrecisionExhausted("inequality undecidable at the precision cap")


def audit_inequalities(ctx: PellContext, solution,
                       params: Theorem1Params,
                       bits: int = DEFAULT_PREC_BITS) -> AuditRecord:
    """Certified check of the proof's size inequalities on a concrete
    solution (l, decompositions).  Boundary cases (a single S-unit term
    equal to p_s^n_rs) make the size bounds non-strict; they are audited
    as the derivation supports them, with <=."""
    l, decs = solution
    if l < 1 or not decs:
        raise ValueError("solution must provide l >= 1 and at least one term")
    xl = x_at(ctx, l)
    total = sum(d.value(params.primes) for d in decs)
    if total != xl or len(decs) != params.r:
        raise ValueError("not a solution: terms do not reconstruct X_l")
    n_rs = sunit.max_exponent(decs)
    s, r, p_s = params.s, params.r, params.p_s

    # gamma^l sandwich, exact surd comparisons
    from .numkernel import surd_pow
    power = surd_pow(ctx.gamma, l)
    growth = (power.compare_rational(Fraction(5, 2) * xl) < 0
              and power.compare_rational(xl) > 0)

    sunit_size = p_s ** n_rs <= xl <= r * p_s ** (s * n_rs)

    transfer = _cert_le(
        lambda b: CertifiedReal.exact(n_rs, b) * certified_log(p_s, b),
        lambda b: CertifiedReal.exact(s * n_rs, b) * certified_log(p_s, b)
        + (certified_log(r, b) if r > 1 else CertifiedReal.exact(0, b)),
        bits)

    window = (_cert_le(lambda b: n_rs * certified_log(p_s, b),
                       lambda b: l * certified_log(ctx.gamma, b), bits)
              and _cert_le(lambda b: l * certified_log(ctx.gamma, b),
                           lambda b: s * n_rs * certified_log(p_s, b)
                           + certified_log(Fraction(5, 2) * r, b), bits))
    return AuditRecord(growth, sunit_size, transfer, window)
