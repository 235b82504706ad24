"""The two bound-reduction devices: a Legendre-type exponent bound driven
by the largest partial quotient a(M), and the Dujella-Petho variant of the
Baker-Davenport reduction."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import cfrac
from .numkernel import (
    DEFAULT_PREC_BITS,
    CertifiedReal,
    PrecisionExhausted,
)

# convergents tried past the first q > 6M before giving up
EXTRA_CONVERGENTS = 25


@dataclass(frozen=True)
class ReductionOutcome:
    q_used: int
    epsilon1: Optional[CertifiedReal]
    bound: int
    convergent_index: int
    attempts: int


def legendre_exponent_bound(tau: cfrac.Source, M: int, C: CertifiedReal,
                            base: CertifiedReal,
                            start_bits: int = DEFAULT_PREC_BITS) -> int:
    """Largest integer x with base^x < C * M * (a(M) + 2).

    The caller guarantees a linear form |m*tau - n| <= C * base^(-x) with
    0 < m < M; combining with |m*tau - n| > 1/((a(M)+2) m) then caps x.
    The comparison base^x < RHS is settled exactly on the sound side
    (lower endpoint of base, upper endpoint of the right side).
    """
    if M < 1:
        raise ValueError("M must be >= 1")
    if not (C.lo > 0 and base.lo > 1):
        raise ValueError("need C > 0 and base > 1, certified")
    _, _, a_m = cfrac.a_of_M(tau, M, start_bits)
    rhs = C.hi * M * (a_m + 2)
    lo = base.lo
    x = 0
    power = lo
    while power < rhs:  # exact Fraction comparison
        x += 1
        power *= lo
    return x


def exclusion_bound(A_hi: Fraction, q: int, eps_lo: Fraction, B_lo: Fraction) -> int:
    """Largest integer k not excluded by k >= log(A q / eps1) / log B,
    i.e. ceil(log(A q / eps1)/log B) - 1, settled exactly: the smallest k
    with B^k >= A q / eps1 is excluded."""
    target = A_hi * q / eps_lo
    k = 0
    power = Fraction(1)
    while power < target:  # exact: smallest k with B^k >= target is excluded
        k += 1
        power *= B_lo
    return k - 1


@dataclass
class PreparedTau:
    """Convergent data of one tau, shareable across many mu reductions."""
    bits: int
    tau_val: CertifiedReal
    indices: list
    qs: list
    m_tau_dists: list  # M * ||tau q|| enclosures, aligned with qs
    a_max_first: int = 0  # max partial quotient up to the first stored q


def prepare_tau(tau: cfrac.Source, M: int, bits: int = DEFAULT_PREC_BITS,
                max_convergents: int = 200) -> PreparedTau:
    """Collect the convergent denominators q > 6M of tau (the first plus
    EXTRA_CONVERGENTS successors) together with M||tau q|| enclosures.

    a_max_first records the largest partial quotient seen up to and
    including the first stored convergent; since that convergent is the
    first with q > 6M, a_max_first is an upper bound for a(M') whenever
    M' <= 6M (the partial-quotient maximum is nondecreasing in M').
    """
    tau_val = tau(bits)
    indices, qs, dists = [], [], []
    a_max_first = 0
    for index, (a, _, q) in enumerate(cfrac.quotient_stream(tau, bits)):
        if index >= max_convergents:
            break
        if not qs:
            a_max_first = max(a_max_first, a)
        if q <= 6 * M:
            continue
        indices.append(index)
        qs.append(q)
        dists.append(M * cfrac.nearest_int_distance(tau_val * q))
        if len(qs) > EXTRA_CONVERGENTS:
            break
    return PreparedTau(bits, tau_val, indices, qs, dists, a_max_first)


def dujella_petho(tau: cfrac.Source, mu: cfrac.Source, A: CertifiedReal,
                  B: CertifiedReal, M: int, max_convergents: int = 200,
                  start_bits: int = DEFAULT_PREC_BITS,
                  prepared: Optional[PreparedTau] = None) -> Optional[ReductionOutcome]:
    """Baker-Davenport reduction: find a convergent denominator q > 6M of
    tau with eps1 = ||mu q|| - M ||tau q|| certified positive, and return
    the largest k not excluded by |m tau - n + mu| < A B^(-k), m <= M.

    Returns None when EXTRA_CONVERGENTS successive q past the first fail to
    give eps1 > 0.  A straddling eps1 escalates the source precision; only
    the escalation cap turns that into PrecisionExhausted.
    """
    if M < 1:
        raise ValueError("M must be >= 1")
    if not (A.lo > 0 and B.lo > 1):
        raise ValueError("need A > 0 and B > 1, certified")
    bits = start_bits
    while True:
        if prepared is None or prepared.bits < bits:
            prepared = prepare_tau(tau, M, bits, max_convergents)
        mu_val = mu(prepared.bits)
        straddle = False
        attempts = 0
        for index, q, m_tau_dist in zip(prepared.indices, prepared.qs,
                                        prepared.m_tau_dists):
            attempts += 1
            eps1 = cfrac.nearest_int_distance(mu_val * q) - m_tau_dist
            if eps1.lo > 0:
                bound = exclusion_bound(A.hi, q, eps1.lo, B.lo)
                return ReductionOutcome(q, eps1, bound, index, attempts)
            if eps1.hi > 0:
                straddle = True  # sign not certified; retry sharper
                break
        if not straddle:
            return None
        bits = 2 * max(bits, prepared.bits)
        if bits > cfrac.ESCALATION_CAP_BITS:
            raise PrecisionExhausted("eps1 sign undecidable at the precision cap")
