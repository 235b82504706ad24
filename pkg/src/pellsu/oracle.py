"""Independent brute-force ground truth.

Exhaustive small-scale searches over Pell X-coordinate sequences that
validate the pipeline without sharing its code paths: only the Pell
recurrences, S-unit decomposition and direct enumeration are used here,
never the reduction or orchestration machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from . import cfrac
from .numkernel import (
    DEFAULT_PREC_BITS,
    ESCALATION_CAP_BITS,
    CertifiedReal,
    PrecisionExhausted,
    is_square,
)
from .pell import fundamental_solution, x_at, x_iter
from .sunit import (
    PrimeSet,
    ResourceBudgetExceeded,
    SUnitDecomposition,
    as_2a3b_ordered,
    decompose,
    s_units_upto,
)


@dataclass(frozen=True)
class OracleFinding:
    d: int
    l: int
    X: int
    decompositions: tuple  # one witness: a tuple of SUnitDecomposition

    def __post_init__(self):
        object.__setattr__(self, "decompositions", tuple(self.decompositions))


def _sum_of_r_sunits(x: int, s: PrimeSet, r: int,
                     budget: int = 1_000_000) -> Optional[tuple]:
    """One witness of x as a sum of r signed S-units with magnitudes
    <= 2x, or None.  Meet-in-the-middle: the last term is solved for
    directly instead of enumerated."""
    units = s_units_upto(s, 2 * x)
    signed = units + [-u for u in units]
    counter = [0]

    def rec(target: int, k: int, floor_idx: int) -> Optional[list]:
        counter[0] += 1
        if counter[0] > budget:
            raise ResourceBudgetExceeded(f"membership budget {budget} exceeded")
        if k == 1:
            if target == 0 or abs(target) > 2 * x:
                return None
            dec = decompose(target, s)
            return [target] if dec is not None else None
        for idx in range(floor_idx, len(signed)):
            term = signed[idx]
            tail = rec(target - term, k - 1, idx)  # non-decreasing index order
            if tail is not None:
                return [term] + tail
        return None

    terms = rec(x, r, 0)
    if terms is None:
        return None
    return tuple(decompose(t, s) for t in terms)


def scan(d_range: Iterable[int], l_max: int, S: PrimeSet, r: int,
         ordered_2_3: bool = False, budget: int = 1_000_000) -> list:
    """Exhaustively list all (d, l) in the window whose X_l is a sum of r
    S-units (or, with ordered_2_3, exactly of the form 2^{n1} 3^{n2},
    n1 <= n2).  Deterministic output ordered by (d, l)."""
    if l_max < 1:
        raise ValueError("l_max must be >= 1")
    findings = []
    for d in sorted(set(int(x) for x in d_range)):
        if d <= 1 or is_square(d):
            continue
        ctx = fundamental_solution(d)
        for l, x in zip(range(1, l_max + 1), x_iter(ctx)):
            assert x == x_at(ctx, l)  # cross-check the two evaluators
            if ordered_2_3:
                t = as_2a3b_ordered(x)
                if t is None:
                    continue
                witness = (SUnitDecomposition(1, _pad_23(t, S)),)
            else:
                witness = _sum_of_r_sunits(x, S, r, budget)
                if witness is None:
                    continue
            assert sum(w.value(S) for w in witness) == x
            findings.append(OracleFinding(d, l, x, witness))
    return findings


def _pad_23(t: tuple, s: PrimeSet) -> tuple:
    """Exponent vector over s for 2^{n1} 3^{n2}."""
    exps = []
    for p in s.primes:
        if p == 2:
            exps.append(t[0])
        elif p == 3:
            exps.append(t[1])
        else:
            exps.append(0)
    return tuple(exps)


def multi_solution_d(d_max: int, l_max: int, S: PrimeSet, r: int,
                     ordered_2_3: bool = False,
                     budget: int = 1_000_000) -> list:
    """Discriminants d <= d_max with at least two distinct indices l whose
    X_l qualifies under scan's predicate."""
    by_d = {}
    for f in scan(range(2, d_max + 1), l_max, S, r, ordered_2_3, budget):
        by_d.setdefault(f.d, set()).add(f.l)
    return sorted(d for d, ls in by_d.items() if len(ls) >= 2)


def verify_gap_bound(tau: cfrac.Source, M_values: Sequence[int],
                     bits: int = DEFAULT_PREC_BITS) -> bool:
    """Enumerative check of the partial-quotient gap bound: for every M in
    M_values and every 0 < m < M, certify |m tau - n| > 1/((a(M)+2) m)
    for n the nearest integer to m tau."""
    for M in M_values:
        if M > 10 ** 4:
            raise ValueError("enumeration window capped at M <= 10^4")
        if M < 2:
            continue  # 0 < m < 1 is empty
        _, _, a_m = cfrac.a_of_M(tau, M, bits)
        b = bits
        tau_val = tau(b)
        for m in range(1, M):
            while True:
                dist = cfrac.nearest_int_distance(tau_val * m)
                rhs = Fraction(1, (a_m + 2) * m)
                if dist.lo > rhs:
                    break
                if dist.hi <= rhs:
                    return False
                b *= 2
                if b > ESCALATION_CAP_BITS:
                    raise PrecisionExhausted(
                        "gap bound undecidable at the precision cap")
                tau_val = tau(b)
    return True
