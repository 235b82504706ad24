"""S-unit decompositions over a fixed prime set, and enumeration of
integers expressible as sums of a fixed number of S-units."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

import sympy


class ResourceBudgetExceeded(RuntimeError):
    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial if partial is not None else []


@dataclass(frozen=True)
class PrimeSet:
    primes: tuple

    def __post_init__(self):
        ps = tuple(int(p) for p in self.primes)
        if not ps:
            raise ValueError("prime set must be non-empty")
        if list(ps) != sorted(set(ps)):
            raise ValueError("primes must be strictly increasing")
        for p in ps:
            if not sympy.isprime(p):
                raise ValueError(f"{p} is not prime")
        object.__setattr__(self, "primes", ps)

    def __len__(self):
        return len(self.primes)

    def __iter__(self):
        return iter(self.primes)


@dataclass(frozen=True)
class SUnitDecomposition:
    sign: int
    exponents: tuple

    def __post_init__(self):
        if self.sign not in (-1, 1):
            raise ValueError("sign must be +1 or -1")
        object.__setattr__(self, "exponents", tuple(int(e) for e in self.exponents))
        if any(e < 0 for e in self.exponents):
            raise ValueError("exponents must be non-negative")

    def value(self, s: PrimeSet) -> int:
        v = 1
        for p, e in zip(s.primes, self.exponents):
            v *= p ** e
        return self.sign * v


def decompose(n: int, s: PrimeSet) -> Optional[SUnitDecomposition]:
    """The S-unit decomposition of n, or None if n is not an S-unit."""
    if n == 0:
        raise ValueError("0 is not an S-unit")
    sign = 1 if n > 0 else -1
    m = abs(n)
    exps = []
    for p in s.primes:
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        exps.append(e)
    if m != 1:
        return None
    return SUnitDecomposition(sign, tuple(exps))


def as_2a3b_ordered(n: int) -> Optional[tuple]:
    """(n1, n2) with n = 2^n1 * 3^n2 and n1 <= n2, else None."""
    if n < 1:
        raise ValueError("n must be positive")
    n1 = 0
    while n % 2 == 0:
        n //= 2
        n1 += 1
    n2 = 0
    while n % 3 == 0:
        n //= 3
        n2 += 1
    if n != 1 or n1 > n2:
        return None
    return (n1, n2)


def max_exponent(decs: Sequence[SUnitDecomposition]) -> int:
    if not decs:
        raise ValueError("empty decomposition sequence")
    return max(max(d.exponents) for d in decs)


def s_units_upto(s: PrimeSet, bound: int) -> list:
    """All positive S-units <= bound, ascending."""
    values = [1]
    for p in s.primes:
        extended = []
        for v in values:
            while v <= bound:
                extended.append(v)
                v *= p
        values = extended
    return sorted(values)


def enumerate_sunit_sums(s: PrimeSet, r: int, bound: int,
                         witness_cap: int = 16,
                         budget: int = 2_000_000) -> Iterator[tuple]:
    """Every positive integer <= bound that is a sum of r S-units with all
    term magnitudes <= r*bound, with witnesses, ascending by value.

    This is exhaustive over representations with positive terms (each such
    term is at most the value itself).  Signed representations are searched
    within the same magnitude cap; cancelling pairs beyond it are out of
    enumeration range.
    """
    if r < 1 or bound < 1:
        raise ValueError("need r >= 1 and bound >= 1")
    magnitudes = s_units_upto(s, r * bound)
    terms = [m for m in magnitudes] + [-m for m in magnitudes]
    found = {}
    combos = itertools.combinations_with_replacement(sorted(terms), r)
    for i, combo in enumerate(combos):
        if i >= budget:
            raise ResourceBudgetExceeded(
                f"enumeration budget {budget} exceeded", partial=sorted(found))
        v = sum(combo)
        if 1 <= v <= bound:
            wits = found.setdefault(v, [])
            if len(wits) < witness_cap:
                wits.append(tuple(decompose(t, s) for t in combo))
    for v in sorted(found):
        yield v, found[v]
