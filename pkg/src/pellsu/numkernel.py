"""Exact and certified arithmetic kernel.

Exact layers: Python ints, ``fractions.Fraction`` and quadratic surds
a + b*sqrt(d) over a fixed non-square d.  On top of those sits
``CertifiedReal``, an interval enclosure [lo, hi] with exact rational
endpoints.  Interval arithmetic is exact (no rounding step is ever
needed because endpoints stay rational); only transcendental entry
points (log, exp, e) introduce a radius, which is padded conservatively.

Floors and comparisons either return a provably correct answer or ask
the caller to refine precision; nothing is silently guessed.
"""

from __future__ import annotations

import enum
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Union

import mpmath

DEFAULT_PREC_BITS = int(os.environ.get("PELLSU_PREC_BITS", "256"))
ESCALATION_CAP_BITS = 1 << 20

# extra working bits for mpmath evaluations, so that the advertised
# radius (2^(1-bits)|log x| + 2^-bits) dominates the true rounding error
_GUARD_BITS = 32

Exact = Union[int, Fraction]


class PrecisionExhausted(ArithmeticError):
    """Raised when escalating up to the cap cannot resolve an answer."""


class Ternary(enum.Enum):
    LESS = -1
    INDETERMINATE = 0
    GREATER = 1


def is_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


# ---------------------------------------------------------------------------
# quadratic surds


@dataclass(frozen=True)
class QuadraticSurd:
    """a + b*sqrt(d) with rational a, b and a fixed non-square d > 1."""

    a: Fraction
    b: Fraction
    d: int

    def __post_init__(self):
        if self.d <= 1 or is_square(self.d):
            raise ValueError(f"d must be a non-square integer > 1, got {self.d}")
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    def _check_field(self, other: "QuadraticSurd") -> None:
        if self.d != other.d:
            raise ValueError(f"mixed surd fields: sqrt({self.d}) vs sqrt({other.d})")

    def __mul__(self, other):
        if isinstance(other, QuadraticSurd):
            self._check_field(other)
            return QuadraticSurd(
                self.a * other.a + self.b * other.b * self.d,
                self.a * other.b + self.b * other.a,
                self.d,
            )
        if isinstance(other, (int, Fraction)):
            return QuadraticSurd(self.a * other, self.b * other, self.d)
        return NotImplemented

    __rmul__ = __mul__

    def __add__(self, other):
        if isinstance(other, QuadraticSurd):
            self._check_field(other)
            return QuadraticSurd(self.a + other.a, self.b + other.b, self.d)
        if isinstance(other, (int, Fraction)):
            return QuadraticSurd(self.a + other, self.b, self.d)
        return NotImplemented

    def conjugate(self) -> "QuadraticSurd":
        return QuadraticSurd(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.b * self.b * self.d

    def is_rational(self) -> bool:
        return self.b == 0

    def compare_rational(self, q: Exact) -> int:
        """Exact sign of (self - q): -1, 0 or +1."""
        t = Fraction(q) - self.a  # compare b*sqrt(d) against t
        if self.b == 0:
            return -1 if t > 0 else (1 if t < 0 else 0)
        if self.b > 0:
            if t <= 0:
                return 1
            # b*sqrt(d) vs t, both positive: compare squares
            lhs, rhs = self.b * self.b * self.d, t * t
            return -1 if lhs < rhs else (1 if lhs > rhs else 0)
        if t >= 0:
            return -1
        lhs, rhs = self.b * self.b * self.d, t * t
        return 1 if lhs < rhs else (-1 if lhs > rhs else 0)

    def sign(self) -> int:
        return self.compare_rational(0)

    def is_positive(self) -> bool:
        return self.compare_rational(0) > 0


def surd_pow(x: QuadraticSurd, k: int) -> QuadraticSurd:
    """Exact k-th power by binary exponentiation, k >= 0."""
    if k < 0:
        raise ValueError("negative exponent")
    result = QuadraticSurd(Fraction(1), Fraction(0), x.d)
    base = x
    while k:
        if k & 1:
            result = result * base
        base = base * base
        k >>= 1
    return result


# ---------------------------------------------------------------------------
# certified reals


class CertifiedReal:
    """Interval [lo, hi] with exact Fraction endpoints.

    The true value is guaranteed to lie inside the interval.  bits is the
    nominal precision at which the enclosure was produced; it drives
    refinement decisions upstream but carries no correctness meaning of
    its own.
    """

    __slots__ = ("lo", "hi", "bits")

    def __init__(self, lo: Exact, hi: Exact, bits: int = DEFAULT_PREC_BITS):
        lo = Fraction(lo)
        hi = Fraction(hi)
        if lo > hi:
            raise ValueError("empty interval")
        self.lo = lo
        self.hi = hi
        self.bits = bits

    @classmethod
    def exact(cls, q: Exact, bits: int = DEFAULT_PREC_BITS) -> "CertifiedReal":
        q = Fraction(q)
        return cls(q, q, bits)

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def radius(self) -> Fraction:
        return (self.hi - self.lo) / 2

    def contains(self, q: Exact) -> bool:
        return self.lo <= Fraction(q) <= self.hi

    def __repr__(self):
        return f"CertifiedReal({float(self.midpoint)!r} ± {float(self.radius)!r}, bits={self.bits})"

    def __float__(self):
        return float(self.midpoint)

    def _coerce(self, other) -> "CertifiedReal":
        if isinstance(other, CertifiedReal):
            return other
        if isinstance(other, (int, Fraction)):
            return CertifiedReal.exact(other, self.bits)
        raise TypeError(f"cannot mix CertifiedReal with {type(other)!r}")

    def __add__(self, other):
        o = self._coerce(other)
        return CertifiedReal(self.lo + o.lo, self.hi + o.hi, min(self.bits, o.bits))

    __radd__ = __add__

    def __neg__(self):
        return CertifiedReal(-self.hi, -self.lo, self.bits)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        products = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return CertifiedReal(min(products), max(products), min(self.bits, o.bits))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o.lo <= 0 <= o.hi:
            raise ZeroDivisionError("divisor interval contains zero")
        inv = CertifiedReal(1 / o.hi, 1 / o.lo, o.bits)
        return self * inv

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __abs__(self):
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        return CertifiedReal(Fraction(0), max(-self.lo, self.hi), self.bits)

    def is_positive(self) -> bool:
        """Certified strict positivity (interval entirely above zero)."""
        return self.lo > 0

    def is_negative(self) -> bool:
        return self.hi < 0


def certified_to_json(x: CertifiedReal, digits: int = 40) -> dict:
    """Serialize an enclosure as decimal strings (midpoint outward-true:
    the decimal radius is padded to cover decimal conversion error)."""
    import decimal
    with decimal.localcontext() as ctx:
        ctx.prec = digits
        mid = decimal.Decimal(x.midpoint.numerator) / decimal.Decimal(x.midpoint.denominator)
        ctx.rounding = decimal.ROUND_CEILING
        rad = decimal.Decimal(x.radius.numerator) / decimal.Decimal(x.radius.denominator)
        ulp = abs(mid).scaleb(1 - digits) if mid != 0 else decimal.Decimal(0)
        rad = rad + ulp
    return {"decimal_midpoint": str(mid), "decimal_radius": str(rad), "bits": x.bits}


def certified_compare(a: CertifiedReal, b: CertifiedReal) -> Ternary:
    if a.hi < b.lo:
        return Ternary.LESS
    if a.lo > b.hi:
        return Ternary.GREATER
    return Ternary.INDETERMINATE


RefineFn = Callable[[int], CertifiedReal]


def certified_floor(x: CertifiedReal, refine: RefineFn | None = None,
                    cap_bits: int = ESCALATION_CAP_BITS) -> int:
    """floor(x), escalating precision through `refine` while ambiguous."""
    while True:
        f_lo = x.lo.__floor__()
        f_hi = x.hi.__floor__()
        if f_lo == f_hi:
            return f_lo
        if refine is None:
            raise PrecisionExhausted(
                f"floor ambiguous in [{float(x.lo)}, {float(x.hi)}] and no refinement available")
        bits = 2 * x.bits
        if bits > cap_bits:
            raise PrecisionExhausted(
                f"floor still ambiguous at the {cap_bits}-bit escalation cap")
        x = refine(bits)
        if x.bits < bits:
            x = CertifiedReal(x.lo, x.hi, bits)


# ---------------------------------------------------------------------------
# sqrt / log / exp entry points


def sqrt_enclosure(n: int, bits: int = DEFAULT_PREC_BITS) -> CertifiedReal:
    """Exact dyadic enclosure of sqrt(n), width 2^-bits."""
    if n < 0:
        raise ValueError("sqrt of negative integer")
    s = math.isqrt(n << (2 * bits))
    scale = Fraction(1, 1 << bits)
    return CertifiedReal(s * scale, (s + 1) * scale, bits)


def surd_enclosure(x: QuadraticSurd, bits: int = DEFAULT_PREC_BITS) -> CertifiedReal:
    root = sqrt_enclosure(x.d, bits)
    return CertifiedReal.exact(x.a, bits) + CertifiedReal.exact(x.b, bits) * root


def _mpf_to_fraction(x) -> Fraction:
    # read the mantissa/exponent tuple directly: wrapping through
    # mpmath.mpf() would re-round to the *global* working precision,
    # silently discarding the guard bits the caller computed with
    sign, man, exp, _ = x._mpf_
    man, exp = int(man), int(exp)  # mpmath's gmpy backend yields mpz here
    if man == 0:
        return Fraction(0)
    v = Fraction(man) * (Fraction(2) ** exp)
    return -v if sign else v


def _log_point(q: Fraction, bits: int) -> tuple[Fraction, Fraction]:
    """(midpoint, radius) enclosure of log(q) for exact rational q > 0."""
    if q <= 0:
        raise ValueError("log of non-positive value")
    if q == 1:
        return Fraction(0), Fraction(0)
    with mpmath.workprec(bits + _GUARD_BITS):
        val = mpmath.log(mpmath.mpf(q.numerator) / mpmath.mpf(q.denominator))
    mid = _mpf_to_fraction(val)
    rad = abs(mid) * Fraction(2) ** (1 - bits) + Fraction(2) ** (-bits)
    return mid, rad


LogArg = Union[int, Fraction, QuadraticSurd, CertifiedReal]


def certified_log(x: LogArg, bits: int = DEFAULT_PREC_BITS) -> CertifiedReal:
    """Certified enclosure of log(x); x may be rational, a surd, or an interval."""
    if isinstance(x, QuadraticSurd):
        if not x.is_positive():
            raise ValueError("log of non-positive surd")
        enc = surd_enclosure(x, bits + x.d.bit_length())
        while enc.lo <= 0:  # cancellation a ~ -b*sqrt(d); widen working precision
            nb = 2 * enc.bits
            if nb > ESCALATION_CAP_BITS:
                raise PrecisionExhausted("cannot separate positive surd from zero")
            enc = surd_enclosure(x, nb)
        return certified_log(enc, bits)
    if isinstance(x, CertifiedReal):
        if x.lo <= 0:
            raise ValueError("log of interval touching zero")
        lo_mid, lo_rad = _log_point(x.lo, bits)
        hi_mid, hi_rad = _log_point(x.hi, bits)
        return CertifiedReal(lo_mid - lo_rad, hi_mid + hi_rad, bits)
    q = Fraction(x)
    mid, rad = _log_point(q, bits)
    return CertifiedReal(mid - rad, mid + rad, bits)


def _exp_point(q: Fraction, bits: int) -> tuple[Fraction, Fraction]:
    with mpmath.workprec(bits + _GUARD_BITS):
        val = mpmath.exp(mpmath.mpf(q.numerator) / mpmath.mpf(q.denominator))
    mid = _mpf_to_fraction(val)
    rad = abs(mid) * Fraction(2) ** (1 - bits)
    return mid, rad


def certified_exp(x: Union[Exact, CertifiedReal], bits: int = DEFAULT_PREC_BITS) -> CertifiedReal:
    if not isinstance(x, CertifiedReal):
        x = CertifiedReal.exact(x, bits)
    lo_mid, lo_rad = _exp_point(x.lo, bits)
    hi_mid, hi_rad = _exp_point(x.hi, bits)
    return CertifiedReal(lo_mid - lo_rad, hi_mid + hi_rad, bits)


def certified_e(bits: int = DEFAULT_PREC_BITS) -> CertifiedReal:
    return certified_exp(1, bits)


def certified_pow(base: Union[Exact, CertifiedReal], exponent: CertifiedReal,
                  bits: int = DEFAULT_PREC_BITS) -> CertifiedReal:
    """base**exponent for certified-positive base, via exp(exponent*log(base))."""
    if not isinstance(base, CertifiedReal):
        base = CertifiedReal.exact(base, bits)
    return certified_exp(exponent * certified_log(base, bits), bits)
