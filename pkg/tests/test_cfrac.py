"""Certified continued fractions: frozen expansion of log2/log3, the
determinant identity, agreement with the exact expansion of sqrt(d), and
the nearest-integer distance enclosure."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pellsu import cfrac
from pellsu.numkernel import (
    CertifiedReal,
    certified_log,
    is_square,
    sqrt_enclosure,
)
from conftest import load_golden


def tau_log2_log3(bits):
    return certified_log(2, bits) / certified_log(3, bits)


def sqrt_cf_exact(d, count):
    """Exact partial quotients of sqrt(d) via the integer PQa recursion —
    an independent reference that never touches interval arithmetic."""
    import math
    a0 = math.isqrt(d)
    out = [a0]
    m, den, a = 0, 1, a0
    while len(out) < count:
        m = den * a - m
        den = (d - m * m) // den
        a = (a0 + m) // den
        out.append(a)
    return out


class TestQuotients:
    def test_log2_log3_matches_frozen_prefix(self):
        golden = load_golden("cf_log2_log3_quotients.json")
        exp = cfrac.expand(tau_log2_log3, len(golden["quotients"]), 256)
        assert exp.quotients == golden["quotients"]
        assert not exp.truncated
        assert exp.check_determinant()

    def test_log2_log3_survives_low_starting_precision(self):
        # escalation must deliver the same certified quotients even when the
        # starting enclosure is far too coarse for 60 of them
        golden = load_golden("cf_log2_log3_quotients.json")
        exp = cfrac.expand(tau_log2_log3, 60, start_bits=64)
        assert exp.quotients == golden["quotients"][:60]

    @pytest.mark.parametrize("d", [2, 3, 7, 13, 19, 31, 61, 94])
    def test_sqrt_matches_exact_integer_recursion(self, d):
        exp = cfrac.expand(lambda b: sqrt_enclosure(d, b), 40)
        assert exp.quotients == sqrt_cf_exact(d, 40)
        assert exp.check_determinant()

    def test_rational_input_rejected(self):
        src = cfrac.constant_source(CertifiedReal.exact(Fraction(7, 3)))
        with pytest.raises(ValueError):
            next(cfrac.quotient_stream(src))

    def test_convergents_approximate(self):
        exp = cfrac.expand(lambda b: sqrt_enclosure(2, b), 20)
        for p, q in exp.convergents[2:]:
            # |sqrt(2) - p/q| < 1/q^2, checked exactly on squares
            err_num = abs(2 * q * q - p * p)  # |2 - (p/q)^2| q^2
            assert err_num <= 2 * q  # implies |sqrt2 - p/q| < 1/q^2


class TestAofM:
    def test_known_values_log2_log3(self):
        # the two published moduli both see max partial quotient 55
        for M in (862 * 10 ** 26, 178 * 10 ** 17):
            n, q_n, a_m = cfrac.a_of_M(tau_log2_log3, M)
            assert a_m == 55
            assert q_n > M

    def test_sqrt2_all_quotients_small(self):
        # sqrt(2) = [1; 2, 2, 2, ...]: a(M) = 2 for every M >= 2
        for M in (2, 10, 10 ** 6):
            _, q_n, a_m = cfrac.a_of_M(lambda b: sqrt_enclosure(2, b), M)
            assert a_m == 2 and q_n > M

    def test_q_n_is_minimal(self):
        M = 10 ** 6
        n, q_n, _ = cfrac.a_of_M(tau_log2_log3, M)
        exp = cfrac.expand(tau_log2_log3, n + 1)
        assert exp.convergents[n][1] == q_n
        assert exp.convergents[n - 1][1] <= M < q_n

    def test_domain(self):
        with pytest.raises(ValueError):
            cfrac.a_of_M(tau_log2_log3, 0)


class TestNearestIntDistance:
    @given(st.fractions(min_value=-10, max_value=10, max_denominator=997),
           st.fractions(min_value=0, max_value=Fraction(1, 5),
                        max_denominator=64))
    @settings(max_examples=200)
    def test_enclosure_contains_true_distance(self, x, w):
        iv = CertifiedReal(x, x + w, 128)
        enc = cfrac.nearest_int_distance(iv)
        # the true ||.|| of any point in the interval must be enclosed
        for t in (iv.lo, iv.hi, iv.midpoint):
            n = (t + Fraction(1, 2)).__floor__()
            assert enc.lo <= abs(t - n) <= enc.hi

    def test_exact_range_with_integer_inside(self):
        enc = cfrac.nearest_int_distance(CertifiedReal(Fraction(19, 10),
                                                       Fraction(21, 10)))
        assert enc.lo == 0 and enc.hi == Fraction(1, 10)

    def test_exact_range_with_half_integer_inside(self):
        enc = cfrac.nearest_int_distance(CertifiedReal(Fraction(24, 10),
                                                       Fraction(26, 10)))
        assert enc.lo == Fraction(4, 10) and enc.hi == Fraction(1, 2)

    def test_wide_interval_full_range(self):
        enc = cfrac.nearest_int_distance(CertifiedReal(0, 5))
        assert enc.lo == 0 and enc.hi == Fraction(1, 2)


class TestDeterminantIdentity:
    @given(st.integers(min_value=2, max_value=300).filter(
        lambda d: not is_square(d)))
    @settings(max_examples=60, deadline=None)
    def test_holds_for_sqrt_d(self, d):
        exp = cfrac.expand(lambda b: sqrt_enclosure(d, b), 25)
        assert exp.check_determinant()

    def test_detects_corruption(self):
        exp = cfrac.expand(lambda b: sqrt_enclosure(2, b), 10)
        p, q = exp.convergents[5]
        exp.convergents[5] = (p + 1, q)
        assert not exp.check_determinant()
