"""S-unit decomposition and enumeration against brute-force references."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pellsu.sunit import (
    PrimeSet,
    ResourceBudgetExceeded,
    SUnitDecomposition,
    as_2a3b_ordered,
    decompose,
    enumerate_sunit_sums,
    max_exponent,
    s_units_upto,
)


class TestPrimeSet:
    def test_valid(self):
        s = PrimeSet((2, 3, 5))
        assert len(s) == 3 and list(s) == [2, 3, 5]

    @pytest.mark.parametrize("primes", [(), (4,), (3, 2), (2, 2), (2, 9)])
    def test_invalid(self, primes):
        with pytest.raises(ValueError):
            PrimeSet(primes)


class TestDecompose:
    @given(st.integers(min_value=0, max_value=12),
           st.integers(min_value=0, max_value=8),
           st.sampled_from([1, -1]))
    def test_roundtrip(self, e2, e3, sign):
        s = PrimeSet((2, 3))
        n = sign * 2 ** e2 * 3 ** e3
        dec = decompose(n, s)
        assert dec == SUnitDecomposition(sign, (e2, e3))
        assert dec.value(s) == n

    @given(st.integers(min_value=2, max_value=50000))
    def test_matches_brute_force(self, n):
        s = PrimeSet((2, 3))
        m = n
        for p in (2, 3):
            while m % p == 0:
                m //= p
        dec = decompose(n, s)
        assert (dec is not None) == (m == 1)

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            decompose(0, PrimeSet((2, 3)))


class TestOrdered23:
    @given(st.integers(min_value=0, max_value=10),
           st.integers(min_value=0, max_value=10))
    def test_exhaustive_forms(self, n1, n2):
        n = 2 ** n1 * 3 ** n2
        expected = (n1, n2) if n1 <= n2 else None
        assert as_2a3b_ordered(n) == expected

    @given(st.integers(min_value=1, max_value=10 ** 6))
    def test_never_false_positive(self, n):
        t = as_2a3b_ordered(n)
        if t is not None:
            n1, n2 = t
            assert n1 <= n2 and 2 ** n1 * 3 ** n2 == n

    def test_domain(self):
        with pytest.raises(ValueError):
            as_2a3b_ordered(0)


class TestEnumeration:
    @given(st.integers(min_value=1, max_value=2000))
    def test_units_upto_matches_filter(self, bound):
        s = PrimeSet((2, 3))
        expected = sorted(n for n in range(1, bound + 1)
                          if decompose(n, s) is not None)
        assert s_units_upto(s, bound) == expected

    def test_sum_enumeration_vs_brute_force(self):
        s = PrimeSet((2, 3))
        bound, r = 60, 2
        got = {v for v, _ in enumerate_sunit_sums(s, r, bound)}
        units = s_units_upto(s, r * bound)
        signed = units + [-u for u in units]
        expected = set()
        for a in signed:
            for b in signed:
                if 1 <= a + b <= bound:
                    expected.add(a + b)
        assert got == expected

    def test_witnesses_reconstruct_value(self):
        s = PrimeSet((2, 3))
        for v, wits in enumerate_sunit_sums(s, 2, 40):
            for wit in wits:
                assert sum(w.value(s) for w in wit) == v

    def test_budget_enforced(self):
        s = PrimeSet((2, 3, 5, 7))
        with pytest.raises(ResourceBudgetExceeded):
            list(enumerate_sunit_sums(s, 3, 10 ** 6, budget=1000))


class TestMaxExponent:
    def test_basic(self):
        decs = [SUnitDecomposition(1, (3, 1)), SUnitDecomposition(-1, (0, 5))]
        assert max_exponent(decs) == 5
        with pytest.raises(ValueError):
            max_exponent([])
