"""Pell solutions: the two independent X_l evaluators must agree, the
index polynomial must invert, and the growth sandwich must hold."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pellsu.numkernel import is_square
from pellsu.pell import (
    audit_growth,
    fundamental_solution,
    p_poly,
    p_poly_invert,
    x_at,
    x_at_binet,
    x_iter,
)

# classic fundamental solutions, including the famously large d = 61
KNOWN_FUNDAMENTALS = {
    2: (3, 2),
    3: (2, 1),
    5: (9, 4),
    6: (5, 2),
    7: (8, 3),
    8: (3, 1),
    10: (19, 6),
    13: (649, 180),
    61: (1766319049, 226153980),
    109: (158070671986249, 15140424455100),
}

nonsquare_d = st.integers(min_value=2, max_value=100).filter(
    lambda d: not is_square(d))


class TestFundamental:
    @pytest.mark.parametrize("d,expected", sorted(KNOWN_FUNDAMENTALS.items()))
    def test_known_values(self, d, expected):
        ctx = fundamental_solution(d)
        assert (ctx.X1, ctx.Y1) == expected

    @given(nonsquare_d)
    def test_solves_the_equation(self, d):
        ctx = fundamental_solution(d)
        assert ctx.X1 * ctx.X1 - d * ctx.Y1 * ctx.Y1 == 1
        assert ctx.X1 >= 2 and ctx.Y1 >= 1

    @given(nonsquare_d)
    def test_minimality_by_direct_search(self, d):
        ctx = fundamental_solution(d)
        # direct minimality check, capped so huge fundamentals stay cheap
        for x in range(2, min(ctx.X1, 3000)):
            assert not (x * x - 1) % d == 0 or not is_square((x * x - 1) // d)

    @pytest.mark.parametrize("d", [0, 1, 4, 9, 100])
    def test_rejects_bad_d(self, d):
        with pytest.raises(ValueError):
            fundamental_solution(d)


class TestXSequence:
    @given(nonsquare_d, st.integers(min_value=1, max_value=100))
    @settings(max_examples=150, deadline=None)
    def test_binet_equals_recurrence(self, d, l):
        ctx = fundamental_solution(d)
        assert x_at(ctx, l) == x_at_binet(ctx, l)

    @given(nonsquare_d)
    def test_iterator_matches_direct_evaluation(self, d):
        ctx = fundamental_solution(d)
        for l, x in zip(range(1, 12), x_iter(ctx)):
            assert x == x_at(ctx, l)

    @given(nonsquare_d, st.integers(min_value=1, max_value=40))
    def test_p_poly_agrees_with_x_at(self, d, l):
        ctx = fundamental_solution(d)
        assert p_poly(ctx.X1, l) == x_at(ctx, l)

    def test_bad_index(self):
        ctx = fundamental_solution(2)
        with pytest.raises(ValueError):
            x_at(ctx, 0)


class TestPolyInversion:
    @given(st.integers(min_value=2, max_value=10 ** 6),
           st.integers(min_value=2, max_value=25))
    def test_roundtrip(self, x1, l):
        assert p_poly_invert(p_poly(x1, l), l) == x1

    @given(st.integers(min_value=2, max_value=10 ** 5),
           st.integers(min_value=2, max_value=12))
    def test_near_misses_rejected(self, x1, l):
        n = p_poly(x1, l)
        assert p_poly_invert(n + 1, l) is None
        assert p_poly_invert(n - 1, l) is None

    def test_domain(self):
        with pytest.raises(ValueError):
            p_poly_invert(10, 1)
        with pytest.raises(ValueError):
            p_poly_invert(0, 2)


class TestGrowth:
    @pytest.mark.parametrize("d", [2, 3, 5, 8, 10, 61, 313, 397, 421, 500])
    def test_sandwich_sampled_discriminants(self, d):
        if is_square(d):
            pytest.skip("square d")
        assert audit_growth(fundamental_solution(d), 50)

    @pytest.mark.slow
    def test_sandwich_full_window(self):
        for d in range(2, 501):
            if is_square(d):
                continue
            assert audit_growth(fundamental_solution(d), 50), d
