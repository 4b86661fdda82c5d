from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from combcert import series
from combcert.exactcore import binomial
from oracles import set_partition_block_counts

X_GRID = [Fraction(v) for v in ("2", "-2", "1", "-1", "1/2", "-1/2", "1/3", "-1/3", "1/4", "0")]


def poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def integral_oracle(n, r, x, sign):
    """int_0^x r y^(r-1) (1 + sign*y)^n dy by expanding the integrand."""
    poly = [Fraction(0)] * (r - 1) + [Fraction(r)]
    for _ in range(n):
        poly = poly_mul(poly, [Fraction(1), Fraction(sign)])
    return sum(c * x ** (d + 1) / (d + 1) for d, c in enumerate(poly))


P = series.SeriesParams


class TestS:
    def test_examples(self):
        assert series.s_direct(P(2, 1, 1)) == Fraction(1, 3)
        assert series.s_closed(P(2, 1, 1)) == Fraction(1, 3) == Fraction(1, binomial(3, 1))
        assert series.s_direct(P(1, 2, Fraction(1, 2))) == Fraction(1, 6)
        for n in range(1, 6):
            assert series.s_direct(P(n, 3, 0)) == 0 == series.s_closed(P(n, 3, 0))

    def test_special_cases(self):
        for n in range(1, 12):
            for r in range(1, 7):
                assert series.s_closed(P(n, r, 1)) == Fraction(1, binomial(n + r, r))
            for x in X_GRID:
                assert series.s_closed(P(n, 1, x)) == (1 - (1 - x) ** (n + 1)) / (n + 1)

    def test_grid(self):
        for n in range(1, 11):
            for r in range(1, 7):
                for x in X_GRID:
                    p = P(n, r, x)
                    assert series.s_direct(p) == series.s_closed(p) == integral_oracle(n, r, x, -1)


class TestM:
    def test_examples(self):
        assert series.m_direct(P(2, 1, 1)) == Fraction(7, 3) == series.m_closed(P(2, 1, 1))
        assert series.m_direct(P(2, 1, -1)) == Fraction(-1, 3)
        assert series.m_direct(P(4, 2, 0)) == 0

    def test_grid_and_reflection(self):
        for n in range(1, 11):
            for r in range(1, 7):
                for x in X_GRID:
                    p = P(n, r, x)
                    assert series.m_direct(p) == series.m_closed(p) == integral_oracle(n, r, x, 1)
                    assert series.m_direct(p) == (-1) ** r * series.s_direct(P(n, r, -x))

    def test_textbook_sums(self):
        for n in range(1, 21):
            assert series.m_direct(P(n, 1, 1)) == Fraction(2 ** (n + 1) - 1, n + 1)
            assert series.s_direct(P(n, 1, 1)) == Fraction(1, n + 1)
            # same sums written as sum_r C(n,r)/(r+1) and sum_r (-1)^r C(n,r)/(r+1)
            assert sum(Fraction(binomial(n, r), r + 1) for r in range(n + 1)) == Fraction(2 ** (n + 1) - 1, n + 1)
            assert sum(Fraction((-1) ** r * binomial(n, r), r + 1) for r in range(n + 1)) == Fraction(1, n + 1)

    @given(
        st.integers(1, 12),
        st.integers(1, 8),
        st.fractions(min_value=-5, max_value=5, max_denominator=12),
    )
    def test_random(self, n, r, x):
        p = P(n, r, x)
        assert series.m_direct(p) == series.m_closed(p)
        assert series.s_direct(p) == series.s_closed(p)


def test_params_validation():
    with pytest.raises(ValueError):
        P(0, 1, 1)
    with pytest.raises(ValueError):
        series.PowerSumParams(1, 1, 0, 2, 2)
    with pytest.raises(ValueError):
        series.PowerSumParams(1, 1, 1, 2, 0)


class TestTelescope:
    def test_examples(self):
        assert series.telescope_product_series(1, 1, 9) == Fraction(9, 10)
        assert series.telescope_limit(1, 1) == 1
        assert Fraction(2, 3 * binomial(5, 3)) == Fraction(1, 6) - Fraction(1, 10) == Fraction(1, 15)
        assert series.telescope_summand_identity(2, 3)

    def test_closed_form_grid(self):
        for m in range(1, 9):
            for n in range(1, 9):
                limit = series.telescope_limit(m, n)
                prev_tail = None
                for upper in range(m, 51):
                    part = series.telescope_product_series(m, n, upper)
                    assert part == series.telescope_closed(m, n, upper)
                    tail = limit - part
                    assert tail > 0
                    if prev_tail is not None:
                        assert tail < prev_tail
                    prev_tail = tail
                assert series.telescope_summand_identity(n, m)

    def test_bad_args(self):
        with pytest.raises(ValueError):
            series.telescope_product_series(3, 1, 2)


PS = series.PowerSumParams
GRID = [(1, 1, 1), (0, 1, 1), (2, -1, 3), (Fraction(-1, 2), 3, Fraction(1, 4)), (Fraction(1, 3), -2, Fraction(5, 2))]


class TestPowerSum:
    def test_putnam(self):
        assert series.power_sum_both_sides(PS(1, 1, 1, 3, 2)) == (24, 24)
        for n in range(2, 15):
            lhs, rhs = series.power_sum_both_sides(PS(1, 1, 1, n, 2))
            assert lhs == rhs == n * (n + 1) * Fraction(2) ** (n - 2)

    def test_a_zero(self):
        assert series.power_sum_both_sides(PS(0, 1, 1, 3, 3)) == (27, 27)

    def test_grid(self):
        for a, b, m in GRID:
            for n in range(1, 9):
                for k in range(1, 9):
                    lhs, rhs = series.power_sum_both_sides(PS(a, b, m, n, k))
                    assert lhs == rhs
                    # independent evaluation with Stirling numbers from set-partition enumeration
                    s = set_partition_block_counts(k)
                    bm = Fraction(b) * Fraction(m)
                    alt = Fraction(0)
                    for i in range(1, k + 1):
                        perm = 1
                        for t in range(i):
                            perm *= n - t
                        alt += s[i] * perm * (Fraction(a) + bm) ** (n - i) * bm**i
                    assert lhs == alt

    def test_at_one(self):
        for n in range(1, 12):
            for k in range(1, 10):
                assert series.power_sum_at_one(n, k) == sum(binomial(n, r) * r**k for r in range(1, n + 1))
