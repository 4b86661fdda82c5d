import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from combcert import wallis
from combcert.exactcore import binomial, pi_enclosure


def f_product(n):
    """f(n) straight from the product of (1 - 1/(2i))."""
    return math.prod((1 - Fraction(1, 2 * i) for i in range(1, n + 1)), start=Fraction(1))


def test_initial_state_and_advance():
    s1 = wallis.WallisState.initial()
    assert s1.f == Fraction(1, 2) and s1.sum_sq == Fraction(1, 4)
    s2 = wallis.advance(s1)
    assert s2.n == 2
    assert s2.f == Fraction(3, 8)
    assert s2.sum_sq == Fraction(19, 64)


def test_f3_two_routes():
    assert f_product(3) == Fraction(5, 16)
    assert wallis.wallis_f(3) == Fraction(binomial(6, 3), 4**3) == Fraction(5, 16)


def test_states_match_direct_sums():
    for st_ in wallis.states(40):
        n = st_.n
        fs = [f_product(k) for k in range(1, n + 1)]
        assert st_.f == fs[-1]
        assert st_.sum_sq == sum(f * f / (2 * k - 1) for k, f in enumerate(fs, start=1))
        assert st_.sum_lin == sum(f / (2 * k - 1) for k, f in enumerate(fs, start=1))
        assert st_.sum_tel == sum(Fraction(1, 4 * k * k - 1) for k in range(1, n + 1))


def test_state_invariants():
    prev = None
    for s in wallis.states(300):
        assert 0 < s.f < 1
        if prev:
            assert s.f < prev.f
            assert s.sum_sq > prev.sum_sq and s.sum_lin > prev.sum_lin and s.sum_tel > prev.sum_tel
        prev = s


def test_envelope_examples():
    assert wallis.envelopes(1) == (Fraction(1, 2), Fraction(3, 4))
    assert wallis.envelopes(2)[1] == Fraction(45, 64)


def test_envelopes_monotone_sandwich():
    prev = wallis.envelopes(1)
    for n in range(2, 400):
        lo, hi = wallis.envelopes(n)
        assert prev[0] < lo < hi < prev[1]
        assert hi - lo == wallis.wallis_f(n) ** 2
        assert hi / prev[1] == Fraction((2 * n - 1) * (2 * n + 1), (2 * n) ** 2)
        assert lo / prev[0] == Fraction((2 * n - 1) ** 2, 4 * (n - 1) * n)
        prev = (lo, hi)


def test_identity_examples():
    assert wallis.identity_check(1)
    assert wallis.identity_check(2)
    s2 = wallis.state_at(2)
    assert 1 - s2.sum_sq == Fraction(45, 64) == 5 * s2.f**2


def test_linear_and_quarter_examples():
    s3 = wallis.state_at(3)
    assert s3.sum_lin == Fraction(1, 2) + Fraction(1, 8) + Fraction(1, 16) == Fraction(11, 16)
    assert wallis.linear_sum_check(1) and wallis.linear_sum_check(3)
    assert s3.sum_tel == Fraction(3, 7)
    assert wallis.telescope_quarter_check(1) and wallis.telescope_quarter_check(3)
    for k in range(1, 30):
        assert wallis.quarter_summand_identity(k)


def test_quarter_sum_stays_below_half():
    for s in wallis.states(100):
        assert Fraction(1, 2) - s.sum_tel == Fraction(1, 2 * (2 * s.n + 1))


def test_bad_input():
    with pytest.raises(ValueError):
        wallis.envelopes(0)
    with pytest.raises(ValueError):
        wallis.certify_inequality(0)


class TestCertify:
    def test_n1(self):
        # needs pi in (8/3, 4)
        lo, hi = wallis.envelopes(1)
        assert 2 / hi == Fraction(8, 3) and 2 / lo == 4
        r = wallis.certify_inequality(1, bits=8)
        assert r.status == "pass" and r.lower_holds and r.upper_holds and r.bits_used == 8
        pi = pi_enclosure(8)
        assert r.margin == min(pi.lo - Fraction(8, 3), 4 - pi.hi)

    def test_n100(self):
        r = wallis.certify_inequality(100, bits=8)
        assert r.proved and r.bits_used <= 16

    def test_escalation(self):
        # at n=10000 the margin is ~1e-4, so 8 bits cannot decide
        stuck = wallis.certify_inequality(10000, bits=8, cap=8)
        assert stuck.status == "inconclusive"
        assert not (stuck.lower_holds and stuck.upper_holds)
        done = wallis.certify_inequality(10000, bits=8, cap=4096)
        assert done.proved and done.bits_used > 8

    def test_sweep_matches_single(self):
        for r in wallis.certify_sweep(60, bits=8):
            single = wallis.certify_inequality(r.n, bits=8)
            assert r == single

    def test_refutes_false_pi(self, monkeypatch):
        # with a bogus "pi" of 5 the upper side must be refuted, not left undecided
        from combcert.exactcore import RationalInterval

        monkeypatch.setattr(wallis, "pi_enclosure", lambda bits: RationalInterval(Fraction(5), Fraction(5)))
        r = wallis.certify_inequality(3)
        assert r.status == "fail" and r.lower_holds and not r.upper_holds

    @settings(max_examples=30, deadline=None)
    @given(st.integers(1, 3000))
    def test_float_agreement(self, n):
        r = wallis.certify_inequality(n, bits=8)
        f = float(wallis.wallis_f(n))
        assert r.proved
        assert 1 / math.sqrt(n * math.pi + math.pi / 2) < f < 1 / math.sqrt(n * math.pi)


def test_two_over_pi_inside_envelopes():
    enc = wallis.two_over_pi_enclosure(128)
    for n in (1, 10, 100, 1000):
        lo, hi = wallis.envelopes(n)
        assert lo < enc.lo and enc.hi < hi
