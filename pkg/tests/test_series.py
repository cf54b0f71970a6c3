import math
from fractions import Fraction as F

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from saddlecoef import series as ps
from saddlecoef.series import TruncatedSeries as S


def long_division(num, den, n):
    """Schoolbook quotient of two coefficient lists with den[0] != 0."""
    rem = list(num) + [F(0)] * n
    out = []
    for k in range(n):
        q = rem[k] / den[0]
        out.append(q)
        for i, d in enumerate(den):
            if k + i < len(rem):
                rem[k + i] -= q * d
    return out


def test_products():
    assert ps.mul(S([1, 1], 3), S([1, -1], 3)) == S([1, 0, -1])
    x = S.variable(3)
    assert (x * x).coeffs == (0, 0, 1)
    e = ps.exp_series(4)
    assert (e * e).coeffs == (1, 2, 2, F(4, 3))


def test_division_by_long_division_oracle():
    n = 8
    num = [0, 0, F(1, 2)] + [0] * (n + 2)
    den = [0, 0] + [F(1, math.factorial(k)) for k in range(2, n + 4)]
    got = ps.div(S(num), S(den))
    assert list(got.coeffs[:n]) == long_division(num[2:], den[2:], n)
    assert got[0] == 1 and got[1] == F(-1, 3)
    # t^2 coefficient is 1/36; 1/18 would not satisfy the defining product
    assert got[2] == F(1, 36)


def test_division_simple_cases():
    assert ps.div(S.one(5), S([1, -1], 5)).coeffs == (1,) * 5
    x = S.variable(4)
    with pytest.raises(ps.LeadingOrderMismatch):
        ps.div(x, x * x)
    with pytest.raises(ps.DivisionByZeroSeries):
        ps.div(x, S.zero(4))


def test_exp_log_basics():
    assert ps.exp(S.variable(4)).coeffs == (1, 1, F(1, 2), F(1, 6))
    assert ps.log(S([1, 1], 4)).coeffs == (0, 1, F(-1, 2), F(1, 3))
    with pytest.raises(ps.BadConstantTerm) as info:
        ps.exp(S([1, 1], 3))
    assert info.value.value == 1
    with pytest.raises(ps.BadConstantTerm):
        ps.log(S([2, 1], 3))


def test_power_identity_and_halves():
    a = S([1, F(-1, 3), F(1, 36), F(1, 540)])
    assert ps.pow_half_integer(a, 2) == a
    root = ps.pow_half_integer(S([1, 1], 6), 1)
    assert ps.mul(root, root) == S([1, 1], 6)


def test_compose_and_reversion():
    n = 8
    assert ps.compose(ps.log1p_series(n), ps.expm1_series(n)) == S.variable(n)
    x = S.variable(4)
    assert ps.compose(x * x, S([0, 1, 1], 4)).coeffs == (0, 0, 1, 2)
    assert ps.reversion(S.variable(6)) == S.variable(6)
    assert ps.reversion(ps.expm1_series(10)) == ps.log1p_series(10)
    with pytest.raises(ps.ZeroLinearTerm):
        ps.reversion(x * x)


def test_coefficient_extraction():
    assert ps.coefficient(ps.div(S.one(4), S([1, -1], 4)), 2) == 1
    assert ps.coefficient(ps.exp_series(5), 3) == F(1, 6)
    with pytest.raises(ps.OrderExceeded):
        ps.coefficient(S.one(3), 3)


def test_float_mode_matches_exact():
    with mpmath.workprec(256):
        a = S([1, F(1, 3), F(-2, 7), F(5, 11), F(1, 13)])
        fa = a.to_float()
        assert not fa.exact
        for ex, fl in zip(ps.log(a).coeffs, ps.log(fa).coeffs):
            assert abs(ps.to_mpf(ex) - fl) < mpmath.mpf(2) ** -240


rationals = st.fractions(min_value=-3, max_value=3, max_denominator=12)


@settings(max_examples=40, deadline=None)
@given(st.lists(rationals, min_size=9, max_size=9))
def test_exp_log_roundtrip(tail):
    b = S([0] + tail)
    assert ps.log(ps.exp(b)) == b
    a = S([1] + tail)
    assert ps.exp(ps.log(a)) == a


@settings(max_examples=40, deadline=None)
@given(st.lists(rationals, min_size=6, max_size=6), st.lists(rationals, min_size=6, max_size=6))
def test_div_inverts_mul(xs, ys):
    b = S([1] + ys)
    a = S(xs + [0])
    assert ps.div(ps.mul(a, b), b) == a


@settings(max_examples=30, deadline=None)
@given(st.lists(rationals, min_size=6, max_size=6))
def test_reversion_is_compositional_inverse(tail):
    a = S([0, 1] + tail)
    assert ps.compose(a, ps.reversion(a)) == S.variable(8)
