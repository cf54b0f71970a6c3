import math
from fractions import Fraction as F

import mpmath
import pytest

from saddlecoef import stirling as st
from saddlecoef.stirling import TPolynomial

C_EVEN = [F(1), F(-1, 12), F(1, 288), F(139, 51840), F(-571, 2488320), F(-163879, 209018880)]

# (g_m, h_m) rows, m = 0..9
GH_TABLE = [
    (F(1), F(1)),
    (F(-1, 3), F(2, 3)),
    (F(1, 12), F(1, 12)),
    (F(-2, 135), F(-2, 135)),
    (F(1, 864), F(1, 864)),
    (F(1, 2835), F(1, 2835)),
    (F(-139, 777600), F(-139, 777600)),
    (F(1, 25515), F(1, 25515)),
    (F(-571, 261273600), F(-571, 261273600)),
    (F(-281, 151559100), F(-281, 151559100)),
]


def test_gaussian_moment():
    assert st.gaussian_moment(TPolynomial((1,))) == 1
    assert st.gaussian_moment(TPolynomial((0, 0, 1))) == -1
    assert st.gaussian_moment(TPolynomial((0, 0, 0, 0, 1))) == 3
    assert st.gaussian_moment(TPolynomial((0, 0, 0, 1))) == 0


def test_c_and_d_values():
    for l, v in enumerate(C_EVEN):
        assert st.c_coeff(2 * l) == v
        assert st.d_coeff(2 * l) == v
    assert st.c_coeff(1) == 0 and st.d_coeff(3) == 0


def test_explicit_sums():
    for l in range(1, 4):
        assert st.c_explicit(l) == C_EVEN[l]
        assert st.d_explicit(l) == C_EVEN[l]


def test_g_h_table():
    for m, (g, h) in enumerate(GH_TABLE):
        assert st.g_coeff(m) == g, m
        assert st.h_coeff(m) == h, m


def test_gaussian_factor_links():
    assert st.c_from_g(0) == 1
    assert st.g_coeff(4) * 3 == F(1, 288)
    assert st.g_coeff(6) * -15 == F(139, 51840)
    for m in range(6):
        assert st.c_from_g(m) == C_EVEN[m] == st.d_from_h(m)


def test_phi_s_route_and_zero_lemma():
    for m in range(13):
        assert st.g_via_phi_s(m) == st.g_coeff(m)
    assert st.zero_lemma_check(0) == 0
    assert st.zero_lemma_check(1) == 1
    assert st.zero_lemma_check(1) == st.h_coeff(1) - st.g_coeff(1)
    for m in range(2, 12):
        assert st.zero_lemma_check(m) == 0


def test_reversion_oracle():
    assert st.g_by_reversion(12) == [st.g_coeff(m) for m in range(13)]


def test_table_failures_empty():
    assert st.coefficient_table(16).failures() == []


def test_stirling_eval():
    with mpmath.workprec(256):
        inv = mpmath.mpf(1) / math.factorial(10)
        lead = st.stirling_eval(10, 0)
        assert abs(lead / inv - 1 - mpmath.mpf(1) / 120) < mpmath.mpf(1) / 10000
        for v in ("c", "d"):
            assert abs(st.stirling_eval(10, 3, v) / inv - 1) <= 10 * abs(float(C_EVEN[4])) / 10 ** 4
        assert mpmath.almosteq(st.stirling_eval(1, 0, "d"), mpmath.e ** 2 * mpmath.mpf(2) ** -1.5 / mpmath.sqrt(2 * mpmath.pi))
    with pytest.raises(ValueError):
        st.stirling_eval(0, 1)
