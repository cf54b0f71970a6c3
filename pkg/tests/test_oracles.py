import math
from fractions import Fraction as F

import pytest

from saddlecoef import oracles
from saddlecoef.catalog import get_phi
from saddlecoef.lagrangean import BINARY, CATALAN, CAYLEY, polynomial_G


@pytest.mark.parametrize("name,n,value", [
    ("bell", 5, 52), ("idempotent", 3, 10), ("ordered", 3, 13), ("involutions", 4, 10), ("stirling", 7, 1),
])
def test_small_values(name, n, value):
    phi = get_phi(name)
    assert int(oracles.exact_an(phi, n)) == value
    assert int(oracles.recurrence_an(phi, n)) == value


@pytest.mark.parametrize("name", ["bell", "idempotent", "ordered", "involutions"])
def test_two_routes_agree(name):
    phi = get_phi(name)
    assert oracles.exact_sequence(phi, 40) == oracles.recurrence_sequence(phi, 40)


def test_coefficient_and_misc():
    assert oracles.coefficient_an(get_phi("bell"), 5) == F(52, 120)
    assert int(oracles.factorial(10)) == 3628800
    assert int(oracles.catalan(1)) == 1
    assert int(oracles.catalan(5)) == 14
    with pytest.raises(ValueError):
        oracles.catalan(0)
    with pytest.raises(ValueError):
        int(oracles.SequenceValue(1, F(1, 2)))


def test_lagrangean_coefficients():
    assert oracles.lagrangean_power_coeff(CATALAN, 5) == 70
    assert int(oracles.lagrangean_an(CATALAN, 5)) == 14
    for n in range(1, 12):
        assert oracles.lagrangean_power_coeff(BINARY, n) == math.comb(2 * n, n - 1)
        assert oracles.lagrangean_power_coeff(CAYLEY, n) == F(n ** (n - 1), math.factorial(n - 1))
        assert oracles.lagrangean_an(CATALAN, n).value == oracles.catalan(n).value
    with pytest.raises(ValueError):
        oracles.lagrangean_power_coeff(polynomial_G([0, 1]), 3)
