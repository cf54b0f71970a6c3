"""Exact ground truth: a_n = n! [z^n] exp(phi(z)) and Lagrangean coefficients.

Each catalog sequence is computed twice: by exact series exponentiation
(:func:`exact_an`) and by an independent recurrence or closed form
(:func:`recurrence_an`).  The tests hold the two against each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import series as ps
from .catalog import PhiSpec
from .series import TruncatedSeries


@dataclass(frozen=True)
class SequenceValue:
    n: int
    value: int | Fraction

    def __int__(self):
        if isinstance(self.value, Fraction) and self.value.denominator != 1:
            raise ValueError(f"value {self.value} is not an integer")
        return int(self.value)


def _normalize(x: Fraction) -> int | Fraction:
    return x.numerator if x.denominator == 1 else x


# longest exp(phi) expansion computed so far, per phi name
_EXP_CACHE: dict[str, TruncatedSeries] = {}


def egf_coefficients(phi: PhiSpec, n_max: int) -> list[Fraction]:
    """[z^k] exp(phi(z)) for k = 0..n_max, exactly."""
    cached = _EXP_CACHE.get(phi.name)
    if cached is None or cached.order <= n_max:
        cached = ps.exp(phi.exact_series(n_max + 1))
        _EXP_CACHE[phi.name] = cached
    return list(cached.coeffs[: n_max + 1])


def exact_an(phi: PhiSpec, n: int) -> SequenceValue:
    """n! [z^n] exp(phi(z)) by exact series exponentiation."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    c = egf_coefficients(phi, n)[n]
    return SequenceValue(n, _normalize(c * math.factorial(n)))


def exact_sequence(phi: PhiSpec, n_max: int) -> list[int]:
    return [_normalize(c * math.factorial(k)) for k, c in enumerate(egf_coefficients(phi, n_max))]


def coefficient_an(phi: PhiSpec, n: int) -> Fraction:
    """[z^n] exp(phi(z)) itself (no n! factor)."""
    return egf_coefficients(phi, n)[n]


# -- independent routes ------------------------------------------------------

def _bell(n_max):
    out = [1]
    for n in range(n_max):
        out.append(sum(math.comb(n, k) * out[k] for k in range(n + 1)))
    return out


def _idempotent(n_max):
    # choose the k fixed points of the image, map the rest into them
    return [sum(math.comb(n, k) * k ** (n - k) for k in range(n + 1)) for n in range(n_max + 1)]


def _ordered(n_max):
    # Lah numbers L(n, k) = n!/k! C(n-1, k-1)
    out = [1]
    for n in range(1, n_max + 1):
        out.append(sum(math.factorial(n) // math.factorial(k) * math.comb(n - 1, k - 1)
                       for k in range(1, n + 1)))
    return out


def _involutions(n_max):
    out = [1, 1][: n_max + 1]
    for n in range(2, n_max + 1):
        out.append(out[n - 1] + (n - 1) * out[n - 2])
    return out


def _ones(n_max):
    return [1] * (n_max + 1)


RECURRENCES = {
    "stirling": _ones,
    "bell": _bell,
    "idempotent": _idempotent,
    "ordered": _ordered,
    "involutions": _involutions,
}


def recurrence_sequence(phi: PhiSpec, n_max: int) -> list[int]:
    try:
        fn = RECURRENCES[phi.name]
    except KeyError:
        raise KeyError(f"no independent recurrence for {phi.name}") from None
    return fn(n_max)


def recurrence_an(phi: PhiSpec, n: int) -> SequenceValue:
    return SequenceValue(n, recurrence_sequence(phi, n)[n])


# -- factorials, Catalan numbers, Lagrangean coefficients --------------------

def factorial(n: int) -> SequenceValue:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return SequenceValue(n, math.factorial(n))


def catalan(n: int) -> SequenceValue:
    """(1/n) C(2n-2, n-1), the n-th coefficient of (1 - sqrt(1-4z))/2."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return SequenceValue(n, math.comb(2 * n - 2, n - 1) // n)


def lagrangean_power_coeff(G, n: int) -> Fraction:
    """[t^(n-1)] G(t)^n, which equals n [z^n] f for f = z G(f).

    ``G`` has a ``series(order)`` method returning its exact Taylor series
    at 0, or is such a callable itself.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    G = getattr(G, "series", G)(n)
    if G[0] <= 0:
        raise ValueError("G(0) must be positive")
    return (G ** n)[n - 1]


def lagrangean_an(G, n: int) -> SequenceValue:
    """[z^n] f for f = z G(f), via Lagrange inversion."""
    return SequenceValue(n, _normalize(lagrangean_power_coeff(G, n) / n))
