"""Catalog of exponents phi for a_n = [z^n] exp(phi(z)).

Each entry knows its exact Taylor series at 0 and its Taylor coefficients
at an arbitrary positive point, from closed-form derivatives.  When the
point is a :class:`~fractions.Fraction` and the entry is rational there,
the local coefficients come back exact.
"""

from __future__ import annotations

import math
from fractions import Fraction

import mpmath

from .series import TruncatedSeries, to_mpf


def _exp(x):
    return mpmath.exp(to_mpf(x))


def _log(x):
    return mpmath.log(to_mpf(x))


class PhiSpec:
    """An analytic function phi with phi(0) finite and closed-form derivatives.

    Subclasses implement :meth:`coeff` (the k-th Taylor coefficient at x)
    and :meth:`exact_series`.
    """

    name = ""
    formula = ""
    # open interval on the positive axis where the saddle may lie
    domain = (0, math.inf)
    # True when coeff(x, k) is rational for rational x and k >= 1
    rational_taylor = False

    def coeff(self, x, k: int):
        raise NotImplementedError

    def exact_series(self, order: int) -> TruncatedSeries:
        raise NotImplementedError

    def value(self, x):
        return self.coeff(x, 0)

    def d1(self, x):
        return self.coeff(x, 1)

    def d2(self, x):
        return 2 * self.coeff(x, 2)

    def taylor_at(self, x, order: int, centered: bool = False) -> TruncatedSeries:
        """Coefficients of phi(x + w) in w.

        With ``centered`` the constant phi(x) is replaced by 0, which keeps
        the series exact for entries like -log(1-z) at rational x.
        """
        head = [0 if centered else self.coeff(x, 0)]
        cs = head + [self.coeff(x, k) for k in range(1, order)]
        if not isinstance(x, Fraction) or not self.rational_taylor:
            cs = [to_mpf(c) for c in cs]
        return TruncatedSeries(cs[:order])

    def in_domain(self, x) -> bool:
        lo, hi = self.domain
        return lo < x < hi

    def __repr__(self):
        return f"<phi {self.name}: {self.formula}>"


class Identity(PhiSpec):
    name = "stirling"
    formula = "z"
    rational_taylor = True

    def coeff(self, x, k):
        if k == 0:
            return x
        return Fraction(1) if k == 1 else Fraction(0)

    def exact_series(self, order):
        return TruncatedSeries([0, 1], order)


class ExpMinusOne(PhiSpec):
    name = "bell"
    formula = "exp(z) - 1"

    def coeff(self, x, k):
        if k == 0:
            return mpmath.expm1(to_mpf(x))
        return _exp(x) / math.factorial(k)

    def exact_series(self, order):
        return TruncatedSeries([0] + [Fraction(1, math.factorial(k)) for k in range(1, order)], order)


class ZExpZ(PhiSpec):
    name = "idempotent"
    formula = "z exp(z)"

    def coeff(self, x, k):
        # d^k/dz^k z e^z = (z + k) e^z
        return (to_mpf(x) + k) * _exp(x) / math.factorial(k)

    def exact_series(self, order):
        return TruncatedSeries([0] + [Fraction(1, math.factorial(k - 1)) for k in range(1, order)], order)


class ZOverOneMinusZ(PhiSpec):
    name = "ordered"
    formula = "z / (1 - z)"
    domain = (0, 1)
    rational_taylor = True

    def coeff(self, x, k):
        if k == 0:
            return x / (1 - x)
        return 1 / (1 - x) ** (k + 1)

    def exact_series(self, order):
        return TruncatedSeries([0] + [1] * (order - 1), order)


class ZPlusHalfZ2(PhiSpec):
    name = "involutions"
    formula = "z + z^2/2"
    rational_taylor = True

    def coeff(self, x, k):
        if k == 0:
            return x + x * x / 2
        if k == 1:
            return 1 + x
        return Fraction(1, 2) if k == 2 else Fraction(0)

    def exact_series(self, order):
        return TruncatedSeries([0, 1, Fraction(1, 2)], order)


# -- logarithms of Lagrangean G ----------------------------------------------

class NegLogOneMinusZ(PhiSpec):
    name = "neglog1m"
    formula = "-log(1 - z)"
    domain = (0, 1)
    rational_taylor = True

    def coeff(self, x, k):
        if k == 0:
            return -mpmath.log1p(-to_mpf(x))
        return 1 / (k * (1 - x) ** k)

    def exact_series(self, order):
        return TruncatedSeries([0] + [Fraction(1, k) for k in range(1, order)], order)


class TwoLogOnePlusZ(PhiSpec):
    name = "twolog1p"
    formula = "2 log(1 + z)"
    rational_taylor = True

    def coeff(self, x, k):
        if k == 0:
            return 2 * mpmath.log1p(to_mpf(x))
        return 2 * (-1) ** (k + 1) / (k * (1 + x) ** k)

    def exact_series(self, order):
        return TruncatedSeries([0] + [Fraction(2 * (-1) ** (k + 1), k) for k in range(1, order)], order)


class LogOfPolynomial(PhiSpec):
    """log G(z) for a polynomial G with G(0) > 0.

    Local coefficients come from the series logarithm of G(x + w) / G(x),
    which stays exact at rational x.
    """

    rational_taylor = True

    def __init__(self, coeffs, name=None):
        self.poly = tuple(Fraction(c) for c in coeffs)
        self.name = name or "logpoly"
        self.formula = f"log({' + '.join(f'{c}*z^{k}' for k, c in enumerate(self.poly) if c)})"

    def _local(self, x, order):
        from . import series as ps
        # G(x + w) by binomial expansion
        deg = len(self.poly) - 1
        local = []
        for j in range(min(order, deg + 1)):
            local.append(sum(math.comb(k, j) * c * x ** (k - j) for k, c in enumerate(self.poly) if k >= j))
        g0 = local[0]
        if g0 == 0:
            raise ValueError("G vanishes at the expansion point")
        return g0, ps.log(TruncatedSeries([c / g0 for c in local], order))

    def coeff(self, x, k):
        g0, lg = self._local(x, k + 1)
        if k == 0:
            return _log(g0)
        return lg[k]

    def taylor_at(self, x, order, centered=False):
        g0, lg = self._local(x, order)
        cs = list(lg.coeffs)
        if not centered:
            cs[0] = _log(g0)
        if not isinstance(x, Fraction):
            cs = [to_mpf(c) for c in cs]
        return TruncatedSeries(cs)

    def exact_series(self, order):
        from . import series as ps
        g0 = self.poly[0]
        if g0 != 1:
            raise ValueError("exact series of log G needs G(0) = 1")
        return ps.log(TruncatedSeries(self.poly, order))


CATALOG: dict[str, PhiSpec] = {
    p.name: p for p in (Identity(), ExpMinusOne(), ZExpZ(), ZOverOneMinusZ(), ZPlusHalfZ2())
}

ALIASES = {
    "z": "stirling",
    "exp": "bell",
    "zexpz": "idempotent",
    "a000110": "bell",
    "a000248": "idempotent",
    "a000262": "ordered",
    "a000085": "involutions",
}


def get_phi(name: str) -> PhiSpec:
    key = name.lower()
    key = ALIASES.get(key, key)
    try:
        return CATALOG[key]
    except KeyError:
        raise KeyError(f"unknown phi {name!r}; choose from {sorted(CATALOG)}") from None
