"""The four Stirling coefficient families and the identities linking them.

``c_m`` and ``d_m`` are formal Gaussian integrals of the y^m coefficient of

    exp(sum_{j>=3} w_j (i t)^j y^(j-2)),   w_j = 1/j!  (c)   or  1/j  (d).

``g_m`` and ``h_m`` are the Lagrange-inversion coefficients of the two
changes of variables e^u - 1 - u = v^2/2 and y - log(1+y) = ...; see
:func:`g_coeff` and :func:`h_coeff`.  Everything here is exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import mpmath

from . import series as ps
from .series import TruncatedSeries, coefficient


# ---------------------------------------------------------------------------
# polynomials in t and series in y with polynomial coefficients
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TPolynomial:
    """Polynomial in t with exact rational coefficients (index = power)."""

    coeffs: tuple = ()

    def __post_init__(self):
        cs = [Fraction(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __add__(self, other: "TPolynomial") -> "TPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return TPolynomial(tuple(self[k] + other[k] for k in range(n)))

    def __mul__(self, other):
        if isinstance(other, TPolynomial):
            if not self.coeffs or not other.coeffs:
                return TPolynomial()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a:
                    for j, b in enumerate(other.coeffs):
                        out[i + j] += a * b
            return TPolynomial(tuple(out))
        c = Fraction(other)
        return TPolynomial(tuple(a * c for a in self.coeffs))

    __rmul__ = __mul__

    def times_monomial(self, coeff, k: int) -> "TPolynomial":
        """self * coeff * t^k."""
        c = Fraction(coeff)
        return TPolynomial((Fraction(0),) * k + tuple(a * c for a in self.coeffs))


@dataclass(frozen=True)
class BivariateSeries:
    """Series in y, truncated at ``order``, with TPolynomial coefficients."""

    y_coeffs: tuple = field(default_factory=tuple)

    @property
    def order(self) -> int:
        return len(self.y_coeffs)

    def __getitem__(self, m: int) -> TPolynomial:
        if m >= self.order:
            raise ps.OrderExceeded(f"y^{m} beyond order {self.order}")
        return self.y_coeffs[m]


def gaussian_moment(p: TPolynomial) -> Fraction:
    """Formal (2 pi)^(-1/2) * integral of e^(-t^2/2) p(i t) dt.

    t^k maps to 0 for odd k and to (-1)^(k/2) (k-1)!! for even k.
    """
    total = Fraction(0)
    dfact = 1  # (k-1)!! for the current even k
    for k in range(0, len(p.coeffs), 2):
        if k:
            dfact *= k - 1
        c = p.coeffs[k]
        if c:
            total += c * dfact * (-1 if (k // 2) % 2 else 1)
    return total


def _weight(j: int, variant: str) -> Fraction:
    if variant == "c":
        return Fraction(1, math.factorial(j))
    if variant == "d":
        return Fraction(1, j)
    raise ValueError(f"variant must be 'c' or 'd', got {variant!r}")


@lru_cache(maxsize=None)
def _bivariate(order: int, variant: str) -> BivariateSeries:
    # exp(A) with A_k = w_{k+2} t^{k+2} y^k; each A_k is a monomial in t,
    # so B_m = (1/m) sum_k k A_k B_{m-k} is a sum of shifted, scaled copies.
    blocks = [TPolynomial((1,))]
    for m in range(1, order):
        acc = TPolynomial()
        for k in range(1, m + 1):
            acc = acc + blocks[m - k].times_monomial(k * _weight(k + 2, variant), k + 2)
        blocks.append(acc * Fraction(1, m))
    return BivariateSeries(tuple(blocks))


def bivariate_series(order: int, variant: str = "c") -> BivariateSeries:
    """exp(sum_{j>=3} w_j t^j y^(j-2)) to y-order ``order``.

    The factor i^j of (i t)^j is left out here and applied by
    :func:`gaussian_moment`.
    """
    return _bivariate(order, variant)


def _cd_coeff(m: int, variant: str) -> Fraction:
    if m < 0:
        raise ValueError("m must be nonnegative")
    # pick a cached order at least m+1 so tables share one expansion
    order = max(m + 1, 8)
    order = 1 << (order - 1).bit_length()
    return gaussian_moment(bivariate_series(order, variant)[m])


def c_coeff(m: int) -> Fraction:
    """c_m, with weights 1/j! in the exponent."""
    return _cd_coeff(m, "c")


def d_coeff(m: int) -> Fraction:
    """d_m, with weights 1/j in the exponent."""
    return _cd_coeff(m, "d")


def _partitions(total: int, max_part: int):
    # yields multiplicity dicts {part: count} of partitions of total
    if total == 0:
        yield {}
        return
    for part in range(min(total, max_part), 0, -1):
        for count in range(total // part, 0, -1):
            for rest in _partitions(total - part * count, part - 1):
                out = dict(rest)
                out[part] = count
                yield out


def explicit_coeff(l: int, variant: str = "c") -> Fraction:
    """c_{2l} (or d_{2l}) by the double sum over partitions of 2l.

    A partition with j_i parts equal to i (h parts in all) contributes
    (-1)^(l+h) (2l+2h)! / ((l+h)! 2^(l+h)) / prod(j_i! * W_(i+2)^j_i)
    where W_j = j! for c and j for d.
    """
    if l < 0:
        raise ValueError("l must be nonnegative")
    if l == 0:
        return Fraction(1)
    total = Fraction(0)
    for parts in _partitions(2 * l, 2 * l):
        h = sum(parts.values())
        denom = 1
        for i, j in parts.items():
            w = math.factorial(i + 2) if variant == "c" else i + 2
            denom *= math.factorial(j) * w ** j
        moment = Fraction(math.factorial(2 * l + 2 * h), math.factorial(l + h) * 2 ** (l + h))
        total += (-1) ** (l + h) * moment / denom
    return total


def c_explicit(l: int) -> Fraction:
    return explicit_coeff(l, "c")


def d_explicit(l: int) -> Fraction:
    return explicit_coeff(l, "d")


# ---------------------------------------------------------------------------
# Lagrange-inversion route
# ---------------------------------------------------------------------------

def _half_t2(order: int) -> TruncatedSeries:
    return TruncatedSeries.monomial(2, order, Fraction(1, 2))


def g_base(order: int) -> TruncatedSeries:
    """(t^2/2) / (e^t - 1 - t) to the given order."""
    n = order + 2
    x = TruncatedSeries.variable(n)
    return ps.div(_half_t2(n), ps.expm1_series(n) - x)


def h_base(order: int) -> TruncatedSeries:
    """(y^2/2) / (y - log(1+y)) to the given order."""
    n = order + 2
    x = TruncatedSeries.variable(n)
    return ps.div(_half_t2(n), x - ps.log1p_series(n))


@lru_cache(maxsize=None)
def g_coeff(m: int) -> Fraction:
    """g_m = [t^m] ((t^2/2)/(e^t-1-t))^((m+1)/2)."""
    return coefficient(ps.pow_half_integer(g_base(m + 1), m + 1), m)


@lru_cache(maxsize=None)
def h_coeff(m: int) -> Fraction:
    """h_m = [y^m] ((y^2/2)/(y-log(1+y)))^((m+1)/2)."""
    return coefficient(ps.pow_half_integer(h_base(m + 1), m + 1), m)


def gaussian_factor(m: int) -> Fraction:
    """(-1)^m (2m)! / (m! 2^m), i.e. the (it)^(2m) Gaussian moment."""
    return Fraction((-1) ** m * math.factorial(2 * m), math.factorial(m) * 2 ** m)


def c_from_g(m: int) -> Fraction:
    """c_{2m} recovered from g_{2m}."""
    return g_coeff(2 * m) * gaussian_factor(m)


def d_from_h(m: int) -> Fraction:
    """d_{2m} recovered from h_{2m}."""
    return h_coeff(2 * m) * gaussian_factor(m)


def phi_s(order: int) -> TruncatedSeries:
    """(s^2 / (2(s - log(1+s))))^(1/2), which equals h_base^(1/2)."""
    return ps.pow_half_integer(h_base(order), 1)


def g_via_phi_s(m: int) -> Fraction:
    """g_m as [s^m] phi(s)^(m+1) / (1+s) after the substitution s = e^t - 1."""
    n = m + 1
    num = ps.pow_half_integer(h_base(n), m + 1)
    return coefficient(ps.div(num, TruncatedSeries([1, 1], n)), m)


def zero_lemma_check(m: int) -> Fraction:
    """[s^(m-1)] phi(s)^(m+1) / (1+s); zero for every m except m = 1."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m == 0:
        return Fraction(0)
    n = m
    num = ps.pow_half_integer(h_base(n), m + 1)
    return coefficient(ps.div(num, TruncatedSeries([1, 1], n)), m - 1)


def g_by_reversion(max_m: int) -> list[Fraction]:
    """g_0..g_max_m without Lagrange inversion.

    Solve v^2/2 = e^u - 1 - u for u(v) by reverting v(u) = u * base(u)^(-1/2)
    and differentiate termwise.
    """
    n = max_m + 2
    v_of_u = ps.mul(TruncatedSeries.variable(n), ps.pow_half_integer(g_base(n), -1))
    u_of_v = ps.reversion(v_of_u)
    return list(u_of_v.derivative().coeffs[: max_m + 1])


# ---------------------------------------------------------------------------
# tables and numerical use
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StirlingCoefficientTable:
    c: tuple
    d: tuple
    g: tuple
    h: tuple

    @property
    def max_m(self) -> int:
        return len(self.c) - 1

    def failures(self) -> list[str]:
        """Violations of c_m = d_m, odd vanishing, and g_m = h_m (m != 1)."""
        bad = []
        for m in range(len(self.c)):
            if self.c[m] != self.d[m]:
                bad.append(f"c_{m} != d_{m}")
            if m % 2 and self.c[m] != 0:
                bad.append(f"c_{m} != 0")
            if m != 1 and self.g[m] != self.h[m]:
                bad.append(f"g_{m} != h_{m}")
        return bad


def coefficient_table(max_m: int) -> StirlingCoefficientTable:
    ms = range(max_m + 1)
    return StirlingCoefficientTable(
        c=tuple(c_coeff(m) for m in ms),
        d=tuple(d_coeff(m) for m in ms),
        g=tuple(g_coeff(m) for m in ms),
        h=tuple(h_coeff(m) for m in ms),
    )


def stirling_eval(n: int, M: int, variant: str = "c", prec: int = 256):
    """Partial sum through m = M of the expansion of 1/n!.

    variant "c": e^n n^(-n-1/2) / sqrt(2 pi) * sum c_{2m} n^(-m)
    variant "d": same with n replaced by n+1 (and the d_{2m}).
    """
    if n < 1 or M < 0:
        raise ValueError("need n >= 1 and M >= 0")
    coeffs = {"c": c_coeff, "d": d_coeff}[variant]
    with mpmath.workprec(prec):
        x = mpmath.mpf(n if variant == "c" else n + 1)
        pref = mpmath.exp(x) * x ** (-n - mpmath.mpf(1) / 2) / mpmath.sqrt(2 * mpmath.pi)
        total = mpmath.mpf(0)
        for m in range(M + 1):
            total += ps.to_mpf(coeffs(2 * m)) / x ** m
        return pref * total
