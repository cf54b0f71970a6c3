"""Saddle-point expansions for Lagrangean coefficients [z^n] f, f = z G(f).

With phi = log G and R > 0 solving R phi'(R) = 1,

    n [z^n] f ~ R^(1-n) G(R)^n / (sqrt(2 pi n) sigma)
                * sum_m h_2m (-1)^m (2m)! / (2^m m!) (sigma^2 n)^-m,

sigma^2 = R phi'(R) + R^2 phi''(R).  The h_m are the line-contour
coefficients of :mod:`saddlecoef.saddle` evaluated at R, and the circle
form g_m (with an extra e^t) gives the same numbers.  When R and the local
Taylor coefficients of phi are rational everything is computed exactly.

The Catalan case G = 1/(1-z) gets its own set of expansions: the saddle
form, the singularity-analysis form in b_m, the refined form in powers of
n - 1/4, and the G = (1+z)^2 route to (1/(n+1)) C(2n, n).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable

import mpmath
from mpmath import mpf

from . import oracles
from . import series as ps
from .catalog import Identity, LogOfPolynomial, NegLogOneMinusZ, PhiSpec, TwoLogOnePlusZ
from .saddle import DEFAULT_PREC, ExpansionResult, NoBracket, _ratio_series, exponent_series, solve_saddle
from .series import TruncatedSeries, to_mpf
from .stirling import gaussian_factor


@dataclass(frozen=True)
class LagrangeanG:
    """A function G with G(0) > 0 together with phi = log G."""

    name: str
    formula: str
    coeff0: Callable[[int], Fraction]  # k -> [z^k] G(z)
    value: Callable  # x -> G(x)
    phi: PhiSpec
    radius: float = math.inf
    exact_saddle: Fraction | None = None

    def series(self, order: int) -> TruncatedSeries:
        return TruncatedSeries([self.coeff0(k) for k in range(order)])

    def __repr__(self):
        return f"<G {self.name}: {self.formula}>"


def polynomial_G(coeffs, name: str = "poly") -> LagrangeanG:
    poly = tuple(Fraction(c) for c in coeffs)

    def value(x):
        acc = 0
        for c in reversed(poly):
            acc = acc * x + c
        return acc

    phi = LogOfPolynomial(poly, name=f"log-{name}") if poly and poly[0] > 0 else None
    formula = " + ".join(f"{c}*z^{k}" for k, c in enumerate(poly) if c)
    return LagrangeanG(name, formula, lambda k: poly[k] if k < len(poly) else Fraction(0),
                       value, phi)


CATALAN = LagrangeanG(
    "catalan", "1/(1-z)", lambda k: Fraction(1), lambda x: 1 / (1 - x),
    NegLogOneMinusZ(), radius=1, exact_saddle=Fraction(1, 2))
CAYLEY = LagrangeanG(
    "cayley", "exp(z)", lambda k: Fraction(1, math.factorial(k)), lambda x: mpmath.exp(to_mpf(x)),
    Identity(), exact_saddle=Fraction(1))
BINARY = LagrangeanG(
    "binary", "(1+z)^2", lambda k: Fraction(math.comb(2, k)) if k <= 2 else Fraction(0),
    lambda x: (1 + x) ** 2, TwoLogOnePlusZ(), exact_saddle=Fraction(1))

G_CATALOG = {g.name: g for g in (CATALAN, CAYLEY, BINARY)}


@dataclass
class LagrangeanScheme:
    G: LagrangeanG
    R: Fraction | mpf
    sigma2: Fraction | mpf
    exact: bool
    h: list = field(default_factory=list)


@dataclass(frozen=True)
class SubCriticalityReport:
    radius: float
    nonnegative: bool
    aperiodic: bool
    rho0: mpf | None
    checked_order: int

    @property
    def ok(self) -> bool:
        return self.nonnegative and self.aperiodic and self.rho0 is not None


def check_subcriticality(G: LagrangeanG, order: int = 32, prec: int = DEFAULT_PREC) -> SubCriticalityReport:
    """Nonnegativity, aperiodicity and the root of z G'(z) = G(z) in (0, radius)."""
    cs = [G.coeff0(k) for k in range(order)]
    if cs[0] <= 0:
        raise ValueError(f"G(0) = {cs[0]} must be positive")
    nonneg = all(c >= 0 for c in cs)
    support = [k for k, c in enumerate(cs) if c > 0]
    aperiodic = math.gcd(*support) == 1
    try:
        # z G' = G is z phi'(z) = 1
        rho0 = solve_saddle(G.phi, 1, prec)
    except NoBracket:
        rho0 = None
    if rho0 is not None and not rho0 < G.radius:
        rho0 = None
    return SubCriticalityReport(G.radius, nonneg, aperiodic, rho0, order)


def scheme(G: LagrangeanG, prec: int = DEFAULT_PREC, exact: bool | None = None) -> LagrangeanScheme:
    """Saddle R and sigma^2 for G; exact when R is known and phi is rational there."""
    can_exact = G.exact_saddle is not None and G.phi.rational_taylor
    if exact is None:
        exact = can_exact
    elif exact and not can_exact:
        raise ValueError(f"exact mode not available for {G.name}")
    if exact:
        R = G.exact_saddle
    else:
        R = solve_saddle(G.phi, 1, prec)
    with mpmath.workprec(prec):
        sigma2 = R * G.phi.d1(R) + R * R * G.phi.d2(R)
    return LagrangeanScheme(G, R, sigma2, exact)


def _lag_coeff(G, m, prec, exact, variant):
    sch = scheme(G, prec, exact)
    with mpmath.workprec(prec):
        base = _ratio_series(G.phi, sch.R, m + 1, variant)
        powered = ps.pow_half_integer(base.truncate(m + 1), m + 1)
        if variant == "circle":
            e = ps.exp_series(m + 1)
            powered = ps.mul(e if powered.exact else e.to_float(), powered)
        return ps.coefficient(powered, m)


def lag_h(G: LagrangeanG, m: int, prec: int = DEFAULT_PREC, exact: bool | None = None):
    """[v^m] ((sigma^2 v^2/2) / (phi(R(1+v)) - phi(R) - R phi'(R) log(1+v)))^((m+1)/2)."""
    return _lag_coeff(G, m, prec, exact, "line")


def lag_g(G: LagrangeanG, m: int, prec: int = DEFAULT_PREC, exact: bool | None = None):
    """[t^m] e^t ((sigma^2 t^2/2) / (phi(R e^t) - phi(R) - R phi'(R) t))^((m+1)/2)."""
    return _lag_coeff(G, m, prec, exact, "circle")


def lag_expand(G: LagrangeanG, n: int, M: int, prec: int = DEFAULT_PREC) -> ExpansionResult:
    """Expansion of n [z^n] f through m = M; ``extra['exact']`` holds the true value."""
    if n < 1 or M < 0:
        raise ValueError("need n >= 1 and M >= 0")
    sch = scheme(G, prec)
    hs = [lag_h(G, 2 * m, prec) for m in range(M + 1)]
    with mpmath.workprec(prec):
        R, s2 = to_mpf(sch.R), to_mpf(sch.sigma2)
        pref = R ** (1 - n) * to_mpf(G.value(R)) ** n / (mpmath.sqrt(2 * mpmath.pi * n) * mpmath.sqrt(s2))
        coeffs = [to_mpf(h) * to_mpf(gaussian_factor(m)) for m, h in enumerate(hs)]
        terms = [c / (s2 * n) ** m for m, c in enumerate(coeffs)]
        sums, acc = [], mpf(0)
        for t in terms:
            acc += t
            sums.append(pref * acc)
    exact_value = oracles.lagrangean_power_coeff(G, n)
    return ExpansionResult(variant="lagrangean", n=n, target=1, saddle=R, kappa2=s2, prefactor=pref,
                           coefficients=coeffs, terms=terms, partial_sums=sums, prec=prec,
                           phi=G.name, extra={"exact": exact_value})


# ---------------------------------------------------------------------------
# Catalan numbers
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _b_table(order: int) -> TruncatedSeries:
    # ((1 - e^-t)/t)^(1/2)
    base = TruncatedSeries([Fraction((-1) ** k, math.factorial(k + 1)) for k in range(order)])
    return ps.pow_half_integer(base, 1)


@lru_cache(maxsize=None)
def _bprime_table(order: int) -> TruncatedSeries:
    # ((2/t) sinh(t/2))^(1/2)
    base = TruncatedSeries([
        Fraction(1, 4 ** (k // 2) * math.factorial(k + 1)) if k % 2 == 0 else Fraction(0)
        for k in range(order)])
    return ps.pow_half_integer(base, 1)


def _table_order(m: int) -> int:
    return max(32, 1 << m.bit_length())


def catalan_b(m: int) -> Fraction:
    """b_m = [t^m] ((1 - e^-t)/t)^(1/2)."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    return _b_table(_table_order(m))[m]


def catalan_bprime(m: int) -> Fraction:
    """[t^m] ((2/t) sinh(t/2))^(1/2); zero for odd m."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    return _bprime_table(_table_order(m))[m]


@lru_cache(maxsize=None)
def _plus_table(order: int) -> TruncatedSeries:
    # (2 e^y - 1) (y / (1 - e^-y))^(1/2)
    base = TruncatedSeries([Fraction((-1) ** k, math.factorial(k + 1)) for k in range(order)])
    root = ps.pow_half_integer(base, -1)
    lead = ps.exp_series(order) * 2 - 1
    return ps.mul(lead, root)


def plus_route_h(m: int) -> Fraction:
    """h_2m for G = (1+z)^2 as 4^-m [y^m] (2e^y - 1) sqrt(y/(1 - e^-y))."""
    return _plus_table(_table_order(m))[m] / 4 ** m


CATALAN_WHICH = ("lag", "sing", "refined", "plus")


def _catalan_terms(n, M, which):
    # returns (prefactor, [term_m]) at the ambient precision
    pi = mpmath.pi
    nn = mpf(n)
    if which == "lag":
        pref = mpf(4) ** (n - 1) / mpmath.sqrt(pi) * nn ** mpf(-1.5)
        terms = [to_mpf(lag_h(CATALAN, 2 * m) * Fraction((-1) ** m * math.factorial(2 * m),
                                                          4 ** m * math.factorial(m))) / nn ** m
                 for m in range(M + 1)]
    elif which == "sing":
        pref = mpf(4) ** n / (2 * mpmath.sqrt(pi)) * nn ** mpf(-1.5)
        terms = [to_mpf(catalan_b(m) * Fraction((-1) ** m * math.factorial(2 * m + 2),
                                                 math.factorial(m + 1) * 4 ** (m + 1))) / nn ** m
                 for m in range(M + 1)]
    elif which == "refined":
        shifted = nn - mpf(1) / 4
        pref = mpf(4) ** n / (2 * mpmath.sqrt(pi)) * shifted ** mpf(-1.5)
        terms = [to_mpf(catalan_bprime(2 * m) * Fraction(math.factorial(4 * m + 2),
                                                          math.factorial(2 * m + 1) * 4 ** (2 * m + 1)))
                 / shifted ** (2 * m)
                 for m in range(M + 1)]
    elif which == "plus":
        pref = mpf(4) ** n / mpmath.sqrt(pi) * nn ** mpf(-1.5)
        terms = [to_mpf(plus_route_h(m) * Fraction((-1) ** m * math.factorial(2 * m), math.factorial(m)))
                 / nn ** m
                 for m in range(M + 1)]
    else:
        raise ValueError(f"which must be one of {CATALAN_WHICH}, got {which!r}")
    return pref, terms


def catalan_target(n: int, which: str) -> int:
    """The exact number each variant approximates."""
    if which == "plus":
        return math.comb(2 * n, n) // (n + 1)
    return oracles.catalan(n).value


def catalan_expansions(n: int, M: int, which: str, prec: int = DEFAULT_PREC) -> ExpansionResult:
    """One of the four Catalan expansions; terms are relative to the prefactor."""
    if n < 2 or M < 0:
        raise ValueError("need n >= 2 and M >= 0")
    with mpmath.workprec(prec):
        pref, terms = _catalan_terms(n, M, which)
        sums, acc = [], mpf(0)
        for t in terms:
            acc += t
            sums.append(pref * acc)
    return ExpansionResult(variant=which, n=n, target=n, saddle=mpf(0.5), kappa2=mpf(2), prefactor=pref,
                           coefficients=terms, terms=terms, partial_sums=sums, prec=prec,
                           phi="catalan", extra={"exact": catalan_target(n, which)})


@dataclass
class BAsymptoticReport:
    rows: list  # (m, b_m as float, scaled value, predicted sign)
    divergence_terms: list  # |term_m| of the b_m expansion at n = 1

    def sign_agreement(self, m_from: int = 11, parity: int = 1) -> bool:
        return all(math.copysign(1, s) == sign for m, _, s, sign in self.rows
                   if m >= m_from and m % 2 == parity)

    def eventually_increasing(self, tail: int = 10, step: int = 2) -> bool:
        """Whether the last ``tail`` terms increase along every residue class mod ``step``.

        Even-index b_m are smaller than their odd neighbours by a factor of
        order 1/m, so with ``step=1`` the tail zigzags while still diverging.
        """
        t = self.divergence_terms[-tail:]
        return all(b > a for a, b in zip(t, t[step:]))


def b_asymptotic_check(m_max: int, prec: int = 128) -> BAsymptoticReport:
    """b_m (2 pi)^m m^(3/2) sqrt(pi) for odd m and b_m (2 pi)^m m^(5/2) / (3 sqrt(pi)/4) for even m.

    Both scaled quantities should tend to (-1)^floor(m/2).
    """
    if m_max < 10:
        raise ValueError("m_max must be >= 10")
    rows, div = [], []
    with mpmath.workprec(prec):
        two_pi = 2 * mpmath.pi
        for m in range(1, m_max + 1):
            b = to_mpf(catalan_b(m))
            if m % 2:
                scaled = b * two_pi ** m * mpf(m) ** mpf(1.5) * mpmath.sqrt(mpmath.pi)
            else:
                scaled = b * two_pi ** m * mpf(m) ** mpf(2.5) / (3 * mpmath.sqrt(mpmath.pi) / 4)
            rows.append((m, float(b), float(scaled), (-1) ** (m // 2)))
        for m in range(m_max + 1):
            term = catalan_b(m) * Fraction(math.factorial(2 * m + 2), math.factorial(m + 1) * 4 ** (m + 1))
            div.append(abs(float(term)))
    return BAsymptoticReport(rows, div)


# ---------------------------------------------------------------------------
# singularity-analysis cross-check
# ---------------------------------------------------------------------------

def sing_rho(G: LagrangeanG, prec: int = DEFAULT_PREC):
    """Radius of convergence of f: rho = r / G(r), r the root of r G'(r) = G(r)."""
    sch = scheme(G, prec)
    with mpmath.workprec(prec):
        R = to_mpf(sch.R)
        return R / to_mpf(G.value(R))


def sing_coeff(G: LagrangeanG, k: int, prec: int = DEFAULT_PREC) -> mpf:
    """Coefficient of (1 - z/rho)^(k/2) in f(z).

    c_k = ((-1)^k / k) [t^(k-1)] ((1 - (r+t) G(r) / (r G(r+t))) / t^2)^(-k/2),
    evaluated around the root r of r G'(r) = G(r).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    sch = scheme(G, prec)
    r = sch.R
    with mpmath.workprec(prec):
        # G(r)/G(r+t) = exp(-(phi(r+t) - phi(r)))
        local = G.phi.taylor_at(r, k + 2, centered=True)
        t = TruncatedSeries.variable(k + 2, exact=local.exact)
        ratio = ps.mul(1 + t / r, ps.exp(-local))
        q = (1 - ratio).drop_below(2).shift_down(2)
        q0 = q[0]
        powered = ps.power(q / q0, Fraction(-k, 2))
        value = to_mpf(powered[k - 1]) * to_mpf(q0) ** (mpf(-k) / 2)
        return (-1) ** k * value / k


def sing_expand(G: LagrangeanG, n: int, K: int, prec: int = DEFAULT_PREC) -> ExpansionResult:
    """[z^n] f ~ rho^-n sum_{j<=K} c_{2j+1} C(n - j - 3/2, n); even c_k multiply
    integer powers of (1 - z/rho) and do not contribute."""
    if n < 1 or K < 0:
        raise ValueError("need n >= 1 and K >= 0")
    rho = sing_rho(G, prec)
    cs = [sing_coeff(G, 2 * j + 1, prec) for j in range(K + 1)]
    with mpmath.workprec(prec):
        pref = rho ** (-n)
        terms = [c * mpmath.binomial(n - j - mpf(1.5), n) for j, c in enumerate(cs)]
        sums, acc = [], mpf(0)
        for t in terms:
            acc += t
            sums.append(pref * acc)
    exact_value = oracles.lagrangean_an(G, n).value
    return ExpansionResult(variant="singularity", n=n, target=1, saddle=rho, kappa2=mpf(0), prefactor=pref,
                           coefficients=cs, terms=terms, partial_sums=sums, prec=prec, phi=G.name,
                           extra={"exact": exact_value})
