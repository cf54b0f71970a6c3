"""Two-contour saddle-point expansions of a_n = [z^n] exp(phi(z)).

circle:  z = r e^{i theta},  r phi'(r) = n,
         a_n ~ r^-n e^phi(r) / sqrt(2 pi kappa_2) * sum_m c_m(r) kappa_2^-m

line:    z = R (1 + i t),    R phi'(R) = n + 1,
         a_n ~ R^-n e^phi(R) / sqrt(2 pi lambda_2) * sum_m d_m(R) lambda_2^-m

The coefficients come from the Lagrange-inversion form

    c_m(r) = g_2m(r) (-1)^m (2m)! / (m! 2^m),
    g_k(r) = [v^k] ((kappa_2 v^2 / 2) / (phi(r e^v) - phi(r) - r phi'(r) v))^((k+1)/2)

and analogously for d_m(R) with phi(R(1+y)) - phi(R) - R phi'(R) log(1+y).
All floating-point work is mpmath at a caller-chosen binary precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import mpmath
from mpmath import mpf

from . import series as ps
from .catalog import PhiSpec
from .series import TruncatedSeries, to_mpf
from .stirling import gaussian_factor

DEFAULT_PREC = 256
VARIANTS = ("circle", "line")


class SaddleError(ArithmeticError):
    pass


class NoBracket(SaddleError):
    pass


class DomainError(SaddleError, ValueError):
    pass


@dataclass(frozen=True)
class CumulantSequence:
    variant: str
    base_point: mpf
    n: int
    values: tuple  # values[j] is kappa_j (or lambda_j); index 0 unused
    prec: int = DEFAULT_PREC

    def __getitem__(self, j: int) -> mpf:
        return self.values[j]

    @property
    def J(self) -> int:
        return len(self.values) - 1


@dataclass
class ExpansionResult:
    variant: str
    n: int
    target: int
    saddle: mpf
    kappa2: mpf
    prefactor: mpf
    coefficients: list  # c_m(r) or d_m(R)
    terms: list  # coefficients[m] * kappa2^-m
    partial_sums: list  # prefactor * sum_{k<=m} terms[k]
    prec: int
    phi: str = ""
    extra: dict = field(default_factory=dict)

    @property
    def M(self) -> int:
        return len(self.terms) - 1

    def partial_sum(self, M: int) -> mpf:
        return self.partial_sums[M]


def _check_variant(variant: str) -> str:
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")
    return variant


def target_for(n: int, variant: str) -> int:
    return n if _check_variant(variant) == "circle" else n + 1


# ---------------------------------------------------------------------------
# saddle equation x phi'(x) = target
# ---------------------------------------------------------------------------

def _newton_solve(phi: PhiSpec, target, lo, hi, prec: int) -> mpf:
    def h(x):
        return x * phi.d1(x) - target

    def dh(x):
        return phi.d1(x) + x * phi.d2(x)

    # narrow the bracket a little before Newton takes over
    for _ in range(64):
        mid = (lo + hi) / 2
        if h(mid) < 0:
            lo = mid
        else:
            hi = mid
        if hi - lo < hi * mpf(2) ** -20:
            break

    x = (lo + hi) / 2
    tol = mpf(2) ** (-prec + 4)
    for _ in range(200):
        hx = h(x)
        if hx == 0:
            return x
        if hx < 0:
            lo = max(lo, x)
        else:
            hi = min(hi, x)
        x_new = x - hx / dh(x)
        if not (lo <= x_new <= hi):
            # bisection fallback
            x_new = (lo + hi) / 2
        if abs(x_new - x) <= tol * abs(x_new):
            return x_new
        x = x_new
    return x


def solve_saddle(phi: PhiSpec, target, prec: int = DEFAULT_PREC) -> mpf:
    """Positive root of x phi'(x) = target (bisection to bracket, then Newton)."""
    if target < 1:
        raise ValueError("target must be >= 1")
    with mpmath.workprec(prec + 16):
        target = to_mpf(target)
        lo_d, hi_d = phi.domain
        lo = mpf(lo_d)
        if math.isinf(hi_d):
            hi = mpf(1)
            for _ in range(2000):
                if hi * phi.d1(hi) > target:
                    break
                lo, hi = hi, 2 * hi
            else:
                raise NoBracket(f"no sign change for {phi.name} up to x = {hi}")
        else:
            top = mpf(hi_d)
            gap = top - lo
            for _ in range(prec):
                gap /= 2
                hi = top - gap
                if hi * phi.d1(hi) > target:
                    break
                lo = hi
            else:
                raise NoBracket(f"no sign change for {phi.name} inside {phi.domain}")
        x = _newton_solve(phi, target, lo, hi, prec)
    with mpmath.workprec(prec):
        return +x


# ---------------------------------------------------------------------------
# cumulants
# ---------------------------------------------------------------------------

def _check_point(phi: PhiSpec, x) -> None:
    if not phi.in_domain(x):
        raise DomainError(f"{x} is outside the domain {phi.domain} of {phi.name}")


def exponent_series(phi: PhiSpec, x, order: int, variant: str) -> TruncatedSeries:
    """phi(x e^v) - phi(x) - x phi'(x) v   (circle)
    or phi(x(1+v)) - phi(x) - x phi'(x) log(1+v)   (line), to the given order.

    The v^0 and v^1 coefficients vanish identically and are set to zero.
    """
    _check_variant(variant)
    _check_point(phi, x)
    local = phi.taylor_at(x, order, centered=True)
    exact = local.exact and not isinstance(x, mpf)
    slope = x * phi.d1(x)
    if variant == "circle":
        inner = ps.expm1_series(order) * x
        lin = TruncatedSeries.variable(order) * slope
    else:
        inner = TruncatedSeries.variable(order) * x
        lin = ps.log1p_series(order) * slope
    if not exact:
        inner = inner.to_float()
    return (ps.compose(local, inner) - lin).drop_below(2)


def _cumulants(phi, x, n, J, variant, prec) -> CumulantSequence:
    with mpmath.workprec(prec):
        x = to_mpf(x)
        expo = exponent_series(phi, x, J + 1, variant)
        target = target_for(n, variant)
        vals = [mpf(0), x * phi.d1(x) - target]
        vals += [math.factorial(j) * expo[j] for j in range(2, J + 1)]
        return CumulantSequence(variant, x, n, tuple(vals), prec)


def cumulants_circle(phi: PhiSpec, r, n: int, J: int, prec: int = DEFAULT_PREC) -> CumulantSequence:
    """kappa_j(r) = j! [s^j] (-n s + phi(r e^s)), j = 1..J."""
    return _cumulants(phi, r, n, J, "circle", prec)


def cumulants_line(phi: PhiSpec, R, n: int, J: int, prec: int = DEFAULT_PREC) -> CumulantSequence:
    """lambda_j(R) = j! [s^j] (-(n+1) log(1+s) + phi(R(1+s))), j = 1..J."""
    return _cumulants(phi, R, n, J, "line", prec)


# ---------------------------------------------------------------------------
# expansion coefficients
# ---------------------------------------------------------------------------

def _ratio_series(phi, x, order, variant) -> TruncatedSeries:
    # (kappa_2 v^2 / 2) / D(v); kappa_2 / 2 is D's own v^2 coefficient, so
    # the quotient has constant term exactly 1
    expo = exponent_series(phi, x, order + 2, variant)
    half_k2 = expo[2]
    num = TruncatedSeries.monomial(2, order + 2, half_k2, exact=expo.exact)
    return ps.div(num, expo)


def saddle_coefficients(phi: PhiSpec, x, M: int, variant: str, prec: int = DEFAULT_PREC) -> list:
    """c_0(x)..c_M(x) (circle) or d_0(x)..d_M(x) (line) at the point x."""
    with mpmath.workprec(prec):
        x = to_mpf(x)
        base = _ratio_series(phi, x, 2 * M + 1, variant)
        out = []
        for m in range(M + 1):
            g = ps.coefficient(ps.pow_half_integer(base.truncate(2 * m + 1), 2 * m + 1), 2 * m)
            out.append(g * to_mpf(gaussian_factor(m)))
        return out


def coeff_saddle(phi: PhiSpec, base_point, m: int, variant: str, prec: int = DEFAULT_PREC) -> mpf:
    """c_m(r) for the circle, d_m(R) for the line."""
    return saddle_coefficients(phi, base_point, m, variant, prec)[m]


def c1_c2_closed(cum: CumulantSequence) -> tuple:
    """c_1, c_2 (or d_1, d_2) as rational functions of the cumulants 2..6."""
    if cum.J < 6:
        raise ValueError("need cumulants through order 6")
    k2, k3, k4, k5, k6 = (cum[j] for j in range(2, 7))
    with mpmath.workprec(cum.prec):
        c1 = (3 * k2 * k4 - 5 * k3 ** 2) / (24 * k2 ** 2)
        c2 = -(24 * k2 ** 3 * k6 - 168 * k2 ** 2 * k3 * k5 - 105 * k2 ** 2 * k4 ** 2
               + 630 * k2 * k3 ** 2 * k4 - 385 * k3 ** 4) / (1152 * k2 ** 4)
    return c1, c2


def kappa2(phi: PhiSpec, x) -> mpf:
    """x phi'(x) + x^2 phi''(x); the same for both variants."""
    return x * phi.d1(x) + x * x * phi.d2(x)


def expand(phi: PhiSpec, n: int, M: int, variant: str, prec: int = DEFAULT_PREC) -> ExpansionResult:
    """Saddle-point expansion of [z^n] e^phi through m = M."""
    _check_variant(variant)
    if n < 1 or M < 0:
        raise ValueError("need n >= 1 and M >= 0")
    target = target_for(n, variant)
    x = solve_saddle(phi, target, prec)
    with mpmath.workprec(prec):
        k2 = kappa2(phi, x)
        pref = x ** (-n) * mpmath.exp(phi.value(x)) / mpmath.sqrt(2 * mpmath.pi * k2)
        coeffs = saddle_coefficients(phi, x, M, variant, prec)
        terms = [c / k2 ** m for m, c in enumerate(coeffs)]
        sums, acc = [], mpf(0)
        for t in terms:
            acc += t
            sums.append(pref * acc)
    return ExpansionResult(variant=variant, n=n, target=target, saddle=x, kappa2=k2,
                           prefactor=pref, coefficients=coeffs, terms=terms,
                           partial_sums=sums, prec=prec, phi=phi.name)
