"""Truncated power series over exact rationals or mpmath floats.

A series is a dense tuple of coefficients ``c[0..N-1]`` standing for
``sum c[k] x^k  (mod x^N)``.  Coefficients are either all
:class:`fractions.Fraction` (exact mode) or all :class:`mpmath.mpf` (float
mode, at the ambient ``mpmath.mp.prec``).  Mixing the two promotes to float.

Every operation returns a new series; nothing is mutated after construction.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

import mpmath
from mpmath import mpf

Scalar = Union[Fraction, mpf]


class SeriesError(ArithmeticError):
    pass


class DivisionByZeroSeries(SeriesError):
    pass


class LeadingOrderMismatch(SeriesError):
    pass


class BadConstantTerm(SeriesError):
    def __init__(self, value, expected):
        super().__init__(f"constant term {value} (expected {expected})")
        self.value = value
        self.expected = expected


class ZeroLinearTerm(SeriesError):
    pass


class OrderExceeded(SeriesError, IndexError):
    pass


def to_mpf(x) -> mpf:
    """Convert an int, Fraction or mpf to an mpf at the current precision."""
    if isinstance(x, Fraction):
        return mpf(x.numerator) / x.denominator
    return mpf(x)


def _is_float(x) -> bool:
    return isinstance(x, (mpf, float))


def _float_tolerance() -> mpf:
    # constant terms produced by float pipelines are 1 (or 0) up to rounding
    return mpf(2) ** (-(mpmath.mp.prec // 2))


class TruncatedSeries:
    __slots__ = ("coeffs", "exact")

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = list(coeffs)
        if order is not None:
            if order < 0:
                raise ValueError("order must be nonnegative")
            cs = cs[:order] + [0] * (order - len(cs))
        exact = not any(_is_float(c) for c in cs)
        if exact:
            cs = [c if isinstance(c, Fraction) else Fraction(c) for c in cs]
        else:
            cs = [to_mpf(c) for c in cs]
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "exact", exact)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    # -- construction helpers -------------------------------------------------

    @classmethod
    def zero(cls, order: int, exact: bool = True) -> "TruncatedSeries":
        return cls([Fraction(0) if exact else mpf(0)] * order)

    @classmethod
    def one(cls, order: int, exact: bool = True) -> "TruncatedSeries":
        return cls.monomial(0, order, exact=exact)

    @classmethod
    def monomial(cls, k: int, order: int, coeff=1, exact: bool = True) -> "TruncatedSeries":
        zero = Fraction(0) if exact else mpf(0)
        cs = [zero] * order
        if k < order:
            cs[k] = Fraction(coeff) if exact else to_mpf(coeff)
        return cls(cs)

    @classmethod
    def variable(cls, order: int, exact: bool = True) -> "TruncatedSeries":
        return cls.monomial(1, order, exact=exact)

    # -- basic protocol -------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k]

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        kind = "exact" if self.exact else f"mpf[{mpmath.mp.prec}]"
        return f"TruncatedSeries({[str(c) for c in self.coeffs]}, {kind})"

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, or None for the zero series."""
        for k, c in enumerate(self.coeffs):
            if c != 0:
                return k
        return None

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise OrderExceeded(f"cannot extend order {self.order} to {order}")
        return TruncatedSeries(self.coeffs[:order])

    def to_float(self) -> "TruncatedSeries":
        return TruncatedSeries([to_mpf(c) for c in self.coeffs])

    def _scalar(self, c):
        if self.exact and not _is_float(c):
            return Fraction(c)
        return to_mpf(c)

    # -- ring operations ------------------------------------------------------

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs])

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            cs = list(self.coeffs)
            if cs:
                cs[0] = cs[0] + self._scalar(other)
            return TruncatedSeries(cs)
        n = min(self.order, other.order)
        a, b = _coerce(self, other)
        return TruncatedSeries([a[k] + b[k] for k in range(n)])

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return mul(self, other)
        c = self._scalar(other)
        return TruncatedSeries([x * c for x in self.coeffs])

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return div(self, other)
        c = self._scalar(other)
        if c == 0:
            raise ZeroDivisionError("division of a series by zero scalar")
        return TruncatedSeries([x / c for x in self.coeffs])

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("use power() for non-integer exponents")
        result = TruncatedSeries.one(self.order, exact=self.exact)
        base = self
        while k:
            if k & 1:
                result = mul(result, base)
            base = mul(base, base)
            k >>= 1
        return result

    # -- calculus -------------------------------------------------------------

    def derivative(self) -> "TruncatedSeries":
        """Termwise derivative; the result has order one less."""
        return TruncatedSeries([k * self.coeffs[k] for k in range(1, self.order)])

    def integral(self) -> "TruncatedSeries":
        """Antiderivative with zero constant; order grows by one."""
        zero = Fraction(0) if self.exact else mpf(0)
        return TruncatedSeries([zero] + [c / (k + 1) for k, c in enumerate(self.coeffs)])

    def shift_down(self, k: int) -> "TruncatedSeries":
        """Divide by x^k, dropping the k leading coefficients (which must vanish)."""
        for c in self.coeffs[:k]:
            if c != 0:
                raise LeadingOrderMismatch(f"series does not vanish to order {k}")
        return TruncatedSeries(self.coeffs[k:])

    def drop_below(self, k: int) -> "TruncatedSeries":
        """Force the coefficients of x^0..x^{k-1} to zero.

        Used where those coefficients vanish analytically but a float pipeline
        leaves rounding residue behind.
        """
        zero = Fraction(0) if self.exact else mpf(0)
        return TruncatedSeries([zero] * min(k, self.order) + list(self.coeffs[k:]))

    def __call__(self, x):
        """Evaluate the polynomial part at a scalar point."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def _coerce(a: TruncatedSeries, b: TruncatedSeries) -> tuple[Sequence, Sequence]:
    if a.exact == b.exact:
        return a.coeffs, b.coeffs
    return [to_mpf(c) for c in a.coeffs], [to_mpf(c) for c in b.coeffs]


def series(coeffs: Iterable, order: int | None = None) -> TruncatedSeries:
    return TruncatedSeries(coeffs, order)


def coefficient(a: TruncatedSeries, k: int):
    """The exact (or float) coefficient of x^k."""
    if k < 0:
        return Fraction(0) if a.exact else mpf(0)
    if k >= a.order:
        raise OrderExceeded(f"coefficient {k} requested from a series of order {a.order}")
    return a.coeffs[k]


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.order, b.order)
    ac, bc = _coerce(a, b)
    out = []
    for k in range(n):
        acc = ac[0] * bc[k]
        for i in range(1, k + 1):
            acc += ac[i] * bc[k - i]
        out.append(acc)
    return TruncatedSeries(out)


def _inverse_unit(b: Sequence, n: int) -> list:
    # 1/b for b[0] != 0, first n coefficients
    inv0 = 1 / b[0]
    out = [inv0]
    for k in range(1, n):
        acc = b[1] * out[k - 1] if len(b) > 1 else 0
        for i in range(2, min(k, len(b) - 1) + 1):
            acc += b[i] * out[k - i]
        out.append(-acc * inv0)
    return out


def div(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Quotient a/b.

    If ``b`` vanishes to order ``v`` (first nonzero coefficient at x^v), the
    common factor x^v is cancelled first; ``a`` must vanish to at least the
    same order.  The quotient is known modulo x^(min(order) - v).
    """
    v = b.valuation()
    if v is None:
        raise DivisionByZeroSeries("divisor is zero to its known order")
    va = a.valuation()
    if va is not None and va < v:
        raise LeadingOrderMismatch(
            f"dividend vanishes to order {va}, divisor to order {v}")
    n = min(a.order, b.order) - v
    ac, bc = _coerce(a, b)
    ac, bc = ac[v:], bc[v:]
    inv = _inverse_unit(bc, n)
    out = []
    for k in range(n):
        acc = ac[0] * inv[k]
        for i in range(1, k + 1):
            acc += ac[i] * inv[k - i]
        out.append(acc)
    return TruncatedSeries(out)


def _check_constant(a: TruncatedSeries, expected: int) -> None:
    if a.order == 0:
        return
    c0 = a.coeffs[0]
    if a.exact:
        if c0 != expected:
            raise BadConstantTerm(c0, expected)
    elif abs(c0 - expected) > _float_tolerance():
        raise BadConstantTerm(c0, expected)


def exp(a: TruncatedSeries) -> TruncatedSeries:
    """exp(a) for a with zero constant term, via b' = a' b."""
    _check_constant(a, 0)
    n = a.order
    if n == 0:
        return a
    one = Fraction(1) if a.exact else mpf(1)
    ka = [k * c for k, c in enumerate(a.coeffs)]
    out = [one]
    for m in range(1, n):
        acc = ka[1] * out[m - 1]
        for k in range(2, m + 1):
            acc += ka[k] * out[m - k]
        out.append(acc / m)
    return TruncatedSeries(out)


def log(a: TruncatedSeries) -> TruncatedSeries:
    """log(a) for a with constant term 1 (a' / a integrated)."""
    _check_constant(a, 1)
    n = a.order
    if n == 0:
        return a
    c = a.coeffs
    zero = Fraction(0) if a.exact else mpf(0)
    inv0 = 1 / c[0]
    out = [zero]
    # m L_m = m a_m - sum_{k=1}^{m-1} k L_k a_{m-k}, all over a_0
    for m in range(1, n):
        acc = m * c[m]
        for k in range(1, m):
            acc -= k * out[k] * c[m - k]
        out.append(acc * inv0 / m)
    return TruncatedSeries(out)


def power(a: TruncatedSeries, alpha) -> TruncatedSeries:
    """a**alpha for a with constant term 1 and rational (or float) alpha."""
    _check_constant(a, 1)
    return exp(log(a) * alpha)


def pow_half_integer(a: TruncatedSeries, k: int) -> TruncatedSeries:
    """a**(k/2) for a with constant term 1."""
    return power(a, Fraction(k, 2))


def compose(outer: TruncatedSeries, inner: TruncatedSeries) -> TruncatedSeries:
    """outer(inner(x)) by Horner's rule; inner must have zero constant term."""
    _check_constant(inner, 0)
    n = min(outer.order, inner.order)
    if inner.exact:
        inner_t = inner.truncate(n)
    else:
        inner_t = inner.truncate(n).drop_below(1)
    if n == 0:
        return TruncatedSeries([])
    exact = outer.exact and inner.exact
    oc = outer.coeffs if exact else [to_mpf(c) for c in outer.coeffs]
    acc = TruncatedSeries.monomial(0, n, oc[n - 1], exact=exact)
    for k in range(n - 2, -1, -1):
        acc = mul(acc, inner_t) + oc[k]
    return acc


def reversion(a: TruncatedSeries) -> TruncatedSeries:
    """Compositional inverse b with a(b(x)) = x, by Newton iteration.

    Each step is b <- b - (a(b) - x) / a'(b); the number of correct
    coefficients doubles, so ceil(log2 N) + 1 steps suffice.
    """
    if a.order < 2:
        raise ZeroLinearTerm("series too short to revert")
    _check_constant(a, 0)
    if a.coeffs[1] == 0:
        raise ZeroLinearTerm("linear coefficient is zero")
    n = a.order
    x = TruncatedSeries.variable(n, exact=a.exact)
    b = x / a.coeffs[1]
    da = a.derivative()
    steps = max(1, math.ceil(math.log2(n))) + 1
    for _ in range(steps):
        residual = compose(a, b) - x
        slope = compose(da, b.truncate(da.order))
        if slope.order < n:
            slope = TruncatedSeries(list(slope.coeffs) + [0] * (n - slope.order))
        b = b - div(residual, slope)
        if not a.exact:
            b = b.drop_below(1)
    return b


def from_function_coeffs(fn, order: int) -> TruncatedSeries:
    """Series whose k-th coefficient is ``fn(k)``."""
    return TruncatedSeries([fn(k) for k in range(order)])


# -- a few standard exact series ----------------------------------------------

def exp_series(order: int) -> TruncatedSeries:
    return TruncatedSeries([Fraction(1, math.factorial(k)) for k in range(order)])


def log1p_series(order: int) -> TruncatedSeries:
    """log(1 + x)."""
    return TruncatedSeries([Fraction(0)] + [Fraction((-1) ** (k + 1), k) for k in range(1, order)])


def expm1_series(order: int) -> TruncatedSeries:
    """e^x - 1."""
    return exp_series(order) - 1
