"""Normalized error measures for the two saddle-point expansions, and CSV sweeps.

For a variant with prefactor P_n and terms T_m the raw error is

    | [z^n] e^phi / P_n - sum_{m<=M} T_m |

scaled by a phi-specific power of n so the curves stay on a readable scale.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass

import mpmath
from mpmath import mpf

from .catalog import PhiSpec, get_phi
from .oracles import coefficient_an
from .saddle import DEFAULT_PREC, expand
from .series import to_mpf

GUARD_BITS = 64
DIGITS = 30
DELTA_VARIANTS = {"c": "circle", "v": "line"}
HEADER = ("phi", "n", "M", "variant", "delta")

# normalization classes: name -> exponent rule
_NORM_CLASS = {
    "idempotent": "n/log n",
    "bell": "n/log n",
    "ordered": "sqrt n",
    "involutions": "n",
    "stirling": "n",
}

# default sweep ranges (n_from, n_to, step, M values)
SWEEP_RANGES = {
    "idempotent": (20, 200, 1, (0, 1, 2, 3, 4)),
    "bell": (15, 200, 1, (0, 1, 2, 3, 4)),
    "ordered": (10, 200, 1, (0, 1, 2, 3, 4)),
    "involutions": (100, 200, 5, (0, 1, 2, 3)),
}


@dataclass(frozen=True)
class DeltaRow:
    phi: str
    n: int
    M: int
    variant: str
    norm_class: str
    delta: mpf

    def formatted(self) -> str:
        return format_decimal(self.delta)


def normalization(phi_name: str, n: int, M: int) -> mpf:
    rule = _NORM_CLASS.get(phi_name, "n")
    n = mpf(n)
    if rule == "n/log n":
        return (n / mpmath.log(n)) ** (M + 1)
    if rule == "sqrt n":
        return n ** (mpf(M + 1) / 2)
    return n ** (M + 1)


def format_decimal(x, digits: int = DIGITS) -> str:
    return mpmath.nstr(x, digits, min_fixed=-3, max_fixed=3, strip_zeros=False)


def _resolve(phi) -> PhiSpec:
    return get_phi(phi) if isinstance(phi, str) else phi


def _check_args(n, M, variant):
    if variant not in DELTA_VARIANTS:
        raise ValueError(f"variant must be 'c' or 'v', got {variant!r}")
    if n < 3:
        raise ValueError("n must be >= 3")
    if M < 0:
        raise ValueError("M must be >= 0")


def delta_all(phi, n: int, max_M: int, variant: str, prec: int = DEFAULT_PREC) -> list[DeltaRow]:
    """DeltaRow for M = 0..max_M, sharing one saddle solve and one exact coefficient."""
    phi = _resolve(phi)
    _check_args(n, max_M, variant)
    exact = coefficient_an(phi, n)
    res = expand(phi, n, max_M, DELTA_VARIANTS[variant], prec)
    rows = []
    with mpmath.workprec(prec + GUARD_BITS):
        scaled = to_mpf(exact) / res.prefactor
        acc = mpf(0)
        for M, term in enumerate(res.terms):
            acc += term
            d = abs(scaled - acc) * normalization(phi.name, n, M)
            rows.append(DeltaRow(phi.name, n, M, variant, _NORM_CLASS.get(phi.name, "n"), +d))
    return rows


def delta(phi, n: int, M: int, variant: str, prec: int = DEFAULT_PREC) -> DeltaRow:
    return delta_all(phi, n, M, variant, prec)[M]


def delta_sweep_rows(phi, n_from: int, n_to: int, step: int = 1, M_list=(0, 1, 2, 3, 4),
                     prec: int = DEFAULT_PREC) -> list[DeltaRow]:
    if step < 1 or n_from < 3 or n_to < n_from:
        raise ValueError("need 3 <= n_from <= n_to and step >= 1")
    M_list = sorted(set(M_list))
    if not M_list or M_list[0] < 0:
        raise ValueError("M_list must be nonempty and nonnegative")
    rows = []
    for n in range(n_from, n_to + 1, step):
        for v in DELTA_VARIANTS:
            all_rows = delta_all(phi, n, M_list[-1], v, prec)
            rows.extend(all_rows[M] for M in M_list)
    rows.sort(key=lambda r: (r.n, r.M, r.variant))
    return rows


def rows_to_csv(rows: list[DeltaRow], with_diff: bool | None = None) -> str:
    """CSV text; ``delta_diff`` (c minus v at the same n, M) is added for involutions by default."""
    if with_diff is None:
        with_diff = bool(rows) and rows[0].phi == "involutions"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(HEADER + (("delta_diff",) if with_diff else ()))
    by_key = {(r.n, r.M, r.variant): r.delta for r in rows}
    for r in rows:
        line = [r.phi, r.n, r.M, r.variant, r.formatted()]
        if with_diff:
            diff = by_key[(r.n, r.M, "c")] - by_key[(r.n, r.M, "v")]
            line.append(format_decimal(diff))
        w.writerow(line)
    return buf.getvalue()


def delta_sweep(phi, n_from: int, n_to: int, step: int = 1, M_list=(0, 1, 2, 3, 4),
                prec: int = DEFAULT_PREC) -> str:
    return rows_to_csv(delta_sweep_rows(phi, n_from, n_to, step, M_list, prec))


def ordering_fraction(rows: list[DeltaRow], M: int, lower: str) -> float:
    """Share of n at which variant ``lower`` has the smaller delta at this M."""
    by_n: dict[int, dict[str, mpf]] = {}
    for r in rows:
        if r.M == M:
            by_n.setdefault(r.n, {})[r.variant] = r.delta
    other = "v" if lower == "c" else "c"
    wins = sum(1 for d in by_n.values() if d[lower] < d[other])
    return wins / len(by_n) if by_n else math.nan
