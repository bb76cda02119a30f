"""Closed-form bounds on the achromatic and pseudoachromatic indices.

Lower bounds are evaluated in exact integers; the one float comparison uses
a small relative slack and is cross-checked against an exact integer chain,
so rounding can never accept a false inequality.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ShapeError

FLOAT_SLACK = 1e-9


def shape_index(n: int) -> int:
    """The i with n = 3*2^i - 1, or raise ShapeError."""
    i = 1
    while 3 * 2**i - 1 <= n:
        if 3 * 2**i - 1 == n:
            return i
        i += 1
    raise ShapeError(f"n={n} is not of the form 3*2^i - 1")


def point_count(n: int, q: int) -> int:
    return (q ** (n + 1) - 1) // (q - 1)


def alpha_lower_value(n: int, q: int) -> int:
    """(q^(n+t+1) - 1)/(q - 1) with t = 2^i - 1: the constructed color count."""
    i = shape_index(n)
    t = 2**i - 1
    return (q ** (n + t + 1) - 1) // (q - 1)


@dataclass
class PsiUpperDetails:
    value: int
    quadratic_root: float  # (1 + sqrt(1 + 4 v r (r-1))) / 2


def psi_upper_details(n: int, q: int) -> PsiUpperDetails:
    v = point_count(n, q)
    r = (v - 1) // q
    root = (1 + math.sqrt(1 + 4 * v * r * (r - 1))) / 2
    # floor(sqrt(v) * (v-1) / q) without float rounding above the true value
    value = math.isqrt(v * (v - 1) ** 2) // q
    return PsiUpperDetails(value=value, quadratic_root=root)


def psi_upper_value(n: int, q: int) -> int:
    """floor(sqrt(v) * (v-1)/q), an upper bound for the pseudoachromatic index."""
    if n < 2:
        raise ValueError("the upper bound needs n >= 2")
    return psi_upper_details(n, q).value


def counting_incidence_check(n: int, q: int, k: int) -> bool:
    """Raw feasibility: v*C(r,2) point-line incidence pairs cover C(k,2) color pairs."""
    if k < 1:
        raise ValueError("k must be >= 1")
    v = point_count(n, q)
    r = (v - 1) // q
    return v * math.comb(r, 2) >= math.comb(k, 2)


def check_lower_bound_inequality(n: int, q: int) -> bool:
    """Verify c_n * v^h / q <= alpha_lower_value(n,q) with h = (4n+1)/(3n).

    The chain (q^(hn)-1)/(q-1) > q^(hn-1) > 2^(-h) v^h / q is confirmed on
    its integer sides exactly: the middle term equals 2^(-h)(2q^n)^h/q and
    the last step reduces to 2 q^n > v.
    """
    i = shape_index(n)
    t = 2**i - 1
    v = point_count(n, q)
    alpha = alpha_lower_value(n, q)
    h = (4 * n + 1) / (3 * n)
    assert n + t + 1 == (4 * n + 1) // 3  # hn is the integer n+t+1

    # exact integer chain
    middle = q ** (n + t)  # 2^(-h) (2 q^n)^h / q
    if not alpha > middle:
        return False
    if not 2 * q**n > v:
        return False

    # float evaluation of the stated bound, with slack
    c_n = 2.0**-h
    bound = c_n * v**h / q
    if not bound <= middle * (1 + FLOAT_SLACK):
        return False
    return bound <= alpha * (1 + FLOAT_SLACK)


@dataclass
class BoundsRow:
    """One row of the bounds table for PG(n,q)."""

    n: int
    q: int
    v: int
    r: int
    lower_alpha: int | None
    upper_psi: int
    chromatic_upper: int
    h: float | None
    c_n: float | None
    plane_exact: int | None  # psi' = v for projective planes (n = 2)


def bounds_row(n: int, q: int) -> BoundsRow:
    v = point_count(n, q)
    r = (v - 1) // q
    try:
        lower = alpha_lower_value(n, q)
        i = shape_index(n)
        h: float | None = (4 * n + 1) / (3 * n)
        c_n: float | None = 2.0**-h
    except ShapeError:
        lower, h, c_n = None, None, None
    upper = psi_upper_value(n, q)
    if lower is not None:
        assert lower <= upper
    return BoundsRow(
        n=n,
        q=q,
        v=v,
        r=r,
        lower_alpha=lower,
        upper_psi=upper,
        chromatic_upper=v,
        h=h,
        c_n=c_n,
        plane_exact=v if n == 2 else None,
    )


def bounds_table(ns, qs) -> list[BoundsRow]:
    return [bounds_row(n, q) for n in ns for q in qs]
