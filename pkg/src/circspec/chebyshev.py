"""Chebyshev polynomials of the first and second kind.

Values come from the three-term recurrence. Inputs may be floats, mpf
numbers or mpmath intervals; intervals are propagated with outward
rounding so the result encloses the exact value.
"""

from __future__ import annotations

import enum
from fractions import Fraction

from mpmath import iv, mp

from .numeric import (
    DEFAULT_PRECISION,
    PRECISION_CAP,
    PrecisionExhausted,
    iv_precision,
    is_interval,
    rational_interval,
)


class ChebKind(enum.Enum):
    First = "T"
    Second = "U"


def _recurrence(n, x, seed0, seed1):
    if n == 0:
        return seed0
    two_x = 2 * x
    prev, cur = seed0, seed1
    for _ in range(n - 1):
        prev, cur = cur, two_x * cur - prev
    return cur


def _evaluate(kind: ChebKind, n: int, x, prec: int):
    if is_interval(x):
        with iv_precision(prec):
            one = iv.mpf(1)
            x = +x
            seed1 = x if kind is ChebKind.First else 2 * x
            return _recurrence(n, x, one, seed1)
    with mp.workprec(prec):
        x = mp.mpf(x)
        seed1 = x if kind is ChebKind.First else 2 * x
        return _recurrence(n, x, mp.mpf(1), seed1)


def cheb_T(n: int, x, prec: int = DEFAULT_PRECISION):
    """T_n(x) by T_0 = 1, T_1 = x, T_{m+1} = 2x T_m - T_{m-1}."""
    if n < 0:
        raise ValueError(f"degree must be >= 0, got {n}")
    return _evaluate(ChebKind.First, n, x, prec)


def cheb_U(n: int, x, prec: int = DEFAULT_PRECISION):
    """U_n(x) by U_0 = 1, U_1 = 2x, U_{m+1} = 2x U_m - U_{m-1}; U_{-1} = 0."""
    if n < -1:
        raise ValueError(f"degree must be >= -1, got {n}")
    if n == -1:
        if is_interval(x):
            return iv.mpf(0)
        return mp.mpf(0)
    return _evaluate(ChebKind.Second, n, x, prec)


def cheb(kind: ChebKind, n: int, x, prec: int = DEFAULT_PRECISION):
    if kind is ChebKind.First:
        return cheb_T(n, x, prec)
    return cheb_U(n, x, prec)


def u2s_lower_bound_check(s: int, n: int, j: int, prec: int = DEFAULT_PRECISION) -> bool:
    """Certify U_{2s}(cos(j*pi/n)) >= -(s+1)/2 for n = 2k, 2 <= j <= k-1.

    The recurrence is run over intervals; precision doubles while the
    enclosure straddles the bound.
    """
    if s < 2:
        raise ValueError(f"need s >= 2, got s={s}")
    if n % 2:
        raise ValueError(f"need even order n = 2k, got n={n}")
    k = n // 2
    if not 2 <= j <= k - 1:
        raise ValueError(f"index j={j} outside 2..{k - 1}")
    bound = Fraction(-(s + 1), 2)
    while prec <= PRECISION_CAP:
        with iv_precision(prec):
            y = iv.cos(iv.pi * j / n)
            value = cheb_U(2 * s, y, prec)
            b = rational_interval(bound)
            if value.a >= b.b:
                return True
            if value.b < b.a:
                return False
        prec *= 2
    raise PrecisionExhausted(f"U_{2 * s}(cos({j}pi/{n})) not separated from {bound}")
