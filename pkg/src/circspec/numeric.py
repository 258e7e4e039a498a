"""Precision handling shared by the spectral routes.

Point values are mpmath ``mpf`` numbers; certified values are mpmath ``iv``
intervals with outward rounding. ``iv`` keeps its precision as global state,
so it is only ever changed through :func:`iv_precision`.
"""

from __future__ import annotations

import os
from contextlib import contextmanager
from fractions import Fraction

from mpmath import iv, mp
from mpmath.ctx_iv import ivmpf

START_PRECISION = 64
DEFAULT_PRECISION = 128
PRECISION_CAP = int(os.environ.get("CIRCSPEC_PRECISION_CAP", "4096"))


class PrecisionExhausted(ArithmeticError):
    """Refinement hit the precision cap without deciding a sign."""


@contextmanager
def iv_precision(bits: int):
    saved = iv.prec
    iv.prec = bits
    try:
        yield
    finally:
        iv.prec = saved


def is_interval(x) -> bool:
    return isinstance(x, ivmpf)


def exact_cos_turns(r: int, n: int) -> Fraction | None:
    """cos(2*pi*r/n) when it is rational, else None."""
    f = Fraction(r % n, n)
    return {
        Fraction(0): Fraction(1),
        Fraction(1, 6): Fraction(1, 2),
        Fraction(1, 4): Fraction(0),
        Fraction(1, 3): Fraction(-1, 2),
        Fraction(1, 2): Fraction(-1),
        Fraction(2, 3): Fraction(-1, 2),
        Fraction(3, 4): Fraction(0),
        Fraction(5, 6): Fraction(1, 2),
    }.get(f)


def cos_turns(r: int, n: int, prec: int = DEFAULT_PRECISION):
    """cos(2*pi*r/n) as an mpf at ``prec`` bits."""
    exact = exact_cos_turns(r, n)
    with mp.workprec(prec):
        if exact is not None:
            return mp.mpf(exact.numerator) / exact.denominator
        return mp.cos(2 * mp.pi * (r % n) / n)


def cos_turns_interval(r: int, n: int):
    """Enclosure of cos(2*pi*r/n) at the current ``iv.prec``."""
    exact = exact_cos_turns(r, n)
    if exact is not None:
        return iv.mpf(exact.numerator) / exact.denominator
    return iv.cos(2 * iv.pi * (r % n) / n)


def interval_sign(x) -> int | None:
    """+1 / -1 when the interval excludes zero, None otherwise."""
    if x.a > 0:
        return 1
    if x.b < 0:
        return -1
    if x.a == 0 and x.b == 0:
        return 0
    return None


def interval_width(x):
    return (x.b - x.a).a


def rational_interval(q: Fraction):
    return iv.mpf(q.numerator) / q.denominator


def certified_sign(evaluate, offset: Fraction = Fraction(0), start_prec: int = START_PRECISION,
                   prec_cap: int = PRECISION_CAP, max_width: float | None = None) -> int:
    """Sign of (value - offset), where ``evaluate()`` encloses value at the current iv.prec.

    Precision doubles until the enclosure of the difference excludes 0 and,
    when ``max_width`` is given, the value's enclosure is at most that wide.
    Exact ties are never reported; they exhaust the cap.
    """
    prec = start_prec
    while prec <= prec_cap:
        with iv_precision(prec):
            value = evaluate()
            diff = value - rational_interval(offset)
            sgn = interval_sign(diff)
            narrow = max_width is None or interval_width(value) <= max_width
        if sgn in (1, -1) and narrow:
            return sgn
        prec *= 2
    raise PrecisionExhausted(f"value not separated from {offset} within {prec_cap} bits")
