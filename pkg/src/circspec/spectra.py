"""Spectra of circulant graphs.

Eigenvalue j of a circulant with connection set S is sum_{a in S} w^(ja),
w = exp(2*pi*i/n). Three routes compute it: the Fourier cosine sum, the
Chebyshev closed forms, and (for tests) a dense Jacobi eigensolver. Power
sums and characteristic polynomials are exact integers; inertia is
certified by interval evaluation reconciled against the exact nullity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

from mpmath import iv, mp

from .chebyshev import cheb_T, cheb_U
from .core import CirculantGraph, as_graph
from .linalg import circulant_nullity, integer_rank
from .numeric import (
    DEFAULT_PRECISION,
    PRECISION_CAP,
    START_PRECISION,
    PrecisionExhausted,
    cos_turns,
    cos_turns_interval,
    interval_sign,
    iv_precision,
)
from .polynomial import IntPolynomial, newton_polynomial

# Bareiss elimination is cubic in n with growing integers; above this order
# the nullity comes from cyclotomic divisibility instead.
BAREISS_MAX_ORDER = 128


def _check_index(g: CirculantGraph, j: int):
    if not 0 <= j < g.n:
        raise IndexError(f"eigen-index {j} outside 0..{g.n - 1}")


def eigenvalue_fourier(g, j: int, prec: int = DEFAULT_PRECISION):
    """sum over generators a of 2cos(2*pi*j*a/n), plus (-1)^j for a = n/2."""
    g = as_graph(g)
    _check_index(g, j)
    n = g.n
    with mp.workprec(prec):
        total = mp.mpf(0)
        for a in g.generators:
            total += 2 * cos_turns(j * a, n, prec)
        if g.connection_set.has_half:
            total += 1 if j % 2 == 0 else -1
        return +total


def eigenvalue_interval(g, j: int):
    """Enclosure of eigenvalue j at the current interval precision."""
    g = as_graph(g)
    n = g.n
    total = iv.mpf(0)
    for a in g.generators:
        total += 2 * cos_turns_interval(j * a, n)
    if g.connection_set.has_half:
        total += 1 if j % 2 == 0 else -1
    return total


def _consecutive(gens) -> bool:
    return len(gens) > 0 and all(b == a + 1 for a, b in zip(gens, gens[1:]))


def eigenvalue_chebyshev(g, j: int, prec: int = DEFAULT_PRECISION):
    """2 * sum_a T_a(X_j) with X_j = cos(2*pi*j/n).

    For consecutive generators a_1..a_s the second-kind form
    U_{2a_s}(Y_j) - U_{2(a_1 - 1)}(Y_j), Y_j = cos(pi*j/n), is evaluated too
    and must agree.
    """
    g = as_graph(g)
    _check_index(g, j)
    if g.connection_set.has_half:
        raise ValueError(f"Chebyshev form needs generators <= (n-1)/2; {g.n // 2} = n/2 present")
    n = g.n
    gens = g.generators
    with mp.workprec(prec):
        x = cos_turns(j, n, prec)
        value = 2 * mp.fsum(cheb_T(a, x, prec) for a in gens)
        if _consecutive(gens):
            y = mp.cos(mp.pi * j / n)
            u_form = cheb_U(2 * gens[-1], y, prec) - cheb_U(2 * (gens[0] - 1), y, prec)
            tol = mp.ldexp(1, -(prec - 8 - 2 * (2 * gens[-1] + 1).bit_length()))
            if abs(u_form - value) > tol * (1 + abs(value)):
                raise ArithmeticError(
                    f"T-form {value} and U-form {u_form} disagree at j={j} for {g}"
                )
        return +value


@dataclass(frozen=True)
class Spectrum:
    values: tuple
    precision: int

    @property
    def n(self) -> int:
        return len(self.values)

    def floats(self) -> list[float]:
        return [float(v) for v in self.values]

    def __getitem__(self, j):
        return self.values[j]

    def __len__(self):
        return len(self.values)


def spectrum(g, prec: int = DEFAULT_PRECISION) -> Spectrum:
    """All n eigenvalues in index order; entries j and n-j are the same object."""
    g = as_graph(g)
    n = g.n
    half = [eigenvalue_fourier(g, j, prec) for j in range(n // 2 + 1)]
    values = [half[min(j, n - j)] for j in range(n)]
    return Spectrum(tuple(values), prec)


@dataclass(frozen=True)
class PowerSums:
    # sums[t-1] = trace(A^t)
    sums: tuple[int, ...]

    def p(self, t: int) -> int:
        return self.sums[t - 1]

    def even(self) -> tuple[int, ...]:
        return self.sums[1::2]

    def __len__(self):
        return len(self.sums)

    def to_strings(self) -> list[str]:
        return [str(v) for v in self.sums]


def _runs(elements) -> list[tuple[int, int]]:
    runs = []
    for a in elements:
        if runs and runs[-1][1] == a - 1:
            runs[-1] = (runs[-1][0], a)
        else:
            runs.append((a, a))
    return runs


def walk_rows(g, m: int) -> Iterator[list[int]]:
    """First rows of A, A^2, ..., A^m by repeated circular convolution.

    Each step convolves with the indicator of S, one window sum per maximal
    run of consecutive elements, using prefix sums over the doubled row.
    """
    g = as_graph(g)
    n = g.n
    runs = _runs(g.elements)
    row = g.first_row()
    for t in range(1, m + 1):
        if t > 1:
            prefix = [0]
            acc = 0
            for v in row + row:
                acc += v
                prefix.append(acc)
            # window sum for a run [lo, hi] at i is prefix[i-lo+n+1] - prefix[i-hi+n]
            parts = [
                [x - y for x, y in zip(prefix[n - lo + 1:2 * n - lo + 1], prefix[n - hi:2 * n - hi])]
                for lo, hi in runs
            ]
            if not parts:
                row = [0] * n
            elif len(parts) == 1:
                row = parts[0]
            else:
                row = [sum(col) for col in zip(*parts)]
        yield row


def square_row(g) -> list[int]:
    """First row of A^2: entry j counts walks of length 2 from 0 to j."""
    *_, row = walk_rows(g, 2)
    return row


def power_sums(g, max_power: int) -> PowerSums:
    if max_power < 1:
        raise ValueError(f"max_power must be >= 1, got {max_power}")
    g = as_graph(g)
    return PowerSums(tuple(g.n * row[0] for row in walk_rows(g, max_power)))


def char_poly(g) -> IntPolynomial:
    """det(xI - A) from p_1..p_n via Newton's identities."""
    g = as_graph(g)
    return newton_polynomial(power_sums(g, g.n).sums, g.n)


def char_poly_square(g) -> IntPolynomial:
    """det(xI - A^2); its roots are the squared eigenvalues."""
    g = as_graph(g)
    return newton_polynomial(power_sums(g, 2 * g.n).even(), g.n)


class Inertia(NamedTuple):
    positive: int
    negative: int
    zero: int

    def __str__(self):
        return f"({self.positive}, {self.negative}, {self.zero})"


def adjacency_rank(g, method: str = "auto") -> int:
    """Rank of A over Q.

    ``bareiss`` runs fraction-free elimination on the dense matrix;
    ``cyclotomic`` counts roots of unity that are zeros of sum_{a in S} x^a.
    """
    g = as_graph(g)
    if method == "auto":
        method = "bareiss" if g.n <= BAREISS_MAX_ORDER else "cyclotomic"
    if method == "bareiss":
        return integer_rank(g.adjacency_matrix())
    if method == "cyclotomic":
        return g.n - circulant_nullity(g.first_row())
    raise ValueError(f"unknown rank method {method!r}")


def certified_signs(g, rank_method: str = "auto", start_prec: int = START_PRECISION,
                    prec_cap: int = PRECISION_CAP) -> list[int]:
    """Sign (-1, 0, +1) of every eigenvalue, j = 0..n-1.

    Nonzero eigenvalues are those whose enclosure excludes 0. Precision
    doubles until the eigenvalues still straddling 0 are exactly as many
    as the exact nullity n - rank(A); those are then the zero eigenvalues.
    """
    g = as_graph(g)
    n = g.n
    nullity = n - adjacency_rank(g, rank_method)
    signs: dict[int, int] = {}
    unresolved = list(range(n // 2 + 1))

    def multiplicity(j):
        return 1 if j == 0 or 2 * j == n else 2

    prec = start_prec
    while True:
        with iv_precision(prec):
            still = []
            for j in unresolved:
                sgn = interval_sign(eigenvalue_interval(g, j))
                if sgn in (1, -1):
                    signs[j] = sgn
                else:
                    still.append(j)
        unresolved = still
        count = sum(multiplicity(j) for j in unresolved)
        if count == nullity:
            for j in unresolved:
                signs[j] = 0
            break
        if count < nullity:
            raise ArithmeticError(
                f"{g}: {count} candidate zero eigenvalues but nullity is {nullity}"
            )
        prec *= 2
        if prec > prec_cap:
            raise PrecisionExhausted(
                f"{g}: indices {unresolved} not separated from 0 at {prec // 2} bits"
            )
    return [signs[min(j, n - j)] for j in range(n)]


def inertia(g, rank_method: str = "auto") -> Inertia:
    g = as_graph(g)
    signs = certified_signs(g, rank_method)
    result = Inertia(signs.count(1), signs.count(-1), signs.count(0))
    if result.positive + result.negative != g.n - result.zero:
        raise ArithmeticError(f"inertia {result} inconsistent with order {g.n}")
    with iv_precision(START_PRECISION):
        trace = sum((eigenvalue_interval(g, j) for j in range(g.n)), iv.mpf(0))
    if not (trace.a <= 0 <= trace.b):
        raise ArithmeticError(f"{g}: eigenvalue sum {trace} excludes 0")
    return result


def inertia_odd_index_signs(g, rank_method: str = "auto") -> list[int]:
    """Certified signs of eigenvalues 1, 3, ..., n-1 for even n."""
    g = as_graph(g)
    if g.n % 2:
        raise ValueError(f"odd-index signs need even order, got n={g.n}")
    signs = certified_signs(g, rank_method)
    return signs[1::2]


def spectrum_record(g, prec: int = DEFAULT_PRECISION, max_power: int = 8) -> dict:
    g = as_graph(g)
    return {
        "n": g.n,
        "set": list(g.elements),
        "eigenvalues": spectrum(g, prec).floats(),
        "power_sums": power_sums(g, max_power).to_strings(),
        "inertia": list(inertia(g)),
    }
