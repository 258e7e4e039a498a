"""Exact integer linear algebra and the dense eigenvalue oracle."""

from __future__ import annotations

import math
from functools import lru_cache
from math import gcd

import numpy as np


def integer_rank(matrix) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination.

    Every intermediate entry is a minor of the input, so the division by
    the previous pivot is exact and all arithmetic stays in Z.
    """
    a = [[int(v) for v in row] for row in matrix]
    if not a:
        return 0
    rows, cols = len(a), len(a[0])
    rank = 0
    prev = 1
    for c in range(cols):
        if rank == rows:
            break
        pivot_row = next((r for r in range(rank, rows) if a[r][c]), None)
        if pivot_row is None:
            continue
        a[rank], a[pivot_row] = a[pivot_row], a[rank]
        prow = a[rank]
        p = prow[c]
        tail = prow[c + 1:]
        for r in range(rank + 1, rows):
            row = a[r]
            m = row[c]
            if m:
                row[c + 1:] = [(p * x - m * y) // prev for x, y in zip(row[c + 1:], tail)]
            elif p != prev:
                row[c + 1:] = [(p * x) // prev for x in row[c + 1:]]
            row[c] = 0
        prev = p
        rank += 1
    return rank


def _trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def poly_rem_monic(f, g) -> list[int]:
    """Remainder of f by monic g; coefficient lists in ascending order."""
    f = _trim(list(f))
    dg = len(g) - 1
    assert g[-1] == 1
    while len(f) - 1 >= dg:
        lead = f[-1]
        shift = len(f) - 1 - dg
        for i, c in enumerate(g):
            f[shift + i] -= lead * c
        _trim(f)
    return f


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> tuple[int, ...]:
    """Coefficients of the d-th cyclotomic polynomial, ascending."""
    num = [-1] + [0] * (d - 1) + [1]
    for e in range(1, d):
        if d % e == 0:
            num = poly_exact_div(num, cyclotomic(e))
    return tuple(num)


def poly_exact_div(f, g) -> list[int]:
    f = list(f)
    dg = len(g) - 1
    q = [0] * (len(f) - dg)
    for shift in range(len(f) - 1 - dg, -1, -1):
        lead = f[shift + dg]
        q[shift] = lead
        if lead:
            for i, c in enumerate(g):
                f[shift + i] -= lead * c
    if any(f):
        raise ArithmeticError("polynomial division is not exact")
    return q


def vanishes_at_root_of_unity(coeffs, n: int, j: int) -> bool:
    """Whether sum_h coeffs[h] * w^(h*j) == 0 exactly, w = exp(2*pi*i/n).

    w^j is a primitive d-th root of unity with d = n/gcd(n, j); it is a
    root iff the d-th cyclotomic polynomial divides the polynomial.
    """
    d = n // gcd(n, j)
    return not poly_rem_monic(coeffs, cyclotomic(d))


def circulant_nullity(first_row) -> int:
    """Multiplicity of 0 in the spectrum of the circulant with this first row."""
    n = len(first_row)
    total = 0
    for d in range(1, n + 1):
        if n % d == 0 and not poly_rem_monic(first_row, cyclotomic(d)):
            total += len(cyclotomic(d)) - 1
    return total


def jacobi_eigenvalues(matrix, tol: float = 1e-14, max_sweeps: int = 60) -> list[float]:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.

    Independent dense route used to cross-check the closed-form spectra.
    """
    a = np.array(matrix, dtype=float)
    n = a.shape[0]
    if n == 1:
        return [float(a[0, 0])]
    scale = max(1.0, float(np.abs(a).max()))
    for _ in range(max_sweeps):
        off_diag = a - np.diag(np.diag(a))
        off = math.sqrt(float(np.sum(off_diag * off_diag)))
        if off <= tol * scale * n:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = float(a[p, q])
                if abs(apq) <= 1e-300:
                    continue
                theta = (float(a[q, q]) - float(a[p, p])) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q]
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :]
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
    else:
        raise ArithmeticError("Jacobi iteration did not converge")
    return sorted(float(v) for v in np.diag(a))


def int_matmul(x, y):
    cols = list(zip(*y))
    return [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in x]
