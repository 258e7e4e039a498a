"""Circulants of odd prime order: multipliers, reconstruction from A^2,
and the exhaustive check that equal |spectra| force isomorphism."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from math import gcd

from .core import ConnectionSet, CirculantGraph, as_graph, make_connection_set
from .spectra import power_sums, square_row

MAX_ENUMERATED_SETS = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _require_odd_prime(p: int):
    if p % 2 == 0 or not is_prime(p):
        raise ValueError(f"order must be an odd prime, got {p}")


def reconstruct_from_square(n: int, square_row) -> ConnectionSet:
    """Recover S from the first row of A^2 for odd n.

    Entry j of that row counts ordered pairs (x, y) in S x S with
    x + y = j; all pairs except x = y come in swapped couples, so the entry
    is odd exactly when j = 2x for some x in S.
    """
    if n % 2 == 0:
        raise ValueError(f"reconstruction needs odd order (2 invertible mod n), got n={n}")
    row = [int(v) for v in square_row]
    if len(row) != n:
        raise ValueError(f"row has length {len(row)}, expected {n}")
    if any(v < 0 for v in row):
        raise ValueError("walk counts must be nonnegative")
    if any(row[j] != row[n - j] for j in range(1, n)):
        raise ValueError("row is not symmetric (row[j] != row[n-j])")
    half = pow(2, -1, n)
    elements = sorted((j * half) % n for j in range(n) if row[j] % 2)
    if 0 in elements:
        raise ValueError("odd diagonal walk count: not the square of a loopless circulant")
    return ConnectionSet(n, tuple(elements))


def scale_set(cs: ConnectionSet, q: int) -> ConnectionSet:
    n = cs.n
    return ConnectionSet(n, tuple(sorted((q * a) % n for a in cs.elements)))


@dataclass(frozen=True)
class MultiplierPermutation:
    p: int
    q: int

    def __post_init__(self):
        _require_odd_prime(self.p)
        if not 1 <= self.q <= self.p - 1:
            raise ValueError(f"multiplier {self.q} outside 1..{self.p - 1}")

    def images(self) -> tuple[int, ...]:
        return tuple((self.q * i) % self.p for i in range(self.p))

    def matrix(self) -> list[list[int]]:
        """P with P[i][q*i mod p] = 1; P^T A P is A relabeled by i -> q*i."""
        m = [[0] * self.p for _ in range(self.p)]
        for i, si in enumerate(self.images()):
            m[i][si] = 1
        return m


def turner_permutation(p: int, q: int) -> tuple[int, ...]:
    """Vertex relabeling i -> q*i mod p."""
    return MultiplierPermutation(p, q).images()


def relabel(matrix, sigma) -> list[list[int]]:
    """B with B[sigma(i)][sigma(j)] = A[i][j]."""
    n = len(matrix)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        si = sigma[i]
        row = matrix[i]
        for j in range(n):
            out[si][sigma[j]] = row[j]
    return out


def find_multiplier(g1, g2) -> int | None:
    """Least unit q of Z_n with q*S1 = S2, or None. Sufficient for isomorphism."""
    g1, g2 = as_graph(g1), as_graph(g2)
    if g1.n != g2.n:
        raise ValueError(f"order mismatch: {g1.n} vs {g2.n}")
    n = g1.n
    target = set(g2.elements)
    if len(target) != len(g1.elements):
        return None
    for q in range(1, n):
        if gcd(q, n) == 1 and {(q * a) % n for a in g1.elements} == target:
            return q
    return None


def multiplier_isomorphic(g1, g2) -> int | None:
    g1, g2 = as_graph(g1), as_graph(g2)
    _require_odd_prime(g1.n)
    return find_multiplier(g1, g2)


@dataclass
class VerifyReport:
    p: int
    num_sets: int
    num_signature_groups: int
    pairs_checked: int
    violations: list = field(default_factory=list)
    cospectral_pairs: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "num_sets": self.num_sets,
            "num_signature_groups": self.num_signature_groups,
            "pairs_checked": self.pairs_checked,
            "violations": self.violations,
        }


def all_symmetric_sets(n: int, include_half: bool = False) -> list[ConnectionSet]:
    """Every symmetric connection set on Z_n (including the empty one)."""
    gens = range(1, (n - 1) // 2 + 1)
    out = []
    for size in range(len(gens) + 1):
        for combo in combinations(gens, size):
            out.append(make_connection_set(n, combo))
            if include_half and n % 2 == 0:
                out.append(make_connection_set(n, combo + (n // 2,)))
    out.sort(key=lambda cs: cs.elements)
    return out


def verify_sc_implies_iso(p: int, max_sets: int = MAX_ENUMERATED_SETS) -> VerifyReport:
    """Group all symmetric sets on Z_p by exact even power sums and require
    a multiplier between every two members of a group."""
    _require_odd_prime(p)
    num_sets = 1 << ((p - 1) // 2)
    if num_sets > max_sets:
        raise ValueError(f"p={p} needs {num_sets} sets, above the cap of {max_sets}")
    groups: dict[tuple, list[ConnectionSet]] = defaultdict(list)
    full_sums = {}
    for cs in all_symmetric_sets(p):
        sums = power_sums(CirculantGraph(cs), 2 * p)
        full_sums[cs] = sums.sums[:p]
        groups[sums.even()].append(cs)
    report = VerifyReport(p=p, num_sets=num_sets, num_signature_groups=len(groups), pairs_checked=0)
    for members in groups.values():
        for a, b in combinations(members, 2):
            report.pairs_checked += 1
            if full_sums[a] == full_sums[b]:
                report.cospectral_pairs += 1
            if find_multiplier(CirculantGraph(a), CirculantGraph(b)) is None:
                report.violations.append({"set1": list(a.elements), "set2": list(b.elements)})
    return report


def reconstruct_graph(g) -> ConnectionSet:
    g = as_graph(g)
    return reconstruct_from_square(g.n, square_row(g))
