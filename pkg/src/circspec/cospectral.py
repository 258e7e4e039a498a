"""Cospectrality deciders, pair classification, the NCSC families and
the certified eigenvalue checks behind them."""

from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterable

from .core import CirculantGraph, as_graph, circulant, complement_shift_set, make_connection_set
from .linalg import vanishes_at_root_of_unity
from .numeric import certified_sign, interval_width, iv_precision
from .polynomial import newton_polynomial
from .prime import find_multiplier, is_prime
from .spectra import Inertia, adjacency_rank, eigenvalue_interval, inertia, inertia_odd_index_signs, power_sums

DEFAULT_MAX_PAIRS = 2_000_000


def _same_order(g1, g2):
    g1, g2 = as_graph(g1), as_graph(g2)
    if g1.n != g2.n:
        raise ValueError(f"order mismatch: {g1.n} vs {g2.n}")
    return g1, g2


def is_cospectral(g1, g2) -> bool:
    g1, g2 = _same_order(g1, g2)
    n = g1.n
    return power_sums(g1, n) == power_sums(g2, n)


def is_singularly_cospectral(g1, g2) -> bool:
    """Equal multisets of |eigenvalues|, decided by p_2, p_4, ..., p_2n."""
    g1, g2 = _same_order(g1, g2)
    n = g1.n
    return power_sums(g1, 2 * n).even() == power_sums(g2, 2 * n).even()


def nonzero_abs_spectra_equal(g1, g2) -> bool:
    """Compare det(xI - A^2) / x^nullity for both graphs."""
    g1, g2 = _same_order(g1, g2)
    return _deflated_square_poly(g1) == _deflated_square_poly(g2)


def _deflated_square_poly(g: CirculantGraph, sums=None, nullity=None):
    n = g.n
    if sums is None:
        sums = power_sums(g, 2 * n)
    if nullity is None:
        nullity = n - adjacency_rank(g)
    poly = newton_polynomial(sums.even(), n)
    if poly.zero_root_multiplicity() != nullity:
        raise ArithmeticError(f"{g}: zero multiplicity of char(A^2) differs from nullity {nullity}")
    return poly.deflate_zero(nullity)


@dataclass(frozen=True)
class PairVerdict:
    isomorphic: str  # "yes" | "no" | "unknown"
    cospectral: bool
    singularly_cospectral: bool
    equal_nonzero_abs_spectrum: bool
    same_inertia: bool
    inertia1: Inertia | None = None
    inertia2: Inertia | None = None
    multiplier: int | None = None

    def __post_init__(self):
        if self.cospectral and not (self.singularly_cospectral and self.same_inertia):
            raise ArithmeticError(f"inconsistent verdict {self}")
        if self.isomorphic == "yes" and not self.cospectral:
            raise ArithmeticError(f"isomorphic but not cospectral: {self}")

    @property
    def ncsc(self) -> bool:
        return self.equal_nonzero_abs_spectrum and not self.cospectral

    @property
    def verdict_class(self) -> str:
        if self.isomorphic == "yes":
            return "isomorphic"
        if self.cospectral:
            return "cospectral"
        if self.ncsc:
            return "ncsc"
        return "unrelated"

    def to_dict(self) -> dict:
        return {
            "isomorphic": self.isomorphic,
            "cospectral": self.cospectral,
            "singularly_cospectral": self.singularly_cospectral,
            "equal_nonzero_abs_spectrum": self.equal_nonzero_abs_spectrum,
            "same_inertia": self.same_inertia,
            "inertia1": list(self.inertia1) if self.inertia1 else None,
            "inertia2": list(self.inertia2) if self.inertia2 else None,
            "multiplier": self.multiplier,
            "class": self.verdict_class,
        }


def classify_pair(g1, g2) -> PairVerdict:
    g1, g2 = _same_order(g1, g2)
    n = g1.n
    sums1, sums2 = power_sums(g1, 2 * n), power_sums(g2, 2 * n)
    cospectral = sums1.sums[:n] == sums2.sums[:n]
    sc = sums1.even() == sums2.even()
    rank1, rank2 = adjacency_rank(g1), adjacency_rank(g2)
    nonzero_equal = (
        _deflated_square_poly(g1, sums1, n - rank1) == _deflated_square_poly(g2, sums2, n - rank2)
    )
    in1, in2 = inertia(g1), inertia(g2)
    q = find_multiplier(g1, g2)
    if q is not None:
        iso = "yes"
    elif not cospectral or (n % 2 and is_prime(n)):
        # non-cospectral graphs are never isomorphic; at odd prime order a
        # cospectral pair always admits a multiplier
        iso = "no"
    else:
        iso = "unknown"
    return PairVerdict(
        isomorphic=iso,
        cospectral=cospectral,
        singularly_cospectral=sc,
        equal_nonzero_abs_spectrum=nonzero_equal,
        same_inertia=in1 == in2,
        inertia1=in1,
        inertia2=in2,
        multiplier=q,
    )


# -- families ---------------------------------------------------------------

def complement_shift_pair(n: int, generators: Iterable[int]):
    """G1 on the closure of ``generators``, G2 on the generators k - a."""
    if n % 2:
        raise ValueError(f"need even order n = 2k, got n={n}")
    k = n // 2
    gens = sorted(set(generators))
    if not gens:
        raise ValueError("need at least one generator")
    bad = [a for a in gens if not 1 <= a <= k - 1]
    if bad:
        raise ValueError(f"generators must satisfy 1 <= a <= k-1 = {k - 1}; got {bad}")
    cs1 = make_connection_set(n, gens)
    return CirculantGraph(cs1), CirculantGraph(complement_shift_set(cs1))


def distinct_inertia_pair(k: int):
    """S1 = {1, 2, 2k-2, 2k-1} against S2 = {k-2, k-1, k+1, k+2}; needs k >= 6."""
    if k < 6:
        raise ValueError(f"this family requires k ≥ 6, got k={k}")
    return complement_shift_pair(2 * k, (1, 2))


def same_inertia_pair(alpha: int):
    """Consecutive pair with k = 4*alpha + 9, s = 2*alpha + 4."""
    if alpha < 0:
        raise ValueError(f"this family requires alpha ≥ 0, got alpha={alpha}")
    k, s = 4 * alpha + 9, 2 * alpha + 4
    return consecutive_pair(k, s)


def consecutive_pair(k: int, s: int):
    """S1 generated by 1..s, S2 by k-s..k-1, on n = 2k vertices."""
    if k < 6 or not 2 <= s <= k - 3:
        raise ValueError(f"this family requires k ≥ 6 and 2 ≤ s ≤ k-3, got k={k}, s={s}")
    return complement_shift_pair(2 * k, range(1, s + 1))


def pk_nk_closed_form(k: int) -> tuple[int, int]:
    """Closed-form counts of positive / negative odd-index eigenvalues of the
    {1, 2} graph on 2k vertices."""
    if k < 6:
        raise ValueError(f"closed form requires k ≥ 6, got k={k}")
    lo, hi = (k + 3) // 6, (5 * k + 3) // 6
    three = k % 6 == 3
    p = k + lo - hi - (1 if three else 0)
    if three:
        nk = hi - lo - 2
    elif k % 2:
        nk = hi - lo - 1
    else:
        nk = hi - lo
    return p, nk


def odd_index_sign_counts(k: int) -> tuple[int, int, int]:
    """(positive, negative, zero) among certified eigenvalues 1, 3, ..., 2k-1
    of the {1, 2} graph on 2k vertices."""
    g1, _ = distinct_inertia_pair(k)
    signs = inertia_odd_index_signs(g1)
    return signs.count(1), signs.count(-1), signs.count(0)


def _half_range_check(k: int, s: int):
    if k < 6 or not 2 <= s <= (k - 1) // 2:
        raise ValueError(f"requires k ≥ 6 and 2 ≤ s ≤ (k-1)/2, got k={k}, s={s}")


def lambda1_bounds_check(k: int, s: int, max_width: float = 1e-12) -> bool:
    """Certify s(2k-2s-1)/k < lambda_1 < 7s(2k-2s-1)/(4k) for generators 1..s."""
    _half_range_check(k, s)
    g = circulant(2 * k, range(1, s + 1))
    lower = Fraction(s * (2 * k - 2 * s - 1), k)
    upper = Fraction(7 * s * (2 * k - 2 * s - 1), 4 * k)
    above = certified_sign(lambda: eigenvalue_interval(g, 1), lower, max_width=max_width)
    below = certified_sign(lambda: eigenvalue_interval(g, 1), upper, max_width=max_width)
    return above == 1 and below == -1


def lambda1_interval(k: int, s: int, prec: int = 64):
    g = circulant(2 * k, range(1, s + 1))
    with iv_precision(prec):
        x = eigenvalue_interval(g, 1)
        return x, interval_width(x)


def odd_eigen_identity_check(k: int, s: int, j: int) -> bool:
    """Eigenvalue 2j+1 of the graph on generators 1..s equals that of the
    graph on generators 1..k-s-1 (n = 2k); decided exactly."""
    _half_range_check(k, s)
    if not 0 <= j <= (k - 1) // 2:
        raise ValueError(f"requires 0 ≤ j ≤ (k-1)/2, got j={j}")
    n = 2 * k
    g1 = circulant(n, range(1, s + 1))
    g2 = circulant(n, range(1, k - s))
    idx = 2 * j + 1
    diff = [a - b for a, b in zip(g1.first_row(), g2.first_row())]
    equal = vanishes_at_root_of_unity(diff, n, idx)
    # the cyclotomic test is the certificate; this only guards against a bug in it
    numeric = sum(2 * math.cos(math.pi * idx * h / k) for h in range(s + 1, k - s))
    if equal != (abs(numeric) < 1e-9):
        raise ArithmeticError(f"exact and numeric comparison disagree at k={k}, s={s}, j={j}")
    return equal


def sign_fact_checks(k: int, s: int) -> bool:
    """lambda_1 > 0 > beta_1 for the consecutive pair and lambda_k + lambda_1 > 0."""
    _half_range_check(k, s)
    g1, g2 = complement_shift_pair(2 * k, range(1, s + 1))
    lam1 = certified_sign(lambda: eigenvalue_interval(g1, 1))
    beta1 = certified_sign(lambda: eigenvalue_interval(g2, 1))
    odd = sum(1 for a in g1.generators if a % 2)
    lam_k = -2 * (odd - (len(g1.generators) - odd))
    total = certified_sign(lambda: eigenvalue_interval(g1, 1) + eigenvalue_interval(g1, k))
    with iv_precision(64):
        x = eigenvalue_interval(g1, k)
    if not x.a <= lam_k <= x.b:
        raise ArithmeticError(f"eigenvalue k of {g1} is not {lam_k}")
    return lam1 == 1 and beta1 == -1 and total == 1


# -- exhaustive search ---------------------------------------------------------

RECORD_FIELDS = ("n", "set1", "set2", "cospectral", "sc", "same_inertia", "isomorphic")


@dataclass
class SearchResult:
    n: int
    max_s: int
    records: list
    num_sets: int
    pairs_examined: int
    pairs_total: int
    truncated: bool

    def summary(self) -> dict:
        return {
            "summary": True,
            "n": self.n,
            "max_s": self.max_s,
            "num_sets": self.num_sets,
            "pairs_total": self.pairs_total,
            "pairs_examined": self.pairs_examined,
            "ncsc_found": len(self.records),
            "truncated": self.truncated,
        }


def pair_record(g1: CirculantGraph, g2: CirculantGraph, v: PairVerdict) -> dict:
    return {
        "n": g1.n,
        "set1": list(g1.elements),
        "set2": list(g2.elements),
        "cospectral": v.cospectral,
        "sc": v.equal_nonzero_abs_spectrum,
        "same_inertia": v.same_inertia,
        "isomorphic": v.isomorphic,
    }


def record_json(rec: dict) -> str:
    return json.dumps(rec, separators=(",", ":"))


def record_csv_row(rec: dict) -> list[str]:
    out = []
    for key in RECORD_FIELDS:
        v = rec[key]
        if isinstance(v, bool):
            out.append("true" if v else "false")
        elif isinstance(v, list):
            out.append(" ".join(map(str, v)))
        else:
            out.append(str(v))
    return out


def _signature(cs):
    return power_sums(CirculantGraph(cs), 2 * cs.n).sums


def _classify_sets(pair):
    return classify_pair(CirculantGraph(pair[0]), CirculantGraph(pair[1]))


def candidate_sets(n: int, max_s: int):
    gens = range(1, (n - 1) // 2 + 1)
    sets = [make_connection_set(n, combo)
            for size in range(1, max_s + 1) for combo in combinations(gens, size)]
    sets.sort(key=lambda cs: cs.elements)
    return sets


def search_ncsc(n: int, max_s: int, emit: Callable[[dict], None] | None = None,
                max_pairs: int = DEFAULT_MAX_PAIRS, workers: int = 1) -> SearchResult:
    """Every NCSC pair among symmetric sets with 1..max_s generators.

    Pairs are visited in lexicographic order of the sorted element lists.
    Only pairs with equal even power sums and unequal odd ones can be NCSC;
    those are fully classified. ``workers`` only changes throughput.
    """
    if n < 4:
        raise ValueError(f"search needs n >= 4, got n={n}")
    if max_s < 1:
        raise ValueError(f"max_s must be >= 1, got {max_s}")
    sets = candidate_sets(n, max_s)
    pairs_total = len(sets) * (len(sets) - 1) // 2
    budget = min(pairs_total, max_pairs)

    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        mapper = (lambda f, xs: pool.map(f, xs, chunksize=16)) if pool else map
        sigs = list(mapper(_signature, sets))
        candidates = []
        examined = 0
        for i, j in combinations(range(len(sets)), 2):
            if examined == budget:
                break
            examined += 1
            a, b = sigs[i], sigs[j]
            if a[1::2] == b[1::2] and a[:n] != b[:n]:
                candidates.append((sets[i], sets[j]))
        verdicts = list(mapper(_classify_sets, candidates))
    finally:
        if pool:
            pool.shutdown()

    records = []
    for (cs1, cs2), v in zip(candidates, verdicts):
        if v.ncsc:
            rec = pair_record(CirculantGraph(cs1), CirculantGraph(cs2), v)
            records.append(rec)
            if emit is not None:
                emit(rec)
    return SearchResult(n, max_s, records, len(sets), examined, pairs_total, examined < pairs_total)
