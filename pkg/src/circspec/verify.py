"""Batch checks of the family statements over parameter ranges.

Each check returns a :class:`Check`; the CLI ``verify`` command and the
scripts aggregate them into a JSON report.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from .chebyshev import u2s_lower_bound_check
from .core import circulant
from .cospectral import (
    complement_shift_pair,
    consecutive_pair,
    distinct_inertia_pair,
    is_cospectral,
    is_singularly_cospectral,
    lambda1_bounds_check,
    odd_eigen_identity_check,
    odd_index_sign_counts,
    pk_nk_closed_form,
    same_inertia_pair,
    sign_fact_checks,
)
from .prime import is_prime, reconstruct_graph, verify_sc_implies_iso
from .spectra import inertia


@dataclass
class Check:
    name: str
    cases: int = 0
    violations: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def record(self, ok: bool, case):
        self.cases += 1
        if not ok:
            self.violations.append(case)

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "cases": self.cases,
                "violations": self.violations}


def check_distinct_inertia(max_k: int = 60) -> Check:
    c = Check("distinct_inertia_pair: inertias differ")
    for k in range(6, max_k + 1):
        g1, g2 = distinct_inertia_pair(k)
        c.record(inertia(g1) != inertia(g2), {"k": k})
    return c


def check_closed_forms(max_k: int = 200) -> Check:
    c = Check("odd-index sign counts match closed forms, P_k < N_k")
    for k in range(6, max_k + 1):
        p, nk = pk_nk_closed_form(k)
        bp, bn, bz = odd_index_sign_counts(k)
        ok = (p, nk) == (bp, bn) and p < nk and bp + bn + bz == k
        c.record(ok, {"k": k, "closed": [p, nk], "counted": [bp, bn, bz]})
    return c


def check_same_inertia(max_alpha: int = 8) -> Check:
    c = Check("same_inertia_pair: inertias equal")
    for alpha in range(max_alpha + 1):
        g1, g2 = same_inertia_pair(alpha)
        c.record(inertia(g1) == inertia(g2), {"alpha": alpha})
    return c


def half_grid(max_k: int):
    for k in range(6, max_k + 1):
        for s in range(2, (k - 1) // 2 + 1):
            yield k, s


def check_lambda1_bounds(max_k: int = 60) -> Check:
    c = Check("lambda_1 strictly inside its rational bounds")
    for k, s in half_grid(max_k):
        c.record(lambda1_bounds_check(k, s), {"k": k, "s": s})
    return c


def check_u2s_bound(max_k: int = 60, max_s: int = 30) -> Check:
    c = Check("U_2s(cos(j pi/2k)) >= -(s+1)/2")
    for s in range(2, max_s + 1):
        for k in range(6, max_k + 1):
            for j in range(2, k):
                c.record(u2s_lower_bound_check(s, 2 * k, j), {"s": s, "k": k, "j": j})
    return c


def check_sign_facts(max_k: int = 60) -> Check:
    c = Check("lambda_1 > 0 > beta_1 and lambda_k + lambda_1 > 0")
    for k, s in half_grid(max_k):
        c.record(sign_fact_checks(k, s), {"k": k, "s": s})
    return c


def check_odd_identity(max_k: int = 60) -> Check:
    c = Check("odd eigenvalues agree for s and k-s-1 generators")
    for k, s in half_grid(max_k):
        for j in range((k - 1) // 2 + 1):
            c.record(odd_eigen_identity_check(k, s, j), {"k": k, "s": s, "j": j})
    return c


def check_complement_shift(max_k: int = 16, max_size: int = 3) -> Check:
    c = Check("complement-shift pairs are singularly cospectral")
    for k in range(6, max_k + 1):
        for size in range(1, max_size + 1):
            for gens in combinations(range(1, k), size):
                g1, g2 = complement_shift_pair(2 * k, gens)
                c.record(is_singularly_cospectral(g1, g2), {"k": k, "gens": list(gens)})
    return c


def check_consecutive_ncsc(max_k: int = 30) -> Check:
    c = Check("consecutive pairs are singularly cospectral and not cospectral")
    for k in range(6, max_k + 1):
        for s in range(2, k - 2):
            g1, g2 = consecutive_pair(k, s)
            ok = is_singularly_cospectral(g1, g2) and not is_cospectral(g1, g2)
            c.record(ok, {"k": k, "s": s})
    return c


def check_prime_rigidity(max_p: int = 13) -> Check:
    c = Check("singularly cospectral prime-order circulants admit a multiplier")
    for p in range(3, max_p + 1):
        if is_prime(p):
            report = verify_sc_implies_iso(p)
            c.record(report.ok, report.to_dict())
    return c


def check_reconstruction(samples: int = 200, max_n: int = 99, seed: int = 0) -> Check:
    c = Check("circulant recovered from first row of A^2")
    rng = random.Random(seed)
    for _ in range(samples):
        n = rng.randrange(3, max_n + 1, 2)
        gens = [a for a in range(1, (n - 1) // 2 + 1) if rng.random() < 0.5]
        g = circulant(n, gens)
        c.record(reconstruct_graph(g) == g.connection_set, {"n": n, "gens": gens})
    return c


SUITES = ("all", "inertia", "bounds", "prime", "ncsc")


def run_suite(name: str, max_k: int | None = None, max_p: int = 13, max_alpha: int = 8,
              max_s: int = 30) -> list[Check]:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    out = []
    if name in ("inertia", "all"):
        mk = max_k or 60
        out += [check_distinct_inertia(mk), check_closed_forms(mk), check_same_inertia(max_alpha)]
    if name in ("bounds", "all"):
        mk = max_k or 60
        out += [check_lambda1_bounds(mk), check_u2s_bound(mk, max_s), check_sign_facts(mk),
                check_odd_identity(mk)]
    if name in ("ncsc", "all"):
        out += [check_complement_shift(min(max_k or 16, 16)), check_consecutive_ncsc(min(max_k or 30, 30))]
    if name in ("prime", "all"):
        out += [check_prime_rigidity(max_p), check_reconstruction()]
    return out
