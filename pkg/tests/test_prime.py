import random
from itertools import combinations

import pytest

from circspec.core import CirculantGraph, circulant, make_connection_set
from circspec.linalg import int_matmul
from circspec.prime import (
    MultiplierPermutation,
    all_symmetric_sets,
    find_multiplier,
    multiplier_isomorphic,
    reconstruct_from_square,
    reconstruct_graph,
    relabel,
    scale_set,
    turner_permutation,
    verify_sc_implies_iso,
)
from circspec.spectra import power_sums

PRIMES = (3, 5, 7, 11, 13)


def dense_square_row(g):
    a = g.adjacency_matrix()
    return int_matmul(a, a)[0]


def transpose(m):
    return [list(r) for r in zip(*m)]


def test_reconstruct_examples():
    assert reconstruct_from_square(5, [2, 0, 1, 1, 0]).elements == (1, 4)
    assert reconstruct_from_square(3, [2, 1, 1]).elements == (1, 2)
    g = circulant(7, [1, 2])
    assert reconstruct_from_square(7, dense_square_row(g)).elements == (1, 2, 5, 6)


@pytest.mark.parametrize("n, row", [
    (6, [2, 0, 1, 0, 1, 0]),
    (5, [2, 0, 1, 0, 0]),
    (5, [2, 0, 1]),
    (5, [3, 0, 1, 1, 0]),
])
def test_reconstruct_rejects(n, row):
    with pytest.raises(ValueError):
        reconstruct_from_square(n, row)


def test_reconstruct_round_trip():
    rng = random.Random(20)
    for _ in range(200):
        n = rng.randrange(3, 100, 2)
        g = circulant(n, [a for a in range(1, (n - 1) // 2 + 1) if rng.random() < 0.5])
        assert reconstruct_graph(g) == g.connection_set


def test_turner_permutation_examples():
    assert turner_permutation(5, 2) == (0, 2, 4, 1, 3)
    assert turner_permutation(7, 1) == tuple(range(7))
    with pytest.raises(ValueError):
        turner_permutation(9, 2)
    with pytest.raises(ValueError):
        turner_permutation(7, 7)


def test_conjugation_example():
    a = circulant(5, [1]).adjacency_matrix()
    b = relabel(a, turner_permutation(5, 2))
    assert b == circulant(5, [2]).adjacency_matrix()


def test_conjugation_closure():
    for p in PRIMES:
        for cs in all_symmetric_sets(p):
            a = CirculantGraph(cs).adjacency_matrix()
            for q in range(1, p):
                perm = MultiplierPermutation(p, q)
                m = perm.matrix()
                b = int_matmul(int_matmul(transpose(m), a), m)
                assert b == relabel(a, perm.images())
                assert b == CirculantGraph(scale_set(cs, q)).adjacency_matrix()


@pytest.mark.parametrize("s1, s2, q", [(({1}), ({2}), 2), ({1}, {3}, 3), ({1, 3}, {1, 3}, 1)])
def test_multiplier_examples(s1, s2, q):
    p = 5 if max(s1 | s2) < 3 else 7
    assert multiplier_isomorphic(circulant(p, s1), circulant(p, s2)) == q


def test_multiplier_rejects_composite():
    with pytest.raises(ValueError):
        multiplier_isomorphic(circulant(9, [1]), circulant(9, [2]))


def test_multiplier_certificate_sound():
    for p in PRIMES:
        sets = all_symmetric_sets(p)
        for a, b in combinations(sets, 2):
            q = multiplier_isomorphic(CirculantGraph(a), CirculantGraph(b))
            if q is not None:
                ga = CirculantGraph(a).adjacency_matrix()
                assert relabel(ga, turner_permutation(p, q)) == CirculantGraph(b).adjacency_matrix()


def test_find_multiplier_composite():
    assert find_multiplier(circulant(12, [1]), circulant(12, [5])) == 5
    assert find_multiplier(circulant(12, [1]), circulant(12, [2])) is None


@pytest.mark.parametrize("p, sets", [(5, 4), (7, 8), (13, 64)])
def test_verify_examples(p, sets):
    report = verify_sc_implies_iso(p)
    assert report.num_sets == sets
    assert report.violations == []


def test_verify_report_schema():
    d = verify_sc_implies_iso(7).to_dict()
    assert list(d) == ["p", "num_sets", "num_signature_groups", "pairs_checked", "violations"]


def test_verify_rejects():
    with pytest.raises(ValueError):
        verify_sc_implies_iso(9)
    with pytest.raises(ValueError):
        verify_sc_implies_iso(37, max_sets=1000)


def test_cospectral_prime_pairs_admit_multiplier():
    for p in PRIMES:
        by_sums = {}
        for cs in all_symmetric_sets(p):
            by_sums.setdefault(power_sums(CirculantGraph(cs), p).sums, []).append(cs)
        for group in by_sums.values():
            for a, b in combinations(group, 2):
                assert find_multiplier(CirculantGraph(a), CirculantGraph(b)) is not None


def test_all_symmetric_sets_count():
    assert len(all_symmetric_sets(11)) == 32
    assert len(all_symmetric_sets(8, include_half=True)) == 16
    assert make_connection_set(11, []) in all_symmetric_sets(11)
