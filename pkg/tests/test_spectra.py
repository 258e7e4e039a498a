import math
import random

import pytest
import sympy
from hypothesis import given, settings, strategies as st
from mpmath import mp

from circspec.core import circulant, make_connection_set
from circspec.linalg import circulant_nullity, int_matmul, integer_rank, jacobi_eigenvalues
from circspec.numeric import iv_precision
from circspec.spectra import (
    Inertia,
    adjacency_rank,
    certified_signs,
    char_poly,
    char_poly_square,
    eigenvalue_chebyshev,
    eigenvalue_fourier,
    eigenvalue_interval,
    inertia,
    inertia_odd_index_signs,
    power_sums,
    spectrum,
    spectrum_record,
    square_row,
)

G12 = circulant(12, [1, 2])


def dense_power_sums(g, m):
    a = g.adjacency_matrix()
    out, power = [], a
    for _ in range(m):
        out.append(sum(power[i][i] for i in range(g.n)))
        power = int_matmul(power, a)
    return tuple(out)


def random_graph(rng, max_n=64, allow_half=True):
    n = rng.randint(2, max_n)
    gens = [a for a in range(1, n // 2 + 1) if rng.random() < 0.4]
    if not allow_half and n % 2 == 0:
        gens = [a for a in gens if 2 * a != n]
    return circulant(n, gens)


@pytest.mark.parametrize("j, expected", [(0, 4), (6, 0), (1, math.sqrt(3) + 1), (3, -2)])
def test_fourier_examples(j, expected):
    assert float(eigenvalue_fourier(G12, j)) == pytest.approx(expected, abs=1e-15)


def test_fourier_matches_dense_oracle():
    dense = jacobi_eigenvalues(G12.adjacency_matrix())
    assert sorted(spectrum(G12).floats()) == pytest.approx(dense, abs=1e-10)


def test_chebyshev_examples():
    assert float(eigenvalue_chebyshev(G12, 1)) == pytest.approx(math.sqrt(3) + 1, abs=1e-15)
    assert eigenvalue_chebyshev(circulant(18, [1, 2, 3, 4]), 0) == 8
    assert float(eigenvalue_chebyshev(G12, 3)) == pytest.approx(-2, abs=1e-15)


def test_chebyshev_rejects_half():
    with pytest.raises(ValueError):
        eigenvalue_chebyshev(circulant(8, [1, 4]), 1)


def test_consecutive_u_form_is_checked():
    # non-consecutive generators use only the T form; consecutive ones also run the U form
    g = circulant(40, range(3, 12))
    for j in range(40):
        assert abs(eigenvalue_chebyshev(g, j) - eigenvalue_fourier(g, j)) < mp.mpf(2) ** -100


def test_index_range():
    with pytest.raises(IndexError):
        eigenvalue_fourier(G12, 12)


def test_power_sum_examples():
    ps = power_sums(G12, 8)
    assert ps.p(1) == 0
    assert ps.p(2) == 48
    assert power_sums(circulant(5, [1]), 3).p(3) == 0
    assert ps.sums == dense_power_sums(G12, 8)


def test_power_sums_against_dense_powers():
    rng = random.Random(5)
    for _ in range(40):
        g = random_graph(rng, max_n=20)
        assert power_sums(g, 10).sums == dense_power_sums(g, 10)


def test_square_row():
    assert square_row(circulant(5, [1])) == [2, 0, 1, 1, 0]


@pytest.mark.parametrize("n, gens, expected", [
    (3, [1], (1, 0, -3, -2)),
    (2, [1], (1, 0, -1)),
    (4, [1], (1, 0, -4, 0, 0)),
])
def test_char_poly_examples(n, gens, expected):
    assert char_poly(circulant(n, gens)).coefficients == expected


def test_char_poly_against_sympy():
    rng = random.Random(6)
    x = sympy.Symbol("x")
    for _ in range(15):
        g = random_graph(rng, max_n=14)
        oracle = sympy.Matrix(g.adjacency_matrix()).charpoly(x).all_coeffs()
        assert char_poly(g).coefficients == tuple(int(c) for c in oracle)


def test_char_poly_square_roots_are_squares():
    poly = char_poly_square(G12)
    for v in spectrum(G12, 256).values:
        with mp.workprec(256):
            assert abs(poly(v * v)) < mp.mpf(10) ** -40


def test_char_poly_vanishes_on_certified_eigenvalues():
    for g in (G12, circulant(9, [1, 3]), circulant(10, [2, 5])):
        poly = char_poly(g)
        with iv_precision(256):
            for j in range(g.n):
                value = poly(eigenvalue_interval(g, j))
                assert value.a <= 0 <= value.b


@pytest.mark.parametrize("g, expected", [
    (G12, (3, 6, 3)),
    (circulant(12, [4, 5]), (5, 4, 3)),
    (circulant(3, [1]), (1, 2, 0)),
])
def test_inertia_examples(g, expected):
    assert inertia(g) == Inertia(*expected)


def test_odd_index_signs():
    assert inertia_odd_index_signs(G12) == [1, -1, -1, -1, -1, 1]
    with pytest.raises(ValueError):
        inertia_odd_index_signs(circulant(9, [1]))


def test_zero_at_k_when_parities_balance():
    for k in range(6, 20):
        g = circulant(2 * k, [1, 2])
        assert certified_signs(g)[k] == 0
        if k % 2:
            assert inertia_odd_index_signs(g)[(k - 1) // 2] == 0


def test_bareiss_rank_against_sympy():
    rng = random.Random(7)
    for _ in range(30):
        rows, cols = rng.randint(1, 9), rng.randint(1, 9)
        m = [[rng.choice([0, 0, 1, -2, 3]) for _ in range(cols)] for _ in range(rows)]
        assert integer_rank(m) == sympy.Matrix(m).rank()


def test_rank_methods_agree():
    rng = random.Random(8)
    for _ in range(60):
        g = random_graph(rng, max_n=64)
        r = adjacency_rank(g, "bareiss")
        assert r == adjacency_rank(g, "cyclotomic")
        assert r == g.n - circulant_nullity(g.first_row())


def test_inertia_consistency_random():
    rng = random.Random(9)
    for _ in range(60):
        g = random_graph(rng, max_n=48)
        inn = inertia(g)
        assert sum(inn) == g.n
        assert inn.zero == g.n - integer_rank(g.adjacency_matrix())
        dense = jacobi_eigenvalues(g.adjacency_matrix())
        assert inn.positive == sum(v > 1e-8 for v in dense)
        assert inn.negative == sum(v < -1e-8 for v in dense)


def test_spectrum_invariants():
    rng = random.Random(10)
    for _ in range(50):
        g = random_graph(rng)
        spec = spectrum(g)
        n = g.n
        assert spec[0] == g.degree
        for j in range(1, (n - 1) // 2 + 1):
            assert spec[j] is spec[n - j]
        with mp.workprec(128):
            assert abs(mp.fsum(spec.values)) < mp.mpf(2) ** -90


def test_parity_eigenvalue_is_exact_integer():
    rng = random.Random(11)
    for _ in range(100):
        k = rng.randint(2, 40)
        gens = [a for a in range(1, k) if rng.random() < 0.5]
        g = circulant(2 * k, gens)
        odd = sum(a % 2 for a in gens)
        assert eigenvalue_fourier(g, k) == -2 * (odd - (len(gens) - odd))


def test_first_eigenvalue_increases_with_s():
    for k in range(6, 61):
        values = [eigenvalue_fourier(circulant(2 * k, range(1, s + 1)), 1)
                  for s in range(2, (k - 1) // 2 + 1)]
        assert values[0] > 0
        assert all(a < b for a, b in zip(values, values[1:]))


def test_power_sums_match_eigenvalues():
    rng = random.Random(12)
    for _ in range(40):
        g = random_graph(rng, max_n=40)
        sums = power_sums(g, 8)
        vals = spectrum(g).values
        with mp.workprec(128):
            for t in range(1, 9):
                approx = mp.fsum(v ** t for v in vals)
                assert abs(approx - sums.p(t)) <= 1e-6 * max(1, abs(sums.p(t)))


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 30).flatmap(
    lambda n: st.tuples(st.just(n), st.sets(st.integers(1, n - 1)))))
def test_routes_agree_property(args):
    n, gens = args
    g = circulant(n, gens)
    fourier = sorted(spectrum(g).floats())
    assert jacobi_eigenvalues(g.adjacency_matrix()) == pytest.approx(fourier, abs=1e-9)
    if not g.connection_set.has_half:
        cheb = sorted(float(eigenvalue_chebyshev(g, j)) for j in range(n))
        assert cheb == pytest.approx(fourier, abs=1e-9)


def test_spectrum_record_schema():
    rec = spectrum_record(G12)
    assert list(rec) == ["n", "set", "eigenvalues", "power_sums", "inertia"]
    assert rec["set"] == [1, 2, 10, 11]
    assert rec["power_sums"][:2] == ["0", "48"]
    assert rec["inertia"] == [3, 6, 3]
    assert all(isinstance(p, str) for p in rec["power_sums"])
