import itertools

import pytest

from torsionnil.errors import BudgetExceeded, NotPrimeField
from torsionnil.field import GF, QQ
from torsionnil.jordan import jordan_matrix
from torsionnil.linalg import Matrix
from torsionnil.oracle import brute_force_decompose, classify_all, nilpotent_candidates


def first_witness_2x2(a, q):
    """Hand-rolled search: N = [[w, x], [y, z]] in entry order, N^2 = 0, det(A - N) != 0."""
    (a11, a12), (a21, a22) = a
    for w, x, y, z in itertools.product(range(q), repeat=4):
        sq = [(w * w + x * y) % q, (w * x + x * z) % q, (y * w + z * y) % q, (y * x + z * z) % q]
        if any(sq):
            continue
        if ((a11 - w) * (a22 - z) - (a12 - x) * (a21 - y)) % q:
            return [[w, x], [y, z]]
    return None


def test_diag_one_zero_over_gf2():
    F = GF(2)
    a = Matrix(F, [[1, 0], [0, 0]])
    dec = brute_force_decompose(a, 2)
    assert dec is not None and dec.verified
    assert dec.N == Matrix(F, first_witness_2x2([[1, 0], [0, 0]], 2)) == Matrix(F, [[1, 1], [1, 1]])
    assert dec.T == Matrix(F, [[0, 1], [1, 1]])
    assert dec.torsion_exponent == 3


@pytest.mark.parametrize("q", [2, 3])
def test_witness_agrees_with_hand_search(q):
    F = GF(q)
    for entries in itertools.product(range(q), repeat=4):
        rows = [list(entries[:2]), list(entries[2:])]
        dec = brute_force_decompose(Matrix(F, rows), 2)
        want = first_witness_2x2(rows, q)
        assert (dec is None) == (want is None)
        if dec is not None:
            assert dec.N == Matrix(F, want)


def test_exhausted_cases():
    F = GF(2)
    assert brute_force_decompose(jordan_matrix([2, 1, 1], F), 2) is None
    assert brute_force_decompose(Matrix.zeros(2, 2, F), 2) is None


def test_candidate_counts():
    # square-zero 2x2 over GF(q): the zero matrix plus q^2 - 1 of rank one
    assert len(nilpotent_candidates(2, 2, 2)) == 4
    assert len(nilpotent_candidates(2, 3, 2)) == 9
    assert nilpotent_candidates(2, 2, 1) == ((0, 0, 0, 0),)


def test_refusals():
    with pytest.raises(NotPrimeField):
        brute_force_decompose(Matrix.identity(2, QQ), 2)
    with pytest.raises(BudgetExceeded):
        brute_force_decompose(Matrix.identity(3, GF(3)), 2, budget=1000)
    with pytest.raises(BudgetExceeded):
        classify_all(3, 2, 2, budget=100)


@pytest.mark.parametrize("n, q, k", [(2, 2, 1), (2, 2, 2), (2, 2, 3), (3, 2, 2), (2, 3, 2)])
def test_classification(n, q, k):
    summary = classify_all(n, q, k)
    assert summary.total == q ** (n * n)
    assert summary.criterion_holds
    for rk, counts in summary.by_rank.items():
        if rk * k >= n:
            assert counts["not_decomposable"] == 0
        else:
            assert counts["decomposable"] == 0


def test_k1_means_invertible():
    summary = classify_all(2, 2, 1)
    # 6 invertible 2x2 matrices over GF(2)
    assert summary.by_rank[2]["decomposable"] == 6
    assert sum(summary.by_rank[r]["not_decomposable"] for r in (0, 1)) == 10
