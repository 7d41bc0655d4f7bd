from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import strategies as st

from torsionnil.field import GF, QQ
from torsionnil.linalg import Matrix, Polynomial, det, rank

FIELDS = [QQ, GF(2), GF(3), GF(5), GF(7)]
FIELD_IDS = [str(f) for f in FIELDS]

# Matrices displayed in the two worked examples, entered by hand.
EX1_A = [
    [0, 0, 0, 0],
    [1, 0, 0, 0],
    [0, 1, 0, 0],
    [0, 0, 0, 0],
]
EX1_N = [
    [0, 1, 0, -1],
    [0, 0, -1, 0],
    [0, 0, 0, 0],
    [0, 0, -1, 0],
]
EX2_A = [
    [0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0],
]
EX2_N = [
    [0, 0, 1, 0, 0, -1],
    [0, 0, 0, -1, 0, 0],
    [0, 1, 0, 0, -1, 0],
    [0, 0, 0, 0, 0, 0],
    [0, 0, 0, -1, 0, 0],
    [0, 1, 0, 0, -1, 0],
]


def partitions(n: int, largest: int | None = None):
    """Integer partitions of n in non-increasing order."""
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def random_invertible(n: int, field, rng: random.Random, lo: int = -3, hi: int = 3) -> Matrix:
    while True:
        m = Matrix(field, [[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)])
        if rank(m) == n:
            return m


def leibniz_det_poly(m: Matrix) -> Polynomial:
    """det(x Id - M) by the permutation expansion. Independent of Berkowitz."""
    F = m.field
    n = m.n_rows
    x = Polynomial(F, [0, 1])
    entries = [
        [(x if i == j else Polynomial(F, [])) - Polynomial(F, [m.rows[i][j]]) for j in range(n)]
        for i in range(n)
    ]
    total = Polynomial(F, [])
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
        term = Polynomial.one(F)
        for i in range(n):
            term = term * entries[i][perm[i]]
            if term.is_zero():
                break
        total = total - term if inversions % 2 else total + term
    return total


def charpoly_matches_by_evaluation(p: Polynomial, m: Matrix) -> bool:
    """p(t) == det(t Id - M) at n+1 distinct points (needs |F| > n for a proof)."""
    F = m.field
    n = m.n_rows
    points = range(n + 1) if F.characteristic == 0 else range(min(n + 1, F.characteristic))
    ident = Matrix.identity(n, F)
    return all(p(F.reduce(t)) == det(ident.scale(t) - m) for t in points)


@pytest.fixture
def rng():
    return random.Random(20261015)


@st.composite
def square_matrices(draw, field, min_n=1, max_n=5, lo=-4, hi=4):
    n = draw(st.integers(min_n, max_n))
    vals = draw(st.lists(st.integers(lo, hi), min_size=n * n, max_size=n * n))
    return Matrix(field, [vals[i * n:(i + 1) * n] for i in range(n)])


fields_st = st.sampled_from(FIELDS)


# One PASS/FAIL line per acceptance criterion in the terminal summary.

_acceptance: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance" in report.nodeid and report.when == "call":
        _acceptance[report.nodeid.split("::")[-1]] = "PASS" if report.passed else "FAIL"
    elif "test_acceptance" in report.nodeid and report.when == "setup" and report.failed:
        _acceptance[report.nodeid.split("::")[-1]] = "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_acceptance):
        terminalreporter.write_line(f"{_acceptance[name]}  {name}")
