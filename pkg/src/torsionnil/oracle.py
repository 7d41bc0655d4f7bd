"""Exhaustive search for ``A = T + N`` over small prime fields.

Over a finite field every invertible matrix is torsion, so it suffices to
find ``N`` with ``N^k = 0`` and ``A - N`` invertible. Candidates ``N`` are
enumerated in lexicographic row-major order, so the reported witness is the
smallest one.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .decompose import DEFAULT_CAP, Decomposition, _certify, torsion_order
from .errors import BudgetExceeded, NotPrimeField
from .field import PrimeField
from .linalg import Matrix, rank

DEFAULT_BUDGET = 2**20

Flat = tuple[int, ...]


def _mul(a: Flat, b: Flat, n: int, q: int) -> Flat:
    return tuple(
        sum(a[i * n + k] * b[k * n + j] for k in range(n)) % q for i in range(n) for j in range(n)
    )


def _power_is_zero(m: Flat, n: int, q: int, k: int) -> bool:
    p = m
    for _ in range(k - 1):
        if not any(p):
            return True
        p = _mul(p, m, n, q)
    return not any(p)


def _det_nonzero(m: Flat, n: int, q: int) -> bool:
    rows = [list(m[i * n:(i + 1) * n]) for i in range(n)]
    for c in range(n):
        piv = next((i for i in range(c, n) if rows[i][c]), None)
        if piv is None:
            return False
        rows[c], rows[piv] = rows[piv], rows[c]
        inv = pow(rows[c][c], -1, q)
        for i in range(c + 1, n):
            f = rows[i][c] * inv % q
            if f:
                rows[i] = [(x - f * y) % q for x, y in zip(rows[i], rows[c])]
    return True


def _check_budget(n: int, q: int, budget: int) -> None:
    if q ** (n * n) > budget:
        raise BudgetExceeded(f"{q}^({n}^2) = {q ** (n * n)} candidates exceed budget {budget}")


@lru_cache(maxsize=64)
def nilpotent_candidates(n: int, q: int, k: int) -> tuple[Flat, ...]:
    """All ``N`` over GF(q) with ``N^k = 0``, in lexicographic order."""
    return tuple(
        m for m in itertools.product(range(q), repeat=n * n) if _power_is_zero(m, n, q, k)
    )


def _prime_of(a: Matrix) -> int:
    if not isinstance(a.field, PrimeField):
        raise NotPrimeField(f"exhaustive search needs a prime field, got {a.field}")
    return a.field.p


def search_witness(a: Matrix, k: int, budget: int = DEFAULT_BUDGET) -> Optional[Matrix]:
    """The lexicographically first ``N`` with ``N^k = 0`` and ``A - N`` invertible."""
    q = _prime_of(a)
    n = a.n_rows
    if k < 1:
        raise ValueError("k must be >= 1")
    _check_budget(n, q, budget)
    flat_a = tuple(x for r in a.rows for x in r)
    for cand in nilpotent_candidates(n, q, k):
        diff = tuple((x - y) % q for x, y in zip(flat_a, cand))
        if _det_nonzero(diff, n, q):
            return Matrix._raw(a.field, (cand[i * n:(i + 1) * n] for i in range(n)))
    return None


def brute_force_decompose(
    a: Matrix, k: int, budget: int = DEFAULT_BUDGET, cap: int = DEFAULT_CAP
) -> Optional[Decomposition]:
    """Verified decomposition from exhaustive search, or ``None`` when none exists."""
    N = search_witness(a, k, budget)
    if N is None:
        return None
    T = a - N
    return _certify(a, Decomposition(T, N, torsion_order(T, cap), k))


@dataclass
class OracleSummary:
    n: int
    q: int
    k: int
    by_rank: dict[int, Counter]
    counterexamples: list[Matrix]

    @property
    def threshold(self) -> Fraction:
        return Fraction(self.n, self.k)

    @property
    def criterion_holds(self) -> bool:
        return not self.counterexamples

    @property
    def total(self) -> int:
        return sum(sum(c.values()) for c in self.by_rank.values())


def classify_all(n: int, q: int, k: int, budget: int = DEFAULT_BUDGET) -> OracleSummary:
    """Search every ``A`` in ``M_n(GF(q))`` and compare with ``rank(A) >= n/k``."""
    _check_budget(n, q, budget)
    F = PrimeField(q)
    by_rank: dict[int, Counter] = {}
    bad = []
    threshold = Fraction(n, k)
    for entries in itertools.product(range(q), repeat=n * n):
        a = Matrix._raw(F, (entries[i * n:(i + 1) * n] for i in range(n)))
        found = search_witness(a, k, budget) is not None
        rk = rank(a)
        by_rank.setdefault(rk, Counter())["decomposable" if found else "not_decomposable"] += 1
        if found != (rk >= threshold):
            bad.append(a)
    return OracleSummary(n, q, k, dict(sorted(by_rank.items())), bad)
