"""Torsion + square-zero decompositions and their verification."""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Optional, Sequence

from .construct import build_canonical_A, build_N, build_T, choose_params, GroupPlan
from .errors import (
    DegreeZero,
    DimensionMismatch,
    InternalVerificationFailed,
    NotCompanion,
    NotMonic,
    NotTorsionPolynomial,
    NotTorsionWithinCap,
    RankConditionViolated,
    Singular,
    TraceMismatch,
    TraceNotSupported,
)
from .field import Field
from .jordan import jordan_structure
from .linalg import Matrix, Polynomial, charpoly, companion, det, direct_sum, inverse, mat_pow
from .linalg.matrix import _require_square

DEFAULT_CAP = 10**6
DEFAULT_Q_BOUND = 10**4


@dataclass(frozen=True)
class VerifyReport:
    sum_ok: bool
    nilpotent_ok: bool
    torsion_ok: bool
    trace_ok: bool
    minpoly_ok: bool

    @property
    def all_ok(self) -> bool:
        return all(self.as_dict().values())

    def as_dict(self) -> dict[str, bool]:
        return {
            "sum_ok": self.sum_ok,
            "nilpotent_ok": self.nilpotent_ok,
            "torsion_ok": self.torsion_ok,
            "trace_ok": self.trace_ok,
            "minpoly_ok": self.minpoly_ok,
        }


@dataclass(frozen=True)
class Decomposition:
    T: Matrix
    N: Matrix
    torsion_exponent: int
    nilpotence_index: int
    verified: bool = False
    report: Optional[VerifyReport] = dc_field(default=None, compare=False)


@dataclass(frozen=True)
class BlockPlan:
    groups: tuple[tuple[int, int], ...]
    leftover: tuple[int, ...] = ()

    @property
    def n(self) -> int:
        return sum(b + s for b, s in self.groups) + sum(self.leftover)


def _prime_factors(d: int) -> list[int]:
    out = []
    f = 2
    while f * f <= d:
        if d % f == 0:
            out.append(f)
            while d % f == 0:
                d //= f
        f += 1
    if d > 1:
        out.append(d)
    return out


def torsion_order(t: Matrix, cap: int = DEFAULT_CAP, predicted: Optional[int] = None) -> int:
    """Least ``d <= cap`` with ``T^d = Id``.

    With ``predicted`` (a known multiple of the order) only its divisors are
    tried; otherwise exponents are scanned upwards. Running out of ``cap`` is a
    bounded-search verdict, not a proof that ``T`` has infinite order.
    """
    _require_square(t)
    if det(t) == 0:
        raise Singular("a torsion matrix must be invertible")
    if predicted is not None and predicted >= 1 and mat_pow(t, predicted).is_identity():
        d = predicted
        for p in _prime_factors(predicted):
            while d % p == 0 and mat_pow(t, d // p).is_identity():
                d //= p
        if d > cap:
            raise NotTorsionWithinCap(f"order {d} exceeds cap {cap}")
        return d
    power = t
    for d in range(1, cap + 1):
        if power.is_identity():
            return d
        power = power @ t
    raise NotTorsionWithinCap(f"T^d != Id for every d <= {cap}")


def verify(a: Matrix, dec: Decomposition) -> VerifyReport:
    T, N = dec.T, dec.N
    if not (a.shape == T.shape == N.shape) or not a.is_square:
        raise DimensionMismatch(f"A {a.shape}, T {T.shape}, N {N.shape}")
    n = a.n_rows
    F = a.field
    d, k = dec.torsion_exponent, dec.nilpotence_index
    torsion_ok = d >= 1 and mat_pow(T, d).is_identity()
    # charpoly(T) | (x^d - 1)^n, checked as ((x^d - 1) mod f)^n mod f == 0
    if d >= 1:
        f = charpoly(T)
        xd1 = Polynomial.x_pow(d, F, -1)
        minpoly_ok = xd1.powmod(n, f).is_zero()
    else:
        minpoly_ok = False
    return VerifyReport(
        sum_ok=(T + N) == a,
        nilpotent_ok=k >= 1 and mat_pow(N, k).is_zero(),
        torsion_ok=torsion_ok,
        trace_ok=T.trace() == a.trace(),
        minpoly_ok=minpoly_ok,
    )


def _certify(a: Matrix, dec: Decomposition) -> Decomposition:
    report = verify(a, dec)
    if not report.all_ok:
        raise InternalVerificationFailed(f"decomposition failed its own checks: {report.as_dict()}")
    return Decomposition(dec.T, dec.N, dec.torsion_exponent, dec.nilpotence_index, True, report)


def pack_blocks(sizes: Sequence[int]) -> BlockPlan:
    """Attach each size-1 block to a larger block, at most ``r - 2`` per block of size ``r``.

    Capacity ``sum(r_i - 2)`` covers the singletons exactly when
    ``rank = sum(r_i - 1) >= n/2``.
    """
    if not sizes:
        raise ValueError("no blocks to pack")
    if any(k < 1 for k in sizes):
        raise ValueError(f"block sizes must be positive: {sizes}")
    big = sorted((k for k in sizes if k > 1), reverse=True)
    singles = sum(1 for k in sizes if k == 1)
    n = sum(sizes)
    rank = sum(k - 1 for k in big)
    groups = []
    remaining = singles
    for k in big:
        take = min(k - 2, remaining)
        groups.append((k, take))
        remaining -= take
    if remaining:
        raise RankConditionViolated(rank, n, 2, f"{remaining} size-1 block(s) left unpaired")
    return BlockPlan(tuple(groups))


def decompose_nilpotent(a: Matrix, cap: int = DEFAULT_CAP) -> Decomposition:
    """``A = T + N`` with ``T`` torsion and ``N^2 = 0`` for nilpotent ``A`` of rank ``>= n/2``."""
    F = a.field
    jd = jordan_structure(a)
    plan = pack_blocks(jd.sizes)

    cols = jd.basis.columns()
    ranges = jd.block_ranges()
    big_chains = [cols[lo - 1:hi] for (lo, hi), k in zip(ranges, jd.sizes) if k > 1]
    single_cols = [cols[lo - 1] for (lo, hi), k in zip(ranges, jd.sizes) if k == 1]

    ordered: list[tuple] = []
    plans: list[GroupPlan] = []
    for (big, s), chain in zip(plan.groups, big_chains):
        assert len(chain) == big
        ordered += chain
        ordered += single_cols[:s]
        single_cols = single_cols[s:]
        plans.append(choose_params(big + s, s, F))

    S = Matrix.from_columns(F, ordered)
    S_inv = inverse(S)
    a_canon = direct_sum(*(build_canonical_A(g.params.n, g.params.s, F) for g in plans))
    if S_inv @ a @ S != a_canon:
        raise InternalVerificationFailed("block reordering did not produce the packed canonical form")
    t_canon = direct_sum(*(build_T(g.params, F) for g in plans))
    n_canon = direct_sum(*(build_N(g.params, F) for g in plans))
    d = math.lcm(*(g.torsion_exponent for g in plans))
    dec = Decomposition(S @ t_canon @ S_inv, S @ n_canon @ S_inv, d, 2)
    return _certify(a, dec)


def builtin_torsion_polynomial(p: Polynomial) -> Polynomial:
    """Monic ``q`` of the same degree and trace with distinct root-of-unity roots.

    Supported traces: ``0`` (``x^n - 1``), ``-1`` (``1 + x + ... + x^n``) and
    ``1`` (``(x - 1)(x^{n-1} + 1)``, or ``x^2 - x + 1`` when ``n = 2``).
    """
    F = p.field
    n = p.degree
    t = p.trace()
    if t == 0:
        return Polynomial.x_pow(n, F, -1)
    if t == F.reduce(-1):
        return Polynomial(F, [1] * (n + 1))
    if t == 1:
        if n == 2:
            return Polynomial(F, [1, -1, 1])
        return Polynomial(F, [-1, 1]) * Polynomial.x_pow(n - 1, F, 1)
    raise TraceNotSupported(
        f"trace {F.format(t)} is not 0, 1 or -1; supply a torsion polynomial with the same trace"
    )


def polynomial_order(q: Polynomial, bound: int) -> int:
    """Least ``e <= bound`` with ``q | x^e - 1``."""
    F = q.field
    one = Polynomial.one(F)
    x = Polynomial(F, [0, 1])
    cur = x % q
    for e in range(1, bound + 1):
        if cur == one:
            return e
        cur = (cur * x) % q
    raise NotTorsionPolynomial(f"{q} does not divide x^e - 1 for any e <= {bound}")


def decompose_companion(
    p: Polynomial, q: Optional[Polynomial] = None, bound: int = DEFAULT_Q_BOUND
) -> Decomposition:
    """Split ``C(p) = C(q) + N`` where ``C(q)`` is torsion and ``N`` has one nonzero column."""
    if not p.is_monic():
        raise NotMonic(f"{p} is not monic")
    if p.degree < 2:
        raise DegreeZero(f"need degree >= 2, got {p.degree}")
    n = p.degree
    if q is None:
        q = builtin_torsion_polynomial(p)
    else:
        if q.field != p.field:
            raise TraceMismatch("q lives over a different field")
        if not q.is_monic() or q.degree != n:
            raise TraceMismatch(f"q must be monic of degree {n}")
        if q.trace() != p.trace():
            raise TraceMismatch(f"trace(q) = {q.field.format(q.trace())} != trace(p)")
    d = polynomial_order(q, bound)
    T = companion(q)
    dec = Decomposition(T, companion(p) - T, d, 2)
    return _certify(companion(p), dec)


def decompose_companion_matrix(a: Matrix, q: Optional[Polynomial] = None, bound: int = DEFAULT_Q_BOUND) -> Decomposition:
    """Companion path for a matrix that is literally ``C(p)``."""
    p = charpoly(a)
    if companion(p) != a:
        raise NotCompanion("input is not a companion matrix; the companion path does not apply")
    return decompose_companion(p, q, bound)


def rank_threshold(n: int, k: int) -> Fraction:
    return Fraction(n, k)
