"""Square-zero / torsion splittings of one Jordan block plus ``s`` zero blocks.

For ``A = J_{n-s} (+) 0_s`` the families ``N_{s,r}`` and ``N'_{s,r}`` are
square-zero, and ``T = A - N`` has a characteristic polynomial that only
depends on ``s mod 3``, the parity of ``alpha = s // 3`` and the variant.
Choosing ``r`` well makes that polynomial divide ``x^d - 1``, so ``T`` is
torsion.

All indices below are 1-based, matching the ``e_{i,j}`` notation.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterator

from .errors import InternalVerificationFailed, ParamOutOfRange, RankConditionViolated
from .field import Field, QQ
from .linalg import AddMultiple, Matrix, Polynomial, SignRange, Swap, elementary, product


class Variant(enum.Enum):
    PLAIN = "plain"
    PRIME = "prime"

    def flipped(self) -> "Variant":
        return Variant.PRIME if self is Variant.PLAIN else Variant.PLAIN


@dataclass(frozen=True)
class BlockParams:
    n: int
    s: int
    r: int
    variant: Variant = Variant.PLAIN

    def __post_init__(self):
        n, s, r = self.n, self.s, self.r
        if s < 0 or r < 0:
            raise ParamOutOfRange(f"s and r must be >= 0, got s={s}, r={r}")
        if 2 * (s + 1) > n:
            raise ParamOutOfRange(f"need 2(s+1) <= n, got n={n}, s={s}")
        if not 1 + 2 * s + r < n:
            raise ParamOutOfRange(f"need 1+2s+r < n, got n={n}, s={s}, r={r}")

    @property
    def alpha(self) -> int:
        return self.s // 3

    def __str__(self) -> str:
        tick = "'" if self.variant is Variant.PRIME else ""
        return f"N{tick}_{{{self.s},{self.r}}} (n={self.n})"


def valid_params(n: int) -> Iterator[BlockParams]:
    """Every valid ``(n, s, r)`` in both variants."""
    for s in range(0, n // 2):
        for r in range(0, n - 1 - 2 * s):
            for variant in Variant:
                yield BlockParams(n, s, r, variant)


def build_canonical_A(n: int, s: int, field: Field) -> Matrix:
    """One subdiagonal Jordan block of size ``n - s`` followed by ``s`` zero blocks."""
    if s < 0 or 2 * (s + 1) > n:
        raise RankConditionViolated(n - s - 1, n, 2, f"s={s} singletons")
    big = n - s
    return Matrix.from_units(n, field, ((i + 1, i, 1) for i in range(1, big)))


def _plain_terms(n: int, s: int, r: int) -> list[tuple[int, int, int]]:
    if s == 0:
        return [(1, n, -1)]
    terms = []
    for i in range(n - 2 * s - r, n - s - r - 1):
        terms += [(i + 1, i, 1), (i + 1 + s + r + 1, i, 1)]
    terms.append((1, n - s - r - 1, 1))
    for i in range(n - s, n):
        terms += [(i + 1, i, -1), (i + 1 - s - r - 1, i, -1)]
    terms.append((1, n, -1))
    return terms


def _prime_terms(n: int, s: int, r: int) -> list[tuple[int, int, int]]:
    """The sign-flipped expansion of ``Q N_{s,r} Q``, written out term by term."""
    if s == 0:
        return [(1, n, -1)]
    terms = []
    for i in range(n - 2 * s - r, n - s - r - 1):
        terms += [(i + 1, i, 1), (i + 1 + s + r + 1, i, -1)]
    terms.append((1, n - s - r - 1, -1))
    for i in range(n - s, n):
        terms += [(i + 1, i, -1), (i + 1 - s - r - 1, i, 1)]
    terms.append((1, n, -1))
    return terms


def sign_range_for(p: BlockParams, field: Field) -> Matrix:
    return elementary(SignRange(p.n - 2 * p.s - p.r, p.n - p.s - p.r - 1), p.n, field)


def build_N(p: BlockParams, field: Field) -> Matrix:
    plain = Matrix.from_units(p.n, field, _plain_terms(p.n, p.s, p.r))
    if p.variant is Variant.PLAIN:
        return plain
    expanded = Matrix.from_units(p.n, field, _prime_terms(p.n, p.s, p.r))
    if p.s > 0:
        q = sign_range_for(p, field)
        if q @ plain @ q != expanded:
            raise InternalVerificationFailed(f"conjugation and expansion disagree for {p}")
    return expanded


def build_T(p: BlockParams, field: Field) -> Matrix:
    return build_canonical_A(p.n, p.s, field) - build_N(p, field)


def _binomial_product(field: Field, a: int, sa: int, b: int, sb: int) -> Polynomial:
    """``(x^a + sa)(x^b + sb)``."""
    return Polynomial.x_pow(a, field, sa) * Polynomial.x_pow(b, field, sb)


def expected_charpoly(p: BlockParams, field: Field = QQ) -> Polynomial:
    """Closed-form characteristic polynomial of ``T = A - N`` for ``p``."""
    n, s, r = p.n, p.s, p.r
    if s % 3 == 0:
        return Polynomial.x_pow(n, field, -1)
    alpha = p.alpha
    # the descent flips the variant alpha times
    lands_plain = (p.variant is Variant.PLAIN) == (alpha % 2 == 0)
    if s % 3 == 1:
        a = r + 3 * alpha + 2
        if lands_plain:
            return _binomial_product(field, a, -1, n - a, 1)
        return _binomial_product(field, a, 1, n - a, -1)
    b = r + 3 * alpha + 3
    if lands_plain:
        return _binomial_product(field, n - b, 1, b, -1)
    return _binomial_product(field, n - b, -1, b, 1)


@dataclass(frozen=True)
class GroupPlan:
    big: int
    params: BlockParams
    expected_charpoly: Polynomial
    torsion_exponent: int


def predicted_exponent(p: BlockParams) -> int:
    """A multiple of the order of ``build_T(p)`` in characteristic 0.

    The characteristic polynomial is ``x^m - 1`` or ``(x^a + 1)(x^b - 1)``
    with coprime factors; the roots of ``x^a + 1`` have order dividing ``2a``.
    """
    poly = expected_charpoly(p)
    n = p.n
    if poly == Polynomial.x_pow(n, QQ, -1):
        return n
    a = next(a for a in range(1, n) if poly == Polynomial.x_pow(a, QQ, 1) * Polynomial.x_pow(n - a, QQ, -1))
    return math.lcm(2 * a, n - a)


def choose_params(m: int, s: int, field: Field) -> GroupPlan:
    """Pick ``r`` and the variant so that ``T`` is torsion for a group of size ``m``."""
    if s < 0 or m <= s or 2 * (s + 1) > m:
        raise RankConditionViolated(m - s - 1, m, 2, f"group of size {m} with {s} singletons")
    variant = Variant.PLAIN
    if s == 0:
        r = 0
    elif m % 2 == 0:
        r = m // 2 - s - 1
    elif s % 3 == 0:
        r = 0
    else:
        mp = (m - 1) // 4 if m % 4 == 1 else (m - 3) // 4
        r = 2 * mp - s
        if (s // 3) % 2 == 1:
            variant = Variant.PRIME
    params = BlockParams(m, s, r, variant)
    poly = expected_charpoly(params, field)
    if field.characteristic == 0:
        d = predicted_exponent(params)
        if not (build_T(params, field) ** d).is_identity():
            raise InternalVerificationFailed(f"T^{d} != Id for {params}")
    else:
        from .decompose import torsion_order

        d = torsion_order(build_T(params, field), predicted=_char_p_exponent(params, field))
    return GroupPlan(m - s, params, poly, d)


def _char_p_exponent(p: BlockParams, field: Field) -> int:
    """A multiple of the order of ``build_T(p)`` over GF(p).

    The characteristic polynomial divides ``(x^d - 1)^2`` with ``d`` the
    characteristic-0 exponent, and ``(x^d - 1)^p = x^{dp} - 1`` in
    characteristic ``p``; Cayley-Hamilton then gives ``T^{dp} = Id``.
    """
    d = predicted_exponent(p)
    if expected_charpoly(p) == Polynomial.x_pow(p.n, QQ, -1):
        return d
    return d * field.characteristic


def _descent_factors(p: BlockParams):
    n, s, r = p.n, p.s, p.r
    v = s + r + 1
    if p.variant is Variant.PLAIN:
        return [
            AddMultiple(n - s + 3, n - s + 3 - v, 1),
            Swap(n - s + 2, n - s + 2 - v),
            AddMultiple(n - s + 1 - v, n - s + 1, 1),
            SignRange(n - s + 2 - v, n - s + 2),
        ]
    return [
        AddMultiple(n - s + 3, n - s + 3 - v, -1),
        Swap(n - s + 2, n - s + 2 - v),
        AddMultiple(n - s + 1 - v, n - s + 1, -1),
        SignRange(n - v - s + 3, n - s + 1),
    ]


def descend_step(p: BlockParams, field: Field = QQ) -> tuple[Matrix, BlockParams]:
    """Conjugator ``P`` with ``P^{-1} T_p P = T_q``, ``q = (s-3, r+3)``, variant flipped."""
    if p.s < 3:
        raise ParamOutOfRange(f"descent needs s >= 3, got s={p.s}")
    result = BlockParams(p.n, p.s - 3, p.r + 3, p.variant.flipped())
    transform = product([elementary(f, p.n, field) for f in _descent_factors(p)])
    return transform, result
