"""Univariate polynomials with exact coefficients (ascending degree)."""

from __future__ import annotations

from typing import Iterable, Sequence

from ..errors import DegreeZero, DivisionByZero, FieldMismatch, NotMonic
from ..field import Field, Raw


class Polynomial:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Iterable):
        cs = [field.parse(c) if isinstance(c, str) else field.reduce(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.field = field
        self.coeffs: tuple = tuple(cs)

    @classmethod
    def x_pow(cls, k: int, field: Field, constant: Raw = 0) -> "Polynomial":
        """``x^k + constant``."""
        cs = [0] * (k + 1)
        cs[k] = 1
        cs[0] += constant
        return cls(field, cs)

    @classmethod
    def one(cls, field: Field) -> "Polynomial":
        return cls(field, [1])

    @classmethod
    def from_roots_of_unity_sum(cls, field: Field, n: int) -> "Polynomial":
        """``1 + x + ... + x^n``."""
        return cls(field, [1] * (n + 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Raw:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def trace(self) -> Raw:
        """``-b_{n-1}`` for monic ``x^n + b_{n-1} x^{n-1} + ...``."""
        if not self.is_monic():
            raise NotMonic("trace is defined for monic polynomials")
        if self.degree < 1:
            raise DegreeZero("trace of a constant")
        return self.field.reduce(-self.coeffs[-2])

    def __getitem__(self, k: int) -> Raw:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def _compatible(self, other: "Polynomial") -> None:
        if not isinstance(other, Polynomial):
            raise TypeError(f"expected Polynomial, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._compatible(other)
        m = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self.field, (self[k] + other[k] for k in range(m)))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._compatible(other)
        m = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self.field, (self[k] - other[k] for k in range(m)))

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.field, (-c for c in self.coeffs))

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._compatible(other)
        if not self.coeffs or not other.coeffs:
            return Polynomial(self.field, [])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(self.field, out)

    def __pow__(self, e: int) -> "Polynomial":
        result = Polynomial.one(self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __divmod__(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        self._compatible(other)
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        F = self.field
        rem = list(self.coeffs)
        dq = other.degree
        inv_lead = F.inv(other.leading)
        quot = [0] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = F.reduce(rem[k] * inv_lead)
            if c == 0:
                continue
            quot[k - dq] = c
            for j, b in enumerate(other.coeffs):
                rem[k - dq + j] = F.reduce(rem[k - dq + j] - c * b)
        return Polynomial(F, quot), Polynomial(F, rem[:dq])

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    def divides(self, other: "Polynomial") -> bool:
        """True when ``self`` divides ``other`` exactly."""
        return (other % self).is_zero()

    def powmod(self, e: int, modulus: "Polynomial") -> "Polynomial":
        result = Polynomial.one(self.field) % modulus
        base = self % modulus
        while e:
            if e & 1:
                result = (result * base) % modulus
            e >>= 1
            if e:
                base = (base * base) % modulus
        return result

    def __call__(self, x: Raw) -> Raw:
        acc: Raw = 0
        for c in reversed(self.coeffs):
            acc = self.field.reduce(acc * x + c)
        return acc

    def to_strings(self) -> list[str]:
        return [self.field.format(c) for c in self.coeffs]

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            text = self.field.format(c)
            neg = text.startswith("-")
            mag = text[1:] if neg else text
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if mono and mag == "1":
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = mag
            if not terms:
                terms.append(("-" if neg else "") + body)
            else:
                terms.append(("- " if neg else "+ ") + body)
        return " ".join(terms)

    def __repr__(self) -> str:
        return f"Polynomial[{self.field}]({self})"


def poly_arith(a: Polynomial, b: Polynomial, op: str) -> Polynomial:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def companion(p: Polynomial):
    """Companion matrix: 1s on the subdiagonal, last column ``-b_0..-b_{n-1}``."""
    from .matrix import Matrix

    if p.degree < 1:
        raise DegreeZero("companion matrix of a constant")
    if not p.is_monic():
        raise NotMonic(f"companion matrix needs a monic polynomial, got {p}")
    n = p.degree
    rows = [[0] * n for _ in range(n)]
    for i in range(1, n):
        rows[i][i - 1] = 1
    for i in range(n):
        rows[i][n - 1] = -p.coeffs[i]
    return Matrix(p.field, rows)


def evaluate_at_matrix(p: Polynomial, m):
    """``p(M)`` by Horner's rule."""
    from .matrix import Matrix

    n = m.n_rows
    acc = Matrix.zeros(n, n, m.field)
    ident = Matrix.identity(n, m.field)
    for c in reversed(p.coeffs):
        acc = acc @ m + ident.scale(c)
    return acc


def coeffs_from(field: Field, values: Sequence) -> Polynomial:
    return Polynomial(field, values)
