"""Exact scalar arithmetic over the rationals and prime fields.

Matrices and polynomials store *raw* values and delegate normalisation to
their field object:

* ``Rationals``: ``int`` when the value is integral, ``Fraction`` otherwise.
  Keeping integers as ``int`` makes the heavy integer sweeps cheap; ``int`` and
  ``Fraction`` compare and hash consistently, so equality is unaffected.
* ``PrimeField(p)``: ``int`` residue in ``[0, p)``.

Raw values can be combined with the ordinary Python operators and then passed
through :meth:`Field.reduce`. :class:`Scalar` is the checked, user-facing
wrapper.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DivisionByZero, FieldMismatch, ParseError

Raw = Union[int, Fraction]

MAX_PRIME = 2**31

_SCALAR_RE = re.compile(r"^\s*([+-]?)(\d+)(?:/(\d+))?\s*$")


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


class Field:
    """Common interface of :class:`Rationals` and :class:`PrimeField`."""

    characteristic: int
    zero: Raw = 0
    one: Raw = 1

    def reduce(self, x: Raw) -> Raw:
        raise NotImplementedError

    def inv(self, x: Raw) -> Raw:
        raise NotImplementedError

    def div(self, a: Raw, b: Raw) -> Raw:
        return self.reduce(a * self.inv(b))

    def neg(self, x: Raw) -> Raw:
        return self.reduce(-x)

    def is_zero(self, x: Raw) -> bool:
        return x == 0

    def from_int(self, k: int) -> Raw:
        return self.reduce(k)

    def parse(self, text: str) -> Raw:
        m = _SCALAR_RE.match(text)
        if m is None:
            raise ParseError(f"not a scalar: {text!r}")
        sign, num, den = m.groups()
        value = int(num)
        if sign == "-":
            value = -value
        if den is None:
            return self.reduce(value)
        d = self.reduce(int(den))
        if self.is_zero(d):
            raise DivisionByZero(f"zero denominator in {text!r} over {self}")
        return self.div(self.reduce(value), d)

    def format(self, x: Raw) -> str:
        return str(x)

    def descriptor(self):
        raise NotImplementedError


@dataclass(frozen=True)
class Rationals(Field):
    characteristic = 0

    def reduce(self, x: Raw) -> Raw:
        if isinstance(x, Fraction):
            return x.numerator if x.denominator == 1 else x
        return int(x)

    def inv(self, x: Raw) -> Raw:
        if x == 0:
            raise DivisionByZero("division by zero in Q")
        return self.reduce(Fraction(1) / x)

    def format(self, x: Raw) -> str:
        return str(Fraction(x))

    def descriptor(self):
        return "rationals"

    def __str__(self) -> str:
        return "Q"


@dataclass(frozen=True)
class PrimeField(Field):
    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or self.p > MAX_PRIME or not is_prime(self.p):
            raise ValueError(f"PrimeField needs a prime p <= 2^31, got {self.p!r}")

    @property
    def characteristic(self) -> int:  # type: ignore[override]
        return self.p

    def reduce(self, x: Raw) -> int:
        if isinstance(x, Fraction):
            return self.div(x.numerator % self.p, x.denominator % self.p)
        return x % self.p

    def inv(self, x: Raw) -> int:
        x = self.reduce(x)
        if x == 0:
            raise DivisionByZero(f"division by zero in GF({self.p})")
        return pow(x, -1, self.p)

    def div(self, a: Raw, b: Raw) -> int:
        return (self.reduce(a) * self.inv(b)) % self.p

    def descriptor(self):
        return {"prime": self.p}

    def __str__(self) -> str:
        return f"GF({self.p})"


QQ = Rationals()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_descriptor(desc) -> Field:
    """Inverse of :meth:`Field.descriptor`: ``"rationals"`` or ``{"prime": p}``."""
    if desc == "rationals":
        return QQ
    if isinstance(desc, dict) and set(desc) == {"prime"}:
        p = desc["prime"]
        if isinstance(p, str) and p.isdigit():
            p = int(p)
        if isinstance(p, int) and not isinstance(p, bool):
            try:
                return PrimeField(p)
            except ValueError as exc:
                raise ParseError(str(exc)) from None
    raise ParseError(f"unknown field descriptor: {desc!r}")


@dataclass(frozen=True)
class Scalar:
    """An immutable field element. Operands must share a field."""

    value: Raw
    field: Field

    def __post_init__(self):
        value = self.field.reduce(self.value)
        if isinstance(self.field, Rationals):
            value = Fraction(value)
        object.__setattr__(self, "value", value)

    def _check(self, other: "Scalar") -> None:
        if not isinstance(other, Scalar):
            raise TypeError(f"expected Scalar, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __add__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        return Scalar(self.value + other.value, self.field)

    def __sub__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        return Scalar(self.value - other.value, self.field)

    def __mul__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        return Scalar(self.value * other.value, self.field)

    def __truediv__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        return Scalar(self.field.div(self.value, other.value), self.field)

    def __neg__(self) -> "Scalar":
        return Scalar(-self.value, self.field)

    def is_zero(self) -> bool:
        return self.value == 0

    def __str__(self) -> str:
        return self.field.format(self.value)


def scalar_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    ops = {
        "add": Scalar.__add__,
        "sub": Scalar.__sub__,
        "mul": Scalar.__mul__,
        "div": Scalar.__truediv__,
    }
    try:
        fn = ops[op]
    except KeyError:
        raise ValueError(f"unknown op {op!r}") from None
    return fn(a, b)


def parse_scalar(text: str, field: Field) -> Scalar:
    """Parse ``[sign]digits[/digits]``; over GF(p), ``a/b`` is ``a * b^-1``."""
    return Scalar(field.parse(text), field)
