"""Exception hierarchy.

Every error the library raises derives from :class:`TorsionNilError`, so the
CLI can map families of failures onto exit codes.
"""

from __future__ import annotations

from fractions import Fraction


class TorsionNilError(Exception):
    """Base class for all library errors."""


# scalars / parsing


class FieldMismatch(TorsionNilError, TypeError):
    pass


class DivisionByZero(TorsionNilError, ZeroDivisionError):
    pass


class ParseError(TorsionNilError, ValueError):
    pass


# matrices / polynomials


class DimensionMismatch(TorsionNilError, ValueError):
    pass


class NonSquare(TorsionNilError, ValueError):
    pass


class Singular(TorsionNilError, ValueError):
    pass


class IndexOutOfRange(TorsionNilError, IndexError):
    pass


class ZeroScale(TorsionNilError, ValueError):
    pass


class NotMonic(TorsionNilError, ValueError):
    pass


class DegreeZero(TorsionNilError, ValueError):
    pass


# constructions and pipelines


class ParamOutOfRange(TorsionNilError, ValueError):
    pass


class NotNilpotent(TorsionNilError, ValueError):
    pass


class RankConditionViolated(TorsionNilError):
    """The rank is below ``n/k``; no decomposition with ``N^k = 0`` exists.

    This is a proven obstruction (a torsion summand is invertible), not a
    search verdict.
    """

    def __init__(self, rank: int, n: int, k: int = 2, detail: str = ""):
        self.rank = rank
        self.n = n
        self.k = k
        threshold = Fraction(n, k)
        msg = f"rank {rank} < {threshold} = n/{k}"
        if detail:
            msg = f"{msg} ({detail})"
        super().__init__(msg)


class InternalVerificationFailed(TorsionNilError, AssertionError):
    """A post-condition check failed. Always a bug, never expected."""


class Refusal(TorsionNilError):
    """The tool declines to answer. Not a claim of impossibility."""


class TraceNotSupported(Refusal):
    pass


class TraceMismatch(Refusal):
    pass


class NotTorsionPolynomial(Refusal):
    pass


class NotCompanion(Refusal):
    pass


class NotTorsionWithinCap(Refusal):
    pass


class BudgetExceeded(Refusal):
    pass


class NotPrimeField(Refusal):
    pass


class UnsupportedNilpotenceIndex(Refusal):
    pass
