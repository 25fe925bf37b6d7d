"""Shared domain types, exact arithmetic helpers, and the error vocabulary.

Everything in this package computes with arbitrary-precision integers and
exact rationals; no floating point ever enters the math core.  All types
here are immutable values and all functions are pure, so they can be shared
freely across threads or worker processes.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence, Union

# The value type for every bound and every Blom-Froberg number: arbitrary
# precision, kept in lowest terms with a positive denominator, never rounded.
ExactRational = Fraction

Rational = Union[int, Fraction]


class DenumerantError(Exception):
    """Base class for the domain errors raised by this package."""


class NotCoprimeError(DenumerantError):
    """An operation that needs gcd(a_1, ..., a_k) = 1 got a tuple with gcd > 1."""


class TooShortTupleError(DenumerantError):
    """An operation that needs at least two coefficients got fewer."""


class NotApplicableError(DenumerantError):
    """The input lies outside the region where the requested result is defined."""


class IndexRangeError(DenumerantError):
    """An evaluation would read a coefficient past the end of the tuple."""


class NotInvertibleError(DenumerantError):
    """A modular inverse was requested for a non-invertible residue."""


class BudgetExceededError(DenumerantError):
    """Brute-force enumeration would visit more nodes than the configured cap."""


class DomainError(DenumerantError):
    """A query parameter violates the domain the inequality is proved on."""


class InvariantViolationError(DenumerantError):
    """An identity that must always hold failed; this signals a bug."""


@dataclass(frozen=True)
class CoefficientTuple:
    """A finite tuple (a_1, ..., a_k) of positive integer coefficients.

    Order matters: the running gcds, hence every shift sequence built from
    them, depend on it.  The solution count itself does not.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("coefficient tuple must not be empty")
        for value in self.coeffs:
            if isinstance(value, bool) or not isinstance(value, int):
                raise ValueError(f"coefficients must be integers, got {value!r}")
            if value < 1:
                raise ValueError(f"coefficients must be >= 1, got {value}")

    @classmethod
    def of(cls, values: "CoefficientTuple | Sequence[int]") -> "CoefficientTuple":
        """Normalize a sequence of integers (or pass through an existing tuple)."""
        if isinstance(values, CoefficientTuple):
            return values
        try:
            normalized = tuple(operator.index(v) for v in values)
        except TypeError as err:
            raise ValueError(f"coefficients must be integers: {err}") from err
        return cls(normalized)

    @property
    def k(self) -> int:
        return len(self.coeffs)

    def product(self) -> int:
        return math.prod(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    def __getitem__(self, index: int) -> int:
        return self.coeffs[index]


@dataclass(frozen=True)
class GcdChain:
    """Running gcds d_i = gcd(a_1, ..., a_i) of a coefficient tuple.

    Each entry divides the one before it, and the tuple is coprime exactly
    when the final entry is 1.
    """

    d: tuple[int, ...]

    @property
    def is_coprime(self) -> bool:
        return self.d[-1] == 1


def gcd_chain(a: CoefficientTuple | Sequence[int]) -> GcdChain:
    """Compute the running gcds of the coefficient tuple, left to right."""
    coeffs = CoefficientTuple.of(a).coeffs
    chain: list[int] = []
    running = 0
    for value in coeffs:
        running = math.gcd(running, value)
        chain.append(running)
    return GcdChain(tuple(chain))


def reduce_by_gcd(a: CoefficientTuple | Sequence[int]) -> tuple[CoefficientTuple, int]:
    """Divide every coefficient by the overall gcd; return (reduced, gcd)."""
    source = CoefficientTuple.of(a)
    d = math.gcd(*source.coeffs)
    if d == 1:
        return source, 1
    return CoefficientTuple(tuple(c // d for c in source.coeffs)), d


def integer_part(x: Rational) -> int:
    """Truncate toward zero: floor(x) for x >= 0 and ceil(x) for x < 0.

    This is the bracket that caps every enumeration loop, so [x] = -[-x]
    and [x] = 0 whenever -1 < x < 1.
    """
    return math.trunc(x)


def parse_rational(text: str) -> Fraction:
    """Parse a decimal integer or a "p/q" string into an exact rational."""
    return Fraction(text.strip())


def format_rational(value: Rational) -> str:
    """Render an exact rational as "p/q", or as a bare integer when q = 1."""
    return str(Fraction(value))
