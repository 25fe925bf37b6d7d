"""The truncated power sum f_k(x) = sum_{l=0}^{[x]} (x - l + c)^k and its
polynomial enclosure, the engine behind every induction step in the bounds.

For k >= 2, 0 <= c <= 1/2 and x >= -c,

    (x + c)^(k+1) / (k+1)
      <= (x + c)^(k+1) / (k+1) + (x + c)^k / 2
      <= f_k(x)
      <= (x + c + 1/2)^(k+1) / (k+1),

and the middle estimate can be tightened from above by k (x + c)^(k-1) / 8.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import DomainError, Rational, integer_part


@dataclass(frozen=True)
class PowerSumQuery:
    """One evaluation point: exponent k >= 1, shift 0 <= c <= 1/2, x >= -c."""

    x: Fraction
    c: Fraction
    k: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "c", Fraction(self.c))
        if self.k < 1:
            raise DomainError(f"exponent must be >= 1, got {self.k}")
        if not 0 <= self.c <= Fraction(1, 2):
            raise DomainError(f"shift must lie in [0, 1/2], got {self.c}")
        if self.x < -self.c:
            raise DomainError(f"x must be >= {-self.c}, got {self.x}")


def query(x: Rational, c: Rational, k: int) -> PowerSumQuery:
    return PowerSumQuery(Fraction(x), Fraction(c), k)


def power_sum(q: PowerSumQuery) -> Fraction:
    """Evaluate f_k(x) term by term; [x] truncates toward zero, so the sum
    has a single term whenever -c <= x < 1."""
    base = q.x + q.c
    return sum(
        ((base - step) ** q.k for step in range(integer_part(q.x) + 1)),
        Fraction(0),
    )


def check_sum_bounds(q: PowerSumQuery) -> tuple[bool, bool, bool]:
    """Evaluate the three-bound chain at one point, for k >= 2.

    Returns (left, middle, right): whether the crude lower bound is below
    the refined one, whether the refined one is below f_k, and whether f_k
    is below the upper bound.
    """
    if q.k < 2:
        raise DomainError(f"the enclosure is stated for k >= 2, got k={q.k}")
    base = q.x + q.c
    crude = base ** (q.k + 1) / (q.k + 1)
    refined = crude + base**q.k / 2
    value = power_sum(q)
    upper = (base + Fraction(1, 2)) ** (q.k + 1) / (q.k + 1)
    return (crude <= refined, refined <= value, value <= upper)


def refined_upper_bound(q: PowerSumQuery) -> Fraction:
    """The sharper upper estimate

        f_k(x) <= (x+c)^(k+1)/(k+1) + (x+c)^k/2 + k (x+c)^(k-1) / 8,

    valid on the same domain as the enclosure (k >= 2)."""
    if q.k < 2:
        raise DomainError(f"the refinement is stated for k >= 2, got k={q.k}")
    base = q.x + q.c
    return (
        base ** (q.k + 1) / (q.k + 1)
        + base**q.k / 2
        + Fraction(q.k, 8) * base ** (q.k - 1)
    )
