"""The Frobenius number and bounds on it derived from the sandwich.

For a coprime tuple, every n > s-_k has at least one representation, so the
largest non-representable number g satisfies g <= s-_k and a sieve over
0..s-_k finds it exactly.  In the other direction, any n whose polynomial
upper bound is below 1 cannot be represented, which turns the two upper
shift sequences into lower bounds on g.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .bounds import bound_sequences, relaxed_shift_sequence
from .core import (
    CoefficientTuple,
    InvariantViolationError,
    NotCoprimeError,
)


@dataclass(frozen=True)
class FrobeniusReport:
    """The exact Frobenius number next to its certified enclosures.

    Either root bound may be None: that means no n at all satisfies the
    defining inequality, so that route certifies nothing for this tuple.
    """

    coeffs: tuple[int, ...]
    g: int
    brauer_upper: int
    root_lower_1: int | None
    root_lower_2: int | None


def _sieve_top(coeffs: tuple[int, ...]) -> int:
    shift = bound_sequences(coeffs).lower_shifts[-1]
    if shift.denominator != 1:
        raise InvariantViolationError(
            f"lower shift of {coeffs} is not an integer: {shift}"
        )
    return int(shift)


def frobenius_exact(a: CoefficientTuple | Sequence[int]) -> int:
    """The largest integer with no representation; -1 when 1 is a coefficient.

    Requires a coprime tuple.  Works by sieving reachability up to the
    lower shift s-_k, above which everything is representable.
    """
    coeffs = CoefficientTuple.of(a).coeffs
    if 1 in coeffs:
        return -1
    if math.gcd(*coeffs) != 1:
        raise NotCoprimeError(f"{coeffs} has gcd > 1; no Frobenius number exists")
    top = _sieve_top(coeffs)
    if top < 0:
        return -1
    reachable = [False] * (top + 1)
    reachable[0] = True
    for value in range(1, top + 1):
        for coeff in coeffs:
            if coeff <= value and reachable[value - coeff]:
                reachable[value] = True
                break
    for value in range(top, -1, -1):
        if not reachable[value]:
            return value
    return -1


def _largest_satisfying(shift: Fraction, power: int, target: int) -> int | None:
    """The largest n >= 0 with (n + shift)^power < target, or None."""

    def holds(n: int) -> bool:
        return (n + shift) ** power < target

    if not holds(0):
        return None
    hi = 1
    while holds(hi):
        hi <<= 1
    lo = hi >> 1
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if holds(mid):
            lo = mid
        else:
            hi = mid
    return lo


def bound_frobenius(a: CoefficientTuple | Sequence[int]) -> FrobeniusReport:
    """Certified enclosures for the Frobenius number of a coprime tuple.

    * brauer_upper: g <= s-_k, read off the lower shift sequence.
    * root_lower_1: the largest n with (n + s+_k)^(k-1) < (k-1)! prod a;
      the sandwich forces the count to be zero there, so g is at least it.
    * root_lower_2: the same argument on the relaxed count, largest n with
      (n + r_k)^k < k! prod a.
    """
    coeffs = CoefficientTuple.of(a).coeffs
    g = frobenius_exact(coeffs)
    seqs = bound_sequences(coeffs)
    k = len(coeffs)
    prod = math.prod(coeffs)
    root_1 = _largest_satisfying(
        seqs.upper_shifts[-1], k - 1, math.factorial(k - 1) * prod
    )
    root_2 = _largest_satisfying(
        relaxed_shift_sequence(coeffs)[-1], k, math.factorial(k) * prod
    )
    return FrobeniusReport(
        coeffs=coeffs,
        g=g,
        brauer_upper=_sieve_top(coeffs),
        root_lower_1=root_1,
        root_lower_2=root_2,
    )
