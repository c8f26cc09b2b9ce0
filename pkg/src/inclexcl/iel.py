"""Deciding inclusion-exclusion-likeness and computing the coefficients.

An expression E over X1..Xn is inclusion-exclusion-like when integers
c_1..c_n exist with ``|E(A)| = sum_k c_k * i_{n,k}(A)`` for every sequence A.
That happens exactly when its characteristic set is a union of whole levels
(all subsets of some sizes C), and then::

    c_k = sum_{j=1}^{k} (-1)^(k-j) * binom(k, j) * [j in C]

All arithmetic is on exact integers. Results are checked against a signed
integer width (64 bits by default) and exceeding it raises
:class:`CoefficientOverflow` rather than wrapping or going to floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .charset import CharSet, masks_of_popcount
from .errors import CoefficientOverflow, RangeError
from .expr import check_arity

INT_BITS = 64

CoeffVector = tuple[int, ...]
CardinalitySet = frozenset[int]


def checked(value: int, bits: int = INT_BITS) -> int:
    """Return ``value`` if it fits a signed ``bits``-wide integer."""
    bound = 1 << (bits - 1)
    if not -bound <= value < bound:
        raise CoefficientOverflow(f"{value} does not fit in a signed {bits}-bit integer")
    return value


def binom(m: int, k: int, bits: int = INT_BITS) -> int:
    """Binomial coefficient C(m, k); zero when k > m."""
    if m < 0 or k < 0:
        raise RangeError(f"binom({m}, {k}) needs non-negative arguments")
    return checked(math.comb(m, k), bits)


@dataclass(frozen=True)
class IsLike:
    cardinalities: CardinalitySet
    coeffs: CoeffVector


@dataclass(frozen=True)
class NotLike:
    """The charset contains ``witness_in`` but not ``witness_out``, two
    subsets of the same size; their indicator sequences have equal
    i-vectors but different values of |E|."""

    witness_in: int
    witness_out: int


IelDecision = Union[IsLike, NotLike]


def coefficients(cardinalities: Iterable[int], n: int,
                 bits: int = INT_BITS) -> CoeffVector:
    """Coefficients c_1..c_n for the level set ``cardinalities``.

    >>> coefficients({2, 3}, 3)
    (0, 1, -2)
    """
    check_arity(n, None)
    levels = frozenset(cardinalities)
    bad = sorted(k for k in levels if not 1 <= k <= n)
    if bad:
        raise RangeError(f"cardinality {bad[0]} outside 1..{n}")
    out = []
    for k in range(1, n + 1):
        total = 0
        for j in range(1, k + 1):
            if j in levels:
                term = binom(k, j, bits)
                total = checked(total + (term if (k - j) % 2 == 0 else -term), bits)
        out.append(total)
    return tuple(out)


def decide_iel(s: CharSet, bits: int = INT_BITS) -> IelDecision:
    """Decide whether the charset ``s`` is a union of whole levels.

    On failure the witness is reproducible: the smallest violating size k,
    the numerically smallest member of size k and the numerically smallest
    non-member of size k.
    """
    n = s.arity
    counts = s.level_counts()
    for k in range(1, n + 1):
        if 0 < counts[k] < math.comb(n, k):
            inside = min(m for m in s if m.bit_count() == k)
            outside = next(m for m in masks_of_popcount(n, k) if m not in s)
            return NotLike(inside, outside)
    levels = frozenset(k for k in range(1, n + 1) if counts[k])
    return IsLike(levels, coefficients(levels, n, bits))


# ------------------------------------------------------ closed-form families

def family_at_least(m: int, n: int, bits: int = INT_BITS) -> CoeffVector:
    """Elements lying in at least ``m`` of the sets:
    ``c_k = (-1)^(k-m) * C(k-1, k-m)`` for k >= m, zero below."""
    if not 1 <= m <= n:
        raise RangeError(f"m={m} outside 1..{n}")
    return tuple(
        0 if k < m else checked((-1) ** (k - m) * binom(k - 1, k - m, bits), bits)
        for k in range(1, n + 1))


def family_even(n: int, bits: int = INT_BITS) -> CoeffVector:
    """Elements lying in an even number of the sets."""
    check_arity(n, None)
    return tuple(checked((-1) ** k * (checked(2 ** (k - 1), bits) - 1), bits)
                 for k in range(1, n + 1))


def family_odd(n: int, bits: int = INT_BITS) -> CoeffVector:
    """Elements lying in an odd number of the sets."""
    check_arity(n, None)
    return tuple(checked((-1) ** (k - 1) * checked(2 ** (k - 1), bits), bits)
                 for k in range(1, n + 1))


FAMILY_LEVELS = {
    "even": lambda n: range(2, n + 1, 2),
    "odd": lambda n: range(1, n + 1, 2),
}


def family_levels(kind: str, n: int, m: int | None = None) -> CardinalitySet:
    """The level set C a named family counts."""
    if kind == "at-least":
        if m is None or not 1 <= m <= n:
            raise RangeError(f"m={m} outside 1..{n}")
        return frozenset(range(m, n + 1))
    if kind not in FAMILY_LEVELS:
        raise RangeError(f"unknown family {kind!r}")
    return frozenset(FAMILY_LEVELS[kind](n))


def family(kind: str, n: int, m: int | None = None, bits: int = INT_BITS) -> CoeffVector:
    if kind == "at-least":
        if m is None:
            raise RangeError("the at-least family needs m")
        return family_at_least(m, n, bits)
    if m is not None:
        raise RangeError(f"m only applies to the at-least family, not {kind!r}")
    if kind == "even":
        return family_even(n, bits)
    if kind == "odd":
        return family_odd(n, bits)
    raise RangeError(f"unknown family {kind!r}")


# -------------------------------------------------------- binomial inversion

def binomial_forward(b: Sequence[int]) -> list[int]:
    """``a_k = sum_{j>=k} C(j, k) b_j`` for k = 0..len(b)-1."""
    n = len(b) - 1
    return [sum(math.comb(j, k) * b[j] for j in range(k, n + 1)) for k in range(n + 1)]


def binomial_inverse(a: Sequence[int]) -> list[int]:
    """``b_k = sum_{j>=k} (-1)^(j-k) C(j, k) a_j``; undoes :func:`binomial_forward`."""
    n = len(a) - 1
    return [sum((-1) ** (j - k) * math.comb(j, k) * a[j] for j in range(k, n + 1))
            for k in range(n + 1)]
