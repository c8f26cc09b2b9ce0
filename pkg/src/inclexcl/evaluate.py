"""Evaluating expressions and characteristic sets on concrete set sequences.

This is the brute-force side of every check in the package: expressions are
evaluated directly by structural recursion, charsets by element signatures,
and the statistics i_{n,k} and sigma_{n,k} are counted from the sets
themselves.

Statistic vectors are tuples of length n; position ``k - 1`` holds the value
for k.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .charset import CharSet
from .errors import ArityMismatch, EmptyIndex, IndexOutOfRange
from .expr import Expr, check_arity, fold, validate


@dataclass(frozen=True)
class SetSequence:
    """A sequence (A_1, ..., A_n) of finite sets of non-negative integers."""

    sets: tuple[frozenset[int], ...]

    def __post_init__(self):
        if not self.sets:
            raise ValueError("a set sequence needs at least one set")
        for s in self.sets:
            for x in s:
                if isinstance(x, bool) or not isinstance(x, int) or x < 0:
                    raise ValueError(f"element {x!r} is not a non-negative integer")

    @classmethod
    def of(cls, sets: Iterable[Iterable[int]]) -> SetSequence:
        """Build from nested iterables, e.g. ``SetSequence.of([[1, 2], [2, 3], [3]])``."""
        return cls(tuple(frozenset(s) for s in sets))

    @property
    def arity(self) -> int:
        return len(self.sets)

    def universe(self) -> frozenset[int]:
        """The union A_1 u ... u A_n; complements are taken inside it."""
        return frozenset().union(*self.sets)

    def to_lists(self) -> list[list[int]]:
        return [sorted(s) for s in self.sets]


class Signature(NamedTuple):
    element: int
    mask: int


def signatures(a: SetSequence) -> list[Signature]:
    """For each element of the universe, the mask of the sets containing it."""
    masks: dict[int, int] = {}
    for k, s in enumerate(a.sets):
        bit = 1 << k
        for x in s:
            masks[x] = masks.get(x, 0) | bit
    return [Signature(x, masks[x]) for x in sorted(masks)]


def eval_expr(e: Expr, a: SetSequence) -> frozenset[int]:
    """Value of ``e`` at ``a``, complements relative to the universe of ``a``."""
    validate(e, a.arity, n_max=None)
    u = a.universe()
    return fold(
        e,
        frozenset,
        lambda i: a.sets[i - 1],
        frozenset.union,
        frozenset.intersection,
        lambda x: u - x,
    )


def eval_charset(s: CharSet, a: SetSequence) -> frozenset[int]:
    """Elements whose signature is a member of ``s``."""
    if s.arity != a.arity:
        raise ArityMismatch(f"charset arity {s.arity} vs sequence arity {a.arity}")
    return frozenset(sig.element for sig in signatures(a) if sig.mask in s)


def i_vector(a: SetSequence) -> tuple[int, ...]:
    """Sums of the cardinalities of all k-wise intersections, k = 1..n.

    An element in exactly p of the sets lies in C(p, k) of the k-wise
    intersections, so the sums are accumulated per element.
    """
    n = a.arity
    values = [0] * n
    for sig in signatures(a):
        p = sig.mask.bit_count()
        for k in range(1, p + 1):
            values[k - 1] += math.comb(p, k)
    return tuple(values)


def sigma_vector(a: SetSequence) -> tuple[int, ...]:
    """Number of elements lying in exactly k of the sets, k = 1..n."""
    values = [0] * a.arity
    for sig in signatures(a):
        values[sig.mask.bit_count() - 1] += 1
    return tuple(values)


def indicator_sequence(i_set: int, n: int) -> SetSequence:
    """The sequence with A_k = {1} for k in ``i_set`` and A_k empty otherwise."""
    check_arity(n, None)
    if i_set == 0:
        raise EmptyIndex("indicator sequences need a nonempty index set")
    if not 0 < i_set < 1 << n:
        raise IndexOutOfRange(f"mask {i_set} is not a subset of 1..{n}")
    one = frozenset((1,))
    return SetSequence(tuple(one if i_set >> k & 1 else frozenset() for k in range(n)))


def check_identity(s: CharSet, c: Sequence[int], a: SetSequence) -> bool:
    """Does ``|F_S(a)| == sum_k c_k * i_{n,k}(a)`` hold?"""
    if s.arity != a.arity or len(c) != a.arity:
        raise ArityMismatch(
            f"charset arity {s.arity}, {len(c)} coefficients, sequence arity {a.arity}")
    predicted = sum(ck * ik for ck, ik in zip(c, i_vector(a)))
    return len(eval_charset(s, a)) == predicted


def random_sequence(rng: random.Random, n: int, universe: int,
                    density: float = 0.5) -> SetSequence:
    """Each element of {1..universe} joins each A_k independently."""
    return SetSequence(tuple(
        frozenset(x for x in range(1, universe + 1) if rng.random() < density)
        for _ in range(n)))


def format_set(s: Iterable[int]) -> str:
    items = sorted(s)
    return "{" + ",".join(map(str, items)) + "}" if items else "∅"


def format_sequence(a: SetSequence) -> str:
    return "(" + ",".join(format_set(s) for s in a.sets) + ")"
