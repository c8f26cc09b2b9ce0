"""Characteristic sets: collections of nonempty subsets of {1..n}.

A subset I of {1..n} is a bitmask with bit ``i - 1`` set when ``i`` is in I.
Every expression E over X1..Xn is equivalent to exactly one union of atoms
G_I (elements lying in exactly the sets A_i, i in I), and the masks of those
atoms form its characteristic set.

Two storage backends are provided and behave identically:

* sparse: a ``frozenset`` of masks;
* dense: a Python int used as a 2**n bit array, bit ``m`` set when mask ``m``
  is a member. Set algebra is then a single bitwise operation.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import chain
from typing import Iterable, Iterator, Optional

from .errors import ArityMismatch, IndexOutOfRange
from .expr import DEFAULT_N_MAX, Expr, check_arity, fold, validate

DENSE_MAX_ARITY = 16


def mask_of(indices: Iterable[int]) -> int:
    """Mask of a collection of 1-based indices."""
    m = 0
    for i in indices:
        if i < 1:
            raise IndexOutOfRange(f"index {i} is not positive")
        m |= 1 << (i - 1)
    return m


_BYTE_INDICES = tuple(
    tuple(b + 1 for b in range(8) if byte >> b & 1) for byte in range(256))


def indices_of(mask: int) -> list[int]:
    """Sorted 1-based indices of ``mask``."""
    out: list[int] = []
    offset = 0
    while mask:
        byte = mask & 0xFF
        if byte:
            out.extend(offset + i for i in _BYTE_INDICES[byte])
        mask >>= 8
        offset += 8
    return out


def masks_of_popcount(n: int, k: int) -> Iterator[int]:
    """All n-bit masks with exactly ``k`` bits set, in increasing order."""
    if not 0 <= k <= n:
        return
    if k == 0:
        yield 0
        return
    m = (1 << k) - 1
    limit = 1 << n
    while m < limit:
        yield m
        # next mask with the same popcount (Gosper's hack)
        low = m & -m
        ripple = m + low
        m = ripple | (((m ^ ripple) >> 2) // low)


def _full_bits(n: int) -> int:
    # every mask except 0
    return (1 << (1 << n)) - 2


@lru_cache(maxsize=None)
def _upset_bits(n: int, i: int) -> int:
    # masks containing bit i-1: in each block of 2**i positions the upper half
    half = 1 << (i - 1)
    block = ((1 << half) - 1) << half
    period = 1 << i
    repeat = ((1 << (1 << n)) - 1) // ((1 << period) - 1)
    return block * repeat


@lru_cache(maxsize=None)
def _upset_masks(n: int, i: int) -> frozenset[int]:
    half = 1 << (i - 1)
    return frozenset(chain.from_iterable(
        range(base, base + half) for base in range(half, 1 << n, 2 * half)))


def _bits_from_masks(masks: Iterable[int]) -> int:
    bits = 0
    for m in masks:
        bits |= 1 << m
    return bits


class CharSet:
    """An immutable set of nonempty n-bit masks.

    Equality and hashing depend only on the arity and the members, never on
    the backend.
    """

    __slots__ = ("arity", "_bits", "_masks", "_bytes")

    def __init__(self, arity: int, *, bits: Optional[int] = None,
                 masks: Optional[frozenset[int]] = None):
        # use the from_* constructors; this one trusts its input
        if (bits is None) == (masks is None):
            raise TypeError("exactly one of bits= or masks= is required")
        self.arity = arity
        self._bits = bits
        self._masks = masks
        self._bytes: Optional[bytes] = None

    # -- construction

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int],
                   dense: Optional[bool] = None) -> CharSet:
        check_arity(n, None)
        members = frozenset(masks)
        limit = 1 << n
        for m in members:
            if not 0 < m < limit:
                raise ValueError(f"mask {m} is not a nonempty subset of 1..{n}")
        if _want_dense(n, dense):
            return cls(n, bits=_bits_from_masks(members))
        return cls(n, masks=members)

    @classmethod
    def from_subsets(cls, n: int, subsets: Iterable[Iterable[int]],
                     dense: Optional[bool] = None) -> CharSet:
        """Build from 1-based index lists, e.g. ``[[1, 2], [1, 3]]``."""
        masks = []
        for s in subsets:
            m = mask_of(s)
            if m >= 1 << n:
                raise IndexOutOfRange(f"subset {list(s)} not within 1..{n}")
            masks.append(m)
        return cls.from_masks(n, masks, dense)

    @classmethod
    def empty(cls, n: int, dense: Optional[bool] = None) -> CharSet:
        return cls.from_masks(n, (), dense)

    @classmethod
    def full(cls, n: int, dense: Optional[bool] = None) -> CharSet:
        """All nonempty subsets of 1..n."""
        check_arity(n, None)
        if _want_dense(n, dense):
            return cls(n, bits=_full_bits(n))
        return cls(n, masks=frozenset(range(1, 1 << n)))

    @classmethod
    def upset(cls, n: int, i: int, dense: Optional[bool] = None) -> CharSet:
        """The sets J with i in J: the characteristic set of X_i."""
        check_arity(n, None)
        if not 1 <= i <= n:
            raise IndexOutOfRange(f"variable X{i} outside 1..{n}")
        if _want_dense(n, dense):
            return cls(n, bits=_upset_bits(n, i))
        return cls(n, masks=_upset_masks(n, i))

    @classmethod
    def of_levels(cls, n: int, levels: Iterable[int],
                  dense: Optional[bool] = None) -> CharSet:
        """Every subset whose size lies in ``levels``."""
        check_arity(n, None)
        masks = [m for k in set(levels) for m in masks_of_popcount(n, k) if k >= 1]
        return cls.from_masks(n, masks, dense)

    # -- backends

    @property
    def is_dense(self) -> bool:
        return self._bits is not None

    def bits(self) -> int:
        """Dense bit-array view of the members."""
        if self._bits is not None:
            return self._bits
        return _bits_from_masks(self._masks)

    def to_dense(self) -> CharSet:
        return self if self.is_dense else CharSet(self.arity, bits=self.bits())

    def to_sparse(self) -> CharSet:
        return self if not self.is_dense else CharSet(self.arity, masks=frozenset(self))

    # -- container protocol

    def __contains__(self, mask: int) -> bool:
        if self._masks is not None:
            return mask in self._masks
        if not 0 <= mask < 1 << self.arity:
            return False
        if self._bytes is None:
            size = ((1 << self.arity) + 7) // 8
            self._bytes = self._bits.to_bytes(size, "little")
        return bool(self._bytes[mask >> 3] >> (mask & 7) & 1)

    def __iter__(self) -> Iterator[int]:
        """Members in ascending mask order."""
        if self._masks is not None:
            return iter(sorted(self._masks))
        return _iter_bits(self._bits)

    def __len__(self) -> int:
        if self._masks is not None:
            return len(self._masks)
        return self._bits.bit_count()

    def __bool__(self) -> bool:
        return bool(self._masks) if self._masks is not None else bool(self._bits)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CharSet):
            return NotImplemented
        if self.arity != other.arity:
            return False
        if self._masks is not None and other._masks is not None:
            return self._masks == other._masks
        return self.bits() == other.bits()

    def __hash__(self) -> int:
        return hash((self.arity, self.bits()))

    def __repr__(self) -> str:
        return f"CharSet(n={self.arity}, {self.serialize()})"

    # -- algebra

    def _check(self, other: CharSet) -> None:
        if not isinstance(other, CharSet):
            raise TypeError(f"expected CharSet, got {type(other).__name__}")
        if self.arity != other.arity:
            raise ArityMismatch(f"arity {self.arity} vs {other.arity}")

    def union(self, other: CharSet) -> CharSet:
        self._check(other)
        if self.is_dense or other.is_dense:
            return CharSet(self.arity, bits=self.bits() | other.bits())
        return CharSet(self.arity, masks=self._masks | other._masks)

    def inter(self, other: CharSet) -> CharSet:
        self._check(other)
        if self.is_dense or other.is_dense:
            return CharSet(self.arity, bits=self.bits() & other.bits())
        return CharSet(self.arity, masks=self._masks & other._masks)

    def compl(self) -> CharSet:
        """Nonempty masks that are not members; the empty mask never enters."""
        if self.is_dense:
            return CharSet(self.arity, bits=_full_bits(self.arity) & ~self._bits)
        members = self._masks
        return CharSet(self.arity, masks=frozenset(
            m for m in range(1, 1 << self.arity) if m not in members))

    __or__ = union
    __and__ = inter
    __invert__ = compl

    # -- serialization

    def serialize(self) -> list[list[int]]:
        """Members as 1-based index lists, in ascending mask order."""
        return [indices_of(m) for m in self]

    def level_counts(self) -> list[int]:
        """``counts[k]`` is the number of members with exactly k elements."""
        counts = [0] * (self.arity + 1)
        for m in self:
            counts[m.bit_count()] += 1
        return counts


def _want_dense(n: int, dense: Optional[bool]) -> bool:
    if dense is None:
        return n <= DENSE_MAX_ARITY
    return dense


def _iter_bits(bits: int) -> Iterator[int]:
    base = 0
    # walk in 64-bit words so sparse high bits do not cost a shift each
    while bits:
        word = bits & 0xFFFFFFFFFFFFFFFF
        while word:
            low = word & -word
            yield base + low.bit_length() - 1
            word ^= low
        bits >>= 64
        base += 64


# ------------------------------------------------------------- operations

def charset(e: Expr, n: int, dense: Optional[bool] = None,
            n_max: int = DEFAULT_N_MAX) -> CharSet:
    """Characteristic set of ``e`` over X1..Xn.

    Computed bottom-up: the empty expression gives no sets, X_i gives the
    sets containing i, union and intersection act member-wise, and
    complement takes the remaining nonempty sets.

    >>> from inclexcl.expr import parse
    >>> charset(parse("X1 | X2", 3), 3).serialize()
    [[1], [2], [1, 2], [1, 3], [2, 3], [1, 2, 3]]
    """
    validate(e, n, n_max)
    use_dense = _want_dense(n, dense)
    return fold(
        e,
        lambda: CharSet.empty(n, use_dense),
        lambda i: CharSet.upset(n, i, use_dense),
        CharSet.union,
        CharSet.inter,
        CharSet.compl,
    )


def equivalent(e1: Expr, e2: Expr, n: int) -> bool:
    """True when ``e1`` and ``e2`` take the same value on every sequence."""
    return charset(e1, n) == charset(e2, n)


def charset_union(s: CharSet, t: CharSet) -> CharSet:
    return s.union(t)


def charset_inter(s: CharSet, t: CharSet) -> CharSet:
    return s.inter(t)


def charset_compl(s: CharSet) -> CharSet:
    return s.compl()
