"""Set-valued expressions over the variables X1..Xn.

An expression is an immutable tree built from ``Empty``, ``Var``, ``Union``,
``Inter`` and ``Compl``. Text is read with :func:`parse` and written back with
:func:`to_text`; the two round-trip structurally.

Grammar (whitespace is ignored between tokens)::

    expr    = term { ("|" | "∪") term } ;
    term    = factor { ("&" | "∩") factor } ;
    factor  = ("!" factor) | postfix ;
    postfix = atom { "'" } ;
    atom    = "0" | "∅" | variable | "(" expr ")" ;
    variable = "X" digit { digit } ;
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Optional, TypeVar, Union as _Union

from .errors import ArityError, IndexOutOfRange, ParseError

DEFAULT_N_MAX = 20

T = TypeVar("T")


@dataclass(frozen=True)
class Empty:
    pass


@dataclass(frozen=True)
class Var:
    index: int


@dataclass(frozen=True)
class Union:
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Inter:
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Compl:
    inner: Expr


Expr = _Union[Empty, Var, Union, Inter, Compl]


def check_arity(n: int, n_max: Optional[int] = DEFAULT_N_MAX) -> int:
    """Validate an arity; ``n_max=None`` lifts the upper cap."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 1 \
            or (n_max is not None and n > n_max):
        raise ArityError(f"arity must be an integer in 1..{n_max or 'inf'}, got {n!r}")
    return n


def fold(
    e: Expr,
    empty: Callable[[], T],
    var: Callable[[int], T],
    union: Callable[[T, T], T],
    inter: Callable[[T, T], T],
    compl: Callable[[T], T],
) -> T:
    """Bottom-up evaluation of ``e`` without recursion.

    Long left-associated chains such as ``X1 | X1 | ... | X1`` are as deep as
    they are long, so an explicit stack is used instead of the call stack.
    """
    results: list[T] = []
    stack: list[tuple[Expr, bool]] = [(e, False)]
    while stack:
        node, expanded = stack.pop()
        if isinstance(node, Empty):
            results.append(empty())
        elif isinstance(node, Var):
            results.append(var(node.index))
        elif not expanded:
            stack.append((node, True))
            if isinstance(node, Compl):
                stack.append((node.inner, False))
            else:
                stack.append((node.right, False))
                stack.append((node.left, False))
        elif isinstance(node, Compl):
            results.append(compl(results.pop()))
        else:
            right = results.pop()
            left = results.pop()
            op = union if isinstance(node, Union) else inter
            results.append(op(left, right))
    return results[0]


def variables(e: Expr) -> frozenset[int]:
    """Indices of the variables occurring in ``e``."""
    return fold(
        e,
        frozenset,
        lambda i: frozenset((i,)),
        frozenset.union,
        frozenset.union,
        lambda s: s,
    )


def validate(e: Expr, n: int, n_max: Optional[int] = DEFAULT_N_MAX) -> None:
    """Raise unless every variable of ``e`` lies in 1..n."""
    check_arity(n, n_max)
    bad = sorted(i for i in variables(e) if not 1 <= i <= n)
    if bad:
        raise IndexOutOfRange(f"variable X{bad[0]} outside 1..{n}")


# ---------------------------------------------------------------- parsing

_SYMBOLS = {
    "|": "|", "∪": "|",
    "&": "&", "∩": "&",
    "!": "!", "'": "'",
    "(": "(", ")": ")",
    "0": "0", "∅": "0",
}


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    """Split ``text`` into (kind, value, position) triples."""
    tokens = []
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
        elif ch == "X":
            end = pos + 1
            while end < len(text) and text[end] in "0123456789":
                end += 1
            if end == pos + 1:
                raise ParseError("expected digits after 'X'", end, ["digit"])
            tokens.append(("var", text[pos + 1:end], pos))
            pos = end
        elif ch in _SYMBOLS:
            tokens.append((_SYMBOLS[ch], ch, pos))
            pos += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", pos,
                             ["'0'", "'∅'", "variable", "'('", "'!'"])
    tokens.append(("eof", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, n: int):
        self.tokens = _tokenize(text)
        self.i = 0
        self.n = n

    def peek(self) -> str:
        return self.tokens[self.i][0]

    def advance(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, expected: list[str]) -> ParseError:
        kind, value, pos = self.tokens[self.i]
        found = "end of input" if kind == "eof" else repr(value)
        return ParseError(f"unexpected {found}", pos, expected)

    def expr(self) -> Expr:
        e = self.term()
        while self.peek() == "|":
            self.advance()
            e = Union(e, self.term())
        return e

    def term(self) -> Expr:
        e = self.factor()
        while self.peek() == "&":
            self.advance()
            e = Inter(e, self.factor())
        return e

    def factor(self) -> Expr:
        if self.peek() == "!":
            self.advance()
            return Compl(self.factor())
        e = self.atom()
        while self.peek() == "'":
            self.advance()
            e = Compl(e)
        return e

    def atom(self) -> Expr:
        kind, value, pos = self.tokens[self.i]
        if kind == "0":
            self.advance()
            return Empty()
        if kind == "var":
            self.advance()
            index = int(value)
            if not 1 <= index <= self.n:
                raise IndexOutOfRange(
                    f"variable X{index} at position {pos} outside 1..{self.n}")
            return Var(index)
        if kind == "(":
            self.advance()
            e = self.expr()
            if self.peek() != ")":
                raise self.fail(["'|'", "'&'", "\"'\"", "')'"])
            self.advance()
            return e
        raise self.fail(["'0'", "'∅'", "variable", "'('", "'!'"])


def parse(text: str, n: int, n_max: int = DEFAULT_N_MAX) -> Expr:
    """Parse ``text`` as an expression over X1..Xn.

    >>> parse("X1 | X2", 3)
    Union(left=Var(index=1), right=Var(index=2))
    """
    check_arity(n, n_max)
    p = _Parser(text, n)
    e = p.expr()
    if p.peek() != "eof":
        raise p.fail(["'|'", "'&'", "\"'\"", "end of input"])
    return e


# --------------------------------------------------------------- printing

# binding strength of the printed form of each node
_ATOM, _INTER, _UNION = 3, 2, 1


def to_text(e: Expr) -> str:
    """Canonical text for ``e`` with the fewest parentheses the grammar allows."""

    def wrap(item: tuple[str, int], at_least: int) -> str:
        text, level = item
        return text if level >= at_least else f"({text})"

    text, _ = fold(
        e,
        lambda: ("0", _ATOM),
        lambda i: (f"X{i}", _ATOM),
        lambda l, r: (f"{wrap(l, _UNION)} | {wrap(r, _INTER)}", _UNION),
        lambda l, r: (f"{wrap(l, _INTER)} & {wrap(r, _ATOM)}", _INTER),
        lambda x: ("!" + wrap(x, _ATOM), _ATOM),
    )
    return text


# ------------------------------------------------------------- generation

def random_expr(rng: random.Random, n: int, depth: int) -> Expr:
    """Draw a random expression over X1..Xn of height at most ``depth``."""
    if depth <= 0 or rng.random() < 0.25:
        return Empty() if rng.random() < 0.1 else Var(rng.randint(1, n))
    kind = rng.randrange(3)
    if kind == 0:
        return Compl(random_expr(rng, n, depth - 1))
    left = random_expr(rng, n, depth - 1)
    right = random_expr(rng, n, depth - 1)
    return Union(left, right) if kind == 1 else Inter(left, right)


def union_all(exprs: list[Expr]) -> Expr:
    """Left-associated union; the empty list gives ``Empty()``."""
    if not exprs:
        return Empty()
    e = exprs[0]
    for x in exprs[1:]:
        e = Union(e, x)
    return e


def inter_all(exprs: list[Expr]) -> Expr:
    if not exprs:
        raise ValueError("intersection of no expressions")
    e = exprs[0]
    for x in exprs[1:]:
        e = Inter(e, x)
    return e
