from functools import lru_cache

import hypothesis.strategies as st
from hypothesis import settings

from inclexcl.evaluate import SetSequence
from inclexcl.expr import Compl, Empty, Inter, Union, Var

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")


@lru_cache(maxsize=None)
def exprs(n, depth):
    """Expressions over X1..Xn of height at most ``depth``."""
    leaf = st.one_of(st.just(Empty()), st.integers(1, n).map(Var))
    if depth == 0:
        return leaf
    sub = exprs(n, depth - 1)
    return st.one_of(
        leaf,
        sub.map(Compl),
        st.builds(Union, sub, sub),
        st.builds(Inter, sub, sub),
    )


def sequences(n, universe=12):
    return st.lists(st.frozensets(st.integers(1, universe), max_size=universe),
                    min_size=n, max_size=n).map(lambda sets: SetSequence(tuple(sets)))


arities = st.integers(1, 6)


@st.composite
def arity_and_expr(draw, max_n=6, depth=8):
    n = draw(st.integers(1, max_n))
    return n, draw(exprs(n, depth))


@st.composite
def arity_expr_seq(draw, max_n=6, depth=8, universe=12):
    n = draw(st.integers(1, max_n))
    return n, draw(exprs(n, depth)), draw(sequences(n, universe))
