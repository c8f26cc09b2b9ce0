import pytest
from hypothesis import given
import hypothesis.strategies as st

from inclexcl.errors import ArityError, IndexOutOfRange, ParseError
from inclexcl.expr import (Compl, Empty, Inter, Union, Var, check_arity, parse,
                           random_expr, to_text, union_all, variables)

from conftest import arity_and_expr


def test_parse_union():
    assert parse("X1 | X2", 3) == Union(Var(1), Var(2))


def test_parse_example_majority():
    got = parse("(X1 & X2) | (X1 & X3) | (X2 & X3)", 3)
    assert got == Union(Union(Inter(Var(1), Var(2)), Inter(Var(1), Var(3))),
                        Inter(Var(2), Var(3)))


def test_parse_empty_literal():
    assert parse("0", 2) == Empty()
    assert parse("∅", 2) == Empty()


def test_parse_index_out_of_range():
    with pytest.raises(IndexOutOfRange):
        parse("X4", 3)
    with pytest.raises(IndexOutOfRange):
        parse("X0", 3)


@pytest.mark.parametrize("n", [0, -1, 21, True])
def test_parse_bad_arity(n):
    with pytest.raises(ArityError):
        parse("X1", n)


def test_nmax_is_configurable():
    assert parse("X22", 22, n_max=24) == Var(22)
    with pytest.raises(ArityError):
        check_arity(22)


def test_precedence():
    # complement > intersection > union
    assert parse("!X1 & X2 | X3", 3) == Union(Inter(Compl(Var(1)), Var(2)), Var(3))
    assert parse("X1 | X2 & X3", 3) == Union(Var(1), Inter(Var(2), Var(3)))


def test_left_associative():
    assert parse("X1 & X2 & X3", 3) == Inter(Inter(Var(1), Var(2)), Var(3))
    assert parse("X1|X2|X3", 3) == Union(Union(Var(1), Var(2)), Var(3))


def test_unicode_aliases_match_ascii():
    assert parse("(X1 ∩ X2) ∪ X3'", 3) == parse("(X1 & X2) | !X3", 3)


def test_postfix_complement():
    assert parse("X1''", 1) == Compl(Compl(Var(1)))
    assert parse("(X1 | X2)'", 2) == Compl(Union(Var(1), Var(2)))
    assert parse("!X1'", 1) == Compl(Compl(Var(1)))


def test_whitespace_insignificant():
    assert parse("  X1|\n\tX2 ", 2) == parse("X1 | X2", 2)


@pytest.mark.parametrize("text, position", [
    ("X1 |", 4),
    ("(X1", 3),
    ("X1 X2", 3),
    ("X", 1),
    ("X1 + X2", 3),
    ("", 0),
    (")", 0),
])
def test_syntax_errors_report_position(text, position):
    with pytest.raises(ParseError) as info:
        parse(text, 3)
    assert info.value.position == position
    assert info.value.expected


@pytest.mark.parametrize("e, text", [
    (Union(Var(1), Var(2)), "X1 | X2"),
    (Compl(Union(Var(1), Var(2))), "!(X1 | X2)"),
    (Inter(Var(1), Compl(Var(2))), "X1 & !X2"),
    (Empty(), "0"),
    (Union(Var(1), Union(Var(2), Var(3))), "X1 | (X2 | X3)"),
    (Inter(Union(Var(1), Var(2)), Var(3)), "(X1 | X2) & X3"),
    (Inter(Var(1), Inter(Var(2), Var(3))), "X1 & (X2 & X3)"),
    (Compl(Compl(Var(1))), "!!X1"),
    (Compl(Inter(Var(1), Var(2))), "!(X1 & X2)"),
])
def test_print(e, text):
    assert to_text(e) == text


@given(arity_and_expr())
def test_round_trip(ne):
    n, e = ne
    assert parse(to_text(e), n) == e


@given(arity_and_expr(), st.data())
def test_round_trip_of_respaced_text(ne, data):
    # dropping the printer's spaces must not change the parse
    n, e = ne
    assert parse(to_text(e).replace(" ", ""), n) == e


@given(arity_and_expr())
def test_parser_deterministic(ne):
    n, e = ne
    text = to_text(e)
    assert parse(text, n) == parse(text, n)


def test_long_chain_does_not_recurse():
    e = union_all([Var(1)] * 5000)
    text = to_text(e)
    # dataclass equality itself recurses, so compare canonical text
    assert to_text(parse(text, 1)) == text
    assert variables(e) == {1}


def test_random_expr_respects_arity_and_depth():
    import random

    def height(e):
        if isinstance(e, (Empty, Var)):
            return 0
        if isinstance(e, Compl):
            return 1 + height(e.inner)
        return 1 + max(height(e.left), height(e.right))

    rng = random.Random(7)
    for _ in range(200):
        e = random_expr(rng, 4, 8)
        assert height(e) <= 8
        assert variables(e) <= set(range(1, 5))
