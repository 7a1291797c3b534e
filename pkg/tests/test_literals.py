from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bicext.errors import ParseError
from bicext.literals import parse, parse_pair, parse_payload
from bicext.ogroups import H3, Q, Z, ZXZ
from bicext.pairs import BElement


def test_parse_examples():
    assert parse("[3|5]", Z) == BElement(Z, 3, 5)
    assert parse_payload("2/4", Q) == Fraction(1, 2)
    assert parse("[(0,1)|(1,0)]", ZXZ) == BElement(ZXZ, (0, 1), (1, 0))
    assert parse_payload("(1,0,-2)", H3) == (1, 0, -2)
    assert parse_payload("-3", Z) == -3
    assert parse_payload("-3/4", Q) == Fraction(-3, 4)


def test_parse_dispatches_on_brackets():
    assert parse("7", Z) == 7
    assert isinstance(parse("[7|8]", Z), BElement)


def test_whitespace_tolerated():
    assert parse("[ 3 | 5 ]", Z) == BElement(Z, 3, 5)
    assert parse_payload("  42 ", Z) == 42
    assert parse_pair(" [1|2] ", Z) == BElement(Z, 1, 2)


def test_canonicalization_round_trip():
    v = parse_payload("2/4", Q)
    assert Q.render(v) == "1/2"
    assert parse_payload(Q.render(v), Q) == v


def test_render_canonical_forms():
    assert Z.render(-3) == "-3"
    assert Q.render(Fraction(4, 2)) == "2"
    assert ZXZ.render((1, -2)) == "(1,-2)"
    assert H3.render((1, 0, -2)) == "(1,0,-2)"
    assert str(BElement(Z, 3, 5)) == "[3|5]"


def test_parse_errors_carry_offsets():
    with pytest.raises(ParseError) as exc:
        parse_payload("12x", Z)
    assert exc.value.offset == 2

    with pytest.raises(ParseError) as exc:
        parse_payload("1/0", Q)
    assert exc.value.offset == 2

    with pytest.raises(ParseError) as exc:
        parse_pair("[1|2", Z)
    assert exc.value.offset == 3

    with pytest.raises(ParseError) as exc:
        parse_pair("(1|2)", Z)
    assert exc.value.offset == 0

    with pytest.raises(ParseError) as exc:
        parse_pair("[1|2|3]", Z)
    assert exc.value.offset == 1

    with pytest.raises(ParseError):
        parse_payload("", Z)


def test_wrong_arity():
    with pytest.raises(ParseError):
        parse_payload("(1,2)", H3)
    with pytest.raises(ParseError):
        parse_payload("(1,2,3)", ZXZ)
    with pytest.raises(ParseError):
        parse_payload("(1,2)", Z)


def test_second_coordinate_offset():
    # the offset points inside the right-hand payload of the pair literal
    with pytest.raises(ParseError) as exc:
        parse_pair("[3|x]", Z)
    assert exc.value.offset == 3


@given(st.integers())
def test_integer_round_trip(n):
    assert parse_payload(Z.render(n), Z) == n


@given(st.fractions(max_denominator=10**6))
def test_fraction_round_trip(x):
    assert parse_payload(Q.render(x), Q) == x


@given(st.tuples(st.integers(), st.integers()))
def test_lex_pair_round_trip(t):
    assert parse_payload(ZXZ.render(t), ZXZ) == t


@given(st.tuples(st.integers(), st.integers()), st.tuples(st.integers(), st.integers()))
def test_pair_literal_round_trip(a, b):
    s = BElement(ZXZ, a, b)
    assert parse_pair(str(s), ZXZ) == s
