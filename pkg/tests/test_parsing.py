from fractions import Fraction as F

import pytest

from realzeros.errors import ParseError
from realzeros.parsing import input_echo, parse_coeffs, parse_expression, parse_polynomial
from realzeros.poly import Polynomial


def P(*cs):
    return Polynomial(cs)


@pytest.mark.parametrize("text, expected", [
    ("x^3 - 3*x", P(0, -3, 0, 1)),
    ("1/2*x^2 + (x - 1)", P(-1, 1, F(1, 2))),
    ("x^2+1", P(1, 0, 1)),
    ("  x ^ 2  -  1 ", P(-1, 0, 1)),
    ("-x^2 + 1", P(1, 0, -1)),
    ("(x - 1)^2*(x + 1)", P(1, -1, -1, 1)),
    ("2*(x - 1/3)", P(F(-2, 3), 2)),
    ("(-1)*x", P(0, -1)),
    ("x^0", P(1)),
    ("0", Polynomial()),
    ("x - x", Polynomial()),
])
def test_expressions(text, expected):
    assert parse_expression(text) == expected


@pytest.mark.parametrize("text, pos", [
    ("2x", 1),
    ("x^", 2),
    ("x + ", 4),
    ("x ** 2", 3),
    ("x + -1", 4),
    ("(x - 1", 6),
    ("x^2.5", 3),
    ("y", 0),
    ("1/0", 2),
    ("", 0),
])
def test_errors_carry_position(text, pos):
    with pytest.raises(ParseError) as info:
        parse_expression(text)
    assert info.value.position == pos


def test_coeffs():
    assert parse_coeffs(["-1", "0", "1"]) == P(-1, 0, 1)
    assert parse_coeffs("-1, 0, 1/2") == P(-1, 0, F(1, 2))
    assert parse_coeffs("") == Polynomial()
    with pytest.raises(ParseError):
        parse_coeffs("1, two")


def test_prefix_form():
    assert parse_polynomial("coeffs: -1,0,1") == P(-1, 0, 1)
    assert input_echo("coeffs: -1, 0, 1") == {"coeffs": ["-1", "0", "1"]}
    assert input_echo("x^2") == {"expr": "x^2"}
