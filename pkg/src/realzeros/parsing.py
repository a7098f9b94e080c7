"""Polynomial input: a small expression grammar and coefficient lists.

Grammar (whitespace ignored, no implicit multiplication)::

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := base ('^' int)?
    base   := rational | 'x' | '(' expr ')'

where ``rational`` is ``digits`` or ``digits/digits``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

from .errors import ParseError
from .poly import Polynomial

COEFFS_PREFIX = "coeffs:"


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str, pos=None):
        raise ParseError(msg, self.pos if pos is None else pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def digits(self) -> str:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        return self.text[start:self.pos]

    def parse(self) -> Polynomial:
        if not self.peek():
            self.error("empty expression")
        result = self.expr()
        if self.peek():
            self.error(f"unexpected {self.peek()!r}")
        return result

    def expr(self) -> Polynomial:
        negate = self.take("-")
        acc = self.term()
        if negate:
            acc = -acc
        while True:
            if self.take("+"):
                acc = acc + self.term()
            elif self.take("-"):
                acc = acc - self.term()
            else:
                return acc

    def term(self) -> Polynomial:
        acc = self.factor()
        while self.take("*"):
            acc = acc * self.factor()
        return acc

    def factor(self) -> Polynomial:
        base = self.base()
        if self.take("^"):
            self.skip_ws()
            start = self.pos
            exp = self.digits()
            if not exp:
                self.error("expected a nonnegative integer exponent", start)
            base = base ** int(exp)
        ch = self.peek()
        if ch and (ch.isdigit() or ch in "x("):
            self.error("implicit multiplication is not supported; use '*'")
        return base

    def base(self) -> Polynomial:
        ch = self.peek()
        if ch == "x":
            self.pos += 1
            return Polynomial.x()
        if ch == "(":
            self.pos += 1
            inner = self.expr()
            if not self.take(")"):
                self.error("expected ')'")
            return inner
        if ch.isdigit():
            num = self.digits()
            if self.pos < len(self.text) and self.text[self.pos] == "/":
                self.pos += 1
                den = self.digits()
                if not den:
                    self.error("expected denominator digits")
                if int(den) == 0:
                    self.error("zero denominator", self.pos - len(den))
                return Polynomial.constant(Fraction(int(num), int(den)))
            return Polynomial.constant(int(num))
        if not ch:
            self.error("unexpected end of input")
        self.error(f"unexpected {ch!r}")


def parse_expression(text: str) -> Polynomial:
    return _Parser(text).parse()


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not a rational number: {text!r}") from None


def parse_coeffs(coeffs: Union[str, Iterable[str]]) -> Polynomial:
    """Ascending coefficients, either a list of strings or ``"-1, 0, 1"``."""
    return Polynomial(_coeff_list(coeffs))


def _coeff_list(coeffs) -> list[Fraction]:
    if isinstance(coeffs, str):
        items = coeffs.split(",")
        if len(items) == 1 and not items[0].strip():
            items = []
    else:
        items = list(coeffs)
    return [parse_rational(str(c)) for c in items]


def parse_polynomial(text: str) -> Polynomial:
    """An expression, or ``coeffs: c0, c1, ...`` in ascending order."""
    stripped = text.strip()
    if stripped.startswith(COEFFS_PREFIX):
        return parse_coeffs(stripped[len(COEFFS_PREFIX):])
    return parse_expression(text)


def input_echo(text: str) -> dict:
    """The ``input`` record of a certificate document for this raw input."""
    stripped = text.strip()
    if stripped.startswith(COEFFS_PREFIX):
        return {"coeffs": [str(c) for c in _coeff_list(stripped[len(COEFFS_PREFIX):])]}
    return {"expr": text}
