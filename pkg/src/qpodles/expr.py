"""Parser for the text form of scalars and algebra elements.

Grammar (``^`` binds tighter than ``*`` and ``/``, which bind tighter than
``+`` and ``-``)::

    expr     := term (("+" | "-") term)*
    term     := unary (("*" | "/") unary)*
    unary    := "-" unary | power
    power    := atom ("^" exponent)?
    exponent := "-"? INT | "(" "-"? INT ("/" INT)? ")"
    atom     := INT | NAME | "[" "-"? INT ("/" INT)? "]" | "(" expr ")" | "sqrt" "(" expr ")"

Names are the Podleś generators ``A B Bs``, the SU_q(2) generators
``a c as cs`` and the parameter ``q``.  Everything printed by the package
parses back to an equal value.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import List, Tuple, Union

from .podles import PodlesElement, embed, pgen
from .scalar import Scalar, qint
from .suq2 import AlgebraElement, gen

Value = Union[Scalar, PodlesElement, AlgebraElement]

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")
_PODLES = {"A", "B", "Bs"}
_SUQ2 = {"a", "c", "as", "cs"}


class ParseError(ValueError):
    """Syntax error; ``offset`` is the byte position of the offending token."""

    def __init__(self, message: str, offset: int, text: str):
        super().__init__(f"{message} at offset {offset}: {text!r}")
        self.offset = offset


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        if m.group(1):
            tokens.append(("int", m.group(1), m.start(1)))
        elif m.group(2):
            tokens.append(("name", m.group(2), m.start(2)))
        elif m.group(3):
            ch = m.group(3)
            if ch not in "+-*/^()[]":
                raise ParseError(f"unexpected character {ch!r}", m.start(3), text)
            tokens.append(("op", ch, m.start(3)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


def _rank(x: Value) -> int:
    if isinstance(x, AlgebraElement):
        return 2
    if isinstance(x, PodlesElement):
        return 1
    return 0


def _promote(x: Value, rank: int) -> Value:
    if rank == 0 or _rank(x) == rank:
        return x
    if rank == 1:
        return PodlesElement.scalar(x)
    return embed(x) if isinstance(x, PodlesElement) else AlgebraElement.scalar(x)


def _unify(x: Value, y: Value) -> Tuple[Value, Value]:
    r = max(_rank(x), _rank(y))
    return _promote(x, r), _promote(y, r)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None, value=None):
        tok = self.tokens[self.i]
        if (kind and tok[0] != kind) or (value and tok[1] != value):
            want = value or kind
            got = tok[1] or "end of input"
            raise ParseError(f"expected {want!r}, found {got!r}", tok[2], self.text)
        self.i += 1
        return tok

    def at(self, value) -> bool:
        tok = self.peek()
        return tok[0] == "op" and tok[1] == value

    def parse(self) -> Value:
        out = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[1]!r}", tok[2], self.text)
        return out

    def expr(self) -> Value:
        x = self.term()
        while self.at("+") or self.at("-"):
            op = self.take()[1]
            y = self.term()
            x, y = _unify(x, y)
            x = x + y if op == "+" else x - y
        return x

    def term(self) -> Value:
        x = self.unary()
        while self.at("*") or self.at("/"):
            _, op, pos = self.take()
            y = self.unary()
            if op == "/":
                if _rank(y):
                    raise ParseError("division by a non-scalar", pos, self.text)
                if y.is_zero():
                    raise ParseError("division by zero", pos, self.text)
                try:
                    inv = y.inverse()
                except ArithmeticError as exc:
                    raise ParseError(str(exc), pos, self.text) from None
                x = x * inv if not _rank(x) else x.scale(inv)
            elif not _rank(x) or not _rank(y):
                x = x * y if not _rank(x) and not _rank(y) else (
                    x.scale(y) if _rank(x) else y.scale(x))
            else:
                x, y = _unify(x, y)
                x = x * y
        return x

    def unary(self) -> Value:
        if self.at("-"):
            self.take()
            return -self.unary()
        return self.power()

    def power(self) -> Value:
        start = self.peek()[2]
        base, is_q = self.atom()
        if not self.at("^"):
            return base
        pos = self.take()[2]
        e = self.exponent()
        if is_q:
            return Scalar.q(e)
        if e.denominator != 1:
            raise ParseError("fractional exponent on something other than q", pos, self.text)
        n = int(e)
        if _rank(base):
            if n < 0:
                raise ParseError("negative power of an algebra element", pos, self.text)
            return base ** n
        if n < 0 and base.is_zero():
            raise ParseError("zero to a negative power", start, self.text)
        try:
            return base ** n
        except ArithmeticError as exc:
            raise ParseError(str(exc), pos, self.text) from None

    def signed_fraction(self) -> Fraction:
        sign = -1 if self.at("-") and self.take() else 1
        value = Fraction(int(self.take("int")[1]))
        if self.at("/"):
            self.take()
            value /= int(self.take("int")[1])
        return sign * value

    def exponent(self) -> Fraction:
        if self.at("("):
            self.take()
            e = self.signed_fraction()
            self.take("op", ")")
            return e
        sign = -1 if self.at("-") and self.take() else 1
        return sign * Fraction(int(self.take("int")[1]))

    def atom(self) -> Tuple[Value, bool]:
        kind, value, pos = self.peek()
        if kind == "int":
            self.take()
            return Scalar(int(value)), False
        if kind == "name":
            self.take()
            if value == "q":
                return Scalar.q(1), True
            if value in _PODLES:
                return pgen(value), False
            if value in _SUQ2:
                return gen(value), False
            if value == "sqrt":
                self.take("op", "(")
                inner = self.expr()
                self.take("op", ")")
                if _rank(inner):
                    raise ParseError("sqrt of a non-scalar", pos, self.text)
                try:
                    return Scalar.sqrt(inner), False
                except (ArithmeticError, ValueError) as exc:
                    raise ParseError(str(exc), pos, self.text) from None
            raise ParseError(f"unknown identifier {value!r}", pos, self.text)
        if self.at("["):
            self.take()
            n = self.signed_fraction()
            self.take("op", "]")
            try:
                return qint(n), False
            except ValueError as exc:
                raise ParseError(str(exc), pos, self.text) from None
        if self.at("("):
            self.take()
            inner = self.expr()
            self.take("op", ")")
            return inner, False
        raise ParseError(f"unexpected {value or 'end of input'!r}", pos, self.text)


def parse(text: str) -> Value:
    """Parse to a Scalar, PodlesElement or AlgebraElement in normal form.

    The result type is the smallest one containing every generator used.
    """
    return _Parser(text).parse()


def parse_podles(text: str) -> PodlesElement:
    x = parse(text)
    if isinstance(x, AlgebraElement):
        raise ValueError(f"not a Podleś element: {text!r}")
    return _promote(x, 1)


def parse_algebra(text: str) -> AlgebraElement:
    return _promote(parse(text), 2)


def parse_scalar(text: str) -> Scalar:
    x = parse(text)
    if _rank(x):
        raise ValueError(f"not a scalar: {text!r}")
    return x
