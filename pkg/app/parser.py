# app/parser.py
"""
Polynomial text parser.

Grammar (no parentheses, implicit multiplication not allowed):

    poly    := ["-"|"+"] product (("+"|"-") product)*
    product := factor ("*" factor)*
    factor  := INT ["/" INT] | NAME ["^" INT]

Names declared as ring variables build the monomial; names of the coefficient ring
(the t in unipoly(t)) go into the coefficient.
"""
from __future__ import annotations

from fractions import Fraction
import re
from typing import Optional

from .errors import ParseError, UnknownVariableError
from .polynomials import Monomial, PolyRing, Polynomial
from .rings import RingElement

_TOKEN_RE = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^]))")


class _Token:
    __slots__ = ("kind", "text", "pos")

    def __init__(self, kind: str, text: str, pos: int):
        self.kind, self.text, self.pos = kind, text, pos


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN_RE.match(text, pos)
        if not m:
            bad = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ParseError(f"unexpected character {text[bad]!r}", bad)
        kind = m.lastgroup or "op"
        tokens.append(_Token(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(_Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: PolyRing):
        self.ring = ring
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def take(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_int(self, what: str) -> int:
        tok = self.take()
        if tok.kind != "num":
            raise ParseError(f"expected {what}", tok.pos)
        return int(tok.text)

    def parse(self) -> Polynomial:
        acc: dict[Monomial, RingElement] = {}
        coeffs = self.ring.coeff
        sign = 1
        if self.peek().text in ("+", "-"):
            sign = -1 if self.take().text == "-" else 1
        while True:
            mono, c = self.product()
            c = c if sign > 0 else -c
            acc[mono] = acc.get(mono, coeffs.zero) + c
            tok = self.peek()
            if tok.kind == "end":
                break
            if tok.text not in ("+", "-"):
                if tok.kind in ("num", "name"):
                    raise ParseError("implicit multiplication is not allowed; use '*'", tok.pos)
                raise ParseError(f"unexpected {tok.text!r}", tok.pos)
            sign = -1 if self.take().text == "-" else 1
        return self.ring.from_dict(acc)

    def product(self) -> tuple[Monomial, RingElement]:
        scalar = Fraction(1)
        aux: Optional[RingElement] = None
        exps = [0] * self.ring.nvars
        while True:
            tok = self.take()
            if tok.kind == "num":
                value = Fraction(int(tok.text))
                if self.peek().text == "/":
                    self.take()
                    den_pos = self.peek().pos
                    den = self.expect_int("a denominator")
                    if den == 0:
                        raise ParseError("division by zero", den_pos)
                    value /= den
                scalar *= value
            elif tok.kind == "name":
                exp = 1
                if self.peek().text == "^":
                    self.take()
                    exp = self.expect_int("a nonnegative integer exponent")
                if tok.text in self.ring.names:
                    exps[self.ring.names.index(tok.text)] += exp
                elif tok.text in self.ring.coeff.descriptor.aux_vars:
                    g = self.ring.coeff.aux_gen(tok.text)
                    for _ in range(exp):
                        aux = g if aux is None else aux * g
                    if exp == 0 and aux is None:
                        aux = self.ring.coeff.one
                else:
                    raise UnknownVariableError(f"unknown variable {tok.text!r}", tok.pos)
            else:
                raise ParseError("expected a number or a variable", tok.pos)
            if self.peek().text != "*":
                break
            self.take()
        try:
            c = self.ring.coeff.from_fraction(scalar)
        except ValueError:
            raise ParseError(
                f"literal {scalar} is not an element of {self.ring.coeff.descriptor}", tok.pos
            ) from None
        if aux is not None:
            c = c * aux
        return tuple(exps), c


def parse_poly(text: str, ring: PolyRing) -> Polynomial:
    """Parse text into a polynomial of ring; ParseError carries the 0-based column."""
    return _Parser(text, ring).parse()
