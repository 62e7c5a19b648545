"""Parser and printer for radial-symbol literals such as ``"1/2*r + 1/2*r^5"``.

Grammar (whitespace ignored)::

    expression := ["-"] term (("+" | "-") term)*
    term       := rational "*" "r" ["^" rational] | "r" ["^" rational] | rational
    rational   := integer ["/" positive-integer] | decimal

A bare rational is the constant term ``c*r^0``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .mellin import RadialSymbol


class SymbolSyntaxError(ValueError):
    pass


_TOKEN = re.compile(r"\s*(?:(\d+\.\d*|\.\d+|\d+)|(.))")


def _tokenize(text: str) -> list[str]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        tokens.append(m.group(1) or m.group(2))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> str | None:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, expected: str | None = None) -> str:
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            want = expected or "a token"
            raise SymbolSyntaxError(f"expected {want} in {self.text!r}, got {tok!r}")
        self.i += 1
        return tok

    def rational(self) -> Fraction:
        tok = self.take()
        if not (tok[0].isdigit() or tok[0] == "."):
            raise SymbolSyntaxError(f"expected a number in {self.text!r}, got {tok!r}")
        if "." in tok:
            return Fraction(tok)
        value = Fraction(int(tok))
        if self.peek() == "/":
            self.take("/")
            den = self.take()
            if not den.isdigit() or int(den) == 0:
                raise SymbolSyntaxError(f"bad denominator {den!r} in {self.text!r}")
            value /= int(den)
        return value

    def power(self) -> Fraction:
        self.take("r")
        if self.peek() == "^":
            self.take("^")
            return self.rational()
        return Fraction(1)

    def term(self) -> tuple[Fraction, Fraction]:
        if self.peek() == "r":
            return Fraction(1), self.power()
        c = self.rational()
        if self.peek() == "*":
            self.take("*")
            return c, self.power()
        return c, Fraction(0)

    def expression(self) -> RadialSymbol:
        if self.peek() is None:
            raise SymbolSyntaxError("empty symbol expression")
        sign = 1
        if self.peek() == "-":
            self.take("-")
            sign = -1
        terms = []
        c, a = self.term()
        terms.append((sign * c, a))
        while self.peek() in ("+", "-"):
            sign = 1 if self.take() == "+" else -1
            c, a = self.term()
            terms.append((sign * c, a))
        if self.peek() is not None:
            raise SymbolSyntaxError(f"unexpected {self.peek()!r} in {self.text!r}")
        return RadialSymbol.of(terms)


def parse_symbol(text: str) -> RadialSymbol:
    return _Parser(text).expression()


def format_symbol(s: RadialSymbol) -> str:
    if s.is_zero():
        return "0"
    out = ""
    for i, (c, a) in enumerate(s.terms):
        mag = abs(c)
        if a == 0:
            body = str(mag)
        else:
            mono = "r" if a == 1 else f"r^{a}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if i == 0:
            out = ("-" if c < 0 else "") + body
        else:
            out += (" - " if c < 0 else " + ") + body
    return out
