"""Recursive-descent parser for integer polynomial expressions.

Accepts +, -, *, ^ and parentheses over one symbol (written h or x,
both meaning the internal symbol), with implicit multiplication so the
canonical renderings round-trip: "2h^2 - 3" parses back to the Poly
that printed it.
"""
from __future__ import annotations

from .poly import H, Poly


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_SYMBOLS = ("h", "x")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> str | None:
        self._skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else None

    def _take(self) -> str:
        ch = self._peek()
        if ch is None:
            raise ParseError("unexpected end of input", self.pos)
        self.pos += 1
        return ch

    def _integer(self) -> int:
        self._skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError("expected an integer", start)
        return int(self.text[start : self.pos])

    def parse(self) -> Poly:
        value = self._expr()
        if self._peek() is not None:
            raise ParseError(f"unexpected character {self.text[self.pos]!r}", self.pos)
        return value

    def _expr(self) -> Poly:
        value = self._term()
        while (ch := self._peek()) in ("+", "-"):
            self._take()
            rhs = self._term()
            value = value + rhs if ch == "+" else value - rhs
        return value

    def _term(self) -> Poly:
        value = self._unary()
        while True:
            ch = self._peek()
            if ch == "*":
                self._take()
                value = value * self._unary()
            elif ch is not None and (ch.isdigit() or ch in _SYMBOLS or ch == "("):
                # implicit multiplication: 2h, 3(h+1), h(h+1)
                value = value * self._power()
            else:
                return value

    def _unary(self) -> Poly:
        ch = self._peek()
        if ch == "-":
            self._take()
            return -self._unary()
        if ch == "+":
            self._take()
            return self._unary()
        return self._power()

    def _power(self) -> Poly:
        base = self._atom()
        if self._peek() == "^":
            self._take()
            if self._peek() == "-":
                raise ParseError("negative exponents are not allowed", self.pos)
            return base ** self._integer()
        return base

    def _atom(self) -> Poly:
        ch = self._peek()
        if ch is None:
            raise ParseError("unexpected end of input", self.pos)
        if ch == "(":
            self._take()
            value = self._expr()
            if self._peek() != ")":
                raise ParseError("expected ')'", self.pos)
            self._take()
            return value
        if ch in _SYMBOLS:
            self._take()
            return H
        if ch.isdigit():
            return Poly([self._integer()])
        raise ParseError(f"unexpected character {ch!r}", self.pos)


def parse_poly(text: str) -> Poly:
    """Parse an integer-coefficient polynomial expression in h (or x)."""
    return _Parser(text).parse()
