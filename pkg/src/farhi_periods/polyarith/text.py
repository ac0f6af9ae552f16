"""Text format for integer polynomials in ``x``.

Grammar (whitespace ignored)::

    poly := ['+'|'-'] term (('+'|'-') term)*
    term := INT | INT ['*'] 'x' ['^' UINT] | 'x' ['^' UINT]

Repeated powers are summed.  The canonical printer writes descending powers
with an explicit ``*`` and never emits ``+ -``, e.g. ``x^2 - 3*x + 1``.
"""

from __future__ import annotations

from .poly import IntPoly


class PolySyntaxError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.text = text
        self.pos = pos


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str):
        raise PolySyntaxError(message, self.text, self.pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self) -> str:
        ch = self.peek()
        self.pos += 1
        return ch

    def uint(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected an integer")
        return int(self.text[start : self.pos])

    def variable(self) -> int:
        # positioned on 'x'; returns the exponent
        self.pos += 1
        if self.peek() == "^":
            self.take()
            return self.uint()
        return 1

    def term(self) -> tuple[int, int]:
        ch = self.peek()
        if ch.isdigit():
            coeff = self.uint()
            nxt = self.peek()
            if nxt == "*":
                self.take()
                if self.peek() != "x":
                    self._bad_variable()
                return coeff, self.variable()
            if nxt == "x":
                return coeff, self.variable()
            if nxt.isalpha():
                self._bad_variable()
            return coeff, 0
        if ch == "x":
            return 1, self.variable()
        self._bad_variable()

    def _bad_variable(self):
        ch = self.peek()
        if ch.isalpha():
            self.error(f"unknown variable {ch!r} (only 'x' is allowed)")
        self.error("expected a term" if ch else "unexpected end of input")

    def parse(self) -> IntPoly:
        acc: dict[int, int] = {}
        sign = 1
        if self.peek() in "+-" and self.peek():
            sign = -1 if self.take() == "-" else 1
        while True:
            c, e = self.term()
            acc[e] = acc.get(e, 0) + sign * c
            ch = self.peek()
            if not ch:
                break
            if ch not in "+-":
                self.error(f"unexpected {ch!r}")
            sign = -1 if self.take() == "-" else 1
        deg = max(acc)
        return IntPoly([acc.get(i, 0) for i in range(deg + 1)])


def poly_parse(text: str) -> IntPoly:
    return _Parser(text).parse()


def _monomial(c: int, e: int) -> str:
    if e == 0:
        return str(c)
    var = "x" if e == 1 else f"x^{e}"
    return var if c == 1 else f"{c}*{var}"


def poly_format(f: IntPoly) -> str:
    if f.is_zero():
        return "0"
    parts: list[str] = []
    for e in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[e]
        if c == 0:
            continue
        mono = _monomial(abs(c), e)
        if not parts:
            parts.append(mono if c > 0 else "-" + mono)
        else:
            parts.append(("+ " if c > 0 else "- ") + mono)
    return " ".join(parts)
