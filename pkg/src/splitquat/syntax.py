"""Text formats for polynomials, Cl(1,1)-valued maps and constant elements.

Polynomial grammar (whitespace-insensitive)::

    poly    := ['+'|'-'] term (('+'|'-') term)*
    term    := factor ('*' factor)*
    factor  := NUMBER ['/' INT] | VAR ['^' INT]

``NUMBER`` is an integer or decimal literal, converted exactly. A map is four
polynomials separated by ``;`` in basis order (1, i, j, ij). Constant elements
are written ``a + b*i + c*j + d*k`` where ``k`` (or ``ij``) denotes ij.

The printers emit terms in graded-lex order, so ``parse(format(x)) == x``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Sequence

from .algebra import SplitQuaternion
from .polynomial import NULL_VARS, X_VARS, CliffordPolyMap, Poly4

__all__ = [
    "ParseError",
    "format_element",
    "format_map",
    "format_poly",
    "format_rational",
    "parse_element",
    "parse_function",
    "parse_poly",
]


class ParseError(ValueError):
    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}: {text!r}")


_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:\.\d+)?|\.\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^;]))"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
        start = m.start(m.lastgroup)
        tokens.append((m.lastgroup, m.group(m.lastgroup), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, variables: dict[str, object]):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        self.variables = variables

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, expected: str):
        kind, value, pos = self.peek()
        found = "end of input" if kind == "end" else repr(value)
        raise ParseError(f"expected {expected}, found {found}", self.text, pos)

    def expect_int(self) -> int:
        kind, value, _ = self.peek()
        if kind != "num" or "." in value:
            self.fail("integer")
        self.take()
        return int(value)

    def factor(self):
        kind, value, _ = self.peek()
        if kind == "num":
            self.take()
            num = Fraction(value)
            if self.peek()[:2] == ("op", "/"):
                self.take()
                den_pos = self.peek()[2]
                den = self.expect_int()
                if den == 0:
                    raise ParseError("division by zero", self.text, den_pos)
                num /= den
            return num
        if kind == "name":
            if value not in self.variables:
                self.fail("variable (" + ", ".join(self.variables) + ")")
            self.take()
            base = self.variables[value]
            if self.peek()[:2] == ("op", "^"):
                self.take()
                return base ** self.expect_int()
            return base
        self.fail("number or variable")

    def term(self):
        value = self.factor()
        while self.peek()[:2] == ("op", "*"):
            self.take()
            value = value * self.factor()
        return value

    def expression(self, zero):
        total = zero
        sign = 1
        if self.peek()[0] == "op" and self.peek()[1] in "+-":
            sign = -1 if self.take()[1] == "-" else 1
        total = total + sign * self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            sign = -1 if self.take()[1] == "-" else 1
            total = total + sign * self.term()
        return total

    def finish(self, stop: str = "end"):
        if self.peek()[0] != "end":
            self.fail("'+', '-' or end of input")


def _poly_variables(names: Sequence[str]) -> dict:
    return {name: Poly4.var(k) for k, name in enumerate(names)}


def parse_poly(text: str, names: Sequence[str] = X_VARS) -> Poly4:
    """Parse a polynomial in ``names`` (x0..x3 by default)."""
    parser = _Parser(text, _poly_variables(names))
    result = parser.expression(Poly4())
    parser.finish()
    return Poly4() + result


def parse_function(text: str, names: Sequence[str] = X_VARS) -> CliffordPolyMap:
    """Parse ``f0 ; f1 ; f2 ; f3`` into a map; positions refer to ``text``."""
    parts = []
    start = 0
    for idx, ch in enumerate(text + ";"):
        if ch == ";":
            parts.append((start, text[start:idx]))
            start = idx + 1
    if len(parts) != 4:
        pos = len(text) if len(parts) < 4 else sum(len(p) + 1 for _, p in parts[:4]) - 1
        raise ParseError(f"expected 4 components separated by ';', got {len(parts)}", text, pos)
    comps = []
    for offset, chunk in parts:
        try:
            comps.append(parse_poly(chunk, names))
        except ParseError as err:
            raise ParseError(str(err).split(" at position")[0], text, offset + err.position) from None
    return CliffordPolyMap.from_components(comps)


_UNITS = {
    "i": SplitQuaternion(0, 1, 0, 0),
    "j": SplitQuaternion(0, 0, 1, 0),
    "k": SplitQuaternion(0, 0, 0, 1),
    "ij": SplitQuaternion(0, 0, 0, 1),
}


def parse_element(text: str) -> SplitQuaternion:
    """Parse ``a + b*i + c*j + d*k`` (rational coefficients, any term order)."""
    parser = _Parser(text, _UNITS)
    result = parser.expression(SplitQuaternion())
    parser.finish()
    if not isinstance(result, SplitQuaternion):
        result = SplitQuaternion.scalar(result)
    return result


def format_rational(c) -> str:
    if isinstance(c, Fraction):
        return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
    if isinstance(c, int):
        return str(c)
    return repr(float(c))


def _join(chunks: list[tuple[bool, str]]) -> str:
    if not chunks:
        return "0"
    out = []
    for n, (negative, body) in enumerate(chunks):
        if n == 0:
            out.append(("-" if negative else "") + body)
        else:
            out.append((" - " if negative else " + ") + body)
    return "".join(out)


def format_poly(p: Poly4, names: Sequence[str] = X_VARS) -> str:
    chunks = []
    for exp, coef in p.items():
        factors = []
        for k, e in enumerate(exp):
            if e == 1:
                factors.append(names[k])
            elif e > 1:
                factors.append(f"{names[k]}^{e}")
        mag = abs(coef)
        if not factors:
            body = format_rational(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([format_rational(mag)] + factors)
        chunks.append((coef < 0, body))
    return _join(chunks)


def format_map(F: CliffordPolyMap, names: Sequence[str] = X_VARS) -> str:
    return " ; ".join(format_poly(p, names) for p in F)


def format_element(z: SplitQuaternion) -> str:
    chunks = []
    for c, unit in zip(z.coords, ("", "i", "j", "k")):
        if c == 0:
            continue
        mag = abs(c)
        if not unit:
            body = format_rational(mag)
        elif mag == 1:
            body = unit
        else:
            body = f"{format_rational(mag)}*{unit}"
        chunks.append((c < 0, body))
    return _join(chunks)


def format_null(p: Poly4) -> str:
    return format_poly(p, NULL_VARS)
