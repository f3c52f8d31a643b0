"""Parsing and printing of binary forms written as polynomials in x and y.

Grammar (whitespace is ignored)::

    form   := [sign] term (sign term)*
    term   := coeff ['*'] [power (['*'] power)*] | power (['*'] power)*
    power  := var [('^' | '**') integer]
    coeff  := integer | integer '/' integer | decimal

Dual forms use the variables X and Y instead.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import DomainError, ParseError
from .forms import BinaryForm, Role

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:\.\d*)?(?:/\d+)?|\.\d+)"
    r"|(?P<pow>\*\*|\^)|(?P<op>[-+*])|(?P<var>[A-Za-z_]\w*)|(?P<bad>\S))"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        kind = m.lastgroup
        if kind is None:
            break
        if kind == "bad":
            raise ParseError(f"unexpected character {m.group(kind)!r}", m.start(kind))
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str, role: Role):
        self.text = text
        self.variables = role.variables
        self.tokens = []
        for kind, val, pos in _tokenize(text):
            # "xy" or "xxy" reads as a product of single-letter variables
            if kind == "var" and len(val) > 1 and set(val) <= set(self.variables):
                self.tokens.extend(("var", ch, pos + k) for k, ch in enumerate(val))
            else:
                self.tokens.append((kind, val, pos))
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, len(self.text))

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def parse(self) -> dict[tuple[int, int], Fraction]:
        terms: dict[tuple[int, int], Fraction] = {}
        sign = 1
        kind, val, pos = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        while True:
            coeff, mono = self.term()
            terms[mono] = terms.get(mono, Fraction(0)) + sign * coeff
            kind, val, pos = self.peek()
            if kind is None:
                return terms
            if kind == "op" and val in "+-":
                self.take()
                sign = -1 if val == "-" else 1
                continue
            raise ParseError(f"expected '+' or '-', found {val!r}", pos)

    def term(self) -> tuple[Fraction, tuple[int, int]]:
        kind, val, pos = self.peek()
        coeff = Fraction(1)
        exps = [0, 0]
        seen = False
        if kind == "num":
            self.take()
            coeff = self.number(val, pos)
            seen = True
            kind, val, pos = self.peek()
            if kind == "op" and val == "*":
                self.take()
                kind, val, pos = self.peek()
                if kind != "var":
                    raise ParseError("expected a variable after '*'", pos)
        while kind == "var":
            self.take()
            if val not in self.variables:
                allowed = " and ".join(self.variables)
                raise ParseError(f"unknown variable {val!r}; only {allowed} are allowed", pos)
            exp = 1
            k2, v2, p2 = self.peek()
            if k2 == "pow":
                self.take()
                k3, v3, p3 = self.take()
                if k3 != "num" or not v3.isdigit():
                    raise ParseError("exponent must be a nonnegative integer", p3)
                exp = int(v3)
            exps[self.variables.index(val)] += exp
            seen = True
            kind, val, pos = self.peek()
            if kind == "op" and val == "*":
                nxt = self.tokens[self.i + 1] if self.i + 1 < len(self.tokens) else None
                if nxt is None or nxt[0] != "var":
                    raise ParseError("expected a variable after '*'", nxt[2] if nxt else len(self.text))
                self.take()
                kind, val, pos = self.peek()
        if not seen:
            found = "end of input" if kind is None else repr(val)
            raise ParseError(f"expected a term, found {found}", pos)
        return coeff, (exps[0], exps[1])

    @staticmethod
    def number(text: str, pos: int) -> Fraction:
        try:
            value = Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad number {text!r}", pos) from exc
        return value


def parse_form(text: str, role: Role = Role.PRIMAL) -> BinaryForm:
    """Parse a nonzero homogeneous polynomial in x, y (or X, Y for ``Role.DUAL``)."""
    if not text or not text.strip():
        raise ParseError("empty expression", 0)
    terms = {m: c for m, c in _Parser(text, role).parse().items() if c}
    if not terms:
        raise DomainError("expression is the zero form")
    degrees = {i + j for i, j in terms}
    if len(degrees) > 1:
        raise ParseError(f"expression is not homogeneous (degrees {sorted(degrees)})")
    return BinaryForm.from_terms(terms, role)


def format_rational(c: Fraction) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _monomial(i: int, j: int, names: tuple[str, str]) -> str:
    parts = []
    for name, e in zip(names, (i, j)):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def render(F: BinaryForm) -> str:
    """Text that :func:`parse_form` reads back to ``F`` (highest x-power first)."""
    names = F.role.variables
    d = F.degree
    pieces = []
    for i in range(d, -1, -1):
        c = F.coeffs[i]
        if not c:
            continue
        mono = _monomial(i, d - i, names)
        mag = abs(c)
        if not mono:
            body = format_rational(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{format_rational(mag)}*{mono}"
        if not pieces:
            pieces.append(f"-{body}" if c < 0 else body)
        else:
            pieces.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(pieces) if pieces else "0"
