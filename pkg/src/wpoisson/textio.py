"""Parsing and canonical printing of polynomials and generator maps.

Grammar (ASCII, whitespace insignificant, explicit '*' required):

    expr     := term (("+"|"-") term)*
    term     := signed factor ("*" factor)*
    factor   := base ("^" uint)?
    base     := rational | "x" | "y" | "z" | "s" | "(" expr ")"
    rational := uint ("/" uint)?

"s" is accepted only when parsing over an extension field.  "xy" is a syntax
error; write "x*y".
"""

from __future__ import annotations

from fractions import Fraction

from .ring import (
    ExtElem,
    ExtensionField,
    Polynomial,
    QQ,
    VAR_NAMES,
    Weights,
    format_rational,
)

MAX_EXPONENT = 10**6


class ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__("%s (at byte %d)" % (message, offset))
        self.offset = offset


class _Parser:
    def __init__(self, text: str, weights: Weights, field):
        self.text = text
        self.pos = 0
        self.weights = weights
        self.field = field

    # -- token helpers -------------------------------------------------------

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos] in " \t\r\n":
            self.pos += 1

    def peek(self):
        self._skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str):
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def expect(self, ch: str):
        if not self.take(ch):
            raise ParseError("expected %r" % ch, self.pos)

    def uint(self) -> int:
        self._skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError("expected an integer", start)
        value = int(self.text[start : self.pos])
        if value > MAX_EXPONENT:
            raise ParseError("integer exceeds the 10^6 guard", start)
        return value

    # -- grammar -------------------------------------------------------------

    def expr(self) -> Polynomial:
        acc = self.term()
        while True:
            if self.take("+"):
                acc = acc + self.term()
            elif self.take("-"):
                acc = acc - self.term()
            else:
                return acc

    def term(self) -> Polynomial:
        sign = 1
        while True:
            if self.take("-"):
                sign = -sign
            elif self.take("+"):
                pass
            else:
                break
        acc = self.factor()
        while self.take("*"):
            acc = acc * self.factor()
        return acc if sign == 1 else -acc

    def factor(self) -> Polynomial:
        base = self.base()
        if self.take("^"):
            e = self.uint()
            return base ** e
        return base

    def base(self) -> Polynomial:
        ch = self.peek()
        if ch == "(":
            self.expect("(")
            inner = self.expr()
            self.expect(")")
            return inner
        if ch in VAR_NAMES:
            self.pos += 1
            self._reject_adjacent_name()
            return Polynomial.variable(self.weights, ch, self.field)
        if ch == "s":
            if not isinstance(self.field, ExtensionField):
                raise ParseError("'s' requires an extension coefficient field", self.pos)
            self.pos += 1
            self._reject_adjacent_name()
            return Polynomial.constant(self.weights, self.field.generator, self.field)
        if ch.isdigit():
            num = self.uint()
            if self.take("/"):
                den = self.uint()
                if den == 0:
                    raise ParseError("zero denominator", self.pos)
                return Polynomial.constant(self.weights, Fraction(num, den), self.field)
            return Polynomial.constant(self.weights, num, self.field)
        raise ParseError("unexpected character %r" % (ch or "end of input"), self.pos)

    def _reject_adjacent_name(self):
        # implicit multiplication like "xy" or "2x" after a name is an error
        if self.pos < len(self.text) and (
            self.text[self.pos].isalnum() or self.text[self.pos] == "_"
        ):
            raise ParseError(
                "implicit multiplication is not accepted; write '*'", self.pos
            )


def parse_poly(text: str, weights: Weights, field=QQ) -> Polynomial:
    p = _Parser(text, weights, field)
    result = p.expr()
    p._skip_ws()
    if p.pos != len(text):
        raise ParseError("trailing input", p.pos)
    return result


def _format_coeff(field, coef) -> str:
    if isinstance(coef, ExtElem):
        return "(" + field.format(coef) + ")"
    return format_rational(coef)


def format_poly(f: Polynomial) -> str:
    """Canonical form: terms in descending monomial order, reduced fractions.
    parse_poly(format_poly(f)) == f."""
    if f.is_zero():
        return "0"
    parts = []
    for m, coef in f.sorted_terms(descending=True):
        factors = []
        for idx, e in enumerate(m):
            if e == 1:
                factors.append(VAR_NAMES[idx])
            elif e > 1:
                factors.append("%s^%d" % (VAR_NAMES[idx], e))
        body = "*".join(factors)
        if isinstance(coef, ExtElem):
            cs = _format_coeff(f.field, coef)
            text = cs + "*" + body if body else cs
            parts.append(("+", text))
            continue
        neg = coef < 0
        mag = -coef if neg else coef
        if body and mag == 1:
            text = body
        elif body:
            text = format_rational(mag) + "*" + body
        else:
            text = format_rational(mag)
        parts.append(("-" if neg else "+", text))
    sign, first = parts[0]
    out = ("-" if sign == "-" else "") + first
    for sign, text in parts[1:]:
        out += sign + text
    return out


def parse_map(text: str, weights: Weights, field=QQ):
    """Parse "x->expr; y->expr; z->expr" into a triple of polynomials,
    ordered (image of x, image of y, image of z)."""
    images = {}
    chunks = [c for c in text.split(";") if c.strip()]
    for chunk in chunks:
        if "->" not in chunk:
            raise ParseError("map entries must look like 'x->expr'", 0)
        name, expr = chunk.split("->", 1)
        name = name.strip()
        if name not in VAR_NAMES:
            raise ParseError("unknown generator %r" % name, 0)
        if name in images:
            raise ParseError("duplicate generator %r" % name, 0)
        images[name] = parse_poly(expr, weights, field)
    missing = [v for v in VAR_NAMES if v not in images]
    if missing:
        raise ParseError("missing generator %r" % missing[0], 0)
    return (images["x"], images["y"], images["z"])
