"""Text grammar for carrier sequences, and the canonical formatter.

    expr    := term (('+' | '-') term)*
    term    := factor ('*' factor | '/' divisor)*
    factor  := INT | 'n' | 'n^' exponent | '(-1)^n' | 'per(' signed (',' signed)* ')'
             | '(' expr ')' | '-' factor
    divisor := INT | 'n' | 'n^' exponent
    exponent := INT | '-' INT | '(' signed ')'
    signed  := ['+' | '-'] INT ['/' INT]

Division is rewritten: by a nonzero rational into a scalar multiple, by a
monomial n^a into multiplication by n^-a; anything else is rejected with
DivisionNotSupported.  ``per(v1,...,vP)`` takes value v1 at n = 1, and
``(-1)^n`` is sugar for per(-1,1).  ``format_seq`` renders the canonical
form back to this grammar, so parse(format_seq(x)) reproduces x exactly.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Optional

from .errors import DivisionNotSupported, ParseError, ZeroDivisor
from .seqrep import SeqRep, Term, alternating, constant, nth_power, periodic_seq

__all__ = ["parse", "format_seq"]

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*/^(),]))")


class _Lexer:
    def __init__(self, text: str):
        self.text = text
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None:
                stripped = text[pos:].lstrip()
                if not stripped:
                    break
                at = len(text) - len(stripped)
                raise ParseError(at, "a number, 'n', 'per' or an operator", stripped[0])
            kind = m.lastgroup
            self.tokens.append((kind, m.group(kind), m.start(kind)))
            pos = m.end()
        self.tokens.append(("eof", "", len(text)))
        self.index = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.index]

    def next(self) -> tuple[str, str, int]:
        tok = self.tokens[self.index]
        self.index += 1
        return tok

    def expect(self, kind: str, text: Optional[str] = None, what: str = "") -> tuple[str, str, int]:
        tok = self.peek()
        if tok[0] != kind or (text is not None and tok[1] != text):
            raise ParseError(tok[2], what or (text or kind), tok[1] or "end of input")
        return self.next()

    def accept(self, kind: str, text: Optional[str] = None) -> Optional[tuple[str, str, int]]:
        tok = self.peek()
        if tok[0] == kind and (text is None or tok[1] == text):
            return self.next()
        return None


def parse(text: str) -> SeqRep:
    """Parse an expression into its canonical representation."""
    lx = _Lexer(text)
    value = _expr(lx)
    tok = lx.peek()
    if tok[0] != "eof":
        raise ParseError(tok[2], "end of input or an operator", tok[1])
    return value


def _expr(lx: _Lexer) -> SeqRep:
    value = _term(lx)
    while True:
        if lx.accept("op", "+"):
            value = value + _term(lx)
        elif lx.accept("op", "-"):
            value = value - _term(lx)
        else:
            return value


def _term(lx: _Lexer) -> SeqRep:
    value = _factor(lx)
    while True:
        if lx.accept("op", "*"):
            value = value * _factor(lx)
        elif lx.accept("op", "/"):
            value = _divide(lx, value)
        else:
            return value


def _divide(lx: _Lexer, value: SeqRep) -> SeqRep:
    tok = lx.peek()
    if tok[0] == "int":
        q = Fraction(int(lx.next()[1]))
        if q == 0:
            raise ZeroDivisor(tok[2])
        return value.scale(1 / q)
    if tok[0] == "name" and tok[1] == "n":
        lx.next()
        s = _exponent(lx) if lx.accept("op", "^") else Fraction(1)
        return value * nth_power(-s)
    if tok[0] == "eof":
        raise ParseError(tok[2], "a rational or monomial divisor", "end of input")
    raise DivisionNotSupported(tok[2], tok[1])


def _factor(lx: _Lexer) -> SeqRep:
    tok = lx.peek()
    if tok[0] == "int":
        lx.next()
        return constant(Fraction(int(tok[1])))
    if tok[0] == "name" and tok[1] == "n":
        lx.next()
        if lx.accept("op", "^"):
            return nth_power(_exponent(lx))
        return nth_power(1)
    if tok[0] == "name" and tok[1] == "per":
        lx.next()
        return _per(lx)
    if tok[0] == "op" and tok[1] == "(":
        lx.next()
        inner = _expr(lx)
        lx.expect("op", ")")
        if lx.accept("op", "^"):
            ntok = lx.peek()
            if inner != constant(-1):
                raise ParseError(ntok[2], "'^' only after (-1) or n", ntok[1] or "end of input")
            lx.expect("name", "n", "'n' (powers are only available as (-1)^n and n^a)")
            return alternating()
        return inner
    if tok[0] == "op" and tok[1] == "-":
        lx.next()
        return -_factor(lx)
    raise ParseError(tok[2], "a rational, 'n', '(-1)^n', 'per(...)' or '('", tok[1] or "end of input")


def _exponent(lx: _Lexer) -> Fraction:
    """Surface exponent after 'n^': a bare (possibly negated) integer, or a
    parenthesized signed rational."""
    tok = lx.peek()
    if tok[0] == "int":
        return Fraction(int(lx.next()[1]))
    if tok[0] == "op" and tok[1] == "-":
        lx.next()
        return -Fraction(int(lx.expect("int", what="an integer exponent")[1]))
    if tok[0] == "op" and tok[1] == "(":
        lx.next()
        s = _signed_rational(lx)
        lx.expect("op", ")")
        return s
    raise ParseError(tok[2], "an integer or parenthesized rational exponent", tok[1] or "end of input")


def _signed_rational(lx: _Lexer) -> Fraction:
    sign = 1
    if lx.accept("op", "-"):
        sign = -1
    elif lx.accept("op", "+"):
        pass
    numer = int(lx.expect("int", what="an integer")[1])
    if lx.accept("op", "/"):
        denom_tok = lx.expect("int", what="a denominator")
        denom = int(denom_tok[1])
        if denom == 0:
            raise ZeroDivisor(denom_tok[2])
        return Fraction(sign * numer, denom)
    return Fraction(sign * numer)


def _per(lx: _Lexer) -> SeqRep:
    lx.expect("op", "(")
    values = [_signed_rational(lx)]
    while lx.accept("op", ","):
        values.append(_signed_rational(lx))
    lx.expect("op", ")")
    return periodic_seq(*values)


# ---------------------------------------------------------------------------
# Formatting

def _monomial(surface: Fraction) -> str:
    if surface == 1:
        return "n"
    if surface.denominator == 1 and surface > 0:
        return f"n^{surface}"
    return f"n^({surface})"


def _term_str(t: Term) -> tuple[bool, str]:
    """Render one term as (is_negative, body without sign)."""
    surface = -t.exponent
    if t.coeff.period == 1:
        c = t.coeff.values[0]
        mag = abs(c)
        if t.exponent == 0:
            return c < 0, str(mag)
        if mag == 1:
            return c < 0, _monomial(surface)
        return c < 0, f"{mag}*{_monomial(surface)}"
    body = "per(" + ",".join(str(v) for v in t.coeff.values) + ")"
    if t.exponent != 0:
        body += f"*{_monomial(surface)}"
    return False, body


def format_seq(x: SeqRep) -> str:
    """Canonical rendering; parse(format_seq(x)) equals x structurally."""
    if x.is_zero():
        return "0"
    parts = []
    for i, t in enumerate(x.terms):
        neg, body = _term_str(t)
        if i == 0:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f" - {body}" if neg else f" + {body}")
    return "".join(parts)
