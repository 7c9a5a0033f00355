"""Text notation for hereditary representations.

Grammar (ASCII, whitespace-insensitive):

    rep    := "0" | term (" + " term)*
    term   := coeff "*" base "^(" rep ")"
    coeff  := decimal >= 1
    base   := decimal >= 2

The base is written redundantly in every term and must be identical across
terms; exponent representations use the same base. 19 in base 2 reads
"1*2^(1*2^(1*2^(0))) + 1*2^(1*2^(0)) + 1*2^(0)".
"""

from __future__ import annotations

import re

from .budget import DEFAULT_BUDGET, Budget
from .errors import NonCanonicalError, ParseError
from .hereditary import HereditaryRep, decompose, evaluate, rank, validate_canonical

__all__ = ["format_rep", "parse_rep"]

_TOKEN = re.compile(r"\s*(\d+|[*^()+])")


def format_rep(rep: HereditaryRep, padded: bool = False) -> str:
    """Render a representation in the grammar above.

    Only nonzero terms are stored, so only nonzero terms are printed unless
    padded is requested, in which case zero-coefficient terms are displayed
    for every exponent from the rank down to 0 (display only: padded output
    is not valid grammar input). Padding materializes the rank, so it is
    budget-gated and only sensible for small ranks.
    """
    if not rep.terms:
        return "0"
    if not padded:
        return " + ".join(
            f"{coeff}*{rep.base}^({format_rep(exponent)})" for coeff, exponent in rep.terms
        )
    top = evaluate(rank(rep))
    by_value = {evaluate(exponent): coeff for coeff, exponent in rep.terms}
    pieces = []
    for exp_value in range(top, -1, -1):
        coeff = by_value.get(exp_value, 0)
        pieces.append(f"{coeff}*{rep.base}^({format_rep(decompose(exp_value, rep.base))})")
    return " + ".join(pieces)


class _Lexer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def peek(self) -> str | None:
        match = _TOKEN.match(self.text, self.pos)
        return match.group(1) if match else None

    def take(self, expected: str | None = None) -> str:
        match = _TOKEN.match(self.text, self.pos)
        if not match:
            tail = self.text[self.pos :].strip()
            if tail:
                raise ParseError(f"unexpected character {tail[0]!r}", self.pos, expected or "token")
            raise ParseError("unexpected end of input", self.pos, expected or "token")
        token = match.group(1)
        if expected is not None and token != expected:
            raise ParseError(f"unexpected token {token!r}", match.start(1), expected)
        self.pos = match.end()
        return token

    def take_number(self, what: str = "number") -> int:
        match = _TOKEN.match(self.text, self.pos)
        if not match or not match.group(1).isdigit():
            where = match.start(1) if match else self.pos
            found = match.group(1) if match else "end of input"
            raise ParseError(f"unexpected {found!r}", where, what)
        self.pos = match.end()
        return int(match.group(1))

    def at_end(self) -> bool:
        return self.peek() is None and not self.text[self.pos :].strip()


def parse_rep(text: str, budget: Budget = DEFAULT_BUDGET) -> HereditaryRep:
    """Parse grammar text into a canonical representation.

    Raises ParseError for grammar violations (with position and the
    expected token) and NonCanonicalError for well-formed text that is not
    canonical: coefficient >= base, non-decreasing exponents, or a base
    mismatch between terms or inside exponents.
    """
    lexer = _Lexer(text)
    rep = _parse_rep(lexer, enclosing_base=None)
    if not lexer.at_end():
        raise ParseError(f"trailing input {lexer.peek()!r}", lexer.pos, "end of input")
    return validate_canonical(rep)


def _parse_rep(lexer: _Lexer, enclosing_base: int | None) -> HereditaryRep:
    first = lexer.peek()
    if first == "0":
        lexer.take()
        return HereditaryRep(enclosing_base or 2, ())
    terms = []
    base = None
    while True:
        coeff, term_base, exponent = _parse_term(lexer)
        if base is None:
            base = term_base
        elif term_base != base:
            raise NonCanonicalError(f"term base {term_base} differs from {base}")
        terms.append((coeff, exponent))
        if lexer.peek() != "+":
            break
        lexer.take("+")
    if enclosing_base is not None and base != enclosing_base:
        raise NonCanonicalError(f"exponent base {base} differs from term base {enclosing_base}")
    return HereditaryRep(base, tuple(terms))


def _parse_term(lexer: _Lexer) -> tuple[int, int, HereditaryRep]:
    coeff = lexer.take_number("coefficient")
    if coeff < 1:
        raise ParseError("coefficient must be at least 1", lexer.pos, "coefficient >= 1")
    lexer.take("*")
    base_pos = lexer.pos
    base = lexer.take_number("base")
    if base < 2:
        raise ParseError("base must be at least 2", base_pos, "base >= 2")
    lexer.take("^")
    lexer.take("(")
    exponent = _parse_rep(lexer, enclosing_base=base)
    lexer.take(")")
    return coeff, base, exponent
