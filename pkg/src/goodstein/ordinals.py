"""Cantor normal form ordinals below epsilon-zero and the base-to-omega mirror.

Only what the decreasing-mirror argument needs is implemented: construction
from hereditary representations, strict total-order comparison, embedding of
the naturals, and decrease checking over finite sequence prefixes. There is
no general ordinal arithmetic.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

from .errors import ParseError
from .hereditary import HereditaryRep

__all__ = [
    "Ordinal",
    "ZERO",
    "mirror",
    "compare",
    "from_natural",
    "Domination",
    "dominates_natural",
    "MirrorAudit",
    "verify_decreasing",
    "format_ordinal",
    "parse_ordinal",
]


@dataclass(frozen=True)
class Ordinal:
    """Ordinal below epsilon-zero as a sum of w^exponent * coefficient terms.

    Exponents are themselves Ordinals and strictly decrease; coefficients
    are naturals >= 1. The empty sum is 0; a single exponent-0 term is a
    finite ordinal. Finite trees keep everything below epsilon-zero.
    """

    terms: tuple[tuple["Ordinal", int], ...]

    def is_zero(self) -> bool:
        return not self.terms


ZERO = Ordinal(())
_FINITE_ONE = Ordinal(((ZERO, 1),))


def from_natural(n: int) -> Ordinal:
    """The finite ordinal corresponding to the natural n."""
    if n < 0:
        raise ValueError("no ordinal for a negative number")
    if n == 0:
        return ZERO
    return Ordinal(((ZERO, n),))


def mirror(rep: HereditaryRep) -> Ordinal:
    """Substitute omega for the base: c * b^e becomes w^mirror(e) * c.

    The strict exponent decrease of the canonical representation carries
    over directly, so the image is valid Cantor normal form. The base is
    erased entirely, which is why a bump is invisible to the mirror.
    """
    return Ordinal(tuple((mirror(exponent), coeff) for coeff, exponent in rep.terms))


def compare(a: Ordinal, b: Ordinal) -> int:
    """Strict total order on normal forms: -1, 0, or 1."""
    for (exp_a, coeff_a), (exp_b, coeff_b) in zip(a.terms, b.terms):
        by_exp = compare(exp_a, exp_b)
        if by_exp:
            return by_exp
        if coeff_a != coeff_b:
            return -1 if coeff_a < coeff_b else 1
    if len(a.terms) != len(b.terms):
        return -1 if len(a.terms) < len(b.terms) else 1
    return 0


class Domination(Enum):
    """How the mirror of a representation relates to its own value."""

    STRICT = "Strict"
    EQUAL = "Equal"


def dominates_natural(rep: HereditaryRep) -> Domination:
    """Whether mirror(rep) strictly exceeds the natural rep denotes.

    Structural, so it needs no value materialization: any term with a
    nonzero exponent mirrors to an omega power, which exceeds every
    natural; a rank-0 representation mirrors to exactly its value.
    """
    if rep.terms and not rep.terms[0][1].is_zero():
        return Domination.STRICT
    return Domination.EQUAL


@dataclass(frozen=True)
class MirrorAudit:
    """Outcome of checking a mirrored prefix for strict ordinal decrease."""

    decreasing: bool
    violation_index: Optional[int] = None
    detail: Optional[str] = None


def verify_decreasing(terms: Sequence) -> MirrorAudit:
    """Check a generated prefix: mirrors strictly decrease, and each mirror
    is not smaller than the ordinal of the term's own value.

    Accepts a sequence of SeqTerm-like objects (attributes rep and value).
    A violation is returned as a result rather than raised: it would
    falsify the mirror argument and callers surface it loudly.
    """
    mirrors = [mirror(t.rep) for t in terms]
    for k in range(len(mirrors) - 1):
        if compare(mirrors[k + 1], mirrors[k]) >= 0:
            return MirrorAudit(False, k + 1, "mirror did not strictly decrease")
    for k, t in enumerate(terms):
        if t.value is None:
            continue
        if compare(mirrors[k], from_natural(t.value)) < 0:
            return MirrorAudit(False, k + 1, "mirror smaller than term value")
    return MirrorAudit(True)


def format_ordinal(o: Ordinal) -> str:
    """Display notation: "w^(E)*c" terms joined by " + ", finite parts as
    plain decimals, zero as "0"."""
    if not o.terms:
        return "0"
    pieces = []
    for exponent, coeff in o.terms:
        if exponent.is_zero():
            pieces.append(str(coeff))
        else:
            pieces.append(f"w^({format_ordinal(exponent)})*{coeff}")
    return " + ".join(pieces)


_ORDINAL_TOKEN = re.compile(r"\s*(\d+|w|\^|\(|\)|\*|\+)")


def parse_ordinal(text: str) -> Ordinal:
    """Parse the display notation back into an Ordinal (test fixtures)."""
    pos = 0

    def take(expected: str | None = None) -> str:
        nonlocal pos
        match = _ORDINAL_TOKEN.match(text, pos)
        if not match:
            raise ParseError("unexpected end of input", pos, expected or "token")
        token = match.group(1)
        if expected is not None and token != expected:
            raise ParseError(f"unexpected token {token!r}", match.start(1), expected)
        pos = match.end()
        return token

    def peek() -> str | None:
        match = _ORDINAL_TOKEN.match(text, pos)
        return match.group(1) if match else None

    def parse_sum() -> Ordinal:
        first = peek()
        if first == "0":
            take()
            return ZERO
        terms = []
        while True:
            terms.append(parse_term())
            if peek() != "+":
                break
            take("+")
        return Ordinal(tuple(terms))

    def parse_term() -> tuple[Ordinal, int]:
        token = peek()
        if token == "w":
            take("w")
            take("^")
            take("(")
            exponent = parse_sum()
            take(")")
            take("*")
            coeff = int(take())
            return exponent, coeff
        if token is None or not token.isdigit():
            raise ParseError(f"unexpected token {token!r}", pos, "term")
        take()
        return ZERO, int(token)

    result = parse_sum()
    if _ORDINAL_TOKEN.match(text, pos):
        raise ParseError(f"trailing input {peek()!r}", pos, "end of input")
    return result
