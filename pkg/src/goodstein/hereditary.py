"""Canonical hereditary base-b representation of natural numbers.

A natural number is stored as a sum of coefficient * base^exponent terms
ordered by strictly decreasing exponent, and every exponent is itself a
hereditary representation in the same base, down to exponent 0. The tree is
the canonical value carrier: exponent towers overflow any integer long
before step budgets do, so integers are materialized only on request and
under a digit budget.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .budget import DEFAULT_BUDGET, Budget
from .errors import BudgetExceededError, InvalidBaseError, NonCanonicalError, UnderflowError

__all__ = [
    "HereditaryRep",
    "zero",
    "decompose",
    "evaluate",
    "rank",
    "rank_value",
    "bump",
    "decrement",
    "rebase",
    "compare_values",
    "validate_canonical",
    "max_coefficient",
]


@dataclass(frozen=True, eq=False)
class HereditaryRep:
    """Immutable tree form of a natural number in a fixed base.

    terms is a tuple of (coefficient, exponent) pairs with 1 <= coefficient
    <= base - 1 and exponents strictly decreasing. An empty tuple is the
    number 0; zero representations compare equal regardless of base, since
    the notation "0" carries no base.
    """

    base: int
    terms: tuple[tuple[int, "HereditaryRep"], ...]

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, HereditaryRep):
            return NotImplemented
        if not self.terms and not other.terms:
            return True
        return self.base == other.base and self.terms == other.terms

    def __hash__(self) -> int:
        if not self.terms:
            return hash(("HereditaryRep", 0))
        return hash(("HereditaryRep", self.base, self.terms))

    def __repr__(self) -> str:
        from .notation import format_rep

        return f"HereditaryRep({self.base}, {format_rep(self)!r})"


def zero(base: int = 2) -> HereditaryRep:
    """The zero representation (empty sum) tagged with the given base."""
    _require_base(base)
    return HereditaryRep(base, ())


def _require_base(base: int) -> None:
    if base < 2:
        raise InvalidBaseError(f"base must be at least 2, got {base}")


def _is_one(rep: HereditaryRep) -> bool:
    return len(rep.terms) == 1 and rep.terms[0][0] == 1 and rep.terms[0][1].is_zero()


def decompose(m: int, base: int) -> HereditaryRep:
    """Canonical hereditary representation of m in the given base."""
    _require_base(base)
    if m < 0:
        raise ValueError(f"cannot represent negative number {m}")
    terms = []
    exponent = 0
    while m:
        m, digit = divmod(m, base)
        if digit:
            terms.append((digit, decompose(exponent, base)))
        exponent += 1
    return HereditaryRep(base, tuple(reversed(terms)))


def _guard_power(base: int, exp_value: int, budget: Budget) -> None:
    """Refuse to compute base**exp_value if the result exceeds the digit budget."""
    if exp_value == 0:
        return
    # Even base 2 yields > 0.3 digits per exponent unit, so a huge exponent
    # is an immediate refusal without touching floats.
    if exp_value.bit_length() > 64 or exp_value * math.log10(base) > budget.max_digits:
        raise BudgetExceededError(
            f"{base}^{exp_value} exceeds the {budget.max_digits}-digit budget"
        )


def evaluate(rep: HereditaryRep, budget: Budget = DEFAULT_BUDGET) -> int:
    """Exact integer value of the tree, within the digit budget."""
    total = 0
    for coeff, exponent in rep.terms:
        exp_value = evaluate(exponent, budget)
        _guard_power(rep.base, exp_value, budget)
        total += coeff * rep.base**exp_value
    return total


def rank(rep: HereditaryRep) -> HereditaryRep:
    """Exponent of the leading term, as a tree; the zero rep for 0.

    Returned as a representation rather than a number because the leading
    exponent may be far too large to materialize.
    """
    if not rep.terms:
        return zero(rep.base)
    return rep.terms[0][1]


def rank_value(rep: HereditaryRep, budget: Budget = DEFAULT_BUDGET) -> int:
    """Integer value of the rank, when it fits the digit budget."""
    return evaluate(rank(rep), budget)


def bump(rep: HereditaryRep) -> HereditaryRep:
    """Replace the base by base + 1 throughout the tree.

    Shape and coefficients are untouched; the result is automatically
    canonical because every coefficient is already below the old base.
    """
    return HereditaryRep(
        rep.base + 1, tuple((coeff, bump(exponent)) for coeff, exponent in rep.terms)
    )


def decrement(rep: HereditaryRep, budget: Budget = DEFAULT_BUDGET) -> HereditaryRep:
    """Canonical representation of value - 1, computed on the tree.

    A constant term is decreased (and dropped at zero). Otherwise the lowest
    term c*b^e borrows: it becomes (c-1)*b^e followed by the expansion of
    b^e - 1, which is (b-1)*b^j for j = e-1 down to 0 with the exponent
    chain produced by recursive decrement. The expansion has e terms, so it
    is gated by budget.max_borrow_terms.
    """
    if not rep.terms:
        raise UnderflowError("cannot decrement zero")
    head = list(rep.terms[:-1])
    coeff, exponent = rep.terms[-1]
    if exponent.is_zero():
        if coeff > 1:
            head.append((coeff - 1, exponent))
        return HereditaryRep(rep.base, tuple(head))
    if coeff > 1:
        head.append((coeff - 1, exponent))
    digit = rep.base - 1
    chain = decrement(exponent, budget)
    produced = 0
    while True:
        produced += 1
        if produced > budget.max_borrow_terms:
            raise BudgetExceededError(
                f"borrow expansion needs more than {budget.max_borrow_terms} terms"
            )
        head.append((digit, chain))
        if chain.is_zero():
            return HereditaryRep(rep.base, tuple(head))
        chain = decrement(chain, budget)


def rebase(rep: HereditaryRep, new_base: int, budget: Budget = DEFAULT_BUDGET) -> int:
    """Value after syntactically substituting new_base for the base everywhere.

    No renormalization happens: coefficients may equal or exceed new_base,
    which is why the result is a number rather than a representation.
    """
    _require_base(new_base)
    total = 0
    for coeff, exponent in rep.terms:
        exp_value = rebase(exponent, new_base, budget)
        _guard_power(new_base, exp_value, budget)
        total += coeff * new_base**exp_value
    return total


def compare_values(a: HereditaryRep, b: HereditaryRep) -> int:
    """Order two canonical same-base representations by numeric value.

    Purely structural (-1, 0, 1), so it works where values cannot be
    materialized: with digits below the base and strictly decreasing
    exponents, the first differing (exponent, coefficient) pair decides.
    """
    if a.base != b.base and a.terms and b.terms:
        raise ValueError("structural comparison requires a common base")
    for (coeff_a, exp_a), (coeff_b, exp_b) in zip(a.terms, b.terms):
        by_exp = compare_values(exp_a, exp_b)
        if by_exp:
            return by_exp
        if coeff_a != coeff_b:
            return -1 if coeff_a < coeff_b else 1
    if len(a.terms) != len(b.terms):
        return -1 if len(a.terms) < len(b.terms) else 1
    return 0


def validate_canonical(rep: HereditaryRep) -> HereditaryRep:
    """Raise NonCanonicalError unless every invariant holds; returns rep."""
    _require_base(rep.base)
    previous = None
    for coeff, exponent in rep.terms:
        if not 1 <= coeff <= rep.base - 1:
            raise NonCanonicalError(
                f"coefficient {coeff} outside 1..{rep.base - 1} for base {rep.base}"
            )
        if exponent.terms and exponent.base != rep.base:
            raise NonCanonicalError(
                f"exponent base {exponent.base} differs from term base {rep.base}"
            )
        validate_canonical(exponent)
        if previous is not None and compare_values(previous, exponent) <= 0:
            raise NonCanonicalError("exponents not strictly decreasing")
        previous = exponent
    return rep


def max_coefficient(rep: HereditaryRep) -> int:
    """Largest coefficient anywhere in the tree, including inside exponents."""
    best = 0
    for coeff, exponent in rep.terms:
        best = max(best, coeff, max_coefficient(exponent))
    return best
