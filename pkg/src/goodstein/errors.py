"""Exception types shared across the package."""


class GoodsteinError(Exception):
    """Base class for all package errors."""


class InvalidBaseError(GoodsteinError, ValueError):
    """A base smaller than 2 was supplied."""


class UnderflowError(GoodsteinError, ArithmeticError):
    """Decrement was applied to the zero representation."""


class BudgetExceededError(GoodsteinError, RuntimeError):
    """A resource budget (digits, borrow terms, steps) would be exceeded.

    This is a clean refusal to materialize something astronomically large,
    never a wrong answer.
    """


class NonCanonicalError(GoodsteinError, ValueError):
    """Parsed or constructed representation violates canonical form."""


class ParseError(GoodsteinError, ValueError):
    """Notation text does not match the grammar."""

    def __init__(self, message: str, position: int, expected: str):
        super().__init__(f"{message} at position {position} (expected {expected})")
        self.position = position
        self.expected = expected


class OscillationError(GoodsteinError, RuntimeError):
    """A step-class sequence left and re-entered a phase.

    This would falsify the increase/plateau/descent structure of terminating
    sequences, so it is raised loudly instead of being folded into a result.
    """

    def __init__(self, index: int, message: str = ""):
        super().__init__(message or f"phase order violated at step {index}")
        self.index = index
