"""Resource limits for operations that can blow up at desk scale."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Budget:
    """Limits for sequence generation and value materialization.

    max_steps: maximum number of sequence terms generated.
    max_digits: maximum decimal digits of any materialized integer.
    max_borrow_terms: maximum terms produced by a single borrow expansion
        (b^e - 1 has e terms, and e can be astronomically large).
    """

    max_steps: int = 100_000
    max_digits: int = 1_000_000
    max_borrow_terms: int = 2**20

    def __post_init__(self):
        for name in ("max_steps", "max_digits", "max_borrow_terms"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")


DEFAULT_BUDGET = Budget()
