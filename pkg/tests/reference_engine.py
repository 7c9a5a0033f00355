"""Independent value-level oracle for sequence steps.

Deliberately shares nothing with the package: a number is just a Python
int, the base change is computed by splitting into digits and recursing on
exponent values, and a step is that minus one. Slow and naive on purpose.
"""

from __future__ import annotations


def bump_value(m: int, base: int) -> int:
    """Value of m after replacing base by base + 1 in its hereditary form."""
    total = 0
    exponent = 0
    while m:
        m, digit = divmod(m, base)
        if digit:
            total += digit * (base + 1) ** bump_value(exponent, base)
        exponent += 1
    return total


def step_value(m: int, base: int) -> int:
    return bump_value(m, base) - 1


def goodstein_values(seed: int, count: int) -> list[int]:
    """First `count` values of the sequence seeded in base 2 (fewer if it
    reaches zero first)."""
    values = [seed]
    value, base = seed, 2
    while len(values) < count and value:
        value = step_value(value, base)
        base += 1
        values.append(value)
    return values


def companion_values(k: int, count: int) -> list[int]:
    """First `count` values of the sequence started from k^k in base k."""
    values = [k**k]
    value, base = k**k, k
    while len(values) < count and value:
        value = step_value(value, base)
        base += 1
        values.append(value)
    return values


def rebase_value(m: int, base: int, new_base: int) -> int:
    """Value of m's hereditary form with new_base substituted for base."""
    total = 0
    exponent = 0
    while m:
        m, digit = divmod(m, base)
        if digit:
            total += digit * new_base ** rebase_value(exponent, base, new_base)
        exponent += 1
    return total
