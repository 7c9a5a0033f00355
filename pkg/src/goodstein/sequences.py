"""Goodstein-style sequence generation, step classification, and exports.

A sequence starts from a seed representation and iterates the complete
operation: replace the base b by b+1 everywhere, then subtract 1. G
sequences start from the seed itself in base 2; L sequences start from
k^k in base k. Indexing is 1-based with term 1 the seed, so the k-th term
of a G sequence lives in base k+1.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, replace
from enum import Enum
from typing import Iterable, Optional, Sequence

from .budget import DEFAULT_BUDGET, Budget
from .errors import BudgetExceededError, OscillationError, UnderflowError
from .hereditary import HereditaryRep, bump, decompose, decrement, evaluate, rebase
from .notation import format_rep, parse_rep

__all__ = [
    "SequenceKind",
    "SeqSpec",
    "StepClass",
    "SeqTerm",
    "Outcome",
    "GenerationResult",
    "goodstein_step",
    "generate",
    "classify_step",
    "classify_rep",
    "predict_termination",
    "largest_term_base",
    "functional_eval",
    "PhaseProfile",
    "phase_profile",
    "term_records",
    "write_json",
    "write_csv",
    "read_records",
    "result_from_records",
]


class SequenceKind(Enum):
    G = "G"
    L = "L"


@dataclass(frozen=True)
class SeqSpec:
    """Which sequence to generate: G(seed) from base 2, or L(k) from k^k."""

    seed: int
    kind: SequenceKind = SequenceKind.G

    def __post_init__(self):
        if self.kind is SequenceKind.G and self.seed < 0:
            raise ValueError("G seed must be a natural number")
        if self.kind is SequenceKind.L and self.seed < 2:
            raise ValueError("L seed must be at least 2")

    @property
    def start_base(self) -> int:
        return 2 if self.kind is SequenceKind.G else self.seed

    def initial_rep(self) -> HereditaryRep:
        if self.kind is SequenceKind.G:
            return decompose(self.seed, 2)
        return decompose(self.seed**self.seed, self.seed)

    def label(self) -> str:
        return f"{self.kind.value}({self.seed})"


class StepClass(Enum):
    """Behavior of the step leaving a term: value -1, unchanged, or grown."""

    DESCENT = "Descent"
    PLATEAU = "Plateau"
    INCREASE = "Increase"


@dataclass(frozen=True)
class SeqTerm:
    """One sequence term. step_class describes the step leaving this term
    (None for the final zero term, which no step leaves); value is None
    when materialization would exceed the digit budget."""

    index: int
    rep: HereditaryRep
    value: Optional[int] = None
    step_class: Optional[StepClass] = None

    @property
    def base(self) -> int:
        return self.rep.base


class Outcome(Enum):
    TERMINATED = "Terminated"
    STEP_LIMIT = "StepLimit"
    BUDGET_EXCEEDED = "BudgetExceeded"


@dataclass(frozen=True)
class GenerationResult:
    spec: SeqSpec
    terms: tuple[SeqTerm, ...]
    outcome: Outcome
    detail: Optional[str] = None

    @property
    def zero_index(self) -> Optional[int]:
        return self.terms[-1].index if self.outcome is Outcome.TERMINATED else None

    def values(self) -> list[Optional[int]]:
        return [t.value for t in self.terms]


def classify_rep(rep: HereditaryRep) -> StepClass:
    """Structural classification of the step that would leave this rep.

    Rank 0 loses exactly 1 (the bump cannot see a constant). A leading
    term 1*b^1 gains 1 from the bump and loses it to the subtraction
    (a constant term may sit alongside). Everything else gains at least 2
    from the bump, hence strictly increases.
    """
    if not rep.terms:
        raise UnderflowError("no step leaves the zero representation")
    coeff, exponent = rep.terms[0]
    if exponent.is_zero():
        return StepClass.DESCENT
    one_exponent = len(exponent.terms) == 1 and exponent.terms[0][0] == 1 and exponent.terms[0][1].is_zero()
    if coeff == 1 and one_exponent:
        return StepClass.PLATEAU
    return StepClass.INCREASE


def classify_step(term: SeqTerm) -> StepClass:
    return classify_rep(term.rep)


def goodstein_step(term: SeqTerm, budget: Budget = DEFAULT_BUDGET) -> SeqTerm:
    """The complete operation: bump the base, subtract one, advance the index."""
    if term.rep.is_zero():
        raise UnderflowError("sequence already reached zero")
    next_rep = decrement(bump(term.rep), budget)
    return SeqTerm(
        index=term.index + 1,
        rep=next_rep,
        value=_try_value(next_rep, budget),
        step_class=classify_rep(next_rep) if next_rep.terms else None,
    )


def _try_value(rep: HereditaryRep, budget: Budget) -> Optional[int]:
    try:
        return evaluate(rep, budget)
    except BudgetExceededError:
        return None


def generate(spec: SeqSpec, budget: Budget = DEFAULT_BUDGET) -> GenerationResult:
    """Generate terms from index 1 until zero, the step limit, or a budget error.

    Values are materialized per term while they fit max_digits; a term
    whose value is elided still advances (the tree operations never need
    the integer). A borrow expansion beyond max_borrow_terms ends the run
    with Outcome.BUDGET_EXCEEDED and the terms produced so far.
    """
    rep = spec.initial_rep()
    term = SeqTerm(
        index=1,
        rep=rep,
        value=_try_value(rep, budget),
        step_class=classify_rep(rep) if rep.terms else None,
    )
    terms = [term]
    while True:
        if term.rep.is_zero():
            return GenerationResult(spec, tuple(terms), Outcome.TERMINATED)
        if len(terms) >= budget.max_steps:
            return GenerationResult(spec, tuple(terms), Outcome.STEP_LIMIT)
        try:
            term = goodstein_step(term, budget)
        except BudgetExceededError as exc:
            return GenerationResult(spec, tuple(terms), Outcome.BUDGET_EXCEEDED, str(exc))
        terms.append(term)


def predict_termination(term: SeqTerm) -> Optional[int]:
    """Absolute index at which the sequence reaches zero, when it is already
    committed: a plateau at value v ends at index 2v, a descent at index
    index + value. Increase steps predict nothing.
    """
    if term.value is None:
        raise ValueError("prediction needs a materialized value")
    cls = classify_step(term)
    if cls is StepClass.PLATEAU:
        return 2 * term.value
    if cls is StepClass.DESCENT:
        return term.index + term.value
    return None


def largest_term_base(prefix: Sequence[SeqTerm]) -> int:
    """Base of the earliest term attaining the maximum value in the prefix.

    Ties go to the earliest index (plateaus guarantee ties). When values
    are budget-elided the maximum is located structurally: under the
    increase/plateau/descent order, the first non-increase step marks the
    earliest maximum, and an all-increase prefix peaks at its last term.
    """
    if not prefix:
        raise ValueError("empty prefix")
    if all(t.value is not None for t in prefix):
        best = max(range(len(prefix)), key=lambda k: (prefix[k].value, -k))
        return prefix[best].base
    for t in prefix:
        if t.rep.is_zero() or classify_step(t) is not StepClass.INCREASE:
            return t.base
    return prefix[-1].base


def functional_eval(
    spec: SeqSpec, n: int, x: int, budget: Budget = DEFAULT_BUDGET
) -> int:
    """Value of the n-th term with the variable base x substituted in."""
    if n < 1:
        raise ValueError("term index must be >= 1")
    result = generate(spec, replace(budget, max_steps=n))
    if len(result.terms) < n:
        raise ValueError(f"{spec.label()} has only {len(result.terms)} terms")
    return rebase(result.terms[n - 1].rep, x, budget)


@dataclass(frozen=True)
class PhaseProfile:
    """Step indices partitioned by class, with phase boundaries.

    Ranges are inclusive (first, last) step-index pairs or None when the
    phase is empty. For a terminated sequence of length n, midpoint is
    n/2 when n is even: the index where descent hands over from plateau.
    """

    increase: Optional[tuple[int, int]]
    plateau: Optional[tuple[int, int]]
    descent: Optional[tuple[int, int]]
    terminated: bool
    zero_index: Optional[int]
    midpoint: Optional[int]


_PHASE_ORDER = {StepClass.INCREASE: 0, StepClass.PLATEAU: 1, StepClass.DESCENT: 2}


def phase_profile(terms: Sequence[SeqTerm]) -> PhaseProfile:
    """Partition the steps of a contiguous prefix and verify the phase order.

    The class sequence must match Increase* Plateau* Descent*; any phase
    reappearing after it was left raises OscillationError with the
    offending step index, since that would break the structure every
    terminating sequence exhibits.
    """
    spans: dict[StepClass, list[int]] = {cls: [] for cls in StepClass}
    level = 0
    # The final term contributes no step: either it is zero, or the prefix
    # stopped before stepping off it.
    for t in terms[:-1]:
        cls = t.step_class or classify_step(t)
        if _PHASE_ORDER[cls] < level:
            raise OscillationError(t.index)
        level = _PHASE_ORDER[cls]
        spans[cls].append(t.index)
    terminated = bool(terms) and terms[-1].rep.is_zero()
    zero_index = terms[-1].index if terminated else None
    midpoint = zero_index // 2 if terminated and zero_index % 2 == 0 else None
    return PhaseProfile(
        increase=_bounds(spans[StepClass.INCREASE]),
        plateau=_bounds(spans[StepClass.PLATEAU]),
        descent=_bounds(spans[StepClass.DESCENT]),
        terminated=terminated,
        zero_index=zero_index,
        midpoint=midpoint,
    )


def _bounds(indices: list[int]) -> Optional[tuple[int, int]]:
    return (indices[0], indices[-1]) if indices else None


# -- export / import ---------------------------------------------------------

_COLUMNS = ("index", "base", "value", "rep", "step_class", "digits")


def term_records(terms: Iterable[SeqTerm]) -> list[dict]:
    """One export record per term; values as decimal strings or None."""
    records = []
    for t in terms:
        records.append(
            {
                "index": t.index,
                "base": t.base,
                "value": str(t.value) if t.value is not None else None,
                "rep": format_rep(t.rep),
                "step_class": t.step_class.value if t.step_class else None,
                "digits": len(str(t.value)) if t.value is not None else None,
            }
        )
    return records


def write_json(terms: Iterable[SeqTerm], stream: io.TextIOBase) -> None:
    json.dump(term_records(terms), stream, indent=2)
    stream.write("\n")


def write_csv(terms: Iterable[SeqTerm], stream: io.TextIOBase) -> None:
    writer = csv.DictWriter(stream, fieldnames=_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for record in term_records(terms):
        writer.writerow(record)


def read_records(stream: io.TextIOBase, fmt: str) -> list[dict]:
    """Read an export back. fmt is "json" or "csv"."""
    if fmt == "json":
        return json.load(stream)
    records = []
    for row in csv.DictReader(stream):
        records.append(
            {
                "index": int(row["index"]),
                "base": int(row["base"]),
                "value": row["value"] or None,
                "rep": row["rep"],
                "step_class": row["step_class"] or None,
                "digits": int(row["digits"]) if row["digits"] else None,
            }
        )
    return records


def result_from_records(
    records: Sequence[dict], spec: Optional[SeqSpec] = None
) -> GenerationResult:
    """Rebuild a sequence from export records, e.g. for file-based claim runs.

    Exports carry no seed/kind, so unless a spec is supplied one is
    inferred: start base 2 means a G sequence seeded by the first value;
    other start bases mean L(start_base). Termination is recognized from a
    final zero representation; anything else is treated as a step-limited
    prefix.
    """
    if not records:
        raise ValueError("empty export")
    terms = []
    for record in records:
        rep = parse_rep(record["rep"])
        if rep.terms and rep.base != record["base"]:
            raise ValueError(f"record base {record['base']} does not match rep")
        cls = StepClass(record["step_class"]) if record.get("step_class") else None
        value = int(record["value"]) if record.get("value") is not None else None
        terms.append(SeqTerm(int(record["index"]), rep, value, cls))
    if spec is None:
        first = terms[0]
        if first.base == 2:
            if first.value is None:
                raise ValueError("cannot infer seed from an elided first value")
            spec = SeqSpec(first.value, SequenceKind.G)
        else:
            spec = SeqSpec(first.base, SequenceKind.L)
    outcome = Outcome.TERMINATED if terms[-1].rep.is_zero() else Outcome.STEP_LIMIT
    return GenerationResult(spec, tuple(terms), outcome)
