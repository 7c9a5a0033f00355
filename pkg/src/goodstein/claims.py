"""Executable checkers for the sequence lemmas and theorems.

Every checker takes a generated sequence and returns a verdict on that one
instance: Holds, Fails with a concrete replayable witness, NotApplicable
when the hypothesis is unmet, or Unresolved when a budget stops the check.
Claims are checked, never assumed: a checker is perfectly willing to report
Fails on a published statement, and two of them do.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, replace
from enum import Enum
from typing import Iterable, Optional, Sequence

from .budget import DEFAULT_BUDGET, Budget
from .errors import GoodsteinError
from .hereditary import HereditaryRep, _guard_power, decompose, rebase
from .sequences import (
    GenerationResult,
    Outcome,
    SeqSpec,
    SequenceKind,
    StepClass,
    classify_step,
    generate,
    largest_term_base,
    predict_termination,
)

__all__ = [
    "Status",
    "Verdict",
    "ClaimReport",
    "CLAIM_IDS",
    "THESIS_BASES",
    "SEC9_BASES",
    "check_lemma1",
    "check_lemma2",
    "check_lemma3",
    "check_lemma4",
    "check_lemma5",
    "check_lemma6",
    "check_cor61",
    "check_lemma7",
    "check_cor71",
    "check_thm1",
    "check_thm2",
    "check_lemma8_thm3",
    "check_thesis",
    "check_sec9",
    "run_suite",
    "run_suite_on_results",
    "report_records",
    "reports_to_json",
    "reports_to_table",
]

CLAIM_IDS = (
    "lemma1",
    "lemma2",
    "lemma3",
    "lemma4",
    "lemma5",
    "lemma6",
    "cor61",
    "lemma7",
    "cor71",
    "thm1",
    "thm2",
    "lemma8",
    "thm3",
    "thesis",
    "sec9",
)

# Fixed parameter ranges so suite output is deterministic.
THESIS_BASES = tuple(range(3, 11))
SEC9_BASES = tuple(range(3, 11))


class Status(Enum):
    HOLDS = "Holds"
    FAILS = "Fails"
    NOT_APPLICABLE = "NotApplicable"
    UNRESOLVED = "Unresolved"


@dataclass(frozen=True)
class Verdict:
    status: Status
    witness: Optional[dict] = None
    reason: Optional[str] = None


def _holds() -> Verdict:
    return Verdict(Status.HOLDS)


def _fails(**witness) -> Verdict:
    return Verdict(Status.FAILS, witness=witness)


def _na(reason: str) -> Verdict:
    return Verdict(Status.NOT_APPLICABLE, reason=reason)


def _unresolved(reason: str) -> Verdict:
    return Verdict(Status.UNRESOLVED, reason=reason)


@dataclass(frozen=True)
class ClaimReport:
    claim: str
    spec: SeqSpec
    verdict: Verdict
    steps_examined: int
    budget: Budget
    elapsed: float = 0.0


def _value_steps(result: GenerationResult):
    """Consecutive (term, next_term) pairs."""
    terms = result.terms
    for k in range(len(terms) - 1):
        yield terms[k], terms[k + 1]


def _scan(result: GenerationResult, matches, expects) -> Verdict:
    """Shared scaffolding: find steps matching a hypothesis and test each.

    matches(term) -> bool, expects(term, next_term) -> Optional[witness dict].
    """
    matched = 0
    skipped = 0
    for term, nxt in _value_steps(result):
        if not matches(term):
            continue
        if term.value is None or nxt.value is None:
            skipped += 1
            continue
        matched += 1
        witness = expects(term, nxt)
        if witness is not None:
            return Verdict(Status.FAILS, witness=witness)
    if matched == 0 and skipped == 0:
        return _na("no step matches the hypothesis")
    if skipped:
        return _unresolved(f"{skipped} matching step(s) exceeded the value budget")
    return _holds()


def check_lemma1(result: GenerationResult) -> Verdict:
    """A terminated sequence with seed above 3 strictly decreases somewhere
    before its zero index."""
    if result.spec.kind is not SequenceKind.G or result.spec.seed <= 3:
        return _na("stated for G seeds above 3")
    if result.outcome is not Outcome.TERMINATED:
        return _na("unterminated within budget")
    n = result.zero_index
    for term, nxt in _value_steps(result):
        if nxt.index >= n:
            break
        if term.value is not None and nxt.value is not None and nxt.value < term.value:
            return _holds()
    return _fails(zero_index=n, note="no strict decrease before the zero index")


def check_lemma2(result: GenerationResult) -> Verdict:
    """Steps leaving a representation with two or more terms never lose value."""
    return _scan(
        result,
        matches=lambda t: len(t.rep.terms) >= 2,
        expects=lambda t, n: None
        if n.value >= t.value
        else {"index": t.index, "value": t.value, "next_value": n.value},
    )


def _single_term(rep: HereditaryRep) -> Optional[tuple[int, HereditaryRep]]:
    return rep.terms[0] if len(rep.terms) == 1 else None


def check_lemma3(result: GenerationResult) -> Verdict:
    """Single term a*b^e with 2 <= a < b: value drops iff the exponent is 0,
    grows otherwise."""

    def matches(t):
        term = _single_term(t.rep)
        return term is not None and term[0] >= 2

    def expects(t, n):
        _, exponent = t.rep.terms[0]
        ok = n.value < t.value if exponent.is_zero() else n.value > t.value
        if ok:
            return None
        return {"index": t.index, "value": t.value, "next_value": n.value}

    return _scan(result, matches, expects)


def check_lemma4(result: GenerationResult) -> Verdict:
    """Single term 1*b^e with exponent value at least the base: value grows.

    The exponent comparison is structural: a canonical exponent reaches the
    base exactly when it has rank 1 or more.
    """

    def matches(t):
        term = _single_term(t.rep)
        if term is None or term[0] != 1:
            return False
        exponent = term[1]
        return bool(exponent.terms) and not exponent.terms[0][1].is_zero()

    def expects(t, n):
        if n.value > t.value:
            return None
        return {"index": t.index, "value": t.value, "next_value": n.value}

    return _scan(result, matches, expects)


def check_lemma5(result: GenerationResult) -> Verdict:
    """Single term 1*b^l with l below the base: grows for l > 1, holds for
    l = 1, drops for l = 0."""

    def matches(t):
        term = _single_term(t.rep)
        if term is None or term[0] != 1:
            return False
        exponent = term[1]
        return exponent.is_zero() or exponent.terms[0][1].is_zero()

    def expects(t, n):
        exponent = t.rep.terms[0][1]
        l = 0 if exponent.is_zero() else exponent.terms[0][0]
        if l > 1:
            ok = n.value > t.value
        elif l == 1:
            ok = n.value == t.value
        else:
            ok = n.value < t.value
        if ok:
            return None
        return {"index": t.index, "exponent": l, "value": t.value, "next_value": n.value}

    return _scan(result, matches, expects)


def _termination_shape(result: GenerationResult) -> Optional[tuple[int, int]]:
    """(n, n1) for a terminated run with even zero index, else None."""
    if result.outcome is not Outcome.TERMINATED:
        return None
    n = result.zero_index
    if n % 2:
        return None
    return n, n // 2


def check_lemma6(result: GenerationResult) -> Verdict:
    """Termination happens at an even index n = 2*n1, and the term at index
    n1 - 1 is exactly 1*n1^1 (in base n1)."""
    if result.outcome is not Outcome.TERMINATED:
        return _na("unterminated within budget")
    n = result.zero_index
    if n % 2:
        return _fails(zero_index=n, note="zero index is odd")
    n1 = n // 2
    if n1 == 1:
        return _na("n1 = 1 would reference term 0")
    term = result.terms[n1 - 2]
    expected = decompose(n1, n1)
    if term.rep != expected:
        return _fails(index=n1 - 1, rep=_rep_text(term.rep), expected=_rep_text(expected))
    return _holds()


def check_cor61(result: GenerationResult) -> Verdict:
    """From index n1 = n/2 on, values run down the ladder n - k."""
    if result.outcome is not Outcome.TERMINATED:
        return _na("unterminated within budget")
    n = result.zero_index
    if n % 2:
        return _fails(zero_index=n, note="zero index is odd")
    n1 = n // 2
    if n1 == 1:
        return _na("n1 = 1 would reference term 0")
    for k in range(n1, n):
        value = result.terms[k - 1].value
        if value != n - k:
            return _fails(index=k, value=value, expected=n - k)
    return _holds()


def check_lemma7(result: GenerationResult) -> Verdict:
    """Termination index has the form n = 2(2*n2 + 1) for a natural n2 >= 1,
    with the term at index n2 - 1 equal to 2*n2^1 when n2 >= 2.

    Seeds 1 and 2 terminate at n = 2 and n = 4, which have no such form;
    the checker reports that honestly rather than assuming the statement.
    """
    if result.outcome is not Outcome.TERMINATED:
        return _na("unterminated within budget")
    n = result.zero_index
    half, odd = divmod(n, 2)
    if odd or half % 2 == 0 or half < 3:
        return _fails(zero_index=n, note="n is not 2(2*n2+1) for any natural n2 >= 1")
    n2 = (half - 1) // 2
    if n2 >= 2:
        term = result.terms[n2 - 2]
        expected = decompose(2 * n2, n2)
        if term.rep != expected:
            return _fails(index=n2 - 1, rep=_rep_text(term.rep), expected=_rep_text(expected))
    return _holds()


def check_cor71(result: GenerationResult) -> Verdict:
    """Plateau equality G(k) = G(k+1) across n2 <= k < 2*n2."""
    if result.outcome is not Outcome.TERMINATED:
        return _na("unterminated within budget")
    n = result.zero_index
    half, odd = divmod(n, 2)
    if odd or half % 2 == 0 or half < 3:
        return _na("presupposes the 2(2*n2+1) form")
    n2 = (half - 1) // 2
    for k in range(n2, 2 * n2):
        here = result.terms[k - 1].value
        there = result.terms[k].value
        if here != there:
            return _fails(index=k, value=here, next_value=there)
    return _holds()


def check_thm1(result: GenerationResult) -> Verdict:
    """Full three-phase shape of a terminated sequence: strict increase up to
    n2, plateau to 2*n2, then the linear ladder down to zero."""
    if result.outcome is not Outcome.TERMINATED:
        return _na("unterminated within budget")
    n = result.zero_index
    half, odd = divmod(n, 2)
    if odd or half % 2 == 0 or half < 3:
        return _na("presupposes the 2(2*n2+1) form")
    n2 = (half - 1) // 2
    values = [t.value for t in result.terms]
    for k in range(2 * n2 + 1, n + 1):
        if values[k - 1] != n - k:
            return _fails(clause="descent", index=k, value=values[k - 1], expected=n - k)
    for k in range(n2, 2 * n2):
        if values[k - 1] != values[k]:
            return _fails(clause="plateau", index=k, value=values[k - 1], next_value=values[k])
    for k in range(1, n2):
        if not values[k - 1] < values[k]:
            return _fails(clause="increase", index=k, value=values[k - 1], next_value=values[k])
    return _holds()


def check_thm2(result: GenerationResult, budget: Budget = DEFAULT_BUDGET) -> Verdict:
    """Convergence exactly when finitely bounded, checked operationally on
    this instance: a terminated run is bounded and converged; a committed
    (plateau or descent) run must terminate within its predicted index."""
    if result.outcome is Outcome.TERMINATED:
        return _holds()
    for term in result.terms:
        if term.rep.is_zero() or term.value is None:
            continue
        if classify_step(term) in (StepClass.PLATEAU, StepClass.DESCENT):
            predicted = predict_termination(term)
            if predicted is not None and predicted <= budget.max_steps:
                return _fails(
                    index=term.index,
                    predicted_zero_index=predicted,
                    note="bound observed but run did not terminate",
                )
            return _unresolved(f"termination predicted at {predicted}, beyond the step budget")
    return _unresolved("no finite bound observed within budget")


def check_lemma8_thm3(
    result: GenerationResult, budget: Budget = DEFAULT_BUDGET
) -> tuple[Verdict, Verdict]:
    """The companion-sequence pair of verdicts.

    thm3: with n the zero index and p the largest value, k = max(n, p) gives
    a companion L(k) that dominates every nonzero term. Checked directly.
    lemma8: L(k) itself terminates. Its length is astronomically beyond any
    desk budget, so this half is always reported Unresolved, never assumed.
    """
    if result.spec.kind is not SequenceKind.G:
        return _na("stated for G instances"), _na("stated for G instances")
    if result.outcome is not Outcome.TERMINATED:
        reason = "G unterminated within budget"
        return _na(reason), _na(reason)
    n = result.zero_index
    values = [t.value for t in result.terms]
    if any(v is None for v in values):
        return _unresolved("values beyond budget"), _unresolved("values beyond budget")
    k = max(n, max(values))
    lemma8 = _unresolved(f"termination of L({k}) is beyond any desk-scale budget")
    companion = generate(SeqSpec(k, SequenceKind.L), replace(budget, max_steps=n))
    for idx in range(1, n + 1):
        if values[idx - 1] == 0:
            continue
        if idx > len(companion.terms) or companion.terms[idx - 1].value is None:
            return lemma8, _unresolved(f"L({k}) values beyond budget at index {idx}")
        if not companion.terms[idx - 1].value > values[idx - 1]:
            return lemma8, _fails(
                index=idx, companion=companion.terms[idx - 1].value, value=values[idx - 1]
            )
    return lemma8, _holds()


def check_thesis(
    result: GenerationResult,
    bases: Sequence[int] = THESIS_BASES,
    budget: Budget = DEFAULT_BUDGET,
) -> tuple[Verdict, list[int]]:
    """No candidate base keeps the rebased sequence strictly increasing.

    Returns the verdict together with the u_k trajectory (base of the
    largest term of each prefix). The limit claim about u_k is reported
    descriptively in the verdict reason, never adjudicated: a finite prefix
    cannot decide a limit.
    """
    trajectory = [largest_term_base(result.terms[: k + 1]) for k in range(len(result.terms))]
    peak_index = next(
        (k + 1 for k, t in enumerate(result.terms) if t.base == trajectory[-1]), None
    )
    behavior = (
        "growing"
        if peak_index == len(result.terms) and result.outcome is not Outcome.TERMINATED
        else f"stabilized at {trajectory[-1]}"
    )
    if not bases:
        return _na("no candidate bases"), trajectory
    monotone = []
    for u in bases:
        rebased = [rebase(t.rep, u, budget) for t in result.terms]
        if not any(b <= a for a, b in zip(rebased, rebased[1:])):
            monotone.append(u)
    if monotone:
        return (
            _unresolved(f"bases {monotone} strictly increase within this prefix; u_k {behavior}"),
            trajectory,
        )
    return Verdict(Status.HOLDS, reason=f"u_k {behavior}"), trajectory


def check_sec9(
    result: GenerationResult, x: int, budget: Budget = DEFAULT_BUDGET
) -> Verdict:
    """Difference properties of the rebased (functional) sequence at base x.

    Clause (i): a constant term c with 0 < c < x makes the step lose
    exactly 1 under rebasing. Clause (ii): a lowest term c*x^a with a > 0
    and 0 < c < x is claimed to lose at least (x-2)*x^(a-1); the checker
    tests the claim as stated and reports witnesses where it fails.
    """
    if x < 3:
        raise ValueError("x must be at least 3")
    matched = 0
    skipped = 0
    for term, nxt in _value_steps(result):
        coeff, exponent = term.rep.terms[-1]
        if not 0 < coeff < x:
            continue
        try:
            here = rebase(term.rep, x, budget)
            there = rebase(nxt.rep, x, budget)
            if exponent.is_zero():
                clause, bound, exact = "i", 1, True
            else:
                a = rebase(exponent, x, budget)
                _guard_power(x, a - 1, budget)
                clause, bound, exact = "ii", (x - 2) * x ** (a - 1), False
        except GoodsteinError:
            skipped += 1
            continue
        matched += 1
        difference = here - there
        ok = difference == bound if exact else difference >= bound
        if not ok:
            return _fails(index=term.index, x=x, clause=clause, difference=difference, bound=bound)
    if matched == 0 and skipped == 0:
        return _na("no step satisfies the side conditions")
    if skipped:
        return _unresolved(f"{skipped} qualifying step(s) exceeded the digit budget")
    return _holds()


def _rep_text(rep: HereditaryRep) -> str:
    from .notation import format_rep

    return format_rep(rep)


# -- suite -------------------------------------------------------------------


def _verdict_for(claim: str, result: GenerationResult, budget: Budget) -> Verdict:
    if claim == "lemma1":
        return check_lemma1(result)
    if claim == "lemma2":
        return check_lemma2(result)
    if claim == "lemma3":
        return check_lemma3(result)
    if claim == "lemma4":
        return check_lemma4(result)
    if claim == "lemma5":
        return check_lemma5(result)
    if claim == "lemma6":
        return check_lemma6(result)
    if claim == "cor61":
        return check_cor61(result)
    if claim == "lemma7":
        return check_lemma7(result)
    if claim == "cor71":
        return check_cor71(result)
    if claim == "thm1":
        return check_thm1(result)
    if claim == "thm2":
        return check_thm2(result, budget)
    if claim == "lemma8":
        return check_lemma8_thm3(result, budget)[0]
    if claim == "thm3":
        return check_lemma8_thm3(result, budget)[1]
    if claim == "thesis":
        return check_thesis(result, THESIS_BASES, budget)[0]
    if claim == "sec9":
        return _sec9_across_bases(result, budget)
    raise ValueError(f"unknown claim id {claim!r}")


def _sec9_across_bases(result: GenerationResult, budget: Budget) -> Verdict:
    verdicts = [check_sec9(result, x, budget) for x in SEC9_BASES]
    for v in verdicts:
        if v.status is Status.FAILS:
            return v
    for v in verdicts:
        if v.status is Status.UNRESOLVED:
            return v
    if all(v.status is Status.NOT_APPLICABLE for v in verdicts):
        return _na("no step satisfies the side conditions at any base")
    return _holds()


def run_suite(
    instances: Iterable[SeqSpec],
    claims: Optional[Sequence[str]] = None,
    budget: Budget = DEFAULT_BUDGET,
) -> list[ClaimReport]:
    """Generate each instance and run the requested claims over it."""
    ordered = sorted(set(instances), key=lambda s: (s.kind.value, s.seed))
    results = [generate(spec, budget) for spec in ordered]
    return run_suite_on_results(results, claims, budget)


def run_suite_on_results(
    results: Iterable[GenerationResult],
    claims: Optional[Sequence[str]] = None,
    budget: Budget = DEFAULT_BUDGET,
) -> list[ClaimReport]:
    """Run claims over already-generated (or imported) sequences.

    Reports are ordered by instance then claim id; a checker blowing up is
    captured as an Unresolved verdict rather than aborting the suite.
    """
    wanted = _normalize_claims(claims)
    reports = []
    for result in results:
        for claim in wanted:
            start = time.perf_counter()
            try:
                verdict = _verdict_for(claim, result, budget)
            except GoodsteinError as exc:
                verdict = _unresolved(str(exc))
            except Exception as exc:  # never abort the suite on one instance
                verdict = _unresolved(f"checker error: {exc}")
            reports.append(
                ClaimReport(
                    claim=claim,
                    spec=result.spec,
                    verdict=verdict,
                    steps_examined=len(result.terms),
                    budget=budget,
                    elapsed=time.perf_counter() - start,
                )
            )
    return reports


def _normalize_claims(claims: Optional[Sequence[str]]) -> tuple[str, ...]:
    if claims is None or claims == "all" or "all" in claims:
        return CLAIM_IDS
    unknown = [c for c in claims if c not in CLAIM_IDS]
    if unknown:
        raise ValueError(f"unknown claim id(s): {', '.join(unknown)}")
    return tuple(c for c in CLAIM_IDS if c in claims)


def report_records(reports: Iterable[ClaimReport]) -> list[dict]:
    """Export records; elapsed wall time is deliberately excluded so the
    output is byte-identical across runs."""
    records = []
    for report in reports:
        record = {
            "claim": report.claim,
            "seed": report.spec.seed,
            "kind": report.spec.kind.value,
            "start_base": report.spec.start_base,
            "verdict": report.verdict.status.value,
            "steps_examined": report.steps_examined,
            "budget": {
                "max_steps": report.budget.max_steps,
                "max_digits": report.budget.max_digits,
                "max_borrow_terms": report.budget.max_borrow_terms,
            },
        }
        if report.verdict.witness is not None:
            record["witness"] = report.verdict.witness
        records.append(record)
    return records


def reports_to_json(reports: Iterable[ClaimReport]) -> str:
    return json.dumps(report_records(reports), indent=2, sort_keys=True) + "\n"


def reports_to_table(reports: Iterable[ClaimReport]) -> str:
    lines = [f"{'claim':<8} {'instance':<8} {'verdict':<14} detail"]
    for report in reports:
        detail = ""
        if report.verdict.witness:
            detail = json.dumps(report.verdict.witness, sort_keys=True)
        elif report.verdict.reason:
            detail = report.verdict.reason
        lines.append(
            f"{report.claim:<8} {report.spec.label():<8} {report.verdict.status.value:<14} {detail}"
        )
    return "\n".join(lines) + "\n"
