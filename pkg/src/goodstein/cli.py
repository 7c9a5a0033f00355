"""Command-line surface.

Subcommands: rep, seq, mirror, verify, rebase. Machine-readable output goes
to stdout (or --out), diagnostics to stderr. Exit codes: 0 ok, 2 usage,
3 budget exhausted, 4 mirror decrease violation, 5 claim failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import nullcontext
from dataclasses import replace
from typing import Optional, Sequence

from . import claims as claims_mod
from .budget import Budget
from .errors import BudgetExceededError, GoodsteinError, InvalidBaseError
from .hereditary import decompose, evaluate, rank, rebase
from .notation import format_rep
from .ordinals import format_ordinal, mirror, verify_decreasing
from .sequences import (
    GenerationResult,
    Outcome,
    SeqSpec,
    SequenceKind,
    generate,
    read_records,
    result_from_records,
    term_records,
    write_csv,
    write_json,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_MIRROR_VIOLATION = 4
EXIT_CLAIM_FAILURE = 5


def _add_budget_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--max-steps", type=int, default=Budget().max_steps, metavar="N")
    parser.add_argument("--max-digits", type=int, default=Budget().max_digits, metavar="N")
    parser.add_argument(
        "--max-borrow-terms", type=int, default=Budget().max_borrow_terms, metavar="N"
    )


def _budget(args) -> Budget:
    return Budget(args.max_steps, args.max_digits, args.max_borrow_terms)


def _parse_seeds(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        seeds = list(range(int(lo), int(hi) + 1))
        if not seeds:
            raise ValueError(f"empty seed range {text!r}")
        return seeds
    return [int(text)]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="goodstein",
        description="Hereditary base arithmetic, Goodstein-style sequences, "
        "ordinal mirrors, and claim verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_rep = sub.add_parser("rep", help="hereditary representation of a number")
    p_rep.add_argument("number", type=int)
    p_rep.add_argument("--base", type=int, default=2)
    p_rep.add_argument("--format", choices=("text", "json"), default="text")
    _add_budget_flags(p_rep)

    p_seq = sub.add_parser("seq", help="generate a sequence and export its terms")
    p_seq.add_argument("seed", type=int)
    p_seq.add_argument("--kind", choices=("G", "L"), default="G")
    p_seq.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p_seq.add_argument("--out", metavar="PATH")
    _add_budget_flags(p_seq)

    p_mirror = sub.add_parser("mirror", help="ordinal mirror of each term, with decrease check")
    p_mirror.add_argument("seed", type=int)
    p_mirror.add_argument("--kind", choices=("G", "L"), default="G")
    p_mirror.add_argument("--format", choices=("text", "json"), default="text")
    p_mirror.add_argument("--out", metavar="PATH")
    _add_budget_flags(p_mirror)

    p_verify = sub.add_parser("verify", help="run claim checkers and write a report")
    p_verify.add_argument("--seeds", metavar="A..B", help="seed or inclusive range")
    p_verify.add_argument("--kind", choices=("G", "L"), default="G")
    p_verify.add_argument("--claims", default="all", metavar="LIST|all")
    p_verify.add_argument(
        "--from-file", metavar="PATH", help="verify a previously exported sequence"
    )
    p_verify.add_argument("--seed", type=int, help="seed override for --from-file")
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.add_argument("--out", metavar="PATH")
    _add_budget_flags(p_verify)

    p_rebase = sub.add_parser("rebase", help="sequence values under a substituted base")
    p_rebase.add_argument("seed", type=int)
    p_rebase.add_argument("--u", type=int, required=True, metavar="N")
    p_rebase.add_argument("--kind", choices=("G", "L"), default="G")
    p_rebase.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p_rebase.add_argument("--out", metavar="PATH")
    _add_budget_flags(p_rebase)

    return parser


def _open_out(args):
    if getattr(args, "out", None):
        return open(args.out, "w", encoding="utf-8")
    return nullcontext(sys.stdout)


def cmd_rep(args) -> int:
    try:
        rep = decompose(args.number, args.base)
    except (InvalidBaseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    budget = _budget(args)
    text = format_rep(rep)
    try:
        rank_val = evaluate(rank(rep), budget)
    except BudgetExceededError:
        rank_val = None
    if args.format == "json":
        print(
            json.dumps(
                {
                    "rep": text,
                    "value": str(args.number),
                    "rank": format_rep(rank(rep)),
                    "rank_value": rank_val,
                }
            )
        )
    else:
        print(text)
        print(f"value = {args.number}")
        print(f"rank = {format_rep(rank(rep))}" + (f" (= {rank_val})" if rank_val is not None else ""))
    return EXIT_OK


def _generate(args) -> GenerationResult:
    spec = SeqSpec(args.seed, SequenceKind(args.kind))
    return generate(spec, _budget(args))


def cmd_seq(args) -> int:
    try:
        result = _generate(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    with _open_out(args) as stream:
        if args.format == "json":
            write_json(result.terms, stream)
        elif args.format == "csv":
            write_csv(result.terms, stream)
        else:
            for record in term_records(result.terms):
                value = record["value"] if record["value"] is not None else "(elided)"
                cls = record["step_class"] or "-"
                print(
                    f"{record['index']:>6}  base {record['base']:>6}  {cls:<8} {value}",
                    file=stream,
                )
    print(f"outcome: {result.outcome.value}", file=sys.stderr)
    if result.outcome is Outcome.BUDGET_EXCEEDED:
        print(f"detail: {result.detail}", file=sys.stderr)
        return EXIT_BUDGET
    return EXIT_OK


def cmd_mirror(args) -> int:
    try:
        result = _generate(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    ordinals = [format_ordinal(mirror(t.rep)) for t in result.terms]
    audit = verify_decreasing(result.terms)
    with _open_out(args) as stream:
        if args.format == "json":
            json.dump(
                {
                    "ordinals": ordinals,
                    "decreasing": audit.decreasing,
                    "violation_index": audit.violation_index,
                },
                stream,
                indent=2,
            )
            stream.write("\n")
        else:
            for line in ordinals:
                print(line, file=stream)
            print("Decreasing" if audit.decreasing else f"Violation at {audit.violation_index}", file=stream)
    if not audit.decreasing:
        print(
            f"mirror violation at index {audit.violation_index}: {audit.detail}",
            file=sys.stderr,
        )
        return EXIT_MIRROR_VIOLATION
    return EXIT_OK


def cmd_verify(args) -> int:
    budget = _budget(args)
    claim_list = (
        "all" if args.claims.strip() == "all" else [c.strip() for c in args.claims.split(",")]
    )
    try:
        if args.from_file:
            fmt = "csv" if args.from_file.endswith(".csv") else "json"
            with open(args.from_file, encoding="utf-8") as stream:
                records = read_records(stream, fmt)
            spec = SeqSpec(args.seed, SequenceKind(args.kind)) if args.seed is not None else None
            results = [result_from_records(records, spec)]
        elif args.seeds:
            specs = [SeqSpec(s, SequenceKind(args.kind)) for s in _parse_seeds(args.seeds)]
            results = [generate(spec, budget) for spec in specs]
        else:
            print("error: provide --seeds or --from-file", file=sys.stderr)
            return EXIT_USAGE
        reports = claims_mod.run_suite_on_results(results, claim_list, budget)
    except (ValueError, GoodsteinError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    with _open_out(args) as stream:
        if args.format == "json":
            stream.write(claims_mod.reports_to_json(reports))
        else:
            stream.write(claims_mod.reports_to_table(reports))
    failures = [r for r in reports if r.verdict.status is claims_mod.Status.FAILS]
    if failures:
        names = sorted({f"{r.claim}[{r.spec.label()}]" for r in failures})
        print("failing claims: " + ", ".join(names), file=sys.stderr)
        return EXIT_CLAIM_FAILURE
    return EXIT_OK


def cmd_rebase(args) -> int:
    try:
        if args.u < 2:
            raise InvalidBaseError(f"base must be at least 2, got {args.u}")
        result = _generate(args)
        rows = []
        previous = None
        for t in result.terms:
            value = rebase(t.rep, args.u, _budget(args))
            delta = value - previous if previous is not None else None
            rows.append({"index": t.index, "rebased": value, "delta": delta})
            previous = value
    except InvalidBaseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    with _open_out(args) as stream:
        if args.format == "json":
            json.dump(
                [{**row, "rebased": str(row["rebased"])} for row in rows], stream, indent=2
            )
            stream.write("\n")
        elif args.format == "csv":
            print("index,rebased,delta", file=stream)
            for row in rows:
                delta = "" if row["delta"] is None else row["delta"]
                print(f"{row['index']},{row['rebased']},{delta}", file=stream)
        else:
            for row in rows:
                delta = "" if row["delta"] is None else f"  ({row['delta']:+})"
                print(f"{row['index']:>6}  {row['rebased']}{delta}", file=stream)
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {
        "rep": cmd_rep,
        "seq": cmd_seq,
        "mirror": cmd_mirror,
        "verify": cmd_verify,
        "rebase": cmd_rebase,
    }[args.command]
    try:
        return handler(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except GoodsteinError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
