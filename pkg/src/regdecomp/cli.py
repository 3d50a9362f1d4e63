"""Command-line entry point.

Subcommands reproduce one construction each and print a certificate
report (human-readable summary by default, full JSON with --json).
With --dump DIR the decomposition matrices are written as CSV files
with rendered heatmap figures, and the JSON report is saved alongside.

Exit codes: 0 when the scenario ran and every claim it restates holds,
2 when a restated claim fails (the report then carries the failing
certificates), 1 for usage or parameter errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from .scenarios import (
    ScenarioResult,
    UsageError,
    run_counterexample_quotient,
    run_counterexample_zn,
    run_examples_suite,
    run_positive_example,
    run_scan,
)

__all__ = ["main", "build_parser"]


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # exit 1 on usage problems, not argparse's 2
        self.print_usage(sys.stderr)
        raise SystemExit(_fail_usage(message))


def _fail_usage(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 1


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="regdecomp",
        description="Build, validate and certify regular decompositions of graded algebras "
        "over finite fields of odd characteristic.",
    )
    parser.add_argument("--json", action="store_true", help="print the full JSON report")
    parser.add_argument("--dump", metavar="DIR", help="write matrix CSVs, figures and reports to DIR")
    sub = parser.add_subparsers(dest="command", required=True)

    zn = sub.add_parser("counterexample-zn", help="sign/root-of-unity grading on Z_2t x Z_2t")
    zn.add_argument("--p", type=int, required=True, help="odd prime characteristic")
    zn.add_argument("--t", type=int, required=True, help="odd prime twist order, t != p")

    quo = sub.add_parser("counterexample-quotient", help="corner-sign carry cochain on Z_p^3, quotiented")
    quo.add_argument("--p", type=int, required=True, help="odd prime characteristic")

    pos = sub.add_parser("positive-example", help="sign cocycle on Z_{q-1} x Z_{q1-1}, quotiented")
    pos.add_argument("--p", type=int, required=True, help="odd prime characteristic")
    pos.add_argument("--q", type=int, required=True, help="prime, q != p, gcd(p, q-1) = 1")
    pos.add_argument("--q1", type=int, required=True, help="prime, q1 != p and q1 != q, gcd(p, q1-1) = 1")

    sub.add_parser("examples", help="reproduce the worked examples and determinant sweep")

    scan = sub.add_parser("scan", help="sweep twisted group algebras over small groups")
    scan.add_argument("--max-order", type=int, required=True, help="largest group order (<= 64)")
    scan.add_argument("--p", type=int, required=True, help="odd prime characteristic")
    scan.add_argument("--seed", type=int, default=0, help="seed for the random cocycle family")
    scan.add_argument("--k", type=int, default=1, help="field extension degree")

    norm = sub.add_parser(
        "normalize-word",
        help='normal form of a graded word, e.g. "x2^(1,0)*x1^(0,1)"',
    )
    norm.add_argument("--p", type=int, required=True, help="odd prime characteristic")
    grading = norm.add_mutually_exclusive_group(required=True)
    grading.add_argument("--t", type=int, help="sign/root grading on Z_2t x Z_2t")
    grading.add_argument("--trivial-orders", help="cyclic orders n1,n2,... with trivial commutation")
    norm.add_argument("word", help="letters x<i>^(c1,...,cr) joined by '*'; '1' is the empty word")
    return parser


def _summarize(result: ScenarioResult) -> str:
    rep = result.report
    lines = [f"scenario: {rep.scenario}"]
    lines.append("parameters: " + ", ".join(f"{k}={v}" for k, v in rep.parameters.items()))
    if rep.field:
        lines.append(f"field: {rep.field}")
    if rep.group:
        lines.append(f"group: {rep.group}")
    if rep.minimal is not None:
        lines.append(f"minimal: {rep.minimal}")
    if rep.det_is_zero is not None:
        lines.append(f"det_is_zero: {rep.det_is_zero}  (det = {rep.det})")
    if rep.conjecture_verdict:
        lines.append(f"conjecture_verdict: {rep.conjecture_verdict}")
    failure = rep.certificates.get("failure")
    if failure:
        lines.append(f"failure: {failure.get('stage')}: {failure.get('detail')}")
        if failure.get("witness"):
            lines.append(f"  witness: {failure['witness']}")
    if rep.claim_failures:
        lines.append("failed claims: " + ", ".join(rep.claim_failures))
    else:
        lines.append("all restated claims hold")
    return "\n".join(lines)


def _dump(results: list[ScenarioResult], directory: str) -> None:
    from .plotting import save_matrix_heatmap, save_scan_summary

    os.makedirs(directory, exist_ok=True)
    scans = [r for r in results if r.report.scenario == "scan"]
    for idx, result in enumerate(results):
        rep = result.report
        stem = rep.scenario if len(results) == 1 else f"{idx:03d}_{rep.scenario}"
        with open(os.path.join(directory, f"{stem}_report.json"), "w") as fh:
            json.dump(rep.to_dict(), fh, indent=2)
            fh.write("\n")
        for name, matrix in result.matrices.items():
            base = os.path.join(directory, f"{stem}_{name}")
            with open(base + ".csv", "w", newline="") as fh:
                fh.write(matrix.to_csv())
            save_matrix_heatmap(
                matrix,
                base + ".png",
                title=f"{rep.scenario}: {name} ({rep.group or ''})",
            )
    if scans:
        save_scan_summary(scans, os.path.join(directory, "scan_summary.png"))
        with open(os.path.join(directory, "scan.csv"), "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(
                ["group", "family", "minimal", "det_is_zero", "det",
                 "radical_order", "center_dimension", "conjecture_verdict"]
            )
            for result in scans:
                rep = result.report
                writer.writerow(
                    [rep.group, rep.parameters["family"], rep.minimal, rep.det_is_zero,
                     rep.det, rep.certificates["radical_order"],
                     rep.certificates["center_dimension"], rep.conjecture_verdict]
                )


def _normalize_word_command(args) -> int:
    from .bichar import sign_root_bicharacter, trivial_bicharacter
    from .ff import make_field
    from .freealg import normalize, parse_word
    from .groups import FinAbGroup

    if args.t is not None:
        beta = sign_root_bicharacter(args.p, args.t)
    else:
        orders = tuple(int(n) for n in args.trivial_orders.split(","))
        beta = trivial_bicharacter(FinAbGroup(orders), make_field(args.p, 1))
    word = parse_word(args.word, beta.group)
    scalar, normal = normalize(word, beta)
    payload = {
        "word": word.serialize(),
        "group": beta.group.describe(),
        "field": beta.field.describe(),
        "scalar": scalar.serialize(),
        "normal_form": normal.serialize() if normal is not None else None,
        "is_zero": normal is None,
    }
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(f"word: {payload['word']}")
        print(f"scalar: {payload['scalar']}")
        print(f"normal_form: {payload['normal_form'] if normal is not None else '0'}")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    if args.command == "normalize-word":
        try:
            return _normalize_word_command(args)
        except ValueError as exc:
            return _fail_usage(str(exc))
    try:
        if args.command == "counterexample-zn":
            results = [run_counterexample_zn(args.p, args.t)]
        elif args.command == "counterexample-quotient":
            results = [run_counterexample_quotient(args.p)]
        elif args.command == "positive-example":
            results = [run_positive_example(args.p, args.q, args.q1)]
        elif args.command == "examples":
            results = run_examples_suite()
        else:
            results = run_scan(args.max_order, args.p, k=args.k, seed=args.seed)
    except UsageError as exc:
        return _fail_usage(str(exc))
    if args.json:
        payload = [r.report.to_dict() for r in results]
        print(json.dumps(payload[0] if len(payload) == 1 else payload, indent=2))
    else:
        print("\n\n".join(_summarize(r) for r in results))
    if args.dump:
        _dump(results, args.dump)
    return max(r.exit_code for r in results)


if __name__ == "__main__":
    raise SystemExit(main())
