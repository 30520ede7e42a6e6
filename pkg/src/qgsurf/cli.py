"""Command-line front end.

Subcommands: verify FILE, example NAME, verify-all, chain B1,B2,...,
enumerate-classT, export-dot FILE.  Exit status: 0 all checks pass,
1 verification failure (violations or certificate failure), 2 input or
schema error.  Output is deterministic; --output json mirrors the report
structures.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import config as config_mod
from . import corpus
from .blowup import apply_blowups
from .errors import QgsurfError
from .fibration import euler_sum_check, i9_forces_i1_lint, two_section_incidence_check
from .smoothing import build_report, validate_plan
from .wahl import (
    as_chain,
    canonical_order,
    discrepancies,
    generate_class_T,
    hj_value,
    k2_contribution,
    recognize_class_T,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2


def _chain_report_lines(entries) -> tuple[list[str], dict]:
    chain = as_chain(entries)
    value = hj_value(chain)
    data = recognize_class_T(chain)
    disc = discrepancies(chain)
    contribution = k2_contribution(chain)
    disc_s = ",".join(str(d) for d in disc)
    lines = [
        "chain=" + ",".join(str(b) for b in chain),
        f"hj={value.numerator}/{value.denominator}",
    ]
    if data is not None:
        lines.append(
            f"classT d={data.d} n={data.n} a={data.a} m={data.m} q={data.q} "
            f"index={data.index} contribution={contribution} discrepancies={disc_s}")
    else:
        lines.append(f"notClassT contribution={contribution} discrepancies={disc_s}")
    blob = {
        "chain": list(chain),
        "hj": f"{value.numerator}/{value.denominator}",
        "classT": None if data is None else {
            "d": data.d, "n": data.n, "a": data.a, "m": data.m, "q": data.q,
            "index": data.index},
        "contribution": str(contribution),
        "discrepancies": [str(d) for d in disc],
    }
    return lines, blob


def _cmd_chain(args, out) -> int:
    try:
        entries = [int(x) for x in args.entries.split(",") if x.strip() != ""]
        lines, blob = _chain_report_lines(entries)
    except (ValueError, QgsurfError) as exc:
        print(f"error: chain: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.output == "json":
        print(json.dumps(blob, indent=1), file=out)
    else:
        for line in lines:
            print(line, file=out)
    return EXIT_OK


def _cmd_enumerate(args, out) -> int:
    try:
        chains = canonical_order(generate_class_T(args.max_len, args.max_entry))
    except ValueError as exc:
        print(f"error: enumerate-classT: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.output == "json":
        print(json.dumps([list(c) for c in chains]), file=out)
        return EXIT_OK
    for chain in chains:
        lines, _ = _chain_report_lines(chain)
        print(" ".join(lines), file=out)
    return EXIT_OK


def _load_document(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise QgsurfError(f"cannot read {path}: {exc.strerror}") from None
    return config_mod.parse_unvalidated(text)


def _pipeline(doc, out, as_json: bool) -> int:
    """Shared verify pipeline: validation, lints, blow-ups, plan report."""
    failures = []
    violations = config_mod.validate(doc.configuration)
    failures.extend(str(v) for v in violations)

    base = doc.configuration
    lint_lines = []
    if base.fibration is not None:
        euler = euler_sum_check(base.fibration, base.surface.chi)
        lint_lines.append(
            f"euler_sum={euler.total} target={euler.target} deficit={euler.deficit}"
            + (f" note={euler.note}" if euler.note else ""))
        if euler.deficit < 0:
            failures.append("declared fibers exceed 12*chi")
        failures.extend(str(v) for v in two_section_incidence_check(base))
        for advisory in i9_forces_i1_lint(base.fibration, base.surface.kind):
            lint_lines.append(f"advisory={advisory}")

    report = None
    if not violations:
        final = apply_blowups(base, doc.blowups)
        failures.extend(str(v) for v in config_mod.validate(final))
        if doc.plan is not None:
            plan_violations = validate_plan(final, doc.plan)
            failures.extend(str(v) for v in plan_violations)
            if not plan_violations:
                report = build_report(final, doc.plan)
                if not report.ample.verdict:
                    failures.append("ampleness certificate has a non-positive entry")

    if as_json:
        blob = {
            "violations": failures,
            "lints": lint_lines,
            "report": None if report is None else report.to_json(),
            "status": "pass" if not failures else "fail",
        }
        print(json.dumps(blob, indent=1), file=out)
    else:
        for line in lint_lines:
            print(line, file=out)
        if report is not None:
            print(report.to_text(), file=out)
        for f in failures:
            print(f"violation={f}", file=out)
        print(f"status={'pass' if not failures else 'fail'}", file=out)
    return EXIT_OK if not failures else EXIT_FAIL


def _cmd_verify(args, out) -> int:
    try:
        doc = _load_document(args.path)
    except QgsurfError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return _pipeline(doc, out, args.output == "json")


def _cmd_example(args, out) -> int:
    try:
        result = corpus.verify_example(args.name)
    except QgsurfError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.output == "json":
        blob = {
            "example": result.name,
            "passed": result.passed,
            "failures": result.failures,
            "independence_rank": result.independence_rank,
            "euler_deficit": result.euler_deficit,
            "report": None if result.report is None else result.report.to_json(),
        }
        print(json.dumps(blob, indent=1), file=out)
    else:
        print(f"example={result.name}", file=out)
        if result.independence_rank is not None:
            print(f"independence_rank={result.independence_rank}", file=out)
        if result.euler_deficit is not None:
            print(f"euler_deficit={result.euler_deficit}", file=out)
        if result.report is not None:
            print(result.report.to_text(), file=out)
        for f in result.failures:
            print(f"failure={f}", file=out)
        print(f"status={'pass' if result.passed else 'fail'}", file=out)
    return EXIT_OK if result.passed else EXIT_FAIL


def _cmd_verify_all(args, out) -> int:
    results = corpus.verify_all()
    if args.output == "json":
        blob = [
            {"example": r.name, "passed": r.passed, "failures": r.failures,
             "K2": None if r.report is None else str(r.report.K2_X),
             "indices": None if r.report is None else list(r.report.indices),
             "gcd": None if r.report is None else r.report.gcd_indices,
             "pi1": None if r.report is None else r.report.pi1_verdict}
            for r in results
        ]
        print(json.dumps(blob, indent=1), file=out)
    else:
        print(corpus.results_table(results), file=out)
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def _cmd_export_dot(args, out) -> int:
    try:
        doc = _load_document(args.path)
    except QgsurfError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print(config_mod.export_dot(doc.configuration), file=out, end="")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qgsurf",
        description="Exact verifier for chain-contraction surface constructions")
    parser.add_argument("--output", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="verify a configuration document")
    p.add_argument("path")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("example", help="verify one built-in example")
    p.add_argument("name")
    p.set_defaults(func=_cmd_example)

    p = sub.add_parser("verify-all", help="verify every built-in example")
    p.set_defaults(func=_cmd_verify_all)

    p = sub.add_parser("chain", help="analyze one linear chain b1,b2,...")
    p.add_argument("entries")
    p.set_defaults(func=_cmd_chain)

    p = sub.add_parser("enumerate-classT", help="list smoothable chains within bounds")
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--max-entry", type=int, required=True)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("export-dot", help="emit the configuration's dual graph")
    p.add_argument("path")
    p.set_defaults(func=_cmd_export_dot)
    return parser


def run(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except QgsurfError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
