"""Command line interface.

Verbs: coeffs, count, check, check-all, scan, list.  Output formats: human
(default), json, csv.  Exit status: 0 all requested checks pass, 1 at least
one failed, 2 usage/input error, 3 internal error.  JSON and CSV payloads
are deterministic; the per-report elapsed_ms field in JSON is the one
designated exception (CSV omits it entirely).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import conjectures
from .registry import (
    UnknownCheckError,
    lookup,
    natural_key,
    registry as registry_records,
    run_all,
    run_check,
)
from .counting import (
    c_constant,
    class_number,
    count_N,
    count_t,
    count_t_prime,
    r3,
)
from .series import SeriesError
from .theta import n_series, phi, phi_neg, psi, t_prime_series

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


def _form_arg(text: str) -> tuple:
    try:
        parts = [int(p) for p in text.split(",") if p.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"form must be comma-separated integers, got {text!r}")
    if not parts:
        raise argparse.ArgumentTypeError("form needs at least one coefficient")
    if any(p < 1 for p in parts):
        raise argparse.ArgumentTypeError("coefficients must be >= 1")
    return tuple(parts)


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def _positive(text: str) -> int:
    value = _nonneg(text)
    if value == 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _negative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value >= 0:
        raise argparse.ArgumentTypeError("discriminant must be negative")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="theta-forge",
        description="Exact verification of theta-function identities and"
                    " triangular-number counting relations.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("human", "json", "csv"), default="human")

    p = sub.add_parser("coeffs", help="print series coefficients")
    p.add_argument("--series", required=True,
                   choices=("phi", "psi", "phi-neg", "n", "tprime"))
    p.add_argument("--precision", type=_nonneg, default=20)
    p.add_argument("--form", type=_form_arg, default=None,
                   help="comma-separated coefficients, required for n/tprime")
    add_format(p)

    p = sub.add_parser("count", help="print one representation count or constant")
    p.add_argument("--kind", choices=("N", "t", "tprime", "r3", "C", "h"), default="N")
    p.add_argument("--form", type=_form_arg, default=None)
    p.add_argument("--n", type=_nonneg, default=None)
    p.add_argument("--d", type=_negative, default=None,
                   help="negative discriminant, for --kind h")
    add_format(p)

    p = sub.add_parser("check", help="run one registry check by id")
    p.add_argument("id")
    p.add_argument("--precision", type=_positive, default=500)
    p.add_argument("--n-max", type=_nonneg, default=200)
    p.add_argument("--param-bound", type=_positive, default=7)
    add_format(p)

    p = sub.add_parser("check-all", help="run the whole registry")
    p.add_argument("--precision", type=_positive, default=500)
    p.add_argument("--n-max", type=_nonneg, default=200)
    p.add_argument("--param-bound", type=_positive, default=7)
    add_format(p)

    p = sub.add_parser("scan", help="scan a conjecture for counterexamples")
    p.add_argument("id", choices=conjectures.CONJECTURE_IDS)
    p.add_argument("--n-max", type=_positive, default=200)
    add_format(p)

    p = sub.add_parser("list", help="list registry ids with citations")
    add_format(p)

    return parser


# --- output helpers --------------------------------------------------------


def _emit_json(doc) -> None:
    print(json.dumps(doc, indent=2))


def _emit_csv(header, rows) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    sys.stdout.write(buf.getvalue())


def _report_rows(reports):
    for r in reports:
        d = r.to_dict()
        checked = d.get("checked", d.get("verified_count", ""))
        skipped = d.get("skipped", d.get("skipped_count", ""))
        yield [d["id"], d["kind"], d["status"], d.get("n_max"), d.get("precision"),
               d.get("param_bound"), checked, skipped, d["counterexample_total"]]


_REPORT_HEADER = ["id", "kind", "status", "n_max", "precision", "param_bound",
                  "checked", "skipped", "counterexample_total"]


def _human_report(r) -> str:
    d = r.to_dict()
    bits = []
    if d.get("checked", "") != "":
        bits.append(f"checked={d['checked']}")
    if d.get("verified_count") is not None:
        bits.append(f"verified={d['verified_count']}")
    if d.get("skipped") or d.get("skipped_count"):
        bits.append(f"skipped={d.get('skipped') or d.get('skipped_count')}")
    if d["counterexample_total"]:
        bits.append(f"counterexamples={d['counterexample_total']}")
        first = d["counterexamples"][0]
        bits.append(f"first: {first['params']} n={first['n']}"
                    f" lhs={first['lhs']} rhs={first['rhs']}")
    detail = ", ".join(bits)
    return f"{d['id']:<16} {d['status']:<19} {detail}"


def _finish_reports(reports, fmt) -> int:
    if fmt == "json":
        _emit_json({"reports": [r.to_dict() for r in reports]})
    elif fmt == "csv":
        _emit_csv(_REPORT_HEADER, _report_rows(reports))
    else:
        for r in reports:
            print(_human_report(r))
        n_pass = sum(1 for r in reports if r.status == "pass")
        n_fail = sum(1 for r in reports if r.status == "fail")
        n_skip = len(reports) - n_pass - n_fail
        print(f"# {n_pass} passed, {n_fail} failed, {n_skip} skipped")
    return EXIT_FAIL if any(r.status == "fail" for r in reports) else EXIT_PASS


# --- verb implementations --------------------------------------------------


def _run_coeffs(args) -> int:
    if args.series in ("n", "tprime") and args.form is None:
        print("coeffs: --form is required for n/tprime series", file=sys.stderr)
        return EXIT_USAGE
    if args.series == "phi":
        s = phi(args.precision)
    elif args.series == "psi":
        s = psi(args.precision)
    elif args.series == "phi-neg":
        s = phi_neg(args.precision)
    elif args.series == "n":
        s = n_series(args.form, args.precision)
    else:
        s = t_prime_series(args.form, args.precision)
    coeffs = list(s.coeffs)
    if args.format == "json":
        _emit_json({"series": args.series,
                    "form": list(args.form) if args.form else None,
                    "precision": args.precision, "coeffs": coeffs})
    elif args.format == "csv":
        _emit_csv(["n", "value"], [[n, c] for n, c in enumerate(coeffs)])
    else:
        for n, c in enumerate(coeffs):
            print(f"{n} {c}")
    return EXIT_PASS


def _run_count(args) -> int:
    kind = args.kind
    needs_form = kind in ("N", "t", "tprime", "C")
    if needs_form and args.form is None:
        print(f"count: --form is required for kind {kind}", file=sys.stderr)
        return EXIT_USAGE
    if kind in ("N", "t", "tprime", "r3") and args.n is None:
        print(f"count: --n is required for kind {kind}", file=sys.stderr)
        return EXIT_USAGE
    if kind == "h" and args.d is None:
        print("count: --d is required for kind h", file=sys.stderr)
        return EXIT_USAGE
    try:
        if kind == "N":
            value = count_N(args.form, args.n)
        elif kind == "t":
            value = count_t(args.form, args.n)
        elif kind == "tprime":
            value = count_t_prime(args.form, args.n)
        elif kind == "r3":
            value = r3(args.n)
        elif kind == "C":
            value = c_constant(args.form)
        else:
            value = class_number(args.d)
    except ValueError as exc:
        print(f"count: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "json":
        _emit_json({"kind": kind, "form": list(args.form) if args.form else None,
                    "n": args.n, "d": args.d, "value": value})
    elif args.format == "csv":
        key = args.n if args.n is not None else (args.d if args.d is not None else "")
        _emit_csv(["n", "value"], [[key, value]])
    else:
        print(value)
    return EXIT_PASS


def _run_check(args) -> int:
    record = lookup(args.id)
    report = run_check(record, precision=args.precision, n_max=args.n_max,
                       param_bound=args.param_bound)
    return _finish_reports([report], args.format)


def _run_check_all(args) -> int:
    reports = run_all(precision=args.precision, n_max=args.n_max,
                      param_bound=args.param_bound)
    return _finish_reports(reports, args.format)


def _run_scan(args) -> int:
    report = conjectures.scan(args.id, args.n_max)
    return _finish_reports([report], args.format)


def _run_list(args) -> int:
    records = sorted(registry_records(), key=lambda r: natural_key(r.id))
    from .catalog import FIXTURES

    if args.format == "json":
        _emit_json({
            "records": [{"id": r.id, "kind": r.kind, "citation": r.citation}
                        for r in records],
            "fixtures": [{"id": r.id, "kind": r.kind, "citation": r.citation}
                         for r in FIXTURES],
        })
    elif args.format == "csv":
        _emit_csv(["id", "kind", "citation"],
                  [[r.id, r.kind, r.citation] for r in records]
                  + [[r.id, r.kind, r.citation] for r in FIXTURES])
    else:
        for r in records:
            print(f"{r.id:<16} {r.kind:<17} {r.citation}")
        print("# fixtures (deliberately false, excluded from check-all):")
        for r in FIXTURES:
            print(f"{r.id:<16} {r.kind:<17} {r.citation}")
    return EXIT_PASS


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_PASS
    handlers = {
        "coeffs": _run_coeffs,
        "count": _run_count,
        "check": _run_check,
        "check-all": _run_check_all,
        "scan": _run_scan,
        "list": _run_list,
    }
    try:
        return handlers[args.verb](args)
    except (UnknownCheckError, KeyError) as exc:
        print(f"theta-forge: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SeriesError, OverflowError, MemoryError) as exc:
        print(f"theta-forge: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
