"""Command-line surface: fragment export, verification, line and window
comparisons.

Exit codes: 0 success, 1 usage error, 2 verification failure or resource
cap.  Output goes to --out when given, stdout otherwise, and is byte-stable
across runs.
"""

from __future__ import annotations

import argparse
import json
import sys

from .rootsystem import GroupId
from .fragment import ResourceLimitError, generate
from .lineanalysis import (
    Window1D,
    deficiencies_1d,
    levels,
    mn_nn,
    sigma_1d,
)
from .cutproject import deficiencies_2d, sigma_2d
from .checks import check_names, run_checks
from .serialize import (
    fragment_csv,
    fragment_json,
    fragment_svg,
    line_report_csv,
    line_report_json,
)

USAGE_ERROR = 1
CHECK_ERROR = 2


class _CliParser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse default exits 2; usage is 1 here
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        sys.exit(USAGE_ERROR)


def _bool_flag(value: str) -> bool:
    lowered = value.lower()
    if lowered in ("true", "1", "yes"):
        return True
    if lowered in ("false", "0", "no"):
        return False
    raise argparse.ArgumentTypeError(f"expected true/false, got {value!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = _CliParser(prog="quasih")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="export a fragment as csv, json or svg")
    gen.add_argument("--group", required=True, choices=[g.value for g in GroupId])
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--format", default="csv", choices=["csv", "json", "svg"])
    gen.add_argument("--out")
    gen.add_argument("--normalize", type=_bool_flag, default=True)
    gen.add_argument("--cap", type=int, default=10_000_000)

    ver = sub.add_parser("verify", help="run the verification suite")
    ver.add_argument("--only", choices=list(check_names()))
    ver.add_argument("--coeff-bound", type=int, default=3)
    ver.add_argument("--out")

    line = sub.add_parser("line", help="one-dimensional section and deficiencies")
    line.add_argument("--n", type=int, required=True)
    line.add_argument("--format", default="json", choices=["csv", "json"])
    line.add_argument("--out")

    cmp_ = sub.add_parser("compare", help="two-dimensional cut-and-project comparison")
    cmp_.add_argument("--group", default="h2", choices=["h2"])
    cmp_.add_argument("--n", type=int, required=True)
    cmp_.add_argument("--out")
    return parser


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_generate(args) -> int:
    group = GroupId(args.group)
    if args.n < 0:
        sys.stderr.write("error: --n must be non-negative\n")
        return USAGE_ERROR
    if args.format == "svg" and group is not GroupId.H2:
        sys.stderr.write("error: svg output is only available for --group h2\n")
        return USAGE_ERROR
    try:
        fragment = generate(group, args.n, cap=args.cap)
    except ResourceLimitError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return CHECK_ERROR
    if args.format == "csv":
        _emit(fragment_csv(fragment, args.normalize), args.out)
    elif args.format == "json":
        _emit(fragment_json(fragment, args.normalize), args.out)
    else:
        _emit(fragment_svg(fragment, args.normalize), args.out)
    return 0


def cmd_verify(args) -> int:
    results = run_checks(only=args.only, coeff_bound=args.coeff_bound)
    report = {
        "passed": all(r.passed for r in results),
        "checks": [
            {
                "name": r.name,
                "passed": r.passed,
                "elapsed": round(r.elapsed, 3),
                "details": r.details,
            }
            for r in results
        ],
    }
    _emit(json.dumps(report, indent=2) + "\n", args.out)
    if not report["passed"]:
        failing = ", ".join(r.name for r in results if not r.passed)
        sys.stderr.write(f"verification failed: {failing}\n")
        return CHECK_ERROR
    return 0


def cmd_line(args) -> int:
    if args.n < 1:
        sys.stderr.write("error: --n must be positive\n")
        return USAGE_ERROR
    n = args.n
    window = Window1D.symmetric(n)
    sigma = sigma_1d(window, window)
    m_n, n_n = mn_nn(n)
    values = []
    for level, members in levels(n):
        for v in members:
            values.append({"value": str(v), "level": level, "float": v.embed()})
    values.sort(key=lambda e: e["float"])
    doc = {
        "n": n,
        "m_n": m_n,
        "n_n": n_n,
        "count": len(values),
        "sigma_count": len(sigma),
        "values": values,
        "deficiencies": [
            {"value": str(v), "float": v.embed()} for v in deficiencies_1d(n)
        ],
    }
    text = line_report_json(doc) if args.format == "json" else line_report_csv(doc)
    _emit(text, args.out)
    return 0


def cmd_compare(args) -> int:
    if args.n < 1:
        sys.stderr.write("error: --n must be positive\n")
        return USAGE_ERROR
    n = args.n
    sigma = sigma_2d(n)
    fragment = generate(GroupId.H2, n)
    defic = deficiencies_2d(n)
    doc = {
        "group": args.group,
        "n": n,
        "fragment_count": fragment.size,
        "sigma_count": sigma.size,
        "deficiency_count": len(defic),
        "deficiencies": [str(x) for x in defic],
    }
    _emit(json.dumps(doc, indent=2) + "\n", args.out)
    return 0


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handler = {
        "generate": cmd_generate,
        "verify": cmd_verify,
        "line": cmd_line,
        "compare": cmd_compare,
    }[args.command]
    return handler(args)


if __name__ == "__main__":
    sys.exit(main())
