"""Command-line front end: evaluate, verify, tabulate, list constants.

Exit codes: 0 success, 1 verification failure, 2 usage error.  All numeric
text output uses 15 significant digits with '.' as the decimal separator;
JSON payloads use shortest round-trip floats, with non-finite values
serialized as the strings "inf"/"-inf"/"nan".
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .quadrature import (
    MENU,
    arccos_kernel_transform,
    arctan_arccot_integral,
    cot_kernel_integral,
    default_config,
    lemma4_transform,
    wallis_transform,
)
from .series import chi2, chi3, constants_table, li2, li3, ti2, ti3
from .suite import SUITE_VERSION, register_all, run

__all__ = ["main"]

SERIES_FUNCS = {
    "li2": li2,
    "li3": li3,
    "chi2": chi2,
    "chi3": chi3,
    "ti2": ti2,
    "ti3": ti3,
}

CONSTANT_INTEGRALS = ("cot3", "cot4", "atan-acot")


def _fmt(x: float) -> str:
    return f"{x:.15g}"


def _json_value(x: float | None):
    if x is None:
        return None
    if math.isfinite(x):
        return x
    if math.isnan(x):
        return "nan"
    return "inf" if x > 0 else "-inf"


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


# ---------------------------------------------------------------------------
# eval
# ---------------------------------------------------------------------------


def cmd_eval(args: argparse.Namespace) -> int:
    name = args.function
    needs_t = name not in CONSTANT_INTEGRALS
    if needs_t and args.t is None:
        print(f"error: function {name!r} requires an argument t", file=sys.stderr)
        return 2
    t = args.t
    cfg = default_config()

    try:
        if name in SERIES_FUNCS:
            value, err = SERIES_FUNCS[name](t), None
        elif name == "lemma4":
            value, err = lemma4_transform(t, cfg)
        elif name == "cot3":
            value, err = cot_kernel_integral(3, cfg)
        elif name == "cot4":
            value, err = cot_kernel_integral(4, cfg)
        elif name == "atan-acot":
            value, err = arctan_arccot_integral(cfg)
        elif name.startswith("W:") or name.startswith("K:"):
            tag = name[2:]
            if tag not in MENU:
                print(
                    f"error: unknown integrand {tag!r}; choose from {', '.join(sorted(MENU))}",
                    file=sys.stderr,
                )
                return 2
            transform = wallis_transform if name.startswith("W:") else arccos_kernel_transform
            value, err = transform(MENU[tag], t, cfg)
        else:
            print(f"error: unknown function {name!r}", file=sys.stderr)
            return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    if args.format == "json":
        payload = {
            "function": name,
            "t": t,
            "value": _json_value(value),
            "error_estimate": _json_value(err),
        }
        _emit(json.dumps(payload, indent=2) + "\n", args.output)
    else:
        lines = [_fmt(value)]
        if err is not None:
            lines.append(f"error-estimate {err:.3e}")
        _emit("\n".join(lines) + "\n", args.output)
    return 0


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def cmd_verify(args: argparse.Namespace) -> int:
    registry = register_all()
    ids = None if args.all or not args.ids else args.ids
    try:
        reports = run(ids=ids, registry=registry)
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return 2

    if args.format == "json":
        records = []
        for rep in reports:
            case = registry[rep.case_id]
            record = {
                "id": rep.case_id,
                "paper_anchor": case.paper_anchor,
                "worst_abs_error": _json_value(rep.worst_abs_error),
                "worst_point": _json_value(rep.worst_point),
                "tolerance": case.tolerance,
                "passed": rep.passed,
                "evaluations": rep.evaluations,
                "wall_time_s": rep.wall_time_s,
            }
            if rep.note is not None:
                record["note"] = rep.note
            records.append(record)
        payload = {"suite_version": SUITE_VERSION, "cases": records}
        _emit(json.dumps(payload, indent=2) + "\n", args.output)
    else:
        width = max(len(rep.case_id) for rep in reports)
        lines = []
        for rep in reports:
            case = registry[rep.case_id]
            status = "PASS" if rep.passed else "FAIL"
            line = (
                f"{rep.case_id:<{width}}  {status}  "
                f"worst {rep.worst_abs_error:+.3e}  tol {case.tolerance:.0e}"
            )
            if rep.note is not None:
                line += f"  [{rep.note}]"
            lines.append(line)
        passed = sum(rep.passed for rep in reports)
        lines.append(f"{passed}/{len(reports)} cases passed")
        _emit("\n".join(lines) + "\n", args.output)
    return 0 if all(rep.passed for rep in reports) else 1


# ---------------------------------------------------------------------------
# table
# ---------------------------------------------------------------------------


def cmd_table(args: argparse.Namespace) -> int:
    if args.function not in SERIES_FUNCS:
        print(
            f"error: unknown function {args.function!r}; choose from {', '.join(SERIES_FUNCS)}",
            file=sys.stderr,
        )
        return 2
    lo, hi, step = args.start, args.stop, args.step
    if not (0.0 <= lo <= hi <= 1.0) or not step > 0.0:
        print(
            f"error: need 0 <= from <= to <= 1 and step > 0, got from={lo}, to={hi}, step={step}",
            file=sys.stderr,
        )
        return 2
    fn = SERIES_FUNCS[args.function]
    eps = step * 1e-9
    rows = ["t,value"]
    k = 0
    while True:
        t = lo + k * step
        if t > hi + eps:
            break
        if abs(t - hi) <= eps:
            t = hi
        rows.append(f"{_fmt(t)},{_fmt(fn(t))}")
        if t == hi:
            break
        k += 1
    _emit("\n".join(rows) + "\n", args.output)
    return 0


# ---------------------------------------------------------------------------
# constants
# ---------------------------------------------------------------------------


def cmd_constants(args: argparse.Namespace) -> int:
    table = constants_table().as_dict()
    if args.format == "json":
        payload = {
            name: {"value": const.value, "provenance": const.provenance}
            for name, const in table.items()
        }
        _emit(json.dumps(payload, indent=2) + "\n", args.output)
    else:
        width = max(len(name) for name in table)
        lines = [
            f"{name:<{width}}  {_fmt(const.value):<22} {const.provenance}"
            for name, const in table.items()
        ]
        _emit("\n".join(lines) + "\n", args.output)
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dilogkit",
        description=(
            "Evaluate dilogarithm-family special functions and integral "
            "transforms, and verify the identity suite."
        ),
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p_eval = sub.add_parser("eval", help="evaluate a function or transform at t")
    p_eval.add_argument(
        "function",
        help=(
            "one of li2, li3, chi2, chi3, ti2, ti3, lemma4, cot3, cot4, "
            "atan-acot, W:<integrand>, K:<integrand>"
        ),
    )
    p_eval.add_argument("t", nargs="?", type=float, default=None, help="argument in [0, 1]")
    p_eval.add_argument("--format", choices=("text", "json"), default="text")
    p_eval.add_argument("--output", "-o", default=None, help="write to file instead of stdout")
    p_eval.set_defaults(func=cmd_eval)

    p_verify = sub.add_parser("verify", help="run the identity verification suite")
    p_verify.add_argument("ids", nargs="*", help="case ids to run (default: all)")
    p_verify.add_argument("--all", action="store_true", help="run every registered case")
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.add_argument("--output", "-o", default=None)
    p_verify.set_defaults(func=cmd_verify)

    p_table = sub.add_parser("table", help="CSV table of a series function")
    p_table.add_argument("function", help="one of li2, li3, chi2, chi3, ti2, ti3")
    p_table.add_argument("start", type=float, help="first t (>= 0)")
    p_table.add_argument("stop", type=float, help="last t (<= 1)")
    p_table.add_argument("step", type=float, help="grid step (> 0)")
    p_table.add_argument("--output", "-o", default=None)
    p_table.set_defaults(func=cmd_table)

    p_const = sub.add_parser("constants", help="print the reference constants")
    p_const.add_argument("--format", choices=("text", "json"), default="text")
    p_const.add_argument("--output", "-o", default=None)
    p_const.set_defaults(func=cmd_constants)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
