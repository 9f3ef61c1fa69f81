"""Command-line front end.

Subcommands: norm, classify, scan, verify-lemmas.  Every invocation prints a
single JSON envelope {command, inputs, result, version} with floats at 17
significant digits, so output round-trips losslessly and identical flags give
byte-identical output.

Exit codes: 0 success, 2 usage/parse, 3 IO, 4 self-check failure (oracle gap
or lemma counterexample).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from . import __version__
from .forms import (
    NonFiniteInput,
    ScalarField,
    make_form,
    norm_complex_real_coeffs,
    norm_real,
)
from .geometry import Verdict, classify
from .oracle import oracle_norm_complex, oracle_norm_real
from .lemmas import verify_lemma_suite
from .ratios import ScanConfig, grid_scan

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_SELF_CHECK = 4

ORACLE_GAP_LIMIT = 1e-6


class _CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _format_value(v) -> str:
    if isinstance(v, float):
        return format(v, ".17g")
    if isinstance(v, bool) or v is None or isinstance(v, int):
        return json.dumps(v)
    if isinstance(v, str):
        return json.dumps(v)
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_format_value(x) for x in v) + "]"
    if isinstance(v, dict):
        items = (f"{json.dumps(str(k))}: {_format_value(x)}" for k, x in v.items())
        return "{" + ", ".join(items) + "}"
    return json.dumps(v)


def _emit(command: str, inputs: dict, result: dict) -> None:
    envelope = {
        "command": command,
        "inputs": inputs,
        "result": result,
        "version": __version__,
    }
    print(_format_value(envelope))


def _parse_coeffs(text: str, order: str):
    parts = text.split(",")
    if len(parts) != 4:
        raise _CliError(f"expected four comma-separated coefficients, got {text!r}", EXIT_USAGE)
    try:
        values = [float(p) for p in parts]
    except ValueError as exc:
        raise _CliError(f"bad coefficient in {text!r}: {exc}", EXIT_USAGE)
    if order == "matrix":
        # Row-major a11,a12,a21,a22 -> internal a11,a21,a12,a22.
        values = [values[0], values[2], values[1], values[3]]
    try:
        return make_form(*values)
    except NonFiniteInput as exc:
        raise _CliError(str(exc), EXIT_USAGE)


def _parse_field(text: str) -> ScalarField:
    return ScalarField.REAL if text == "real" else ScalarField.COMPLEX_REAL_COEFFS


def _norm_result_payload(res) -> dict:
    return {
        "value": res.value,
        "branch": res.branch.value,
        "critical_cos": res.critical_cos,
    }


def _cmd_norm(args) -> int:
    T = _parse_coeffs(args.coeffs, args.order)
    field = _parse_field(args.field)
    res = norm_real(T) if field is ScalarField.REAL else norm_complex_real_coeffs(T)
    result = {"field": field.value, "norm": _norm_result_payload(res)}
    code = EXIT_OK
    if args.oracle:
        oracle = (
            oracle_norm_real(T)
            if field is ScalarField.REAL
            else oracle_norm_complex(T)
        )
        gap = abs(res.value - oracle)
        result["oracle"] = {"value": oracle, "gap": gap}
        if gap > ORACLE_GAP_LIMIT:
            result["self_check"] = "failed"
            code = EXIT_SELF_CHECK
    _emit("norm", {"coeffs": list(T.as_tuple()), "field": field.value}, result)
    return code


def _cmd_classify(args) -> int:
    T = _parse_coeffs(args.coeffs, args.order)
    res = classify(T, tol=args.tol)
    payload: dict = {"verdict": res.verdict.value}
    if res.matched is not None:
        payload["matched"] = {
            "kind": res.matched.kind.value,
            "coeffs": list(res.matched.coeffs.as_tuple()),
            "sign_pattern": list(res.matched.sign_pattern),
        }
    if res.witness is not None:
        payload["witness"] = {
            "A": list(res.witness.A.as_tuple()),
            "B": list(res.witness.B.as_tuple()),
            "epsilon": res.witness.epsilon,
        }
    _emit("classify", {"coeffs": list(T.as_tuple()), "tol": args.tol}, payload)
    return EXIT_OK


def _cmd_scan(args) -> int:
    try:
        lo, hi = (float(p) for p in args.box.split(","))
    except ValueError:
        raise _CliError(f"bad box {args.box!r}, expected lo,hi", EXIT_USAGE)
    field = _parse_field(args.field)
    try:
        cfg = ScanConfig(step=args.step, box=(lo, hi), field=field)
    except ValueError as exc:
        raise _CliError(str(exc), EXIT_USAGE)

    csv_file = None
    writer = None
    hist = None
    if args.plot:
        from .plots import RatioHistogram

        hist = RatioHistogram()

    try:
        if args.csv:
            csv_file = open(args.csv, "w", newline="")
            writer = csv.writer(csv_file)
            writer.writerow(["a11", "a21", "a12", "a22", "norm", "ratio"])

        def on_chunk(coeffs, norms, ratios):
            if writer is not None:
                for row, n, r in zip(coeffs, norms, ratios):
                    writer.writerow(
                        [format(x, ".17g") for x in (*row, n, r)]
                    )
            if hist is not None:
                hist.add(ratios)

        report = grid_scan(cfg, on_chunk=on_chunk)
    except OSError as exc:
        raise _CliError(f"IO failure: {exc}", EXIT_IO)
    finally:
        if csv_file is not None:
            csv_file.close()

    try:
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(_format_value(report.to_dict()) + "\n")
        if args.plot:
            from .plots import render_scan_figure

            render_scan_figure(report, hist, args.plot)
    except OSError as exc:
        raise _CliError(f"IO failure: {exc}", EXIT_IO)

    result = {
        "max_ratio": report.max_ratio,
        "points_scanned": report.points_scanned,
        "argmax_count": len(report.argmax_list),
    }
    if len(report.argmax_list) <= 100:
        result["argmax"] = [list(c.as_tuple()) for c in report.argmax_list]
    _emit("scan", cfg.to_dict(), result)
    return EXIT_OK


def _cmd_verify_lemmas(args) -> int:
    if args.samples <= 0:
        raise _CliError("--samples must be positive", EXIT_USAGE)
    report = verify_lemma_suite(args.samples, args.seed, band=args.tol)
    _emit(
        "verify-lemmas",
        {"samples": args.samples, "seed": args.seed, "tol": args.tol},
        report,
    )
    return EXIT_OK if report["passed"] else EXIT_SELF_CHECK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="littlewood",
        description="Norms, ball geometry and Littlewood 4/3 ratios of 2x2 bilinear forms",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_coeffs(p):
        p.add_argument("--coeffs", required=True, help="a11,a21,a12,a22")
        p.add_argument("--order", choices=["standard", "matrix"], default="standard",
                       help="matrix accepts row-major a11,a12,a21,a22")

    p_norm = sub.add_parser("norm", help="closed-form operator norm of one form")
    add_coeffs(p_norm)
    p_norm.add_argument("--field", choices=["real", "complex"], default="real")
    p_norm.add_argument("--oracle", action="store_true",
                        help="also run the brute-force oracle and report the gap")
    p_norm.set_defaults(fn=_cmd_norm)

    p_cls = sub.add_parser("classify", help="extreme/exposed classification")
    add_coeffs(p_cls)
    p_cls.add_argument("--tol", type=float, default=1e-9)
    p_cls.set_defaults(fn=_cmd_classify)

    p_scan = sub.add_parser("scan", help="ratio grid scan over a coefficient box")
    p_scan.add_argument("--step", type=float, required=True)
    p_scan.add_argument("--box", default="-1,1", help="lo,hi for all four axes")
    p_scan.add_argument("--field", choices=["real", "complex"], default="real")
    p_scan.add_argument("--out", help="write the JSON scan report here")
    p_scan.add_argument("--csv", help="write per-point rows here")
    p_scan.add_argument("--plot", help="write a PNG ratio histogram here")
    p_scan.set_defaults(fn=_cmd_scan)

    p_lem = sub.add_parser("verify-lemmas", help="sample the appendix lemma equivalences")
    p_lem.add_argument("--samples", type=int, required=True)
    p_lem.add_argument("--seed", type=int, default=0)
    p_lem.add_argument("--tol", type=float, default=1e-9,
                       help="relative boundary band excluded from biconditional checks")
    p_lem.set_defaults(fn=_cmd_verify_lemmas)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
