"""Command-line interface.

Exit codes: 0 success (or bound certified), 2 usage or parse error,
3 majorant hypothesis violated, 4 internal invariant breach.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import bell
from .autonomous import autonomous_operator, flow_eval, flow_series, trajectory
from .closed_forms import Family, image_of_family, jet_of_family, family_label
from .majorant import (
    HypothesisViolation,
    MajorantSpec,
    bound_flow_eval,
    certify,
)
from .rings import RATIONALS, format_rational, parse_rational, ring_by_name
from .series import Jet, jet_from_json, jet_to_json

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_HYPOTHESIS = 3
EXIT_INVARIANT = 4

DEFAULT_MAX_ORDER = 64


class UsageError(Exception):
    pass


class InvariantBreach(Exception):
    pass


def max_order() -> int:
    raw = os.environ.get("HURWITZ_MAX_ORDER", str(DEFAULT_MAX_ORDER))
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"HURWITZ_MAX_ORDER must be an integer, got {raw!r}") from None
    if value < 1:
        raise UsageError("HURWITZ_MAX_ORDER must be positive")
    return value


def _check_size(name: str, n: int) -> None:
    if n < 1:
        raise UsageError(f"{name} must be >= 1, got {n}")
    cap = max_order()
    if n > cap:
        raise UsageError(f"{name} = {n} exceeds HURWITZ_MAX_ORDER = {cap}")


def _json_arg(text: str, what: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{what}: malformed JSON ({exc.msg})") from None


def _parse_list(text: str, ring, what: str) -> list:
    raw = _json_arg(text, what)
    if not isinstance(raw, list):
        raise UsageError(f"{what} must be a JSON list")
    try:
        return [ring.parse(v) for v in raw]
    except (ValueError, TypeError) as exc:
        raise UsageError(f"{what}: {exc}") from None


def _read_json_file(path: str, what: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {what} {path!r}: {exc.strerror}") from None
    return _json_arg(text, f"{what} {path!r}")


def _load_jet(path: str) -> Jet:
    try:
        return jet_from_json(_read_json_file(path, "jet file"))
    except (ValueError, TypeError, KeyError) as exc:
        raise UsageError(f"jet file {path!r}: {exc}") from None


def _parse_rationals_csv(text: str, what: str) -> list[Fraction]:
    try:
        return [parse_rational(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise UsageError(f"{what}: {exc}") from None


def _envelope(command: str, inputs: dict, result: dict, exact: bool = True) -> dict:
    return {"command": command, "inputs": inputs, "result": result, "exact": exact}


def _float(value) -> list[float]:
    """Float components of a ring value: ``[x]`` or ``[re, im]``."""
    if hasattr(value, "re"):
        return [float(value.re), float(value.im)]
    return [float(value)]


def _csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    buf.write("# inexact: float approximations of exact values\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def cmd_partitions(args) -> tuple[dict | str, int]:
    _check_size("n", args.n)
    if args.parts is not None and not (1 <= args.parts <= args.n):
        raise UsageError(f"--parts must lie in [1, {args.n}]")
    parts = bell.enumerate_partitions(args.n, args.parts)
    vectors = [list(p.multiplicities) for p in parts]
    if args.format == "csv":
        return _csv([f"j{i}" for i in range(1, args.n + 1)], vectors), EXIT_OK
    inputs = {"n": args.n, "parts": args.parts}
    return _envelope("partitions", inputs, {"count": len(vectors), "partitions": vectors}), EXIT_OK


def cmd_bell(args) -> tuple[dict | str, int]:
    _check_size("n", args.n)
    ring = ring_by_name(args.ring)
    b = _parse_list(args.b, ring, "--b")
    if not (1 <= args.k <= args.n):
        raise UsageError(f"--k must lie in [1, {args.n}]")
    if len(b) < args.n:
        raise UsageError(f"--b needs at least {args.n} values")
    value = bell.partial_bell(args.n, args.k, b)
    inputs = {"n": args.n, "k": args.k, "ring": ring.name, "b": [ring.format(v) for v in b]}
    if args.format == "csv":
        return _csv(["value"] if ring is RATIONALS else ["re", "im"], [_float(value)]), EXIT_OK
    return _envelope("bell", inputs, {"value": ring.format(value)}), EXIT_OK


def cmd_bell_complete(args) -> tuple[dict | str, int]:
    _check_size("n", args.n)
    ring = ring_by_name(args.ring)
    b = _parse_list(args.b, ring, "--b")
    a = _parse_list(args.a, ring, "--a")
    if len(b) < args.n or len(a) < args.n:
        raise UsageError(f"--b and --a need at least {args.n} values each")
    value = bell.complete_bell(args.n, b, a)
    inputs = {
        "n": args.n,
        "ring": ring.name,
        "b": [ring.format(v) for v in b],
        "a": [ring.format(v) for v in a],
    }
    if args.format == "csv":
        return _csv(["value"] if ring is RATIONALS else ["re", "im"], [_float(value)]), EXIT_OK
    return _envelope("bell-complete", inputs, {"value": ring.format(value)}), EXIT_OK


def _order_for(jet: Jet, order: int | None) -> int:
    if order is None:
        order = len(jet)
    _check_size("order", order)
    if order > len(jet):
        raise UsageError(f"order {order} needs {order} jet values, file has {len(jet)}")
    return order


def cmd_flow(args) -> tuple[dict | str, int]:
    jet = _load_jet(args.jet)
    ring = jet.ring
    order = _order_for(jet, args.order)
    try:
        base = ring.parse(_json_arg(args.base, "--base") if args.base.startswith("[") else args.base)
    except ValueError as exc:
        raise UsageError(f"--base: {exc}") from None
    ts = _parse_rationals_csv(args.eval, "--eval") if args.eval else []

    flow = flow_series(base, jet.values[:order], ring)
    sample = trajectory(flow, ts)

    if args.format == "csv":
        comps = ["value"] if ring is RATIONALS else ["re", "im"]
        if ts:
            rows = [[float(t), *_float(p)] for t, p in sample]
            return _csv(["t", *comps], rows), EXIT_OK
        rows = [[n, *_float(A)] for n, A in enumerate(flow.coeffs, start=1)]
        return _csv(["n", *comps], rows), EXIT_OK

    inputs = {
        "jet": jet_to_json(Jet(jet.values[:order], ring)),
        "order": order,
        "base": ring.format(base),
        "eval": [format_rational(t) for t in ts],
    }
    result = {"A": [ring.format(A) for A in flow.coeffs]}
    if ts:
        result["trajectory"] = [
            {"t": format_rational(t), "value": ring.format(p)} for t, p in sample
        ]
    return _envelope("flow", inputs, result), EXIT_OK


def cmd_oracle(args) -> tuple[dict | str, int]:
    order = args.order if args.order is not None else 5
    _check_size("order", order)
    try:
        spec = Family.parse(args.family, order)
    except ValueError as exc:
        raise UsageError(f"--family: {exc}") from None
    closed = image_of_family(spec)
    result = {"label": family_label(spec), "closed_form": [format_rational(v) for v in closed]}
    match = None
    if args.compare_recursion:
        rec = autonomous_operator(jet_of_family(spec)[:order])
        match = rec == closed
        result["recursion"] = [format_rational(v) for v in rec]
        result["match"] = match

    if args.format == "csv":
        header = ["n", "closed_form"] + (["recursion"] if args.compare_recursion else [])
        rows = []
        for i, v in enumerate(closed):
            row = [i + 1, float(v)]
            if args.compare_recursion:
                row.append(float(rec[i]))
            rows.append(row)
        out = _csv(header, rows)
    else:
        inputs = {"family": str(spec), "order": order, "compare_recursion": args.compare_recursion}
        out = _envelope("oracle", inputs, result)
    if match is False:
        raise InvariantBreach(out)
    return out, EXIT_OK


def cmd_bound(args) -> tuple[dict | str, int]:
    jet = _load_jet(args.jet)
    ring = jet.ring
    order = _order_for(jet, args.order)
    values = jet.values[:order]

    kind, _, param = args.majorant.partition(":")
    explicit = None
    if kind == "explicit":
        if not param:
            raise UsageError("explicit majorant needs a file: explicit:<path>")
        raw = _read_json_file(param, "majorant file")
        explicit = raw.get("values") if isinstance(raw, dict) else raw
        if not isinstance(explicit, list):
            raise UsageError("majorant file must hold a JSON list (or {\"values\": [...]})")
        spec_text = "explicit"
    else:
        spec_text = args.majorant
    try:
        spec = MajorantSpec.parse(spec_text, explicit)
    except ValueError as exc:
        raise UsageError(f"--majorant: {exc}") from None

    t = None
    if args.eval_t is not None:
        try:
            t = parse_rational(args.eval_t)
        except ValueError as exc:
            raise UsageError(f"--eval-t: {exc}") from None

    inputs = {
        "jet": jet_to_json(Jet(values, ring)),
        "majorant": args.majorant,
        "order": order,
        "eval_t": None if t is None else format_rational(t),
    }
    try:
        report = certify(values, spec, ring)
    except HypothesisViolation as exc:
        result = {
            "error": "hypothesis_violation",
            "message": str(exc),
            "index": exc.index,
            "norm": format_rational(exc.norm),
            "bound": format_rational(exc.bound),
        }
        return _envelope("bound", inputs, result), EXIT_HYPOTHESIS
    except ValueError as exc:
        raise UsageError(str(exc)) from None

    result = report.to_dict()
    if t is not None:
        try:
            bound_t = bound_flow_eval(report.bounds, t, spec)
        except ValueError as exc:
            raise UsageError(f"--eval-t: {exc}") from None
        flow = flow_series(ring.zero, values, ring)
        deviation = ring.norm(flow_eval(flow, t))
        result["eval"] = {
            "t": format_rational(t),
            "bound": format_rational(bound_t),
            "deviation_norm": format_rational(deviation),
            "holds": deviation <= bound_t,
        }
        if deviation > bound_t:
            raise InvariantBreach(_envelope("bound", inputs, result))

    if args.format == "csv":
        rows = [[r.n, float(r.actual_norm), float(r.bound), int(r.holds)] for r in report.per_n]
        out = _csv(["n", "actual_norm", "bound", "holds"], rows)
    else:
        out = _envelope("bound", inputs, result)
    if not report.overall:
        raise InvariantBreach(out)
    return out, EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv"], default="json")
    with_order = argparse.ArgumentParser(add_help=False)
    with_order.add_argument("--order", type=int, default=None)

    parser = argparse.ArgumentParser(
        prog="hurwitz",
        description="Exact Bell polynomials, autonomous flows and majorant bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("partitions", parents=[common], help="enumerate partitions of n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--parts", type=int)
    p.set_defaults(func=cmd_partitions)

    p = sub.add_parser("bell", parents=[common], help="partial Bell polynomial B(n,k)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--b", required=True, help="JSON list of b_1..b_n")
    p.add_argument("--ring", choices=["rational", "gaussian"], default="rational")
    p.set_defaults(func=cmd_bell)

    p = sub.add_parser("bell-complete", parents=[common], help="complete Bell polynomial Y_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--b", required=True, help="JSON list of b_1..b_n")
    p.add_argument("--a", required=True, help="JSON list of a_1..a_n")
    p.add_argument("--ring", choices=["rational", "gaussian"], default="rational")
    p.set_defaults(func=cmd_bell_complete)

    p = sub.add_parser("flow", parents=[common, with_order], help="truncated flow from a jet")
    p.add_argument("--jet", required=True, help="jet JSON file")
    p.add_argument("--base", default="0", help="initial condition x")
    p.add_argument("--eval", help="comma-separated t values, e.g. 0,1/4,1/2")
    p.set_defaults(func=cmd_flow)

    p = sub.add_parser("oracle", parents=[common, with_order], help="closed-form family images")
    p.add_argument("--family", required=True, help="exp:a | geom | binom:a")
    p.add_argument("--compare-recursion", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("bound", parents=[common, with_order], help="certify majorant bounds")
    p.add_argument("--jet", required=True, help="jet JSON file")
    p.add_argument("--majorant", required=True, help="exp:a | fact | binom:a | explicit:<file>")
    p.add_argument("--eval-t", help="evaluate the truncated majorant flow at t")
    p.set_defaults(func=cmd_bound)
    return parser


def _emit(out, stream) -> None:
    if isinstance(out, str):
        stream.write(out)
    else:
        stream.write(json.dumps(out, indent=2, ensure_ascii=False) + "\n")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out, code = args.func(args)
    except UsageError as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvariantBreach as exc:
        _emit(exc.args[0], sys.stdout)
        print(f"{parser.prog} {args.command}: internal invariant breach", file=sys.stderr)
        return EXIT_INVARIANT
    _emit(out, sys.stdout)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
