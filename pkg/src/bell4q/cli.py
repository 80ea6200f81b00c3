"""Command-line front end.

Exit codes: 0 success, 2 parse/usage error (bad flags or malformed spec
files), 3 domain error (syntactically fine but impossible values:
unnormalized parameters, failed internal cross-checks).
"""

from __future__ import annotations

import argparse
import json
import sys

from .bell import (
    lhv_bound_with_witness,
    quantum_value,
    reference_expression,
    reference_settings,
    spectral_cap,
    verify_stabilizers,
)
from .fileio import (
    ResolvedState,
    SpecFormatError,
    load_expression_file,
    load_settings_file,
    load_state_file,
    settings_to_spec,
    write_family_scan,
    write_tangle_curve,
)
from .quantum import ConsistencyError, NormalizationError
from .sampling import estimate_bell
from .seesaw import SeesawConfig, seesaw
from .states import NAMED_STATE_TAGS, GabcdParams, g_abcd, named_state
from .tangle import four_tangle, genuine_four_tangle

#: |value| must beat the LHV bound by this margin to count as a violation;
#: guards states sitting exactly on the bound against rounding noise.
VIOLATION_MARGIN = 1e-9


def _fmt(x) -> str:
    if isinstance(x, float):
        return format(x, ".17g")
    return str(x)


def _gabcd_values(text: str) -> tuple[float, float, float, float]:
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError(f"expected a,b,c,d (4 comma-separated reals), got {text!r}")
    try:
        values = tuple(float(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a,b,c,d as real numbers, got {text!r}")
    return values


def _add_state_flags(sub: argparse.ArgumentParser) -> None:
    group = sub.add_argument_group("state (exactly one required)")
    group.add_argument("--state", choices=NAMED_STATE_TAGS, help="named state tag")
    group.add_argument("--gabcd", type=_gabcd_values, metavar="a,b,c,d",
                       help="family parameters, must be normalized")
    group.add_argument("--state-file", metavar="PATH", help="JSON state spec")


def _add_expression_flags(sub: argparse.ArgumentParser, with_settings: bool) -> None:
    sub.add_argument("--expr-file", metavar="PATH", help="JSON expression spec")
    if with_settings:
        sub.add_argument("--settings-file", metavar="PATH", help="JSON settings spec")
    sub.add_argument("--paper", action="store_true",
                     help="use the built-in reference expression/settings (the default)")


def _add_output_flags(sub: argparse.ArgumentParser, with_json: bool = True) -> None:
    if with_json:
        sub.add_argument("--json", action="store_true", help="machine-readable output")
    sub.add_argument("--out", metavar="PATH", help="write output to a file instead of stdout")


def _resolve_state(args, parser: argparse.ArgumentParser) -> ResolvedState:
    given = [name for name, value in
             (("--state", args.state), ("--gabcd", args.gabcd), ("--state-file", args.state_file))
             if value is not None]
    if len(given) != 1:
        parser.error("exactly one of --state, --gabcd, --state-file is required")
    if args.state is not None:
        return ResolvedState(named_state(args.state), tag=args.state)
    if args.gabcd is not None:
        params = GabcdParams(*args.gabcd)
        return ResolvedState(g_abcd(params), params=params)
    return load_state_file(args.state_file)


def _resolve_expression(args, parser: argparse.ArgumentParser):
    expr_file = getattr(args, "expr_file", None)
    settings_file = getattr(args, "settings_file", None)
    if args.paper and (expr_file or settings_file):
        parser.error("--paper cannot be combined with --expr-file/--settings-file")
    expr = load_expression_file(expr_file) if expr_file else reference_expression()
    settings = load_settings_file(settings_file) if settings_file else reference_settings()
    return expr, settings


def _emit(args, payload: dict, text_lines: list[str], stream) -> None:
    if getattr(args, "json", False):
        stream.write(json.dumps(payload, indent=2) + "\n")
    else:
        for line in text_lines:
            stream.write(line + "\n")


def _verdict(abs_value: float, bound: float) -> str:
    return "VIOLATED" if abs_value > bound + VIOLATION_MARGIN else "NOT VIOLATED"


def _state_label(resolved: ResolvedState, args) -> str:
    if resolved.tag:
        return resolved.tag
    if resolved.params is not None:
        return "gabcd(" + ",".join(_fmt(v) for v in resolved.params.as_tuple()) + ")"
    return getattr(args, "state_file", None) or "raw"


def cmd_value(args, parser, stream) -> int:
    resolved = _resolve_state(args, parser)
    expr, settings = _resolve_expression(args, parser)
    value = quantum_value(resolved.state, expr, settings)
    bound, _ = lhv_bound_with_witness(expr)
    payload = {
        "state": _state_label(resolved, args),
        "value": value,
        "abs_value": abs(value),
        "lhv_bound": bound,
        "algebraic_cap": expr.algebraic_cap,
        "spectral_cap": spectral_cap(expr, settings),
        "verdict": _verdict(abs(value), bound),
    }
    lines = [f"{key}: {_fmt(val)}" for key, val in payload.items()]
    _emit(args, payload, lines, stream)
    return 0


def cmd_lhv(args, parser, stream) -> int:
    expr, _ = _resolve_expression(args, parser)
    bound, witness = lhv_bound_with_witness(expr)
    payload = {
        "lhv_bound": bound,
        "algebraic_cap": expr.algebraic_cap,
        "n_terms": expr.n_terms,
        "witness_signs": list(witness.signs),
        "witness_value": witness.evaluate(expr),
    }
    lines = [
        f"lhv_bound: {_fmt(bound)}",
        f"algebraic_cap: {_fmt(expr.algebraic_cap)}",
        f"n_terms: {expr.n_terms}",
        f"witness_signs: {' '.join(f'{s:+d}' for s in witness.signs)}",
        f"witness_value: {_fmt(witness.evaluate(expr))}",
    ]
    _emit(args, payload, lines, stream)
    return 0


def cmd_scan(args, parser, stream) -> int:
    if args.grid < 2:
        parser.error("--grid must be >= 2")
    write_family_scan(stream, args.grid)
    return 0


def cmd_curve(args, parser, stream) -> int:
    if args.grid < 2:
        parser.error("--grid must be >= 2")
    write_tangle_curve(stream, args.grid)
    return 0


def cmd_optimize(args, parser, stream) -> int:
    resolved = _resolve_state(args, parser)
    expr, _ = _resolve_expression(args, parser)
    config = SeesawConfig(restarts=args.restarts, seed=args.seed)
    result = seesaw(resolved.state, expr, config)
    bound, _ = lhv_bound_with_witness(expr)
    payload = {
        "state": _state_label(resolved, args),
        "best_value": result.best_value,
        "lhv_bound": bound,
        "algebraic_cap": expr.algebraic_cap,
        "verdict": _verdict(result.best_value, bound),
        "converged": result.converged,
        "iterations_used": result.iterations_used,
        "winning_sign": result.winning_sign,
        "restart_index": result.restart_index,
        "restarts": args.restarts,
        "seed": args.seed,
        "best_settings": settings_to_spec(result.best_settings),
    }
    lines = [
        f"state: {payload['state']}",
        f"best_value: {_fmt(result.best_value)}",
        f"lhv_bound: {_fmt(bound)}",
        f"algebraic_cap: {_fmt(expr.algebraic_cap)}",
        f"verdict: {payload['verdict']}",
        f"converged: {result.converged}",
        f"iterations_used: {result.iterations_used}",
        f"winning_sign: {result.winning_sign:+d}",
        f"restart_index: {result.restart_index}",
    ]
    for name, triple in payload["best_settings"].items():
        lines.append(f"{name}: {' '.join(_fmt(c) for c in triple)}")
    if args.trace:
        payload["value_trace"] = [float(v) for v in result.value_trace]
        lines.append("value_trace:")
        lines.extend(f"  {i}: {_fmt(float(v))}" for i, v in enumerate(result.value_trace))
    _emit(args, payload, lines, stream)
    return 0


def cmd_sample(args, parser, stream) -> int:
    if args.shots < 2:
        parser.error("--shots must be >= 2")
    resolved = _resolve_state(args, parser)
    expr, settings = _resolve_expression(args, parser)
    estimate = estimate_bell(resolved.state, expr, settings, args.shots, args.seed)
    exact = quantum_value(resolved.state, expr, settings)
    bound, _ = lhv_bound_with_witness(expr)
    payload = {
        "state": _state_label(resolved, args),
        "estimate": estimate.value,
        "stderr": estimate.stderr,
        "abs_estimate": abs(estimate.value),
        "shots_per_term": estimate.shots_per_term,
        "seed": args.seed,
        "exact_value": exact,
        "lhv_bound": bound,
        "verdict": _verdict(abs(estimate.value), bound),
    }
    lines = [f"{key}: {_fmt(val)}" for key, val in payload.items()]
    _emit(args, payload, lines, stream)
    return 0


def cmd_stabilizers(args, parser, stream) -> int:
    resolved = _resolve_state(args, parser)
    checks = verify_stabilizers(resolved.state)
    rows = []
    for check in checks:
        rows.append({
            "string": check.string,
            "expected_sign": check.expected_sign,
            "sign": check.sign,
            "residual": check.residual,
            "pass": check.sign == check.expected_sign,
        })
    payload = {
        "state": _state_label(resolved, args),
        "checks": rows,
        "all_pass": all(r["pass"] for r in rows),
    }
    lines = [f"state: {payload['state']}"]
    for r in rows:
        sign = "none" if r["sign"] is None else f"{r['sign']:+d}"
        status = "pass" if r["pass"] else "FAIL"
        lines.append(
            f"{r['string']}  expected {r['expected_sign']:+d}  got {sign:>4}  "
            f"residual {r['residual']:.3e}  {status}"
        )
    lines.append(f"all_pass: {payload['all_pass']}")
    _emit(args, payload, lines, stream)
    return 0


def cmd_tangle(args, parser, stream) -> int:
    resolved = _resolve_state(args, parser)
    payload = {
        "state": _state_label(resolved, args),
        "tau4": four_tangle(resolved.state),
    }
    if resolved.params is not None:
        payload["tau48"] = genuine_four_tangle(resolved.params)
    lines = [f"{key}: {_fmt(val)}" for key, val in payload.items()]
    _emit(args, payload, lines, stream)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bell4q",
        description="Four-qubit Bell-type inequality toolkit: correlator values, "
                    "LHV bounds, tangles, setting optimization, shot sampling.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("value", help="quantum value of an expression on a state")
    _add_state_flags(p)
    _add_expression_flags(p, with_settings=True)
    _add_output_flags(p)
    p.set_defaults(handler=cmd_value)

    p = sub.add_parser("lhv", help="LHV bound of an expression by exhaustive enumeration")
    _add_expression_flags(p, with_settings=False)
    _add_output_flags(p)
    p.set_defaults(handler=cmd_lhv)

    p = sub.add_parser("scan", help="CSV a,b,value over the family parameter disk")
    p.add_argument("--grid", type=int, default=201, metavar="N", help="grid resolution per axis")
    _add_output_flags(p, with_json=False)
    p.set_defaults(handler=cmd_scan)

    p = sub.add_parser("curve", help="CSV tau,value along the a,b family arc")
    p.add_argument("--grid", type=int, default=1001, metavar="N", help="number of samples")
    _add_output_flags(p, with_json=False)
    p.set_defaults(handler=cmd_curve)

    p = sub.add_parser("optimize", help="seesaw-optimize measurement settings")
    _add_state_flags(p)
    _add_expression_flags(p, with_settings=False)
    p.add_argument("--restarts", type=int, default=20, metavar="N")
    p.add_argument("--seed", type=int, default=0, metavar="N")
    p.add_argument("--trace", action="store_true", help="include the per-sweep value trace")
    _add_output_flags(p)
    p.set_defaults(handler=cmd_optimize)

    p = sub.add_parser("sample", help="finite-statistics estimate by Born-rule sampling")
    _add_state_flags(p)
    _add_expression_flags(p, with_settings=True)
    p.add_argument("--shots", type=int, default=100_000, metavar="N", help="shots per term")
    p.add_argument("--seed", type=int, default=0, metavar="N")
    _add_output_flags(p)
    p.set_defaults(handler=cmd_sample)

    p = sub.add_parser("stabilizers", help="test the 16 Pauli strings on a state")
    _add_state_flags(p)
    _add_output_flags(p)
    p.set_defaults(handler=cmd_stabilizers)

    p = sub.add_parser("tangle", help="four-tangle of a state (and tau48 for --gabcd)")
    _add_state_flags(p)
    _add_output_flags(p)
    p.set_defaults(handler=cmd_tangle)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out_path = getattr(args, "out", None)
    try:
        if out_path:
            with open(out_path, "w", encoding="utf-8") as stream:
                return args.handler(args, parser, stream)
        return args.handler(args, parser, sys.stdout)
    except SpecFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (NormalizationError, ConsistencyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
