"""``genquat`` command line.

    genquat <mul|exp|log|table|verify> [--alpha R] [--beta R]
            [--format text|json] [--rel-tol R] [--abs-tol R]
            [--seed N] [--samples N] [operands...]

Elements are written ``a1,a2,a3,a4``; a JSON object printed by
``--format json`` is accepted as an operand too.  Exit codes: 0 success,
1 domain error, 2 usage or parse error, 3 verification failure.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Sequence

from .algebra import AlgebraParams, GQuat, cayley_table, mul
from .closed_form import exp_gq, log_with_branch
from .errors import GenQuatError, ParamsMismatch
from .oracle import ToleranceConfig
from .verification import run_battery

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2, 3

_ARITY = {"mul": 2, "exp": 1, "log": 1, "table": 0, "verify": 0}


class UsageError(Exception):
    pass


def format_number(x: float) -> str:
    """Shortest round-tripping decimal, without a trailing ``.0``."""
    text = repr(float(x))
    return text[:-2] if text.endswith(".0") else text


def _json_number(x: float) -> str:
    return format(float(x), ".17g")


def to_json(q: GQuat, branch: str = "n/a") -> str:
    coeffs = ",".join(_json_number(c) for c in q.coeffs)
    return (f'{{"alpha":{_json_number(q.params.alpha)},"beta":{_json_number(q.params.beta)},'
            f'"coeffs":[{coeffs}],"branch":"{branch}"}}')


def to_text(q: GQuat) -> str:
    return ",".join(format_number(c) for c in q.coeffs)


def _finite(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise UsageError(f"not a number: {text!r}") from None
    if not math.isfinite(value):
        raise UsageError(f"not a finite number: {text!r}")
    return value


def parse_element(text: str, params: AlgebraParams) -> GQuat:
    """Parse ``a1,a2,a3,a4`` or a JSON element object."""
    if text.lstrip().startswith("{"):
        try:
            obj = json.loads(text)
            coeffs = [_finite(str(c)) for c in obj["coeffs"]]
        except (ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"malformed JSON element: {exc}") from None
        if len(coeffs) != 4:
            raise UsageError("JSON element needs exactly four coefficients")
        if "alpha" in obj or "beta" in obj:
            given = AlgebraParams(_finite(str(obj.get("alpha", params.alpha))),
                                  _finite(str(obj.get("beta", params.beta))))
            if given != params:
                raise ParamsMismatch(f"operand is in {given}, command uses {params}")
        return GQuat(*coeffs, params)
    parts = text.split(",")
    if len(parts) != 4 or any(p != p.strip() or not p for p in parts):
        raise UsageError(f"element must be 'a1,a2,a3,a4' without spaces, got {text!r}")
    return GQuat(*(_finite(p) for p in parts), params)


def _table_entry(c: float, k: int) -> str:
    if c == 0:
        return "0"
    if c == 1:
        return f"e{k}"
    if c == -1:
        return f"-e{k}"
    return f"{format_number(c)}*e{k}"


def render_table(params: AlgebraParams, fmt: str) -> str:
    table = cayley_table(params)
    if fmt == "json":
        rows = [[{"coeff": float(c), "basis": k} for c, k in row] for row in table]
        return json.dumps({"alpha": params.alpha, "beta": params.beta, "table": rows})
    cells = [["", "e1", "e2", "e3", "e4"]]
    for i, row in enumerate(table, start=1):
        cells.append([f"e{i}"] + [_table_entry(c, k) for c, k in row])
    width = max(len(c) for row in cells for c in row)
    return "\n".join("  ".join(c.rjust(width) for c in row) for row in cells)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="genquat",
        description="Arithmetic, exp and log of generalized quaternions H(alpha, beta).")
    parser.add_argument("command", choices=sorted(_ARITY))
    parser.add_argument("operands", nargs="*", help="elements a1,a2,a3,a4")
    parser.add_argument("--alpha", type=float, default=None, help="default 1 (verify: grid)")
    parser.add_argument("--beta", type=float, default=None, help="default 1 (verify: grid)")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--rel-tol", type=float, default=ToleranceConfig.rel_tol,
                        help="round-trip relative tolerance for verify")
    parser.add_argument("--abs-tol", type=float, default=ToleranceConfig.abs_tol,
                        help="round-trip absolute tolerance for verify")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--samples", type=int, default=1000)
    return parser


def _split_operands(argv: Sequence[str]) -> list[str]:
    # "-1,0,0,0" would otherwise be taken for an option
    if "--" in argv:
        return list(argv)
    elements = [a for a in argv if "," in a or a.lstrip().startswith("{")]
    rest = [a for a in argv if a not in elements]
    return rest + (["--"] + elements if elements else [])


def _verify(args, fmt: str, out) -> int:
    try:
        cfg = ToleranceConfig(args.rel_tol, args.abs_tol)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.samples < 1:
        raise UsageError("--samples must be >= 1")
    params = None
    if args.alpha is not None or args.beta is not None:
        params = AlgebraParams(1.0 if args.alpha is None else args.alpha,
                               1.0 if args.beta is None else args.beta)
    results = run_battery(args.samples, args.seed, cfg, params)
    ok = all(r.passed for r in results)
    if fmt == "json":
        print(json.dumps({
            "passed": ok,
            "seed": args.seed,
            "samples": args.samples,
            "checks": [{"name": r.name, "passed": r.passed, "measured": r.measured,
                        "relation": r.relation, "tolerance": r.tolerance, "cases": r.cases}
                       for r in results],
        }), file=out)
    else:
        for r in results:
            print(r.line(), file=out)
        print(f"{sum(r.passed for r in results)}/{len(results)} checks passed", file=out)
    return EXIT_OK if ok else EXIT_VERIFY


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_intermixed_args(_split_operands(argv))
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE

    try:
        for name in ("alpha", "beta", "rel_tol", "abs_tol"):
            value = getattr(args, name)
            if value is not None and not math.isfinite(value):
                raise UsageError(f"--{name.replace('_', '-')} must be finite")
        if len(args.operands) != _ARITY[args.command]:
            raise UsageError(f"{args.command} takes {_ARITY[args.command]} operand(s), "
                             f"got {len(args.operands)}")
        if args.command == "verify":
            return _verify(args, args.format, sys.stdout)

        params = AlgebraParams(1.0 if args.alpha is None else args.alpha,
                               1.0 if args.beta is None else args.beta)
        if args.command == "table":
            print(render_table(params, args.format))
            return EXIT_OK
        xs = [parse_element(op, params) for op in args.operands]
        branch = "n/a"
        if args.command == "mul":
            result = mul(*xs)
        elif args.command == "exp":
            result = exp_gq(xs[0])
        else:
            result, b = log_with_branch(xs[0])
            branch = b.value
    except UsageError as exc:
        print(f"genquat: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GenQuatError as exc:
        print(f"genquat: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN

    if args.format == "json":
        print(to_json(result, branch))
    elif args.command == "log":
        print(f"{to_text(result)} ({branch})")
    else:
        print(to_text(result))
    return EXIT_OK


def run() -> None:
    sys.exit(main())
