"""Command-line front end.

Subcommands:
    eval  EXPR            evaluate a soft-number expression
    prob  DIST QUERY      soft probability of a distribution event
    check [--seed --perturb --tolerance]
                          run the geometry verification suites
    mesh  [--surface --R --res NxM --format --out]
                          export a strip mesh plus its manifest

Exit codes: 0 success, 1 check failure, 2 usage or parse error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import checks
from .expr import evaluate
from .geometry import Surface, generate_mesh
from .meshfile import write_mesh
from .prob import parse_distribution, ps_eq, ps_interval, ps_leq, ps_lt
from .textform import format_soft_number

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3


def _parse_resolution(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"(\d+)x(\d+)", text)
    if m is None:
        raise argparse.ArgumentTypeError(f"resolution must look like 1000x1000, got {text!r}")
    res = (int(m.group(1)), int(m.group(2)))
    if res[0] < 2 or res[1] < 2:
        raise argparse.ArgumentTypeError("resolution components must be >= 2")
    return res


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="softnum",
        description="Soft-number arithmetic, soft probability, and strip geometry tools.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate a soft-number expression")
    p_eval.add_argument("expression")

    p_prob = sub.add_parser("prob", help="soft probability of an event")
    p_prob.add_argument("distribution", help="uniform(lo,hi) | exp(rate) | normal(mean,stddev)")
    p_prob.add_argument("query", help="'<= x' | '< x' | '= x' | 'in (a,b]'")

    p_check = sub.add_parser("check", help="run the geometry verification suites")
    p_check.add_argument("--seed", type=int, default=0)
    p_check.add_argument("--perturb", type=float, default=0.0,
                         help="offset the far seam angle (negative control)")
    p_check.add_argument("--tolerance", type=float, default=None,
                         help="override every suite tolerance (also: SOFTNUM_TOLERANCE)")
    p_check.add_argument("--R", dest="radius", type=float, default=10.0)

    p_mesh = sub.add_parser("mesh", help="export a strip mesh")
    p_mesh.add_argument("--surface", choices=[s.value for s in Surface], default="mobius")
    p_mesh.add_argument("--R", dest="radius", type=float, default=10.0)
    p_mesh.add_argument("--res", type=_parse_resolution, default=(1000, 1000),
                        metavar="NxM", help="grid resolution, default 1000x1000")
    p_mesh.add_argument("--format", choices=["csv", "obj"], default="csv")
    p_mesh.add_argument("--out", default=None, help="output path (default mesh.<format>)")

    return parser


_QUERY_RE = re.compile(
    r"^\s*(?:(<=|<|=)\s*(?P<x>\S+)|in\s*\(\s*(?P<a>[^,\s]+)\s*,\s*(?P<b>[^\]\s]+)\s*\])\s*$"
)


def _run_prob(dist_text: str, query_text: str) -> str:
    d = parse_distribution(dist_text)
    m = _QUERY_RE.match(query_text)
    if m is None:
        raise ValueError(
            f"unrecognized query {query_text!r}; expected '<= x', '< x', '= x' or 'in (a,b]'"
        )
    if m.group(1) is not None:
        x = float(m.group("x"))
        op = m.group(1)
        result = {"<=": ps_leq, "<": ps_lt, "=": ps_eq}[op](d, x)
    else:
        result = ps_interval(d, float(m.group("a")), float(m.group("b")))
    text = format_soft_number(result.value)
    payload = json.dumps({"soft": result.soft, "real": result.real})
    return f"{text}\n{payload}"


def _run_mesh(args: argparse.Namespace) -> str:
    mesh = generate_mesh(Surface(args.surface), args.radius, args.res)
    out = args.out if args.out is not None else f"mesh.{args.format}"
    manifest = write_mesh(mesh, out, args.format)
    return (
        f"wrote {out} ({manifest.vertexCount} vertices, {manifest.format})\n"
        f"manifest: {out}.manifest.json\n"
        f"checksum: {manifest.checksum}"
    )


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "eval":
            print(format_soft_number(evaluate(args.expression)))
            return EXIT_OK
        if args.command == "prob":
            print(_run_prob(args.distribution, args.query))
            return EXIT_OK
        if args.command == "check":
            report = checks.run_all(
                seed=args.seed,
                perturb=args.perturb,
                tolerance=args.tolerance,
                radius=args.radius,
            )
            sys.stdout.write(report.render())
            return EXIT_OK if report.passed else EXIT_CHECK_FAILED
        if args.command == "mesh":
            print(_run_mesh(args))
            return EXIT_OK
        raise AssertionError(f"unhandled command {args.command}")
    except OSError as err:
        print(f"softnum: I/O error: {err}", file=sys.stderr)
        return EXIT_IO
    except (ValueError, ZeroDivisionError, OverflowError) as err:
        print(f"softnum: {err}", file=sys.stderr)
        return EXIT_USAGE


def entrypoint() -> None:
    sys.exit(main())
