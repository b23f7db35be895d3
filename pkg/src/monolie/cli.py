"""Command line interface.

Exit codes: 0 success, 1 semantic mismatch (failed round trip, ideals not
isomorphic), 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import sys

from .errors import IdealSyntaxError, MonolieError
from .ideals import MonomialIdeal, Vec
from .parsing import parse_ideal_source, render_ideal
from .random_ideals import random_full_finite_ideal
from .reconstruction import (
    RestrictedWeightData,
    iso_check,
    reconstruct_ideal,
    restricted_weight_data,
)
from .report import analyze, render_human, render_machine, staircase_diagram


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monolie",
        description="Weight data of derivation Lie algebras of finite monomial algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full weight-space analysis of one ideal")
    p.add_argument("ideal", help='generators, e.g. "y^3, x*y, x^3"')
    p.add_argument("--machine", action="store_true", help="line-oriented output")

    p = sub.add_parser("staircase", help="ASCII staircase diagram (n <= 2)")
    p.add_argument("ideal")

    p = sub.add_parser("roundtrip", help="reconstruct the ideal from its weight data")
    p.add_argument("ideal", nargs="?", help="omit when using --random")
    p.add_argument("--random", type=int, metavar="N", help="run N random ideals")
    p.add_argument("--n", type=int, default=2, help="ambient dimension for --random")
    p.add_argument("--max-exp", type=int, default=6, help="largest pure-power exponent")
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("isocheck", help="find a variable permutation matching two ideals")
    p.add_argument("first")
    p.add_argument("second")

    p = sub.add_parser("reconstruct", help="rebuild an ideal from a weights file")
    p.add_argument("--weights", required=True, metavar="FILE")

    return parser


def _roundtrip_once(ideal: MonomialIdeal) -> MonomialIdeal:
    return reconstruct_ideal(restricted_weight_data(ideal))


def cmd_analyze(args: argparse.Namespace) -> int:
    report = analyze(parse_ideal_source(args.ideal))
    print(render_machine(report) if args.machine else render_human(report))
    return 0


def cmd_staircase(args: argparse.Namespace) -> int:
    source = parse_ideal_source(args.ideal)
    print(staircase_diagram(source.ideal))
    return 0


def cmd_roundtrip(args: argparse.Namespace) -> int:
    if (args.ideal is None) == (args.random is None):
        raise IdealSyntaxError("give an ideal or --random N, not both", 0)
    if args.ideal is not None:
        source = parse_ideal_source(args.ideal)
        rebuilt = _roundtrip_once(source.ideal)
        if rebuilt == source.ideal:
            print("OK")
            return 0
        print(f"MISMATCH: analyzed {render_ideal(source.ideal, source.variables)}")
        print(f"          rebuilt  {render_ideal(rebuilt)}")
        return 1
    import random as _random

    rng = _random.Random(args.seed)
    for _ in range(args.random):
        ideal = random_full_finite_ideal(rng, args.n, args.max_exp)
        rebuilt = _roundtrip_once(ideal)
        if rebuilt != ideal:
            print(f"MISMATCH (seed {args.seed}): analyzed {render_ideal(ideal)}")
            print(f"          rebuilt  {render_ideal(rebuilt)}")
            return 1
    print(f"OK x{args.random} (seed {args.seed})")
    return 0


def cmd_isocheck(args: argparse.Namespace) -> int:
    first = parse_ideal_source(args.first).ideal
    second = parse_ideal_source(args.second).ideal
    sigma = iso_check(first, second)
    if sigma is None:
        print("not isomorphic")
        return 1
    print("isomorphic via permutation [" + " ".join(str(i + 1) for i in sigma) + "]")
    return 0


def read_weights_file(path: str) -> RestrictedWeightData:
    """Parse 'a1 a2 ... an dim' records; '#' starts a comment; blanks skipped."""
    with open(path, encoding="utf-8") as fh:
        raw_lines = fh.readlines()
    dims: dict[Vec, int] = {}
    n: int | None = None
    for lineno, raw in enumerate(raw_lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            nums = [int(t) for t in line.split()]
        except ValueError:
            raise IdealSyntaxError("weights file: non-integer token", lineno) from None
        if len(nums) < 2:
            raise IdealSyntaxError("weights file: expected 'a1 ... an dim'", lineno)
        if n is None:
            n = len(nums) - 1
        elif len(nums) - 1 != n:
            raise IdealSyntaxError(f"weights file: expected {n + 1} columns", lineno)
        degree, dim = tuple(nums[:-1]), nums[-1]
        if dim < 0:
            raise IdealSyntaxError("weights file: negative dimension", lineno)
        if degree in dims:
            raise IdealSyntaxError("weights file: duplicate degree", lineno)
        dims[degree] = dim
    if n is None:
        raise IdealSyntaxError("weights file: no records", 0)
    try:
        return RestrictedWeightData(n, dims)
    except ValueError as exc:
        raise IdealSyntaxError(f"weights file: {exc}", 0) from None


def cmd_reconstruct(args: argparse.Namespace) -> int:
    data = read_weights_file(args.weights)
    print(render_ideal(reconstruct_ideal(data)))
    return 0


_COMMANDS = {
    "analyze": cmd_analyze,
    "staircase": cmd_staircase,
    "roundtrip": cmd_roundtrip,
    "isocheck": cmd_isocheck,
    "reconstruct": cmd_reconstruct,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except MonolieError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
