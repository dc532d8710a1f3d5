"""Command-line interface.

Subcommands read an ideal file (header ``n k``, then k exponent rows) and
write results to standard output: ``msm`` and ``decom`` emit one exponent
row per element, ``alexdual`` and ``genrandom`` emit a full ideal file,
``codim`` a single integer and ``optimize`` the best value and a witness
row. Exit codes: 0 success, 1 usage or input error, 2 infeasible optimize.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .decomposition import (
    alexander_dual,
    components_to_dual,
    stream_decomposition,
    stream_msm,
)
from .engine import EngineStats
from .formats import (
    ParseError,
    format_ideal,
    format_row,
    parse_exponent_vector,
    parse_ideal,
    parse_weight_vector,
)
from .ideal import MonomialIdeal
from .idp import LinearObjective, codimension, solve_linear_idp
from .monomial import divides
from .oracle import brute_force_decomposition, brute_force_msm
from .random_ideals import random_ideal
from .strategies import DEFAULT_STRATEGY, STRATEGY_IDS


class _CliError(Exception):
    def __init__(self, message: str, code: int = 1):
        super().__init__(message)
        self.code = code


class _Parser(argparse.ArgumentParser):
    # usage problems exit 1; argparse's default of 2 is reserved for
    # infeasible optimization
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _nonnegative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(
            f"expected a non-negative integer, got {text}"
        )
    return value


def _add_run_options(p: argparse.ArgumentParser, *, bound_flag: bool = False) -> None:
    p.add_argument(
        "--split",
        default=DEFAULT_STRATEGY,
        metavar="NAME",
        help=f"split strategy: one of {', '.join(STRATEGY_IDS)} (default median)",
    )
    p.add_argument(
        "--engine",
        choices=("slice", "brute"),
        default="slice",
        help="slice engine or the exhaustive reference scan",
    )
    p.add_argument(
        "--threads",
        type=_positive_int,
        default=1,
        help="worker threads for the slice engine (default 1)",
    )
    p.add_argument(
        "--seed",
        type=int,
        default=0,
        help="seed for the randomized strategies (default 0)",
    )
    p.add_argument(
        "--stats",
        action="store_true",
        help="print slice counters to standard error",
    )
    grp = p.add_mutually_exclusive_group()
    grp.add_argument(
        "--compress",
        dest="compress",
        action="store_true",
        default=None,
        help="force exponent compression on",
    )
    grp.add_argument(
        "--no-compress",
        dest="compress",
        action="store_false",
        help="force exponent compression off",
    )
    if bound_flag:
        p.add_argument(
            "--no-bound",
            action="store_true",
            help="disable branch-and-bound pruning (full enumeration)",
        )


def build_parser() -> _Parser:
    parser = _Parser(
        prog="monoslice",
        description="Maximal standard monomials, irreducible decompositions, "
        "Alexander duals and component optimization for monomial ideals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("msm", help="maximal standard monomials, one row each")
    p.add_argument("file", help="ideal file")
    _add_run_options(p)
    p.set_defaults(handler=_cmd_msm)

    p = sub.add_parser(
        "decom", help="irreducible components, one exponent row each (0 = absent)"
    )
    p.add_argument("file", help="ideal file")
    _add_run_options(p)
    p.set_defaults(handler=_cmd_decom)

    p = sub.add_parser("alexdual", help="Alexander dual as an ideal file")
    p.add_argument("file", help="ideal file")
    p.add_argument(
        "point",
        nargs="*",
        help="duality point exponents (default: lcm of the generators)",
    )
    _add_run_options(p)
    p.set_defaults(handler=_cmd_alexdual)

    p = sub.add_parser("codim", help="codimension (smallest component size)")
    p.add_argument("file", help="ideal file")
    _add_run_options(p)
    p.set_defaults(handler=_cmd_codim)

    p = sub.add_parser(
        "optimize",
        help="maximize a linear functional over the maximal standard monomials",
    )
    p.add_argument("file", help="ideal file")
    p.add_argument(
        "--r",
        required=True,
        metavar="WEIGHTS",
        help="comma or space separated rational weights, one per variable",
    )
    _add_run_options(p, bound_flag=True)
    p.set_defaults(handler=_cmd_optimize)

    p = sub.add_parser("genrandom", help="generate a random minimal ideal file")
    p.add_argument("--n", type=_positive_int, required=True, help="variables")
    p.add_argument("--gens", type=_nonnegative_int, required=True, help="generators")
    p.add_argument(
        "--max-exp", type=_nonnegative_int, required=True, help="exponent cap"
    )
    p.add_argument("--seed", type=int, default=0)
    p.add_argument(
        "--max-attempts",
        type=_positive_int,
        default=None,
        help="candidate budget before giving up (default 1000 per generator)",
    )
    p.set_defaults(handler=_cmd_genrandom)
    return parser


def _load_ideal(path: str) -> MonomialIdeal:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise _CliError(str(exc))
    ideal, was_minimal = parse_ideal(text, source=path)
    if not was_minimal:
        print(
            f"warning: {path}: generators were not minimal; minimized on load",
            file=sys.stderr,
        )
    return ideal


def _compress_mode(args):
    return "auto" if args.compress is None else args.compress


def _dump_stats(stats: EngineStats) -> None:
    for key, value in stats.as_dict().items():
        print(f"{key}: {value}", file=sys.stderr)


def _cmd_msm(args) -> int:
    ideal = _load_ideal(args.file)
    out = sys.stdout
    if args.engine == "brute":
        for d in sorted(brute_force_msm(ideal)):
            print(format_row(d), file=out)
        return 0
    stats = stream_msm(
        ideal,
        lambda d: print(format_row(d), file=out),
        strategy=args.split,
        seed=args.seed,
        compress=_compress_mode(args),
        threads=args.threads,
    )
    if args.stats:
        _dump_stats(stats)
    return 0


def _cmd_decom(args) -> int:
    ideal = _load_ideal(args.file)
    n = ideal.n
    out = sys.stdout
    if args.engine == "brute":
        comps = sorted(brute_force_decomposition(ideal), key=lambda c: c.exponent_row(n))
        for comp in comps:
            print(format_row(comp.exponent_row(n)), file=out)
        return 0
    stats = stream_decomposition(
        ideal,
        lambda comp: print(format_row(comp.exponent_row(n)), file=out),
        strategy=args.split,
        seed=args.seed,
        compress=_compress_mode(args),
        threads=args.threads,
    )
    if args.stats:
        _dump_stats(stats)
    return 0


def _cmd_alexdual(args) -> int:
    ideal = _load_ideal(args.file)
    n = ideal.n
    point = parse_exponent_vector(args.point, n) if args.point else None
    if args.engine == "brute":
        pt = ideal.lcm if point is None else point
        if not divides(ideal.lcm, pt):
            raise ValueError("duality point must be divisible by the generator lcm")
        dual = components_to_dual(n, brute_force_decomposition(ideal), pt)
    else:
        dual = alexander_dual(
            ideal,
            point,
            strategy=args.split,
            seed=args.seed,
            compress=_compress_mode(args),
            threads=args.threads,
        )
    sys.stdout.write(format_ideal(dual))
    return 0


def _cmd_codim(args) -> int:
    ideal = _load_ideal(args.file)
    if args.engine == "brute":
        comps = brute_force_decomposition(ideal)
        if not comps:
            raise _CliError("the whole ring has no irreducible components")
        print(min(len(c.exponents) for c in comps))
        return 0
    print(
        codimension(
            ideal,
            strategy=args.split,
            seed=args.seed,
            threads=args.threads,
        )
    )
    return 0


def _cmd_optimize(args) -> int:
    ideal = _load_ideal(args.file)
    weights = parse_weight_vector(args.r, ideal.n)
    if args.engine == "brute":
        objective = LinearObjective.of(weights)
        best = None
        for d in sorted(brute_force_msm(ideal)):
            value = objective.value(d)
            if best is None or value > best[0]:
                best = (value, d)
        if best is None:
            print("infeasible")
            return 2
        print(best[0])
        print(format_row(best[1]))
        return 0
    result = solve_linear_idp(
        ideal,
        weights,
        strategy=args.split,
        use_bound=not args.no_bound,
        seed=args.seed,
        threads=args.threads,
    )
    if args.stats:
        _dump_stats(result.stats)
    if not result.feasible:
        print("infeasible")
        return 2
    print(result.value)
    print(format_row(result.witness))
    return 0


def _cmd_genrandom(args) -> int:
    ideal = random_ideal(
        args.n,
        args.gens,
        args.max_exp,
        seed=args.seed,
        max_attempts=args.max_attempts,
    )
    sys.stdout.write(format_ideal(ideal))
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except _CliError as exc:
        print(f"monoslice: error: {exc}", file=sys.stderr)
        return exc.code
    except (ParseError, ValueError) as exc:
        print(f"monoslice: error: {exc}", file=sys.stderr)
        return 1
    except KeyboardInterrupt:
        return 130


if __name__ == "__main__":
    sys.exit(main())
