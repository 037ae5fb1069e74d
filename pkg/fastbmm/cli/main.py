"""``fastbmm`` command line: gen, multiply, verify, bench and transform."""

import argparse
import sys
from collections.abc import Sequence

from pydantic import ValidationError

from fastbmm.bitmatrix import BitFormatError
from fastbmm.cli.commands import cmd_bench, cmd_gen, cmd_multiply, cmd_transform, cmd_verify
from fastbmm.cli.exceptions import UsageError
from fastbmm.config import bmm_settings
from fastbmm.decomposition import BuiltinName
from fastbmm.engine import Algorithm, Semiring
from fastbmm.exceptions import DimensionError, FastbmmError
from fastbmm.logging import configure_fastbmm_logging
from fastbmm.logging.logger import FastbmmLogger

logger = FastbmmLogger("cli")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FORMAT = 2
EXIT_SHAPE = 3

ALGORITHMS = [algorithm.value for algorithm in Algorithm]
ALT_BASES = [BuiltinName.ALT_SELF_INVERSE.value, BuiltinName.ALT_CHAINING.value]


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def _positive(value: str) -> int:
    number = int(value)
    if number < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return number


def _add_plan_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--ring", choices=[ring.value for ring in Semiring], default="gf2")
    parser.add_argument("--d-host", type=int, default=None)
    parser.add_argument("--d-serial", type=int, default=None)
    parser.add_argument("--d-parallel", type=int, default=None)
    parser.add_argument(
        "--workers",
        type=_positive,
        default=None,
        help="Worker threads (default: BMM_WORKERS)",
    )
    parser.add_argument(
        "--include-transforms",
        action="store_true",
        help="Time the layout permutation and basis changes too",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fastbmm", description="Fast bit-matrix multiplication")
    parser.add_argument("--log-level", default=None, help="Default: BMM_LOG_LEVEL")
    commands = parser.add_subparsers(dest="command", required=True)

    gen = commands.add_parser("gen", help="Write a random matrix")
    gen.add_argument("-n", type=_positive, required=True)
    gen.add_argument("--cols", type=_positive, default=None)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("-o", "--output", required=True)
    gen.set_defaults(handler=cmd_gen)

    mult = commands.add_parser("multiply", help="Multiply two BMM1 files")
    mult.add_argument("--algo", choices=ALGORITHMS, default=Algorithm.ALT_SELF_INVERSE.value)
    mult.add_argument("--in", dest="inputs", nargs=2, required=True, metavar="FILE")
    mult.add_argument("--out", dest="output", required=True)
    _add_plan_options(mult)
    mult.set_defaults(handler=cmd_multiply)

    verify = commands.add_parser("verify", help="Check a built-in decomposition")
    verify.add_argument(
        "--decomposition", choices=[name.value for name in BuiltinName], required=True
    )
    verify.add_argument("--dump", action="store_true", help="Print the factor matrices")
    verify.set_defaults(handler=cmd_verify)

    bench = commands.add_parser("bench", help="Time algorithms on random input")
    bench.add_argument("--algo", choices=ALGORITHMS, action="append", default=None)
    bench.add_argument("-n", type=_positive, required=True)
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--repeats", type=_positive, default=bmm_settings.BENCH_REPEATS)
    bench.add_argument("--check", action="store_true", help="Compare with the cubic product")
    bench.add_argument(
        "--routine",
        choices=["multiply", "transpose64", "basis-change"],
        default="multiply",
    )
    _add_plan_options(bench)
    bench.set_defaults(handler=cmd_bench)

    transform = commands.add_parser("transform", help="Basis change or block transpose")
    transform.add_argument("--in", dest="input", required=True)
    transform.add_argument("--out", dest="output", required=True)
    mode = transform.add_mutually_exclusive_group(required=True)
    mode.add_argument("--basis", choices=ALT_BASES)
    mode.add_argument("--transpose64", action="store_true")
    direction = transform.add_mutually_exclusive_group()
    direction.add_argument("--forward", action="store_true")
    direction.add_argument("--inverse", action="store_true")
    transform.set_defaults(handler=cmd_transform)

    return parser


def _validate(args: argparse.Namespace) -> None:
    if args.command == "transform" and args.basis and not (args.forward or args.inverse):
        raise UsageError("--basis needs --forward or --inverse")
    if args.command == "bench" and args.routine == "basis-change":
        for name in args.algo or []:
            if Algorithm(name).is_cubic:
                raise UsageError(f"{name} has no basis change")


def main(argv: Sequence[str] | None = None) -> int:
    """
    Run one command and map failures to exit codes.

    Returns:
        0 on success, 1 for bad arguments, unsupported semirings and failed
        checks, 2 for malformed files, 3 for shape and plan mismatches.
    """
    try:
        args = build_parser().parse_args(argv)
        _validate(args)
    except UsageError as error:
        print(f"fastbmm: error: {error}", file=sys.stderr)
        return EXIT_USAGE

    if args.log_level:
        configure_fastbmm_logging(args.log_level)

    try:
        return args.handler(args)
    except BitFormatError as error:
        logger.error(f"Malformed input: {error}")
        return EXIT_FORMAT
    except DimensionError as error:
        logger.error(f"Shape mismatch: {error}")
        return EXIT_SHAPE
    except (FastbmmError, ValidationError, OSError) as error:
        logger.error(f"{args.command} failed: {error}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
