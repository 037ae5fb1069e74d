"""Handlers of the ``fastbmm`` subcommands; each returns an exit code."""

import argparse
import statistics
import time
from collections.abc import Callable

from fastbmm.bitmatrix import (
    BitMatrix,
    BitVectorTensor,
    Operand,
    from_interleaved,
    read_bmm,
    to_interleaved,
    write_bmm,
)
from fastbmm.cli.exceptions import CheckFailed, UsageError
from fastbmm.cli.schemas import BenchReport, PlanSummary
from fastbmm.config import bmm_settings
from fastbmm.core import from_alternative, multiply, solve_alternative, to_alternative
from fastbmm.counters import OpCounter
from fastbmm.decomposition import (
    BuiltinName,
    Decomposition,
    DecompositionError,
    Factor,
    builtin,
    verify_decomposition,
)
from fastbmm.engine import (
    Algorithm,
    LayerPlan,
    Semiring,
    basis_change,
    bit_operation_estimate,
    effective_bops,
    multiply_cubic,
)
from fastbmm.engine.kernel import require_gf2
from fastbmm.logging.logger import FastbmmLogger

logger = FastbmmLogger("cli")


def _plan(args: argparse.Namespace, n: int) -> LayerPlan:
    return LayerPlan.for_size(
        n,
        d_host=args.d_host,
        d_serial=args.d_serial,
        d_parallel=args.d_parallel,
        workers=args.workers,
    )


def _decomposition(algorithm: Algorithm) -> Decomposition:
    name = algorithm.decomposition_name
    if name is None:
        raise UsageError(f"{algorithm.value} has no bilinear decomposition")
    return builtin(name)


def run_product(
    a: BitMatrix,
    b: BitMatrix,
    algorithm: Algorithm,
    plan: LayerPlan | None,
    ring: Semiring,
    counter: OpCounter,
    include_transforms: bool = False,
    workers: int | None = None,
) -> tuple[BitMatrix, float]:
    """
    Multiply and return the product with the timed seconds.

    Without ``include_transforms`` the permutation into the interleaved layout
    and the basis changes happen outside the timed region.
    """
    started = time.perf_counter()
    if algorithm.is_cubic:
        cubic_ring = Semiring.BOOLEAN if algorithm is Algorithm.BOOLEAN_CUBIC else ring
        workers = workers or bmm_settings.WORKERS
        product = multiply_cubic(a, b, cubic_ring, workers, counter)
        return product, time.perf_counter() - started
    if include_transforms:
        product = multiply(a, b, algorithm, plan, ring, counter)
        return product, time.perf_counter() - started

    require_gf2(ring, algorithm.value)
    if plan is None:
        plan = LayerPlan.default(a.rows)
    decomposition = _decomposition(algorithm)
    a_hat = to_alternative(a, decomposition, plan, Operand.LEFT)
    b_hat = to_alternative(b, decomposition, plan, Operand.RIGHT)
    started = time.perf_counter()
    c_hat = solve_alternative(a_hat, b_hat, decomposition, plan, counter)
    elapsed = time.perf_counter() - started
    return from_alternative(c_hat, decomposition, plan), elapsed


def _report(
    algo: str,
    n: int,
    plan: LayerPlan | None,
    times: list[float],
    counter: OpCounter,
    routine: str = "multiply",
    estimate: int | None = None,
    check: bool | None = None,
) -> BenchReport:
    median = statistics.median(times)
    return BenchReport(
        algo=algo,
        routine=routine,
        n=n,
        plan=PlanSummary.from_plan(plan),
        workers=plan.workers if plan else bmm_settings.WORKERS,
        repeats=len(times),
        wall_time_seconds=median,
        effective_bops=effective_bops(n, median),
        kernel_invocations=counter.kernel_invocations,
        word_xor_count=counter.word_xors,
        estimated_bit_operations=estimate,
        check=check,
    )


def cmd_gen(args: argparse.Namespace) -> int:
    matrix = BitMatrix.random(args.n, args.cols or args.n, args.seed)
    write_bmm(matrix, args.output)
    logger.info(f"Wrote {matrix.rows}x{matrix.cols} matrix to {args.output}")
    return 0


def cmd_multiply(args: argparse.Namespace) -> int:
    algorithm = Algorithm(args.algo)
    ring = Semiring(args.ring)
    if not algorithm.is_cubic:
        require_gf2(ring, algorithm.value)

    left_path, right_path = args.inputs
    a, b = read_bmm(left_path), read_bmm(right_path)
    plan = None if algorithm.is_cubic else _plan(args, a.rows)
    counter = OpCounter()
    product, seconds = run_product(
        a, b, algorithm, plan, ring, counter, args.include_transforms, args.workers
    )
    write_bmm(product, args.output)

    report = _report(algorithm.value, a.rows, plan, [seconds], counter)
    print(report.model_dump_json())
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    decomposition = builtin(BuiltinName(args.decomposition))
    report = verify_decomposition(decomposition)
    if args.dump:
        for factor in Factor:
            print(f"{factor.value} ({decomposition.additions(factor)} additions):")
            for row in decomposition.matrix(factor):
                print("".join(str(int(bit)) for bit in row))
    print(report.model_dump_json())
    if not report.passed:
        logger.error(f"{decomposition.label} failed verification")
        return 1
    return 0


def _timed(repeats: int, routine: Callable[[], object]) -> list[float]:
    times = []
    for _ in range(repeats):
        started = time.perf_counter()
        routine()
        times.append(time.perf_counter() - started)
    return times


def _bench_multiply(args: argparse.Namespace, a: BitMatrix, b: BitMatrix) -> bool:
    ring = Semiring(args.ring)
    oracles: dict[Semiring, BitMatrix] = {}
    all_passed = True
    for name in args.algo:
        algorithm = Algorithm(name)
        plan = None if algorithm.is_cubic else _plan(args, args.n)
        times: list[float] = []
        counter = OpCounter()
        for _ in range(args.repeats):
            counter = OpCounter()
            product, seconds = run_product(
                a, b, algorithm, plan, ring, counter, args.include_transforms, args.workers
            )
            times.append(seconds)

        check = None
        if args.check:
            oracle_ring = Semiring.BOOLEAN if algorithm is Algorithm.BOOLEAN_CUBIC else ring
            if oracle_ring not in oracles:
                oracles[oracle_ring] = multiply_cubic(
                    a, b, oracle_ring, args.workers or bmm_settings.WORKERS
                )
            check = product == oracles[oracle_ring]
            all_passed = all_passed and check

        estimate = bit_operation_estimate(algorithm, args.n, args.include_transforms)
        report = _report(
            algorithm.value, args.n, plan, times, counter, estimate=estimate, check=check
        )
        print(report.model_dump_json())
    return all_passed


def _time_basis_change(
    source: BitVectorTensor,
    decomposition: Decomposition,
    plan: LayerPlan,
    repeats: int,
    counter: OpCounter,
) -> list[float]:
    def forward() -> None:
        counter.reset()
        vector = source.copy()
        basis_change(
            vector, decomposition, Factor.PHI, plan.outer_depth, counter, plan.workers
        )

    return _timed(repeats, forward)


def _bench_basis_change(args: argparse.Namespace, a: BitMatrix) -> None:
    for name in args.algo:
        algorithm = Algorithm(name)
        decomposition = _decomposition(algorithm)
        plan = _plan(args, args.n)
        source = to_interleaved(a, plan, Operand.LEFT)
        counter = OpCounter()
        times = _time_basis_change(source, decomposition, plan, args.repeats, counter)
        report = _report(algorithm.value, args.n, plan, times, counter, "basis-change")
        print(report.model_dump_json())


def cmd_bench(args: argparse.Namespace) -> int:
    """
    Time each ``--algo`` on one random pair and print one report per algorithm.

    Raises:
        CheckFailed: If ``--check`` finds a product that differs from the
            cubic product.
    """
    args.algo = args.algo or [Algorithm.CUBIC.value]
    a = BitMatrix.random(args.n, args.n, args.seed)
    b = BitMatrix.random(args.n, args.n, args.seed + 1)

    match args.routine:
        case "multiply":
            if not _bench_multiply(args, a, b):
                raise CheckFailed(f"A product of n={args.n} differs from the cubic product")
        case "transpose64":
            times = _timed(args.repeats, a.transpose_blocks64)
            report = _report("transpose64", args.n, None, times, OpCounter(), "transpose64")
            print(report.model_dump_json())
        case "basis-change":
            _bench_basis_change(args, a)
    return 0


def cmd_transform(args: argparse.Namespace) -> int:
    matrix = read_bmm(args.input)
    if args.transpose64:
        write_bmm(matrix.transpose_blocks64(), args.output)
        return 0

    decomposition = builtin(BuiltinName(args.basis))
    plan = LayerPlan.for_size(matrix.rows, d_host=0)
    vector = to_interleaved(matrix, plan, Operand.LEFT)
    depth = plan.outer_depth
    if args.forward:
        basis_change(vector, decomposition, Factor.PHI, depth)
    elif decomposition.traits.self_inverse_bases:
        basis_change(vector, decomposition, Factor.PHI, depth)
    elif decomposition.traits.supports_chaining:
        basis_change(vector.relabel(Operand.RESULT), decomposition, Factor.CHI, depth)
    else:
        raise DecompositionError(f"{decomposition.label} has no inverse basis change")
    write_bmm(from_interleaved(vector, plan, Operand.LEFT), args.output)
    return 0
