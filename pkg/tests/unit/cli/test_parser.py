"""Unit tests for argument parsing and report schemas of the command line."""

import pytest
from pydantic import ValidationError

from fastbmm.cli.exceptions import UsageError
from fastbmm.cli.main import _validate, build_parser
from fastbmm.cli.schemas import BenchReport, PlanSummary
from fastbmm.config import bmm_settings
from fastbmm.engine import LayerPlan


class TestParser:
    """Test the subcommand parser."""

    def test_multiply_defaults(self) -> None:
        """Test the defaults of multiply."""
        args = build_parser().parse_args(["multiply", "--in", "a", "b", "--out", "c"])

        assert args.algo == "alt-si"
        assert args.ring == "gf2"
        assert args.inputs == ["a", "b"]
        assert args.workers is None
        assert args.include_transforms is False

    def test_bench_repeats_from_settings(self) -> None:
        """Test that --repeats defaults to BMM_BENCH_REPEATS."""
        args = build_parser().parse_args(["bench", "-n", "64"])

        assert args.repeats == bmm_settings.BENCH_REPEATS
        assert args.algo is None
        assert args.routine == "multiply"

    def test_repeated_algo(self) -> None:
        """Test that --algo accumulates."""
        args = build_parser().parse_args(["bench", "-n", "64", "--algo", "sw", "--algo", "cubic"])

        assert args.algo == ["sw", "cubic"]

    @pytest.mark.parametrize(
        "argv",
        [
            ["gen", "-n", "0", "-o", "x"],
            ["gen", "-o", "x"],
            ["bench", "-n", "64", "--workers", "-1"],
            ["verify", "--decomposition", "unknown"],
            ["transform", "--in", "a", "--out", "b"],
            ["transform", "--in", "a", "--out", "b", "--transpose64", "--basis", "alt-si"],
        ],
    )
    def test_invalid_arguments(self, argv: list[str]) -> None:
        """Test that argparse errors become UsageError."""
        with pytest.raises(UsageError):
            build_parser().parse_args(argv)

    def test_basis_without_direction(self) -> None:
        """Test that --basis needs --forward or --inverse."""
        args = build_parser().parse_args(
            ["transform", "--in", "a", "--out", "b", "--basis", "alt-chain"]
        )

        with pytest.raises(UsageError):
            _validate(args)

    def test_basis_change_of_cubic(self) -> None:
        """Test that the basis-change routine refuses cubic algorithms."""
        args = build_parser().parse_args(
            ["bench", "-n", "64", "--algo", "boolean-cubic", "--routine", "basis-change"]
        )

        with pytest.raises(UsageError):
            _validate(args)


class TestReportSchemas:
    """Test the JSON report models."""

    def test_plan_summary(self) -> None:
        """Test the level split of a plan, and zeros without one."""
        plan = LayerPlan(d_host=1, d_serial=2, d_parallel=3)

        assert PlanSummary.from_plan(plan) == PlanSummary(d_host=1, d_serial=2, d_parallel=3)
        assert PlanSummary.from_plan(None) == PlanSummary()

    def test_report_round_trip(self) -> None:
        """Test that a report survives its own JSON."""
        report = BenchReport(
            algo="sw",
            n=128,
            plan=PlanSummary(d_serial=1),
            workers=2,
            wall_time_seconds=0.5,
            effective_bops=8.0,
            check=True,
        )

        assert BenchReport.model_validate_json(report.model_dump_json()) == report

    def test_report_forbids_extra(self) -> None:
        """Test that unknown keys are rejected."""
        with pytest.raises(ValidationError):
            BenchReport(
                algo="sw",
                n=128,
                plan=PlanSummary(),
                workers=1,
                wall_time_seconds=0.1,
                effective_bops=1.0,
                speedup=2.0,
            )
