from fastbmm.cli.main import build_parser, main
from fastbmm.cli.schemas import BenchReport, PlanSummary

__all__ = ["main", "build_parser", "BenchReport", "PlanSummary"]
