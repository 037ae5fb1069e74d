"""Unit tests for shared helpers and settings."""

import threading

import pytest

from fastbmm.config import BmmSettings, bmm_settings
from fastbmm.exceptions import DimensionError, FastbmmError
from fastbmm.utils import is_power_of_two, run_partitioned, split_ranges


class TestSplitRanges:
    """Test split_ranges."""

    def test_near_equal(self) -> None:
        """Test contiguous ranges differing by at most one."""
        assert split_ranges(10, 3) == [(0, 4), (4, 7), (7, 10)]

    def test_more_parts_than_items(self) -> None:
        """Test that empty ranges are dropped."""
        assert split_ranges(2, 5) == [(0, 1), (1, 2)]
        assert split_ranges(0, 3) == []


class TestRunPartitioned:
    """Test run_partitioned."""

    def test_covers_all(self) -> None:
        """Test that every index is visited exactly once."""
        seen: list[int] = []
        lock = threading.Lock()

        def run(start: int, stop: int) -> None:
            with lock:
                seen.extend(range(start, stop))

        run_partitioned(17, 4, run)

        assert sorted(seen) == list(range(17))

    def test_propagates_errors(self) -> None:
        """Test that an exception in any range reaches the caller."""

        def run(start: int, stop: int) -> None:
            if start > 0:
                raise ValueError("boom")

        with pytest.raises(ValueError):
            run_partitioned(8, 2, run)


class TestHelpers:
    """Test small helpers, settings and the exception hierarchy."""

    def test_is_power_of_two(self) -> None:
        """Test powers of two and others."""
        assert is_power_of_two(1)
        assert is_power_of_two(1024)
        assert not is_power_of_two(0)
        assert not is_power_of_two(96)

    def test_settings_singleton(self) -> None:
        """Test that the settings class always returns one instance."""
        assert BmmSettings() is bmm_settings
        assert bmm_settings.WORKERS >= 1
        assert bmm_settings.KERNEL_BATCH_BLOCKS >= 1

    def test_exception_defaults(self) -> None:
        """Test default messages and the RuntimeError base."""
        assert str(FastbmmError()) == "Bit-matrix multiplication error occurred"
        assert issubclass(DimensionError, FastbmmError)
        assert issubclass(FastbmmError, RuntimeError)
