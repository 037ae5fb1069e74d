"""Test configuration and fixtures for the entire test suite."""

import pytest

from fastbmm.logging import configure_fastbmm_logging

pytest_plugins = [
    "tests.conftest_matrices",
    "tests.conftest_pipeline",
]


@pytest.fixture(scope="session", autouse=True)
def quiet_logging() -> None:
    """Only warnings and errors reach stderr during tests."""
    configure_fastbmm_logging("WARNING")
