"""Pytest configuration and fixtures."""

import json
import random

import pytest
from typer.testing import CliRunner

from baxterise.core.catalog import FamilyInstance, build_family
from baxterise.core.linalg import LocalOperator, as_matrix


@pytest.fixture
def runner():
    """Provide a CLI runner for testing."""
    return CliRunner()


@pytest.fixture(autouse=True)
def isolated_home(tmp_path, monkeypatch):
    """Keep ~/.baxterise of the test run inside a temporary directory."""
    home = tmp_path / "home"
    home.mkdir()
    monkeypatch.setenv("HOME", str(home))
    return home


@pytest.fixture
def rng():
    """Seeded generator for property loops."""
    return random.Random(20240607)


@pytest.fixture
def idempotent_g():
    """S4 with (a, b, c, d) = (0, 1, 3, 0): g^2 = g and the braid relation holds."""
    return build_family(FamilyInstance.of("S4", a=0, b=1, c=3, d=0))


@pytest.fixture
def generic_op():
    """4x4 matrix with entries 1..16, a non-solution of the S relation."""
    return LocalOperator(2, as_matrix([[4 * i + j + 1 for j in range(4)] for i in range(4)]))


@pytest.fixture
def parse_report():
    """Decode the JSON report at the start of a command's output.

    Diagnostics written to stderr may follow it when the runner mixes streams.
    """

    def parse(output: str) -> dict:
        data, _ = json.JSONDecoder().raw_decode(output[output.index("{") :])
        return data

    return parse
