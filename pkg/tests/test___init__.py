"""Tests for the package version."""

import re

import pytest
import typer

from baxterise import __version__
from baxterise.cli import app, version_callback


def test_version_format():
    """Test that the version is semantic or dev."""
    assert re.match(r"^\d+\.\d+\.\d+$|^dev$", __version__)


@pytest.mark.parametrize("flag", ["--version", "-v"])
def test_version_flags(runner, flag):
    """Test that --version and -v print the version."""
    result = runner.invoke(app, [flag])
    assert result.exit_code == 0
    assert result.stdout.strip() == f"baxterise version: {__version__}"


def test_version_callback():
    """Test that the callback exits only when the flag is set."""
    assert version_callback(False) is None
    with pytest.raises(typer.Exit) as exc_info:
        version_callback(True)
    assert exc_info.value.exit_code == 0
