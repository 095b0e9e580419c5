"""Report output shared by the commands."""

import json
from typing import Any, Mapping, NoReturn

import typer

from baxterise.core.algebra import CheckReport
from baxterise.utils.config import ConfigManager
from baxterise.utils.validators import ValidationError


def output_indent() -> int:
    """JSON indentation from the ``[output]`` section."""
    return ConfigManager().get_defaults().indent


def emit_json(data: Mapping[str, Any]) -> None:
    """Print a report to stdout; key order is preserved so equal runs print equal bytes."""
    typer.echo(json.dumps(data, indent=output_indent(), ensure_ascii=False))


def echo_witnesses(label: str, reports: Mapping[str, CheckReport]) -> None:
    """Human-readable failure lines on stderr."""
    for check, report in reports.items():
        if report.witness is not None:
            typer.echo(f"❌ {label} {check}: {report.witness.describe()}", err=True)


def echo_cell_failures(cells: list[dict[str, Any]]) -> None:
    for cell in cells:
        if cell["passed"]:
            continue
        where = f"{cell['family']} m={cell['m']} {cell['check']} #{cell['trial']}"
        # cells that could not run carry an error instead of a witness
        if cell.get("error"):
            typer.echo(f"❌ {where}: {cell['error']}", err=True)
        elif cell.get("witness"):
            w = cell["witness"]
            typer.echo(
                f"❌ {where}: {w['desc']}: entry ({w['row']}, {w['col']}) = {w['residual']}",
                err=True,
            )


def fail_usage(error: ValidationError) -> NoReturn:
    """Print a validation message and exit with the usage code.

    Raises:
        typer.Exit: Always, with code 2
    """
    typer.echo(str(error), err=True)
    raise typer.Exit(2)
