"""Sweep every property check over random members of the catalog."""

from typing import Annotated, Optional

import typer

from baxterise.commands.modules.reporting import echo_cell_failures, emit_json, fail_usage
from baxterise.commands.modules.scan import run_scan
from baxterise.utils.config import ConfigManager
from baxterise.utils.validators import (
    ValidationError,
    parse_families,
    validate_positive,
    validate_scan_bounds,
)


def scan_command(
    families: Annotated[
        Optional[str],
        typer.Option("--families", help="Comma-separated families (default from config)"),
    ] = None,
    seed: Annotated[Optional[int], typer.Option("--seed", help="Random seed")] = None,
    trials: Annotated[
        Optional[int], typer.Option("--trials", "-t", help="Cells per family and check")
    ] = None,
    max_m: Annotated[
        Optional[int], typer.Option("--max-m", help="Largest TASEP local dimension (<= 3)")
    ] = None,
    max_n: Annotated[
        Optional[int], typer.Option("--max-n", help="Longest periodic chain (<= 4)")
    ] = None,
    jobs: Annotated[int, typer.Option("--jobs", "-j", help="Worker processes")] = 1,
) -> None:
    """Run the full invariant matrix; exit 0 if no cell fails."""
    # Fall back to configured defaults
    defaults = ConfigManager().get_defaults()
    seed = defaults.seed if seed is None else seed
    trials = defaults.trials if trials is None else trials
    max_m = defaults.max_m if max_m is None else max_m
    max_n = defaults.max_n if max_n is None else max_n

    try:
        selected = parse_families(families or defaults.families)
        validate_positive(trials, "--trials")
        validate_positive(jobs, "--jobs")
        validate_scan_bounds(max_m, max_n)
    except ValidationError as e:
        fail_usage(e)

    # Run every cell, then print the whole report at once
    report = run_scan(selected, seed, trials, max_m, max_n, jobs=jobs)
    emit_json(report)

    # List failing cells on stderr
    summary = report["summary"]
    if summary["failed"]:
        echo_cell_failures(report["cells"])
        typer.echo(f"❌ {summary['failed']} of {summary['total']} cells failed", err=True)
        raise typer.Exit(1)
