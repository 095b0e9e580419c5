"""Display current baxterise configuration and the representation catalog."""

import json
from typing import Annotated

import typer

from baxterise import __version__
from baxterise.completion.completers import describe_family
from baxterise.core.catalog import Family, required_params
from baxterise.core.checks import ALL_CHECKS, DEFAULT_CHECKS
from baxterise.utils.config import ConfigManager


def _catalog() -> list[dict]:
    return [
        {
            "family": family.value,
            "side": family.side,
            "m": 2 if family.is_classified else "2..3",
            "params": list(required_params(family, 2)),
            "closed_form": family.is_classified,
            "description": describe_family(family),
        }
        for family in Family
    ]


def info_command(
    json_output: Annotated[bool, typer.Option("--json", help="Output in JSON format")] = False,
) -> None:
    """Display current configuration and the available families and checks."""
    config_manager = ConfigManager()
    defaults = config_manager.get_defaults()
    catalog = _catalog()

    # JSON output
    if json_output:
        output = {
            "version": __version__,
            "config_file": str(config_manager.config_file),
            "defaults": {
                "seed": defaults.seed,
                "trials": defaults.trials,
                "max_m": defaults.max_m,
                "max_n": defaults.max_n,
                "families": defaults.families.split(","),
            },
            "output": {"indent": defaults.indent, "log_level": defaults.log_level},
            "families": catalog,
            "checks": {"default": list(DEFAULT_CHECKS), "all": list(ALL_CHECKS)},
        }
        typer.echo(json.dumps(output, indent=2, ensure_ascii=False))
        return

    # Display header
    typer.echo("📋 baxterise Configuration")
    typer.echo("=" * 40)
    typer.echo()
    typer.echo(f"Version: {__version__}")
    typer.echo(f"Config file: {config_manager.config_file}")
    typer.echo()

    # Run defaults
    typer.echo("Defaults:")
    typer.echo(f"  Seed: {defaults.seed}")
    typer.echo(f"  Trials: {defaults.trials}")
    typer.echo(f"  Scan bounds: max-m={defaults.max_m}, max-n={defaults.max_n}")
    typer.echo(f"  Families: {defaults.families}")
    typer.echo(f"  Log level: {defaults.log_level}")
    typer.echo()

    # 📐 marks families with a closed-form R-matrix
    typer.echo("Families:")
    for entry in catalog:
        params = ",".join(entry["params"])
        marker = "📐" if entry["closed_form"] else "🚚"
        typer.echo(f"  {marker} {entry['family']:<8} {entry['side']}-side  {params}")
    typer.echo()

    typer.echo(f"Checks: {', '.join(ALL_CHECKS)}")
    typer.echo(f"  Run by default: {', '.join(DEFAULT_CHECKS)}")
