"""Initialize user configuration for baxterise."""

from dataclasses import asdict
from typing import Annotated, Any, Dict, Optional

import typer

from baxterise.commands.modules.reporting import fail_usage
from baxterise.utils.config import ConfigManager, Defaults
from baxterise.utils.validators import (
    ValidationError,
    parse_families,
    validate_log_level,
    validate_positive,
    validate_scan_bounds,
)


def _collect_updates(
    base: Defaults,
    seed: Optional[int],
    trials: Optional[int],
    max_m: Optional[int],
    max_n: Optional[int],
    families: Optional[str],
    log_level: Optional[str],
) -> Dict[str, Dict[str, Any]]:
    """Validated config sections for the flags that were given.

    Raises:
        ValidationError: If a value is out of range
    """
    defaults: Dict[str, Any] = {}
    output: Dict[str, Any] = {}

    if seed is not None:
        defaults["seed"] = seed
    if trials is not None:
        defaults["trials"] = validate_positive(trials, "--trials")
    if max_m is not None or max_n is not None:
        checked_m, checked_n = validate_scan_bounds(
            base.max_m if max_m is None else max_m, base.max_n if max_n is None else max_n
        )
        defaults["max_m"], defaults["max_n"] = checked_m, checked_n
    if families is not None:
        defaults["families"] = ",".join(f.value for f in parse_families(families))
    if log_level is not None:
        output["log_level"] = validate_log_level(log_level)

    sections = {"defaults": defaults, "output": output}
    return {name: values for name, values in sections.items() if values}


def init_command(
    seed: Annotated[Optional[int], typer.Option("--seed", help="Default random seed")] = None,
    trials: Annotated[Optional[int], typer.Option("--trials", help="Default trials")] = None,
    max_m: Annotated[Optional[int], typer.Option("--max-m", help="Default scan max-m")] = None,
    max_n: Annotated[Optional[int], typer.Option("--max-n", help="Default scan max-n")] = None,
    families: Annotated[
        Optional[str], typer.Option("--families", help="Default scan families")
    ] = None,
    log_level: Annotated[
        Optional[str], typer.Option("--log-level", help="Default diagnostic level")
    ] = None,
    force: Annotated[
        bool, typer.Option("--force", help="Reset every setting to its default first")
    ] = False,
) -> None:
    """Write run defaults to ~/.baxterise/settings.toml."""
    # Initialize config manager
    config_manager = ConfigManager()

    # Validate every flag before writing anything
    base = Defaults() if force else config_manager.get_defaults()
    try:
        updates = _collect_updates(base, seed, trials, max_m, max_n, families, log_level)
    except ValidationError as e:
        fail_usage(e)

    if force:
        fresh = asdict(Defaults())
        reset = {
            "defaults": {k: fresh[k] for k in ("seed", "trials", "max_m", "max_n", "families")},
            "output": {k: fresh[k] for k in ("indent", "log_level")},
        }
        config_manager.update_config(reset)
        typer.echo("🔄 Reset configuration to defaults")

    if updates:
        config_manager.update_config(updates)

    # Show the stored values
    typer.echo(f"✅ Configuration saved to {config_manager.config_file}")
    current = config_manager.get_defaults()
    typer.echo(f"   Seed: {current.seed}")
    typer.echo(f"   Trials: {current.trials}")
    typer.echo(f"   Scan bounds: max-m={current.max_m}, max-n={current.max_n}")
    typer.echo(f"   Families: {current.families}")
    typer.echo(f"   Log level: {current.log_level}")
    typer.echo()
    # Suggest first commands
    typer.echo("💡 Next steps:")
    typer.echo("   baxterise verify --family S4 --params a=1,b=2,c=3,d=4")
    typer.echo("   baxterise scan")
