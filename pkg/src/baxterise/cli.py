"""CLI entry point for baxterise."""

from typing import Annotated, Optional

import typer

from baxterise import __version__
from baxterise.commands.export import export_command
from baxterise.commands.hamiltonian import hamiltonian_command
from baxterise.commands.info import info_command
from baxterise.commands.init import init_command
from baxterise.commands.rmatrix import rmatrix_command
from baxterise.commands.scan import scan_command
from baxterise.commands.transfer import transfer_command
from baxterise.commands.verify import verify_command
from baxterise.utils.config import ConfigManager
from baxterise.utils.logging import configure_logging
from baxterise.utils.validators import ValidationError, validate_log_level


def version_callback(value: bool) -> None:
    if value:
        typer.echo(f"baxterise version: {__version__}")
        raise typer.Exit()


app = typer.Typer(
    name="baxterise",
    help="Exact checks and constructions for two-parameter Baxterisations",
    no_args_is_help=True,
)


@app.callback(invoke_without_command=True)
def main(
    ctx: typer.Context,
    version: Annotated[
        bool | None,
        typer.Option(
            "--version",
            "-v",
            callback=version_callback,
            is_eager=True,
            help="Show the version and exit",
        ),
    ] = None,
    log_level: Annotated[
        Optional[str],
        typer.Option("--log-level", help="Diagnostics on stderr: DEBUG, INFO, WARNING, ..."),
    ] = None,
) -> None:
    """Set up diagnostics before any command runs.

    Reports go to stdout as JSON, diagnostics and witnesses to stderr.
    """
    try:
        level = validate_log_level(log_level or ConfigManager().get_defaults().log_level)
    except ValidationError as e:
        typer.echo(str(e), err=True)
        raise typer.Exit(2)
    configure_logging(level)


# Register commands
app.command(name="verify")(verify_command)
app.command(name="rmatrix")(rmatrix_command)
app.command(name="hamiltonian")(hamiltonian_command)
app.command(name="transfer")(transfer_command)
app.command(name="scan")(scan_command)
app.command(name="export")(export_command)
app.command(name="init")(init_command)
app.command(name="info")(info_command)


if __name__ == "__main__":
    app()
