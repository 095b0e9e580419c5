"""Write a representation, its R-matrix and its Hamiltonian density to a document."""

import json
from enum import Enum
from pathlib import Path
from typing import Annotated, Optional

import typer

from baxterise.commands.modules.inputs import (
    FamilyOption,
    MatrixOption,
    MOption,
    ParamsOption,
    SideOption,
    SpecOption,
    resolve_subject,
)
from baxterise.commands.modules.reporting import fail_usage, output_indent
from baxterise.core.errors import BaxteriseError
from baxterise.core.report import build_export, render_markdown
from baxterise.utils.validators import ValidationError, validate_scalar


class ExportFormat(str, Enum):
    json = "json"
    markdown = "markdown"


def export_command(
    x: Annotated[str, typer.Option("--x", help="First spectral parameter")],
    y: Annotated[str, typer.Option("--y", help="Second spectral parameter")],
    family: FamilyOption = None,
    params: ParamsOption = None,
    m: MOption = 2,
    spec: SpecOption = None,
    matrix: MatrixOption = None,
    side: SideOption = "S",
    z: Annotated[str, typer.Option("--z", help="Inhomogeneity of the density")] = "0",
    output_format: Annotated[
        ExportFormat, typer.Option("--format", help="Document format")
    ] = ExportFormat.json,
    out: Annotated[
        Optional[Path], typer.Option("--out", "-o", help="Output file (default: stdout)")
    ] = None,
) -> None:
    """Export S, Ř(x, y) and h(z) as JSON or Markdown."""
    try:
        # Parse and validate inputs
        subject = resolve_subject(family, params, m, spec, matrix, side)
        x_value = validate_scalar(x, "--x")
        y_value = validate_scalar(y, "--y")
        z_value = validate_scalar(z, "--z")
    except ValidationError as e:
        fail_usage(e)

    try:
        data = build_export(subject, x_value, y_value, z_value)
    except BaxteriseError as e:
        fail_usage(ValidationError(f"❌ {e}"))

    # Render in the requested format
    if output_format is ExportFormat.markdown:
        content = render_markdown(data)
    else:
        content = json.dumps(data, indent=output_indent(), ensure_ascii=False) + "\n"

    if out is None:
        typer.echo(content, nl=False)
        return

    # Write to file
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(content)
    typer.echo(f"✅ Wrote {output_format.value} export to {out}", err=True)
