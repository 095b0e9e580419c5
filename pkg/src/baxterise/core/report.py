"""Export documents for a representation: JSON data and a Markdown rendering."""

from pathlib import Path
from typing import Any

from jinja2 import Environment, FileSystemLoader

from baxterise.core.checks import Subject, relation_report, rfunction
from baxterise.core.integrability import hamiltonian_density
from baxterise.core.linalg import matrix_to_json
from baxterise.core.scalar import ScalarLike, as_scalar, scalar_format


def build_export(
    subject: Subject, x: ScalarLike, y: ScalarLike, z: ScalarLike = 0
) -> dict[str, Any]:
    """Operator, relation check, Ř(x, y) and, for S-side operators, h(z).

    Raises:
        ResolventError: If a needed resolvent is singular
    """
    x, y, z = as_scalar(x), as_scalar(y), as_scalar(z)
    data: dict[str, Any] = {
        "family": subject.label,
        "m": subject.m,
        "side": subject.side,
        "params": subject.instance.to_dict()["params"] if subject.instance else {},
        "operator": matrix_to_json(subject.op.mat),
        "relation": relation_report(subject.op, subject.side).to_dict(),
        "point": {"x": scalar_format(x), "y": scalar_format(y), "z": scalar_format(z)},
        "rmatrix": matrix_to_json(rfunction(subject)(x, y)),
        "density": None,
    }
    # densities are built from S-side operators only
    if subject.side == "S":
        data["density"] = matrix_to_json(hamiltonian_density(subject.op, z).mat)
    return data


def render_markdown(data: dict[str, Any]) -> str:
    """Render an export document with ``report.md.j2``."""
    # Set up Jinja2 environment
    template_dir = Path(__file__).parent.parent / "templates"

    env = Environment(
        loader=FileSystemLoader(template_dir),
        trim_blocks=True,
        lstrip_blocks=True,
        keep_trailing_newline=True,
    )

    template = env.get_template("report.md.j2")
    return template.render(**data)
