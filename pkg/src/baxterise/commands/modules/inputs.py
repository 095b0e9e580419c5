"""Options shared by the commands that take a representation."""

from pathlib import Path
from typing import Annotated, Optional

import typer

from baxterise.completion.completers import complete_family
from baxterise.core.checks import Side, Subject
from baxterise.utils.validators import (
    ValidationError,
    build_instance,
    load_matrix_file,
    validate_local_dimension,
)

FamilyOption = Annotated[
    Optional[str],
    typer.Option(
        "--family",
        "-f",
        help="Representation family (S1..S7, TASEP_S, TASEP_T)",
        autocompletion=complete_family,
    ),
]
ParamsOption = Annotated[
    Optional[str],
    typer.Option("--params", "-p", help="Family parameters as name=value pairs, e.g. a=1,b=2/3"),
]
MOption = Annotated[int, typer.Option("--m", help="Local dimension for TASEP families")]
SpecOption = Annotated[
    Optional[Path],
    typer.Option("--spec", help="JSON file with a family instance {family, m, params}"),
]
MatrixOption = Annotated[
    Optional[Path],
    typer.Option("--matrix", help="JSON file with a two-site operator {dim, entries}"),
]
SideOption = Annotated[
    str, typer.Option("--side", help="Algebra a --matrix operator should represent: S or T")
]


def resolve_subject(
    family: Optional[str],
    params: Optional[str],
    m: int,
    spec: Optional[Path],
    matrix: Optional[Path] = None,
    side: str = "S",
) -> Subject:
    """The operator under test from --matrix, --spec or --family/--params.

    Raises:
        ValidationError: If the inputs conflict or are invalid
    """
    if matrix is not None:
        if family is not None or spec is not None:
            raise ValidationError("❌ --matrix cannot be combined with --family or --spec")
        normalized = side.strip().upper()
        if normalized not in ("S", "T"):
            raise ValidationError(f"❌ Invalid --side: '{side}'\n   Expected S or T")
        side_value: Side = "S" if normalized == "S" else "T"
        subject = Subject.custom(load_matrix_file(matrix), side_value)
    else:
        if spec is None:
            validate_local_dimension(m)
        subject = Subject.from_instance(build_instance(family, params, m, spec))
    validate_local_dimension(subject.m)
    return subject


def subject_header(subject: Subject) -> dict:
    """Leading report fields that identify the operator."""
    header: dict = {"family": subject.label, "m": subject.m}
    if subject.instance is not None:
        header["params"] = subject.instance.to_dict()["params"]
    else:
        header["side"] = subject.side
    return header
