"""Print the braided R-matrix of a representation at a spectral point."""

from typing import Annotated

import typer

from baxterise.commands.modules.inputs import (
    FamilyOption,
    MatrixOption,
    MOption,
    ParamsOption,
    SideOption,
    SpecOption,
    resolve_subject,
    subject_header,
)
from baxterise.commands.modules.reporting import echo_witnesses, emit_json, fail_usage
from baxterise.core.algebra import check_equal
from baxterise.core.baxterisation import ResolventError, baxterise_sigma
from baxterise.core.catalog import PoleError, closed_form_poles, closed_form_R
from baxterise.core.checks import Subject, rfunction
from baxterise.core.linalg import Matrix, matrix_to_json
from baxterise.core.scalar import scalar_format
from baxterise.utils.validators import ValidationError, validate_scalar


def _pole_message(subject: Subject, error: ResolventError) -> str:
    """Name the vanishing factor when the family has a closed form."""
    instance = subject.instance
    if instance is not None and instance.family.is_classified and error.name == "x":
        factor = closed_form_poles(instance, error.value)
        if factor is not None:
            return f"❌ Pole at x={scalar_format(error.value)}: {factor} = 0"
    return f"❌ {error}"


def _closed_form(subject: Subject, x, y) -> Matrix:
    instance = subject.instance
    if instance is None or not instance.family.is_classified:
        raise ValidationError(
            f"❌ No closed form for {subject.label}\n   --closed-form needs one of S1..S7"
        )
    try:
        return closed_form_R(instance, x, y)
    except PoleError as e:
        raise ValidationError(f"❌ Pole at x={scalar_format(x)}: {e.factor} = 0")


def rmatrix_command(
    x: Annotated[str, typer.Option("--x", help="First spectral parameter, e.g. 1/11")],
    y: Annotated[str, typer.Option("--y", help="Second spectral parameter")],
    family: FamilyOption = None,
    params: ParamsOption = None,
    m: MOption = 2,
    spec: SpecOption = None,
    matrix: MatrixOption = None,
    side: SideOption = "S",
    closed_form: Annotated[
        bool,
        typer.Option("--closed-form", help="Use the explicit formula and cross-check it"),
    ] = False,
) -> None:
    """Print Ř(x, y) exactly; exit 2 at a pole."""
    try:
        # Parse and validate inputs
        subject = resolve_subject(family, params, m, spec, matrix, side)
        x_value = validate_scalar(x, "--x")
        y_value = validate_scalar(y, "--y")
        explicit = _closed_form(subject, x_value, y_value) if closed_form else None
    except ValidationError as e:
        fail_usage(e)

    try:
        if explicit is None:
            result = rfunction(subject)(x_value, y_value)
        else:
            result = explicit
            engine = baxterise_sigma(subject.op, x_value, y_value)
    except ResolventError as e:
        fail_usage(ValidationError(_pole_message(subject, e)))

    # Cross-check the explicit formula against the engine
    report = None
    if explicit is not None:
        report = check_equal(explicit, engine, "closed form - (I - yS)(I - xS)^-1")

    output = {
        **subject_header(subject),
        "x": scalar_format(x_value),
        "y": scalar_format(y_value),
        "source": "closed-form" if closed_form else "baxterisation",
        "matrix": matrix_to_json(result),
    }
    if report is not None:
        output["cross_check"] = report.to_dict()
    emit_json(output)

    # A disagreement is a verified failure
    if report is not None and not report.passed:
        echo_witnesses(subject.label, {"closed_form": report})
        raise typer.Exit(1)
