"""Transfer matrix of a periodic chain."""

from typing import Annotated, Optional

import typer

from baxterise.commands.hamiltonian import ChainLengthOption, InhomogeneityOption, chain_spec
from baxterise.commands.modules.inputs import (
    FamilyOption,
    MatrixOption,
    MOption,
    ParamsOption,
    SpecOption,
    resolve_subject,
    subject_header,
)
from baxterise.commands.modules.reporting import emit_json, fail_usage
from baxterise.core.errors import BaxteriseError
from baxterise.core.integrability import transfer_derivative, transfer_matrix
from baxterise.core.linalg import matrix_to_json
from baxterise.core.scalar import scalar_format
from baxterise.utils.validators import ValidationError, validate_scalar


def transfer_command(
    family: FamilyOption = None,
    params: ParamsOption = None,
    m: MOption = 2,
    spec: SpecOption = None,
    matrix: MatrixOption = None,
    n: ChainLengthOption = None,
    z: InhomogeneityOption = "0",
    x: Annotated[
        Optional[str], typer.Option("--x", help="Spectral parameter of the auxiliary space")
    ] = None,
    log_derivative: Annotated[
        bool,
        typer.Option("--log-derivative", help="Print t'(z|z) t(z|z)^-1 instead of t(x|z)"),
    ] = False,
) -> None:
    """Print t(x|z) = tr_0 R_01(x,z) ... R_0n(x,z)."""
    try:
        subject = resolve_subject(family, params, m, spec, matrix)
        chain = chain_spec(subject, n, z)
        # the logarithmic derivative is taken at x = z
        if log_derivative:
            x_value = chain.z
        elif x is None:
            raise ValidationError("❌ Missing --x\n   Pass --x VALUE or --log-derivative")
        else:
            x_value = validate_scalar(x, "--x")
    except ValidationError as e:
        fail_usage(e)

    # Poles and size limits are usage errors
    try:
        result = transfer_derivative(chain) if log_derivative else transfer_matrix(chain, x_value)
    except BaxteriseError as e:
        fail_usage(ValidationError(f"❌ {e}"))

    emit_json(
        {
            **subject_header(subject),
            "n": chain.n,
            "z": scalar_format(chain.z),
            "x": scalar_format(x_value),
            "kind": "log-derivative" if log_derivative else "transfer",
            "matrix": matrix_to_json(result),
        }
    )
