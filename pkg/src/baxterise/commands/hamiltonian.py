"""Periodic chain Hamiltonian of a representation."""

from typing import Annotated, Optional

import typer

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
from baxterise.core.checks import Subject
from baxterise.core.errors import BaxteriseError
from baxterise.core.integrability import MAX_TRANSFER_DIM, ChainSpec, hamiltonian
from baxterise.core.linalg import matrix_to_json
from baxterise.core.scalar import scalar_format
from baxterise.utils.config import ConfigManager
from baxterise.utils.validators import ValidationError, validate_scalar

ChainLengthOption = Annotated[
    Optional[int], typer.Option("--n", "-n", help="Number of sites of the periodic chain")
]
InhomogeneityOption = Annotated[str, typer.Option("--z", help="Inhomogeneity z")]


def chain_spec(subject: Subject, n: Optional[int], z: str) -> ChainSpec:
    """Chain of ``n`` sites (config ``max_n`` when omitted) for an S-side operator.

    Raises:
        ValidationError: For T-side operators, bad z, n < 2 or a chain above the size limit
    """
    if subject.side != "S":
        raise ValidationError(
            f"❌ {subject.label} represents the T algebra\n"
            "   Chains are built from S-side operators; map it with the transpose first"
        )
    # Chain length defaults to the configured max_n
    length = ConfigManager().get_defaults().max_n if n is None else n
    try:
        chain = ChainSpec(subject.op, length, validate_scalar(z, "--z"))
    except BaxteriseError as e:
        raise ValidationError(f"❌ {e}")
    # Same limit as the core, reported as a usage error
    if chain.m**chain.n > MAX_TRANSFER_DIM:
        raise ValidationError(
            f"❌ A chain of n={chain.n} sites at m={chain.m} has dimension {chain.m**chain.n}\n"
            f"   Chains are limited to dimension {MAX_TRANSFER_DIM}; pass a smaller --n"
        )
    return chain


def hamiltonian_command(
    family: FamilyOption = None,
    params: ParamsOption = None,
    m: MOption = 2,
    spec: SpecOption = None,
    matrix: MatrixOption = None,
    n: ChainLengthOption = None,
    z: InhomogeneityOption = "0",
) -> None:
    """Print H = sum of h(z) over neighbouring sites, including the wrap-around term."""
    try:
        subject = resolve_subject(family, params, m, spec, matrix)
        chain = chain_spec(subject, n, z)
    except ValidationError as e:
        fail_usage(e)

    try:
        result = hamiltonian(chain)
    except BaxteriseError as e:
        fail_usage(ValidationError(f"❌ {e}"))

    emit_json(
        {
            **subject_header(subject),
            "n": chain.n,
            "z": scalar_format(chain.z),
            "matrix": matrix_to_json(result),
        }
    )
