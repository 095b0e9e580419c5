"""Completion functions for baxterise options."""

from typing import List, Tuple

from baxterise.core.catalog import FAMILY_PARAMS, Family
from baxterise.core.checks import ALL_CHECKS, DEFAULT_CHECKS

_CHECK_HELP = {
    "relation": "Defining relation of the S or T algebra",
    "ybe": "Braided Yang-Baxter equation",
    "unitarity": "R(x,y) R(y,x) = 1",
    "regularity": "R(x,x) = 1",
    "locality": "Distant R-matrices commute",
    "hecke": "Idempotent braid generator and its closed form",
    "product": "Product R-matrix of a TASEP_S/TASEP_T pair",
    "a_operator": "[A(x), A(y)] = 0 agreeing with the YBE",
    "closed_form": "Explicit R-matrix against the engine",
    "mobius": "Möbius images and their composition",
    "symmetry": "Inverse, transpose-flip, conjugation and S/T maps",
    "integrability": "Transfer matrices and Hamiltonian of periodic chains",
}


def describe_family(family: Family) -> str:
    if family.is_classified:
        return f"4x4 family, parameters {','.join(FAMILY_PARAMS[family])}"
    return f"{family.side}-side multi-species TASEP"


def complete_family(incomplete: str) -> List[Tuple[str, str]]:
    """Complete family names.

    Args:
        incomplete: Partial input

    Returns:
        List of (name, description) tuples
    """
    prefix = incomplete.upper()
    return [(f.value, describe_family(f)) for f in Family if f.value.startswith(prefix)]


def complete_checks(incomplete: str) -> List[Tuple[str, str]]:
    """Complete the last item of a comma-separated check list."""
    head, _, last = incomplete.rpartition(",")
    chosen = {c.strip() for c in head.split(",") if c.strip()}
    prefix = f"{head}," if head else ""
    completions = []
    for check in ALL_CHECKS:
        # skip checks already listed
        if check in chosen or not check.startswith(last.strip().lower()):
            continue
        suffix = "" if check in DEFAULT_CHECKS else " (not run by default)"
        completions.append((prefix + check, _CHECK_HELP[check] + suffix))
    return completions
