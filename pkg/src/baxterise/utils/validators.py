"""Validation functions for baxterise command-line input."""

import json
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Optional

from baxterise.core.catalog import Family, FamilyInstance, parse_family
from baxterise.core.checks import ALL_CHECKS, DEFAULT_CHECKS
from baxterise.core.errors import BaxteriseError
from baxterise.core.linalg import LocalOperator, matrix_from_json
from baxterise.core.scalar import scalar_parse

SCAN_MAX_M = 3
SCAN_MAX_N = 4
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class ValidationError(Exception):
    """Raised when validation fails."""

    pass


def validate_family(name: str) -> Family:
    """Resolve a family name, case-insensitively.

    Raises:
        ValidationError: If the family is unknown
    """
    try:
        return parse_family(name)
    except BaxteriseError:
        raise ValidationError(
            f"❌ Unknown family: '{name}'\n"
            f"   Available families: {', '.join(f.value for f in Family)}"
        )


def validate_scalar(text: str, option: str) -> Fraction:
    """Parse an exact rational flag value such as ``1/3`` or ``-2``."""
    try:
        return scalar_parse(text)
    except BaxteriseError as e:
        raise ValidationError(
            f"❌ Invalid value for {option}: '{text}'\n"
            f"   {e}\n"
            "   Expected an integer or a fraction p/q, e.g. '3' or '-1/7'"
        )


def parse_params(text: Optional[str]) -> dict[str, Fraction]:
    """Parse ``a=1,b=2/3`` into exact parameter values.

    Raises:
        ValidationError: If an item is not ``name=value`` or a name repeats
    """
    if not text or not text.strip():
        return {}

    params: dict[str, Fraction] = {}
    for item in text.split(","):
        # Split on the first "=" only
        name, sep, value = item.partition("=")
        name = name.strip()
        if not sep or not name:
            raise ValidationError(
                f"❌ Invalid parameter: '{item.strip()}'\n"
                "   Expected comma-separated name=value pairs, e.g. 'a=1,b=2/3'"
            )
        if name in params:
            raise ValidationError(f"❌ Parameter '{name}' given more than once")
        params[name] = validate_scalar(value, f"parameter '{name}'")
    return params


def parse_checks(
    text: Optional[str],
    allowed: Iterable[str] = ALL_CHECKS,
    default: Iterable[str] = DEFAULT_CHECKS,
) -> list[str]:
    """Split a comma-separated check list, keeping the order given.

    An empty value selects the default checks.
    """
    allowed = list(allowed)
    if not text or not text.strip():
        return list(default)

    checks: list[str] = []
    for raw in text.split(","):
        check = raw.strip().lower()
        if check not in allowed:
            raise ValidationError(
                f"❌ Unknown check: '{raw.strip()}'\n" f"   Available checks: {', '.join(allowed)}"
            )
        # Skip duplicates
        if check not in checks:
            checks.append(check)
    return checks


def parse_families(text: str) -> list[Family]:
    families: list[Family] = []
    for name in text.split(","):
        # Ignore empty items such as a trailing comma
        if name.strip():
            family = validate_family(name)
            if family not in families:
                families.append(family)
    if not families:
        raise ValidationError("❌ No families selected")
    return families


def validate_positive(value: int, option: str) -> int:
    if value < 1:
        raise ValidationError(f"❌ {option} must be at least 1, got {value}")
    return value


def validate_local_dimension(m: int) -> int:
    """Guard the local dimension of an operator given on the command line.

    Raises:
        ValidationError: If m is outside 2..3
    """
    if not 2 <= m <= SCAN_MAX_M:
        raise ValidationError(
            f"❌ Local dimension must be between 2 and {SCAN_MAX_M}, got m={m}\n"
            f"   Three-site checks at m={m} need {m**3}x{m**3} matrices"
        )
    return m


def validate_scan_bounds(max_m: int, max_n: int) -> tuple[int, int]:
    """Guard the sizes a scan may reach.

    Raises:
        ValidationError: If max-m or max-n is out of range
    """
    if not 2 <= max_m <= SCAN_MAX_M:
        raise ValidationError(
            f"❌ --max-m must be between 2 and {SCAN_MAX_M}, got {max_m}\n"
            f"   Three-site checks at m={max_m} need {max_m**3}x{max_m**3} matrices"
        )
    if not 2 <= max_n <= SCAN_MAX_N:
        raise ValidationError(
            f"❌ --max-n must be between 2 and {SCAN_MAX_N}, got {max_n}\n"
            "   Transfer matrices grow as m**(n+1)"
        )
    return max_m, max_n


def validate_log_level(level: str) -> str:
    upper = level.strip().upper()
    if upper not in LOG_LEVELS:
        raise ValidationError(
            f"❌ Invalid log level: '{level}'\n" f"   Available levels: {', '.join(LOG_LEVELS)}"
        )
    return upper


def _read_json(path: Path) -> object:
    try:
        return json.loads(path.read_text())
    except FileNotFoundError:
        raise ValidationError(f"❌ File not found: {path}")
    except json.JSONDecodeError as e:
        raise ValidationError(f"❌ Invalid JSON in {path}\n   {e}")


def load_spec_file(path: Path) -> FamilyInstance:
    """Read a family instance from ``{"family": ..., "m": ..., "params": {...}}``."""
    data = _read_json(path)
    if not isinstance(data, dict):
        raise ValidationError(f"❌ {path} must contain a JSON object")
    try:
        return FamilyInstance.from_dict(data)
    except BaxteriseError as e:
        raise ValidationError(f"❌ Invalid family instance in {path}\n   {e}")


def load_matrix_file(path: Path) -> LocalOperator:
    """Read a two-site operator from ``{"dim": d, "entries": [[...], ...]}``."""
    data = _read_json(path)
    try:
        if not isinstance(data, dict):
            raise ValueError("expected a JSON object with 'dim' and 'entries'")
        return LocalOperator.from_matrix(matrix_from_json(data))
    except (BaxteriseError, ValueError, KeyError, TypeError) as e:
        raise ValidationError(
            f"❌ Invalid matrix in {path}\n"
            f"   {e}\n"
            "   The dimension must be a perfect square m*m with m >= 2"
        )


def build_instance(
    family: Optional[str], params: Optional[str], m: int, spec: Optional[Path]
) -> FamilyInstance:
    """Family instance from ``--spec`` or from ``--family``/``--params``/``--m``."""
    # a spec file carries the whole instance
    if spec is not None:
        if family is not None:
            raise ValidationError("❌ Use either --spec or --family, not both")
        return load_spec_file(spec)
    if family is None:
        raise ValidationError(
            "❌ No representation given\n" "   Pass --family NAME --params ... or --spec FILE"
        )
    resolved = validate_family(family)
    values = parse_params(params)
    try:
        return FamilyInstance(resolved, m, values)
    except BaxteriseError as e:
        raise ValidationError(f"❌ Invalid parameters for {resolved.value}\n   {e}")
