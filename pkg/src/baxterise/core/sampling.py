"""Seeded random draws of parameters and admissible spectral points.

Every random quantity comes from a ``random.Random`` derived from the run seed
and a cell key, so results do not depend on execution order or process.
"""

import hashlib
import logging
import random
from collections.abc import Callable
from fractions import Fraction
from typing import TypeVar

from baxterise.core.algebra import MobiusError
from baxterise.core.baxterisation import ResolventError, SpectralPoint
from baxterise.core.catalog import Family, FamilyInstance, PoleError, required_params
from baxterise.core.errors import BaxteriseError
from baxterise.core.linalg import SingularMatrixError
from baxterise.core.scalar import scalar_format

logger = logging.getLogger(__name__)

T = TypeVar("T")

MAX_ATTEMPTS = 200
_RANGE = [v for v in range(-9, 10) if v != 0]


class SamplingError(BaxteriseError, RuntimeError):
    """Raised when no admissible draw was found."""

    pass


def cell_rng(seed: int, *key: object) -> random.Random:
    """Independent generator for one cell; stable across processes and platforms."""
    # key material is "seed|k1|k2|..."
    material = "|".join([str(seed), *(str(k) for k in key)]).encode()
    digest = hashlib.sha256(material).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


def draw_scalar(rng: random.Random) -> Fraction:
    """p/q with p and q drawn from [-9, 9] without zero."""
    return Fraction(rng.choice(_RANGE), rng.choice(_RANGE))


def draw_params(rng: random.Random, family: Family, m: int = 2) -> FamilyInstance:
    """A family instance with random nonzero parameters."""
    for _ in range(MAX_ATTEMPTS):
        params = {name: draw_scalar(rng) for name in required_params(family, m)}
        try:
            return FamilyInstance(family, m, params)
        except BaxteriseError as e:
            logger.debug("Rejected %s parameters: %s", family.value, e)
    raise SamplingError(f"No valid parameters drawn for {family.value}")


def draw_point(rng: random.Random) -> SpectralPoint:
    return SpectralPoint(draw_scalar(rng), draw_scalar(rng), draw_scalar(rng))


def draw_admissible(
    rng: random.Random, evaluate: Callable[[SpectralPoint], T]
) -> tuple[SpectralPoint, T]:
    """Draw points until ``evaluate`` succeeds without hitting a pole.

    Args:
        rng: Generator to draw from
        evaluate: Computation at a point; a singular resolvent or a vanishing
            closed-form factor rejects the point

    Returns:
        The accepted point and the value computed there

    Raises:
        SamplingError: If every attempt was rejected
    """
    for _ in range(MAX_ATTEMPTS):
        point = draw_point(rng)
        try:
            return point, evaluate(point)
        except (ResolventError, SingularMatrixError, MobiusError, PoleError) as e:
            logger.debug(
                "Rejected point x=%s y=%s z=%s: %s",
                scalar_format(point.x),
                scalar_format(point.y),
                scalar_format(point.z),
                e,
            )
    raise SamplingError(f"No admissible spectral point in {MAX_ATTEMPTS} draws")
