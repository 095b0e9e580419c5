"""Catalog of concrete representations and their closed-form R-matrices.

Seven 4x4 families S1..S7 solve [S23 S12, S12 + S23] = 0 for every value of
their parameters. TASEP_S and TASEP_T are the m x m exclusion-process
representations of the S and T algebras.
"""

import logging
from collections.abc import Callable, Mapping
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any

from baxterise.core.errors import BaxteriseError
from baxterise.core.linalg import LocalOperator, Matrix, as_matrix, zeros
from baxterise.core.scalar import ScalarLike, as_scalar, scalar_format

logger = logging.getLogger(__name__)


class CatalogError(BaxteriseError, ValueError):
    """Raised for unknown families and missing or invalid parameters."""

    pass


class PoleError(BaxteriseError, ArithmeticError):
    """Raised when a closed-form denominator vanishes."""

    def __init__(self, message: str, factor: str):
        super().__init__(message)
        self.factor = factor


class Family(str, Enum):
    S1 = "S1"
    S2 = "S2"
    S3 = "S3"
    S4 = "S4"
    S5 = "S5"
    S6 = "S6"
    S7 = "S7"
    TASEP_S = "TASEP_S"
    TASEP_T = "TASEP_T"

    @property
    def is_classified(self) -> bool:
        """True for the 4x4 families S1..S7."""
        return self in CLASSIFIED

    @property
    def side(self) -> str:
        """Which algebra the family represents: ``"S"`` or ``"T"``."""
        return "T" if self is Family.TASEP_T else "S"


CLASSIFIED = (
    Family.S1,
    Family.S2,
    Family.S3,
    Family.S4,
    Family.S5,
    Family.S6,
    Family.S7,
)

FAMILY_PARAMS: dict[Family, tuple[str, ...]] = {
    Family.S1: ("a", "b", "c", "d", "e"),
    Family.S2: ("a", "b", "c", "d", "e"),
    Family.S3: ("a", "b", "c", "d"),
    Family.S4: ("a", "b", "c", "d"),
    Family.S5: ("a", "b", "c", "d"),
    Family.S6: ("a", "b", "c", "d"),
    Family.S7: ("a", "b", "c"),
}


def parse_family(name: str) -> Family:
    try:
        return Family(name.strip().upper())
    except ValueError:
        known = ", ".join(f.value for f in Family)
        raise CatalogError(f"Unknown family '{name}' (known: {known})")


def pairs(m: int) -> list[tuple[int, int]]:
    """Ordered pairs 1 <= i < j <= m."""
    return [(i, j) for i in range(1, m) for j in range(i + 1, m + 1)]


def required_params(family: Family, m: int = 2) -> tuple[str, ...]:
    """Parameter names a family instance must define."""
    if family.is_classified:
        return FAMILY_PARAMS[family]
    if family is Family.TASEP_S:
        return tuple(f"rho{i}" for i in range(1, m)) + tuple(f"mu{i}_{j}" for i, j in pairs(m))
    return tuple(f"zeta{j}" for j in range(2, m + 1)) + tuple(f"nu{i}_{j}" for i, j in pairs(m))


@dataclass(frozen=True)
class FamilyInstance:
    """A named representation family with concrete parameter values."""

    family: Family
    m: int = 2
    params: Mapping[str, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if not isinstance(self.family, Family):
            object.__setattr__(self, "family", parse_family(str(self.family)))
        object.__setattr__(self, "params", {k: as_scalar(v) for k, v in self.params.items()})

        if self.family.is_classified and self.m != 2:
            raise CatalogError(f"{self.family.value} is a 4x4 family and needs m=2, got m={self.m}")
        if self.m < 2:
            raise CatalogError(f"Local dimension must be >= 2, got m={self.m}")

        names = required_params(self.family, self.m)
        missing = [n for n in names if n not in self.params]
        if missing:
            raise CatalogError(
                f"Missing parameter(s) for {self.family.value}: {', '.join(missing)}"
            )
        unknown = sorted(set(self.params) - set(names))
        if unknown:
            raise CatalogError(
                f"Unknown parameter(s) for {self.family.value}: {', '.join(unknown)}"
            )

        if self.family is Family.S3 and self.params["c"] == 0:
            raise CatalogError("S3 requires c != 0 (its (2,2) entry is a + b(d-a)/c)")

    def __getitem__(self, name: str) -> Fraction:
        return self.params[name]

    @classmethod
    def of(cls, family: str | Family, m: int = 2, **params: ScalarLike) -> "FamilyInstance":
        return cls(family if isinstance(family, Family) else parse_family(family), m, params)

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "FamilyInstance":
        """Read ``{"family": "S4", "m": 2, "params": {"a": "0", ...}}``."""
        try:
            family = parse_family(str(data["family"]))
            m = int(data.get("m", 2))
            params = {str(k): as_scalar(str(v)) for k, v in dict(data.get("params", {})).items()}
        except (KeyError, TypeError, ValueError) as e:
            if isinstance(e, BaxteriseError):
                raise
            raise CatalogError(f"Malformed family instance: {e}") from e
        return cls(family, m, params)

    def to_dict(self) -> dict[str, Any]:
        return {
            "family": self.family.value,
            "m": self.m,
            "params": {k: scalar_format(v) for k, v in self.params.items()},
        }


def _s1(a, b, c, d, e) -> list[list[Fraction]]:
    return [[a, 0, 0, 0], [b, c, 0, 0], [d, 0, a, 0], [0, e, 0, a]]


def _s2(a, b, c, d, e) -> list[list[Fraction]]:
    return [[a, b, c, d], [0, a, 0, e], [0, 0, a, b + c - e], [0, 0, 0, a]]


def _s3(a, b, c, d) -> list[list[Fraction]]:
    return [[a, 0, 0, 0], [b, a + b * (d - a) / c, 0, 0], [c, 0, d, 0], [0, 0, 0, a]]


def _s4(a, b, c, d) -> list[list[Fraction]]:
    return [[a, 0, 0, 0], [0, b, 0, 0], [0, c, a, 0], [0, 0, 0, d]]


def _s5(a, b, c, d) -> list[list[Fraction]]:
    return [[a, 0, 0, 0], [0, b, 0, 0], [0, 0, c, 0], [0, 0, 0, d]]


def _s6(a, b, c, d) -> list[list[Fraction]]:
    return [[a, 0, 0, 0], [b, c, 0, d], [0, 0, a, 0], [0, -b, b, a]]


def _s7(a, b, c) -> list[list[Fraction]]:
    return [[a, 0, 0, 0], [b, c, c - a, 0], [0, 0, a, 0], [0, 0, 0, c]]


_BUILDERS: dict[Family, Callable[..., list[list[Fraction]]]] = {
    Family.S1: _s1,
    Family.S2: _s2,
    Family.S3: _s3,
    Family.S4: _s4,
    Family.S5: _s5,
    Family.S6: _s6,
    Family.S7: _s7,
}


def _index(m: int, i: int, j: int) -> int:
    """Position of e_i ⊗ e_j (1-based labels) in the lexicographic basis."""
    return (i - 1) * m + (j - 1)


def _tasep(
    m: int, diagonal: Callable[[int, int], Fraction], hop: Callable[[int, int], Fraction]
) -> Matrix:
    mat = zeros(m * m)
    for i, j in pairs(m):
        # E_ii ⊗ E_jj keeps |i j>, E_ji ⊗ E_ij sends |i j> to |j i>
        mat[_index(m, i, j), _index(m, i, j)] += diagonal(i, j)
        mat[_index(m, j, i), _index(m, i, j)] += hop(i, j)
    return mat


def build_tasep_S(
    m: int, rho: Mapping[int, ScalarLike], mu: Mapping[tuple[int, int], ScalarLike]
) -> LocalOperator:
    """Sum over i < j of rho_i E_ii ⊗ E_jj + mu_ij E_ji ⊗ E_ij.

    Raises:
        CatalogError: If a rate is missing
    """
    try:
        mat = _tasep(m, lambda i, j: as_scalar(rho[i]), lambda i, j: as_scalar(mu[(i, j)]))
    except KeyError as e:
        raise CatalogError(f"Missing TASEP rate {e.args[0]!r} for m={m}") from e
    return LocalOperator(m, mat)


def build_tasep_T(
    m: int, zeta: Mapping[int, ScalarLike], nu: Mapping[tuple[int, int], ScalarLike]
) -> LocalOperator:
    """Sum over i < j of zeta_j E_ii ⊗ E_jj + nu_ij E_ji ⊗ E_ij.

    Raises:
        CatalogError: If a rate is missing
    """
    try:
        mat = _tasep(m, lambda i, j: as_scalar(zeta[j]), lambda i, j: as_scalar(nu[(i, j)]))
    except KeyError as e:
        raise CatalogError(f"Missing TASEP rate {e.args[0]!r} for m={m}") from e
    return LocalOperator(m, mat)


def tasep_rates(
    spec: FamilyInstance,
) -> tuple[dict[int, Fraction], dict[tuple[int, int], Fraction]]:
    """Split TASEP parameters into (diagonal rates by index, hopping rates by pair)."""
    if spec.family is Family.TASEP_S:
        diagonal = {i: spec[f"rho{i}"] for i in range(1, spec.m)}
        hops = {(i, j): spec[f"mu{i}_{j}"] for i, j in pairs(spec.m)}
    elif spec.family is Family.TASEP_T:
        diagonal = {j: spec[f"zeta{j}"] for j in range(2, spec.m + 1)}
        hops = {(i, j): spec[f"nu{i}_{j}"] for i, j in pairs(spec.m)}
    else:
        raise CatalogError(f"{spec.family.value} is not a TASEP family")
    return diagonal, hops


def build_family(spec: FamilyInstance) -> LocalOperator:
    """The local operator of a family instance."""
    if spec.family.is_classified:
        args = [spec[name] for name in FAMILY_PARAMS[spec.family]]
        return LocalOperator(2, as_matrix(_BUILDERS[spec.family](*args)))
    diagonal, hops = tasep_rates(spec)
    if spec.family is Family.TASEP_S:
        return build_tasep_S(spec.m, diagonal, hops)
    return build_tasep_T(spec.m, diagonal, hops)


def derive_tasep_T(s_spec: FamilyInstance, zeta: Mapping[int, ScalarLike]) -> FamilyInstance:
    """Partner TASEP_T instance with nu_ij = mu_ij zeta_j / rho_i.

    The result satisfies rho_i nu_ij = mu_ij zeta_j for all i < j.

    Raises:
        CatalogError: If some rho_i vanishes
    """
    rho, mu = tasep_rates(s_spec)
    zero = [i for i, r in rho.items() if r == 0]
    if zero:
        raise CatalogError(f"Cannot solve rho_i nu_ij = mu_ij zeta_j with rho{zero[0]} = 0")
    params: dict[str, Fraction] = {f"zeta{j}": as_scalar(zeta[j]) for j in range(2, s_spec.m + 1)}
    # nu is fixed by the rate condition once zeta is chosen
    for i, j in pairs(s_spec.m):
        params[f"nu{i}_{j}"] = mu[(i, j)] * params[f"zeta{j}"] / rho[i]
    return FamilyInstance(Family.TASEP_T, s_spec.m, params)


def _n(a: Fraction, b: Fraction, c: Fraction, d: Fraction, u: Fraction, v: Fraction) -> Fraction:
    return (a * c + b * d) * u * v - a * u - c * v + 1


def _pole_factors(spec: FamilyInstance, x: Fraction) -> list[tuple[str, Fraction]]:
    p = spec.params
    # the linear factors 1 - x p of each family's denominators
    linear = {name: x * p[name] - 1 for name in ("a", "b", "c", "d") if name in p}
    names = {
        Family.S1: ["a", "c"],
        Family.S2: ["a"],
        Family.S3: ["a", "d"],
        Family.S4: ["a", "b", "d"],
        Family.S5: ["a", "b", "c", "d"],
        Family.S6: ["a"],
        Family.S7: ["a", "c"],
    }[spec.family]
    factors = [(f"x{name}-1", linear[name]) for name in names]
    if spec.family is Family.S3:
        a, b, c, d = p["a"], p["b"], p["c"], p["d"]
        factors.append(("abx-acx-bdx+c", a * b * x - a * c * x - b * d * x + c))
    if spec.family is Family.S6:
        factors.append(("n(x,x)", _n(p["a"], p["b"], p["c"], p["d"], x, x)))
    return factors


def closed_form_poles(spec: FamilyInstance, x: ScalarLike) -> str | None:
    """Name of the first closed-form denominator factor vanishing at ``x``."""
    if not spec.family.is_classified:
        raise CatalogError(f"No closed form for {spec.family.value}")
    x = as_scalar(x)
    return next((name for name, value in _pole_factors(spec, x) if value == 0), None)


def closed_form_R(spec: FamilyInstance, x: ScalarLike, y: ScalarLike) -> Matrix:
    """Explicit braided R-matrix (I - yS)(I - xS)^-1 of a 4x4 family.

    Raises:
        CatalogError: If the family has no closed form
        PoleError: If a denominator factor vanishes at (x, params)
    """
    x, y = as_scalar(x), as_scalar(y)
    pole = closed_form_poles(spec, x)
    if pole is not None:
        raise PoleError(f"Pole of the closed form: {pole} = 0 at x={scalar_format(x)}", pole)

    p = spec.params
    a, b, c = p["a"], p["b"], p["c"]
    d, e = p.get("d"), p.get("e")
    h = x - y

    # diagonal ratio for an eigenvalue v of S
    def r(v: Fraction) -> Fraction:
        return (y * v - 1) / (x * v - 1)

    xa, xc = x * a - 1, x * c - 1
    family = spec.family

    if family is Family.S1:
        rows = [
            [r(a), 0, 0, 0],
            [b * h / (xc * xa), r(c), 0, 0],
            [d * h / xa**2, 0, r(a), 0],
            [-x * e * b * h / (xc * xa**2), e * h / (xc * xa), 0, r(a)],
        ]
    elif family is Family.S2:
        corner = h * (a * d * x - x * c * b - e * x * b - x * c**2 + x * c * e - d) / xa**3
        rows = [
            [r(a), b * h / xa**2, c * h / xa**2, corner],
            [0, r(a), 0, e * h / xa**2],
            [0, 0, r(a), (b + c - e) * h / xa**2],
            [0, 0, 0, r(a)],
        ]
    elif family is Family.S3:

        def q(v: Fraction) -> Fraction:
            return a * b * v - a * c * v - b * d * v + c

        rows = [
            [r(a), 0, 0, 0],
            [-b * c * h / (xa * q(x)), q(y) / q(x), 0, 0],
            [c * h / (xa * (x * d - 1)), 0, r(d), 0],
            [0, 0, 0, r(a)],
        ]
    elif family is Family.S4:
        rows = [
            [r(a), 0, 0, 0],
            [0, r(b), 0, 0],
            [0, c * h / ((x * b - 1) * xa), r(a), 0],
            [0, 0, 0, r(d)],
        ]
    elif family is Family.S5:
        rows = [
            [r(a), 0, 0, 0],
            [0, r(b), 0, 0],
            [0, 0, r(c), 0],
            [0, 0, 0, r(d)],
        ]
    elif family is Family.S6:
        nxx = _n(a, b, c, d, x, x)
        # (2,2) carries n(x,y) and (4,4) carries n(y,x)
        rows = [
            [r(a), 0, 0, 0],
            [b * h / nxx, _n(a, b, c, d, x, y) / nxx, -b * d * x * h / (xa * nxx), d * h / nxx],
            [0, 0, r(a), 0],
            [
                b**2 * x * h / (xa * nxx),
                -b * h / nxx,
                b * h * xc / (xa * nxx),
                _n(a, b, c, d, y, x) / nxx,
            ],
        ]
    else:
        # S7
        rows = [
            [r(a), 0, 0, 0],
            [b * h / (xc * xa), r(c), (c - a) * h / (xc * xa), 0],
            [0, 0, r(a), 0],
            [0, 0, 0, r(c)],
        ]

    return as_matrix(rows)
