"""Relation checkers for the braid-like algebras and the Möbius map.

The S algebra has generators s_i with [s_{i+1} s_i, s_i + s_{i+1}] = 0 and
[s_i, s_j] = 0 for |i - j| > 1. The T algebra swaps the order of the product:
[t_i t_{i+1}, t_i + t_{i+1}] = 0. Both are checked on matrix representations
only; a check returns a :class:`CheckReport` rather than raising.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Literal, Sequence

from baxterise.core.linalg import (
    DimensionError,
    LinalgError,
    LocalOperator,
    Matrix,
    SingularMatrixError,
    commutator,
    embed,
    first_nonzero,
    identity,
    mat_inverse,
)
from baxterise.core.scalar import ScalarLike, as_scalar, scalar_format

logger = logging.getLogger(__name__)

Convention = Literal["S", "T"]


class MobiusError(LinalgError):
    """Raised when a Möbius map is undefined on a representation."""

    pass


@dataclass(frozen=True)
class Witness:
    """First failing entry of an identity check."""

    row: int
    col: int
    residual: Fraction
    desc: str

    def to_dict(self) -> dict[str, Any]:
        return {
            "row": self.row,
            "col": self.col,
            "residual": scalar_format(self.residual),
            "desc": self.desc,
        }

    def describe(self) -> str:
        return f"{self.desc}: entry ({self.row}, {self.col}) = {scalar_format(self.residual)}"


@dataclass(frozen=True)
class CheckReport:
    """Outcome of an exact identity check; a witness is present iff it failed."""

    passed: bool
    witness: Witness | None = None

    def __post_init__(self):
        if self.passed != (self.witness is None):
            raise ValueError("A report has a witness exactly when it failed")

    @classmethod
    def ok(cls) -> "CheckReport":
        return cls(passed=True)

    def to_dict(self) -> dict[str, Any]:
        return {
            "passed": self.passed,
            "witness": self.witness.to_dict() if self.witness else None,
        }


def check_zero(residual: Matrix, desc: str) -> CheckReport:
    """Pass iff ``residual`` vanishes; otherwise report its first nonzero entry."""
    entry = first_nonzero(residual)
    if entry is None:
        return CheckReport.ok()
    row, col, value = entry
    logger.info("Check failed: %s at (%d, %d), residual %s", desc, row, col, value)
    return CheckReport(passed=False, witness=Witness(row, col, value, desc))


def check_equal(a: Matrix, b: Matrix, desc: str) -> CheckReport:
    if a.shape != b.shape:
        raise DimensionError(f"{desc}: shapes {a.shape} and {b.shape} differ")
    return check_zero(a - b, desc)


def merge_reports(reports: Sequence[CheckReport]) -> CheckReport:
    """The first failing report, or a pass if all passed."""
    return next((r for r in reports if not r.passed), CheckReport.ok())


def check_S_relation(s: LocalOperator) -> CheckReport:
    """[S23 S12, S12 + S23] = 0 on three sites."""
    s12, s23 = embed(s, 1, 3), embed(s, 2, 3)
    return check_zero(commutator(s23 @ s12, s12 + s23), "[S23 S12, S12 + S23]")


def check_T_relation(t: LocalOperator) -> CheckReport:
    """[T12 T23, T12 + T23] = 0 on three sites."""
    t12, t23 = embed(t, 1, 3), embed(t, 2, 3)
    return check_zero(commutator(t12 @ t23, t12 + t23), "[T12 T23, T12 + T23]")


def check_chain_relations(
    ops: Sequence[Matrix], n: int, m: int, convention: Convention = "S"
) -> CheckReport:
    """Check all defining relations for a chain of generator images.

    Args:
        ops: Images of the n-1 generators, each of dimension m**n
        n: Chain length
        m: Local dimension
        convention: ``"S"`` for [g_{i+1} g_i, ...] or ``"T"`` for [g_i g_{i+1}, ...]

    Raises:
        DimensionError: If the list length or a matrix dimension is wrong
    """
    if len(ops) != n - 1:
        raise DimensionError(f"Expected {n - 1} generators for n={n}, got {len(ops)}")
    dim = m**n
    for k, op in enumerate(ops, 1):
        if op.shape != (dim, dim):
            raise DimensionError(f"Generator {k} has shape {op.shape}, expected {dim}x{dim}")

    # neighbouring generators
    reports = []
    for i in range(n - 2):
        a, b = ops[i], ops[i + 1]
        product = b @ a if convention == "S" else a @ b
        reports.append(check_zero(commutator(product, a + b), f"cubic relation at i={i + 1}"))
    # far generators commute
    for i in range(n - 1):
        for j in range(i + 2, n - 1):
            reports.append(
                check_zero(commutator(ops[i], ops[j]), f"[g{i + 1}, g{j + 1}] at distance > 1")
            )
    return merge_reports(reports)


def chain_images(s: LocalOperator, n: int) -> list[Matrix]:
    """Generator images g_i = I^(i-1) ⊗ S ⊗ I^(n-i-1), i = 1..n-1."""
    return [embed(s, i, n) for i in range(1, n)]


def reverse_chain(ops: Sequence[Matrix]) -> list[Matrix]:
    """Relabel generators by i -> n - i, the S to T isomorphism."""
    return list(reversed(ops))


@dataclass(frozen=True)
class MobiusParams:
    """Parameters of s -> (alpha + beta s)(1 + gamma s)^-1."""

    alpha: Fraction
    beta: Fraction
    gamma: Fraction

    @classmethod
    def of(cls, alpha: ScalarLike, beta: ScalarLike, gamma: ScalarLike) -> "MobiusParams":
        return cls(as_scalar(alpha), as_scalar(beta), as_scalar(gamma))

    def compose(self, inner: "MobiusParams") -> "MobiusParams":
        """Parameters of ``self ∘ inner``.

        Uses the product of the matrices [[beta, alpha], [gamma, 1]], rescaled so the
        lower-right entry is 1.

        Raises:
            MobiusError: If the rescaling factor vanishes
        """
        scale = self.gamma * inner.alpha + 1
        if scale == 0:
            raise MobiusError("Composed Möbius map has no normalized form (1 + gamma' alpha = 0)")
        return MobiusParams(
            alpha=(self.beta * inner.alpha + self.alpha) / scale,
            beta=(self.beta * inner.beta + self.alpha * inner.gamma) / scale,
            gamma=(self.gamma * inner.beta + inner.gamma) / scale,
        )


IDENTITY_MOBIUS = MobiusParams(Fraction(0), Fraction(1), Fraction(0))


def mobius(s: LocalOperator, p: MobiusParams) -> LocalOperator:
    """(alpha + beta S)(1 + gamma S)^-1.

    Raises:
        MobiusError: If 1 + gamma S is singular
    """
    one = identity(s.dim)
    try:
        denominator = mat_inverse(one + p.gamma * s.mat)
    except SingularMatrixError as e:
        raise MobiusError(
            f"Möbius map undefined: 1 + ({scalar_format(p.gamma)})S is singular"
        ) from e
    return LocalOperator(s.m, (p.alpha * one + p.beta * s.mat) @ denominator)


def affine(s: LocalOperator, alpha: ScalarLike, beta: ScalarLike) -> LocalOperator:
    """alpha + beta S."""
    return LocalOperator(s.m, as_scalar(alpha) * identity(s.dim) + as_scalar(beta) * s.mat)


def mobius_via_inverse(s: LocalOperator, p: MobiusParams) -> LocalOperator:
    """Möbius map as affine, then inversion, then affine (gamma != 0).

    Raises:
        MobiusError: If gamma is zero or 1 + gamma S is singular
    """
    if p.gamma == 0:
        raise MobiusError("Decomposition through inversion needs gamma != 0")
    shifted = affine(s, 1, p.gamma)
    try:
        inverted = LocalOperator(s.m, mat_inverse(shifted.mat))
    except SingularMatrixError as e:
        raise MobiusError("Möbius map undefined: 1 + gamma S is singular") from e
    ratio = p.beta / p.gamma
    return affine(inverted, ratio, p.alpha - ratio)


def check_hecke(g: LocalOperator, xi: ScalarLike) -> CheckReport:
    """g^2 = g + xi on two sites and g12 g23 g12 = g23 g12 g23 on three.

    Invertibility of g is not required.
    """
    xi = as_scalar(xi)
    quadratic = check_zero(
        g.mat @ g.mat - g.mat - xi * identity(g.dim), f"g^2 - g - ({scalar_format(xi)})"
    )
    if not quadratic.passed:
        return quadratic
    # braid relation
    g12, g23 = embed(g, 1, 3), embed(g, 2, 3)
    return check_zero(g12 @ g23 @ g12 - g23 @ g12 @ g23, "g12 g23 g12 - g23 g12 g23")
