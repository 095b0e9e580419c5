"""Baxterisation engine and the braided R-matrix property suite.

An R-matrix source is any callable ``(x, y) -> Matrix`` on the two-site space, so
the same checkers run on Baxterised, closed-form and product R-matrices.
"""

import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from typing import Literal

from baxterise.core.algebra import CheckReport, check_equal, check_zero, merge_reports
from baxterise.core.catalog import PoleError
from baxterise.core.linalg import (
    LinalgError,
    LocalOperator,
    Matrix,
    SingularMatrixError,
    commutator,
    embed,
    identity,
    kron,
    mat_inverse,
    permutation_op,
)
from baxterise.core.scalar import ScalarLike, as_scalar, scalar_format

logger = logging.getLogger(__name__)

RFunction = Callable[[Fraction, Fraction], Matrix]
RKind = Literal["transpose-flip", "conjugate"]


class ResolventError(LinalgError):
    """Raised when I - tS is singular at a spectral parameter."""

    def __init__(self, message: str, name: str, value: Fraction):
        super().__init__(message)
        self.name = name
        self.value = value


@dataclass(frozen=True)
class SpectralPoint:
    """Spectral parameters of one check: (x, y) and the third value z."""

    x: Fraction
    y: Fraction
    z: Fraction = Fraction(0)

    @classmethod
    def of(cls, x: ScalarLike, y: ScalarLike, z: ScalarLike = 0) -> "SpectralPoint":
        return cls(as_scalar(x), as_scalar(y), as_scalar(z))

    def to_dict(self) -> dict[str, str]:
        return {k: scalar_format(v) for k, v in (("x", self.x), ("y", self.y), ("z", self.z))}


def resolvent(op: LocalOperator, t: ScalarLike, name: str = "x") -> Matrix:
    """(I - t op)^-1.

    Raises:
        ResolventError: If I - t op is singular
    """
    t = as_scalar(t)
    try:
        return mat_inverse(identity(op.dim) - t * op.mat)
    except SingularMatrixError as e:
        raise ResolventError(
            f"I - {name}S is singular at {name}={scalar_format(t)}", name=name, value=t
        ) from e


def baxterise_sigma(s: LocalOperator, x: ScalarLike, y: ScalarLike) -> Matrix:
    """(I - yS)(I - xS)^-1."""
    x, y = as_scalar(x), as_scalar(y)
    return (identity(s.dim) - y * s.mat) @ resolvent(s, x, "x")


def baxterise_tau(t: LocalOperator, x: ScalarLike, y: ScalarLike) -> Matrix:
    """(I - xT)(I - yT)^-1; the spectral parameters are flipped relative to the S side."""
    x, y = as_scalar(x), as_scalar(y)
    return (identity(t.dim) - x * t.mat) @ resolvent(t, y, "y")


def sigma_rmatrix(s: LocalOperator) -> RFunction:
    return partial(baxterise_sigma, s)


def tau_rmatrix(t: LocalOperator) -> RFunction:
    return partial(baxterise_tau, t)


def a_operator(s: LocalOperator, x: ScalarLike) -> Matrix:
    """I - x(S12 + S23) + x^2 S23 S12 on three sites."""
    x = as_scalar(x)
    s12, s23 = embed(s, 1, 3), embed(s, 2, 3)
    return identity(s.m**3) - x * (s12 + s23) + x * x * (s23 @ s12)


def a_operator_product(s: LocalOperator, x: ScalarLike) -> Matrix:
    """(I - x S23)(I - x S12), the factored form of :func:`a_operator`."""
    x = as_scalar(x)
    one = identity(s.m**3)
    return (one - x * embed(s, 2, 3)) @ (one - x * embed(s, 1, 3))


def check_a_commutativity(s: LocalOperator, x: ScalarLike, y: ScalarLike) -> CheckReport:
    """[A(x), A(y)] = 0; equivalent to the braided YBE of the Baxterisation."""
    return check_zero(commutator(a_operator(s, x), a_operator(s, y)), "[A(x), A(y)]")


def _on_site(mat: Matrix, m: int, i: int, n: int) -> Matrix:
    return embed(LocalOperator(m, mat), i, n)


def check_braided_ybe(
    r: RFunction, m: int, x: ScalarLike, y: ScalarLike, z: ScalarLike
) -> CheckReport:
    """R1(x,y) R2(x,z) R1(y,z) = R2(y,z) R1(x,z) R2(x,y) on three sites."""
    x, y, z = as_scalar(x), as_scalar(y), as_scalar(z)
    rxy, rxz, ryz = r(x, y), r(x, z), r(y, z)
    # Ri acts on sites (i, i+1)
    lhs = _on_site(rxy, m, 1, 3) @ _on_site(rxz, m, 2, 3) @ _on_site(ryz, m, 1, 3)
    rhs = _on_site(ryz, m, 2, 3) @ _on_site(rxz, m, 1, 3) @ _on_site(rxy, m, 2, 3)
    return check_equal(lhs, rhs, "braided YBE")


def check_unitarity(r: RFunction, m: int, points: Sequence[SpectralPoint]) -> CheckReport:
    """R(x,y) R(y,x) = I at every point."""
    one = identity(m * m)
    return merge_reports(
        [check_equal(r(p.x, p.y) @ r(p.y, p.x), one, "R(x,y) R(y,x) - I") for p in points]
    )


def check_regularity(r: RFunction, m: int, points: Sequence[SpectralPoint]) -> CheckReport:
    """R(x,x) = I at every point."""
    one = identity(m * m)
    return merge_reports([check_equal(r(p.x, p.x), one, "R(x,x) - I") for p in points])


def check_locality(r: RFunction, m: int, points: Sequence[SpectralPoint]) -> CheckReport:
    """R at sites (1,2) and at sites (3,4) of a 4-site chain commute."""
    reports = []
    for p in points:
        near = _on_site(r(p.x, p.y), m, 1, 4)
        far = _on_site(r(p.y, p.z), m, 3, 4)
        reports.append(check_zero(commutator(near, far), "[R1(x,y), R3(y,z)]"))
    return merge_reports(reports)


def check_rmatrix_suite(
    r: RFunction, m: int, points: Sequence[SpectralPoint]
) -> dict[str, CheckReport]:
    """YBE, unitarity, regularity and locality at the given points."""
    return {
        "ybe": merge_reports([check_braided_ybe(r, m, p.x, p.y, p.z) for p in points]),
        "unitarity": check_unitarity(r, m, points),
        "regularity": check_regularity(r, m, points),
        "locality": check_locality(r, m, points),
    }


def rmatrix_transform(r: RFunction, m: int, kind: RKind, q: Matrix | None = None) -> RFunction:
    """R-matrices induced by the symmetry transformations of the generator.

    ``transpose-flip`` gives (P R P)^t, ``conjugate`` gives (Q ⊗ Q) R (Q ⊗ Q)^-1.
    """
    if kind == "transpose-flip":
        p = permutation_op(m).mat

        def flipped(x: Fraction, y: Fraction) -> Matrix:
            return (p @ r(x, y) @ p).T.copy()

        return flipped
    if kind == "conjugate":
        if q is None:
            raise ValueError("Conjugation needs a matrix Q")
        qq = kron(q, q)
        qq_inv = mat_inverse(qq)
        # invert once for all spectral points

        def conjugated(x: Fraction, y: Fraction) -> Matrix:
            return qq @ r(x, y) @ qq_inv

        return conjugated
    raise ValueError(f"Unknown R-matrix transformation: {kind}")


def hecke_rmatrix(g: LocalOperator, z1: ScalarLike, z2: ScalarLike) -> Matrix:
    """1 + (z2 - z1)/(z1 - 1) g for an idempotent braid generator g.

    Raises:
        PoleError: If z1 = 1
    """
    z1, z2 = as_scalar(z1), as_scalar(z2)
    if z1 == 1:
        raise PoleError("Hecke R-matrix has a pole at z1 = 1", "z1-1")
    return identity(g.dim) + (z2 - z1) / (z1 - 1) * g.mat


def product_rmatrix(s: LocalOperator, t: LocalOperator, x: ScalarLike, z: ScalarLike) -> Matrix:
    """(I - zS)(I - xS)^-1 (I - xT)(I - zT)^-1."""
    if s.m != t.m:
        raise LinalgError(f"S and T live on different local dimensions ({s.m} and {t.m})")
    # the two factors commute iff rho_i nu_ij = mu_ij zeta_j
    return baxterise_sigma(s, x, z) @ baxterise_tau(t, x, z)


def product_rfunction(s: LocalOperator, t: LocalOperator) -> RFunction:
    return partial(product_rmatrix, s, t)
