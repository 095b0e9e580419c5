"""Transfer matrices and Hamiltonians of periodic chains.

The auxiliary space is factor 0 and always comes first; physical sites are the
factors 1..n. R_{0k}(x, z) = Ř_{0k}(x, z) P_{0k}, and the transfer matrix is
t(x|z) = tr_0 R_{01} ... R_{0n}.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from baxterise.core.algebra import MobiusParams, mobius
from baxterise.core.baxterisation import baxterise_sigma, resolvent
from baxterise.core.linalg import (
    DimensionError,
    LocalOperator,
    Matrix,
    conjugate_by_shift,
    embed,
    embed_at,
    identity,
    mat_inverse,
    partial_trace_first,
    permutation_op,
    st_map,
    sym_transform,
    zeros,
)
from baxterise.core.scalar import ScalarLike, as_scalar

logger = logging.getLogger(__name__)

MAX_TRANSFER_DIM = 1024

TransformKind = Literal["conjugate", "transpose", "flip", "mobius"]


@dataclass(frozen=True, eq=False)
class ChainSpec:
    """A periodic chain of n sites built from S with homogeneous inhomogeneity z."""

    s: LocalOperator
    n: int
    z: Fraction = Fraction(0)

    def __post_init__(self):
        if self.n < 2:
            raise DimensionError(f"A chain needs at least 2 sites, got n={self.n}")
        object.__setattr__(self, "z", as_scalar(self.z))

    @property
    def m(self) -> int:
        return self.s.m


def _check_dim(spec: ChainSpec, what: str, dim: int) -> None:
    if dim > MAX_TRANSFER_DIM:
        raise DimensionError(
            f"{what} needs dimension {dim} (m={spec.m}, n={spec.n}), "
            f"above the limit {MAX_TRANSFER_DIM}"
        )


def _check_transfer_dim(spec: ChainSpec) -> None:
    # the auxiliary space makes it one factor larger than the chain
    _check_dim(spec, "Transfer matrix", spec.m ** (spec.n + 1))


def unbraided_R(s: LocalOperator, x: ScalarLike, y: ScalarLike) -> LocalOperator:
    """R(x, y) = Ř(x, y) P."""
    return LocalOperator(s.m, baxterise_sigma(s, x, y) @ permutation_op(s.m).mat)


def rmatrix_derivative(s: LocalOperator, x: ScalarLike, y: ScalarLike) -> Matrix:
    """d/dx Ř(x, y) = (I - yS)(I - xS)^-1 S (I - xS)^-1."""
    x, y = as_scalar(x), as_scalar(y)
    inv = resolvent(s, x, "x")
    return (identity(s.dim) - y * s.mat) @ inv @ s.mat @ inv


def _auxiliary_row(spec: ChainSpec, local: list[Matrix]) -> Matrix:
    """tr_0 of the ordered product of ``local[k-1]`` placed on factors (0, k)."""
    # factor 0 is the auxiliary space, factors 1..n the chain
    product = identity(spec.m ** (spec.n + 1))
    for k, mat in enumerate(local, 1):
        product = product @ embed_at(mat, spec.m, (0, k), spec.n + 1)
    return partial_trace_first(product, spec.m, spec.n)


def transfer_matrix(spec: ChainSpec, x: ScalarLike) -> Matrix:
    """t(x|z) = tr_0 R_{01}(x,z) ... R_{0n}(x,z).

    Raises:
        ResolventError: If I - xS is singular
        DimensionError: If m**(n+1) exceeds the size limit
    """
    _check_transfer_dim(spec)
    r = unbraided_R(spec.s, x, spec.z).mat
    return _auxiliary_row(spec, [r] * spec.n)


def hamiltonian_density(s: LocalOperator, z: ScalarLike) -> LocalOperator:
    """h = S (I - zS)^-1, the Möbius image of S with parameters (0, 1, -z)."""
    return LocalOperator(s.m, s.mat @ resolvent(s, z, "z"))


def boundary_term(h: LocalOperator, n: int) -> Matrix:
    """h acting on the ordered sites (n, 1) of a periodic chain.

    Obtained as U h_{12} U^-1 with U the cyclic shift |a1 ... an> -> |a2 ... an a1>.
    """
    return conjugate_by_shift(embed(h, 1, n), h.m, n)


def hamiltonian(spec: ChainSpec) -> Matrix:
    """H = sum_{j=1}^{n-1} h_{j,j+1} + h_{n,1}.

    Raises:
        ResolventError: If I - zS is singular
        DimensionError: If m**n exceeds the size limit
    """
    _check_dim(spec, "Hamiltonian", spec.m**spec.n)
    h = hamiltonian_density(spec.s, spec.z)
    total = zeros(spec.m**spec.n)
    # bulk bonds, then the wrap-around bond
    for j in range(1, spec.n):
        total = total + embed(h, j, spec.n)
    return total + boundary_term(h, spec.n)


def transfer_derivative(spec: ChainSpec) -> Matrix:
    """(d/dx t(x|z) at x = z) t(z|z)^-1, by the product rule over the n factors.

    Raises:
        ResolventError: If I - zS is singular
        SingularMatrixError: If t(z|z) is singular
    """
    _check_transfer_dim(spec)
    p = permutation_op(spec.m).mat
    r = unbraided_R(spec.s, spec.z, spec.z).mat
    dr = rmatrix_derivative(spec.s, spec.z, spec.z) @ p
    # product rule: differentiate one factor at a time

    derivative = zeros(spec.m**spec.n)
    for k in range(spec.n):
        factors = [r] * spec.n
        factors[k] = dr
        derivative = derivative + _auxiliary_row(spec, factors)

    return derivative @ mat_inverse(transfer_matrix(spec, spec.z))


def integrable_transform(
    h: LocalOperator,
    kind: TransformKind,
    q: Matrix | None = None,
    params: MobiusParams | None = None,
) -> LocalOperator:
    """Transformations of a density that keep the model integrable.

    ``transpose`` and ``flip`` send an S-side density to a T-side one.
    """
    if kind == "conjugate":
        return sym_transform(h, "conjugate", q)
    if kind == "transpose":
        return st_map(h, "transpose")
    if kind == "flip":
        return st_map(h, "flip")
    if kind == "mobius":
        if params is None:
            raise ValueError("Möbius transformation needs parameters")
        return mobius(h, params)
    raise ValueError(f"Unknown transformation: {kind}")
