"""Dense exact linear algebra on tensor-product spaces.

Matrices are square ``numpy`` arrays with ``dtype=object`` whose entries are
:class:`fractions.Fraction`. The tensor basis is ordered lexicographically with
the first factor slowest, so ``kron(A, B)`` acts as A on the first factor.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import isqrt, lcm
from typing import Any, Iterable, Literal, Sequence

import numpy as np

from baxterise.core.errors import BaxteriseError
from baxterise.core.scalar import as_scalar, scalar_format, scalar_parse

logger = logging.getLogger(__name__)

Matrix = np.ndarray

SymKind = Literal["inverse", "transpose-flip", "conjugate"]
STKind = Literal["transpose", "flip"]


class LinalgError(BaxteriseError, ArithmeticError):
    """Base class for linear algebra failures."""

    pass


class SingularMatrixError(LinalgError):
    """Raised when elimination finds no pivot."""

    def __init__(self, message: str, pivot: int):
        super().__init__(message)
        self.pivot = pivot


class DimensionError(LinalgError):
    """Raised on shape mismatches and out-of-range sites."""

    pass


def _entry(value: Any) -> Fraction:
    if isinstance(value, np.integer):
        return Fraction(int(value))
    return as_scalar(value)


def as_matrix(rows: Iterable[Iterable[Any]]) -> Matrix:
    """Build a square object matrix of fractions.

    Raises:
        DimensionError: If the rows do not form a square matrix
    """
    data = [[_entry(v) for v in row] for row in rows]
    dim = len(data)
    if dim == 0 or any(len(row) != dim for row in data):
        raise DimensionError(f"Matrix must be square and non-empty, got {dim} rows")

    arr = np.empty((dim, dim), dtype=object)
    for i, row in enumerate(data):
        for j, value in enumerate(row):
            arr[i, j] = value
    return arr


def identity(dim: int) -> Matrix:
    """Identity matrix of the given dimension."""
    return as_matrix([[int(i == j) for j in range(dim)] for i in range(dim)])


def zeros(dim: int) -> Matrix:
    """Zero matrix of the given dimension."""
    return as_matrix([[0] * dim for _ in range(dim)])


def diag(values: Sequence[Any]) -> Matrix:
    """Diagonal matrix with the given entries."""
    dim = len(values)
    return as_matrix([[values[i] if i == j else 0 for j in range(dim)] for i in range(dim)])


def mat_equal(a: Matrix, b: Matrix) -> bool:
    """Exact entrywise equality."""
    return a.shape == b.shape and bool(np.all(a == b))


def is_zero(m: Matrix) -> bool:
    return first_nonzero(m) is None


def first_nonzero(m: Matrix) -> tuple[int, int, Fraction] | None:
    """First nonzero entry in row-major order, or None for the zero matrix."""
    for i, j in np.ndindex(m.shape):
        if m[i, j] != 0:
            return i, j, Fraction(m[i, j])
    return None


def integer_form(m: Matrix) -> tuple[Matrix, int]:
    """Integer matrix N and positive scale s with m = N / s."""
    scale = lcm(*(Fraction(v).denominator for v in m.flat))
    ints = np.empty(m.shape, dtype=object)
    for idx, value in np.ndenumerate(m):
        ints[idx] = int(value * scale)
    return ints, scale


def commutator(a: Matrix, b: Matrix) -> Matrix:
    """[a, b] = ab - ba, exact.

    The products run over Python ints; only the final entries are fractions.
    """
    na, sa = integer_form(a)
    nb, sb = integer_form(b)
    scaled = na @ nb - nb @ na
    return scaled * Fraction(1, sa * sb)


def mat_power(m: Matrix, k: int) -> Matrix:
    """Non-negative integer power by repeated multiplication."""
    return reduce(lambda acc, _: acc @ m, range(k), identity(m.shape[0]))


def mat_inverse(a: Matrix) -> Matrix:
    """Exact inverse by Gauss-Jordan elimination.

    The first nonzero entry at or below the diagonal is used as pivot.

    Raises:
        DimensionError: If ``a`` is not square
        SingularMatrixError: If no pivot exists in some column
    """
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionError(f"Cannot invert non-square matrix of shape {a.shape}")

    n = a.shape[0]
    x = a.copy()
    y = identity(n)

    # x is reduced to I while y accumulates the same row operations
    for i in range(n):
        pivot = next((r for r in range(i, n) if x[r, i] != 0), None)
        if pivot is None:
            raise SingularMatrixError(f"Matrix is singular: no pivot in column {i}", pivot=i)
        if pivot != i:
            x[[i, pivot]] = x[[pivot, i]]
            y[[i, pivot]] = y[[pivot, i]]

        # normalize the pivot row, then clear column i above and below it
        scale = x[i, i]
        x[i, :] = x[i, :] / scale
        y[i, :] = y[i, :] / scale

        for r in range(n):
            factor = x[r, i]
            if r != i and factor != 0:
                x[r, :] = x[r, :] - factor * x[i, :]
                y[r, :] = y[r, :] - factor * y[i, :]

    return y


def determinant(a: Matrix) -> Fraction:
    """Exact determinant by Gaussian elimination."""
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionError(f"Determinant of non-square matrix of shape {a.shape}")

    n = a.shape[0]
    x = a.copy()
    det = Fraction(1)

    for i in range(n):
        pivot = next((r for r in range(i, n) if x[r, i] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != i:
            x[[i, pivot]] = x[[pivot, i]]
            det = -det

        det *= x[i, i]
        # rows above i are already triangular
        for r in range(i + 1, n):
            factor = x[r, i] / x[i, i]
            if factor != 0:
                x[r, :] = x[r, :] - factor * x[i, :]

    return det


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product; the first factor is the slowest index."""
    return np.kron(a, b)


def local_dimension(dim: int) -> int:
    """Recover m from a two-site dimension m**2."""
    m = isqrt(dim)
    if m * m != dim or m < 2:
        raise DimensionError(f"Dimension {dim} is not m*m for a local dimension m >= 2")
    return m


@dataclass(frozen=True, eq=False)
class LocalOperator:
    """A two-site operator: a matrix of dimension m*m with local dimension m."""

    m: int
    mat: Matrix

    def __post_init__(self):
        if self.m < 2:
            raise DimensionError(f"Local dimension must be >= 2, got {self.m}")
        object.__setattr__(self, "mat", as_matrix(self.mat))
        if self.mat.shape[0] != self.m * self.m:
            raise DimensionError(
                f"Local operator for m={self.m} needs dimension {self.m * self.m}, "
                f"got {self.mat.shape[0]}"
            )

    @classmethod
    def from_matrix(cls, mat: Matrix) -> "LocalOperator":
        """Infer the local dimension from the matrix size."""
        return cls(local_dimension(mat.shape[0]), mat)

    @property
    def dim(self) -> int:
        return self.m * self.m

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LocalOperator):
            return NotImplemented
        return self.m == other.m and mat_equal(self.mat, other.mat)

    __hash__ = None  # type: ignore[assignment]


def embed(op: LocalOperator, i: int, n: int) -> Matrix:
    """Place ``op`` on factors (i, i+1) of an n-site chain, identity elsewhere.

    Sites are numbered from 1.

    Raises:
        DimensionError: If i is not in 1..n-1
    """
    if not 1 <= i <= n - 1:
        raise DimensionError(f"Site {i} out of range for a chain of length {n}")
    left = identity(op.m ** (i - 1))
    right = identity(op.m ** (n - i - 1))
    return kron(kron(left, op.mat), right)


def embed_at(mat: Matrix, m: int, sites: tuple[int, int], nsites: int) -> Matrix:
    """Place a two-site matrix on an arbitrary ordered pair of factors.

    ``sites`` are 0-based; the first tensor slot of ``mat`` acts on ``sites[0]``.
    """
    i, j = sites
    if i == j or not (0 <= i < nsites and 0 <= j < nsites):
        raise DimensionError(f"Invalid site pair {sites} for {nsites} factors")
    if mat.shape != (m * m, m * m):
        raise DimensionError(f"Expected a {m * m}x{m * m} matrix, got {mat.shape}")

    shape = (m,) * nsites
    dim = m**nsites
    block = mat.reshape(m, m, m, m)
    # block[bi, bj, ai, aj] is the amplitude for |ai aj> -> |bi bj>
    result = zeros(dim)

    for col in range(dim):
        # basis index -> one digit per factor, factor 0 most significant
        digits = [int(d) for d in np.unravel_index(col, shape)]
        ai, aj = digits[i], digits[j]
        for bi in range(m):
            for bj in range(m):
                value = block[bi, bj, ai, aj]
                if value == 0:
                    continue
                # spectator factors keep their digits
                out = list(digits)
                out[i], out[j] = bi, bj
                result[int(np.ravel_multi_index(out, shape)), col] = value

    return result


def permutation_op(m: int) -> LocalOperator:
    """The swap P(u ⊗ v) = v ⊗ u on two copies of an m-dimensional space."""
    if m < 2:
        raise DimensionError(f"Local dimension must be >= 2, got {m}")
    mat = zeros(m * m)
    # |i j> sits at index i*m + j
    for i in range(m):
        for j in range(m):
            mat[j * m + i, i * m + j] = Fraction(1)
    return LocalOperator(m, mat)


def shift_sources(m: int, n: int) -> np.ndarray:
    """Column of the single 1 in each row of the cyclic shift."""
    shape = (m,) * n
    src = np.empty(m**n, dtype=int)
    for col in range(m**n):
        digits = [int(d) for d in np.unravel_index(col, shape)]
        # U sends |a1 a2 ... an> to |a2 ... an a1>
        src[int(np.ravel_multi_index(digits[1:] + digits[:1], shape))] = col
    return src


def cyclic_shift(m: int, n: int) -> Matrix:
    """The operator |a1 a2 ... an> -> |a2 ... an a1> on an n-site chain."""
    mat = zeros(m**n)
    for row, col in enumerate(shift_sources(m, n)):
        mat[row, col] = Fraction(1)
    return mat


def conjugate_by_shift(mat: Matrix, m: int, n: int) -> Matrix:
    """U mat U^-1 for the cyclic shift U, as a relabelling of rows and columns."""
    src = shift_sources(m, n)
    return mat[np.ix_(src, src)]


def partial_trace_first(mat: Matrix, m: int, n: int) -> Matrix:
    """Trace out the first (auxiliary) factor of an (n+1)-factor operator.

    Raises:
        DimensionError: If ``mat`` is not of dimension m**(n+1)
    """
    d = m**n
    if mat.shape != (m * d, m * d):
        raise DimensionError(f"Expected dimension {m * d} for m={m}, n={n}, got {mat.shape[0]}")
    blocks = mat.reshape(m, d, m, d)
    return sum((blocks[a, :, a, :] for a in range(1, m)), blocks[0, :, 0, :].copy())


def sym_transform(
    s: LocalOperator, kind: SymKind, q: Matrix | None = None
) -> LocalOperator:
    """Transformations that map solutions of the S relation to solutions.

    ``inverse`` is S^-1, ``transpose-flip`` is the full transpose of P S P and
    ``conjugate`` is (Q ⊗ Q) S (Q ⊗ Q)^-1.

    Raises:
        SingularMatrixError: If S (for inverse) or Q (for conjugate) is singular
    """
    if kind == "inverse":
        return LocalOperator(s.m, mat_inverse(s.mat))
    if kind == "transpose-flip":
        return LocalOperator(s.m, st_map(s, "flip").mat.T.copy())
    if kind == "conjugate":
        if q is None:
            raise DimensionError("Conjugation needs a matrix Q")
        if q.shape != (s.m, s.m):
            raise DimensionError(f"Q must be {s.m}x{s.m}, got {q.shape}")
        qq = kron(q, q)
        return LocalOperator(s.m, qq @ s.mat @ mat_inverse(qq))
    raise ValueError(f"Unknown transformation: {kind}")


def st_map(s: LocalOperator, kind: STKind) -> LocalOperator:
    """Maps from the S side to the T side: full transpose or P S P."""
    if kind == "transpose":
        return LocalOperator(s.m, s.mat.T.copy())
    if kind == "flip":
        p = permutation_op(s.m).mat
        return LocalOperator(s.m, p @ s.mat @ p)
    raise ValueError(f"Unknown S/T map: {kind}")


def matrix_to_json(mat: Matrix) -> dict[str, Any]:
    """Serialize to ``{"dim": N, "entries": [["p/q", ...], ...]}``."""
    return {
        "dim": int(mat.shape[0]),
        "entries": [[scalar_format(v) for v in row] for row in mat],
    }


def matrix_from_json(data: dict[str, Any]) -> Matrix:
    """Parse the JSON matrix format.

    Raises:
        DimensionError: If ``dim`` disagrees with the entries
        ScalarError: If an entry is not a canonical scalar string
    """
    try:
        dim = int(data["dim"])
        entries = data["entries"]
    except (KeyError, TypeError, ValueError) as e:
        raise DimensionError(f"Malformed matrix JSON: {e}") from e

    mat = as_matrix([[scalar_parse(str(v)) for v in row] for row in entries])
    if mat.shape[0] != dim:
        raise DimensionError(f"Declared dim {dim} but found {mat.shape[0]} rows")
    return mat
