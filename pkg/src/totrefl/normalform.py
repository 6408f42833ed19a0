"""Reduction of minimal presentation matrices to ``x I + sum B_j y_j``.

Row operations invert the x-coefficient matrix (Gauss-Jordan over k).  Any
degree-two residue ``sum Z_j x y_j`` left by earlier row/column operations
is then cleared by one column operation ``I - sum Z_j y_j``: since
``(x I + sum B_j y_j) Z_j y_j = Z_j x y_j``, this removes it exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotLinear, NotNormalizable, ShapeError
from .field import invert
from .linmat import LinearMatrix, SMatrix
from .tuples import MatrixTuple, presentation_from_tuple


@dataclass(frozen=True)
class NormalForm:
    tuple: MatrixTuple
    row_ops: SMatrix
    col_ops: SMatrix


def linearity_filter(d: SMatrix) -> LinearMatrix:
    return LinearMatrix.from_smatrix(d)


def normalize(d) -> NormalForm:
    """Tuple ``t`` and invertible factors with ``row_ops @ d @ col_ops == x I + sum B_j y_j``.

    ``d`` must be square with entries in the maximal ideal; degree-two
    components are allowed (scrambled presentations carry them).
    """
    if isinstance(d, LinearMatrix):
        d = d.to_smatrix()
    if d.nrows != d.ncols:
        raise ShapeError("normal form needs a square matrix")
    R = d.ring
    n = d.nrows
    C = d.constant_part()
    for r in range(n):
        for c in range(n):
            if C.rows[r][c] != 0:
                raise NotLinear(f"entry ({r}, {c}) has a nonzero constant term; "
                                "the presentation is not minimal", (r, c))
    X_inv = invert(d.part("x"))
    if X_inv is None:
        raise NotNormalizable("x-coefficient matrix is singular over k; "
                              "the matrix does not present a totally reflexive module")
    row_ops = SMatrix.constant(R, X_inv)
    e = row_ops @ d
    B = tuple(e.parts[R.y_index(j)] for j in range(1, R.i + 1))
    Z = [e.parts[R.xy_index(j)] for j in range(1, R.i + 1)]
    col_ops = SMatrix.identity(R, n)
    if any(not z.is_zero() for z in Z):
        parts = list(SMatrix.zeros(R, n).parts)
        for j, z in enumerate(Z, start=1):
            parts[R.y_index(j)] = -z
        col_ops = col_ops + SMatrix(R, n, n, tuple(parts))
    t = MatrixTuple(R, B)
    if row_ops @ d @ col_ops != presentation_from_tuple(t).to_smatrix():
        raise AssertionError("normal form factors failed to reproduce the tuple presentation")
    return NormalForm(t, row_ops, col_ops)
