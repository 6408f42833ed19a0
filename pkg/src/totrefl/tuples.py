"""Matrix tuples (B_1, ..., B_i) and the matrix factorizations they induce."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Ring
from .errors import ShapeError
from .field import KMatrix, invert
from .linmat import LinearMatrix, QMatrix
from .seeding import make_rng


@dataclass(frozen=True)
class MatrixTuple:
    ring: Ring
    B: tuple

    def __post_init__(self):
        if len(self.B) != self.ring.i:
            raise ShapeError(f"S_{self.ring.i} needs {self.ring.i} matrices, got {len(self.B)}")
        if not self.B:
            return
        n = self.B[0].nrows
        for b in self.B:
            if b.shape != (n, n):
                raise ShapeError("tuple matrices must all be n x n")
            if b.field != self.ring.field:
                raise ShapeError(f"matrix over {b.field}, ring over {self.ring.field}")

    @classmethod
    def from_lists(cls, ring, grids):
        return cls(ring, tuple(KMatrix.from_rows(ring.field, g) for g in grids))

    @classmethod
    def zeros(cls, ring, n):
        return cls(ring, tuple(KMatrix.zeros(ring.field, n) for _ in range(ring.i)))

    @property
    def n(self):
        return self.B[0].nrows

    @property
    def field(self):
        return self.ring.field

    def conjugate(self, P, P_inv=None):
        """``(P B_1 P^-1, ..., P B_i P^-1)``."""
        P_inv = invert(P) if P_inv is None else P_inv
        if P_inv is None:
            raise ValueError("conjugating matrix is singular")
        return MatrixTuple(self.ring, tuple(P @ b @ P_inv for b in self.B))

    def negated(self):
        return MatrixTuple(self.ring, tuple(-b for b in self.B))

    def transposed(self):
        return MatrixTuple(self.ring, tuple(b.T for b in self.B))

    def direct_sum(self, other):
        if self.ring != other.ring:
            raise ShapeError("direct sum of tuples over different rings")
        f = self.field
        n1, n2 = self.n, other.n
        out = []
        for a, b in zip(self.B, other.B):
            rows = [list(r) + [f.zero()] * n2 for r in a.rows]
            rows += [[f.zero()] * n1 + list(r) for r in b.rows]
            out.append(KMatrix.from_rows(f, rows))
        return MatrixTuple(self.ring, tuple(out))


def presentation_from_tuple(t: MatrixTuple) -> LinearMatrix:
    """``x I_n + sum_j B_j y_j``."""
    return LinearMatrix(t.ring, t.n, KMatrix.identity(t.field, t.n), tuple(t.B))


def sigma_from_tuple(t: MatrixTuple) -> LinearMatrix:
    """``x I_n - sum_j B_j y_j``, the other half of the factorization of x^2."""
    return presentation_from_tuple(t.negated())


def tuple_from_presentation(d: LinearMatrix) -> MatrixTuple:
    if d.X != KMatrix.identity(d.ring.field, d.n):
        raise ValueError("x-coefficient is not the identity")
    return MatrixTuple(d.ring, tuple(d.Y))


def verify_factorization(d: LinearMatrix, sigma: LinearMatrix, cap=2) -> bool:
    """Whether ``d sigma = sigma d = x^2 I`` over Q_i."""
    target = QMatrix.scalar_identity(d.ring, d.n, 2, cap)
    D, S = d.to_qmatrix(cap), sigma.to_qmatrix(cap)
    return D @ S == target and S @ D == target


def verify_matrix_factorization(t: MatrixTuple) -> bool:
    return verify_factorization(presentation_from_tuple(t), sigma_from_tuple(t))


def random_tuple(ring, n, seed, height=3, *path):
    """Reproducible tuple: uniform entries over F_p, integers in [-height, height] over Q."""
    rng = make_rng(seed, "tuple", ring.i, n, ring.field.name, *path)
    f = ring.field
    return MatrixTuple(ring, tuple(
        KMatrix.from_rows(f, [[f.sample(rng, height) for _ in range(n)] for _ in range(n)])
        for _ in range(ring.i)))


def jordan_block(field, n, lam):
    lam = field.coerce(lam)
    rows = [[lam if r == c else (field.one() if c == r + 1 else field.zero()) for c in range(n)]
            for r in range(n)]
    return KMatrix.from_rows(field, rows, n)
