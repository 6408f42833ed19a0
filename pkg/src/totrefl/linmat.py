"""Matrices over S_i and Q_i.

An :class:`SMatrix` stores one k-matrix per monomial, so products reduce to
k-matrix products combined through the monomial multiplication table.
Flattened coordinates are monomial-major: index ``m * rows + r``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import QElement, Ring, SElement
from .errors import CapExceeded, NotLinear, RingMismatch, ShapeError
from .field import KMatrix, invert
from .seeding import make_rng


def _check(a, b):
    if a.ring != b.ring:
        raise RingMismatch("matrices over different rings")


@dataclass(frozen=True)
class SMatrix:
    ring: Ring
    nrows: int
    ncols: int
    parts: tuple  # parts[m] is the coefficient matrix of monomial m

    @classmethod
    def zeros(cls, ring, nrows, ncols=None):
        ncols = nrows if ncols is None else ncols
        z = KMatrix.zeros(ring.field, nrows, ncols)
        return cls(ring, nrows, ncols, (z,) * ring.dim)

    @classmethod
    def identity(cls, ring, n):
        return cls.constant(ring, KMatrix.identity(ring.field, n))

    @classmethod
    def constant(cls, ring, m: KMatrix):
        z = KMatrix.zeros(ring.field, m.nrows, m.ncols)
        return cls(ring, m.nrows, m.ncols, (m,) + (z,) * (ring.dim - 1))

    @classmethod
    def from_parts(cls, ring, parts):
        parts = tuple(parts)
        if len(parts) != ring.dim:
            raise ShapeError(f"need {ring.dim} coefficient matrices")
        shape = parts[0].shape
        if any(p.shape != shape for p in parts) or any(p.field != ring.field for p in parts):
            raise ShapeError("coefficient matrices disagree in shape or field")
        return cls(ring, shape[0], shape[1], parts)

    @classmethod
    def from_entries(cls, ring, grid, ncols=None):
        grid = [list(r) for r in grid]
        nrows = len(grid)
        ncols = len(grid[0]) if ncols is None else ncols
        f = ring.field
        parts = []
        for m in range(ring.dim):
            parts.append(KMatrix(f, tuple(tuple(e.coeffs[m] for e in row) for row in grid), ncols))
        return cls(ring, nrows, ncols, tuple(parts))

    @classmethod
    def from_flat_columns(cls, ring, columns, nrows):
        """Matrix whose columns are flattened vectors of S^nrows."""
        f = ring.field
        parts = []
        for m in range(ring.dim):
            rows = tuple(tuple(col[m * nrows + r] for col in columns) for r in range(nrows))
            parts.append(KMatrix(f, rows, len(columns)))
        return cls(ring, nrows, len(columns), tuple(parts))

    def entry(self, r, c) -> SElement:
        return SElement(self.ring, tuple(p.rows[r][c] for p in self.parts))

    def entries(self):
        return [[self.entry(r, c) for c in range(self.ncols)] for r in range(self.nrows)]

    def part(self, name):
        return self.parts[self.ring.index(name)]

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __add__(self, other):
        _check(self, other)
        return SMatrix(self.ring, self.nrows, self.ncols,
                       tuple(a + b for a, b in zip(self.parts, other.parts)))

    def __sub__(self, other):
        _check(self, other)
        return SMatrix(self.ring, self.nrows, self.ncols,
                       tuple(a - b for a, b in zip(self.parts, other.parts)))

    def __neg__(self):
        return SMatrix(self.ring, self.nrows, self.ncols, tuple(-a for a in self.parts))

    def __matmul__(self, other):
        return smat_mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, SMatrix):
            return NotImplemented
        return self.ring == other.ring and self.shape == other.shape and self.parts == other.parts

    __hash__ = None

    def scale(self, c):
        return SMatrix(self.ring, self.nrows, self.ncols, tuple(p.scale(c) for p in self.parts))

    @property
    def T(self):
        return SMatrix(self.ring, self.ncols, self.nrows, tuple(p.T for p in self.parts))

    def is_zero(self):
        return all(p.is_zero() for p in self.parts)

    def constant_part(self) -> KMatrix:
        return self.parts[0]

    def is_minimal(self):
        """All entries in the maximal ideal."""
        return self.parts[0].is_zero()

    def is_linear(self):
        i = self.ring.i
        return self.parts[0].is_zero() and all(p.is_zero() for p in self.parts[i + 2:])

    def inverse(self):
        """Inverse over S_i, or None if the constant part is singular."""
        c_inv = invert(self.parts[0])
        if c_inv is None:
            return None
        n = self.nrows
        ident = SMatrix.identity(self.ring, n)
        # A = C (I + M) with M having entries in m, and M^3 = 0.
        M = SMatrix.constant(self.ring, c_inv) @ self - ident
        series = ident - M + M @ M
        return series @ SMatrix.constant(self.ring, c_inv)

    def __str__(self):
        from .algebra import format_element
        return "\n".join("[" + ", ".join(format_element(e) for e in row) + "]" for row in self.entries())


def smat_mul(a: SMatrix, b: SMatrix) -> SMatrix:
    _check(a, b)
    if a.ncols != b.nrows:
        raise ShapeError(f"{a.shape} @ {b.shape}")
    R = a.ring
    table = R.mult_table
    out = [None] * R.dim
    for u, pa in enumerate(a.parts):
        if pa.is_zero():
            continue
        for v, pb in enumerate(b.parts):
            t = table[u][v]
            if t is None or pb.is_zero():
                continue
            prod = pa @ pb
            out[t] = prod if out[t] is None else out[t] + prod
    z = KMatrix.zeros(R.field, a.nrows, b.ncols)
    return SMatrix(R, a.nrows, b.ncols, tuple(z if p is None else p for p in out))


@dataclass(frozen=True)
class LinearMatrix:
    """The square matrix ``X x + sum_j Y[j] y_j`` with X, Y[j] over k."""

    ring: Ring
    n: int
    X: KMatrix
    Y: tuple

    def __post_init__(self):
        if len(self.Y) != self.ring.i:
            raise ShapeError(f"need {self.ring.i} y-coefficient matrices")
        for m in (self.X,) + tuple(self.Y):
            if m.shape != (self.n, self.n):
                raise ShapeError("coefficient matrices must be n x n")
            if m.field != self.ring.field:
                raise ShapeError("coefficient matrix over the wrong field")

    def to_smatrix(self) -> SMatrix:
        R = self.ring
        z = KMatrix.zeros(R.field, self.n)
        return SMatrix(R, self.n, self.n, (z, self.X) + tuple(self.Y) + (z,) * R.i)

    @classmethod
    def from_smatrix(cls, m: SMatrix):
        """Reinterpret ``m``; raises NotLinear naming the first offending entry."""
        R = m.ring
        if m.nrows != m.ncols:
            raise ShapeError("linear presentation matrices are square")
        bad = [0] + list(range(R.i + 2, R.dim))
        for r in range(m.nrows):
            for c in range(m.ncols):
                if any(m.parts[k].rows[r][c] != 0 for k in bad):
                    from .algebra import format_element
                    raise NotLinear(f"entry ({r}, {c}) = {format_element(m.entry(r, c))} is not linear",
                                    (r, c))
        return cls(R, m.nrows, m.parts[1], tuple(m.parts[2:R.i + 2]))

    def to_qmatrix(self, cap=2) -> "QMatrix":
        R = self.ring
        z = KMatrix.zeros(R.field, self.n)
        P = [z] * (cap + 1)
        if cap < 1:
            raise CapExceeded("a linear matrix needs cap >= 1")
        P[1] = self.X
        Q = []
        for Yj in self.Y:
            poly = [z] * (cap + 1)
            poly[0] = Yj
            Q.append(tuple(poly))
        return QMatrix(R, self.n, self.n, cap, tuple(P), tuple(Q))

    @property
    def T(self):
        return LinearMatrix(self.ring, self.n, self.X.T, tuple(y.T for y in self.Y))


# -- matrices over Q_i --

@dataclass(frozen=True)
class QMatrix:
    """``sum_d P[d] x^d + sum_j sum_d Q[j][d] x^d y_j`` with k-matrix coefficients."""

    ring: Ring
    nrows: int
    ncols: int
    cap: int
    P: tuple
    Q: tuple

    @classmethod
    def scalar_identity(cls, ring, n, degree, cap=2):
        """``x^degree * I_n``."""
        z = KMatrix.zeros(ring.field, n)
        P = [z] * (cap + 1)
        P[degree] = KMatrix.identity(ring.field, n)
        return cls(ring, n, n, cap, tuple(P), tuple(tuple([z] * (cap + 1)) for _ in range(ring.i)))

    def entry(self, r, c) -> QElement:
        return QElement(self.ring, self.cap,
                        tuple(p.rows[r][c] for p in self.P),
                        tuple(tuple(p.rows[r][c] for p in poly) for poly in self.Q))

    def __matmul__(self, other):
        return qmat_mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, QMatrix):
            return NotImplemented
        return (self.ring == other.ring and self.cap == other.cap and self.P == other.P
                and self.Q == other.Q and self.nrows == other.nrows and self.ncols == other.ncols)

    __hash__ = None


def _poly_matmul(field, A, B, cap, nrows, ncols):
    out = [KMatrix.zeros(field, nrows, ncols) for _ in range(cap + 1)]
    for da, ma in enumerate(A):
        if ma.is_zero():
            continue
        for db, mb in enumerate(B):
            if mb.is_zero():
                continue
            prod = ma @ mb
            if prod.is_zero():
                continue
            if da + db > cap:
                raise CapExceeded(f"product has x-degree {da + db} > cap {cap}")
            out[da + db] = out[da + db] + prod
    return out


def qmat_mul(a: QMatrix, b: QMatrix) -> QMatrix:
    _check(a, b)
    if a.cap != b.cap:
        raise ShapeError(f"cap {a.cap} vs {b.cap}")
    if a.ncols != b.nrows:
        raise ShapeError(f"({a.nrows}, {a.ncols}) @ ({b.nrows}, {b.ncols})")
    f = a.ring.field
    cap = a.cap
    P = _poly_matmul(f, a.P, b.P, cap, a.nrows, b.ncols)
    Q = []
    for qa, qb in zip(a.Q, b.Q):
        left = _poly_matmul(f, a.P, qb, cap, a.nrows, b.ncols)
        right = _poly_matmul(f, qa, b.P, cap, a.nrows, b.ncols)
        Q.append(tuple(u + v for u, v in zip(left, right)))
    return QMatrix(a.ring, a.nrows, b.ncols, cap, tuple(P), tuple(Q))


# -- flattening to k-linear maps --

def shift_by_monomial(ring, nrows, vec, u):
    """Flat coordinates of ``monomial u * v`` for ``v`` in S^nrows."""
    f = ring.field
    out = [f.zero()] * (ring.dim * nrows)
    table = ring.mult_table[u]
    for m in range(ring.dim):
        t = table[m]
        if t is None:
            continue
        base, tb = m * nrows, t * nrows
        for r in range(nrows):
            c = vec[base + r]
            if c != 0:
                out[tb + r] = c
    return out


def flatten(m) -> KMatrix:
    """The k-linear map S^ncols -> S^nrows induced by ``m``."""
    if isinstance(m, LinearMatrix):
        m = m.to_smatrix()
    R = m.ring
    f = R.field
    D = R.dim
    rows = [[f.zero()] * (D * m.ncols) for _ in range(D * m.nrows)]
    table = R.mult_table
    for u, pu in enumerate(m.parts):
        if pu.is_zero():
            continue
        for v in range(D):
            t = table[u][v]
            if t is None:
                continue
            # monomial v in column slot c maps to monomial t in row slot r
            for r in range(m.nrows):
                src = pu.rows[r]
                dst = rows[t * m.nrows + r]
                for c in range(m.ncols):
                    if src[c] != 0:
                        k = v * m.ncols + c
                        dst[k] = f.add(dst[k], src[c])
    return KMatrix(f, tuple(tuple(r) for r in rows), D * m.ncols)


def coords(vector, ring):
    """Flat coordinates of a list of S_i elements."""
    n = len(vector)
    out = [ring.field.zero()] * (ring.dim * n)
    for r, e in enumerate(vector):
        for m, c in enumerate(e.coeffs):
            out[m * n + r] = c
    return out


def is_invertible_local(m: SMatrix) -> bool:
    if m.nrows != m.ncols:
        raise ShapeError("invertibility needs a square matrix")
    return invert(m.constant_part()) is not None


# -- random factors --

def random_invertible(field, n, rng, height=3):
    while True:
        m = KMatrix.from_rows(field, [[field.sample(rng, height) for _ in range(n)] for _ in range(n)])
        if invert(m) is not None:
            return m


def random_max_ideal_matrix(ring, nrows, ncols, rng, density=0.5, height=3):
    """Each entry is, with probability ``density``, a random element of m (nonzero)."""
    f = ring.field
    grid = []
    for _ in range(nrows):
        row = []
        for _ in range(ncols):
            if rng.random() < density:
                while True:
                    coeffs = [f.zero()] + [f.sample(rng, height) for _ in range(ring.dim - 1)]
                    if any(c != 0 for c in coeffs):
                        break
                row.append(SElement(ring, tuple(coeffs)))
            else:
                row.append(ring.zero())
        grid.append(row)
    return SMatrix.from_entries(ring, grid, ncols)


def random_unit_matrix(ring, n, rng, density=0.5, height=3):
    return (SMatrix.constant(ring, random_invertible(ring.field, n, rng, height))
            + random_max_ideal_matrix(ring, n, n, rng, density, height))


def random_scramble(d, seed, density=0.5, height=3):
    """Random invertible ``A``, ``B`` over S_i and the product ``A d B``."""
    if isinstance(d, LinearMatrix):
        d = d.to_smatrix()
    rng = make_rng(seed, "scramble")
    A = random_unit_matrix(d.ring, d.nrows, rng, density, height)
    B = random_unit_matrix(d.ring, d.ncols, rng, density, height)
    return A, B, A @ d @ B
