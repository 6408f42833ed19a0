"""Exact scalars over Q and F_p, and the k-linear algebra kernels.

Scalars are raw Python values: ``Fraction`` over Q, ``int`` in ``[0, p)``
over F_p.  A :class:`FieldSpec` carries the arithmetic; matrices and
subspaces carry their field so that mixing fields is caught early.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import FieldMismatch, ShapeError


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


_SCALAR_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


@dataclass(frozen=True)
class FieldSpec:
    """Q when ``p == 0``, otherwise the prime field F_p."""

    p: int = 0

    def __post_init__(self):
        if self.p != 0 and not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def is_rational(self):
        return self.p == 0

    @property
    def characteristic(self):
        return self.p

    @property
    def name(self):
        return "Q" if self.p == 0 else f"GF({self.p})"

    @classmethod
    def from_name(cls, name):
        name = name.strip()
        if name in ("Q", "QQ"):
            return cls(0)
        m = re.fullmatch(r"(?:GF|F)\(?(\d+)\)?", name)
        if m is None:
            raise ValueError(f"unknown field {name!r}")
        return cls(int(m.group(1)))

    def __str__(self):
        return self.name

    # -- arithmetic on raw values --

    def zero(self):
        return Fraction(0) if self.p == 0 else 0

    def one(self):
        return Fraction(1) if self.p == 0 else 1

    def coerce(self, v):
        if self.p == 0:
            if isinstance(v, str):
                return self.parse(v)
            return Fraction(v)
        if isinstance(v, Fraction):
            if v.denominator % self.p == 0:
                raise ZeroDivisionError(f"{v} has no image in {self.name}")
            return v.numerator * pow(v.denominator, -1, self.p) % self.p
        if isinstance(v, str):
            return self.parse(v)
        return int(v) % self.p

    def add(self, a, b):
        return a + b if self.p == 0 else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p == 0 else (a - b) % self.p

    def neg(self, a):
        return -a if self.p == 0 else (-a) % self.p

    def mul(self, a, b):
        return a * b if self.p == 0 else (a * b) % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a) if self.p == 0 else pow(a, -1, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def elements(self):
        """All elements of a finite field, in increasing order."""
        if self.p == 0:
            raise ValueError("Q is infinite")
        return range(self.p)

    def sample(self, rng, height=3):
        """Uniform over F_p; an integer in [-height, height] over Q."""
        if self.p == 0:
            return Fraction(rng.randint(-height, height))
        return rng.randrange(self.p)

    # -- text syntax --

    def parse(self, text):
        text = text.strip()
        if not _SCALAR_RE.match(text):
            raise ValueError(f"bad scalar literal {text!r}")
        if self.p == 0:
            return Fraction(text)
        if "/" in text or text.startswith(("-", "+")):
            raise ValueError(f"{self.name} scalars are decimal integers in [0, {self.p})")
        v = int(text)
        if v >= self.p:
            raise ValueError(f"{text} is not in [0, {self.p})")
        return v

    def format(self, v):
        if self.p == 0:
            v = Fraction(v)
            if v.denominator == 1:
                return str(v.numerator)
            return f"{v.numerator}/{v.denominator}"
        return str(v)


QQ = FieldSpec(0)


def _check_field(a, b):
    if a.field != b.field:
        raise FieldMismatch(f"{a.field} vs {b.field}")


@dataclass(frozen=True)
class KMatrix:
    """Dense matrix over a field, rows stored as tuples."""

    field: FieldSpec
    rows: tuple
    ncols: int

    @classmethod
    def from_rows(cls, field, rows, ncols=None):
        rows = tuple(tuple(field.coerce(v) for v in r) for r in rows)
        if ncols is None:
            if not rows:
                raise ShapeError("ncols required for a matrix with no rows")
            ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ShapeError("ragged rows")
        return cls(field, rows, ncols)

    @classmethod
    def zeros(cls, field, nrows, ncols=None):
        ncols = nrows if ncols is None else ncols
        z = field.zero()
        return cls(field, tuple((z,) * ncols for _ in range(nrows)), ncols)

    @classmethod
    def identity(cls, field, n):
        z, o = field.zero(), field.one()
        return cls(field, tuple(tuple(o if r == c else z for c in range(n)) for r in range(n)), n)

    @classmethod
    def from_columns(cls, field, columns, nrows):
        return cls.from_rows(field, [[col[r] for col in columns] for r in range(nrows)], len(columns))

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def shape(self):
        return (len(self.rows), self.ncols)

    def __getitem__(self, rc):
        r, c = rc
        return self.rows[r][c]

    def column(self, c):
        return [r[c] for r in self.rows]

    def is_zero(self):
        return all(v == 0 for r in self.rows for v in r)

    def is_square(self):
        return len(self.rows) == self.ncols

    @property
    def T(self):
        return KMatrix(self.field, tuple(zip(*self.rows)) if self.rows and self.ncols else
                       tuple(() for _ in range(self.ncols)), len(self.rows))

    def __add__(self, other):
        _check_field(self, other)
        if self.shape != other.shape:
            raise ShapeError(f"{self.shape} + {other.shape}")
        f = self.field
        return KMatrix(f, tuple(tuple(f.add(a, b) for a, b in zip(r, s))
                                for r, s in zip(self.rows, other.rows)), self.ncols)

    def __sub__(self, other):
        _check_field(self, other)
        if self.shape != other.shape:
            raise ShapeError(f"{self.shape} - {other.shape}")
        f = self.field
        return KMatrix(f, tuple(tuple(f.sub(a, b) for a, b in zip(r, s))
                                for r, s in zip(self.rows, other.rows)), self.ncols)

    def __neg__(self):
        f = self.field
        return KMatrix(f, tuple(tuple(f.neg(a) for a in r) for r in self.rows), self.ncols)

    def scale(self, c):
        f = self.field
        c = f.coerce(c)
        return KMatrix(f, tuple(tuple(f.mul(c, a) for a in r) for r in self.rows), self.ncols)

    def __matmul__(self, other):
        _check_field(self, other)
        if self.ncols != other.nrows:
            raise ShapeError(f"{self.shape} @ {other.shape}")
        p = self.field.p
        cols = list(zip(*other.rows)) if other.rows else [() for _ in range(other.ncols)]
        out = []
        for r in self.rows:
            if p:
                out.append(tuple(sum(a * b for a, b in zip(r, col)) % p for col in cols))
            else:
                out.append(tuple(sum((a * b for a, b in zip(r, col)), Fraction(0)) for col in cols))
        return KMatrix(self.field, tuple(out), other.ncols)

    def apply(self, vec):
        if len(vec) != self.ncols:
            raise ShapeError("vector length mismatch")
        p = self.field.p
        if p:
            return [sum(a * b for a, b in zip(r, vec)) % p for r in self.rows]
        return [sum((a * b for a, b in zip(r, vec)), Fraction(0)) for r in self.rows]

    def __str__(self):
        f = self.field
        return "\n".join("[" + " ".join(f.format(v) for v in r) + "]" for r in self.rows)


# -- elimination kernels --

def rref(field, rows, ncols):
    """Reduced row echelon form.

    Pivots are the first nonzero entry scanning columns left to right and
    are normalized to 1.  Returns ``(nonzero_rows, pivot_columns)``.
    """
    A = [list(r) for r in rows]
    m = len(A)
    p = field.p
    pivots = []
    r = 0
    for c in range(ncols):
        if r == m:
            break
        piv = None
        for k in range(r, m):
            if A[k][c] != 0:
                piv = k
                break
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = field.inv(A[r][c])
        if p:
            A[r] = [v * inv % p for v in A[r]]
        else:
            A[r] = [v * inv for v in A[r]]
        prow = A[r]
        for k in range(m):
            if k != r:
                f = A[k][c]
                if f != 0:
                    if p:
                        A[k] = [(a - f * b) % p for a, b in zip(A[k], prow)]
                    else:
                        A[k] = [a - f * b if b else a for a, b in zip(A[k], prow)]
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank(m: KMatrix) -> int:
    return len(rref(m.field, m.rows, m.ncols)[1])


def rank_and_kernel(m: KMatrix):
    """Rank and a kernel basis of ``m`` acting on column vectors.

    The kernel basis has one vector per free column (in increasing order),
    with a 1 in that column and zeros in the other free columns, so it is
    the reduced column-echelon basis of the null space.
    """
    f = m.field
    R, pivots = rref(f, m.rows, m.ncols)
    pivset = set(pivots)
    basis = []
    for free in range(m.ncols):
        if free in pivset:
            continue
        v = [f.zero()] * m.ncols
        v[free] = f.one()
        for row, pc in zip(R, pivots):
            if row[free] != 0:
                v[pc] = f.neg(row[free])
        basis.append(v)
    return len(pivots), basis


def kernel(m: KMatrix):
    return rank_and_kernel(m)[1]


def solve_linear(m: KMatrix, rhs: Sequence):
    """A particular solution of ``m x = rhs`` or ``None`` if inconsistent.

    Free variables are set to zero.
    """
    if len(rhs) != m.nrows:
        raise ShapeError(f"rhs has length {len(rhs)}, matrix has {m.nrows} rows")
    f = m.field
    aug = [list(r) + [f.coerce(b)] for r, b in zip(m.rows, rhs)]
    R, pivots = rref(f, aug, m.ncols + 1)
    if pivots and pivots[-1] == m.ncols:
        return None
    x = [f.zero()] * m.ncols
    for row, pc in zip(R, pivots):
        x[pc] = row[-1]
    return x


def invert(m: KMatrix):
    """Exact inverse, or ``None`` when ``m`` is singular."""
    if not m.is_square():
        raise ShapeError(f"cannot invert a {m.shape} matrix")
    n = m.nrows
    f = m.field
    z, o = f.zero(), f.one()
    aug = [list(r) + [o if c == k else z for c in range(n)] for k, r in enumerate(m.rows)]
    R, pivots = rref(f, aug, 2 * n)
    if len(pivots) < n or pivots[n - 1] != n - 1:
        return None
    return KMatrix(f, tuple(tuple(r[n:]) for r in R), n)


def det(m: KMatrix):
    if not m.is_square():
        raise ShapeError("det of non-square matrix")
    f = m.field
    A = [list(r) for r in m.rows]
    n = len(A)
    d = f.one()
    for c in range(n):
        piv = next((k for k in range(c, n) if A[k][c] != 0), None)
        if piv is None:
            return f.zero()
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            d = f.neg(d)
        d = f.mul(d, A[c][c])
        inv = f.inv(A[c][c])
        for k in range(c + 1, n):
            if A[k][c] != 0:
                g = f.mul(A[k][c], inv)
                A[k] = [f.sub(a, f.mul(g, b)) for a, b in zip(A[k], A[c])]
    return d


class Subspace:
    """A subspace of k^dim held in reduced row echelon form."""

    def __init__(self, field, vectors, dim):
        self.field = field
        self.dim = dim
        self.rows, self.pivots = rref(field, [list(v) for v in vectors], dim)

    @property
    def rank(self):
        return len(self.pivots)

    def reduce(self, v):
        """Canonical representative of ``v`` modulo the subspace."""
        f = self.field
        v = list(v)
        p = f.p
        for row, pc in zip(self.rows, self.pivots):
            c = v[pc]
            if c != 0:
                if p:
                    v = [(a - c * b) % p for a, b in zip(v, row)]
                else:
                    v = [a - c * b if b else a for a, b in zip(v, row)]
        return v

    def contains(self, v):
        return all(a == 0 for a in self.reduce(v))

    def extended(self, vectors):
        return Subspace(self.field, list(self.rows) + [list(v) for v in vectors], self.dim)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.field == other.field and self.dim == other.dim
                and self.pivots == other.pivots and self.rows == other.rows)

    __hash__ = None

    def complement_coordinates(self):
        """Coordinates not used as pivots; their unit vectors span a complement."""
        piv = set(self.pivots)
        return [c for c in range(self.dim) if c not in piv]

    def coordinates(self, v):
        """Coefficients of ``v`` in the echelon basis (``v`` must lie in the span)."""
        coeffs = [v[pc] for pc in self.pivots]
        if not self.contains(v):
            raise ValueError("vector not in subspace")
        return coeffs


def normalize_leading(field, v):
    """Scale ``v`` so that its first nonzero entry is 1."""
    for a in v:
        if a != 0:
            inv = field.inv(a)
            return [field.mul(inv, b) for b in v]
    return list(v)


def minimal_generators(field, vectors, operators, dim):
    """Lift a basis of ``I / m I`` where ``I = span(vectors)``.

    ``operators`` generate the maximal ideal's action on the ambient space;
    each returned generator is reduced modulo ``m I`` and leading-normalized.
    """
    m_part = Subspace(field, [op(v) for v in vectors for op in operators], dim)
    acc = m_part
    gens = []
    for v in vectors:
        if acc.contains(v):
            continue
        g = normalize_leading(field, m_part.reduce(v))
        gens.append(g)
        acc = acc.extended([g])
    return gens
