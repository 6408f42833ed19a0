"""Finite-dimensional S_i-modules and their minimal free resolutions."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Ring
from .errors import InvalidModule, ShapeError
from .field import KMatrix, Subspace, kernel, minimal_generators
from .linmat import LinearMatrix, SMatrix, flatten, shift_by_monomial


@dataclass(frozen=True)
class FDModule:
    """A k-space of dimension ``dim`` with commuting actions of x and y_1..y_i."""

    ring: Ring
    dim: int
    act_x: KMatrix
    act_y: tuple

    def __post_init__(self):
        R = self.ring
        if len(self.act_y) != R.i:
            raise InvalidModule(f"need {R.i} y-actions")
        for a in (self.act_x,) + tuple(self.act_y):
            if a.shape != (self.dim, self.dim) or a.field != R.field:
                raise InvalidModule("action matrices must be dim x dim over the ring's field")
        if not (self.act_x @ self.act_x).is_zero():
            raise InvalidModule("x acts with nonzero square")
        for j, a in enumerate(self.act_y):
            if self.act_x @ a != a @ self.act_x:
                raise InvalidModule(f"x and y{j + 1} do not commute")
            for h, b in enumerate(self.act_y):
                if not (a @ b).is_zero():
                    raise InvalidModule(f"y{j + 1} y{h + 1} acts nontrivially")

    @property
    def field(self):
        return self.ring.field

    def generator_actions(self):
        return [self.act_x] + list(self.act_y)

    def action(self, m):
        """k-matrix of the monomial with index ``m``."""
        R = self.ring
        if m == 0:
            return KMatrix.identity(R.field, self.dim)
        if m == 1:
            return self.act_x
        if m <= R.i + 1:
            return self.act_y[m - 2]
        return self.act_x @ self.act_y[m - R.i - 2]

    def length(self):
        return self.dim

    def radical(self) -> Subspace:
        """m M as a subspace of k^dim."""
        vecs = [a.column(c) for a in self.generator_actions() for c in range(self.dim)]
        return Subspace(self.field, vecs, self.dim)

    def generators(self):
        """Unit vectors spanning a complement of m M (a minimal generating set)."""
        out = []
        f = self.field
        for c in self.radical().complement_coordinates():
            v = [f.zero()] * self.dim
            v[c] = f.one()
            out.append(v)
        return out


def min_generators(m: FDModule) -> int:
    return m.dim - m.radical().rank


def free_module(ring, n) -> FDModule:
    N = ring.dim * n
    acts = []
    for u in ring.generator_monomials:
        cols = []
        for k in range(N):
            v = [ring.field.zero()] * N
            v[k] = ring.field.one()
            cols.append(shift_by_monomial(ring, n, v, u))
        acts.append(KMatrix.from_columns(ring.field, cols, N))
    return FDModule(ring, N, acts[0], tuple(acts[1:]))


def zero_module(ring) -> FDModule:
    z = KMatrix.zeros(ring.field, 0, 0)
    return FDModule(ring, 0, z, (z,) * ring.i)


def _ambient_ops(ring, rank):
    return [lambda v, u=u: shift_by_monomial(ring, rank, v, u) for u in ring.generator_monomials]


def quotient_module(ring, rank, relations) -> FDModule:
    """S^rank modulo the submodule spanned (over k) by flat vectors ``relations``.

    ``relations`` must already be closed under the action.
    """
    N = ring.dim * rank
    f = ring.field
    image = Subspace(f, relations, N)
    keep = image.complement_coordinates()
    acts = []
    for u in ring.generator_monomials:
        cols = []
        for c in keep:
            e = [f.zero()] * N
            e[c] = f.one()
            w = image.reduce(shift_by_monomial(ring, rank, e, u))
            cols.append([w[k] for k in keep])
        acts.append(KMatrix.from_columns(f, cols, len(keep)) if keep else KMatrix.zeros(f, 0, 0))
    return FDModule(ring, len(keep), acts[0], tuple(acts[1:]))


def cokernel(d) -> FDModule:
    """S^nrows / im(d), with basis the echelon complement of the image."""
    if isinstance(d, LinearMatrix):
        d = d.to_smatrix()
    F = flatten(d)
    return quotient_module(d.ring, d.nrows, [F.column(c) for c in range(F.ncols)])


def submodule(ring, rank, vectors) -> FDModule:
    """The submodule of S^rank with k-basis spanning ``vectors`` (closed under the action)."""
    N = ring.dim * rank
    W = Subspace(ring.field, vectors, N)
    acts = []
    for op in _ambient_ops(ring, rank):
        cols = [W.coordinates(op(w)) for w in W.rows]
        acts.append(KMatrix.from_columns(ring.field, cols, W.rank) if cols else
                    KMatrix.zeros(ring.field, 0, 0))
    return FDModule(ring, W.rank, acts[0], tuple(acts[1:]))


def _augmentation(m: FDModule):
    """Flat k-matrix of S^b0 -> M sending the j-th basis vector to the j-th generator."""
    gens = m.generators()
    b0 = len(gens)
    D = m.ring.dim
    cols = [None] * (D * b0)
    for u in range(D):
        A = m.action(u)
        for c, g in enumerate(gens):
            cols[u * b0 + c] = A.apply(g)
    if not cols:
        return b0, KMatrix.zeros(m.field, m.dim, 0)
    return b0, KMatrix.from_columns(m.field, cols, m.dim)


def next_differential(ring, rank, kernel_vectors):
    ops = _ambient_ops(ring, rank)
    gens = minimal_generators(ring.field, kernel_vectors, ops, ring.dim * rank)
    return SMatrix.from_flat_columns(ring, gens, rank) if gens else SMatrix.zeros(ring, rank, 0)


def minimal_resolution(m: FDModule, length):
    """``(b0, [d1, ..., d_length])`` with d_k : S^{b_k} -> S^{b_{k-1}} minimal."""
    ring = m.ring
    b0, aug = _augmentation(m)
    diffs = []
    rank, K = b0, kernel(aug)
    for _ in range(length):
        d = next_differential(ring, rank, K)
        diffs.append(d)
        rank = d.ncols
        K = kernel(flatten(d)) if rank else []
    return b0, diffs


def presentation(m: FDModule) -> SMatrix:
    """A minimal presentation matrix of ``m`` (first differential of its resolution)."""
    return minimal_resolution(m, 1)[1][0]


def syzygy_presentation(m: FDModule) -> SMatrix:
    """Minimal presentation of the first syzygy ker(S^b0 -> M): the second differential.

    For ``coker(x I + sum B_j y_j)`` this is equivalent to ``x I - sum B_j y_j``.
    """
    return minimal_resolution(m, 2)[1][1]


def betti_numbers(m: FDModule, depth) -> list:
    if depth < 1:
        raise ShapeError("depth must be at least 1")
    b0, diffs = minimal_resolution(m, depth - 1)
    return [b0] + [d.ncols for d in diffs]
