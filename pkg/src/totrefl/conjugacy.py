"""Simultaneous conjugacy of matrix tuples.

``are_conjugate`` reduces the question to finding an invertible element in
the intertwiner space {P : P A_j = B_j P}.  ``brute_force_conjugate`` is an
independent enumeration over GL_n(F_p) used as an oracle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import BudgetExceeded, ShapeError
from .field import KMatrix, det, invert, kernel
from .seeding import make_rng
from .tuples import MatrixTuple, jordan_block

DEFAULT_BUDGET = 100_000


def _check_pair(a: MatrixTuple, b: MatrixTuple):
    if a.ring != b.ring:
        raise ShapeError("tuples over different rings or fields")
    if a.n != b.n:
        raise ShapeError(f"tuple sizes differ: {a.n} vs {b.n}")


def intertwiner_space(a: MatrixTuple, b: MatrixTuple) -> list:
    """Echelon basis of {P : P A_j = B_j P for all j}."""
    _check_pair(a, b)
    f = a.field
    n = a.n
    rows = []
    for A, B in zip(a.B, b.B):
        for r in range(n):
            for c in range(n):
                eq = [f.zero()] * (n * n)
                for k in range(n):
                    # (P A)_{rc} contributes P_{rk} A_{kc}; (B P)_{rc} contributes B_{rk} P_{kc}
                    eq[r * n + k] = f.add(eq[r * n + k], A.rows[k][c])
                    eq[k * n + c] = f.sub(eq[k * n + c], B.rows[r][k])
                rows.append(eq)
    K = kernel(KMatrix(f, tuple(tuple(r) for r in rows), n * n))
    return [KMatrix(f, tuple(tuple(v[r * n:(r + 1) * n]) for r in range(n)), n) for v in K]


def _combine(field, basis, coeffs):
    out = None
    for c, m in zip(coeffs, basis):
        if c == 0:
            continue
        term = m.scale(c)
        out = term if out is None else out + term
    return out if out is not None else KMatrix.zeros(field, basis[0].nrows)


# -- conjugation invariants --

def charpoly(m: KMatrix) -> list:
    """Coefficients of det(t I - m), leading first (Berkowitz, division free)."""
    f = m.field
    A = m.rows
    n = m.nrows
    poly = [f.one()]
    for r in range(n):
        S = [row[:r] for row in A[:r]]
        R = list(A[r][:r])
        C = [A[k][r] for k in range(r)]
        toeplitz = [f.one(), f.neg(A[r][r])]
        v = C
        for _ in range(r):
            toeplitz.append(f.neg(sum_products(f, R, v)))
            v = [sum_products(f, row, v) for row in S]
        new = []
        for k in range(r + 2):
            acc = f.zero()
            for j in range(min(k, r) + 1):
                acc = f.add(acc, f.mul(toeplitz[k - j], poly[j]))
            new.append(acc)
        poly = new
    return poly


def sum_products(f, xs, ys):
    acc = f.zero()
    for x, y in zip(xs, ys):
        acc = f.add(acc, f.mul(x, y))
    return acc


def _words(matrices, max_len):
    for length in range(1, max_len + 1):
        for idx in itertools.product(range(len(matrices)), repeat=length):
            w = matrices[idx[0]]
            for k in idx[1:]:
                w = w @ matrices[k]
            yield idx, w


def invariant_mismatch(a: MatrixTuple, b: MatrixTuple, max_len=3):
    """First word (as index tuple) whose characteristic polynomials differ, else None."""
    for (idx, wa), (_, wb) in zip(_words(list(a.B), max_len), _words(list(b.B), max_len)):
        if charpoly(wa) != charpoly(wb):
            return idx
    return None


# -- decision --

@dataclass(frozen=True)
class Decision:
    status: str  # "yes" or "no"
    certain: bool
    method: str
    witness: KMatrix | None = None
    intertwiner_dim: int | None = None

    @property
    def conjugate(self):
        return self.status == "yes"

    def to_dict(self):
        f = self.witness.field if self.witness is not None else None
        return {
            "status": self.status,
            "certainty": "certain" if self.certain else "high_confidence",
            "method": self.method,
            "intertwiner_dim": self.intertwiner_dim,
            "witness": None if self.witness is None else
            [[f.format(v) for v in r] for r in self.witness.rows],
        }


def is_witness(P, a: MatrixTuple, b: MatrixTuple):
    P_inv = invert(P)
    if P_inv is None:
        return False
    return all(P @ A @ P_inv == B for A, B in zip(a.B, b.B))


def are_conjugate(a: MatrixTuple, b: MatrixTuple, budget=DEFAULT_BUDGET, seed=0,
                  samples=20, word_length=3) -> Decision:
    _check_pair(a, b)
    f = a.field
    n = a.n
    if invariant_mismatch(a, b, word_length) is not None:
        return Decision("no", True, "invariant")
    V = intertwiner_space(a, b)
    s = len(V)
    if s == 0:
        return Decision("no", True, "intertwiner_zero", intertwiner_dim=0)

    def found(P, method, certain=True):
        if not is_witness(P, a, b):
            raise AssertionError("invertible intertwiner failed verification")
        return Decision("yes", certain, method, P, s)

    if f.p and f.p ** s <= budget:
        for coeffs in itertools.product(range(f.p), repeat=s):
            P = _combine(f, V, coeffs)
            if det(P) != 0:
                return found(P, "exhaustive")
        return Decision("no", True, "exhaustive", intertwiner_dim=s)

    # det of a generic intertwiner has degree <= n in each coordinate, so a
    # nonzero one cannot vanish on a full grid with n + 1 values per axis.
    grid_ok = f.p == 0 or f.p >= n + 1
    if grid_ok and (n + 1) ** s <= budget:
        for coeffs in itertools.product(range(n + 1), repeat=s):
            P = _combine(f, V, [f.coerce(c) for c in coeffs])
            if det(P) != 0:
                return found(P, "grid")
        return Decision("no", True, "grid", intertwiner_dim=s)

    rng = make_rng(seed, "are_conjugate")
    big = 10 ** 6
    for _ in range(samples):
        coeffs = [f.coerce(rng.randint(-big, big)) if f.p == 0 else rng.randrange(f.p) for _ in range(s)]
        P = _combine(f, V, coeffs)
        if det(P) != 0:
            return found(P, "random_search")
    return Decision("no", False, "random_search", intertwiner_dim=s)


def brute_force_conjugate(a: MatrixTuple, b: MatrixTuple, budget=1_000_000) -> bool:
    """Enumerate GL_n(F_p) and test P A_j P^-1 = B_j directly."""
    _check_pair(a, b)
    f = a.field
    if f.p == 0:
        raise ValueError("brute force needs a finite field")
    n = a.n
    if f.p ** (n * n) > budget:
        raise BudgetExceeded(f"{f.p}^{n * n} candidates exceed budget {budget}")
    for entries in itertools.product(range(f.p), repeat=n * n):
        P = KMatrix(f, tuple(tuple(entries[r * n:(r + 1) * n]) for r in range(n)), n)
        P_inv = invert(P)
        if P_inv is None:
            continue
        if all(P @ A @ P_inv == B for A, B in zip(a.B, b.B)):
            return True
    return False


def gl_order(p, n):
    out = 1
    for k in range(n):
        out *= p ** n - p ** k
    return out


# -- indecomposability --

@dataclass(frozen=True)
class Probe:
    status: str  # "indecomposable", "decomposable" or "unknown"
    method: str
    idempotent: KMatrix | None = None
    endomorphism_dim: int | None = None

    def to_dict(self):
        f = self.idempotent.field if self.idempotent is not None else None
        return {
            "status": self.status,
            "method": self.method,
            "endomorphism_dim": self.endomorphism_dim,
            "idempotent": None if self.idempotent is None else
            [[f.format(v) for v in r] for r in self.idempotent.rows],
        }


def _nontrivial_idempotent(e, n):
    f = e.field
    return e @ e == e and not e.is_zero() and e != KMatrix.identity(f, n)


def _trace(m):
    f = m.field
    acc = f.zero()
    for k in range(m.nrows):
        acc = f.add(acc, m.rows[k][k])
    return acc


def is_indecomposable_probe(t: MatrixTuple, budget=DEFAULT_BUDGET, height=2) -> Probe:
    f = t.field
    n = t.n
    End = intertwiner_space(t, t)
    s = len(End)
    if s == 1:
        return Probe("indecomposable", "scalar_endomorphisms", endomorphism_dim=1)
    if f.p:
        if f.p ** s <= budget:
            for coeffs in itertools.product(range(f.p), repeat=s):
                e = _combine(f, End, coeffs)
                if _nontrivial_idempotent(e, n):
                    return Probe("decomposable", "exhaustive", e, s)
            return Probe("indecomposable", "exhaustive", endomorphism_dim=s)
        return Probe("unknown", "budget_exceeded", endomorphism_dim=s)

    values = [f.coerce(v) for v in sorted(range(-height, height + 1), key=abs)]
    if len(values) ** s <= budget:
        for coeffs in itertools.product(values, repeat=s):
            e = _combine(f, End, coeffs)
            if _nontrivial_idempotent(e, n):
                return Probe("decomposable", "bounded_search", e, s)
    # In characteristic zero the radical of End is the kernel of the trace
    # form; codimension one means End is local.
    gram = KMatrix(f, tuple(tuple(_trace(a @ b) for b in End) for a in End), s)
    if s - len(kernel(gram)) == 1:
        return Probe("indecomposable", "radical_codim_one", endomorphism_dim=s)
    return Probe("unknown", "bounded_search", endomorphism_dim=s)


# -- wild family --

def wild_family(n, lambdas, ring, verify=True, budget=DEFAULT_BUDGET) -> list:
    """Tuples ``(J_n(lam), 0, ..., 0)``, one per parameter, pairwise non-conjugate."""
    f = ring.field
    vals = [f.coerce(v) for v in lambdas]
    if len(set(vals)) != len(vals):
        raise ValueError("parameters must be distinct elements of the field")
    zero = KMatrix.zeros(f, n)
    family = [MatrixTuple(ring, (jordan_block(f, n, lam),) + (zero,) * (ring.i - 1)) for lam in vals]
    if verify:
        for (k, a), (h, b) in itertools.combinations(enumerate(family), 2):
            if charpoly(a.B[0]) == charpoly(b.B[0]):
                raise AssertionError(f"members {k} and {h} share eigenvalues")
            if are_conjugate(a, b, budget=budget).conjugate:
                raise AssertionError(f"members {k} and {h} are conjugate")
    return family
