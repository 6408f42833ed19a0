"""The rings S_i = k[X,Y_1..Y_i]/(X^2, (Y)^2) and Q_i = k[X,Y_1..Y_i]/((Y)^2).

Elements of S_i are coefficient vectors over the monomial basis
``1, x, y1..yi, xy1..xyi``.  Elements of Q_i keep x free up to a degree cap.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property

from .errors import CapExceeded, NotLinear, RingMismatch, ShapeError, ZeroElement
from .field import QQ, FieldSpec, KMatrix, Subspace, kernel, minimal_generators


@dataclass(frozen=True)
class Ring:
    """Descriptor of S_i over ``field``; ``e = i + 1`` is the embedding dimension."""

    i: int
    field: FieldSpec = QQ

    def __post_init__(self):
        if self.i < 2:
            raise ValueError("S_i is only considered for i >= 2")

    @property
    def e(self):
        return self.i + 1

    @property
    def dim(self):
        return 2 * (self.i + 1)

    @cached_property
    def monomials(self):
        return (["1", "x"] + [f"y{j}" for j in range(1, self.i + 1)]
                + [f"xy{j}" for j in range(1, self.i + 1)])

    def index(self, name):
        try:
            return self.monomials.index(name)
        except ValueError:
            raise KeyError(f"no monomial {name!r} in S_{self.i}") from None

    def y_index(self, j):
        return 1 + j

    def xy_index(self, j):
        return 1 + self.i + j

    def degree(self, m):
        if m == 0:
            return 0
        return 1 if m <= self.i + 1 else 2

    @cached_property
    def mult_table(self):
        """``mult_table[a][b]`` is the index of the monomial product, or None."""
        i, D = self.i, self.dim
        table = [[None] * D for _ in range(D)]
        for a in range(D):
            table[0][a] = table[a][0] = a
        for j in range(1, i + 1):
            table[1][1 + j] = table[1 + j][1] = 1 + i + j
        return tuple(tuple(r) for r in table)

    @cached_property
    def maximal_ideal_monomials(self):
        return tuple(range(1, self.dim))

    @cached_property
    def generator_monomials(self):
        """x, y1..yi: the monomials generating the maximal ideal."""
        return tuple(range(1, self.i + 2))

    def element(self, coeffs):
        if isinstance(coeffs, dict):
            vec = [self.field.zero()] * self.dim
            for name, c in coeffs.items():
                vec[self.index(name)] = self.field.coerce(c)
            return SElement(self, tuple(vec))
        if len(coeffs) != self.dim:
            raise ShapeError(f"S_{self.i} elements have {self.dim} coefficients")
        return SElement(self, tuple(self.field.coerce(c) for c in coeffs))

    def monomial(self, m, c=1):
        vec = [self.field.zero()] * self.dim
        vec[m] = self.field.coerce(c)
        return SElement(self, tuple(vec))

    def zero(self):
        return SElement(self, (self.field.zero(),) * self.dim)

    def one(self):
        return self.monomial(0)

    @property
    def x(self):
        return self.monomial(1)

    def y(self, j):
        return self.monomial(self.y_index(j))

    def linear_form(self, a, bs):
        """``a x + sum_j bs[j-1] y_j``."""
        if len(bs) != self.i:
            raise ShapeError("need one y-coefficient per variable")
        vec = [self.field.zero()] * self.dim
        vec[1] = self.field.coerce(a)
        for j, b in enumerate(bs, start=1):
            vec[self.y_index(j)] = self.field.coerce(b)
        return SElement(self, tuple(vec))

    def basis(self):
        return [self.monomial(m) for m in range(self.dim)]

    def Q(self, cap=2):
        return QRing(self, cap)


def _check_ring(a, b):
    if a.ring != b.ring:
        raise RingMismatch(f"S_{a.ring.i}/{a.ring.field} vs S_{b.ring.i}/{b.ring.field}")


@dataclass(frozen=True)
class SElement:
    ring: Ring
    coeffs: tuple

    def __add__(self, other):
        _check_ring(self, other)
        f = self.ring.field
        return SElement(self.ring, tuple(f.add(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        _check_ring(self, other)
        f = self.ring.field
        return SElement(self.ring, tuple(f.sub(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        f = self.ring.field
        return SElement(self.ring, tuple(f.neg(a) for a in self.coeffs))

    def __mul__(self, other):
        if not isinstance(other, SElement):
            return self.scale(other)
        return s_mul(self, other)

    def __rmul__(self, c):
        return self.scale(c)

    def scale(self, c):
        f = self.ring.field
        c = f.coerce(c)
        return SElement(self.ring, tuple(f.mul(c, a) for a in self.coeffs))

    def __getitem__(self, name):
        return self.coeffs[self.ring.index(name)]

    @property
    def constant(self):
        return self.coeffs[0]

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def is_unit(self):
        return self.coeffs[0] != 0

    def in_maximal_ideal(self):
        return self.coeffs[0] == 0

    def in_socle(self):
        return all(c == 0 for c in self.coeffs[: self.ring.i + 2])

    def is_linear(self):
        """Zero constant term and zero degree-two part."""
        i = self.ring.i
        return self.coeffs[0] == 0 and all(c == 0 for c in self.coeffs[i + 2:])

    def mul_matrix(self):
        """k-matrix of multiplication by this element; column m is ``self * monomial m``."""
        R = self.ring
        f = R.field
        D = R.dim
        cols = []
        for m in range(D):
            col = [f.zero()] * D
            for a, c in enumerate(self.coeffs):
                if c != 0:
                    t = R.mult_table[a][m]
                    if t is not None:
                        col[t] = f.add(col[t], c)
            cols.append(col)
        return KMatrix.from_columns(f, cols, D)

    def __str__(self):
        return format_element(self)


def s_mul(a: SElement, b: SElement) -> SElement:
    _check_ring(a, b)
    R = a.ring
    f = R.field
    out = [f.zero()] * R.dim
    table = R.mult_table
    for u, cu in enumerate(a.coeffs):
        if cu == 0:
            continue
        row = table[u]
        for v, cv in enumerate(b.coeffs):
            if cv == 0:
                continue
            t = row[v]
            if t is not None:
                out[t] = f.add(out[t], f.mul(cu, cv))
    return SElement(R, tuple(out))


# -- structural queries --

def _span(ring, elements):
    return Subspace(ring.field, [e.coeffs for e in elements], ring.dim)


def principal_ideal(s: SElement) -> Subspace:
    """The k-span of ``s * S_i``."""
    return _span(s.ring, [s * b for b in s.ring.basis()])


def maximal_ideal(ring) -> Subspace:
    return _span(ring, [ring.monomial(m) for m in ring.maximal_ideal_monomials])


def maximal_ideal_square(ring) -> Subspace:
    gens = [ring.monomial(m) for m in ring.maximal_ideal_monomials]
    return _span(ring, [a * b for a in gens for b in gens])


def socle(ring) -> Subspace:
    """ann(m) computed as the common kernel of multiplication by x, y1..yi."""
    stacked = []
    for m in ring.generator_monomials:
        stacked.extend(ring.monomial(m).mul_matrix().rows)
    K = kernel(KMatrix(ring.field, tuple(stacked), ring.dim))
    return Subspace(ring.field, K, ring.dim)


def socle_rank(ring) -> int:
    return socle(ring).rank


def annihilator(s: SElement):
    """ann(s) as a k-basis and a minimal generating set of the ideal."""
    if s.is_zero():
        raise ZeroElement("annihilator of 0 is the whole ring")
    R = s.ring
    kb = kernel(s.mul_matrix())
    ops = [R.monomial(m).mul_matrix().apply for m in R.generator_monomials]
    gens = minimal_generators(R.field, kb, ops, R.dim)
    return [SElement(R, tuple(v)) for v in kb], [SElement(R, tuple(v)) for v in gens]


def exact_zerodivisor_partner(s: SElement):
    """The partner ``t`` of an exact pair ``(s, t)``, normalized to x-coefficient 1.

    Returns ``None`` when the linear form ``s`` has no x term.
    """
    if s.is_zero():
        raise ZeroElement("0 is not a zerodivisor candidate")
    if not s.is_linear():
        raise NotLinear(f"{format_element(s)} is not a linear form")
    R = s.ring
    f = R.field
    a = s.coeffs[1]
    if a == 0:
        return None
    inv = f.inv(a)
    bs = [f.neg(f.mul(inv, s.coeffs[R.y_index(j)])) for j in range(1, R.i + 1)]
    t = R.linear_form(1, bs)
    ann_s = _span(R, annihilator(s)[0])
    ann_t = _span(R, annihilator(t)[0])
    if ann_s != principal_ideal(t) or ann_t != principal_ideal(s):
        raise AssertionError(f"exact pair check failed for {format_element(s)}")
    return t


def is_exact_zerodivisor(s: SElement) -> bool:
    """Direct test: ann(s) = tS and ann(t) = sS for some t, decided by linear algebra.

    ann(s) must be principal; any minimal generator is then a candidate t.
    """
    if s.is_zero() or s.is_unit():
        return False
    kb, gens = annihilator(s)
    if len(gens) != 1:
        return False
    t = gens[0]
    return _span(s.ring, kb) == principal_ideal(t) and _span(s.ring, annihilator(t)[0]) == principal_ideal(s)


# -- the deformation Q_i --

@dataclass(frozen=True)
class QRing:
    ring: Ring
    cap: int = 2

    def element(self, p, q=None):
        f = self.ring.field
        p = list(p) + [0] * (self.cap + 1 - len(p))
        if len(p) > self.cap + 1:
            raise CapExceeded(f"degree {len(p) - 1} exceeds cap {self.cap}")
        q = q or [[] for _ in range(self.ring.i)]
        qq = []
        for poly in q:
            poly = list(poly) + [0] * (self.cap + 1 - len(poly))
            if len(poly) > self.cap + 1:
                raise CapExceeded(f"degree {len(poly) - 1} exceeds cap {self.cap}")
            qq.append(tuple(f.coerce(c) for c in poly))
        return QElement(self.ring, self.cap, tuple(f.coerce(c) for c in p), tuple(qq))

    @property
    def x(self):
        return self.element([0, 1])

    def y(self, j):
        q = [[] for _ in range(self.ring.i)]
        q[j - 1] = [1]
        return self.element([], q)

    def one(self):
        return self.element([1])

    def lift(self, s: SElement):
        """The obvious preimage of an S_i element (monomials taken literally)."""
        R = self.ring
        c = s.coeffs
        q = [[c[R.y_index(j)], c[R.xy_index(j)]] for j in range(1, R.i + 1)]
        return self.element([c[0], c[1]], q)


def _poly_mul(f, a, b, cap):
    out = [f.zero()] * (cap + 1)
    for da, ca in enumerate(a):
        if ca == 0:
            continue
        for db, cb in enumerate(b):
            if cb == 0:
                continue
            d = da + db
            if d > cap:
                raise CapExceeded(f"product has x-degree {d} > cap {cap}")
            out[d] = f.add(out[d], f.mul(ca, cb))
    return out


@dataclass(frozen=True)
class QElement:
    """``p(x) + sum_j q_j(x) y_j`` in Q_i, with x-degrees at most ``cap``."""

    ring: Ring
    cap: int
    p: tuple
    q: tuple

    def _check(self, other):
        _check_ring(self, other)
        if self.cap != other.cap:
            raise ShapeError(f"cap {self.cap} vs {other.cap}")

    def __add__(self, other):
        self._check(other)
        f = self.ring.field
        return QElement(self.ring, self.cap, tuple(f.add(a, b) for a, b in zip(self.p, other.p)),
                        tuple(tuple(f.add(a, b) for a, b in zip(u, v)) for u, v in zip(self.q, other.q)))

    def __neg__(self):
        f = self.ring.field
        return QElement(self.ring, self.cap, tuple(f.neg(a) for a in self.p),
                        tuple(tuple(f.neg(a) for a in u) for u in self.q))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return q_mul(self, other)

    def is_zero(self):
        return all(c == 0 for c in self.p) and all(c == 0 for u in self.q for c in u)

    def reduce(self) -> SElement:
        """Image in S_i = Q_i / (x^2)."""
        R = self.ring
        f = R.field
        vec = [f.zero()] * R.dim
        vec[0] = self.p[0]
        if self.cap >= 1:
            vec[1] = self.p[1]
        for j, u in enumerate(self.q, start=1):
            vec[R.y_index(j)] = u[0]
            if self.cap >= 1:
                vec[R.xy_index(j)] = u[1]
        return SElement(R, tuple(vec))


def q_mul(a: QElement, b: QElement) -> QElement:
    a._check(b)
    f = a.ring.field
    cap = a.cap
    p = _poly_mul(f, a.p, b.p, cap)
    q = []
    for qa, qb in zip(a.q, b.q):
        left = _poly_mul(f, a.p, qb, cap)
        right = _poly_mul(f, qa, b.p, cap)
        q.append(tuple(f.add(u, v) for u, v in zip(left, right)))
    return QElement(a.ring, cap, tuple(p), tuple(q))


# -- text syntax for elements --

_TERM_RE = re.compile(
    r"\s*([+-])?\s*(\d+(?:/\d+)?)?\s*(\*)?\s*(xy\d+|x|y\d+)?\s*")


def parse_element(ring, text):
    """Parse terms like ``2x``, ``-1/2*y1``, ``3*xy2``, ``5`` joined by +/-."""
    f = ring.field
    vec = [f.zero()] * ring.dim
    pos = 0
    text = text.strip()
    if not text:
        raise ValueError("empty expression")
    first = True
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        sign, coeff, star, mono = m.groups()
        if m.end() == pos or (coeff is None and mono is None):
            raise ValueError(f"cannot parse {text!r} at position {pos}")
        if sign is None and not first:
            raise ValueError(f"missing operator in {text!r} at position {pos}")
        if star and (coeff is None or mono is None):
            raise ValueError(f"dangling '*' in {text!r}")
        c = f.one() if coeff is None else _coerce_literal(f, coeff)
        if sign == "-":
            c = f.neg(c)
        idx = 0 if mono is None else ring.index(mono)
        vec[idx] = f.add(vec[idx], c)
        pos = m.end()
        first = False
    return SElement(ring, tuple(vec))


def _coerce_literal(f, lit):
    if f.p == 0:
        return f.parse(lit)
    if "/" in lit:
        a, b = lit.split("/")
        return f.div(int(a) % f.p, int(b) % f.p)
    return int(lit) % f.p


def format_element(s: SElement) -> str:
    R = s.ring
    f = R.field
    parts = []
    for name, c in zip(R.monomials, s.coeffs):
        if c == 0:
            continue
        neg = f.p == 0 and c < 0
        mag = -c if neg else c
        if name == "1":
            body = f.format(mag)
        elif mag == 1:
            body = name
        else:
            body = f"{f.format(mag)}*{name}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("-" if neg else "+") + body)
    return "".join(parts) if parts else "0"
