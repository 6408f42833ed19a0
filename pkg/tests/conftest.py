from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from totrefl.algebra import Ring
from totrefl.field import QQ, FieldSpec, KMatrix
from totrefl.tuples import MatrixTuple

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

F2, F3, F5 = FieldSpec(2), FieldSpec(3), FieldSpec(5)
FIELDS = [QQ, F2, F3, F5]

_ACCEPTANCE = []


def record_criterion(number, title, passed, detail=""):
    _ACCEPTANCE.append((number, title, passed, detail))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed, detail in sorted(_ACCEPTANCE):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {number}: {title} {detail}".rstrip())


@pytest.fixture
def S2():
    return Ring(2)


def scalars(field, height=3):
    if field.p:
        return st.integers(0, field.p - 1)
    return st.integers(-height, height).map(Fraction)


@st.composite
def kmatrices(draw, field=None, rows=None, cols=None, max_dim=4):
    field = field or draw(st.sampled_from(FIELDS))
    r = rows if rows is not None else draw(st.integers(1, max_dim))
    c = cols if cols is not None else draw(st.integers(1, max_dim))
    entries = draw(st.lists(st.lists(scalars(field), min_size=c, max_size=c), min_size=r, max_size=r))
    return KMatrix.from_rows(field, entries, c)


@st.composite
def square_kmatrices(draw, field=None, max_dim=4):
    n = draw(st.integers(1, max_dim))
    return draw(kmatrices(field=field, rows=n, cols=n))


@st.composite
def rings(draw, fields=(QQ, F3, F5), max_i=3):
    return Ring(draw(st.integers(2, max_i)), draw(st.sampled_from(list(fields))))


@st.composite
def matrix_tuples(draw, ring=None, n=None, max_n=3, fields=(QQ, F3, F5)):
    ring = ring or draw(rings(fields))
    n = n or draw(st.integers(1, max_n))
    return MatrixTuple(ring, tuple(draw(kmatrices(ring.field, n, n)) for _ in range(ring.i)))
