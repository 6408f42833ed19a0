import pytest
from hypothesis import given, strategies as st

from conftest import F5
from totrefl.algebra import Ring
from totrefl.conjugacy import are_conjugate
from totrefl.errors import NotLinear, NotNormalizable, ShapeError
from totrefl.field import QQ
from totrefl.linmat import SMatrix, is_invertible_local, random_scramble
from totrefl.normalform import normalize
from totrefl.tuples import presentation_from_tuple, random_tuple


def test_tuple_presentation_is_fixed():
    t = random_tuple(Ring(2), 3, 1)
    nf = normalize(presentation_from_tuple(t))
    assert nf.tuple == t
    assert nf.row_ops == SMatrix.identity(t.ring, 3)


@given(st.integers(0, 1000), st.integers(1, 3), st.sampled_from([QQ, F5]))
def test_scramble_round_trip(seed, n, field):
    R = Ring(2, field)
    t = random_tuple(R, n, seed)
    _, _, d = random_scramble(presentation_from_tuple(t), seed)
    nf = normalize(d)
    assert is_invertible_local(nf.row_ops) and is_invertible_local(nf.col_ops)
    assert nf.row_ops @ d @ nf.col_ops == presentation_from_tuple(nf.tuple).to_smatrix()
    assert are_conjugate(t, nf.tuple).conjugate


def test_rejections(S2):
    with pytest.raises(NotLinear):
        normalize(SMatrix.from_entries(S2, [[S2.one() + S2.x]]))
    with pytest.raises(NotNormalizable):
        normalize(SMatrix.from_entries(S2, [[S2.y(1)]]))
    with pytest.raises(ShapeError):
        normalize(SMatrix.zeros(S2, 1, 2))
