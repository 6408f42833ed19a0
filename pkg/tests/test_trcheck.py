import pytest
from hypothesis import given, settings

from conftest import F3, F5, matrix_tuples
from totrefl.algebra import Ring
from totrefl.field import QQ, KMatrix
from totrefl.linmat import LinearMatrix, SMatrix
from totrefl.modrep import cokernel
from totrefl.trcheck import (biduality_check, biduality_data, check_tuple, ext_oracle, ring_conditions,
                             total_acyclicity_check, total_acyclicity_check_raw, yoshino_conditions)
from totrefl.tuples import MatrixTuple


@pytest.mark.parametrize("i", [2, 3, 4])
def test_ring_conditions(i):
    assert all(ring_conditions(Ring(i)).values())


@given(matrix_tuples(max_n=3))
def test_tuples_are_totally_acyclic(t):
    rep = total_acyclicity_check(t)
    assert rep.passed, rep.to_dict()
    assert rep.ranks["d"] == rep.ranks["sigma"] == t.n * t.ring.e


@settings(max_examples=8)
@given(matrix_tuples(max_n=2))
def test_oracle_agrees_with_acyclicity(t):
    out = check_tuple(t, depth=3, oracle=True)
    assert out["passed"] and out["oracle_agrees"]
    assert out["ext"] == [0, 0, 0]


def test_report_records_field_hypothesis():
    t = MatrixTuple.zeros(Ring(2, F5), 1)
    d = total_acyclicity_check(t).to_dict()
    assert d["char_zero_hypothesis"] is False
    assert total_acyclicity_check(MatrixTuple.zeros(Ring(2), 1)).to_dict()["char_zero_hypothesis"]


def test_raw_y1_fails():
    R = Ring(2)
    d = LinearMatrix(R, 1, KMatrix.zeros(QQ, 1), (KMatrix.identity(QQ, 1), KMatrix.zeros(QQ, 1)))
    rep = total_acyclicity_check_raw(d)
    assert not rep.passed
    assert not rep.conditions["exact"]


def test_raw_check_accepts_scaled_x():
    R = Ring(2, F3)
    d = LinearMatrix(R, 1, KMatrix.from_rows(F3, [[2]]), (KMatrix.from_rows(F3, [[1]]), KMatrix.zeros(F3, 1)))
    assert total_acyclicity_check_raw(d).passed


def test_s_mod_y1_is_not_totally_reflexive(S2):
    m = cokernel(SMatrix.from_entries(S2, [[S2.y(1)]]))
    ext = ext_oracle(m, 3)
    assert any(ext)
    assert ext == [2, 6, 12]
    assert not biduality_check(m)
    assert not yoshino_conditions(m, 4).passed


def test_s_mod_x_is_totally_reflexive(S2):
    m = cokernel(SMatrix.from_entries(S2, [[S2.x]]))
    assert ext_oracle(m, 4) == [0, 0, 0, 0]
    data = biduality_data(m)
    assert data["injective"] and data["surjective"]
    assert yoshino_conditions(m, 4).passed


def test_ext_depth_validation(S2):
    with pytest.raises(ValueError):
        ext_oracle(cokernel(SMatrix.from_entries(S2, [[S2.x]])), 0)
