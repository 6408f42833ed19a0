from hypothesis import given

from conftest import F3, matrix_tuples
from totrefl.algebra import Ring
from totrefl.field import QQ, KMatrix, invert
from totrefl.linmat import LinearMatrix
from totrefl.tuples import (MatrixTuple, jordan_block, presentation_from_tuple, random_tuple,
                            sigma_from_tuple, tuple_from_presentation, verify_factorization,
                            verify_matrix_factorization)


@given(matrix_tuples())
def test_every_tuple_gives_a_matrix_factorization(t):
    assert verify_matrix_factorization(t)


@given(matrix_tuples())
def test_presentation_round_trip(t):
    assert tuple_from_presentation(presentation_from_tuple(t)) == t


def test_corrupted_sigma_is_caught():
    R = Ring(2)
    t = MatrixTuple.from_lists(R, [[[1, 2], [0, 1]], [[0, 1], [1, 0]]])
    d, sigma = presentation_from_tuple(t), sigma_from_tuple(t)
    assert verify_factorization(d, sigma)
    Y = list(sigma.Y)
    Y[0] = Y[0] + KMatrix.from_rows(QQ, [[0, 0], [1, 0]])
    bad = LinearMatrix(R, 2, sigma.X, tuple(Y))
    assert not verify_factorization(d, bad)
    # flipping the sign of the whole partner also breaks it
    assert not verify_factorization(d, presentation_from_tuple(t))


@given(matrix_tuples())
def test_conjugation_by_identity_and_composition(t):
    f = t.field
    assert t.conjugate(KMatrix.identity(f, t.n)) == t
    P = jordan_block(f, t.n, 1)
    Q = KMatrix.from_rows(f, [[f.one() if r + c == t.n - 1 else f.zero() for c in range(t.n)]
                              for r in range(t.n)])
    assert t.conjugate(P).conjugate(Q) == t.conjugate(Q @ P)
    assert t.conjugate(P).conjugate(invert(P)) == t


def test_random_tuple_is_seeded():
    R = Ring(3, F3)
    assert random_tuple(R, 3, 7) == random_tuple(R, 3, 7)
    assert random_tuple(R, 3, 7) != random_tuple(R, 3, 8)
    assert random_tuple(R, 3, 7, 3, "a") != random_tuple(R, 3, 7, 3, "b")


def test_direct_sum_shapes():
    R = Ring(2)
    a = random_tuple(R, 1, 0)
    b = random_tuple(R, 2, 1)
    s = a.direct_sum(b)
    assert s.n == 3
    assert s.B[0].rows[0][1:] == (0, 0)
    assert verify_matrix_factorization(s)
