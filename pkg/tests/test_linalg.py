import numpy as np
import pytest
from hypothesis import given, strategies as st

from a2braid.coefficients import ONE, ZERO, monomial, qnum
from a2braid.linalg import RepMatrix, SingularMatrixError, bareiss_det

from a2braid.coefficients import RatFunc

from strategies import laurent, ratfunc

square2 = st.lists(st.lists(ratfunc, min_size=2, max_size=2), min_size=2, max_size=2).map(RepMatrix)
poly3 = st.lists(st.lists(laurent.map(RatFunc), min_size=3, max_size=3), min_size=3, max_size=3).map(RepMatrix)


def test_identity_and_diagonal():
    i3 = RepMatrix.identity(3)
    assert i3.is_identity() and i3.is_diagonal()
    d = RepMatrix.diagonal([ONE, qnum(2)])
    assert d.diagonal_entries() == [ONE, qnum(2)]


def test_inverse_of_triangular():
    m = RepMatrix([[monomial(2), qnum(3)], [ZERO, qnum(2)]])
    assert (m @ m.inverse()).is_identity()
    assert m.det() == monomial(2) * qnum(2)


def test_singular_matrix():
    m = RepMatrix([[ONE, qnum(2)], [ONE, qnum(2)]])
    assert m.det() == ZERO
    with pytest.raises(SingularMatrixError):
        m.inverse()


@given(square2, square2)
def test_det_is_multiplicative(a, b):
    assert (a @ b).det() == a.det() * b.det()


@given(poly3)
def test_inverse_when_invertible(a):
    if a.det().is_zero():
        return
    assert (a.inverse() @ a).is_identity()


def test_negative_powers():
    a = RepMatrix([[monomial(2), qnum(3)], [monomial(-1), qnum(2)]])
    assert (a ** -2) @ (a ** 2) == RepMatrix.identity(2)
    assert a ** 0 == RepMatrix.identity(2)
    assert a.conjugate_by(a, 3) == a


@given(square2)
def test_json_round_trip(a):
    a = a.relabel("X")
    b = RepMatrix.from_json(a.dumps())
    assert b == a and b.label == "X"


def test_from_json_rejects_other_order():
    obj = RepMatrix.identity(1).to_json()
    obj["basis_order"] = "colex"
    with pytest.raises(ValueError):
        RepMatrix.from_json(obj)


def test_evaluate_is_numpy():
    m = RepMatrix([[qnum(2), ZERO], [ONE, monomial(1)]])
    arr = m.evaluate(1.0)
    assert isinstance(arr, np.ndarray)
    assert np.allclose(arr, [[2, 0], [1, 1]])


def test_bareiss_matches_cofactor():
    a = [[qnum(1), qnum(2), qnum(3)], [monomial(1), ONE, ZERO], [ZERO, monomial(-1), qnum(2)]]
    cof = (a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
           - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
           + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]))
    assert bareiss_det(a) == cof


def test_latex_has_environment():
    assert RepMatrix.identity(2).to_latex().startswith("\\begin{pmatrix}")
