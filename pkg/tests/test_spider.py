import pytest
from hypothesis import given, strategies as st

from a2braid.coefficients import ONE, monomial, qnum
from a2braid.spider import (SpiderLabel, clasp_twist_coeff, delta, recoupling_matrix, sixj_mixed,
                            sixj_square, tet, theta, theta_closed, theta_sum, twist_coeff)
from a2braid.linalg import RepMatrix

# frozen values
def test_delta_values():
    assert delta(0, 0) == ONE
    assert delta(1, 0) == qnum(3)
    assert delta(1, 1) == qnum(2) * qnum(4)


def test_theta_values():
    assert theta(2, 1) == qnum(5) * qnum(4) / qnum(2)
    assert theta(1, 1) == delta(1, 1)


@pytest.mark.parametrize("n", range(6))
def test_theta_ends(n):
    assert theta(n, 0) == delta(n, 0)
    assert theta(n, n) == delta(n, n)


@given(st.integers(0, 5).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n))))
def test_theta_sum_equals_closed(ni):
    n, i = ni
    assert theta_sum(n, i) == theta_closed(n, i)


def test_tet_edges():
    assert tet(0, 0, 0) == ONE
    for n in range(4):
        for j in range(n + 1):
            assert tet(n, 0, j) == theta(n, j)


def test_sixj_square_corner():
    for n in range(4):
        assert sixj_square(n, 0, 0) == ONE / delta(n, 0)
    assert sixj_square(0, 0, 0) == ONE


@pytest.mark.parametrize("n", range(4))
def test_recoupling_is_involution(n):
    f = RepMatrix(recoupling_matrix(n))
    assert (f @ f).is_identity()


@pytest.mark.parametrize("n", range(4))
def test_mixed_identity(n):
    for s in range(n + 1):
        for t in range(n + 1):
            lhs = theta(n, t) / delta(n, 0)
            rhs = sixj_mixed(n, s, t) * sixj_square(n, t, s) * theta(n, s) / delta(s, s)
            assert lhs == rhs


def test_twist_exponents():
    assert twist_coeff(1, 0) == monomial(16)
    assert twist_coeff(1, 1, "-") == monomial(2)
    assert clasp_twist_coeff(1) * clasp_twist_coeff(1, "-") == ONE


@pytest.mark.parametrize("bad", [(-1, 0), (0, -2)])
def test_delta_rejects_negative(bad):
    with pytest.raises(ValueError):
        delta(*bad)


def test_range_checks():
    with pytest.raises(ValueError):
        theta(2, 3)
    with pytest.raises(ValueError):
        tet(1, 2, 0)
    with pytest.raises(ValueError):
        twist_coeff(1, 0, "x")


def test_label_invariant():
    assert SpiderLabel(2, 1) == (2, 1)
    with pytest.raises(ValueError):
        SpiderLabel(1, 2)
