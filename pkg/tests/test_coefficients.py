import cmath
import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from a2braid.coefficients import (ONE, V, ZERO, LaurentPoly, PoleError, RatFunc, bar, eval_numeric,
                                  monomial, qbinom, qint, qnum)

from strategies import laurent, nonzero_ratfunc, ratfunc


def test_qint_small_values():
    assert qint(0).is_zero()
    assert qint(1) == LaurentPoly.const(1)
    assert qint(2) == LaurentPoly({3: 1, -3: 1})
    assert qint(3) == LaurentPoly({6: 1, 0: 1, -6: 1})


def test_qint_rejects_negative():
    with pytest.raises(ValueError):
        qint(-1)


def test_qbinom_edges():
    assert qbinom(5, 0) == ONE
    assert qbinom(5, 5) == ONE
    assert qbinom(3, 4) == ZERO
    assert qbinom(4, 2) == qnum(4) * qnum(3) / qnum(2)


@given(st.integers(1, 7), st.integers(0, 7))
def test_qbinom_pascal(n, k):
    # [n k] = v^{3k} [n-1 k] + v^{-3(n-k)} [n-1 k-1]
    lhs = qbinom(n, k)
    rhs = monomial(-3 * k) * qbinom(n - 1, k) + monomial(3 * (n - k)) * qbinom(n - 1, k - 1)
    assert lhs == rhs


@given(st.integers(0, 9))
def test_qint_is_bar_invariant(n):
    assert qnum(n) == bar(qnum(n))


def test_canonical_form_cancels_common_factor():
    a = qnum(2) * qnum(3)
    b = qnum(2) * qnum(5)
    x = a / b
    assert x == qnum(3) / qnum(5)
    assert x.to_json() == (qnum(3) / qnum(5)).to_json()


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


@given(ratfunc, ratfunc, ratfunc)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO


@given(nonzero_ratfunc)
def test_inverse(a):
    assert a * a.inverse() == ONE


@given(ratfunc)
def test_hash_agrees_with_eq(a):
    b = (a * qnum(2)) / qnum(2)
    assert a == b and hash(a) == hash(b)


@given(ratfunc)
def test_json_round_trip(a):
    blob = json.dumps(a.to_json())
    assert RatFunc.from_json(json.loads(blob)) == a


@given(ratfunc, ratfunc)
def test_bar_is_ring_map(a, b):
    assert bar(a * b) == bar(a) * bar(b)
    assert bar(bar(a)) == a


@given(laurent, laurent)
def test_laurent_numeric_eval_is_multiplicative(p, q):
    z = cmath.exp(0.37j) * 0.9
    assert abs((p * q)(z) - p(z) * q(z)) < 1e-8 * (1 + abs(p(z) * q(z)))


def test_eval_at_pole_raises():
    x = ONE / qnum(3)
    v0 = cmath.exp(2j * cmath.pi / 18)  # q = exp(2 pi i / 3), where [3] = 0
    with pytest.raises(PoleError):
        eval_numeric(x, v0)


def test_json_shape():
    obj = (V - ONE).to_json()
    assert set(obj) == {"num", "den"}
    assert all(isinstance(k, str) and isinstance(val, str) for k, val in obj["num"].items())


def test_fraction_coefficients_survive():
    x = RatFunc(LaurentPoly({1: Fraction(1, 3)}))
    assert (x * 3) == V
