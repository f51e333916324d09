"""Closed-form evaluations of clasped A2 trivalent graphs.

All functions return canonical :class:`RatFunc` values and are memoised.
Indices follow the clasped-web notation: ``n`` is the color of the outer
strands, ``i``/``j``/``s``/``t`` are the (i, i) labels of white-vertex edges.
"""

from __future__ import annotations

import os
from functools import lru_cache

from .coefficients import ONE, ZERO, RatFunc, monomial, qbinom, qnum

__all__ = [
    "SpiderLabel",
    "SingularSixJError",
    "delta",
    "theta",
    "theta_sum",
    "theta_closed",
    "tet",
    "sixj_square",
    "sixj_mixed",
    "twist_coeff",
    "clasp_twist_coeff",
    "recoupling_matrix",
]

# set A2BRAID_VERIFY=1 to cross-check theta's closed form against the sum
VERIFY = os.environ.get("A2BRAID_VERIFY", "") not in ("", "0")


class SingularSixJError(ZeroDivisionError):
    """A 6j denominator vanished; never expected at generic q."""


class SpiderLabel(tuple):
    """Pair ``(n, i)`` with ``0 <= i <= n``."""

    def __new__(cls, n: int, i: int):
        _check_range(n, i)
        return super().__new__(cls, (n, i))

    @property
    def n(self) -> int:
        return self[0]

    @property
    def i(self) -> int:
        return self[1]


def _check_range(n: int, *idx: int) -> None:
    if n < 0:
        raise ValueError(f"color must be >= 0, got {n}")
    for x in idx:
        if not 0 <= x <= n:
            raise ValueError(f"label {x} out of range 0..{n}")


@lru_cache(maxsize=None)
def delta(i: int, j: int) -> RatFunc:
    """Closed clasp loop of type (i, j): [i+1][j+1][i+j+2]/[2]."""
    if i < 0 or j < 0:
        raise ValueError("delta needs nonnegative arguments")
    num = qnum(i + 1) * qnum(j + 1) * qnum(i + j + 2)
    out = num / qnum(2)
    assert out.is_laurent()
    return out


@lru_cache(maxsize=None)
def theta_sum(n: int, i: int) -> RatFunc:
    _check_range(n, i)
    d = delta(n, 0)
    total = ZERO
    for k in range(i + 1):
        term = qbinom(i, k) ** 2 / qbinom(2 * i + 1, k) * d * d / delta(n - i + k, 0)
        total = total + (term if k % 2 == 0 else -term)
    return total


@lru_cache(maxsize=None)
def theta_closed(n: int, i: int) -> RatFunc:
    _check_range(n, i)
    return qbinom(n + i + 2, 2 * i + 2) / qbinom(n, i) ** 2 * delta(i, i)


def theta(n: int, i: int) -> RatFunc:
    """theta(n, n, (i, i)); the sum form is checked when VERIFY is on."""
    value = theta_closed(n, i)
    if VERIFY:
        assert value == theta_sum(n, i), (n, i)
    return value


@lru_cache(maxsize=None)
def tet(n: int, i: int, j: int) -> RatFunc:
    _check_range(n, i, j)
    total = ZERO
    for k in range(max(0, i + j - n), i + 1):
        num = qbinom(i, k) ** 2 * qbinom(n - j, i - k) * qbinom(n + j + 2, i - k)
        den = qbinom(2 * i + 1, k) * qbinom(n, i - k) ** 2
        term = num / den
        total = total + (term if k % 2 == 0 else -term)
    return total * theta(n, j)


@lru_cache(maxsize=None)
def sixj_square(n: int, i: int, j: int) -> RatFunc:
    """Coefficient of the j-th vertical web in the i-th horizontal one."""
    _check_range(n, i, j)
    th = theta(n, j)
    if th.is_zero():
        raise SingularSixJError(f"theta({n},{j}) vanished")
    return tet(n, i, j) * delta(j, j) / (th * th)


@lru_cache(maxsize=None)
def sixj_mixed(n: int, s: int, t: int) -> RatFunc:
    _check_range(n, s, t)
    den = tet(n, s, t) * delta(n, 0)
    if den.is_zero():
        raise SingularSixJError(f"Tet({n};{s},{t}) vanished")
    return theta(n, s) * theta(n, t) / den


def _sign(sign) -> int:
    if sign in ("+", 1, +1):
        return 1
    if sign in ("-", -1):
        return -1
    raise ValueError(f"sign must be '+' or '-', got {sign!r}")


def twist_coeff(n: int, j: int, sign="+") -> RatFunc:
    """q^{+-(2/3(n^2+3n) - j^2 - 2j)} as a power of v."""
    _check_range(n, j)
    return monomial(_sign(sign) * (4 * (n * n + 3 * n) - 6 * (j * j + 2 * j)))


def clasp_twist_coeff(j: int, sign="+") -> RatFunc:
    """q^{+-(j^2 + 2j)} as a power of v."""
    if j < 0:
        raise ValueError("clasp label must be >= 0")
    return monomial(_sign(sign) * 6 * (j * j + 2 * j))


def recoupling_matrix(n: int):
    """F with F[j][i] = sixj_square(n, i, j), as nested lists."""
    return [[sixj_square(n, i, j) for i in range(n + 1)] for j in range(n + 1)]
