"""Exact scalars: Laurent polynomials and rational functions in v = q^(1/6).

Every fractional power of q used by the A2 skein calculus is an integer power
of ``v``: q = v**6, q^(1/2) = v**3, q^(1/3) = v**2.  Values are immutable and
kept in a canonical form, so ``==`` is structural equality.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd as _igcd
from typing import Dict, Iterable, List, Mapping, Tuple, Union

__all__ = [
    "LaurentPoly",
    "RatFunc",
    "PoleError",
    "qint",
    "qbinom",
    "qfactorial",
    "qnum",
    "bar",
    "eval_numeric",
    "monomial",
    "ZERO",
    "ONE",
    "V",
]

Number = Union[int, Fraction]


class PoleError(ArithmeticError):
    """Raised when a rational function is evaluated at (or near) a pole."""


# ---------------------------------------------------------------------------
# dense polynomial helpers (ascending coefficient lists, no trailing zeros)


def _trim(p: List) -> List:
    while p and p[-1] == 0:
        p.pop()
    return p


def _pmul(a: List, b: List) -> List:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def _to_primitive_int(p: List[Fraction]) -> List[int]:
    den = 1
    for c in p:
        den = den * c.denominator // _igcd(den, c.denominator)
    ints = [int(c * den) for c in p]
    return _primitive(ints)


def _primitive(p: List[int]) -> List[int]:
    g = 0
    for c in p:
        g = _igcd(g, c)
        if g == 1:
            break
    if g > 1:
        p = [c // g for c in p]
    if p and p[-1] < 0:
        p = [-c for c in p]
    return p


def _prem_primitive(a: List[int], b: List[int]) -> List[int]:
    """Primitive part of the pseudo-remainder of ``a`` by ``b`` over Z."""
    r = list(a)
    lc = b[-1]
    nb = len(b)
    while len(r) >= nb:
        c = r[-1]
        shift = len(r) - nb
        r = [x * lc for x in r]
        for i, bi in enumerate(b):
            r[i + shift] -= c * bi
        _trim(r)
        if r:
            r = _primitive(r)
    return r


def _int_gcd(a: List[int], b: List[int]) -> List[int]:
    if len(a) < len(b):
        a, b = b, a
    while b:
        a, b = b, _prem_primitive(a, b)
    return _primitive(a)


def _norm(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def _pdivexact(a: List, b: List) -> List:
    """Quotient of ``a`` by ``b`` over Q; the remainder must vanish."""
    r = list(a)
    nb = len(b)
    if len(r) < nb:
        if r:
            raise ArithmeticError("inexact polynomial division")
        return []
    q = [0] * (len(r) - nb + 1)
    lead = b[-1]
    unit = lead in (1, -1)
    while len(r) >= nb and r:
        c = r[-1] * lead if unit else _norm(Fraction(r[-1]) / lead)
        shift = len(r) - nb
        q[shift] = c
        if c:
            for i, bi in enumerate(b):
                r[i + shift] -= c * bi
        r.pop()
        _trim(r)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return [_norm(x) for x in q]


# ---------------------------------------------------------------------------


class LaurentPoly:
    """Finite sum of rational multiples of integer powers of v.

    Stored densely as ``(low, coeffs)``: the coefficient of ``v**(low + i)`` is
    ``coeffs[i]``.  Zero is ``(0, ())``; otherwise both end coefficients are
    nonzero.
    """

    __slots__ = ("low", "coeffs", "_hash")

    def __init__(self, terms: Union[Mapping[int, Number], None] = None):
        if not terms:
            self.low, self.coeffs = 0, ()
        else:
            items = {int(e): _norm(Fraction(c)) for e, c in terms.items() if c != 0}
            if not items:
                self.low, self.coeffs = 0, ()
            else:
                lo, hi = min(items), max(items)
                self.low = lo
                self.coeffs = tuple(items.get(e, 0) for e in range(lo, hi + 1))
        self._hash = None

    @classmethod
    def _from_dense(cls, low: int, coeffs: Iterable[Fraction]) -> "LaurentPoly":
        c = list(coeffs)
        _trim(c)
        k = 0
        while k < len(c) and c[k] == 0:
            k += 1
        obj = cls.__new__(cls)
        if k == len(c):
            obj.low, obj.coeffs = 0, ()
        else:
            obj.low, obj.coeffs = low + k, tuple(_norm(x) for x in c[k:])
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: Number) -> "LaurentPoly":
        return cls._from_dense(0, [Fraction(c)])

    @classmethod
    def mono(cls, e: int, c: Number = 1) -> "LaurentPoly":
        return cls._from_dense(e, [Fraction(c)])

    # -- inspection --------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def high(self) -> int:
        return self.low + len(self.coeffs) - 1

    def terms(self) -> Dict[int, Fraction]:
        return {self.low + i: Fraction(c) for i, c in enumerate(self.coeffs) if c != 0}

    def is_monomial(self) -> bool:
        return len(self.coeffs) == 1

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.low == other.low and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == LaurentPoly.const(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.low, self.coeffs))
        return self._hash

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.const(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.low, other.low)
        hi = max(self.high, other.high)
        out = [0] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs):
            out[self.low - lo + i] += c
        for i, c in enumerate(other.coeffs):
            out[other.low - lo + i] += c
        return LaurentPoly._from_dense(lo, out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._from_dense(self.low, [-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return LaurentPoly.const(other) - self

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.const(other)
        if self.is_zero() or other.is_zero():
            return LaurentPoly()
        return LaurentPoly._from_dense(self.low + other.low, _pmul(list(self.coeffs), list(other.coeffs)))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise ValueError("negative power of a Laurent polynomial")
        out = LaurentPoly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Quotient when ``other`` divides ``self`` in the Laurent ring."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return self
        q = _pdivexact(list(self.coeffs), list(other.coeffs))
        return LaurentPoly._from_dense(self.low - other.low, q)

    def bar(self) -> "LaurentPoly":
        return LaurentPoly._from_dense(-self.high, reversed(self.coeffs)) if self.coeffs else self

    def __call__(self, v0: complex) -> complex:
        if not self.coeffs:
            return 0j
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * v0 + complex(c)
        return acc * v0 ** self.low

    def __repr__(self):
        return f"LaurentPoly({self.terms()!r})"

    def __str__(self):
        return _format_poly(self.terms())


def _format_poly(terms: Mapping[int, Fraction], var: str = "v") -> str:
    if not terms:
        return "0"
    parts = []
    for e in sorted(terms, reverse=True):
        c = terms[e]
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if e == 0:
            body = str(a)
        else:
            mono = var if e == 1 else f"{var}^{e}"
            body = mono if a == 1 else f"{a}*{mono}"
        parts.append((sign, body))
    s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        s += f" {sign} {body}"
    return s


class RatFunc:
    """Canonical element of Q(v).

    Canonical form: ``num / den`` with gcd 1, ``den.low == 0`` and the
    constant coefficient of ``den`` equal to 1.  Zero is ``0 / 1``.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Union[LaurentPoly, Number] = 0, den: Union[LaurentPoly, Number] = 1):
        if not isinstance(num, LaurentPoly):
            num = LaurentPoly.const(num)
        if not isinstance(den, LaurentPoly):
            den = LaurentPoly.const(den)
        self.num, self.den = _canonical(num, den)
        self._hash = None

    @classmethod
    def _raw(cls, num: LaurentPoly, den: LaurentPoly) -> "RatFunc":
        obj = cls.__new__(cls)
        obj.num, obj.den, obj._hash = num, den, None
        return obj

    @classmethod
    def mono(cls, e: int, c: Number = 1) -> "RatFunc":
        return cls._raw(LaurentPoly.mono(e, c), _ONE_POLY)

    # -- inspection --------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_laurent(self) -> bool:
        return self.den == _ONE_POLY

    def is_unit_monomial(self) -> bool:
        """True for c*v**e with c != 0, the units of the Laurent ring."""
        return self.is_laurent() and self.num.is_monomial()

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction, LaurentPoly)):
            return self == RatFunc(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    # -- field operations --------------------------------------------------
    @staticmethod
    def _coerce(x) -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, (LaurentPoly, int, Fraction)):
            return RatFunc(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to RatFunc")

    def __add__(self, other):
        other = self._coerce(other)
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return ZERO
        if self.is_laurent() and other.is_laurent():
            return RatFunc._raw(self.num * other.num, _ONE_POLY)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(v)")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int) -> "RatFunc":
        if k < 0:
            return self.inverse() ** (-k)
        return RatFunc(self.num ** k, self.den ** k)

    def bar(self) -> "RatFunc":
        return RatFunc(self.num.bar(), self.den.bar())

    def __call__(self, v0: complex, tol: float = 1e-12) -> complex:
        d = self.den(v0)
        if abs(d) < tol:
            raise PoleError(f"denominator vanishes at v = {v0}")
        return self.num(v0) / d

    # -- serialisation -----------------------------------------------------
    def to_json(self) -> dict:
        return {"num": _terms_json(self.num), "den": _terms_json(self.den)}

    @classmethod
    def from_json(cls, obj: Mapping) -> "RatFunc":
        return cls(_terms_parse(obj["num"]), _terms_parse(obj["den"]))

    def __repr__(self):
        return f"RatFunc({self})"

    def __str__(self):
        if self.is_laurent():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def to_latex(self) -> str:
        """LaTeX in powers of q (exponents are multiples of 1/6)."""
        if self.is_laurent():
            return _latex_poly(self.num)
        return r"\frac{%s}{%s}" % (_latex_poly(self.num), _latex_poly(self.den))


def _terms_json(p: LaurentPoly) -> Dict[str, str]:
    return {str(e): f"{c.numerator}/{c.denominator}" for e, c in sorted(p.terms().items())}


def _terms_parse(obj: Mapping[str, str]) -> LaurentPoly:
    return LaurentPoly({int(e): Fraction(c) for e, c in obj.items()})


def _q_power(e: int) -> str:
    f = Fraction(e, 6)
    if f == 1:
        return "q"
    if f.denominator == 1:
        return "q^{%d}" % f.numerator
    return "q^{%s%d/%d}" % ("-" if f < 0 else "", abs(f.numerator), f.denominator)


def _latex_poly(p: LaurentPoly) -> str:
    terms = p.terms()
    if not terms:
        return "0"
    out = ""
    for e in sorted(terms, reverse=True):
        c = terms[e]
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if a.denominator == 1:
            cs = str(a.numerator)
        else:
            cs = r"\tfrac{%d}{%d}" % (a.numerator, a.denominator)
        body = cs if e == 0 else (_q_power(e) if a == 1 else cs + _q_power(e))
        if not out:
            out = ("-" if sign == "-" else "") + body
        else:
            out += f" {sign} {body}"
    return out


_ONE_POLY = LaurentPoly.const(1)


def _canonical(num: LaurentPoly, den: LaurentPoly) -> Tuple[LaurentPoly, LaurentPoly]:
    if den.is_zero():
        raise ZeroDivisionError("zero denominator in Q(v)")
    if num.is_zero():
        return LaurentPoly(), _ONE_POLY
    shift = num.low - den.low
    n = list(num.coeffs)
    d = list(den.coeffs)
    if len(d) > 1 and len(n) > 1:
        g = _int_gcd(_to_primitive_int(n), _to_primitive_int(d))
        if len(g) > 1:
            n = _pdivexact(n, g)
            d = _pdivexact(d, g)
    c0 = d[0]
    if c0 == -1:
        n = [-x for x in n]
        d = [-x for x in d]
    elif c0 != 1:
        n = [Fraction(x) / c0 for x in n]
        d = [Fraction(x) / c0 for x in d]
    return LaurentPoly._from_dense(shift, n), LaurentPoly._from_dense(0, d)


ZERO = RatFunc(0)
ONE = RatFunc(1)
V = RatFunc.mono(1)


def monomial(e: int, c: Number = 1) -> RatFunc:
    """``c * v**e`` as a RatFunc."""
    return RatFunc.mono(e, c)


# ---------------------------------------------------------------------------
# quantum combinatorics


@lru_cache(maxsize=None)
def qint(n: int) -> LaurentPoly:
    """Quantum integer [n] = (v^{3n} - v^{-3n}) / (v^3 - v^{-3})."""
    if n < 0:
        raise ValueError(f"quantum integer needs n >= 0, got {n}")
    return LaurentPoly({3 * (n - 1 - 2 * m): 1 for m in range(n)})


@lru_cache(maxsize=None)
def qfactorial(n: int) -> LaurentPoly:
    if n < 0:
        raise ValueError(f"quantum factorial needs n >= 0, got {n}")
    out = LaurentPoly.const(1)
    for m in range(2, n + 1):
        out = out * qint(m)
    return out


@lru_cache(maxsize=None)
def qbinom(n: int, k: int) -> RatFunc:
    """Quantum binomial; zero outside 0 <= k <= n."""
    if n < 0 or k < 0 or k > n:
        return ZERO
    k = min(k, n - k)
    num = LaurentPoly.const(1)
    for m in range(n - k + 1, n + 1):
        num = num * qint(m)
    return RatFunc._raw(num.exact_div(qfactorial(k)), _ONE_POLY)


def bar(x: RatFunc) -> RatFunc:
    """The involution v -> 1/v."""
    return x.bar()


def eval_numeric(x: RatFunc, v0: complex, tol: float = 1e-12) -> complex:
    """Evaluate at ``v = v0``; raises PoleError if the denominator is ~0."""
    return x(complex(v0), tol)


def qnum(n: int) -> RatFunc:
    """[n] as a RatFunc."""
    return RatFunc._raw(qint(n), _ONE_POLY)
