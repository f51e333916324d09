"""Dense square matrices over Q(v) with exact elimination."""

from __future__ import annotations

import json
from typing import List, Optional, Sequence

from .coefficients import ONE, ZERO, RatFunc

__all__ = ["RepMatrix", "SingularMatrixError", "bareiss_det"]


class SingularMatrixError(ZeroDivisionError):
    pass


class RepMatrix:
    """Square matrix of RatFunc entries indexed in lexicographic basis order.

    Column ``c`` holds the coordinates of the image of basis vector ``c``.
    ``n`` and ``k`` are carried for serialisation; ``label`` names the
    generator or word the matrix represents.
    """

    __slots__ = ("rows", "n", "k", "label")

    def __init__(self, rows: Sequence[Sequence[RatFunc]], n: Optional[int] = None,
                 k: Optional[int] = None, label: str = "word"):
        self.rows = tuple(tuple(RatFunc._coerce(x) for x in r) for r in rows)
        size = len(self.rows)
        if any(len(r) != size for r in self.rows):
            raise ValueError("matrix must be square")
        self.n, self.k, self.label = n, k, label

    # -- constructors ------------------------------------------------------
    @classmethod
    def identity(cls, size: int, n=None, k=None, label="word") -> "RepMatrix":
        return cls([[ONE if r == c else ZERO for c in range(size)] for r in range(size)], n, k, label)

    @classmethod
    def diagonal(cls, entries: Sequence[RatFunc], n=None, k=None, label="word") -> "RepMatrix":
        size = len(entries)
        return cls([[entries[r] if r == c else ZERO for c in range(size)] for r in range(size)], n, k, label)

    def relabel(self, label: str) -> "RepMatrix":
        return RepMatrix(self.rows, self.n, self.k, label)

    # -- basic structure ---------------------------------------------------
    @property
    def size(self) -> int:
        return len(self.rows)

    def __getitem__(self, rc):
        r, c = rc
        return self.rows[r][c]

    def __eq__(self, other):
        if not isinstance(other, RepMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def is_identity(self) -> bool:
        return all(self.rows[r][c] == (ONE if r == c else ZERO)
                   for r in range(self.size) for c in range(self.size))

    def is_diagonal(self) -> bool:
        return all(self.rows[r][c].is_zero()
                   for r in range(self.size) for c in range(self.size) if r != c)

    def diagonal_entries(self) -> List[RatFunc]:
        return [self.rows[i][i] for i in range(self.size)]

    # -- arithmetic --------------------------------------------------------
    def __matmul__(self, other: "RepMatrix") -> "RepMatrix":
        if self.size != other.size:
            raise ValueError("size mismatch")
        cols = list(zip(*other.rows))
        out = []
        for row in self.rows:
            nz = [(i, x) for i, x in enumerate(row) if not x.is_zero()]
            out_row = []
            for col in cols:
                acc = ZERO
                for i, x in nz:
                    y = col[i]
                    if not y.is_zero():
                        acc = acc + x * y
                out_row.append(acc)
            out.append(out_row)
        return RepMatrix(out, self.n, self.k)

    __mul__ = __matmul__

    def __sub__(self, other: "RepMatrix") -> "RepMatrix":
        return RepMatrix([[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)],
                         self.n, self.k)

    def scale(self, x: RatFunc) -> "RepMatrix":
        return RepMatrix([[x * a for a in r] for r in self.rows], self.n, self.k)

    def transpose(self) -> "RepMatrix":
        return RepMatrix(list(zip(*self.rows)), self.n, self.k)

    def det(self) -> RatFunc:
        return bareiss_det([list(r) for r in self.rows])

    def inverse(self) -> "RepMatrix":
        """Fraction-free (Bareiss) elimination on [A | I], then one division by det."""
        m = self.size
        a = [list(r) + [ONE if i == j else ZERO for j in range(m)] for i, r in enumerate(self.rows)]
        prev = ONE
        for p in range(m):
            piv = next((r for r in range(p, m) if not a[r][p].is_zero()), None)
            if piv is None:
                raise SingularMatrixError("matrix is singular")
            if piv != p:
                a[p], a[piv] = a[piv], a[p]
            app = a[p][p]
            for r in range(m):
                if r == p:
                    continue
                arp = a[r][p]
                a[r] = [(app * a[r][c] - arp * a[p][c]) / prev for c in range(2 * m)]
            prev = app
        # every pivot row now has diagonal entry equal to det (up to swaps)
        return RepMatrix([[a[r][m + c] / a[r][r] for c in range(m)] for r in range(m)],
                         self.n, self.k)

    def __pow__(self, e: int) -> "RepMatrix":
        base = self if e >= 0 else self.inverse()
        e = abs(e)
        out = RepMatrix.identity(self.size, self.n, self.k)
        while e:
            if e & 1:
                out = out @ base
            base = base @ base
            e >>= 1
        return out

    def conjugate_by(self, s: "RepMatrix", power: int) -> "RepMatrix":
        """s^{-power} @ self @ s^{power}."""
        if power == 0:
            return self
        return (s ** (-power)) @ self @ (s ** power)

    def evaluate(self, v0: complex, tol: float = 1e-12):
        """Complex numpy array of entries evaluated at ``v = v0``."""
        import numpy as np

        return np.array([[x(v0, tol) for x in r] for r in self.rows], dtype=complex)

    # -- serialisation -----------------------------------------------------
    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "generator": self.label,
            "basis_order": "lex",
            "entries": [[x.to_json() for x in r] for r in self.rows],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1, sort_keys=False)

    @classmethod
    def from_json(cls, obj) -> "RepMatrix":
        if isinstance(obj, str):
            obj = json.loads(obj)
        if obj.get("basis_order", "lex") != "lex":
            raise ValueError("only lexicographic basis order is supported")
        rows = [[RatFunc.from_json(x) for x in r] for r in obj["entries"]]
        return cls(rows, obj.get("n"), obj.get("k"), obj.get("generator", "word"))

    def to_latex(self) -> str:
        body = " \\\\\n".join(" & ".join(x.to_latex() for x in r) for r in self.rows)
        return "\\begin{pmatrix}\n" + body + "\n\\end{pmatrix}"

    def __repr__(self):
        return f"RepMatrix({self.label}, size={self.size})"

    def __str__(self):
        return "\n".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.rows)


def bareiss_det(a: List[List[RatFunc]]) -> RatFunc:
    a = [list(r) for r in a]
    m = len(a)
    if m == 0:
        return ONE
    sign = 1
    prev = ONE
    for p in range(m - 1):
        piv = next((r for r in range(p, m) if not a[r][p].is_zero()), None)
        if piv is None:
            return ZERO
        if piv != p:
            a[p], a[piv] = a[piv], a[p]
            sign = -sign
        for r in range(p + 1, m):
            for c in range(p + 1, m):
                a[r][c] = (a[p][p] * a[r][c] - a[r][p] * a[p][c]) / prev
        prev = a[p][p]
    d = a[m - 1][m - 1]
    return d if sign > 0 else -d
