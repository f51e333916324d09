"""Clasps, double clasps and the white trivalent vertex as expandable boxes.

Box labels:

``("P", n, d)``
    clasp on ``n`` parallel strands with strip direction ``d``
``("D", a, b, d)``
    double clasp on ``a`` strands of direction ``d`` then ``b`` strands of
    the opposite direction
``("W", n, i, x)``
    white vertex joining two legs of ``n`` strands and one double-clasped
    leg of ``i`` + ``i`` strands

Expansions are reduced once and cached.
"""

from __future__ import annotations

from functools import lru_cache
from typing import List, Sequence, Tuple

from ..coefficients import ONE, RatFunc, qbinom, qnum
from .diagram import DiagramError, Strip, Web, flip_dir
from .skein import ccw_boundary, expansion, reduce_element, register_expansion

__all__ = ["add_clasp", "add_double_clasp", "clasp_web", "double_clasp_web", "white_vertex_web", "place_box",
           "white_dlow_position", "expand_clasp", "expand_double_clasp"]


def add_clasp(s: Strip, pos: int, n: int, d: str) -> None:
    if n >= 2:
        s.box(pos, n, ("P", n, d), [d] * n)


def add_double_clasp(s: Strip, pos: int, a: int, b: int, d: str) -> None:
    if a and b:
        s.box(pos, a + b, ("D", a, b, d), [d] * a + [flip_dir(d)] * b)
    else:
        add_clasp(s, pos, a, d)
        add_clasp(s, pos + a, b, flip_dir(d))


@lru_cache(maxsize=None)
def clasp_web(n: int, d: str = "u") -> Tuple[Tuple[RatFunc, Web], ...]:
    """The clasp P_n, by the recursion that peels off the last strand."""
    if n < 1:
        raise DiagramError("clasp needs at least one strand")
    if n == 1:
        return ((ONE, Strip([d]).close()),)
    s1 = Strip([d] * n)
    add_clasp(s1, 0, n - 1, d)
    s2 = Strip([d] * n)
    add_clasp(s2, 0, n - 1, d)
    s2.merge(n - 2).split(n - 2)
    add_clasp(s2, 0, n - 1, d)
    c = -(qnum(n - 1) / qnum(n))
    return tuple(reduce_element([(ONE, s1.close()), (c, s2.close())]).items())


@lru_cache(maxsize=None)
def double_clasp_web(a: int, b: int, d: str = "u") -> Tuple[Tuple[RatFunc, Web], ...]:
    """Clasp on a strands of direction d next to b strands going the other way."""
    e = flip_dir(d)
    terms = []
    for k in range(min(a, b) + 1):
        s = Strip([d] * a + [e] * b)
        add_clasp(s, 0, a, d)
        add_clasp(s, a, b, e)
        for j in range(k):
            s.cap(a - 1 - j)
        for j in range(k):
            s.cup(a - k + j, d)
        add_clasp(s, 0, a, d)
        add_clasp(s, a, b, e)
        c = qbinom(a, k) * qbinom(b, k) / qbinom(a + b + 1, k)
        terms.append((-c if k % 2 else c, s.close()))
    return tuple(reduce_element(terms).items())


def white_dlow_position(n: int, i: int) -> int:
    """Position of the first D_low point in the white vertex's ccw boundary."""
    return n


@lru_cache(maxsize=None)
def white_vertex_web(n: int, i: int, x: str = "u") -> Tuple[Tuple[RatFunc, Web], ...]:
    """White vertex as a disk with top boundary U, D_up, D_low, L.

    ``x`` is the strip direction of the U leg.
    """
    if not 0 <= i <= n:
        raise DiagramError(f"white vertex needs 0 <= i <= n, got i={i}, n={n}")
    y = flip_dir(x)
    s = Strip()
    for j in range(n - i):
        s.cup(j, x)
    for j in range(i):
        s.cup(n - i + j, x)
    for j in range(i):
        s.cup(n + i + j, x)
    add_clasp(s, 0, n, x)
    add_double_clasp(s, n, i, i, y)
    add_clasp(s, n + 2 * i, n, y)
    return tuple(reduce_element([(ONE, s.close())]).items())


register_expansion("P", lambda lab: list(clasp_web(lab[1], lab[2])))
register_expansion("D", lambda lab: list(double_clasp_web(lab[1], lab[2], lab[3])))
register_expansion("W", lambda lab: list(white_vertex_web(lab[1], lab[2], lab[3])))


def place_box(s: Strip, pos: int, nb: int, label: tuple, port: int, anchor: int) -> Strip:
    """Insert box ``label`` so that its port ``port`` meets expansion point ``anchor``.

    The top directions are read off the expansion, and the bottom ports are
    checked against the strands they consume.
    """
    _, disk = expansion(label)[0]
    bnd = ccw_boundary(disk)
    size = len(bnd)
    nt = size - nb
    if nt < 0:
        raise DiagramError("box has fewer ports than inputs")
    if size == 0:
        # an empty box (n = 0) is the empty web
        return s
    off = (anchor - port) % size

    def strand_dir(p):
        # a box port carries a strand leaving the box iff the expansion's
        # boundary point receives it
        h = disk.rot[bnd[(p + off) % size]][0]
        return disk.hd[h] == "i"

    for p in range(nb):
        leaving = strand_dir(p)
        want = "d" if leaving else "u"
        if s.dirs[pos + p] != want:
            raise DiagramError(f"box {label!r}: port {p} has direction {s.dirs[pos + p]}, expected {want}")
    top = []
    for t in range(nt):
        p = size - 1 - t  # top ports run right to left
        top.append("u" if strand_dir(p) else "d")
    s.box(pos, nb, label, top, off)
    return s


def expand_clasp(n: int, d: str = "u"):
    """The clasp P_n as a reduced skein element on n parallel strands."""
    from .skein import SkeinElement

    out = SkeinElement()
    for c, w in clasp_web(n, d):
        out.add(c, w)
    return out


def expand_double_clasp(m: int, n: int, d: str = "u"):
    """The (m, n) double clasp as a reduced skein element."""
    from .skein import SkeinElement

    out = SkeinElement()
    for c, w in double_clasp_web(m, n, d):
        out.add(c, w)
    return out
