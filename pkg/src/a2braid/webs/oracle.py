"""Generator matrices computed directly from webs.

The basis webs for the initial triangulation are nested chains of white
vertices ending on 2k boundary bundles of n strands each.  A braid acts by
stacking its cabled diagram on top; coordinates are recovered by pairing
with mirrored basis webs and inverting the Gram matrix.  Everything here is
slow and independent of the closed formulas, which is the point.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from ..coefficients import ONE, ZERO, RatFunc
from ..linalg import RepMatrix
from .clasps import place_box, white_dlow_position
from .diagram import DiagramError, Strip, Web, compose, flip_dir
from .skein import Budget, SkeinElement, evaluate_closed, reduce_element

__all__ = ["bundle_dirs", "basis_web", "braid_web", "pair", "gram_matrix",
           "oracle_generator_matrix", "oracle_word_matrix", "generator_letters",
           "word_letters", "white_bigon", "white_bibigon", "theta_web_value",
           "tet_web_value", "flipped_basis_web", "oracle_flip_matrix"]


def bundle_dirs(n: int, k: int) -> List[str]:
    """Strip directions of the 2k boundary bundles, left to right."""
    out = []
    for p in range(1, 2 * k + 1):
        out += ["u" if p % 2 else "d"] * n
    return out


def _pdir(p: int) -> str:
    return "u" if p % 2 else "d"


def basis_web(n: int, k: int, js: Sequence[int]) -> Web:
    """Basis web of the initial triangulation with internal labels ``js``."""
    if k < 2:
        raise DiagramError("need k >= 2")
    if len(js) != k - 1:
        raise DiagramError(f"expected {k - 1} labels, got {len(js)}")
    s = Strip()
    # outermost vertex W_{2k-3} has legs P_1 and P_2k around chord 2k-4
    i = js[k - 2]
    place_box(s, 0, 0, ("W", n, i, _pdir(1)), n, white_dlow_position(n, i))
    pos = n  # start of the active bundle
    for m in range(2 * k - 4, -1, -1):
        if m == 0:
            i = js[0]
            place_box(s, pos, 2 * i, ("W", n, i, _pdir(k + 1)), 0, white_dlow_position(n, i))
        elif m % 2:
            # bottom: n-edge; top: P leg on the left, then chord m-1 bundle
            i = js[(m - 1) // 2]
            place_box(s, pos, n, ("W", n, i, _pdir(k - (m + 1) // 2)), n, white_dlow_position(n, i))
            pos += n
        else:
            # bottom: chord m bundle; top: n-edge, then P leg on the right
            i = js[m // 2]
            place_box(s, pos, 2 * i, ("W", n, i, _pdir(k + 1 + m // 2)), 0, white_dlow_position(n, i))
    w = s.close()
    if w.boundary_dirs()[1] != bundle_dirs(n, k):
        raise DiagramError("basis web boundary does not match the bundle directions")
    return w


def generator_letters(i: int, j: int) -> List[Tuple[int, int]]:
    """Artin letters (index, sign) of A_{i,j}, bottom to top."""
    if not 1 <= i < j:
        raise ValueError("need 1 <= i < j")
    word = [(t, -1) for t in range(j - 1, i, -1)]
    word += [(i, 1), (i, 1)]
    word += [(t, 1) for t in range(i + 1, j)]
    return word


def braid_web(n: int, k: int, letters: Sequence[Tuple[int, int]]) -> Web:
    """Cabled braid on the 2k bundles; letter (t, e) is sigma_t^e."""
    dirs = bundle_dirs(n, k)
    s = Strip(dirs)
    for t, e in letters:
        if not 1 <= t < 2 * k:
            raise ValueError(f"sigma_{t} out of range")
        a = (t - 1) * n
        for r in range(n):
            start = a + n - 1 - r
            for step in range(n):
                s.cross(start + step, e > 0)
    w = s.close()
    return w


def _closed_value(w: Web, budget: Budget) -> RatFunc:
    return reduce_element([(ONE, w)], budget=budget).scalar()


def pair(x: SkeinElement, y: SkeinElement, budget: Budget = None) -> RatFunc:
    """Evaluate sum of c*c' <y' on top of x'> over the terms of x and y."""
    if budget is None:
        budget = Budget()
    total = ZERO
    for c, w in x.items():
        for d, u in y.items():
            if w.bottom or u.top:
                raise DiagramError("pair needs a web with top boundary only and a mirrored one")
            total = total + c * d * RatFunc(evaluate_closed(compose(w, u), budget))
    return total


@lru_cache(maxsize=None)
def _reduced_basis(n: int, k: int) -> Tuple[Tuple[tuple, SkeinElement, SkeinElement], ...]:
    from ..braid import basis

    out = []
    for js in basis(n, k):
        w = basis_web(n, k, js)
        out.append((js, reduce_element([(ONE, w)]), reduce_element([(ONE, w.mirror())])))
    return tuple(out)


@lru_cache(maxsize=None)
def gram_matrix(n: int, k: int) -> RepMatrix:
    """G[i][s] = pairing of basis web i with the mirror of basis web s."""
    b = _reduced_basis(n, k)
    rows = [[pair(bi, ds) for _, _, ds in b] for _, bi, _ in b]
    return RepMatrix(rows, n, k, "gram")


def oracle_word_matrix(n: int, k: int, letters: Sequence[Tuple[int, int]], label: str = "word",
                       budget: Budget = None) -> RepMatrix:
    """Matrix of a braid (Artin letters, bottom to top) acting on the basis webs."""
    if budget is None:
        budget = Budget()
    b = _reduced_basis(n, k)
    layer = braid_web(n, k, letters)
    prows = []
    for _, bj, _ in b:
        acted = bj.map(lambda w: compose(w, layer), budget=budget)
        prows.append([pair(acted, ds, budget) for _, _, ds in b])
    p = RepMatrix(prows, n, k)
    mt = p @ gram_matrix(n, k).inverse()
    return RepMatrix(mt.transpose().rows, n, k, label)


def word_letters(word) -> List[Tuple[int, int]]:
    """Artin letters of a pure braid word, bottom to top.

    The rightmost generator acts first, so it sits at the bottom.
    """
    from ..braid import parse_word

    if isinstance(word, str):
        word = parse_word(word)
    out: List[Tuple[int, int]] = []
    for i, j, e in reversed(word.letters):
        lt = generator_letters(i, j)
        if e < 0:
            lt = [(t, -s) for t, s in reversed(lt)]
        out += lt
    return out


def oracle_generator_matrix(n: int, k: int, i: int, j: int, budget: Budget = None) -> RepMatrix:
    """Matrix of A_{i,j} computed from webs."""
    if not 1 <= i < j <= 2 * k:
        raise ValueError(f"A({i},{j}) is not a generator for k={k}")
    return oracle_word_matrix(n, k, generator_letters(i, j), f"A({i},{j})", budget)


# ---------------------------------------------------------------------------
# small webs behind the closed formulas


def _vertex_over_d(n: int, i: int) -> Web:
    """White vertex with its (i, i) leg at the bottom and both n-legs on top."""
    s = Strip(["u"] * i + ["d"] * i)
    place_box(s, 0, 2 * i, ("W", n, i, "d"), 0, white_dlow_position(n, i))
    return s.close()


def _vertex_over_n(n: int, i: int) -> Web:
    """White vertex with one n-leg at the bottom, the other n-leg and the (i, i) leg on top."""
    s = Strip(["u"] * n)
    place_box(s, 0, n, ("W", n, i, "u"), n, white_dlow_position(n, i))
    return s.close()


def white_bigon(n: int, i: int) -> SkeinElement:
    """Two white vertices joined by both n-legs, leaving the (i, i) legs open."""
    a = _vertex_over_d(n, i)
    return reduce_element([(ONE, compose(a, a.mirror()))])


def white_bibigon(n: int, i: int) -> SkeinElement:
    """Two white vertices joined by an n-leg and the (i, i) leg."""
    b = _vertex_over_n(n, i)
    return reduce_element([(ONE, compose(b, b.mirror()))])


def theta_web_value(n: int, i: int) -> RatFunc:
    """Closed theta web with legs n, n and (i, i)."""
    a = _vertex_over_d(n, i)
    return reduce_element([(ONE, compose(a, a.mirror()).closure())]).scalar()


def flipped_basis_web(n: int, j: int) -> Web:
    """k=2 basis web of the flipped triangulation: P1, P2 meet at one vertex."""
    s = Strip()
    place_box(s, 0, 0, ("W", n, j, "d"), 0, white_dlow_position(n, j))
    place_box(s, 2 * n, 2 * j, ("W", n, j, "d"), 0, white_dlow_position(n, j))
    return s.close()


@lru_cache(maxsize=None)
def _reduced_flipped(n: int):
    out = []
    for j in range(n + 1):
        w = flipped_basis_web(n, j)
        out.append((reduce_element([(ONE, w)]), reduce_element([(ONE, w.mirror())])))
    return tuple(out)


def tet_web_value(n: int, i: int, j: int) -> RatFunc:
    """Pairing of the k=2 basis web i with the mirrored flipped web j."""
    return pair(_reduced_basis(n, 2)[i][1], _reduced_flipped(n)[j][1])


def oracle_flip_matrix(n: int) -> RepMatrix:
    """S_0 at k=2 from webs: coordinates of the T0 basis in the flipped basis."""
    fl = _reduced_flipped(n)
    g = RepMatrix([[pair(a, d) for _, d in fl] for a, _ in fl])
    p = RepMatrix([[pair(bj, d) for _, d in fl] for _, bj, _ in _reduced_basis(n, 2)])
    return RepMatrix((p @ g.inverse()).transpose().rows, n, 2, "S0")
