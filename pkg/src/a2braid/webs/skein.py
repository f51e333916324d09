"""Reduction of web diagrams by the A2 bracket relations.

Closed webs evaluate to Laurent polynomials.  Open webs reduce to linear
combinations of webs without internal bigons or squares, keyed by a
canonical form so equal webs collect.
"""

from __future__ import annotations

import os
from itertools import count
from collections import deque
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from ..coefficients import ONE, ZERO, LaurentPoly, RatFunc, monomial, qint
from .diagram import DiagramError, Web

__all__ = [
    "BudgetExceeded",
    "Budget",
    "SkeinElement",
    "resolve_crossing",
    "evaluate_closed",
    "reduce_element",
    "canonical_key",
    "substitute_box",
    "register_expansion",
    "resolve_crossings",
    "reduce",
]

_ONE_LP = LaurentPoly.const(1)
_Q2 = qint(2)
_Q3 = qint(3)


class BudgetExceeded(RuntimeError):
    """Raised when a reduction takes more rewriting steps than allowed."""


class Budget:
    def __init__(self, limit: Optional[int] = None):
        if limit is None:
            limit = int(os.environ.get("A2REP_BUDGET", "1000000"))
        self.limit = limit
        self.used = 0

    def tick(self, k: int = 1) -> None:
        self.used += k
        if self.used > self.limit:
            raise BudgetExceeded(f"reduction exceeded {self.limit} steps")


# ---------------------------------------------------------------------------
# local moves


def _crossing_frame(w: Web, v: int) -> Tuple[int, int, int, int]:
    """Ports of a crossing as (SW, SE, NE, NW) in a frame where both strands point up."""
    hs = w.rot[v]
    for i in range(4):
        if w.hd[hs[i]] == "i" and w.hd[hs[(i + 1) % 4]] == "i":
            return hs[i], hs[(i + 1) % 4], hs[(i + 2) % 4], hs[(i + 3) % 4]
    raise DiagramError(f"crossing {v} is not transverse")


def resolve_crossing(w: Web, v: int) -> List[Tuple[LaurentPoly, Web]]:
    """Two-term bracket expansion of crossing ``v``."""
    sw, se, ne, nw = _crossing_frame(w, v)
    positive = sw in w.over[v]
    a, b = (LaurentPoly.mono(2), -LaurentPoly.mono(-1)) if positive else (LaurentPoly.mono(-2), -LaurentPoly.mono(1))

    smooth = w.copy()
    smooth.reconnect(sw, nw)
    smooth.reconnect(se, ne)
    smooth.remove_vertex(v)

    h = w.copy()
    s, (s_mid, s_sw, s_se) = h.add_vertex("snk", "iii")
    t, (t_ne, t_nw, t_mid) = h.add_vertex("src", "ooo")
    for old, new in ((sw, s_sw), (se, s_se), (ne, t_ne), (nw, t_nw)):
        h.transplant(old, new)
    h.link(s_mid, t_mid)
    h.remove_vertex(v)
    return [(a, smooth), (b, h)]


def _faces(w: Web):
    """Yield faces as lists of half-edges, each leaving a vertex along the face."""
    pos = {}
    for v, hs in w.rot.items():
        for i, h in enumerate(hs):
            pos[h] = i
    seen = set()
    for h0 in w.mate:
        if h0 in seen:
            continue
        face = []
        h = h0
        while True:
            seen.add(h)
            face.append(h)
            m = w.mate[h]
            hs = w.rot[w.hv[m]]
            h = hs[(pos[m] + 1) % len(hs)]
            if h == h0:
                break
            if len(face) > len(w.mate):
                raise DiagramError("face tracing did not close up")
        yield face


def _reducible_face(w: Web):
    square = None
    for face in _faces(w):
        L = len(face)
        if L not in (2, 4):
            continue
        vs = [w.hv[h] for h in face]
        if len(set(vs)) != L or any(w.kind[v] not in ("src", "snk") for v in vs):
            continue
        if L == 2:
            return face
        if square is None:
            square = face
    return square


def _externals(w: Web, face: List[int]) -> List[int]:
    L = len(face)
    out = []
    for t, h in enumerate(face):
        prev_in = w.mate[face[t - 1]]
        v = w.hv[h]
        (e,) = [x for x in w.rot[v] if x != h and x != prev_in]
        out.append(e)
    return out


def _apply_face(w: Web, face: List[int]) -> List[Tuple[LaurentPoly, Web]]:
    ext = _externals(w, face)
    vs = [w.hv[h] for h in face]
    if len(face) == 2:
        out = w.copy()
        out.reconnect(ext[0], ext[1])
        for v in vs:
            out.remove_vertex(v)
        return [(_Q2, out)]
    res = []
    for pairs in (((0, 1), (2, 3)), ((1, 2), (3, 0))):
        out = w.copy()
        for a, b in pairs:
            out.reconnect(ext[a], ext[b])
        for v in vs:
            out.remove_vertex(v)
        res.append((_ONE_LP, out))
    return res


# ---------------------------------------------------------------------------
# components and canonical keys


def _components(w: Web) -> List[set]:
    seen, comps = set(), []
    for v0 in w.kind:
        if v0 in seen:
            continue
        comp = {v0}
        queue = deque([v0])
        seen.add(v0)
        while queue:
            v = queue.popleft()
            for h in w.rot[v]:
                u = w.hv[w.mate[h]]
                if u not in seen:
                    seen.add(u)
                    comp.add(u)
                    queue.append(u)
        comps.append(comp)
    return comps


def _subweb(w: Web, verts: set) -> Web:
    s = Web()
    for v in verts:
        s.kind[v] = w.kind[v]
        s.rot[v] = list(w.rot[v])
        for h in w.rot[v]:
            s.hv[h] = v
            s.hd[h] = w.hd[h]
            s.mate[h] = w.mate[h]
        if v in w.over:
            s.over[v] = w.over[v]
        if v in w.label:
            s.label[v] = w.label[v]
            s.offset[v] = w.offset[v]
    s.bottom = [v for v in w.bottom if v in verts]
    s.top = [v for v in w.top if v in verts]
    s._ids = count(s.max_id() + 1)
    return s


def _split_closed(w: Web) -> Tuple[Web, List[Web]]:
    """Separate closed components from the part touching the boundary."""
    bd = set(w.bottom) | set(w.top)
    comps = _components(w)
    closed = [c for c in comps if not (c & bd)]
    if not closed:
        return w, []
    rest = _subweb(w, set().union(*[c for c in comps if c & bd]))
    rest.circles = w.circles
    return rest, [_subweb(w, c) for c in closed]


def _traverse(w: Web, starts: Iterable[int]) -> tuple:
    label: Dict[int, int] = {}
    entry: Dict[int, int] = {}
    order: List[int] = []
    records = []

    def ordered(v):
        hs = w.rot[v]
        i = hs.index(entry[v])
        return hs[i:] + hs[:i]

    def visit(v, e):
        label[v] = len(order)
        entry[v] = e
        order.append(v)

    # boundary anchors are labelled up front so their identity is part of the key
    for s in starts:
        if w.hv[s] not in label:
            visit(w.hv[s], s)
    k = 0
    pending = sorted(w.kind)
    while True:
        if k == len(order):
            rest = [v for v in pending if v not in label]
            if not rest:
                break
            visit(rest[0], w.rot[rest[0]][0])
        u = order[k]
        k += 1
        hs = ordered(u)
        nbrs = []
        for h in hs:
            m = w.mate[h]
            x = w.hv[m]
            if x not in label:
                visit(x, m)
            nbrs.append((label[x], ordered(x).index(m)))
        rec = [w.kind[u], "".join(w.hd[h] for h in hs), tuple(nbrs)]
        if u in w.over:
            rec.append(tuple(i for i, h in enumerate(hs) if h in w.over[u]))
        if u in w.label:
            shift = w.rot[u].index(entry[u])
            rec.append((w.label[u], (w.offset[u] + shift) % len(hs)))
        records.append(tuple(rec))
    return tuple(records)


def canonical_key(w: Web) -> tuple:
    """Key identifying an open web up to planar isotopy fixing the boundary."""
    starts = [w.rot[v][0] for v in w.bottom + w.top]
    return (len(w.bottom), len(w.top), _traverse(w, starts))


def _closed_key(w: Web) -> tuple:
    srcs = [v for v, k in w.kind.items() if k == "src"] or list(w.kind)
    best = None
    for v in srcs:
        for h in w.rot[v]:
            key = _traverse(w, [h])
            if best is None or key < best:
                best = key
    return best


# ---------------------------------------------------------------------------
# closed evaluation


_MEMO: Dict[tuple, LaurentPoly] = {}


def _circles_value(c: int) -> LaurentPoly:
    return _Q3 ** c if c else _ONE_LP


def evaluate_closed(w: Web, budget: Optional[Budget] = None) -> LaurentPoly:
    """Bracket value of a closed web (crossings allowed, no boxes)."""
    if budget is None:
        budget = Budget()
    if w.label:
        raise DiagramError("expand boxes before evaluating")
    w = w.copy().drop_passes()
    value = _circles_value(w.circles)
    w.circles = 0
    for comp in _components(w):
        sub = _subweb(w, comp)
        value = value * _eval_connected(sub, budget)
        if value.is_zero():
            break
    return value


def _eval_connected(w: Web, budget: Budget) -> LaurentPoly:
    if not w.kind:
        return _ONE_LP
    key = _closed_key(w)
    hit = _MEMO.get(key)
    if hit is not None:
        return hit
    budget.tick()
    xs = [v for v, k in w.kind.items() if k == "X"]
    if xs:
        terms = resolve_crossing(w, xs[0])
    else:
        face = _reducible_face(w)
        if face is None:
            raise DiagramError("closed web without a bigon or square face")
        terms = _apply_face(w, face)
    total = LaurentPoly()
    for c, t in terms:
        total = total + c * evaluate_closed(t, budget)
    _MEMO[key] = total
    return total


# ---------------------------------------------------------------------------
# boxes


_EXPANSIONS: Dict[str, Callable] = {}


def register_expansion(tag: str, fn: Callable) -> None:
    """``fn(label) -> list of (RatFunc, Web)`` disk webs for boxes tagged ``tag``."""
    _EXPANSIONS[tag] = fn


def expansion(label: tuple) -> List[Tuple[RatFunc, Web]]:
    if label[0] == "mirror":
        return [(c, e.mirror()) for c, e in expansion(label[1])]
    try:
        fn = _EXPANSIONS[label[0]]
    except KeyError:
        raise DiagramError(f"no expansion registered for box {label!r}") from None
    return fn(label)


def ccw_boundary(w: Web) -> List[int]:
    return w.bottom + w.top[::-1]


def substitute_box(w: Web, v: int, disk: Web) -> Web:
    out = w.copy()
    d = disk.relabelled(out.max_id() + 1)
    for table in ("kind", "rot", "hv", "hd", "mate", "over", "label", "offset"):
        getattr(out, table).update(getattr(d, table))
    out.circles += d.circles
    ports = out.rot[v]
    bnd = ccw_boundary(d)
    if len(bnd) != len(ports):
        raise DiagramError(f"box has {len(ports)} ports, expansion has {len(bnd)}")
    off = out.offset[v]
    for p, h in enumerate(ports):
        b = bnd[(p + off) % len(ports)]
        hb = out.rot[b][0]
        if out.hd[h] == out.hd[hb]:
            raise DiagramError(f"box {out.label[v]!r} port {p} has the wrong direction")
        out.reconnect(h, hb)
    for b in bnd:
        out.remove_vertex(b)
    out.remove_vertex(v)
    out._ids = count(out.max_id() + 1)
    return out


# ---------------------------------------------------------------------------
# linear combinations


class SkeinElement:
    """Finite linear combination of reduced webs, keyed canonically."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Dict[tuple, Tuple[RatFunc, Web]]] = None):
        self.terms: Dict[tuple, Tuple[RatFunc, Web]] = dict(terms or {})

    @classmethod
    def from_web(cls, w: Web, coef=ONE, **kw) -> "SkeinElement":
        return reduce_element([(RatFunc._coerce(coef), w)], **kw)

    def add(self, coef: RatFunc, w: Web, key: Optional[tuple] = None) -> None:
        if key is None:
            key = canonical_key(w)
        if key in self.terms:
            c0, w0 = self.terms[key]
            c = c0 + coef
            if c.is_zero():
                del self.terms[key]
            else:
                self.terms[key] = (c, w0)
        elif not coef.is_zero():
            self.terms[key] = (coef, w)

    def items(self):
        return list(self.terms.values())

    def is_zero(self) -> bool:
        return not self.terms

    def scalar(self) -> RatFunc:
        """Value of an element whose webs are all empty."""
        total = ZERO
        for c, w in self.terms.values():
            if w.kind:
                raise DiagramError("element is not a scalar")
            total = total + c
        return total

    def __len__(self):
        return len(self.terms)

    def __add__(self, other: "SkeinElement") -> "SkeinElement":
        out = SkeinElement(self.terms)
        for k, (c, w) in other.terms.items():
            out.add(c, w, k)
        return out

    def __sub__(self, other: "SkeinElement") -> "SkeinElement":
        return self + other.scale(-ONE)

    def scale(self, x) -> "SkeinElement":
        x = RatFunc._coerce(x)
        if x.is_zero():
            return SkeinElement()
        return SkeinElement({k: (x * c, w) for k, (c, w) in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, SkeinElement):
            return NotImplemented
        if self.terms.keys() != other.terms.keys():
            return False
        return all(self.terms[k][0] == other.terms[k][0] for k in self.terms)

    def map(self, fn: Callable[[Web], Web], **kw) -> "SkeinElement":
        """Apply a diagram operation to every web, then reduce."""
        return reduce_element([(c, fn(w)) for c, w in self.terms.values()], **kw)

    def __repr__(self):
        return f"SkeinElement({len(self.terms)} webs)"


def _simplify(coef: RatFunc, w: Web, budget: Budget, out: SkeinElement, stack: list) -> None:
    """One rewriting step on a single term, pushing results to ``stack`` or ``out``."""
    budget.tick()
    if w.label:
        v = next(iter(w.label))
        for c, disk in expansion(w.label[v]):
            stack.append((coef * c, substitute_box(w, v, disk)))
        return
    w, closed = _split_closed(w)
    for comp in closed:
        val = _eval_connected_any(comp, budget)
        if val.is_zero():
            return
        coef = coef * RatFunc(val)
    face = _reducible_face(w)
    if face is not None:
        for c, t in _apply_face(w, face):
            stack.append((coef * RatFunc(c), t))
        return
    if w.circles:
        coef = coef * RatFunc(_circles_value(w.circles))
        w.circles = 0
    out.add(coef, w)


def _eval_connected_any(w: Web, budget: Budget) -> LaurentPoly:
    value = _circles_value(w.circles)
    w.circles = 0
    return value * _eval_connected(w, budget)


def reduce_element(terms: Iterable[Tuple[RatFunc, Web]], resolve: bool = True,
                   budget: Optional[Budget] = None) -> SkeinElement:
    """Expand boxes, optionally resolve crossings, and reduce every face.

    Crossings are resolved one at a time with like terms collected in
    between, which keeps intermediate sums small.
    """
    if budget is None:
        budget = Budget()
    stack = [(RatFunc._coerce(c), w.copy().drop_passes()) for c, w in terms]
    while True:
        out = SkeinElement()
        while stack:
            c, w = stack.pop()
            _simplify(c, w, budget, out, stack)
        if not resolve:
            return out
        pending = [(c, w) for c, w in out.terms.values() if "X" in w.kind.values()]
        if not pending:
            return out
        done = SkeinElement({k: t for k, t in out.terms.items() if "X" not in t[1].kind.values()})
        for c, w in pending:
            v = min(x for x, k in w.kind.items() if k == "X")
            for a, t in resolve_crossing(w, v):
                stack.append((c * RatFunc(a), t))
        for k, (c, w) in done.terms.items():
            stack.append((c, w))


def resolve_crossings(w: Web) -> SkeinElement:
    """Expand every crossing by the bracket, without any other rewriting."""
    stack = [(ONE, w.copy().drop_passes())]
    out = SkeinElement()
    while stack:
        c, u = stack.pop()
        xs = [v for v, k in u.kind.items() if k == "X"]
        if not xs:
            if u.circles:
                c = c * RatFunc(_circles_value(u.circles))
                u.circles = 0
            out.add(c, u)
            continue
        for a, t in resolve_crossing(u, min(xs)):
            stack.append((c * RatFunc(a), t))
    return out


def reduce(s, budget: Optional[Budget] = None) -> SkeinElement:
    """Fully reduce a web or a skein element to a combination of basis webs."""
    if isinstance(s, Web):
        return reduce_element([(ONE, s)], budget=budget)
    return reduce_element(s.items(), budget=budget)
