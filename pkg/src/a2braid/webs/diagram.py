"""Planar web diagrams as rotation systems.

A :class:`Web` is a combinatorial map.  Every vertex owns a list of
half-edges in counterclockwise order and ``mate`` pairs half-edges into
edges.  Each half-edge carries its direction relative to its vertex: ``'o'``
(edge leaves the vertex) or ``'i'``.

Vertex kinds:

``src`` / ``snk``
    trivalent source / sink
``X``
    crossing; ``over`` holds the two half-edges of the over strand
``bd``
    univalent boundary point
``pass``
    bivalent helper vertex, removed by :meth:`Web.drop_passes`
``box``
    clasp-like box awaiting expansion; ``label`` and ``offset`` describe it

Open webs list their boundary points in ``bottom`` and ``top`` (both left
to right, as in a horizontal strip read bottom to top).
"""

from __future__ import annotations

from itertools import count
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

__all__ = ["Web", "Strip", "DiagramError", "compose", "tensor_dirs", "flip_dir"]


class DiagramError(ValueError):
    pass


def flip_dir(d: str) -> str:
    return {"u": "d", "d": "u", "o": "i", "i": "o"}[d]


def tensor_dirs(*groups: Sequence[str]) -> List[str]:
    out: List[str] = []
    for g in groups:
        out.extend(g)
    return out


class Web:
    __slots__ = ("kind", "rot", "hv", "hd", "mate", "over", "label", "offset",
                 "bottom", "top", "circles", "_ids")

    def __init__(self):
        self.kind: Dict[int, str] = {}
        self.rot: Dict[int, List[int]] = {}
        self.hv: Dict[int, int] = {}
        self.hd: Dict[int, str] = {}
        self.mate: Dict[int, int] = {}
        self.over: Dict[int, frozenset] = {}
        self.label: Dict[int, tuple] = {}
        self.offset: Dict[int, int] = {}
        self.bottom: List[int] = []
        self.top: List[int] = []
        self.circles = 0
        self._ids = count()

    # -- construction ------------------------------------------------------
    def new_id(self) -> int:
        return next(self._ids)

    def add_vertex(self, kind: str, dirs: Sequence[str]) -> Tuple[int, List[int]]:
        v = self.new_id()
        hs = []
        for d in dirs:
            h = self.new_id()
            self.hv[h] = v
            self.hd[h] = d
            hs.append(h)
        self.kind[v] = kind
        self.rot[v] = hs
        return v, hs

    def link(self, a: int, b: int) -> None:
        if self.hd[a] == self.hd[b]:
            raise DiagramError(f"direction clash joining half-edges {a} and {b}")
        self.mate[a] = b
        self.mate[b] = a

    def reconnect(self, h1: int, h2: int) -> None:
        """Join the far ends of h1 and h2 (whose vertices are being removed)."""
        a, b = self.mate[h1], self.mate[h2]
        if a == h2:
            self.circles += 1
            return
        self.mate[a] = b
        self.mate[b] = a

    def transplant(self, old: int, new: int) -> None:
        """Attach ``new`` to the far end of ``old``."""
        f = self.mate[old]
        self.mate[new] = f
        self.mate[f] = new

    def remove_vertex(self, v: int) -> None:
        for h in self.rot.pop(v):
            self.hv.pop(h, None)
            self.hd.pop(h, None)
            self.mate.pop(h, None)
        self.kind.pop(v)
        self.over.pop(v, None)
        self.label.pop(v, None)
        self.offset.pop(v, None)

    def copy(self) -> "Web":
        w = Web.__new__(Web)
        w.kind = dict(self.kind)
        w.rot = {v: list(hs) for v, hs in self.rot.items()}
        w.hv = dict(self.hv)
        w.hd = dict(self.hd)
        w.mate = dict(self.mate)
        w.over = dict(self.over)
        w.label = dict(self.label)
        w.offset = dict(self.offset)
        w.bottom = list(self.bottom)
        w.top = list(self.top)
        w.circles = self.circles
        w._ids = count(max(self.hv.keys() | self.kind.keys() | {-1}) + 1)
        return w

    # -- queries -----------------------------------------------------------
    def boundary_dirs(self) -> Tuple[List[str], List[str]]:
        """Strip directions ('u'/'d') of the bottom and top boundary points."""
        bot = ["u" if self.hd[self.rot[v][0]] == "o" else "d" for v in self.bottom]
        top = ["u" if self.hd[self.rot[v][0]] == "i" else "d" for v in self.top]
        return bot, top

    def is_closed(self) -> bool:
        return not self.bottom and not self.top

    def count(self, kind: str) -> int:
        return sum(1 for k in self.kind.values() if k == kind)

    def check(self) -> None:
        for h, m in self.mate.items():
            if self.mate.get(m) != h:
                raise DiagramError(f"mate table is not an involution at {h}")
            if self.hd[h] == self.hd[m]:
                raise DiagramError(f"edge {h}-{m} is not consistently directed")
        for v, hs in self.rot.items():
            for h in hs:
                if h not in self.mate:
                    raise DiagramError(f"half-edge {h} of vertex {v} is dangling")
            k = self.kind[v]
            if k in ("src", "snk"):
                want = "o" if k == "src" else "i"
                if len(hs) != 3 or any(self.hd[h] != want for h in hs):
                    raise DiagramError(f"vertex {v} is not a proper {k}")
            elif k == "X":
                ds = [self.hd[h] for h in hs]
                if len(hs) != 4 or ds.count("i") != 2 or ds[0] == ds[2] or ds[1] == ds[3]:
                    raise DiagramError(f"crossing {v} is not transverse")

    # -- global operations -------------------------------------------------
    def drop_passes(self) -> "Web":
        for v in [v for v, k in self.kind.items() if k == "pass"]:
            a, b = self.rot[v]
            self.reconnect(a, b)
            self.remove_vertex(v)
        return self

    def mirror(self) -> "Web":
        """Reflect top to bottom and reverse every orientation."""
        w = self.copy()
        flip = {"src": "snk", "snk": "src"}
        for v in w.kind:
            w.rot[v] = w.rot[v][::-1]
            w.kind[v] = flip.get(w.kind[v], w.kind[v])
        for h in w.hd:
            w.hd[h] = flip_dir(w.hd[h])
        w.bottom, w.top = w.top, w.bottom
        for v in w.label:
            w.label[v] = ("mirror", w.label[v])
            w.offset[v] = -w.offset[v] % len(w.rot[v])
        return w

    def relabelled(self, start: int) -> "Web":
        """Copy with all ids shifted so they start at ``start``."""
        shift = start
        w = Web.__new__(Web)
        w.kind = {v + shift: k for v, k in self.kind.items()}
        w.rot = {v + shift: [h + shift for h in hs] for v, hs in self.rot.items()}
        w.hv = {h + shift: v + shift for h, v in self.hv.items()}
        w.hd = {h + shift: d for h, d in self.hd.items()}
        w.mate = {h + shift: m + shift for h, m in self.mate.items()}
        w.over = {v + shift: frozenset(h + shift for h in s) for v, s in self.over.items()}
        w.label = {v + shift: l for v, l in self.label.items()}
        w.offset = {v + shift: o for v, o in self.offset.items()}
        w.bottom = [v + shift for v in self.bottom]
        w.top = [v + shift for v in self.top]
        w.circles = self.circles
        w._ids = count(max(w.hv.keys() | w.kind.keys() | {start - 1}) + 1)
        return w

    def closure(self) -> "Web":
        """Join top point j to bottom point j by arcs passing to the right."""
        if len(self.top) != len(self.bottom):
            raise DiagramError("closure needs as many top as bottom points")
        w = self.copy()
        for a, b in zip(w.bottom, w.top):
            w.reconnect(w.rot[a][0], w.rot[b][0])
            w.remove_vertex(a)
            w.remove_vertex(b)
        w.bottom, w.top = [], []
        return w

    def max_id(self) -> int:
        return max(self.hv.keys() | self.kind.keys() | {-1})

    def __repr__(self):
        kinds = {}
        for k in self.kind.values():
            kinds[k] = kinds.get(k, 0) + 1
        return f"Web({kinds}, bottom={len(self.bottom)}, top={len(self.top)}, circles={self.circles})"


def compose(lower: Web, upper: Web) -> Web:
    """Glue ``upper`` on top of ``lower``."""
    if len(lower.top) != len(upper.bottom):
        raise DiagramError(f"cannot glue {len(lower.top)} points to {len(upper.bottom)}")
    w = lower.copy()
    up = upper.relabelled(w.max_id() + 1)
    for table in ("kind", "rot", "hv", "hd", "mate", "over", "label", "offset"):
        getattr(w, table).update(getattr(up, table))
    w.circles += up.circles
    for a, b in zip(w.top, up.bottom):
        ha, hb = w.rot[a][0], w.rot[b][0]
        if w.hd[ha] == w.hd[hb]:
            raise DiagramError("boundary directions do not match when gluing")
        w.reconnect(ha, hb)
        w.remove_vertex(a)
        w.remove_vertex(b)
    w.top = up.top
    w._ids = count(w.max_id() + 1)
    return w


# ---------------------------------------------------------------------------
# Strip builder


class Strip:
    """Build a web layer by layer, bottom to top.

    ``dirs`` tracks the current strands ('u' = oriented upward).  Every new
    vertex gets its half-edges in the order bottom ports left to right, then
    top ports right to left, which is counterclockwise in the plane.
    """

    def __init__(self, bottom: Sequence[str] = ()):
        self.web = Web()
        self.ends: List[int] = []  # dangling half-edges of the current strands
        self.dirs: List[str] = []
        for d in bottom:
            v, (h,) = self.web.add_vertex("bd", ["o" if d == "u" else "i"])
            self.web.bottom.append(v)
            self.ends.append(h)
            self.dirs.append(d)

    @property
    def width(self) -> int:
        return len(self.dirs)

    # a generic block replacing strands [pos, pos+nb) by nt new strands
    def _block(self, kind: str, pos: int, nb: int, top_dirs: Sequence[str]) -> int:
        if pos < 0 or pos + nb > self.width:
            raise DiagramError(f"block at {pos} with {nb} inputs exceeds width {self.width}")
        below = self.dirs[pos:pos + nb]
        hd = ["i" if d == "u" else "o" for d in below]
        hd += ["o" if d == "u" else "i" for d in reversed(top_dirs)]
        v, hs = self.web.add_vertex(kind, hd)
        for h, e in zip(hs[:nb], self.ends[pos:pos + nb]):
            self.web.link(h, e)
        new_ends = list(reversed(hs[nb:]))
        self.ends[pos:pos + nb] = new_ends
        self.dirs[pos:pos + nb] = list(top_dirs)
        return v

    def cup(self, pos: int, left_dir: str) -> "Strip":
        self._block("pass", pos, 0, [left_dir, flip_dir(left_dir)])
        return self

    def cap(self, pos: int) -> "Strip":
        a, b = self.dirs[pos:pos + 2]
        if a == b:
            raise DiagramError("cap needs opposite directions")
        self.web.link(self.ends[pos], self.ends[pos + 1])
        del self.ends[pos:pos + 2]
        del self.dirs[pos:pos + 2]
        return self

    def merge(self, pos: int) -> "Strip":
        a, b = self.dirs[pos:pos + 2]
        if a != b:
            raise DiagramError("merge needs equal directions")
        self._block("snk" if a == "u" else "src", pos, 2, [flip_dir(a)])
        return self

    def split(self, pos: int) -> "Strip":
        a = self.dirs[pos]
        self._block("snk" if a == "u" else "src", pos, 1, [flip_dir(a)] * 2)
        return self

    def cross(self, pos: int, sw_over: bool = True) -> "Strip":
        """Crossing of strands pos, pos+1; ``sw_over`` puts the strand from
        the lower left on top (sigma_i in the usual pictures)."""
        a, b = self.dirs[pos:pos + 2]
        v = self._block("X", pos, 2, [b, a])
        bl, br, tr, tl = self.web.rot[v]
        self.web.over[v] = frozenset((bl, tr) if sw_over else (br, tl))
        return self

    def box(self, pos: int, nb: int, label: tuple, top_dirs: Sequence[str], offset: int = 0) -> "Strip":
        v = self._block("box", pos, nb, top_dirs)
        self.web.label[v] = label
        self.web.offset[v] = offset
        return self

    def close(self) -> Web:
        for d, h in zip(self.dirs, self.ends):
            v, (b,) = self.web.add_vertex("bd", ["i" if d == "u" else "o"])
            self.web.link(b, h)
            self.web.top.append(v)
        self.ends = []
        w = self.web
        w.drop_passes()
        return w
