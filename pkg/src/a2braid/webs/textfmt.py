"""Plain-text format for web diagrams.

One record per line; ``#`` starts a comment.  Ids are non-negative integers,
vertex ids and half-edge ids share one namespace.

::

    V <vid> <src|snk|bd> <h> ...          vertex and its half-edges, ccw
    X <vid> <h1> <h2> <h3> <h4> over <a> <b>
                                          crossing; a, b form the over strand
    BOX <vid> <tag:arg:...> <offset> <h> ...
                                          clasp-like box, e.g. P:2:u or W:1:1:d
    E <h> <h'>                            directed edge from h to h'
    BOTTOM <vid>:<sign> ...               bottom boundary, left to right
    TOP <vid>:<sign> ...                  top boundary, left to right

A boundary sign is ``+`` when the strand runs upward through the point and
``-`` otherwise.  A closed diagram has no BOTTOM/TOP lines.
"""

from __future__ import annotations

from itertools import count
from typing import Dict, List

from .diagram import DiagramError, Web

__all__ = ["parse_diagram", "format_diagram"]


def _label_from_token(tok: str) -> tuple:
    parts = tok.split(":")
    out = [parts[0]]
    for p in parts[1:]:
        out.append(int(p) if p.lstrip("-").isdigit() else p)
    return tuple(out)


def _label_token(label: tuple) -> str:
    if label[0] == "mirror":
        raise DiagramError("mirrored boxes cannot be written; expand them first")
    return ":".join(str(x) for x in label)


def parse_diagram(text: str) -> Web:
    w = Web()
    used = set()
    edges = []
    bottom: List[tuple] = []
    top: List[tuple] = []

    def claim(i: int, what: str) -> int:
        if i in used:
            raise DiagramError(f"id {i} used twice ({what})")
        used.add(i)
        return i

    def add(v: int, kind: str, hs: List[int]) -> None:
        claim(v, "vertex")
        w.kind[v] = kind
        w.rot[v] = [claim(h, "half-edge") for h in hs]
        for h in w.rot[v]:
            w.hv[h] = v

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        head = tok[0].upper()
        try:
            if head == "V":
                kind = tok[2]
                if kind not in ("src", "snk", "bd"):
                    raise DiagramError(f"unknown vertex kind {kind!r}")
                hs = [int(x) for x in tok[3:]]
                want = 1 if kind == "bd" else 3
                if len(hs) != want:
                    raise DiagramError(f"{kind} vertex needs {want} half-edges")
                add(int(tok[1]), kind, hs)
            elif head == "X":
                if len(tok) != 9 or tok[6] != "over":
                    raise DiagramError("expected: X <vid> h1 h2 h3 h4 over a b")
                v = int(tok[1])
                hs = [int(x) for x in tok[2:6]]
                ov = frozenset(int(x) for x in tok[7:9])
                if not ov <= set(hs) or len(ov) != 2:
                    raise DiagramError("over strand must name two of the crossing's half-edges")
                i, j = sorted(hs.index(h) for h in ov)
                if j - i != 2:
                    raise DiagramError("over strand must use opposite half-edges")
                add(v, "X", hs)
                w.over[v] = ov
            elif head == "BOX":
                v = int(tok[1])
                add(v, "box", [int(x) for x in tok[4:]])
                w.label[v] = _label_from_token(tok[2])
                w.offset[v] = int(tok[3])
            elif head == "E":
                if len(tok) != 3:
                    raise DiagramError("expected: E <from> <to>")
                edges.append((int(tok[1]), int(tok[2])))
            elif head in ("BOTTOM", "TOP"):
                pts = []
                for t in tok[1:]:
                    vid, _, sign = t.partition(":")
                    if sign not in ("+", "-"):
                        raise DiagramError(f"boundary point {t!r} needs a sign + or -")
                    pts.append((int(vid), sign))
                (bottom if head == "BOTTOM" else top).extend(pts)
            else:
                raise DiagramError(f"unknown record {tok[0]!r}")
        except (ValueError, IndexError) as exc:
            raise DiagramError(f"line {lineno}: {exc}") from None
        except DiagramError as exc:
            raise DiagramError(f"line {lineno}: {exc}") from None

    for a, b in edges:
        for h in (a, b):
            if h not in w.hv:
                raise DiagramError(f"edge uses unknown half-edge {h}")
            if h in w.mate:
                raise DiagramError(f"half-edge {h} is on two edges")
        w.hd[a], w.hd[b] = "o", "i"
        w.mate[a], w.mate[b] = b, a
    missing = [h for h in w.hv if h not in w.mate]
    if missing:
        raise DiagramError(f"half-edges without an edge: {sorted(missing)}")

    for side, pts, up in (("bottom", bottom, "o"), ("top", top, "i")):
        for v, sign in pts:
            if w.kind.get(v) != "bd":
                raise DiagramError(f"{side} point {v} is not a bd vertex")
            h = w.rot[v][0]
            if (w.hd[h] == up) != (sign == "+"):
                raise DiagramError(f"{side} point {v} has sign {sign} but the strand disagrees")
            (w.bottom if side == "bottom" else w.top).append(v)
    listed = set(w.bottom) | set(w.top)
    stray = [v for v, k in w.kind.items() if k == "bd" and v not in listed]
    if stray:
        raise DiagramError(f"bd vertices not on BOTTOM or TOP: {stray}")
    w.check()
    w._ids = count(w.max_id() + 1)
    return w


def format_diagram(w: Web) -> str:
    lines = []
    for v in sorted(w.kind):
        k = w.kind[v]
        hs = " ".join(str(h) for h in w.rot[v])
        if k == "X":
            a, b = sorted(w.over[v])
            lines.append(f"X {v} {hs} over {a} {b}")
        elif k == "box":
            lines.append(f"BOX {v} {_label_token(w.label[v])} {w.offset[v]} {hs}")
        elif k == "pass":
            raise DiagramError("drop pass vertices before formatting")
        else:
            lines.append(f"V {v} {k} {hs}")
    for h in sorted(w.mate):
        if w.hd[h] == "o":
            lines.append(f"E {h} {w.mate[h]}")
    bot, top = w.boundary_dirs()
    if w.bottom:
        lines.append("BOTTOM " + " ".join(f"{v}:{'+' if d == 'u' else '-'}" for v, d in zip(w.bottom, bot)))
    if w.top:
        lines.append("TOP " + " ".join(f"{v}:{'+' if d == 'u' else '-'}" for v, d in zip(w.top, top)))
    return "\n".join(lines) + "\n"
