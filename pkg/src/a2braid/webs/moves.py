"""A fixed catalogue of regular-isotopy moves on small tangles.

Each entry is ``(name, lhs, rhs)`` where both sides are open webs with the
same boundary.  Reducing both sides must give the same skein element.
"""

from __future__ import annotations

import itertools
from typing import Callable, List, Tuple

from .diagram import Strip, Web

__all__ = ["kink", "reidemeister_catalogue"]


def _strip(dirs, build: Callable[[Strip], None]) -> Web:
    s = Strip(list(dirs))
    build(s)
    return s.close()


def kink(s: Strip, pos: int, over: bool, right: bool) -> None:
    """Curl on strand ``pos``; the loop sits to its right or left."""
    d = s.dirs[pos]
    if right:
        s.cup(pos + 1, d)
        s.cross(pos, over)
        s.cap(pos + 1)
    else:
        s.cup(pos, "d" if d == "u" else "u")
        s.cross(pos + 1, over)
        s.cap(pos)


def _r1(out):
    for d, first, second in itertools.product("ud", (True, False), (True, False)):
        for o in (True, False):
            lhs = _strip(d, lambda s: (kink(s, 0, o, first), kink(s, 0, not o, second)))
            rhs = _strip(d, lambda s: None)
            out.append((f"R1' dir={d} over={o} sides={int(first)}{int(second)}", lhs, rhs))


def _r2(out):
    for dirs in itertools.product("ud", repeat=2):
        for o in (True, False):
            out.append((f"R2 dirs={''.join(dirs)} first_over={o}",
                        _strip(dirs, lambda s: (s.cross(0, o), s.cross(0, not o))),
                        _strip(dirs, lambda s: None)))


def _r3(out):
    for dirs in itertools.product("ud", repeat=3):
        for o in (True, False):
            out.append((f"R3 dirs={''.join(dirs)} over={o}",
                        _strip(dirs, lambda s: (s.cross(0, o), s.cross(1, o), s.cross(0, o))),
                        _strip(dirs, lambda s: (s.cross(1, o), s.cross(0, o), s.cross(1, o)))))


def _r4(out):
    for x, a in itertools.product("ud", repeat=2):
        for o in (True, False):
            # strand slides across a merge vertex from left to right
            out.append((f"R4 merge x={x} legs={a} over={o}",
                        _strip([x, a, a], lambda s: (s.merge(1), s.cross(0, o))),
                        _strip([x, a, a], lambda s: (s.cross(0, o), s.cross(1, o), s.merge(0)))))
            # and across a split vertex from right to left
            out.append((f"R4 split x={x} leg={a} over={o}",
                        _strip([a, x], lambda s: (s.cross(0, o), s.split(1))),
                        _strip([a, x], lambda s: (s.split(0), s.cross(1, o), s.cross(0, o)))))


def reidemeister_catalogue() -> List[Tuple[str, Web, Web]]:
    out: List[Tuple[str, Web, Web]] = []
    _r1(out)
    _r2(out)
    _r3(out)
    _r4(out)
    return out
