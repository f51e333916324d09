"""Colored triangle-free triangulations of a 2k-gon.

Polygon vertices are ``0 .. 2k-1`` in clockwise order.  A chord is stored as
``(a, b, color)`` with ``a < b``.  All checks are combinatorial on the cyclic
order; no coordinates are involved.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, List, Optional, Tuple

__all__ = [
    "ColoredTriangulation",
    "Violation",
    "InvalidFlipError",
    "t0",
    "validate",
    "flip",
    "rotate",
    "flip_word",
    "shift_word",
    "reachable",
    "parse_triangulation",
    "format_triangulation",
]

Chord = Tuple[int, int, int]


class InvalidFlipError(ValueError):
    pass


@dataclass(frozen=True)
class Violation:
    rule: str
    detail: str

    def __str__(self):
        return f"{self.rule}: {self.detail}"


@dataclass(frozen=True)
class ColoredTriangulation:
    k: int
    chords: Tuple[Chord, ...]

    def __post_init__(self):
        m = 2 * self.k
        norm = []
        for a, b, c in self.chords:
            a, b = a % m, b % m
            if a > b:
                a, b = b, a
            norm.append((a, b, int(c)))
        object.__setattr__(self, "chords", tuple(sorted(norm, key=lambda ch: ch[2])))

    @property
    def size(self) -> int:
        return 2 * self.k

    def chord(self, color: int) -> Tuple[int, int]:
        for a, b, c in self.chords:
            if c == color:
                return a, b
        raise KeyError(f"no chord colored {color}")

    def segments(self) -> set:
        """Chords and polygon edges as unordered vertex pairs."""
        m = self.size
        segs = {frozenset((i, (i + 1) % m)) for i in range(m)}
        segs.update(frozenset((a, b)) for a, b, _ in self.chords)
        return segs

    def check(self) -> "ColoredTriangulation":
        v = validate(self)
        if v is not None:
            raise ValueError(str(v))
        return self

    def __str__(self):
        return ", ".join(f"q{a}-q{b}:{c}" for a, b, c in self.chords)


def _crosses(m: int, a: int, b: int, c: int, d: int) -> bool:
    if len({a, b, c, d}) < 4:
        return False

    def inside(x):
        return (x - a) % m < (b - a) % m

    return inside(c) != inside(d)


def _triangles(T: ColoredTriangulation) -> List[Tuple[int, int, int]]:
    segs = T.segments()
    return [
        tri
        for tri in combinations(range(T.size), 3)
        if all(frozenset(p) in segs for p in combinations(tri, 2))
    ]


def validate(T: ColoredTriangulation) -> Optional[Violation]:
    """Return the first violated rule, or None when ``T`` is valid."""
    k, m = T.k, T.size
    if k < 2:
        return Violation("size", f"k must be >= 2, got {k}")
    if len(T.chords) != m - 3:
        return Violation("count", f"expected {m - 3} chords, got {len(T.chords)}")
    seen = set()
    for a, b, _ in T.chords:
        if a == b or (b - a) % m in (1, m - 1):
            return Violation("chord", f"q{a}-q{b} is not a diagonal")
        if (a, b) in seen:
            return Violation("chord", f"q{a}-q{b} appears twice")
        seen.add((a, b))
    for (a, b, _), (c, d, _) in combinations(T.chords, 2):
        if _crosses(m, a, b, c, d):
            return Violation("crossing", f"q{a}-q{b} crosses q{c}-q{d}")
    chord_set = {frozenset((a, b)) for a, b, _ in T.chords}
    for tri in combinations(range(m), 3):
        if all(frozenset(p) in chord_set for p in combinations(tri, 2)):
            return Violation("triangle", "chords q%d, q%d, q%d bound a triangle" % tri)
    colors = sorted(c for _, _, c in T.chords)
    if colors != list(range(m - 3)):
        return Violation("coloring", f"colors {colors} are not 0..{m - 4}")
    color_of = {frozenset((a, b)): c for a, b, c in T.chords}
    for tri in _triangles(T):
        cs = [color_of[frozenset(p)] for p in combinations(tri, 2) if frozenset(p) in color_of]
        if len(cs) == 2 and abs(cs[0] - cs[1]) != 1:
            return Violation("coloring rule (2)", "triangle q%d q%d q%d has colors %s" % (tri + (cs,)))
    a, b = T.chord(0)
    if (b - a) % m not in (2, m - 2):
        return Violation("coloring rule (1)", f"color 0 on q{a}-q{b}, not a short chord")
    return None


def t0(k: int) -> ColoredTriangulation:
    """The zigzag triangulation whose color-0 chord is q_{k-1} q_{k+1}."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    left, right = k - 1, k + 1
    chords = [(left, right, 0)]
    color = 1
    while len(chords) < 2 * k - 3:
        if color % 2:
            left -= 1
        else:
            right += 1
        chords.append((left, right, color))
        color += 1
    return ColoredTriangulation(k, tuple(chords))


def flip(T: ColoredTriangulation, color: int) -> ColoredTriangulation:
    """Replace the chord of the given color by the other diagonal of its quadrilateral."""
    a, b = T.chord(color)
    segs = T.segments()
    apex = [x for x in range(T.size) if x not in (a, b)
            and frozenset((a, x)) in segs and frozenset((b, x)) in segs]
    # keep the two apexes on opposite sides of a-b that bound empty triangles
    m = T.size
    side1 = [x for x in apex if 0 < (x - a) % m < (b - a) % m]
    side2 = [x for x in apex if x not in side1]

    def empty(x):
        return not any(_crosses(m, x, y, c, d) for c, d, _ in T.chords for y in (a, b))

    side1 = [x for x in side1 if empty(x)]
    side2 = [x for x in side2 if empty(x)]
    if len(side1) != 1 or len(side2) != 1:
        raise InvalidFlipError(f"no quadrilateral around q{a}-q{b}")
    x, y = side1[0], side2[0]
    chords = tuple((x, y, c) if c == color else (p, q, c) for p, q, c in T.chords)
    out = ColoredTriangulation(T.k, chords)
    v = validate(out)
    if v is not None:
        raise InvalidFlipError(f"flipping color {color} breaks {v}")
    return out


def rotate(T: ColoredTriangulation, m: int) -> ColoredTriangulation:
    return ColoredTriangulation(T.k, tuple((a + m, b + m, c) for a, b, c in T.chords))


def _neighbours(T: ColoredTriangulation):
    for c in range(T.size - 3):
        try:
            yield c, flip(T, c)
        except InvalidFlipError:
            continue


def flip_word(source: ColoredTriangulation, target: ColoredTriangulation) -> List[int]:
    """Shortest list of colors whose flips, applied in order, turn source into target."""
    if source == target:
        return []
    prev = {source: None}
    queue = deque([source])
    while queue:
        cur = queue.popleft()
        for c, nxt in _neighbours(cur):
            if nxt in prev:
                continue
            prev[nxt] = (cur, c)
            if nxt == target:
                word = []
                node = nxt
                while prev[node] is not None:
                    node, col = prev[node]
                    word.append(col)
                return word[::-1]
            queue.append(nxt)
    raise ValueError("target is not reachable by colored flips")


def apply_word(T: ColoredTriangulation, word: Iterable[int]) -> ColoredTriangulation:
    for c in word:
        T = flip(T, c)
    return T


def shift_word(k: int) -> List[int]:
    """Flip colors (in application order) carrying t0(k) to rotate(t0(k), 1).

    Odd colors first, then even ones; falls back to a breadth-first search if
    that word does not realise the rotation.
    """
    m = 2 * k
    word = list(range(1, m - 3, 2)) + list(range(0, m - 3, 2))
    target = rotate(t0(k), 1)
    try:
        if apply_word(t0(k), word) == target:
            return word
    except InvalidFlipError:
        pass
    return flip_word(t0(k), target)


def reachable(T: ColoredTriangulation) -> set:
    """All colored triangulations reachable from T by colored flips."""
    seen = {T}
    queue = deque([T])
    while queue:
        cur = queue.popleft()
        for _, nxt in _neighbours(cur):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen


def parse_triangulation(text: str, k: Optional[int] = None) -> ColoredTriangulation:
    """Parse lines ``a b color``; ``#`` starts a comment."""
    chords = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        a, b, c = (int(x) for x in line.split())
        chords.append((a, b, c))
    if k is None:
        k = (len(chords) + 3) // 2
    return ColoredTriangulation(k, tuple(chords))


def format_triangulation(T: ColoredTriangulation) -> str:
    return "".join(f"{a} {b} {c}\n" for a, b, c in T.chords)
