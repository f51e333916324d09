"""Matrices of the pure braid group action on the triangle-free basis.

Basis vectors are tuples ``(j_0, ..., j_{k-2})`` with entries in ``0..n``,
ordered lexicographically.  A generator ``A(i, j)`` with ``1 <= i < j <= 2k``
acts on column vectors: column ``c`` of its matrix is the image of basis
vector ``c``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Dict, Iterable, List, Sequence, Tuple

from .coefficients import ONE, ZERO, RatFunc, monomial
from .linalg import RepMatrix
from .spider import clasp_twist_coeff, sixj_mixed, sixj_square, twist_coeff
from .triangulation import InvalidFlipError, flip, shift_word

__all__ = [
    "BasisIndex",
    "PureBraidWord",
    "basis_dim",
    "basis",
    "gen_central",
    "gen_even",
    "gen_odd",
    "flip_matrix",
    "shift_matrix",
    "rho_generator",
    "rho_word",
    "parse_word",
    "RelationResult",
    "birman_relations",
    "check_pure_braid_relations",
    "MIXED_SLOT_OFFSET",
]

# gen_even(t) mixes slot t + MIXED_SLOT_OFFSET
MIXED_SLOT_OFFSET = -1


class BasisIndex(tuple):
    """Labels ``(j_0, ..., j_{k-2})`` of a triangle-free basis web."""

    def __new__(cls, js: Iterable[int], n: int):
        js = tuple(int(j) for j in js)
        if any(not 0 <= j <= n for j in js):
            raise ValueError(f"basis labels {js} out of range 0..{n}")
        return super().__new__(cls, js)


def _check_nk(n: int, k: int) -> None:
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")


def basis_dim(n: int, k: int) -> int:
    _check_nk(n, k)
    return (n + 1) ** (k - 1)


@lru_cache(maxsize=None)
def basis(n: int, k: int) -> Tuple[Tuple[int, ...], ...]:
    _check_nk(n, k)
    return tuple(product(range(n + 1), repeat=k - 1))


def _slot_block(n: int, k: int, slot: int, block, label: str) -> RepMatrix:
    """Embed an (n+1)x(n+1) block ``block[target][source]`` acting on one slot."""
    idx = basis(n, k)
    pos = {b: r for r, b in enumerate(idx)}
    size = len(idx)
    rows = [[ZERO] * size for _ in range(size)]
    for c, src in enumerate(idx):
        for b in range(n + 1):
            x = block[b][src[slot]]
            if x.is_zero():
                continue
            tgt = src[:slot] + (b,) + src[slot + 1:]
            rows[pos[tgt]][c] = x
    return RepMatrix(rows, n, k, label)


def _diag(n: int, k: int, f, label: str) -> RepMatrix:
    return RepMatrix.diagonal([f(js) for js in basis(n, k)], n, k, label)


def _c(j: int) -> int:
    return j * j + 2 * j


@lru_cache(maxsize=None)
def gen_central(n: int, k: int) -> RepMatrix:
    """A(k, k+1)."""
    _check_nk(n, k)
    base = -4 * (n * n + 3 * n)
    return _diag(n, k, lambda js: monomial(base + 6 * _c(js[0])), f"A({k},{k + 1})")


def _check_t(k: int, t: int) -> None:
    if not 1 <= t <= k - 1:
        raise ValueError(f"t must be in 1..{k - 1}, got {t}")


@lru_cache(maxsize=None)
def _even_block(n: int):
    tw_clasp = [clasp_twist_coeff(a, "-") for a in range(n + 1)]
    block = [[ZERO] * (n + 1) for _ in range(n + 1)]
    for j in range(n + 1):
        tw = twist_coeff(n, j, "+")
        for b in range(n + 1):
            acc = ZERO
            for a in range(n + 1):
                acc = acc + tw_clasp[a] * sixj_square(n, j, a) * sixj_square(n, a, b)
            block[b][j] = tw * acc
    return block


@lru_cache(maxsize=None)
def gen_even(n: int, k: int, t: int, slot_offset: int = None) -> RepMatrix:
    """A(k-t, k+t); mixes slot ``t + slot_offset`` (default t-1)."""
    _check_nk(n, k)
    _check_t(k, t)
    off = MIXED_SLOT_OFFSET if slot_offset is None else slot_offset
    slot = t + off
    if not 0 <= slot <= k - 2:
        raise ValueError(f"mixed slot {slot} out of range for k={k}")
    return _slot_block(n, k, slot, _even_block(n), f"A({k - t},{k + t})")


@lru_cache(maxsize=None)
def gen_odd(n: int, k: int, t: int) -> RepMatrix:
    """A(k-t, k+t+1); a slot outside 0..k-2 contributes nothing."""
    _check_nk(n, k)
    _check_t(k, t)
    base = -4 * (n * n + 3 * n)

    def entry(js):
        e = base
        for s in (t, t - 1):
            if 0 <= s < len(js):
                e += 6 * _c(js[s])
        return monomial(e)

    return _diag(n, k, entry, f"A({k - t},{k + t + 1})")


def flip_matrix(n: int, k: int, T=None, c: int = 0) -> RepMatrix:
    """S_c with beta_T = beta_{T'} S_c for T' the flip of T along color c.

    The entries depend only on the color.  ``T`` (default: the initial
    triangulation) is checked for admissibility of the flip.
    """
    _check_nk(n, k)
    if not 0 <= c <= 2 * k - 4:
        raise ValueError(f"flip color must be in 0..{2 * k - 4}, got {c}")
    if T is not None:
        if T.k != k:
            raise ValueError(f"triangulation has k={T.k}, expected {k}")
        flip(T, c)
    return _flip_matrix(n, k, c)


@lru_cache(maxsize=None)
def _flip_matrix(n: int, k: int, c: int) -> RepMatrix:
    slot = c // 2
    if c % 2 == 0:
        block = [[sixj_square(n, j, b) for j in range(n + 1)] for b in range(n + 1)]
        return _slot_block(n, k, slot, block, f"S{c}")
    return _diag(n, k, lambda js: sixj_mixed(n, js[slot], js[slot + 1]), f"S{c}")


@lru_cache(maxsize=None)
def shift_matrix(n: int, k: int) -> RepMatrix:
    """Product of flip matrices realising one rotation step of T0.

    The flips are applied in the order returned by ``shift_word``; the
    matrix of the last flip ends up leftmost.
    """
    _check_nk(n, k)
    word = shift_word(k)
    out = RepMatrix.identity(basis_dim(n, k), n, k)
    for pos, c in enumerate(word):
        try:
            out = _flip_matrix(n, k, c) @ out
        except (InvalidFlipError, ValueError) as exc:
            raise InvalidFlipError(f"flip {c} at position {pos} of shift word: {exc}") from exc
    return out.relabel("S")


@lru_cache(maxsize=None)
def _shift_power(n: int, k: int, m: int) -> RepMatrix:
    if m == 0:
        return RepMatrix.identity(basis_dim(n, k), n, k)
    if m < 0:
        return _shift_power(n, k, -m).inverse()
    return _shift_power(n, k, m - 1) @ shift_matrix(n, k)


def _check_pair(k: int, i: int, j: int) -> None:
    if not 1 <= i < j <= 2 * k:
        raise ValueError(f"generator A({i},{j}) needs 1 <= i < j <= {2 * k}")


@lru_cache(maxsize=None)
def rho_generator(n: int, k: int, i: int, j: int) -> RepMatrix:
    """Matrix of A(i, j): a conjugate by S^(t'-k) of a T0-adapted generator."""
    _check_nk(n, k)
    _check_pair(k, i, j)
    t, tp = (j - i) // 2, (i + j) // 2
    if (i + j) % 2 == 0:
        base = gen_even(n, k, t)
    elif t == 0:
        base = gen_central(n, k)
    else:
        base = gen_odd(n, k, t)
    m = tp - k
    if m != 0:
        base = _shift_power(n, k, -m) @ base @ _shift_power(n, k, m)
    return base.relabel(f"A({i},{j})")


@lru_cache(maxsize=None)
def _rho_inverse(n: int, k: int, i: int, j: int) -> RepMatrix:
    return rho_generator(n, k, i, j).inverse()


@dataclass(frozen=True)
class PureBraidWord:
    """Letters ``(i, j, e)`` with ``e`` in ``{+1, -1}``, read left to right."""

    letters: Tuple[Tuple[int, int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple((int(i), int(j), int(e)) for i, j, e in self.letters))
        for i, j, e in self.letters:
            if not 1 <= i < j or e not in (1, -1):
                raise ValueError(f"bad letter A({i},{j})^{e}")

    def check(self, k: int) -> "PureBraidWord":
        for i, j, _ in self.letters:
            _check_pair(k, i, j)
        return self

    def inverse(self) -> "PureBraidWord":
        return PureBraidWord(tuple((i, j, -e) for i, j, e in reversed(self.letters)))

    def __add__(self, other: "PureBraidWord") -> "PureBraidWord":
        return PureBraidWord(self.letters + other.letters)

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(f"A({i},{j})" + ("^-1" if e < 0 else "") for i, j, e in self.letters)


_TOKEN = re.compile(r"\s*A\(\s*(\d+)\s*,\s*(\d+)\s*\)(\^-1|\^\{-1\})?\s*\*?")


def parse_word(text: str) -> PureBraidWord:
    """Parse ``"A(1,3) A(2,4)^-1"``; ``"1"`` or empty text is the identity."""
    text = text.strip()
    if text in ("", "1", "e"):
        return PureBraidWord()
    letters, pos = [], 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"cannot parse braid word at {text[pos:]!r}")
        letters.append((int(m.group(1)), int(m.group(2)), -1 if m.group(3) else 1))
        pos = m.end()
    return PureBraidWord(tuple(letters))


def rho_word(n: int, k: int, w) -> RepMatrix:
    """Matrix of a pure braid word, as a homomorphism: rho(ab) = rho(a) rho(b).

    In ``ab`` the braid ``b`` acts first, so ``a`` is glued above it.
    """
    if isinstance(w, str):
        w = parse_word(w)
    w.check(k)
    out = RepMatrix.identity(basis_dim(n, k), n, k)
    for i, j, e in w.letters:
        g = rho_generator(n, k, i, j) if e > 0 else _rho_inverse(n, k, i, j)
        out = out @ g
    return out.relabel(str(w) if len(w) == 1 else "word")


# ---------------------------------------------------------------------------
# Birman's presentation


@dataclass
class RelationResult:
    name: str
    lhs: PureBraidWord
    rhs: PureBraidWord
    passed: bool
    residual: RepMatrix = field(default=None, repr=False)

    def __str__(self):
        tag = "PASS" if self.passed else "FAIL"
        return f"{tag} {self.name}: {self.lhs} = {self.rhs}"


def _w(*letters) -> PureBraidWord:
    return PureBraidWord(tuple(letters))


def birman_relations(m: int) -> List[Tuple[str, PureBraidWord, PureBraidWord]]:
    """Conjugation relations A(r,s)^-1 A(i,j) A(r,s) = R for P_m.

    Indices ``1 <= r < s <= m`` and ``1 <= i < j <= m``; the four cases are
    the standard ones (disjoint or nested, s = i, i = r, crossing).
    """
    out = []
    pairs = [(a, b) for a in range(1, m + 1) for b in range(a + 1, m + 1)]
    for r, s in pairs:
        for i, j in pairs:
            lhs = _w((r, s, -1), (i, j, 1), (r, s, 1))
            if s < i or j < r or (i < r and s < j):
                name, rhs = "commute", _w((i, j, 1))
            elif s == i:
                name, rhs = "adjacent", _w((r, j, 1), (i, j, 1), (r, j, -1))
            elif i == r and s < j:
                name = "shared-left"
                rhs = _w((r, j, 1), (s, j, 1), (i, j, 1), (s, j, -1), (r, j, -1))
            elif r < i < s < j:
                name = "linked"
                rhs = _w((r, j, 1), (s, j, 1), (r, j, -1), (s, j, -1), (i, j, 1),
                         (s, j, 1), (r, j, 1), (s, j, -1), (r, j, -1))
            else:
                continue
            out.append((f"{name} r,s={r},{s} i,j={i},{j}", lhs, rhs))
    return out


def check_pure_braid_relations(n: int, k: int) -> List[RelationResult]:
    """Verify every Birman relation of P_{2k} on the matrices, exactly."""
    _check_nk(n, k)
    results = []
    for name, lhs, rhs in birman_relations(2 * k):
        diff = rho_word(n, k, lhs) - rho_word(n, k, rhs)
        ok = all(x.is_zero() for row in diff.rows for x in row)
        results.append(RelationResult(name, lhs, rhs, ok, None if ok else diff))
    return results
