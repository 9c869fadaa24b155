"""Columns, Lusztig heights, boxes and the Lusztig convex order.

A good numbering lists the simple roots in the order used to build columns;
roots keep their Bourbaki coordinates throughout.  Order positions are
1-based, so ``order.entries[0]`` is the root written beta_1 in the tables.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

import numpy as np

from .errors import DomainError, NumberingError, OrderError, WordError
from .roots import (
    LieType,
    Root,
    _simple_reflection_arrays,
    as_type,
    height,
    root_system,
    simple_root,
)

ORDINARY = "ordinary"
EXCEPTIONAL = "exceptional"


@dataclass(frozen=True)
class GoodNumbering:
    """Position ``p`` (1-based) of the good order holds Bourbaki label ``perm[p-1]``."""

    perm: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.perm) != list(range(1, len(self.perm) + 1)):
            raise NumberingError(f"{self.perm} is not a permutation of 1..{len(self.perm)}")

    @property
    def rank(self) -> int:
        return len(self.perm)

    def label(self, p: int) -> int:
        """Bourbaki label at good position ``p``."""
        return self.perm[p - 1]

    def position(self, label: int) -> int:
        """Good position of the Bourbaki label ``label``."""
        return self.perm.index(label) + 1


def default_good_numbering(t: LieType | str) -> GoodNumbering:
    t = as_type(t)
    n = t.rank
    if t.family == "F":
        return GoodNumbering((4, 3, 2, 1))
    if t.family == "E":
        return GoodNumbering((2, 5, 4, 3, 1, 6, 7, 8)[:n])
    return GoodNumbering(tuple(range(1, n + 1)))


def _as_numbering(t: LieType, numbering: GoodNumbering | Sequence[int] | None) -> GoodNumbering:
    if numbering is None:
        return default_good_numbering(t)
    if not isinstance(numbering, GoodNumbering):
        numbering = GoodNumbering(tuple(numbering))
    if numbering.rank != t.rank:
        raise NumberingError(f"numbering of length {numbering.rank} for rank {t.rank}")
    return numbering


@dataclass(frozen=True)
class ColumnRoot:
    root: Root
    height: int
    lheight: Fraction
    box: int


@dataclass(frozen=True)
class ColumnView:
    """The column ``C_j`` with its roots sorted by decreasing Lusztig height.

    Boxes are numbered 1, 2, ... from the highest ``lheight`` down.
    """

    index: int
    label: int
    roots: tuple[ColumnRoot, ...]
    beta_ex: Root | None

    @property
    def kind(self) -> str:
        return ORDINARY if self.beta_ex is None else EXCEPTIONAL

    @property
    def is_exceptional(self) -> bool:
        return self.beta_ex is not None

    @cached_property
    def root_set(self) -> frozenset[Root]:
        return frozenset(r.root for r in self.roots)

    @cached_property
    def _by_root(self) -> dict[Root, ColumnRoot]:
        return {r.root: r for r in self.roots}

    def __contains__(self, b: object) -> bool:
        return b in self._by_root

    def __len__(self) -> int:
        return len(self.roots)

    def info(self, b: Root) -> ColumnRoot:
        return self._by_root[b]

    @property
    def boxes(self) -> list[list[Root]]:
        out: list[list[Root]] = []
        for r in self.roots:
            if len(out) < r.box:
                out.append([])
            out[-1].append(r.root)
        return out

    @property
    def first(self) -> Root:
        """delta_j, the root of largest Lusztig height."""
        return self.roots[0].root

    @property
    def last(self) -> Root:
        """alpha_j itself, the root of Lusztig height 1."""
        return self.roots[-1].root


def _split_columns(t: LieType, numbering: GoodNumbering) -> list[list[Root]]:
    rs = root_system(t)
    n = t.rank
    cols: list[list[Root]] = [[] for _ in range(n)]
    for b in rs.positive:
        # column = last good position in the support
        j = max(p for p in range(1, n + 1) if b[numbering.label(p) - 1])
        cols[j - 1].append(b)
    return cols


def _column_ok(roots: list[Root], label: int) -> bool:
    ks = [b[label - 1] for b in roots]
    return all(k in (1, 2) for k in ks) and ks.count(2) <= 1


def is_good_numbering(t: LieType | str, perm: GoodNumbering | Sequence[int]) -> bool:
    """True when every column is ordinary or exceptional."""
    t = as_type(t)
    numbering = _as_numbering(t, perm)
    cols = _split_columns(t, numbering)
    return all(_column_ok(c, numbering.label(j)) for j, c in enumerate(cols, 1))


def columns(t: LieType | str, numbering: GoodNumbering | Sequence[int] | None = None) -> list[ColumnView]:
    t = as_type(t)
    numbering = _as_numbering(t, numbering)
    return list(_columns(t, numbering))


@lru_cache(maxsize=None)
def _columns(t: LieType, numbering: GoodNumbering) -> tuple[ColumnView, ...]:
    out = []
    for j, roots in enumerate(_split_columns(t, numbering), 1):
        lab = numbering.label(j)
        if not _column_ok(roots, lab):
            raise NumberingError(f"{numbering.perm} is not a good numbering of {t}: column {j}")
        lh = {b: Fraction(height(b), b[lab - 1]) for b in roots}
        roots = sorted(roots, key=lambda b: (-lh[b], tuple(-x for x in b)))
        levels = sorted(set(lh.values()), reverse=True)
        box_of = {v: i for i, v in enumerate(levels, 1)}
        ex = [b for b in roots if b[lab - 1] == 2]
        out.append(
            ColumnView(
                index=j,
                label=lab,
                roots=tuple(ColumnRoot(b, height(b), lh[b], box_of[lh[b]]) for b in roots),
                beta_ex=ex[0] if ex else None,
            )
        )
    return tuple(out)


def s_d_partner(beta: Sequence[int], col: ColumnView) -> Root:
    """``beta_ex - beta``: the image of ``beta`` under the reflection orthogonal to beta_ex's line."""
    beta = tuple(beta)
    if col.beta_ex is None:
        raise DomainError(f"column {col.index} is ordinary")
    if beta == col.beta_ex:
        raise DomainError("beta_ex has no partner")
    if beta not in col:
        raise DomainError(f"{beta} is not in column {col.index}")
    return tuple(e - b for e, b in zip(col.beta_ex, beta))


# -- orders ----------------------------------------------------------------


@dataclass(frozen=True)
class OrderEntry:
    pos: int
    root: Root
    column: int
    box: int
    height: int
    lheight: Fraction
    assoc_simple: int


@dataclass(frozen=True)
class LusztigOrder:
    type: LieType
    numbering: GoodNumbering
    word: tuple[int, ...]
    entries: tuple[OrderEntry, ...]

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, pos: int) -> OrderEntry:
        """Entry at the 1-based position ``pos``."""
        if not 1 <= pos <= len(self.entries):
            raise IndexError(pos)
        return self.entries[pos - 1]

    @property
    def roots(self) -> list[Root]:
        return [e.root for e in self.entries]

    @cached_property
    def _pos(self) -> dict[Root, int]:
        return {e.root: e.pos for e in self.entries}

    def position_of(self, b: Sequence[int]) -> int:
        return self._pos[tuple(b)]

    def __contains__(self, b: object) -> bool:
        return b in self._pos

    @cached_property
    def columns(self) -> tuple[ColumnView, ...]:
        return _columns(self.type, self.numbering)

    def column_positions(self, j: int) -> list[int]:
        return [e.pos for e in self.entries if e.column == j]

    def boxes(self, j: int) -> list[list[int]]:
        """Positions of column ``j`` grouped by box, in order."""
        out: dict[int, list[int]] = {}
        for e in self.entries:
            if e.column == j:
                out.setdefault(e.box, []).append(e.pos)
        return [out[k] for k in sorted(out)]


def _roots_of_word(word: Sequence[int], t: LieType) -> list[Root]:
    n = t.rank
    mats = _simple_reflection_arrays(root_system(t).cartan)
    m = np.eye(n, dtype=np.int64)
    out = []
    for i in word:
        if not (isinstance(i, (int, np.integer)) and 1 <= i <= n):
            raise WordError(f"letter {i!r} outside 1..{n}")
        out.append(tuple(int(x) for x in m[:, i - 1]))
        m = m @ mats[i - 1]
    return out


def _build(t: LieType, numbering: GoodNumbering, word: tuple[int, ...], roots: list[Root]) -> LusztigOrder:
    cols = _columns(t, numbering)
    where = {}
    for col in cols:
        for r in col.roots:
            where[r.root] = (col.index, r)
    entries = []
    for k, (b, i) in enumerate(zip(roots, word), 1):
        j, r = where[b]
        entries.append(OrderEntry(k, b, j, r.box, r.height, r.lheight, i))
    return LusztigOrder(t, numbering, word, tuple(entries))


def _check_lusztig(t: LieType, numbering: GoodNumbering, roots: list[Root]) -> None:
    cols = _columns(t, numbering)
    key = {}
    for col in cols:
        for r in col.roots:
            key[r.root] = (col.index, -r.lheight)
    for a, b in zip(roots, roots[1:]):
        if key[a] > key[b]:
            raise OrderError(f"{a} precedes {b} but is not earlier in the column/height order")


def word_to_order(
    word: Iterable[int],
    t: LieType | str,
    numbering: GoodNumbering | Sequence[int] | None = None,
) -> LusztigOrder:
    """The order beta_k = s_{i_1}...s_{i_{k-1}}(alpha_{i_k}) induced by a word of w_0."""
    t = as_type(t)
    numbering = _as_numbering(t, numbering)
    word = tuple(int(i) for i in word)
    rs = root_system(t)
    roots = _roots_of_word(word, t)
    if len(word) != len(rs.positive):
        raise WordError(f"word has length {len(word)}, w_0 has length {len(rs.positive)}")
    if any(b not in rs.positive_set for b in roots) or len(set(roots)) != len(roots):
        raise WordError("word is not a reduced word of w_0")
    _check_lusztig(t, numbering, roots)
    return _build(t, numbering, word, roots)


def order_to_word(roots: Sequence[Sequence[int]], t: LieType | str) -> tuple[int, ...]:
    """Recover the reduced word of w_0 inducing a total order of the positive roots."""
    t = as_type(t)
    rs = root_system(t)
    roots = [tuple(b) for b in roots]
    if sorted(roots) != sorted(rs.positive):
        raise OrderError("the sequence is not an ordering of the positive roots")
    n = t.rank
    mats = _simple_reflection_arrays(rs.cartan)
    simples = {simple_root(i, n): i for i in range(1, n + 1)}
    winv = np.eye(n, dtype=np.int64)
    word = []
    for b in roots:
        v = tuple(int(x) for x in winv @ np.array(b, dtype=np.int64))
        i = simples.get(v)
        if i is None:
            raise OrderError(f"order is not induced by a reduced word at root {b}")
        word.append(i)
        winv = mats[i - 1] @ winv
    return tuple(word)


def is_convex(roots: Sequence[Sequence[int]], t: LieType | str) -> bool:
    """Every sum of two roots sits strictly between them."""
    rs = root_system(as_type(t))
    pos = {tuple(b): k for k, b in enumerate(roots)}
    for a, ka in pos.items():
        for b, kb in pos.items():
            if ka < kb:
                s = tuple(x + y for x, y in zip(a, b))
                if s in rs.positive_set and not (ka < pos.get(s, -1) < kb):
                    return False
    return True


# -- canonical words -------------------------------------------------------


def _word_a(n: int) -> list[int]:
    return [i for l in range(1, n + 1) for i in range(l, 0, -1)]


def _word_bc(n: int) -> list[int]:
    w = [1]
    for l in range(2, n + 1):
        w += list(range(l, 1, -1)) + [1] + list(range(2, l + 1))
    return w


def _word_d(n: int) -> list[int]:
    w = [1, 2]
    for l in range(3, n + 1):
        w += list(range(l, 2, -1)) + [1, 2] + list(range(3, l + 1))
    return w


_F4 = "4 3 4 2 3 4 2 3 2 1 2 3 4 2 3 1 2 1 3 4 2 3 2 1"
_E6_SUFFIX = "6 5 4 2 3 1 4 3 5 4 6 2 5 4 3 1"
_E7_SUFFIX = "7 6 5 4 2 3 1 4 3 5 4 6 2 5 7 4 6 3 5 1 4 2 3 4 5 6 7"
_E8_SUFFIX = (
    "8 7 6 5 4 2 3 1 4 3 5 4 6 2 5 7 4 6 8 3 5 7 1 4 6 3 2 5 4 5 "
    "2 3 6 1 4 7 3 5 8 4 6 2 5 7 4 6 3 5 1 4 2 3 4 5 6 7 8"
)
# D5 labels as Bourbaki labels of the E6 diagram
_D5_IN_E = (2, 5, 4, 3, 1)


def _letters(s: str) -> list[int]:
    return [int(x) for x in s.split()]


def canonical_word(t: LieType | str) -> tuple[int, ...]:
    """The reduced word of w_0 used for the tables of each type."""
    t = as_type(t)
    n, f = t.rank, t.family
    if f == "A":
        w = _word_a(n)
    elif f in ("B", "C"):
        w = _word_bc(n)
    elif f == "D":
        w = _word_d(n)
    elif f == "G":
        w = [1, 2, 1, 2, 1, 2]
    elif f == "F":
        w = _letters(_F4)
    else:
        w = [_D5_IN_E[k - 1] for k in _word_d(5)] + _letters(_E6_SUFFIX)
        if n >= 7:
            w += _letters(_E7_SUFFIX)
        if n == 8:
            w += _letters(_E8_SUFFIX)
    return tuple(w)


@lru_cache(maxsize=None)
def _canonical_order(t: LieType) -> LusztigOrder:
    return word_to_order(canonical_word(t), t)


def canonical_order(t: LieType | str) -> LusztigOrder:
    return _canonical_order(as_type(t))


def lusztig_order(
    t: LieType | str,
    numbering: GoodNumbering | Sequence[int] | None = None,
    rng: random.Random | int | None = None,
) -> LusztigOrder:
    """A Lusztig order with box-internal ties broken lexicographically or at random.

    With ``rng=None`` ties are broken by decreasing coordinates; otherwise
    ``rng`` (a seed or a ``random.Random``) shuffles each box.
    """
    t = as_type(t)
    numbering = _as_numbering(t, numbering)
    if rng is not None and not isinstance(rng, random.Random):
        rng = random.Random(rng)
    roots: list[Root] = []
    for col in _columns(t, numbering):
        for box in col.boxes:
            box = list(box)
            if rng is not None:
                rng.shuffle(box)
            roots += box
    return _build(t, numbering, order_to_word(roots, t), roots)
