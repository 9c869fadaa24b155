"""Cauchon diagrams: the predicate, enumeration, exact counting and w^Delta.

A diagram is a set of order positions.  It is Cauchon when it satisfies
every implication of :func:`cauchon.implications.derive_all`.  Implications
never leave a column, so everything here works one column at a time and
multiplies.

Counting uses a frontier dynamic programme over the positions of a column in
Lusztig order.  A position stays in the state only while some implication
touching it is still open, so the state stays tiny even for the 57 roots of
the last column of E8.
"""
from __future__ import annotations

import math
import os
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np

from .errors import SizeError
from .implications import Implication, ImplicationGraph, derive_all
from .lusztig import ColumnView, LusztigOrder, canonical_order
from .roots import (
    LieType,
    _length_of_array,
    _simple_reflection_arrays,
    as_type,
    root_system,
    weyl_order,
)

DEFAULT_MAX_COLUMN_SCAN = 24


def max_column_scan() -> int:
    """Largest column enumerated exhaustively (``CAUCHON_MAX_COLUMN_SCAN`` overrides)."""
    raw = os.environ.get("CAUCHON_MAX_COLUMN_SCAN")
    return int(raw) if raw else DEFAULT_MAX_COLUMN_SCAN


@dataclass(frozen=True)
class Diagram:
    """A subset of the order positions ``1..n`` stored as a bit mask (bit ``p-1`` for ``p``)."""

    n: int
    bits: int = 0

    @classmethod
    def from_positions(cls, positions: Iterable[int], n: int) -> "Diagram":
        bits = 0
        for p in positions:
            if not 1 <= p <= n:
                raise ValueError(f"position {p} outside 1..{n}")
            bits |= 1 << (p - 1)
        return cls(n, bits)

    @property
    def positions(self) -> tuple[int, ...]:
        return tuple(p for p in range(1, self.n + 1) if self.bits >> (p - 1) & 1)

    def __contains__(self, p: object) -> bool:
        return isinstance(p, int) and 1 <= p <= self.n and bool(self.bits >> (p - 1) & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(self.positions)

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def __or__(self, other: "Diagram") -> "Diagram":
        return Diagram(max(self.n, other.n), self.bits | other.bits)

    def restrict(self, positions: Iterable[int]) -> "Diagram":
        mask = sum(1 << (p - 1) for p in positions)
        return Diagram(self.n, self.bits & mask)


@dataclass(frozen=True)
class ColumnCountReport:
    """Counts of column diagrams bucketed by their last position (``None`` for the empty one)."""

    column: int
    total: int
    per_start: dict[int | None, int]


# -- helpers ---------------------------------------------------------------


@lru_cache(maxsize=None)
def _canonical_graph(t: LieType) -> ImplicationGraph:
    return derive_all(canonical_order(t))


def graph_for(obj: "LieType | str | LusztigOrder | ImplicationGraph") -> ImplicationGraph:
    """Implication graph of a type (canonical order), an order, or a graph."""
    if isinstance(obj, ImplicationGraph):
        return obj
    if isinstance(obj, LusztigOrder):
        return derive_all(obj)
    return _canonical_graph(as_type(obj))


def _column_index(col: int | ColumnView) -> int:
    return col.index if isinstance(col, ColumnView) else int(col)


def _positions(j: int, g: ImplicationGraph) -> list[int]:
    return sorted(p for p, c in g.column_of.items() if c == j)


def _columns_of(g: ImplicationGraph) -> list[int]:
    return sorted(set(g.column_of.values()))


def is_cauchon(d: Diagram | Iterable[int], g: ImplicationGraph) -> bool:
    members = set(d.positions) if isinstance(d, Diagram) else set(d)
    return all(imp.holds(members) for imp in g)


# -- counting --------------------------------------------------------------


def _closing(positions: Sequence[int], imps: Sequence[Implication]):
    """For each position, the implications it closes and the positions it retires."""
    last_use = {p: p for p in positions}
    closes: dict[int, list[Implication]] = defaultdict(list)
    for imp in imps:
        top = max(imp.positions)
        closes[top].append(imp)
        for q in imp.positions:
            last_use[q] = max(last_use[q], top)
    retire: dict[int, list[int]] = defaultdict(list)
    for q, top in last_use.items():
        retire[top].append(q)
    return closes, retire


def _frontier_count(
    positions: Sequence[int],
    imps: Sequence[Implication],
    forced: Mapping[int, bool] | None = None,
) -> int:
    forced = forced or {}
    closes, retire = _closing(positions, imps)
    states: dict[frozenset[int], int] = {frozenset(): 1}
    for p in positions:
        choices = (forced[p],) if p in forced else (False, True)
        nxt: dict[frozenset[int], int] = defaultdict(int)
        for live, cnt in states.items():
            for inside in choices:
                members = live | {p} if inside else live
                if all(imp.holds(members) for imp in closes[p]):
                    nxt[frozenset(members)] += cnt
        gone = retire[p]
        if gone:
            merged: dict[frozenset[int], int] = defaultdict(int)
            for live, cnt in nxt.items():
                merged[live.difference(gone)] += cnt
            nxt = merged
        states = nxt
    return sum(states.values())


def count_column(col: int | ColumnView, g: ImplicationGraph) -> int:
    """Exact number of subsets of the column satisfying its implications."""
    j = _column_index(col)
    return _frontier_count(_positions(j, g), g.column(j))


def per_start_counts(col: int | ColumnView, g: ImplicationGraph) -> ColumnCountReport:
    """Column diagrams bucketed by their last member in the Lusztig order."""
    j = _column_index(col)
    positions = _positions(j, g)
    imps = g.column(j)
    per: dict[int | None, int] = {None: 1}
    for k, p in enumerate(positions):
        forced = {p: True, **{q: False for q in positions[k + 1 :]}}
        per[p] = _frontier_count(positions, imps, forced)
    return ColumnCountReport(j, sum(per.values()), per)


def brute_force_count(col: int | ColumnView, g: ImplicationGraph, chunk: int = 1 << 20) -> int:
    """Count by scanning every subset of the column with numpy (independent of the DP)."""
    j = _column_index(col)
    positions = _positions(j, g)
    return int(sum(len(m) for m in _scan(positions, g.column(j), chunk)))


def _scan(positions: Sequence[int], imps: Sequence[Implication], chunk: int = 1 << 20) -> Iterator[np.ndarray]:
    """Yield, chunk by chunk, the local masks over ``positions`` that satisfy ``imps``."""
    k = len(positions)
    if k > 40:
        raise SizeError(f"{k} positions are too many for an exhaustive scan")
    bit = {p: i for i, p in enumerate(positions)}
    total = 1 << k
    for start in range(0, total, chunk):
        m = np.arange(start, min(total, start + chunk), dtype=np.int64)
        ok = np.ones(len(m), dtype=bool)
        for imp in imps:
            src = (m >> bit[imp.src]) & 1
            hit = np.zeros(len(m), dtype=bool)
            for q in imp.targets:
                hit |= ((m >> bit[q]) & 1).astype(bool)
            ok &= (src == 0) | hit
        yield m[ok]


def brute_force_diagrams(g: ImplicationGraph, max_positions: int = 24) -> set[Diagram]:
    """Every Cauchon diagram found by scanning all subsets of all positions at once.

    This ignores the column structure entirely and is the oracle for
    :func:`enumerate_all` on small types.
    """
    positions = sorted(g.column_of)
    n = len(positions)
    if n > max_positions:
        raise SizeError(f"{n} positions exceed the scan limit {max_positions}")
    out = set()
    for masks in _scan(positions, list(g)):
        out.update(Diagram(n, int(m)) for m in masks)
    return out


def count_all(obj: "LieType | str | LusztigOrder | ImplicationGraph") -> int:
    """Number of Cauchon diagrams: the product of the column counts."""
    g = graph_for(obj)
    return math.prod(count_column(j, g) for j in _columns_of(g))


# -- enumeration -----------------------------------------------------------


def _iter_column(j: int, g: ImplicationGraph) -> Iterator[Diagram]:
    positions = _positions(j, g)
    n = len(g.column_of)
    closes, _ = _closing(positions, g.column(j))

    def walk(k: int, members: set[int]) -> Iterator[Diagram]:
        if k == len(positions):
            yield Diagram.from_positions(members, n)
            return
        p = positions[k]
        for inside in (False, True):
            if inside:
                members.add(p)
            if all(imp.holds(members) for imp in closes[p]):
                yield from walk(k + 1, members)
            if inside:
                members.discard(p)

    return walk(0, set())


def enumerate_column(col: int | ColumnView, g: ImplicationGraph, threshold: int | None = None) -> list[Diagram]:
    """All valid subsets of one column, as diagrams over every position."""
    j = _column_index(col)
    limit = max_column_scan() if threshold is None else threshold
    size = len(_positions(j, g))
    if size > limit:
        raise SizeError(f"column {j} has {size} roots, above the scan limit {limit}; use count_column")
    return list(_iter_column(j, g))


def enumerate_all(
    obj: "LieType | str | LusztigOrder | ImplicationGraph",
    limit: int | None = None,
) -> Iterator[Diagram]:
    """Lazily yield Cauchon diagrams, column by column.

    Without ``limit`` every column must be within the scan threshold.  With a
    limit, large columns are walked lazily and at most ``limit`` diagrams are
    produced.
    """
    g = graph_for(obj)
    cols = _columns_of(g)
    if limit is None:
        lists = [enumerate_column(j, g) for j in cols]
        gen = _product_lists(lists, Diagram(len(g.column_of)))
    else:
        gen = _product_lazy(cols, g, 0, Diagram(len(g.column_of)))
    for k, d in enumerate(gen):
        if limit is not None and k >= limit:
            return
        yield d


def _product_lists(lists: list[list[Diagram]], acc: Diagram, k: int = 0) -> Iterator[Diagram]:
    if k == len(lists):
        yield acc
        return
    for d in lists[k]:
        yield from _product_lists(lists, acc | d, k + 1)


def _product_lazy(cols: list[int], g: ImplicationGraph, k: int, acc: Diagram) -> Iterator[Diagram]:
    if k == len(cols):
        yield acc
        return
    for d in _iter_column(cols[k], g):
        yield from _product_lazy(cols, g, k + 1, acc | d)


# -- Weyl group elements ---------------------------------------------------


def weyl_word_of_diagram(d: Diagram | Iterable[int], order: LusztigOrder) -> tuple[int, ...]:
    """Associated simple roots of the members of ``d``, in increasing position."""
    positions = d.positions if isinstance(d, Diagram) else sorted(d)
    return tuple(order[p].assoc_simple for p in positions)


@dataclass(frozen=True)
class BijectionReport:
    type: LieType
    diagrams: int
    all_reduced: bool
    all_distinct: bool
    image_size: int
    weyl_order: int

    @property
    def ok(self) -> bool:
        return self.all_reduced and self.all_distinct and self.image_size == self.weyl_order


def verify_bijection(obj: "LieType | str | LusztigOrder") -> BijectionReport:
    """Check that Delta -> w^Delta is injective, reduced and onto W.

    Products are accumulated column by column, so each diagram costs one
    matrix product per column.
    """
    order = obj if isinstance(obj, LusztigOrder) else canonical_order(obj)
    g = graph_for(order)
    cartan = root_system(order.type).cartan
    mats = _simple_reflection_arrays(cartan)
    n = order.type.rank
    per_col = []
    for j in _columns_of(g):
        items = []
        for d in enumerate_column(j, g):
            m = np.eye(n, dtype=np.int64)
            for i in weyl_word_of_diagram(d, order):
                m = m @ mats[i - 1]
            items.append((len(d), m))
        per_col.append(items)

    seen: set[bytes] = set()
    count = 0
    reduced = True

    def walk(k: int, size: int, m: np.ndarray) -> None:
        nonlocal count, reduced
        if k == len(per_col):
            count += 1
            seen.add(m.tobytes())
            if reduced and _length_of_array(m, cartan) != size:
                reduced = False
            return
        for s, cm in per_col[k]:
            walk(k + 1, size + s, m @ cm)

    walk(0, 0, np.eye(n, dtype=np.int64))
    return BijectionReport(
        type=order.type,
        diagrams=count,
        all_reduced=reduced,
        all_distinct=len(seen) == count,
        image_size=len(seen),
        weyl_order=weyl_order(order.type),
    )
