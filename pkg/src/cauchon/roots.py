"""Cartan data, positive roots, reflections and Weyl group elements.

Roots are plain tuples of integers: the coefficients over the simple roots,
indexed by the Bourbaki labels of the Dynkin diagrams used throughout the
package (label ``i`` lives at tuple index ``i - 1``).  Short roots have squared
length 2, so every inner product is an integer.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

import numpy as np

from .errors import DomainError, RankError

Root = tuple[int, ...]

_MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4, "E": 6, "F": 4, "G": 2}
_FIXED_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}

_DEGREES_EXCEPTIONAL = {
    ("E", 6): (2, 5, 6, 8, 9, 12),
    ("E", 7): (2, 6, 8, 10, 12, 14, 18),
    ("E", 8): (2, 8, 12, 14, 18, 20, 24, 30),
    ("F", 4): (2, 6, 8, 12),
    ("G", 2): (2, 6),
}


@dataclass(frozen=True, order=True)
class LieType:
    """A Cartan type such as ``A3`` or ``E8``."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in _MIN_RANK:
            raise RankError(f"unknown family {self.family!r}")
        if self.family in _FIXED_RANKS:
            if self.rank not in _FIXED_RANKS[self.family]:
                raise RankError(f"type {self.family} has no rank {self.rank}")
        elif self.rank < _MIN_RANK[self.family]:
            raise RankError(
                f"type {self.family} needs rank >= {_MIN_RANK[self.family]}, got {self.rank}"
            )

    @classmethod
    def parse(cls, token: str) -> "LieType":
        m = re.fullmatch(r"\s*([A-Ga-g])_?(\d+)\s*", token)
        if m is None:
            raise RankError(f"cannot parse Lie type {token!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def as_type(t: LieType | str) -> LieType:
    return t if isinstance(t, LieType) else LieType.parse(t)


@dataclass(frozen=True)
class CartanData:
    """Cartan matrix ``a``, symmetrizers ``d`` and the pairing ``ip``.

    ``ip[i][j] = d[i] * a[i][j]`` is the inner product of the simple roots
    ``i`` and ``j`` (0-based indices here).
    """

    a: tuple[tuple[int, ...], ...]
    d: tuple[int, ...]
    ip: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.d)

    @cached_property
    def ip_array(self) -> np.ndarray:
        return np.array(self.ip, dtype=np.int64)


def _dynkin(t: LieType) -> tuple[list[int], list[tuple[int, int]]]:
    """Squared lengths of the simple roots and the (0-based) diagram edges."""
    n, f = t.rank, t.family
    chain = [(i, i + 1) for i in range(n - 1)]
    if f == "A":
        return [2] * n, chain
    if f == "B":
        return [2] + [4] * (n - 1), chain
    if f == "C":
        return [4] + [2] * (n - 1), chain
    if f == "D":
        return [2] * n, [(0, 2), (1, 2)] + [(i, i + 1) for i in range(2, n - 1)]
    if f == "E":
        edges = [(0, 2), (1, 3), (2, 3)] + [(i, i + 1) for i in range(3, n - 1)]
        return [2] * n, edges
    if f == "F":
        return [4, 4, 2, 2], chain
    return [2, 6], chain  # G2, alpha_1 short


def build_cartan(t: LieType | str) -> CartanData:
    t = as_type(t)
    norms, edges = _dynkin(t)
    n = t.rank
    ip = [[0] * n for _ in range(n)]
    for i in range(n):
        ip[i][i] = norms[i]
    for i, j in edges:
        ip[i][j] = ip[j][i] = -max(norms[i], norms[j]) // 2
    a = tuple(tuple(2 * ip[i][j] // ip[i][i] for j in range(n)) for i in range(n))
    d = tuple(x // 2 for x in norms)
    return CartanData(a=a, d=d, ip=tuple(tuple(r) for r in ip))


def inner_product(a: Sequence[int], b: Sequence[int], cartan: CartanData) -> int:
    n = cartan.rank
    ip = cartan.ip
    return sum(a[i] * ip[i][j] * b[j] for i in range(n) if a[i] for j in range(n) if b[j])


def simple_root(i: int, n: int) -> Root:
    """The simple root with 1-based label ``i`` in rank ``n``."""
    return tuple(1 if k == i - 1 else 0 for k in range(n))


def is_positive(b: Sequence[int]) -> bool:
    return any(b) and all(x >= 0 for x in b)


def height(b: Sequence[int]) -> int:
    return sum(b)


def _reflect_simple(b: Root, i: int, cartan: CartanData) -> Root:
    # s_i(b) = b - <b, alpha_i^vee> alpha_i
    c = 2 * sum(cartan.ip[i][j] * b[j] for j in range(cartan.rank)) // cartan.ip[i][i]
    if c == 0:
        return b
    return b[:i] + (b[i] - c,) + b[i + 1 :]


@lru_cache(maxsize=None)
def _all_roots(cartan: CartanData) -> frozenset[Root]:
    n = cartan.rank
    seen = {simple_root(i, n) for i in range(1, n + 1)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for b in frontier:
            for i in range(n):
                r = _reflect_simple(b, i, cartan)
                if r not in seen:
                    seen.add(r)
                    nxt.append(r)
        frontier = nxt
    return frozenset(seen)


def positive_roots(cartan: CartanData) -> list[Root]:
    """Every positive root once, sorted by height then reverse-lexicographically."""
    pos = [b for b in _all_roots(cartan) if is_positive(b)]
    pos.sort(key=lambda b: (height(b), tuple(-x for x in b)))
    return pos


def is_root(b: Sequence[int], cartan: CartanData) -> bool:
    return tuple(b) in _all_roots(cartan)


def reflect(b: Sequence[int], mirror: Sequence[int], cartan: CartanData) -> Root:
    """Reflect ``b`` in the hyperplane orthogonal to the root ``mirror``."""
    mirror = tuple(mirror)
    if not is_root(mirror, cartan):
        raise DomainError(f"{mirror} is not a root")
    num = 2 * inner_product(b, mirror, cartan)
    den = inner_product(mirror, mirror, cartan)
    if num % den:
        raise DomainError(f"{tuple(b)} is not in the root lattice")
    c = num // den
    return tuple(x - c * m for x, m in zip(b, mirror))


# -- Weyl group ------------------------------------------------------------


@dataclass(frozen=True)
class WeylElement:
    """An element of W stored as its matrix on the simple-root basis.

    Column ``j`` of ``action`` is the image of the simple root ``j``.
    """

    action: tuple[tuple[int, ...], ...]

    @classmethod
    def from_array(cls, m: np.ndarray) -> "WeylElement":
        return cls(tuple(tuple(int(x) for x in row) for row in m))

    @classmethod
    def identity(cls, n: int) -> "WeylElement":
        return cls.from_array(np.eye(n, dtype=np.int64))

    @property
    def array(self) -> np.ndarray:
        return np.array(self.action, dtype=np.int64)

    def __matmul__(self, other: "WeylElement") -> "WeylElement":
        return WeylElement.from_array(self.array @ other.array)

    def __call__(self, b: Sequence[int]) -> Root:
        return apply(self, b)


@lru_cache(maxsize=None)
def _simple_reflection_arrays(cartan: CartanData) -> tuple[np.ndarray, ...]:
    n = cartan.rank
    mats = []
    for i in range(n):
        m = np.eye(n, dtype=np.int64)
        for j in range(n):
            m[i, j] -= cartan.a[i][j]
        m.setflags(write=False)
        mats.append(m)
    return tuple(mats)


def simple_reflection(i: int, cartan: CartanData) -> WeylElement:
    _check_letter(i, cartan.rank)
    return WeylElement.from_array(_simple_reflection_arrays(cartan)[i - 1])


def _check_letter(i: int, n: int) -> None:
    if not (isinstance(i, (int, np.integer)) and 1 <= i <= n):
        raise DomainError(f"letter {i!r} outside 1..{n}")


def word_array(word: Iterable[int], cartan: CartanData) -> np.ndarray:
    mats = _simple_reflection_arrays(cartan)
    n = cartan.rank
    m = np.eye(n, dtype=np.int64)
    for i in word:
        _check_letter(i, n)
        m = m @ mats[i - 1]
    return m


def word_product(word: Iterable[int], cartan: CartanData) -> WeylElement:
    """``s_{i_1} s_{i_2} ... s_{i_k}`` as a matrix."""
    return WeylElement.from_array(word_array(word, cartan))


def apply(w: WeylElement, b: Sequence[int]) -> Root:
    n = len(w.action)
    return tuple(sum(w.action[i][j] * b[j] for j in range(n)) for i in range(n))


@lru_cache(maxsize=None)
def _positive_array(cartan: CartanData) -> np.ndarray:
    arr = np.array(positive_roots(cartan), dtype=np.int64)
    arr.setflags(write=False)
    return arr


def _length_of_array(m: np.ndarray, cartan: CartanData) -> int:
    images = _positive_array(cartan) @ m.T
    return int(np.count_nonzero(images.sum(axis=1) < 0))


def length(w: WeylElement, cartan: CartanData) -> int:
    """Number of positive roots sent to negative roots."""
    return _length_of_array(w.array, cartan)


def is_reduced(word: Sequence[int], cartan: CartanData) -> bool:
    return _length_of_array(word_array(word, cartan), cartan) == len(word)


def weyl_order(t: LieType | str) -> int:
    """|W| as the product of the degrees of the basic invariants."""
    t = as_type(t)
    n = t.rank
    if t.family == "A":
        return math.factorial(n + 1)
    if t.family in ("B", "C"):
        return 2**n * math.factorial(n)
    if t.family == "D":
        return 2 ** (n - 1) * math.factorial(n)
    return math.prod(_DEGREES_EXCEPTIONAL[(t.family, n)])


def degrees(t: LieType | str) -> tuple[int, ...]:
    t = as_type(t)
    n = t.rank
    if t.family == "A":
        return tuple(range(2, n + 2))
    if t.family in ("B", "C"):
        return tuple(range(2, 2 * n + 1, 2))
    if t.family == "D":
        return tuple(sorted(list(range(2, 2 * n - 1, 2)) + [n]))
    return _DEGREES_EXCEPTIONAL[(t.family, n)]


def enumerate_weyl_group(cartan: CartanData) -> set[bytes]:
    """All elements of W as raw matrix bytes, by breadth-first search.

    Starts at the identity and multiplies on the right by simple reflections;
    elements are deduplicated by their action.  The bytes are those of an
    ``int64`` array of shape ``(n, n)``.
    """
    n = cartan.rank
    gens = _simple_reflection_arrays(cartan)
    ident = np.eye(n, dtype=np.int64)
    seen = {ident.tobytes()}
    frontier = ident[None, :, :]
    while len(frontier):
        new = []
        for g in gens:
            prods = frontier @ g
            for m in prods:
                key = m.tobytes()
                if key not in seen:
                    seen.add(key)
                    new.append(m)
        frontier = np.array(new, dtype=np.int64).reshape(-1, n, n)
    return seen


def weyl_order_bfs(t: LieType | str) -> int:
    return len(enumerate_weyl_group(build_cartan(t)))


class RootSystem:
    """Bundle of a type, its Cartan data and an index of its positive roots."""

    def __init__(self, t: LieType | str):
        self.type = as_type(t)
        self.cartan = build_cartan(self.type)
        self.positive = tuple(positive_roots(self.cartan))
        self.positive_set = frozenset(self.positive)

    @property
    def rank(self) -> int:
        return self.type.rank

    def ip(self, a: Sequence[int], b: Sequence[int]) -> int:
        return inner_product(a, b, self.cartan)

    def is_root(self, b: Sequence[int]) -> bool:
        return is_root(b, self.cartan)

    def simple(self, i: int) -> Root:
        return simple_root(i, self.rank)

    def __repr__(self) -> str:
        return f"RootSystem({str(self.type)!r})"


@lru_cache(maxsize=None)
def root_system(t: LieType | str) -> RootSystem:
    return RootSystem(as_type(t))
