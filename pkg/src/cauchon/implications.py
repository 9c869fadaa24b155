"""Implications attached to admissible planes, gathered into a per-column graph.

An :class:`Arrow` ``src -> dst`` says that a diagram containing ``src`` must
contain ``dst``.  A :class:`Choice` ``src => alts`` asks for at least one of
``alts``.  Endpoints are 1-based order positions.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Union

from .lusztig import LusztigOrder
from .planes import AdmissiblePlane, PlaneType, enumerate_admissible_planes
from .roots import Root


@dataclass(frozen=True, order=True)
class Arrow:
    src: int
    dst: int

    def __post_init__(self) -> None:
        if self.src == self.dst:
            raise ValueError("an arrow needs two distinct endpoints")

    @property
    def kind(self) -> str:
        return "arrow"

    @property
    def targets(self) -> tuple[int, ...]:
        return (self.dst,)

    @property
    def positions(self) -> tuple[int, ...]:
        return (self.src, self.dst)

    def holds(self, members: "set[int] | frozenset[int]") -> bool:
        return self.src not in members or self.dst in members


@dataclass(frozen=True, order=True)
class Choice:
    src: int
    alts: tuple[int, ...]

    def __post_init__(self) -> None:
        alts = tuple(sorted(set(self.alts)))
        if len(alts) < 2:
            raise ValueError("a choice needs at least two alternatives; use Arrow")
        if self.src in alts:
            raise ValueError("the source cannot be one of its alternatives")
        object.__setattr__(self, "alts", alts)

    @property
    def kind(self) -> str:
        return "choice"

    @property
    def targets(self) -> tuple[int, ...]:
        return self.alts

    @property
    def positions(self) -> tuple[int, ...]:
        return (self.src,) + self.alts

    def holds(self, members: "set[int] | frozenset[int]") -> bool:
        return self.src not in members or any(a in members for a in self.alts)


Implication = Union[Arrow, Choice]


def make_choice(src: int, alts: Iterable[int]) -> Implication:
    """A Choice, or an Arrow when only one alternative remains."""
    alts = sorted(set(alts))
    if len(alts) == 1:
        return Arrow(src, alts[0])
    return Choice(src, tuple(alts))


def _sort_key(imp: Implication) -> tuple:
    return (imp.src, 0 if isinstance(imp, Arrow) else 1, imp.targets)


@dataclass(frozen=True)
class ImplicationGraph:
    """Implications grouped by the column of their source.

    ``column_of`` maps every order position to its column; ``order`` is the
    Lusztig order the positions refer to (``None`` for hand-built graphs).
    """

    by_column: dict[int, tuple[Implication, ...]]
    column_of: dict[int, int]
    order: LusztigOrder | None = field(default=None, compare=False)

    @classmethod
    def from_implications(
        cls,
        imps: Iterable[Implication],
        column_of: dict[int, int],
        order: LusztigOrder | None = None,
        columns: Iterable[int] = (),
    ) -> "ImplicationGraph":
        groups: dict[int, set[Implication]] = {j: set() for j in columns}
        for imp in imps:
            groups.setdefault(column_of[imp.src], set()).add(imp)
        by_column = {j: tuple(sorted(v, key=_sort_key)) for j, v in sorted(groups.items())}
        return cls(by_column, dict(column_of), order)

    def __iter__(self) -> Iterator[Implication]:
        for imps in self.by_column.values():
            yield from imps

    def __len__(self) -> int:
        return sum(len(v) for v in self.by_column.values())

    def column(self, j: int) -> tuple[Implication, ...]:
        return self.by_column.get(j, ())

    @property
    def arrows(self) -> list[Arrow]:
        return [i for i in self if isinstance(i, Arrow)]

    @property
    def choices(self) -> list[Choice]:
        return [i for i in self if isinstance(i, Choice)]


def _g2_arrows(pos) -> list[Implication]:
    chain = [((0, 1), (1, 1)), ((1, 1), (3, 2)), ((1, 1), (2, 1)), ((3, 2), (2, 1)), ((2, 1), (3, 1))]
    return [Arrow(pos(a), pos(b)) for a, b in chain]


def implications_from_plane(p: AdmissiblePlane, order: LusztigOrder) -> list[Implication]:
    """The implications a single plane imposes, as order positions."""
    pos = order.position_of
    r = p.role_map
    if p.ptype is PlaneType.G2FULL:
        return _g2_arrows(pos)
    if p.ptype is PlaneType.T21:
        return [Arrow(pos(r["beta1"]), pos(r["beta2"]))]
    if p.ptype is PlaneType.T23:
        return [Arrow(pos(r["beta1"]), pos(r["beta2"])), Arrow(pos(r["beta2"]), pos(r["beta3"]))]
    if p.ptype is PlaneType.T11:
        return [Arrow(pos(r["beta"]), pos(r["beta_ex"]))]
    if p.ptype is PlaneType.T12:
        b, bp, ex = pos(r["beta"]), pos(r["beta_prime"]), pos(r["beta_ex"])
        return [Arrow(b, bp), Arrow(b, ex), Arrow(ex, bp)]
    # T24: only the orthogonal pair (beta_ex, alpha_i) carries implications
    col = next(c for c in order.columns if c.index == p.column)
    beta, alpha = r["beta"], r["alpha_i"]
    if beta != col.beta_ex:
        return []
    return [make_choice(pos(beta), pair) for pair in _decompositions(beta, alpha, col, pos)]


def _decompositions(beta_ex: Root, alpha: Root, col, pos) -> list[tuple[int, int]]:
    """Pairs {b1, b2} of distinct roots in the box just above beta_ex with b1 + b2 = beta_ex + alpha."""
    box = col.info(beta_ex).box - 1
    cands = [r.root for r in col.roots if r.box == box]
    target = tuple(x + y for x, y in zip(beta_ex, alpha))
    out = []
    for k, b1 in enumerate(cands):
        for b2 in cands[k + 1 :]:
            if tuple(x + y for x, y in zip(b1, b2)) == target:
                out.append((pos(b1), pos(b2)))
    return out


def derive_all(order: LusztigOrder, planes: list[AdmissiblePlane] | None = None) -> ImplicationGraph:
    """Union of the implications of every admissible plane, sorted and deduplicated."""
    if planes is None:
        planes = enumerate_admissible_planes(order)
    imps = [imp for p in planes for imp in implications_from_plane(p, order)]
    column_of = {e.pos: e.column for e in order.entries}
    return ImplicationGraph.from_implications(
        imps, column_of, order, columns=range(1, order.type.rank + 1)
    )


def check_column_local(g: ImplicationGraph) -> bool:
    """True when every implication stays inside one column."""
    return all(len({g.column_of[q] for q in imp.positions}) == 1 for imp in g)


def to_dot(g: ImplicationGraph, column: int | None = None) -> str:
    """DOT digraph: Arrows are solid edges, Choices fan out as dashed edges."""
    imps = list(g.column(column)) if column is not None else list(g)
    nodes = sorted({q for imp in imps for q in imp.positions})
    lines = ["digraph {"]
    for q in nodes:
        label = str(q)
        if g.order is not None:
            coeffs = ",".join(str(x) for x in g.order[q].root)
            label = f"{q}\\n({coeffs})"
        lines.append(f'  {q} [label="{label}"];')
    for imp in imps:
        if isinstance(imp, Arrow):
            lines.append(f"  {imp.src} -> {imp.dst};")
        else:
            for a in imp.alts:
                lines.append(f'  {imp.src} -> {a} [style=dashed, label="or"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
