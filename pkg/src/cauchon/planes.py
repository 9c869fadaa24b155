"""Admissible planes of a Lusztig order and their classification.

Two generator rules produce planes in column ``C_j``:

* ``cond1``: ``beta`` in an exceptional column, ``beta' = beta_ex - beta`` and
  the Lusztig heights of the two differ by exactly 1;
* ``cond2``: ``beta`` ordinary in ``C_j`` (``alpha_j`` included) and
  ``beta' = alpha_i`` for a good position ``i < j``.

The rule ``cond2_ex`` pairs ``beta_ex`` with each earlier ``alpha_i``.  It is
the source of the orthogonal planes whose implications are Choices.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .errors import DomainError
from .lusztig import LusztigOrder, s_d_partner
from .roots import Root, RootSystem, root_system

COND1 = "cond1"
COND2 = "cond2"
COND2_EX = "cond2_ex"

_SUBTYPES = {2: "A1A1", 3: "A2", 4: "B2", 6: "G2"}


class PlaneType(str, Enum):
    T11 = "T11"
    T12 = "T12"
    T21 = "T21"
    T23 = "T23"
    T24 = "T24"
    G2FULL = "G2FULL"

    def __str__(self) -> str:
        return self.value


def _in_span(r: Sequence[int], a: Sequence[int], b: Sequence[int], minor: tuple[int, int, int]) -> bool:
    p, q, det = minor
    xn = r[p] * b[q] - r[q] * b[p]
    yn = a[p] * r[q] - a[q] * r[p]
    return all(det * rk == xn * ak + yn * bk for rk, ak, bk in zip(r, a, b))


def _minor(a: Sequence[int], b: Sequence[int]) -> tuple[int, int, int] | None:
    n = len(a)
    for p in range(n):
        for q in range(p + 1, n):
            det = a[p] * b[q] - a[q] * b[p]
            if det:
                return p, q, det
    return None


def rank2_slice(a: Sequence[int], b: Sequence[int], system: RootSystem | str) -> tuple[list[Root], str]:
    """Positive roots in the rational span of ``a`` and ``b``, with the slice type.

    The type is read off the number of positive roots: 2, 3, 4 and 6 give
    ``A1A1``, ``A2``, ``B2`` and ``G2``.
    """
    rs = system if isinstance(system, RootSystem) else root_system(system)
    minor = _minor(a, b)
    if minor is None:
        raise DomainError(f"{tuple(a)} and {tuple(b)} are collinear")
    members = [r for r in rs.positive if _in_span(r, a, b, minor)]
    return members, _SUBTYPES[len(members)]


@dataclass(frozen=True)
class AdmissiblePlane:
    """A classified plane with its roles.

    ``roles`` maps role names (``beta``, ``beta_prime``, ``beta_ex``,
    ``alpha_i``, ``beta1``, ``beta2``, ``beta3``) to roots.  ``members`` is
    sorted by order position.
    """

    column: int
    generators: tuple[Root, Root]
    condition: str
    ptype: PlaneType
    subtype: str
    members: tuple[Root, ...]
    roles: tuple[tuple[str, Root], ...]
    all_generators: tuple[tuple[str, Root, Root], ...] = ()

    def role(self, name: str) -> Root:
        return dict(self.roles)[name]

    @property
    def role_map(self) -> dict[str, Root]:
        return dict(self.roles)


def _add(u: Sequence[int], v: Sequence[int], c: int = 1) -> Root:
    return tuple(x + c * y for x, y in zip(u, v))


def _classify(
    members: list[Root],
    subtype: str,
    beta_ex: Root | None,
    in_column: frozenset[Root],
    rs: RootSystem,
) -> tuple[PlaneType, dict[str, Root]]:
    has_ex = beta_ex is not None and beta_ex in members
    if subtype == "G2":
        return PlaneType.G2FULL, {}
    if subtype == "A1A1":
        beta = next(m for m in members if m in in_column)
        alpha = next(m for m in members if m != beta)
        return PlaneType.T24, {"beta": beta, "alpha_i": alpha}
    if subtype == "A2":
        if has_ex:
            lo, hi = sorted((m for m in members if m != beta_ex), key=sum)
            return PlaneType.T11, {"beta": lo, "beta_prime": hi, "beta_ex": beta_ex}
        col = sorted((m for m in members if m in in_column), key=sum)
        alpha = next(m for m in members if m not in in_column)
        return PlaneType.T21, {"beta1": col[0], "beta2": col[1], "alpha_i": alpha}
    # B2
    norm = {m: rs.ip(m, m) for m in members}
    short = min(norm.values())
    if has_ex:
        alpha = next(m for m in members if m != beta_ex and norm[m] > short)
        half = tuple((e - a) for e, a in zip(beta_ex, alpha))
        beta = tuple(x // 2 for x in half)
        return PlaneType.T12, {
            "beta": beta,
            "beta_prime": _add(alpha, beta),
            "beta_ex": beta_ex,
            "alpha_i": alpha,
        }
    col = sorted((m for m in members if m in in_column), key=sum)
    alpha = next(m for m in members if m not in in_column)
    return PlaneType.T23, {"beta1": col[0], "beta2": col[1], "beta3": col[2], "alpha_i": alpha}


def _generator_pairs(order: LusztigOrder):
    n = order.type.rank
    num = order.numbering
    for col in order.columns:
        j = col.index
        simples = [tuple(1 if k == num.label(i) - 1 else 0 for k in range(n)) for i in range(1, j)]
        for cr in col.roots:
            b = cr.root
            if b == col.beta_ex:
                for a in simples:
                    yield j, COND2_EX, b, a
                continue
            if col.beta_ex is not None:
                bp = s_d_partner(b, col)
                if abs(col.info(bp).lheight - cr.lheight) == 1:
                    yield j, COND1, b, bp
            for a in simples:
                yield j, COND2, b, a


def enumerate_admissible_planes(order: LusztigOrder) -> list[AdmissiblePlane]:
    """Every admissible plane of ``order``, each stored once.

    Planes are keyed by their set of positive roots; every generator pair
    that reaches a plane is kept in ``all_generators``.  The result is sorted
    by column and then by the order positions of the members.
    """
    rs = root_system(order.type)
    found: dict[frozenset[Root], dict] = {}
    for j, cond, b, bp in _generator_pairs(order):
        if cond == COND2_EX and rs.ip(b, bp) != 0:
            continue
        members, subtype = rank2_slice(b, bp, rs)
        if cond == COND2_EX and subtype != "A1A1":
            continue
        key = frozenset(members)
        if key in found:
            found[key]["gens"].append((cond, b, bp))
            continue
        found[key] = {"column": j, "members": members, "subtype": subtype, "gens": [(cond, b, bp)]}

    cols = {c.index: c for c in order.columns}
    planes = []
    for key, info in found.items():
        col = cols[info["column"]]
        cond, b, bp = info["gens"][0]
        ptype, roles = _classify(info["members"], info["subtype"], col.beta_ex, col.root_set, rs)
        members = tuple(sorted(info["members"], key=order.position_of))
        planes.append(
            AdmissiblePlane(
                column=col.index,
                generators=(b, bp),
                condition=cond,
                ptype=ptype,
                subtype=info["subtype"],
                members=members,
                roles=tuple(sorted(roles.items())),
                all_generators=tuple(info["gens"]),
            )
        )
    planes.sort(key=lambda p: (p.column, [order.position_of(m) for m in p.members]))
    return planes
