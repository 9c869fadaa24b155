"""Structural checks on a Lusztig order and its implication graph.

Each check returns a :class:`CheckResult`; :func:`run_invariants` runs them
all.  They back the ``verify`` command and the test suite.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .implications import ImplicationGraph, check_column_local, derive_all
from .lusztig import LusztigOrder, canonical_order, is_convex, order_to_word, s_d_partner
from .roots import LieType, root_system, simple_root


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status}  {self.name}" + (f"  ({self.detail})" if self.detail else "")


def _result(name: str, failures: list[str]) -> CheckResult:
    return CheckResult(name, not failures, "; ".join(failures[:3]))


def check_convexity(order: LusztigOrder) -> CheckResult:
    ok = is_convex(order.roots, order.type)
    return CheckResult("convexity", ok, "" if ok else "a sum of two roots is not between them")


def check_box_orthogonality(order: LusztigOrder) -> CheckResult:
    rs = root_system(order.type)
    bad = []
    for col in order.columns:
        for box in order.boxes(col.index):
            roots = [order[p].root for p in box]
            if col.beta_ex in roots:
                continue
            simples = [simple_root(order[p].assoc_simple, rs.rank) for p in box]
            for k in range(len(box)):
                for m in range(k + 1, len(box)):
                    if rs.ip(roots[k], roots[m]) or rs.ip(simples[k], simples[m]):
                        bad.append(f"positions {box[k]},{box[m]}")
    return _result("box orthogonality", bad)


def check_beta_ex(order: LusztigOrder) -> CheckResult:
    bad = []
    for col in order.columns:
        ks = [r.root[col.label - 1] for r in col.roots]
        if ks.count(2) > 1:
            bad.append(f"column {col.index} has several exceptional roots")
        if col.beta_ex is None:
            continue
        info = col.info(col.beta_ex)
        if info.lheight.denominator == 1:
            bad.append(f"column {col.index}: h' of beta_ex is an integer")
        if sum(1 for r in col.roots if r.box == info.box) != 1:
            bad.append(f"column {col.index}: beta_ex shares its box")
    return _result("beta_ex unique, h' not integral, alone in box", bad)


def check_ends_alone(order: LusztigOrder) -> CheckResult:
    bad = []
    n = order.type.rank
    for col in order.columns:
        boxes = col.boxes
        if len(boxes[0]) != 1:
            bad.append(f"column {col.index}: first box has {len(boxes[0])} roots")
        if boxes[-1] != [simple_root(col.label, n)]:
            bad.append(f"column {col.index}: last box is not alpha_j alone")
    return _result("delta_j and alpha_j alone in their boxes", bad)


def check_lheight_interval(order: LusztigOrder) -> CheckResult:
    bad = []
    for col in order.columns:
        values = {r.lheight for r in col.roots}
        if col.beta_ex is None:
            t = len(values)
            expected = {Fraction(k) for k in range(1, t + 1)}
        else:
            t = col.info(col.beta_ex).lheight - Fraction(1, 2)
            expected = {Fraction(k) for k in range(1, int(2 * t) + 1)} | {t + Fraction(1, 2)}
        if values != expected:
            bad.append(f"column {col.index}")
    return _result("h' interval shape", bad)


def check_sd_swap(order: LusztigOrder) -> CheckResult:
    bad = []
    for col in order.columns:
        if col.beta_ex is None:
            continue
        h_ex = sum(col.beta_ex)
        for r in col.roots:
            if r.root == col.beta_ex:
                continue
            partner = s_d_partner(r.root, col)
            if partner not in col or col.info(partner).lheight != h_ex - r.lheight:
                bad.append(f"{r.root}")
            elif s_d_partner(partner, col) != r.root:
                bad.append(f"{r.root} not an involution")
    return _result("s_D box swap", bad)


def check_ladder(order: LusztigOrder) -> CheckResult:
    """Ordinary roots can step down towards alpha_j and up towards delta_j by earlier simple roots."""
    n = order.type.rank
    bad = []
    for col in order.columns:
        eps = [simple_root(order.numbering.label(i), n) for i in range(1, col.index)]
        for r in col.roots:
            b = r.root
            if b == col.beta_ex:
                continue
            if b != col.last and not any(tuple(x - y for x, y in zip(b, e)) in col for e in eps):
                bad.append(f"{b} has no step down")
            if b != col.first and not any(tuple(x + y for x, y in zip(b, e)) in col for e in eps):
                bad.append(f"{b} has no step up")
    return _result("root ladders", bad)


def check_locality(g: ImplicationGraph) -> CheckResult:
    ok = check_column_local(g)
    return CheckResult("implications stay in their column", ok)


def check_span(g: ImplicationGraph) -> CheckResult:
    """Every implication points to strictly higher h', at most two boxes away."""
    order = g.order
    bad = []
    for imp in g:
        src = order[imp.src]
        for q in imp.targets:
            dst = order[q]
            if not (dst.lheight > src.lheight and 1 <= src.box - dst.box <= 2):
                bad.append(f"{imp.src}->{q}")
    return _result("implication span", bad)


def check_round_trip(order: LusztigOrder) -> CheckResult:
    ok = order_to_word(order.roots, order.type) == order.word
    return CheckResult("word/order round trip", ok)


ORDER_CHECKS: list[Callable[[LusztigOrder], CheckResult]] = [
    check_convexity,
    check_box_orthogonality,
    check_beta_ex,
    check_ends_alone,
    check_lheight_interval,
    check_sd_swap,
    check_ladder,
    check_round_trip,
]
GRAPH_CHECKS: list[Callable[[ImplicationGraph], CheckResult]] = [check_locality, check_span]


def run_invariants(t: LieType | str | LusztigOrder) -> list[CheckResult]:
    order = t if isinstance(t, LusztigOrder) else canonical_order(t)
    g = derive_all(order)
    return [c(order) for c in ORDER_CHECKS] + [c(g) for c in GRAPH_CHECKS]
