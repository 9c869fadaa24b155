"""JSON-ready dictionaries for orders and implication graphs."""
from __future__ import annotations

from fractions import Fraction
from typing import Any

from .implications import Arrow, Choice, ImplicationGraph, make_choice
from .lusztig import LusztigOrder, word_to_order
from .roots import LieType


def implication_to_dict(imp: Arrow | Choice) -> dict[str, Any]:
    if isinstance(imp, Arrow):
        return {"kind": "arrow", "src": imp.src, "dst": imp.dst}
    return {"kind": "choice", "src": imp.src, "alts": list(imp.alts)}


def implication_from_dict(d: dict[str, Any]) -> Arrow | Choice:
    if d["kind"] == "arrow":
        return Arrow(int(d["src"]), int(d["dst"]))
    return make_choice(int(d["src"]), d["alts"])


def order_to_dict(order: LusztigOrder, graph: ImplicationGraph | None = None) -> dict[str, Any]:
    """The document printed by ``cauchon roots --format json``.

    ``lheight`` is written as ``str(Fraction)``: ``"11/2"``, or ``"4"`` when integral.
    """
    out: dict[str, Any] = {
        "type": str(order.type),
        "rank": order.type.rank,
        "good_numbering": list(order.numbering.perm),
        "word": list(order.word),
        "roots": [
            {
                "pos": e.pos,
                "coeffs": list(e.root),
                "column": e.column,
                "box": e.box,
                "height": e.height,
                "lheight": str(e.lheight),
                "assoc_simple": e.assoc_simple,
            }
            for e in order.entries
        ],
    }
    if graph is not None:
        out["implications"] = [implication_to_dict(i) for i in graph]
    return out


def order_from_dict(d: dict[str, Any]) -> LusztigOrder:
    """Rebuild an order from its word and numbering, checking the stored rows agree."""
    order = word_to_order(d["word"], LieType.parse(d["type"]), d["good_numbering"])
    for row, e in zip(d["roots"], order.entries):
        same = (
            row["pos"] == e.pos
            and tuple(row["coeffs"]) == e.root
            and row["column"] == e.column
            and row["box"] == e.box
            and row["height"] == e.height
            and Fraction(row["lheight"]) == e.lheight
            and row["assoc_simple"] == e.assoc_simple
        )
        if not same:
            raise ValueError(f"row {row['pos']} disagrees with the order rebuilt from the word")
    return order
