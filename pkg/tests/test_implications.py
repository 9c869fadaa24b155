import random

import pytest

from cauchon.implications import (
    Arrow,
    Choice,
    ImplicationGraph,
    check_column_local,
    derive_all,
    implications_from_plane,
    make_choice,
    to_dot,
)
from cauchon.lusztig import canonical_order
from cauchon.planes import PlaneType, enumerate_admissible_planes

TYPES = (
    [f"A{n}" for n in range(1, 9)]
    + [f"B{n}" for n in range(2, 9)]
    + [f"C{n}" for n in range(3, 9)]
    + [f"D{n}" for n in range(4, 9)]
    + ["G2", "F4", "E6", "E7", "E8"]
)

# arrows drawn in the printed figures, by order position
F4_COLUMN3 = {(9, 8), (8, 6), (8, 7), (6, 5), (7, 5), (5, 4)}
F4_COLUMN4 = {
    (11, 10), (12, 11), (13, 12), (14, 12), (15, 13), (15, 14), (16, 14), (17, 15), (19, 16),
    (18, 17), (19, 17), (21, 18), (20, 19), (21, 19), (22, 20), (22, 21), (23, 22), (24, 23),
}
E7_COLUMN7 = {
    (63, 62), (62, 61), (61, 60), (60, 59), (60, 58), (59, 57), (59, 56), (58, 57), (57, 55),
    (57, 54), (56, 54), (55, 53), (55, 52), (54, 52), (53, 51), (53, 50), (52, 50), (52, 49),
    (51, 48), (50, 48), (50, 47), (49, 47), (48, 46), (47, 46), (47, 45), (46, 44), (45, 44),
    (45, 43), (44, 42), (44, 41), (43, 42), (42, 40), (41, 40), (40, 39), (39, 38), (38, 37),
}


def closure(edges):
    reach = {}
    nodes = {x for e in edges for x in e}
    for s in nodes:
        seen, stack = set(), [s]
        while stack:
            u = stack.pop()
            for a, b in edges:
                if a == u and b not in seen:
                    seen.add(b)
                    stack.append(b)
        reach[s] = seen
    return {(s, d) for s, ds in reach.items() for d in ds}


def arrows(g, column):
    return {(i.src, i.dst) for i in g.column(column) if isinstance(i, Arrow)}


def test_g2_plane_arrows():
    order = canonical_order("G2")
    (plane,) = enumerate_admissible_planes(order)
    got = {(i.src, i.dst) for i in implications_from_plane(plane, order)}
    assert got == {(6, 5), (5, 4), (5, 3), (4, 3), (3, 2)}


def test_g2_graph():
    g = derive_all(canonical_order("G2"))
    assert arrows(g, 2) == {(6, 5), (5, 4), (5, 3), (4, 3), (3, 2)}
    assert g.column(1) == ()
    assert g.choices == []


def test_f4_penultimate_column():
    g = derive_all(canonical_order("F4"))
    assert arrows(g, 3) == F4_COLUMN3


def test_f4_last_column_has_the_figure_closure():
    g = derive_all(canonical_order("F4"))
    assert closure(arrows(g, 4)) == closure(F4_COLUMN4)
    assert F4_COLUMN4 <= arrows(g, 4)


def test_e7_last_column_matches_figure():
    g = derive_all(canonical_order("E7"))
    assert arrows(g, 7) == E7_COLUMN7
    assert not [i for i in g.column(7) if isinstance(i, Choice)]


def test_e8_choices_on_92():
    g = derive_all(canonical_order("E8"))
    choices = {(c.src, c.alts) for c in g.choices}
    assert choices == {(92, (90, 91)), (92, (89, 90)), (92, (89, 91))}


@pytest.mark.parametrize("n", [3, 4, 6])
def test_type_a_columns_are_chains(n):
    order = canonical_order(f"A{n}")
    g = derive_all(order)
    for j in range(1, n + 1):
        pos = order.column_positions(j)
        assert arrows(g, j) == {(p, p - 1) for p in pos[1:]}


def test_c_type_beta_ex_arrow():
    # beta_ex + alpha_1 = 2 gamma inside the C2 block gives beta_ex -> gamma
    order = canonical_order("C3")
    g = derive_all(order)
    ex = order.position_of((1, 2, 0))
    gamma = order.position_of((1, 1, 0))
    assert (ex, gamma) in arrows(g, 2)


def test_make_choice_normalises():
    assert make_choice(5, [3]) == Arrow(5, 3)
    assert make_choice(5, [3, 2, 3]) == Choice(5, (2, 3))
    with pytest.raises(ValueError):
        Choice(5, (5, 3))
    with pytest.raises(ValueError):
        Arrow(2, 2)


def test_check_column_local():
    assert check_column_local(ImplicationGraph.from_implications([], {}))
    bad = ImplicationGraph.from_implications([Arrow(2, 1)], {1: 1, 2: 2})
    assert not check_column_local(bad)


@pytest.mark.parametrize("t", TYPES)
def test_locality_and_direction(t):
    order = canonical_order(t)
    g = derive_all(order)
    assert check_column_local(g)
    for imp in g:
        for q in imp.targets:
            assert order[q].lheight > order[imp.src].lheight
            assert 1 <= order[imp.src].box - order[q].box <= 2


@pytest.mark.parametrize("t", ["D5", "F4", "E6"])
def test_derivation_ignores_plane_order(t):
    order = canonical_order(t)
    planes = enumerate_admissible_planes(order)
    shuffled = planes[:]
    random.Random(7).shuffle(shuffled)
    assert derive_all(order, shuffled) == derive_all(order, planes)


def test_t24_without_beta_ex_is_silent():
    order = canonical_order("D4")
    for p in enumerate_admissible_planes(order):
        if p.ptype is PlaneType.T24:
            assert implications_from_plane(p, order) == []


def test_dot_output():
    g = derive_all(canonical_order("G2"))
    dot = to_dot(g)
    assert dot.startswith("digraph {") and dot.rstrip().endswith("}")
    assert dot.count("->") == 5 and "dashed" not in dot
    assert to_dot(ImplicationGraph.from_implications([], {})) == "digraph {\n}\n"
    e8 = to_dot(derive_all(canonical_order("E8")), column=8)
    dashed = [line for line in e8.splitlines() if "dashed" in line]
    assert len(dashed) == 6 and all(line.strip().startswith("92 ->") for line in dashed)
