import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cauchon.errors import DomainError
from cauchon.lusztig import canonical_order
from cauchon.planes import COND1, PlaneType, enumerate_admissible_planes, rank2_slice
from cauchon.roots import root_system

TYPES = (
    [f"A{n}" for n in range(2, 7)]
    + [f"B{n}" for n in range(2, 7)]
    + [f"C{n}" for n in range(3, 7)]
    + [f"D{n}" for n in range(4, 7)]
    + ["G2", "F4", "E6", "E7", "E8"]
)


def span_scan(a, b, t):
    """Independent span test through numerical matrix rank."""
    rs = root_system(t)
    return sorted(r for r in rs.positive if np.linalg.matrix_rank(np.array([a, b, r], dtype=float)) == 2)


def test_rank2_slice_examples():
    assert rank2_slice((1, 0), (0, 1), "A2") == ([(1, 0), (0, 1), (1, 1)], "A2")
    members, kind = rank2_slice((0, 1, 0), (1, 0, 0), "B3")
    assert set(members) == {(1, 0, 0), (0, 1, 0), (1, 1, 0), (2, 1, 0)} and kind == "B2"
    a2, a5 = (0, 1, 0, 0, 0, 0), (0, 0, 0, 0, 1, 0)
    assert rank2_slice(a2, a5, "E6") == ([a2, a5], "A1A1")


def test_rank2_slice_rejects_collinear():
    with pytest.raises(DomainError):
        rank2_slice((1, 1), (2, 2), "A2")


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(TYPES), st.data())
def test_rank2_slice_matches_span_scan(t, data):
    roots = sorted(root_system(t).positive)
    a = data.draw(st.sampled_from(roots))
    b = data.draw(st.sampled_from(roots))
    if a == b:
        return
    members, kind = rank2_slice(a, b, t)
    assert sorted(members) == span_scan(a, b, t)
    assert {2: "A1A1", 3: "A2", 4: "B2", 6: "G2"}[len(members)] == kind


def test_g2_has_only_the_full_plane():
    planes = enumerate_admissible_planes(canonical_order("G2"))
    assert [p.ptype for p in planes] == [PlaneType.G2FULL]
    assert len(planes[0].members) == 6


def test_c3_cond1_plane():
    order = canonical_order("C3")
    planes = [p for p in enumerate_admissible_planes(order) if p.column == 2 and p.ptype is PlaneType.T12]
    assert len(planes) == 1
    p = planes[0]
    assert p.role("beta_ex") == (1, 2, 0) and p.role("alpha_i") == (1, 0, 0)
    gens = {frozenset((b, bp)) for cond, b, bp in p.all_generators if cond == COND1}
    assert frozenset(((0, 1, 0), (1, 1, 0))) in gens


def test_b3_cond2_plane():
    order = canonical_order("B3")
    p = next(p for p in enumerate_admissible_planes(order) if p.column == 2)
    assert p.ptype is PlaneType.T23
    assert (p.role("beta1"), p.role("beta2"), p.role("beta3")) == ((0, 1, 0), (1, 1, 0), (2, 1, 0))


@pytest.mark.parametrize("t", TYPES)
def test_plane_invariants(t):
    order = canonical_order(t)
    rs = root_system(t)
    cols = {c.index: c for c in order.columns}
    for p in enumerate_admissible_planes(order):
        col = cols[p.column]
        assert sorted(p.members) == span_scan(*p.generators, t)
        if p.ptype is PlaneType.G2FULL:
            assert t == "G2"
        if p.ptype is PlaneType.T24:
            a, b = p.members
            assert rs.ip(a, b) == 0
        if p.ptype is PlaneType.T12:
            assert sum(p.role("alpha_i")) == 1
            assert p.role("beta_ex") == col.beta_ex
        for cond, b, bp in p.all_generators:
            if cond == COND1:
                assert col.beta_ex in p.members
                assert tuple(x + y for x, y in zip(b, bp)) == col.beta_ex
                assert abs(col.info(b).lheight - col.info(bp).lheight) == 1
            else:
                assert sum(bp) == 1 and bp not in col


@pytest.mark.parametrize("t", ["A4", "D5", "F4", "E6"])
def test_planes_are_unique(t):
    planes = enumerate_admissible_planes(canonical_order(t))
    keys = [frozenset(p.members) for p in planes]
    assert len(keys) == len(set(keys))
