import pytest

from infgon.arcs import Edge
from infgon.errors import FrozenArc, FrozenVertex, NotInTriangulation
from infgon.quiver import (
    IceQuiver,
    b_entry,
    build_exchange_quiver,
    component_count,
    export_dot,
    finite_component_empty,
    same_component,
)
from infgon.triangulation import TriangulationDesc, arcs_in_window, flip, quadrilateral_of
from infgon.verify import FIG1_ARROWS, FIG1_WINDOW, FIG2_ARROWS, FIG2_DESC, FIG2_WINDOW

E = Edge
F0 = TriangulationDesc.fountain(0)
L0 = TriangulationDesc.leapfrog(0)
S03 = TriangulationDesc.split(0, 3)


def test_figure_one_arrows_exact():
    q = build_exchange_quiver(L0, *FIG1_WINDOW)
    assert q.arrow_set() == set(FIG1_ARROWS)


def test_figure_two_arrows_exact():
    q = build_exchange_quiver(FIG2_DESC, *FIG2_WINDOW)
    assert q.arrow_set() == set(FIG2_ARROWS)


def test_single_triangle_window():
    q = build_exchange_quiver(F0, 0, 2)
    assert q.arrow_set() == {((0, 1), (0, 2)), ((0, 2), (1, 2))}
    assert [lab.as_pair() for lab, fr in zip(q.labels, q.frozen) if fr] == [(0, 1), (1, 2)]


def test_quiver_matrix_skew_and_no_frozen_frozen():
    for t in (F0, L0, S03, FIG2_DESC):
        q = build_exchange_quiver(t, -6, 7)
        n = len(q)
        for u in range(n):
            assert q.b[u][u] == 0
            for v in range(n):
                assert q.b[u][v] == -q.b[v][u]
                if q.frozen[u] and q.frozen[v]:
                    assert q.b[u][v] == 0


def test_mutable_arc_degree_bound():
    for t in (F0, L0, FIG2_DESC):
        q = build_exchange_quiver(t, -6, 7)
        for i, lab in enumerate(q.labels):
            if q.frozen[i] or not (-4 <= lab.left and lab.right <= 5):
                continue
            degree = sum(abs(x) for x in q.b[i])
            assert degree <= 4, lab


def test_b_entry_examples():
    assert b_entry(F0, E(0, 3), E(0, 2)) == -1
    assert b_entry(F0, E(1, 2), E(0, 2)) == -1
    assert b_entry(F0, E(0, 1), E(0, 2)) == 1
    assert b_entry(F0, E(2, 3), E(0, 2)) == 1  # flank edge of the upper triangle
    assert b_entry(F0, E(0, 5), E(0, 2)) == 0
    with pytest.raises(FrozenArc):
        b_entry(S03, E(0, 1), E(0, 3))
    with pytest.raises(NotInTriangulation):
        b_entry(F0, E(0, 1), E(1, 3))


def test_bridge_has_row_but_no_column():
    # as a row the bridge contributes to neighbouring columns
    assert b_entry(S03, E(0, 3), E(0, 2)) == -1


def test_b_entry_matches_arrow_counts_everywhere():
    for t in (F0, L0, S03, FIG2_DESC):
        q = build_exchange_quiver(t, -6, 7)
        from infgon.triangulation import bridge_of

        for ij in sorted(arcs_in_window(t, -6, 7)):
            if ij == bridge_of(t):
                continue
            quad = quadrilateral_of(t, ij)
            if quad.v0 < -6 or quad.v3 > 7:
                continue
            col = q.index(ij)
            for row, mn in enumerate(q.labels):
                assert b_entry(t, mn, ij) == q.b[row][col], (t.base, mn, ij)


def test_mutation_three_cycle():
    tri = IceQuiver(
        (E(0, 2), E(0, 3), E(2, 3)),
        (False, False, False),
        ((0, 1, -1), (-1, 0, 1), (1, -1, 0)),
    )
    m = tri.mutate(1)
    assert m.arrow_set() == {((0, 3), (0, 2)), ((2, 3), (0, 3))}


def test_mutation_involution_and_frozen_guard():
    q = build_exchange_quiver(F0, -4, 4)
    assert q.mutate(E(0, 2)).mutate(E(0, 2)) == q
    with pytest.raises(FrozenVertex):
        q.mutate(E(0, 1))


def test_flip_mutation_commutation_on_interior():
    a, b = -6, 7
    for t, arc in ((F0, E(0, 2)), (L0, E(-1, 1)), (L0, E(-2, 3)), (FIG2_DESC, E(3, 5))):
        q = build_exchange_quiver(t, a, b)
        t2, new_arc = flip(t, arc)
        mutated = q.mutate(arc).relabel(arc, new_arc)
        rebuilt = build_exchange_quiver(t2, a, b)
        keep = lambda lab: lab.left >= a + 2 and lab.right <= b - 2
        assert mutated.restrict(keep) == rebuilt.restrict(keep)


def test_component_count():
    assert component_count(L0) == 1
    assert component_count(F0) == 2
    assert component_count(TriangulationDesc.split(0, 4)) == 3
    t = F0
    for arc in (E(0, 2), E(0, 3)):
        t, _ = flip(t, arc)
    assert component_count(t) == 2


def test_finite_component_emptiness_flag():
    assert finite_component_empty(TriangulationDesc.split(0, 4)) is False
    assert finite_component_empty(TriangulationDesc.split(0, 1)) is True
    # gap of width 2 carries only the frozen bridge
    assert finite_component_empty(TriangulationDesc.split(0, 2)) is True
    assert finite_component_empty(F0) is None


def test_same_component():
    assert same_component(F0, E(0, 2), E(0, 5))
    assert not same_component(F0, E(-2, 0), E(0, 2))
    assert same_component(L0, E(-1, 1), E(-2, 3))
    assert same_component(S03, E(3, 5), E(5, 6))
    assert not same_component(S03, E(-2, 0), E(3, 5))
    with pytest.raises(NotInTriangulation):
        same_component(F0, E(1, 3), E(0, 2))


def test_export_dot():
    q = build_exchange_quiver(F0, 0, 2)
    dot = export_dot(q)
    assert dot.startswith("digraph")
    assert '"(0,1)" [shape=box];' in dot
    assert '"(0,2)" [shape=ellipse];' in dot
    assert '"(0,1)" -> "(0,2)";' in dot
    # parsed arrow set equals the quiver's
    arrows = {
        tuple(part.strip().strip('";').strip('"') for part in line.split("->"))
        for line in dot.splitlines()
        if "->" in line
    }
    want = {(str(u), str(v)) for u, v, _ in q.arrows()}
    assert arrows == want


def test_quiver_json():
    q = build_exchange_quiver(F0, 0, 2)
    data = q.to_json()
    assert data["vertices"][0] == {"label": [0, 1], "frozen": True}
    assert len(data["b"]) == len(data["vertices"])
