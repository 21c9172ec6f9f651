import itertools

import pytest

from infgon.arcs import Edge
from infgon.errors import BadIndexOrder, FrozenArc, RelationCheckFailed
from infgon.plucker import (
    ClusterState,
    LaurentPoly,
    MatrixPoly,
    exchange_flip,
    laurent_expand,
    plucker_expand,
    reachable_variable_closure,
    subalgebra_generators,
    verify_short_plucker,
)
from infgon.triangulation import (
    FountainAt,
    LocallyFinite,
    SplitFountainAt,
    TriangulationDesc,
    flip,
)

E = Edge
F0 = ClusterState(TriangulationDesc.fountain(0))
L0 = ClusterState(TriangulationDesc.leapfrog(0))


def test_plucker_expand_examples():
    p = plucker_expand(E(1, 2))
    assert p.terms == {((1, 1), (2, 2)): 1, ((1, 2), (2, 1)): -1}
    p = plucker_expand(E(-1, 1))
    assert p.terms == {((1, -1), (2, 1)): 1, ((1, 1), (2, -1)): -1}
    with pytest.raises(Exception):
        plucker_expand(E(2, 2))


def test_short_plucker_examples():
    assert verify_short_plucker(1, 2, 3, 4)
    assert verify_short_plucker(-2, 0, 1, 5)
    with pytest.raises(BadIndexOrder):
        verify_short_plucker(1, 3, 2, 4)


def test_short_plucker_sweep_small():
    for i, k, j, l in itertools.combinations(range(-3, 4), 4):
        assert verify_short_plucker(i, k, j, l)


def test_exchange_flip_emits_verified_relation():
    state, rel = exchange_flip(F0, E(0, 2))
    assert rel.new == E(1, 3) and rel.old == E(0, 2)
    assert rel.rhs == ((E(0, 1), E(2, 3)), (E(0, 3), E(1, 2)))
    assert rel.pretty() == "D^{1,3}D^{0,2} = D^{0,1}D^{2,3} + D^{0,3}D^{1,2}"
    # flipping back swaps the roles, same right side
    state2, rel2 = exchange_flip(state, E(1, 3))
    assert rel2.old == E(1, 3) and rel2.new == E(0, 2)
    assert set(rel2.rhs) == set(rel.rhs)
    with pytest.raises(FrozenArc):
        exchange_flip(F0, E(0, 1))


def test_relation_json_shape():
    _, rel = exchange_flip(F0, E(0, 2))
    data = rel.to_json()
    assert data["lhs"] == [[1, 3], [0, 2]]
    assert data["rhs"] == [[[0, 1], [2, 3]], [[0, 3], [1, 2]]]


def test_subalgebra_generators():
    fountain = subalgebra_generators(FountainAt(0))
    assert not fountain(E(-1, 1))
    assert fountain(E(0, 5)) and fountain(E(-4, -2))
    everything = subalgebra_generators(LocallyFinite())
    assert everything(E(-5, 7))
    split = subalgebra_generators(SplitFountainAt(0, 3))
    assert split(E(1, 3)) and not split(E(1, 4))


def test_subalgebra_closed_under_exchange():
    state = ClusterState(TriangulationDesc.fountain(0))
    admit = subalgebra_generators(FountainAt(0))
    for arc in (E(0, 2), E(0, 3), E(-2, 0), E(1, 3)):
        state, rel = exchange_flip(state, arc)
        factors = [rel.old, rel.new, *rel.rhs[0], *rel.rhs[1]]
        assert all(admit(x) for x in factors)


def test_reachable_closure_fountain_never_straddles():
    labels = reachable_variable_closure(F0, -4, 4)
    assert labels
    assert not [lab for lab in labels if lab.left < 0 < lab.right]


def test_reachable_closure_leapfrog_fills_window():
    labels = reachable_variable_closure(L0, -3, 3)
    assert labels == {E(i, j) for i in range(-3, 2) for j in range(i + 2, 4)}


def test_reachable_closure_no_flips_is_initial():
    # a window too narrow to hold any quadrilateral: labels are the initial arcs
    labels = reachable_variable_closure(F0, 0, 2)
    assert labels == {E(0, 2)}


def test_laurent_single_flip():
    expr = laurent_expand(F0, [E(0, 2)], E(1, 3), (-1, 4))
    x = LaurentPoly.variable
    want = x(E(0, 1)) * x(E(2, 3)) + x(E(0, 3)) * x(E(1, 2))
    assert expr.numerator == want
    assert expr.denominator == {(0, 2): 1}


def test_laurent_flip_and_back():
    expr = laurent_expand(F0, [E(0, 2), E(1, 3)], E(0, 2), (-1, 4))
    assert expr.numerator == LaurentPoly.variable(E(0, 2))
    assert expr.denominator == {}


def test_laurent_denominators_are_monomials():
    window = (-1, 6)
    state = ClusterState(TriangulationDesc.fountain(0))
    seqs = [
        [E(0, 2), E(0, 3)],
        [E(0, 3), E(0, 2)],
        [E(0, 2), E(0, 3), E(1, 3)],
        [E(0, 2), E(0, 3), E(0, 4), E(1, 4)],
    ]
    for seq in seqs:
        desc = state.desc
        for arc in seq:
            desc, _ = flip(desc, arc)
        from infgon.triangulation import arcs_in_window

        for target in sorted(arcs_in_window(desc, *window)):
            expr = laurent_expand(state, seq, target, window)
            assert all(e > 0 for e in expr.denominator.values())
            assert all(c > 0 for c in expr.numerator.terms.values())


def test_laurent_rejects_out_of_window_activity():
    with pytest.raises(RelationCheckFailed):
        laurent_expand(F0, [E(0, 4)], E(0, 4), (-1, 4))  # quadrilateral needs vertex 5


def test_matrix_poly_ring_axioms():
    a = plucker_expand(E(0, 2))
    b = plucker_expand(E(1, 3))
    c = plucker_expand(E(-1, 4))
    assert a * b == b * a
    assert (a + b) * c == a * c + b * c
    assert (a - a).is_zero()
    assert a * MatrixPoly.one() == a
