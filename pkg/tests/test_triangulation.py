import itertools

import pytest

from infgon.arcs import Edge, PassSide, crosses, passes_over
from infgon.errors import (
    FrozenArc,
    InvalidDescriptor,
    NoCover,
    NotAFountain,
    NotEquivalent,
    NotInTriangulation,
    NotLocallyFinite,
    WindowTooLarge,
)
from infgon.triangulation import (
    FountainAt,
    LocallyFinite,
    SplitFountainAt,
    TriangulationDesc,
    arcs_in_window,
    classify,
    contains,
    find_flip_sequence,
    flip,
    fountain_arc_sequence,
    minimal_arc_chain,
    minimal_arc_over,
    mutation_equivalent,
    quadrilateral_of,
    validate_descriptor,
    validate_window,
)

E = Edge


# ---------------------------------------------------------------------------
# Independent oracles: the base families as the source text defines them, by
# raw set-builder membership (no closed forms, no partner scans).
# ---------------------------------------------------------------------------


def brute_base_member(base, e: Edge) -> bool:
    if base.kind == "fountain":
        v = base.vertex
        return any(e == E(v - n, v) for n in range(2, 40)) or any(
            e == E(v, v + n) for n in range(2, 40)
        )
    if base.kind == "leapfrog":
        c = base.center
        return any(e == E(c - n, c + n) for n in range(1, 40)) or any(
            e == E(c - n, c + n + 1) for n in range(1, 40)
        )
    l, r = base.left, base.right
    return (
        any(e == E(l - n, l) for n in range(2, 40))
        or any(e == E(r, r + n) for n in range(2, 40))
        or any(e == E(l, j) for j in range(l + 2, r + 1))
    )


def brute_realized(t: TriangulationDesc, e: Edge) -> bool:
    if e in t.added:
        return True
    return brute_base_member(t.base, e) and e not in t.removed


def brute_window(t: TriangulationDesc, a: int, b: int) -> set[Edge]:
    return {
        E(i, j)
        for i in range(a, b - 1)
        for j in range(i + 2, b + 1)
        if brute_realized(t, E(i, j))
    }


def brute_minimal_cover(t: TriangulationDesc, e: Edge, margin: int = 8):
    lo, hi = e.left - margin, e.right + margin
    covers = [
        x
        for x in brute_window(t, lo, hi)
        if passes_over(x, e)
    ]
    minimal = [c for c in covers if all(passes_over(o, c) for o in covers if o != c)]
    return minimal


F0 = TriangulationDesc.fountain(0)
L0 = TriangulationDesc.leapfrog(0)
S03 = TriangulationDesc.split(0, 3)


def test_membership_examples():
    assert contains(F0, E(0, 5))
    assert contains(L0, E(-2, 3))
    edited = TriangulationDesc.fountain(0, removed=[E(0, 2)], added=[E(1, 3)])
    assert not contains(edited, E(0, 2))
    assert contains(edited, E(1, 3))


@pytest.mark.parametrize("t", [F0, L0, S03, TriangulationDesc.split(-1, 1)])
def test_membership_matches_set_builder(t):
    for i in range(-7, 6):
        for j in range(i + 2, 8):
            assert contains(t, E(i, j)) == brute_realized(t, E(i, j)), (t.base, i, j)


def test_windows_match_brute_enumeration():
    assert arcs_in_window(F0, -2, 3) == {E(-2, 0), E(0, 2), E(0, 3)}
    assert arcs_in_window(L0, -2, 3) == {E(-1, 1), E(-1, 2), E(-2, 2), E(-2, 3)}
    assert arcs_in_window(F0, 5, 6) == set()
    for t in (F0, L0, S03):
        assert arcs_in_window(t, -6, 7) == brute_window(t, -6, 7)


def test_window_budget():
    with pytest.raises(WindowTooLarge):
        arcs_in_window(F0, -100, 100)
    assert arcs_in_window(F0, -40, 40, budget=100)


def test_minimal_arc_over_examples():
    assert minimal_arc_over(L0, E(-1, 1)) == (E(-1, 2), PassSide.RIGHT)
    assert minimal_arc_over(F0, E(0, 2)) == (E(0, 3), PassSide.RIGHT)
    with pytest.raises(NoCover):
        minimal_arc_over(S03, E(0, 3))
    with pytest.raises(NotInTriangulation):
        minimal_arc_over(F0, E(1, 3))


@pytest.mark.parametrize("t", [F0, L0, S03])
def test_minimal_cover_is_brute_force_minimum(t):
    for e in sorted(arcs_in_window(t, -4, 4)) + [E(i, i + 1) for i in range(-3, 3)]:
        minimal = brute_minimal_cover(t, e)
        try:
            cover, _ = minimal_arc_over(t, e)
        except NoCover:
            assert minimal == [], (t.base, e)
            continue
        assert minimal == [cover], (t.base, e)


def test_quadrilateral_examples():
    quad = quadrilateral_of(F0, E(0, 2))
    assert quad.vertices == (0, 1, 2, 3) and quad.diagonal == E(0, 2)
    quad = quadrilateral_of(L0, E(-1, 2))
    assert quad.vertices == (-2, -1, 1, 2)
    with pytest.raises(FrozenArc):
        quadrilateral_of(S03, E(0, 3))
    with pytest.raises(FrozenArc):
        quadrilateral_of(F0, E(0, 1))
    with pytest.raises(NotInTriangulation):
        quadrilateral_of(F0, E(1, 4))


def test_quadrilateral_boundary_is_realized():
    for t in (F0, L0, S03):
        for e in sorted(arcs_in_window(t, -5, 5)):
            if e == E(0, 3) and t is S03:
                continue
            quad = quadrilateral_of(t, e)
            for edge in quad.boundary():
                assert edge.is_side() or brute_realized(t, edge)


def test_flip_examples():
    t2, new = flip(F0, E(0, 2))
    assert new == E(1, 3)
    assert t2.removed == {E(0, 2)} and t2.added == {E(1, 3)}
    t3, back = flip(t2, new)
    assert back == E(0, 2) and t3 == F0
    with pytest.raises(FrozenArc):
        flip(S03, E(0, 3))


def test_flip_preserves_validity_and_class():
    t = F0
    for arc in (E(0, 2), E(0, 3), E(-2, 0)):
        t, _ = flip(t, arc)
        assert classify(t) == FountainAt(0)
        assert validate_window(t, -6, 7)
    validate_descriptor(t)


def test_classify():
    assert classify(L0) == LocallyFinite()
    assert classify(TriangulationDesc.leapfrog(0, removed=[E(-1, 1)], added=[E(0, 2)])) == LocallyFinite()
    assert classify(F0) == FountainAt(0)
    assert classify(S03) == SplitFountainAt(0, 3)


def test_fountain_arc_sequence():
    assert fountain_arc_sequence(F0, PassSide.RIGHT, 3) == [E(0, 2), E(0, 3), E(0, 4)]
    edited = TriangulationDesc.fountain(0, removed=[E(0, 2)], added=[E(1, 3)])
    assert fountain_arc_sequence(edited, PassSide.RIGHT, 2) == [E(0, 3), E(0, 4)]
    assert fountain_arc_sequence(F0, PassSide.LEFT, 2) == [E(-2, 0), E(-3, 0)]
    assert fountain_arc_sequence(S03, PassSide.RIGHT, 2) == [E(3, 5), E(3, 6)]
    with pytest.raises(NotAFountain):
        fountain_arc_sequence(L0, PassSide.RIGHT, 3)


def test_fountain_sequence_strictly_widens():
    seq = fountain_arc_sequence(F0, PassSide.RIGHT, 8)
    assert all(e.left == 0 for e in seq)
    assert all(a.right < b.right for a, b in zip(seq, seq[1:]))


def test_minimal_arc_chain():
    assert minimal_arc_chain(L0, E(-1, 1), 3) == [E(-1, 1), E(-1, 2), E(-2, 2)]
    assert minimal_arc_chain(L0, E(-1, 1), 1) == [E(-1, 1)]
    with pytest.raises(NotLocallyFinite):
        minimal_arc_chain(F0, E(0, 2), 3)


def test_mutation_equivalence():
    t2, _ = flip(F0, E(0, 2))
    assert mutation_equivalent(F0, t2)
    assert not mutation_equivalent(F0, TriangulationDesc.fountain(1))
    assert not mutation_equivalent(L0, F0)


def test_find_flip_sequence_single():
    t2, _ = flip(F0, E(0, 2))
    assert find_flip_sequence(F0, t2) == [E(0, 2)]
    assert find_flip_sequence(F0, F0) == []


def test_find_flip_sequence_verified_by_application():
    t2 = F0
    for arc in (E(0, 2), E(0, 3)):
        t2, _ = flip(t2, arc)
    seq = find_flip_sequence(F0, t2)
    assert len(seq) <= 4
    check = F0
    for arc in seq:
        check, _ = flip(check, arc)
    assert check == t2


def test_find_flip_sequence_across_bases_and_regions():
    cases = []
    t = TriangulationDesc.leapfrog(1)
    for arc in (E(0, 2), E(0, 3), E(-1, 3)):
        t, _ = flip(t, arc)
    cases.append((TriangulationDesc.leapfrog(1), t))
    t = TriangulationDesc.split(0, 4)
    for arc in (E(0, 2), E(0, 3), E(-2, 0), E(4, 6)):
        t, _ = flip(t, arc)
    cases.append((TriangulationDesc.split(0, 4), t))
    t2 = TriangulationDesc.fountain(-1)
    for arc in (E(-1, 1), E(-3, -1)):
        t2, _ = flip(t2, arc)
    u2 = TriangulationDesc.fountain(-1)
    for arc in (E(-1, 2), E(-1, 1)):
        u2, _ = flip(u2, arc)
    cases.append((t2, u2))
    for start, goal in cases:
        seq = find_flip_sequence(start, goal)
        check = start
        for arc in seq:
            check, _ = flip(check, arc)
        assert check == goal
    with pytest.raises(NotEquivalent):
        find_flip_sequence(F0, TriangulationDesc.fountain(1))


def test_validate_window_examples():
    assert validate_window(F0, -4, 4)
    assert not validate_window(TriangulationDesc.fountain(0, removed=[E(0, 2)]), -1, 3)
    # the non-triangulation limit of the flip cascade: fountains at -1 and 1
    # with nothing covering the gap vertex 0
    limit = TriangulationDesc.split(-1, 1, removed=[E(-1, 1)])
    assert not validate_window(limit, -2, 2)


def test_validate_window_catches_crossings():
    broken = TriangulationDesc.fountain(0, added=[E(1, 3)])
    assert not validate_window(broken, -1, 4)
    with pytest.raises(InvalidDescriptor):
        validate_descriptor(broken)


def test_realized_sets_never_cross():
    t = S03
    for arc in (E(0, 2), E(3, 5), E(-2, 0)):
        t, _ = flip(t, arc)
    arcs = sorted(arcs_in_window(t, -6, 7))
    for a, b in itertools.combinations(arcs, 2):
        assert not crosses(a, b)


def test_descriptor_json_round_trip():
    t, _ = flip(S03, E(0, 2))
    again = TriangulationDesc.from_json(t.to_json())
    assert again == t
    with pytest.raises(InvalidDescriptor):
        TriangulationDesc.from_json({"base": {"kind": "spiral"}})


def test_descriptor_canonicality_enforced():
    with pytest.raises(InvalidDescriptor):
        TriangulationDesc.fountain(0, removed=[E(1, 3)])  # not a base arc
    with pytest.raises(InvalidDescriptor):
        TriangulationDesc.fountain(0, added=[E(0, 2)])  # already in base
    with pytest.raises(InvalidDescriptor):
        TriangulationDesc.fountain(0, added=[E(1, 2)])  # a side
