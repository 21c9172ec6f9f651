"""Finitely-described infinite triangulations of the infinity-gon.

A triangulation is stored as one of three canonical base families plus a
finite edit set (removed base arcs, added arcs).  This captures exactly the
triangulations reachable from the canonical families by finite flip
sequences.  All queries (membership, windows, minimal covers, crossings)
reduce to closed forms on the base family plus finite scans of the edits, so
every operation is exact despite the underlying arc set being infinite.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .arcs import Edge, PassSide, crosses, side
from .errors import (
    BadEdge,
    FrozenArc,
    InvalidDescriptor,
    NoCover,
    NotAFountain,
    NotEquivalent,
    NotInTriangulation,
    NotLocallyFinite,
    WindowTooLarge,
)

DEFAULT_WINDOW_BUDGET = 64


# ---------------------------------------------------------------------------
# Base families
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Leapfrog:
    """Arcs (c-n, c+n) and (c-n, c+n+1) for n >= 1; locally finite."""

    center: int

    kind = "leapfrog"

    def contains(self, e: Edge) -> bool:
        s = e.left + e.right
        if s == 2 * self.center:
            return e.span >= 2
        if s == 2 * self.center + 1:
            return e.span >= 3
        return False

    def arcs_in_window(self, a: int, b: int):
        c = self.center
        for n in itertools.count(1):
            lo, hi = c - n, c + n
            if lo < a or hi > b:
                break
            yield Edge(lo, hi)
            if hi + 1 <= b:
                yield Edge(lo, hi + 1)

    def _right_ys(self, i: int):
        c = self.center
        return (2 * c - i, 2 * c - i + 1) if i <= c - 1 else ()

    def _left_xs(self, j: int):
        c = self.center
        xs = []
        if j >= c + 1:
            xs.append(2 * c - j)
        if j >= c + 2:
            xs.append(2 * c - j + 1)
        return tuple(xs)

    def next_right(self, i: int, lower: int):
        ys = [y for y in self._right_ys(i) if y > lower]
        return min(ys) if ys else None

    def max_right_below(self, i: int, upper: int):
        ys = [y for y in self._right_ys(i) if y < upper]
        return max(ys) if ys else None

    def prev_left(self, j: int, upper: int):
        xs = [x for x in self._left_xs(j) if x < upper]
        return max(xs) if xs else None

    def crossing_arcs(self, e: Edge):
        c = self.center
        out = []
        for n in range(1, max(c - e.left, e.right - c, 0) + 2):
            for cand in (Edge(c - n, c + n), Edge(c - n, c + n + 1)):
                if crosses(e, cand):
                    out.append(cand)
        return out, False

    def to_json(self):
        return {"kind": self.kind, "center": self.center}


@dataclass(frozen=True)
class Fountain:
    """Arcs (m, v) for m <= v-2 and (v, p) for p >= v+2: the standard fountain."""

    vertex: int

    kind = "fountain"

    def contains(self, e: Edge) -> bool:
        v = self.vertex
        return (e.right == v and e.left <= v - 2) or (e.left == v and e.right >= v + 2)

    def arcs_in_window(self, a: int, b: int):
        v = self.vertex
        if a <= v <= b:
            for m in range(a, v - 1):
                yield Edge(m, v)
            for p in range(v + 2, b + 1):
                yield Edge(v, p)

    def next_right(self, i: int, lower: int):
        v = self.vertex
        if i == v:
            return max(lower + 1, v + 2)
        if i <= v - 2 and v > lower:
            return v
        return None

    def max_right_below(self, i: int, upper: int):
        v = self.vertex
        if i == v:
            y = upper - 1
            return y if y >= v + 2 else None
        if i <= v - 2 and v < upper:
            return v
        return None

    def prev_left(self, j: int, upper: int):
        v = self.vertex
        if j == v:
            x = min(upper - 1, v - 2)
            return x
        if j >= v + 2 and v < upper:
            return v
        return None

    def crossing_arcs(self, e: Edge):
        v = self.vertex
        if e.left < v < e.right:
            return [], True
        out = []
        if e.right < v:
            out = [Edge(m, v) for m in range(e.left + 1, e.right)]
        elif e.left > v:
            out = [Edge(v, p) for p in range(e.left + 1, e.right)]
        return out, False

    def to_json(self):
        return {"kind": self.kind, "vertex": self.vertex}


@dataclass(frozen=True)
class SplitFountain:
    """Left fountain into `left`, right fountain out of `right`, left fan in the gap.

    The bridge arc (left, right) exists when right >= left + 2 and is frozen.
    """

    left: int
    right: int

    kind = "split"

    def __post_init__(self):
        if self.left >= self.right:
            raise BadEdge(f"split fountain requires left < right, got ({self.left}, {self.right})")

    def contains(self, e: Edge) -> bool:
        l, r = self.left, self.right
        if e.right == l and e.left <= l - 2:
            return True
        if e.left == r and e.right >= r + 2:
            return True
        return e.left == l and l + 2 <= e.right <= r

    def arcs_in_window(self, a: int, b: int):
        l, r = self.left, self.right
        if l <= b:
            for m in range(a, l - 1):
                yield Edge(m, l)
        if l >= a:
            for g in range(max(l + 2, a), min(r, b) + 1):
                yield Edge(l, g)
        if r >= a:
            for p in range(r + 2, b + 1):
                yield Edge(r, p)

    def next_right(self, i: int, lower: int):
        l, r = self.left, self.right
        cands = []
        if i == r:
            cands.append(max(lower + 1, r + 2))
        if i == l:
            g = max(lower + 1, l + 2)
            if g <= r:
                cands.append(g)
        if i <= l - 2 and l > lower:
            cands.append(l)
        return min(cands) if cands else None

    def max_right_below(self, i: int, upper: int):
        l, r = self.left, self.right
        cands = []
        if i == r and upper - 1 >= r + 2:
            cands.append(upper - 1)
        if i == l:
            g = min(upper - 1, r)
            if g >= l + 2:
                cands.append(g)
        if i <= l - 2 and l < upper:
            cands.append(l)
        return max(cands) if cands else None

    def prev_left(self, j: int, upper: int):
        l, r = self.left, self.right
        cands = []
        if j == l:
            cands.append(min(upper - 1, l - 2))
        if j >= r + 2 and r < upper:
            cands.append(r)
        if l + 2 <= j <= r and l < upper:
            cands.append(l)
        return max(cands) if cands else None

    def crossing_arcs(self, e: Edge):
        l, r = self.left, self.right
        if e.left < l < e.right or e.left < r < e.right:
            return [], True
        out = []
        if e.right < l:
            out.extend(Edge(m, l) for m in range(e.left + 1, e.right))
        if e.left > r:
            out.extend(Edge(r, p) for p in range(e.left + 1, e.right))
        for g in range(l + 2, r + 1):
            cand = Edge(l, g)
            if crosses(e, cand):
                out.append(cand)
        return out, False

    def to_json(self):
        return {"kind": self.kind, "left": self.left, "right": self.right}


BaseFamily = Leapfrog | Fountain | SplitFountain

_BASE_KINDS = {"leapfrog": Leapfrog, "fountain": Fountain, "split": SplitFountain}


def base_from_json(data) -> BaseFamily:
    if not isinstance(data, dict) or "kind" not in data:
        raise InvalidDescriptor(f"base family JSON needs a 'kind', got {data!r}")
    kind = data["kind"]
    try:
        if kind == "leapfrog":
            return Leapfrog(int(data["center"]))
        if kind == "fountain":
            return Fountain(int(data["vertex"]))
        if kind == "split":
            return SplitFountain(int(data["left"]), int(data["right"]))
    except KeyError as exc:
        raise InvalidDescriptor(f"base family {kind!r} missing parameter {exc}") from exc
    raise InvalidDescriptor(f"unknown base family kind {kind!r}")


# ---------------------------------------------------------------------------
# Classification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LocallyFinite:
    kind = "locally_finite"

    def to_json(self):
        return {"kind": self.kind}


@dataclass(frozen=True)
class FountainAt:
    vertex: int

    kind = "fountain"

    def to_json(self):
        return {"kind": self.kind, "vertex": self.vertex}


@dataclass(frozen=True)
class SplitFountainAt:
    left: int
    right: int

    kind = "split_fountain"

    def to_json(self):
        return {"kind": self.kind, "left": self.left, "right": self.right}


TriangulationClass = LocallyFinite | FountainAt | SplitFountainAt


# ---------------------------------------------------------------------------
# Descriptors
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TriangulationDesc:
    """Canonical descriptor: base family plus normalized finite edit sets.

    Invariants enforced here: removed is a subset of the base arc set, added
    arcs are genuine arcs outside the base.  Non-crossing and maximality of
    the realized set are *not* enforced at construction (the validators need
    to be able to inspect broken configurations); use validate_descriptor.
    """

    base: BaseFamily
    removed: frozenset[Edge] = field(default_factory=frozenset)
    added: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "removed", frozenset(self.removed))
        object.__setattr__(self, "added", frozenset(self.added))
        for e in self.removed:
            if not self.base.contains(e):
                raise InvalidDescriptor(f"removed arc {e} is not in the base family")
        for e in self.added:
            if not e.is_arc():
                raise InvalidDescriptor(f"added edge {e} is a side, not an arc")
            if self.base.contains(e):
                raise InvalidDescriptor(f"added arc {e} already belongs to the base family")

    @classmethod
    def fountain(cls, vertex: int, removed=(), added=()):
        return cls(Fountain(vertex), frozenset(removed), frozenset(added))

    @classmethod
    def leapfrog(cls, center: int, removed=(), added=()):
        return cls(Leapfrog(center), frozenset(removed), frozenset(added))

    @classmethod
    def split(cls, left: int, right: int, removed=(), added=()):
        return cls(SplitFountain(left, right), frozenset(removed), frozenset(added))

    def to_json(self):
        return {
            "base": self.base.to_json(),
            "removed": sorted(e.to_json() for e in self.removed),
            "added": sorted(e.to_json() for e in self.added),
        }

    @classmethod
    def from_json(cls, data) -> "TriangulationDesc":
        if not isinstance(data, dict) or "base" not in data:
            raise InvalidDescriptor(f"descriptor JSON needs a 'base', got {type(data).__name__}")
        base = base_from_json(data["base"])
        removed = frozenset(Edge.from_json(x) for x in data.get("removed", []))
        added = frozenset(Edge.from_json(x) for x in data.get("added", []))
        return cls(base, removed, added)


@dataclass(frozen=True)
class Quadrilateral:
    """Four vertices v0 < v1 < v2 < v3 with realized boundary and a diagonal."""

    v0: int
    v1: int
    v2: int
    v3: int
    diagonal: Edge

    @property
    def vertices(self) -> tuple[int, int, int, int]:
        return (self.v0, self.v1, self.v2, self.v3)

    @property
    def other_diagonal(self) -> Edge:
        if self.diagonal == Edge(self.v0, self.v2):
            return Edge(self.v1, self.v3)
        return Edge(self.v0, self.v2)

    def boundary(self) -> tuple[Edge, Edge, Edge, Edge]:
        return (
            Edge(self.v0, self.v1),
            Edge(self.v1, self.v2),
            Edge(self.v2, self.v3),
            Edge(self.v0, self.v3),
        )


# ---------------------------------------------------------------------------
# Membership and window queries
# ---------------------------------------------------------------------------


def contains(t: TriangulationDesc, e: Edge) -> bool:
    """Membership of e in the realized arc set (base minus removed, plus added)."""
    if e in t.added:
        return True
    return t.base.contains(e) and e not in t.removed


def is_edge(t: TriangulationDesc, e: Edge) -> bool:
    """Realized arc or side of the infinity-gon."""
    return e.is_side() or contains(t, e)


def _check_window(a: int, b: int, budget) -> None:
    if a >= b:
        raise BadEdge(f"window needs a < b, got [{a}, {b}]")
    limit = DEFAULT_WINDOW_BUDGET if budget is None else budget
    if b - a > limit:
        raise WindowTooLarge(f"window [{a}, {b}] exceeds materialization budget {limit}")


def arcs_in_window(t: TriangulationDesc, a: int, b: int, budget=None) -> set[Edge]:
    """All realized arcs (i, j) with a <= i < j <= b."""
    _check_window(a, b, budget)
    out = {e for e in t.base.arcs_in_window(a, b) if e not in t.removed}
    out.update(e for e in t.added if a <= e.left and e.right <= b)
    return out


def sides_in_window(a: int, b: int) -> list[Edge]:
    return [side(i) for i in range(a, b)]


def bridge_of(t: TriangulationDesc) -> Edge | None:
    """The frozen split-fountain bridge, when the base has one."""
    if isinstance(t.base, SplitFountain) and t.base.right >= t.base.left + 2:
        return Edge(t.base.left, t.base.right)
    return None


def is_mutable(t: TriangulationDesc, e: Edge) -> bool:
    return contains(t, e) and e != bridge_of(t)


# ---------------------------------------------------------------------------
# Partner scans (closed form on the base, finite corrections from edits)
# ---------------------------------------------------------------------------


def min_right_partner(t: TriangulationDesc, i: int, lower: int) -> Edge | None:
    """Smallest y > lower with (i, y) realized."""
    best = None
    for e in t.added:
        if e.left == i and e.right > lower and (best is None or e.right < best):
            best = e.right
    y = t.base.next_right(i, lower)
    while y is not None and Edge(i, y) in t.removed:
        y = t.base.next_right(i, y)
    if y is not None and (best is None or y < best):
        best = y
    return Edge(i, best) if best is not None else None


def max_left_partner(t: TriangulationDesc, j: int, upper: int) -> Edge | None:
    """Largest x < upper with (x, j) realized."""
    best = None
    for e in t.added:
        if e.right == j and e.left < upper and (best is None or e.left > best):
            best = e.left
    x = t.base.prev_left(j, upper)
    while x is not None and Edge(x, j) in t.removed:
        x = t.base.prev_left(j, x)
    if x is not None and (best is None or x > best):
        best = x
    return Edge(best, j) if best is not None else None


def _max_right_partner_below(t: TriangulationDesc, i: int, upper: int) -> Edge | None:
    """Largest y < upper with (i, y) realized."""
    best = None
    for e in t.added:
        if e.left == i and e.right < upper and (best is None or e.right > best):
            best = e.right
    y = t.base.max_right_below(i, upper)
    while y is not None and Edge(i, y) in t.removed:
        y = t.base.max_right_below(i, y)
    if y is not None and (best is None or y > best):
        best = y
    return Edge(i, best) if best is not None else None


# ---------------------------------------------------------------------------
# Minimal covers, quadrilaterals, flips
# ---------------------------------------------------------------------------


def minimal_arc_over(t: TriangulationDesc, e: Edge) -> tuple[Edge, PassSide]:
    """The unique minimal realized arc passing over e, with its pass side.

    A minimal cover shares the left endpoint (passing over to the right) or
    the right endpoint (to the left); candidates of both shapes would cross,
    so in a valid triangulation at most one exists.
    """
    if not is_edge(t, e):
        raise NotInTriangulation(f"{e} is neither a realized arc nor a side")
    right_cand = min_right_partner(t, e.left, e.right)
    left_cand = max_left_partner(t, e.right, e.left)
    if right_cand is not None and left_cand is not None:
        raise InvalidDescriptor(
            f"covers {right_cand} and {left_cand} of {e} cross; descriptor is not a triangulation"
        )
    if right_cand is not None:
        return right_cand, PassSide.RIGHT
    if left_cand is not None:
        return left_cand, PassSide.LEFT
    raise NoCover(f"no realized arc passes over {e}")


def quadrilateral_of(t: TriangulationDesc, e: Edge) -> Quadrilateral:
    """The unique quadrilateral with diagonal e (e realized and mutable)."""
    if e.is_side():
        raise FrozenArc(f"side {e} is not flippable")
    if not contains(t, e):
        raise NotInTriangulation(f"{e} is not a realized arc")
    if e == bridge_of(t):
        raise FrozenArc(f"split-fountain bridge {e} is frozen and cannot be flipped")

    # Lower triangle: its apex is the largest y < e.right with (e.left, y)
    # realized (or the side vertex e.left + 1); the closing edge (y, e.right)
    # is then forced to be realized or a side.
    below = _max_right_partner_below(t, e.left, e.right)
    p = below.right if below is not None else e.left + 1
    closing = Edge(p, e.right) if p < e.right else None
    if closing is None or not is_edge(t, closing):
        raise InvalidDescriptor(f"no lower triangle under {e}; descriptor is not a triangulation")

    cover, pside = minimal_arc_over(t, e)
    if pside is PassSide.RIGHT:
        # upper triangle (e.left, e.right, cover.right)
        return Quadrilateral(e.left, p, e.right, cover.right, diagonal=e)
    # upper triangle (cover.left, e.left, e.right)
    return Quadrilateral(cover.left, e.left, p, e.right, diagonal=e)


def flip(t: TriangulationDesc, e: Edge) -> tuple[TriangulationDesc, Edge]:
    """Replace e by the other diagonal of its quadrilateral.

    Edit sets are renormalized so the result is canonical: removing a base
    arc goes into `removed`, re-adding one comes back out of it.
    """
    quad = quadrilateral_of(t, e)
    new_arc = quad.other_diagonal
    removed, added = set(t.removed), set(t.added)
    if t.base.contains(e):
        removed.add(e)
    else:
        added.discard(e)
    if t.base.contains(new_arc):
        removed.discard(new_arc)
    else:
        added.add(new_arc)
    return TriangulationDesc(t.base, frozenset(removed), frozenset(added)), new_arc


# ---------------------------------------------------------------------------
# Classification and fountain machinery
# ---------------------------------------------------------------------------


def classify(t: TriangulationDesc) -> TriangulationClass:
    """The trichotomy class; finite edits never change it."""
    if isinstance(t.base, Leapfrog):
        return LocallyFinite()
    if isinstance(t.base, Fountain):
        return FountainAt(t.base.vertex)
    return SplitFountainAt(t.base.left, t.base.right)


def fountain_arc_sequence(t: TriangulationDesc, pside: PassSide, count: int) -> list[Edge]:
    """First `count` fountain arcs on one side, each the minimal cover of the last."""
    cls = classify(t)
    if isinstance(cls, FountainAt):
        vertex = cls.vertex
    elif isinstance(cls, SplitFountainAt):
        vertex = cls.right if pside is PassSide.RIGHT else cls.left
    else:
        raise NotAFountain("locally finite triangulations have no fountain arcs")
    out: list[Edge] = []
    if pside is PassSide.RIGHT:
        bound = vertex + 1
        while len(out) < count:
            e = min_right_partner(t, vertex, bound)
            out.append(e)
            bound = e.right
    else:
        bound = vertex - 1
        while len(out) < count:
            e = max_left_partner(t, vertex, bound)
            out.append(e)
            bound = e.left
    return out


def minimal_arc_chain(t: TriangulationDesc, start: Edge, count: int) -> list[Edge]:
    """Chain e, cover(e), cover(cover(e)), ... of length `count`."""
    if not isinstance(classify(t), LocallyFinite):
        raise NotLocallyFinite("minimal arc chains are only unbounded in locally finite triangulations")
    if not is_edge(t, start):
        raise NotInTriangulation(f"{start} is neither a realized arc nor a side")
    chain = [start]
    while len(chain) < count:
        cover, _ = minimal_arc_over(t, chain[-1])
        chain.append(cover)
    return chain


# ---------------------------------------------------------------------------
# Crossing oracle against the full (infinite) realized set
# ---------------------------------------------------------------------------


def realized_crossing_exists(t: TriangulationDesc, e: Edge) -> bool:
    """Does e cross some realized arc?  Exact, including out-of-window arcs.

    If e crosses infinitely many base arcs, finitely many removals cannot
    save it; otherwise the finitely many base crossings are checked against
    the removed set, and added arcs are scanned directly.
    """
    for arc in t.added:
        if crosses(e, arc):
            return True
    finite, infinite = t.base.crossing_arcs(e)
    if infinite:
        return True
    return any(arc not in t.removed for arc in finite)


def validate_window(t: TriangulationDesc, a: int, b: int, budget=None) -> bool:
    """Non-crossing plus local maximality on [a, b].

    Maximality: every absent arc inside the window must cross some realized
    arc (realized arcs reaching in from outside the window count).
    """
    arcs = sorted(arcs_in_window(t, a, b, budget))
    for e1, e2 in itertools.combinations(arcs, 2):
        if crosses(e1, e2):
            return False
    for i in range(a, b - 1):
        for j in range(i + 2, b + 1):
            e = Edge(i, j)
            if not contains(t, e) and not realized_crossing_exists(t, e):
                return False
    return True


def validate_descriptor(t: TriangulationDesc, budget=None) -> None:
    """Raise InvalidDescriptor unless the realized set is a triangulation.

    Added arcs must cross nothing realized; the edited region must stay
    locally maximal.  Outside the edit hull the base family is already a
    triangulation, so the window check around the hull is decisive.
    """
    for arc in t.added:
        if realized_crossing_exists(t, arc):
            raise InvalidDescriptor(f"added arc {arc} crosses a realized arc")
    edits = t.removed | t.added
    if not edits:
        return
    a = min(e.left for e in edits) - 2
    b = max(e.right for e in edits) + 2
    limit = DEFAULT_WINDOW_BUDGET if budget is None else budget
    if b - a > limit:
        raise WindowTooLarge(f"edit hull [{a}, {b}] exceeds materialization budget {limit}")
    if not validate_window(t, a, b, budget):
        raise InvalidDescriptor("realized set is not locally maximal around the edits")


# ---------------------------------------------------------------------------
# Mutation equivalence and flip-sequence search
# ---------------------------------------------------------------------------


def mutation_equivalent(t1: TriangulationDesc, t2: TriangulationDesc) -> bool:
    """Finite symmetric difference <=> identical base families."""
    return t1.base == t2.base


def _frame_regions(t1: TriangulationDesc, t2: TriangulationDesc) -> list[tuple[int, int]]:
    """Polygon regions [A, B], each under an arc realized in both descriptors,
    that jointly cover every edit of either descriptor."""
    edits = t1.removed | t1.added | t2.removed | t2.added
    if not edits:
        return []
    removed_any = t1.removed | t2.removed
    base = t1.base
    regions = []
    if isinstance(base, Leapfrog):
        c = base.center
        lo = min(min(e.left for e in edits), c - 1)
        hi = max(max(e.right for e in edits), c + 1)
        n = max(c - lo, hi - c)
        while Edge(c - n, c + n) in removed_any:
            n += 1
        regions.append((c - n, c + n))
    else:
        if isinstance(base, Fountain):
            l = r = base.vertex
        else:
            l, r = base.left, base.right
        left_edits = [e for e in edits if e.right <= l]
        right_edits = [e for e in edits if e.left >= r]
        gap_edits = [e for e in edits if l <= e.left and e.right <= r]
        if isinstance(base, SplitFountain) and gap_edits:
            regions.append((l, r))
        if left_edits:
            x = min(min(e.left for e in left_edits), l - 2) - 1
            while Edge(x, l) in removed_any:
                x -= 1
            regions.append((x, l))
        if right_edits:
            y = max(max(e.right for e in right_edits), r + 2) + 1
            while Edge(r, y) in removed_any:
                y += 1
            regions.append((r, y))
    return regions


def _fan_region(t: TriangulationDesc, a: int, b: int):
    """Flip the polygon under the frame arc (a, b) to the fan at vertex a.

    Returns (descriptor, arcs flipped in order, arcs created in order).
    """
    flipped, created = [], []
    while True:
        zs = [a + 1]
        z = a + 1
        while z < b:
            nxt = min_right_partner(t, a, z)
            if nxt is None or nxt.right > b:
                break
            z = nxt.right
            zs.append(z)
        if zs[-1] != b:
            zs.append(b)  # frame arc (a, b) closes the polygon
        gap = next(((u, v) for u, v in zip(zs, zs[1:]) if v >= u + 2), None)
        if gap is None:
            return t, flipped, created
        arc = Edge(*gap)
        t, new_arc = flip(t, arc)
        flipped.append(arc)
        created.append(new_arc)


def find_flip_sequence(t1: TriangulationDesc, t2: TriangulationDesc) -> list[Edge]:
    """A finite flip sequence carrying t1's realized set onto t2's.

    Both descriptors are normalized region by region to the fan triangulation
    at the region's left vertex; the t2 normalization is then undone in
    reverse (flips are involutive, so undoing a flip means flipping the arc
    it created).
    """
    if not mutation_equivalent(t1, t2):
        raise NotEquivalent("descriptors with different base families are never flip-connected")
    if t1 == t2:
        return []
    seq: list[Edge] = []
    undo: list[Edge] = []
    w1, w2 = t1, t2
    for a, b in _frame_regions(t1, t2):
        w1, flipped1, _ = _fan_region(w1, a, b)
        w2, _, created2 = _fan_region(w2, a, b)
        seq.extend(flipped1)
        undo.extend(created2)
    if w1 != w2:
        raise InvalidDescriptor("region normalization failed to reconcile descriptors")
    seq.extend(reversed(undo))
    check = t1
    for arc in seq:
        check, _ = flip(check, arc)
    if check != t2:
        raise InvalidDescriptor("flip sequence verification failed")
    return seq
