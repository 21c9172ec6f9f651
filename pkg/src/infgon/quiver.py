"""Exchange quivers of triangulations: construction, mutation, B-matrix.

A quiver value is always a finite window of the infinite exchange quiver.
Vertices are the sides and realized arcs with both endpoints in the window;
sides are frozen, and so is the split-fountain bridge.  Arrows come from the
clockwise orientation of the triangles of the triangulation: a triangle with
vertices x < y < z contributes (x,y) -> (x,z) -> (y,z) -> (x,y), and arrows
between two frozen vertices are discarded.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arcs import Edge, PassSide
from .errors import FrozenArc, FrozenVertex, NoCover, NotInTriangulation
from .triangulation import (
    FountainAt,
    Leapfrog,
    LocallyFinite,
    SplitFountain,
    TriangulationDesc,
    arcs_in_window,
    bridge_of,
    classify,
    contains,
    is_edge,
    minimal_arc_over,
    sides_in_window,
)


@dataclass(frozen=True)
class IceQuiver:
    labels: tuple[Edge, ...]
    frozen: tuple[bool, ...]
    b: tuple[tuple[int, ...], ...]

    def index(self, label: Edge) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise NotInTriangulation(f"{label} is not a vertex of this quiver") from None

    def __len__(self) -> int:
        return len(self.labels)

    def arrows(self) -> list[tuple[Edge, Edge, int]]:
        """Signed-positive arrow list (source, target, multiplicity)."""
        out = []
        n = len(self.labels)
        for u in range(n):
            for v in range(n):
                if self.b[u][v] > 0:
                    out.append((self.labels[u], self.labels[v], self.b[u][v]))
        return out

    def arrow_set(self) -> set[tuple[tuple[int, int], tuple[int, int]]]:
        return {(u.as_pair(), v.as_pair()) for u, v, _ in self.arrows()}

    def mutate(self, k) -> "IceQuiver":
        """Fomin-Zelevinsky mutation at a mutable vertex (index or label)."""
        if isinstance(k, Edge):
            k = self.index(k)
        if self.frozen[k]:
            raise FrozenVertex(f"cannot mutate at frozen vertex {self.labels[k]}")
        n = len(self.labels)
        old = self.b
        new = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                if i == k or j == k:
                    new[i][j] = -old[i][j]
                else:
                    new[i][j] = old[i][j]
                    if old[i][k] * old[k][j] > 0:
                        sign = 1 if old[i][k] > 0 else -1
                        new[i][j] += sign * old[i][k] * old[k][j]
        for i in range(n):
            for j in range(n):
                if self.frozen[i] and self.frozen[j]:
                    new[i][j] = 0
        return IceQuiver(self.labels, self.frozen, tuple(tuple(r) for r in new))

    def relabel(self, old: Edge, new: Edge) -> "IceQuiver":
        """Rename one vertex and restore the canonical label ordering."""
        labels = [new if lab == old else lab for lab in self.labels]
        order = sorted(range(len(labels)), key=lambda i: labels[i].as_pair())
        b = tuple(tuple(self.b[i][j] for j in order) for i in order)
        return IceQuiver(
            tuple(labels[i] for i in order),
            tuple(self.frozen[i] for i in order),
            b,
        )

    def restrict(self, keep) -> "IceQuiver":
        """Full subquiver on the labels selected by the predicate `keep`."""
        idx = [i for i, lab in enumerate(self.labels) if keep(lab)]
        b = tuple(tuple(self.b[i][j] for j in idx) for i in idx)
        return IceQuiver(
            tuple(self.labels[i] for i in idx),
            tuple(self.frozen[i] for i in idx),
            b,
        )

    def to_json(self):
        return {
            "vertices": [
                {"label": lab.to_json(), "frozen": fr} for lab, fr in zip(self.labels, self.frozen)
            ],
            "b": [list(row) for row in self.b],
        }


def build_exchange_quiver(t: TriangulationDesc, a: int, b: int, budget=None) -> IceQuiver:
    """Window [a, b] of the exchange quiver of t.

    Triangles are enumerated as (edge, minimal cover) pairs: every triangle
    of the triangulation is the upper triangle of each of its two lower
    edges, so scanning covers of all window edges finds each in-window
    triangle (and deduplication by vertex triple removes the double count).
    """
    arcs = arcs_in_window(t, a, b, budget)
    vertices = sorted(sides_in_window(a, b) + list(arcs))
    bridge = bridge_of(t)
    frozen = tuple(e.is_side() or e == bridge for e in vertices)
    index = {e: i for i, e in enumerate(vertices)}

    triangles = set()
    for e in vertices:
        try:
            cover, _ = minimal_arc_over(t, e)
        except NoCover:
            continue
        verts = tuple(sorted({e.left, e.right, cover.left, cover.right}))
        if len(verts) == 3 and verts[0] >= a and verts[2] <= b:
            triangles.add(verts)

    n = len(vertices)
    bmat = [[0] * n for _ in range(n)]
    for x, y, z in sorted(triangles):
        cycle = ((Edge(x, y), Edge(x, z)), (Edge(x, z), Edge(y, z)), (Edge(y, z), Edge(x, y)))
        for u, v in cycle:
            iu, iv = index[u], index[v]
            if frozen[iu] and frozen[iv]:
                continue
            bmat[iu][iv] += 1
            bmat[iv][iu] -= 1
    return IceQuiver(tuple(vertices), frozen, tuple(tuple(r) for r in bmat))


def b_entry(t: TriangulationDesc, mn: Edge, ij: Edge) -> int:
    """Closed-form B-matrix entry for row mn, column ij (ij mutable).

    Nonzero exactly on the four boundary edges of ij's quadrilateral: the
    minimal cover of ij, the two edges ij minimally covers, and the flank
    edge of the upper triangle (the edge sharing the cover's far endpoint).
    The flank case is forced by the triangle orientation even though no
    passing-over relation ties it to ij.
    """
    if not contains(t, ij) or not ij.is_arc():
        raise NotInTriangulation(f"{ij} is not a realized arc")
    if ij == bridge_of(t):
        raise FrozenArc(f"bridge {ij} is frozen; B has no column for it")
    if not is_edge(t, mn):
        raise NotInTriangulation(f"{mn} is neither a realized arc nor a side")
    if mn == ij:
        return 0

    cover, cside = minimal_arc_over(t, ij)
    try:
        mn_cover, mn_side = minimal_arc_over(t, mn)
    except NoCover:
        mn_cover, mn_side = None, None

    if mn == cover:
        return 1 if cside is PassSide.LEFT else -1
    if mn_cover == ij:
        return 1 if mn_side is PassSide.RIGHT else -1
    if cside is PassSide.RIGHT and mn == Edge(ij.right, cover.right):
        return 1
    if cside is PassSide.LEFT and mn == Edge(cover.left, ij.left):
        return -1
    return 0


def component_count(t: TriangulationDesc) -> int:
    """1, 2 or 3 connected components, by the trichotomy class."""
    cls = classify(t)
    if isinstance(cls, LocallyFinite):
        return 1
    if isinstance(cls, FountainAt):
        return 2
    return 3


def finite_component_empty(t: TriangulationDesc):
    """For split fountains: does the gap component lack mutable vertices?"""
    if not isinstance(t.base, SplitFountain):
        return None
    l, r = t.base.left, t.base.right
    bridge = Edge(l, r) if r >= l + 2 else None
    gap_arcs = {e for e in arcs_in_window(t, l, r) if e != bridge}
    return not gap_arcs


def same_component(t: TriangulationDesc, e1: Edge, e2: Edge) -> bool:
    """Connectivity test: some realized arc passes over both edges."""
    for e in (e1, e2):
        if not is_edge(t, e):
            raise NotInTriangulation(f"{e} is neither a realized arc nor a side")
    lo = min(e1.left, e2.left)
    hi = max(e1.right, e2.right)
    exclude = {e1, e2}
    for arc in t.added:
        if arc.left <= lo and hi <= arc.right and arc not in exclude:
            return True
    base = t.base
    if isinstance(base, SplitFountain):
        if lo >= base.right or hi <= base.left:
            return True
        if base.left <= lo and hi <= base.right:
            for g in range(max(hi, base.left + 2), base.right + 1):
                cand = Edge(base.left, g)
                if contains(t, cand) and cand not in exclude:
                    return True
        return False
    if isinstance(base, Leapfrog):
        return True
    # fountain: covers exist on either side of the vertex, never across it
    return lo >= base.vertex or hi <= base.vertex


def export_dot(q: IceQuiver) -> str:
    """Graphviz DOT; frozen vertices drawn as boxes."""
    lines = ["digraph exchange_quiver {"]
    for lab, fr in zip(q.labels, q.frozen):
        shape = "box" if fr else "ellipse"
        lines.append(f'  "{lab}" [shape={shape}];')
    for u, v, mult in q.arrows():
        lines.extend(f'  "{u}" -> "{v}";' for _ in range(mult))
    lines.append("}")
    return "\n".join(lines) + "\n"
