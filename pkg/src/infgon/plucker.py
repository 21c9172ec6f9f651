"""The commutative coordinate-ring side of the story.

Pluecker coordinates D[i,j] of the doubly-infinite Grassmannian of planes
are tracked through flips: every cluster variable in this rank-2 setting is a
Pluecker coordinate, and a diagonal flip emits an instance of the short
Pluecker relation.  Relations are verified exactly by expanding coordinates
into 2x2 minors of a generic two-row matrix (integer coefficients, sparse
monomials); that expansion is a faithful representation of the coordinate
ring, so it decides equality outright.

Laurent expansions of cluster variables in an initial window cluster are
computed with exact sparse Laurent polynomials over the window's edge
variables, using the exchange relation and exact division.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .arcs import Edge
from .errors import BadIndexOrder, BudgetExceeded, RelationCheckFailed
from .triangulation import (
    FountainAt,
    LocallyFinite,
    Quadrilateral,
    SplitFountainAt,
    TriangulationClass,
    TriangulationDesc,
    arcs_in_window,
    bridge_of,
    contains,
    flip,
    quadrilateral_of,
    sides_in_window,
)

PluckerLabel = Edge


# ---------------------------------------------------------------------------
# Exact polynomials in the matrix entries x[row][col]
# ---------------------------------------------------------------------------


class MatrixPoly:
    """Sparse integer polynomial in commuting variables x[row][col].

    Monomials are canonical sorted tuples of (row, col) generators with
    multiplicity, so equality is structural.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {m: c for m, c in (terms or {}).items() if c != 0}

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({(): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return MatrixPoly(out)

    def __sub__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) - c
        return MatrixPoly(out)

    def __mul__(self, other):
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(sorted(m1 + m2))
                out[m] = out.get(m, 0) + c1 * c2
        return MatrixPoly(out)

    def __eq__(self, other):
        return isinstance(other, MatrixPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for m in sorted(self.terms):
            c = self.terms[m]
            mono = "*".join(f"x[{r}][{col}]" for r, col in m) or "1"
            bits.append(f"{'+' if c >= 0 else '-'} {abs(c)}*{mono}")
        return " ".join(bits)


def plucker_expand(label: PluckerLabel) -> MatrixPoly:
    """D[i,j] = x[1][i] x[2][j] - x[1][j] x[2][i]."""
    i, j = label.as_pair()
    return MatrixPoly(
        {
            tuple(sorted(((1, i), (2, j)))): 1,
            tuple(sorted(((1, j), (2, i)))): -1,
        }
    )


def verify_short_plucker(i: int, k: int, j: int, l: int) -> bool:
    """D_ij D_kl = D_ik D_jl + D_il D_kj for i < k < j < l, by expansion."""
    if not (i < k < j < l):
        raise BadIndexOrder(f"need i < k < j < l, got ({i}, {k}, {j}, {l})")
    lhs = plucker_expand(Edge(i, j)) * plucker_expand(Edge(k, l))
    rhs = plucker_expand(Edge(i, k)) * plucker_expand(Edge(j, l)) + plucker_expand(
        Edge(i, l)
    ) * plucker_expand(Edge(k, j))
    return (lhs - rhs).is_zero()


# ---------------------------------------------------------------------------
# Cluster state and exchange relations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ExchangeRelation:
    """Instantiated short Pluecker relation D_new D_old = D_a D_b + D_c D_d."""

    old: PluckerLabel
    new: PluckerLabel
    quad: Quadrilateral
    rhs: tuple[tuple[PluckerLabel, PluckerLabel], tuple[PluckerLabel, PluckerLabel]]

    def to_json(self):
        return {
            "lhs": [self.new.to_json(), self.old.to_json()],
            "rhs": [[a.to_json(), b.to_json()] for a, b in self.rhs],
        }

    def pretty(self) -> str:
        def d(e):
            return f"D^{{{e.left},{e.right}}}"

        (a, b), (c, dd) = self.rhs
        return f"{d(self.new)}{d(self.old)} = {d(a)}{d(b)} + {d(c)}{d(dd)}"


def relation_for_quad(quad: Quadrilateral) -> ExchangeRelation:
    v0, v1, v2, v3 = quad.vertices
    return ExchangeRelation(
        old=quad.diagonal,
        new=quad.other_diagonal,
        quad=quad,
        rhs=((Edge(v0, v1), Edge(v2, v3)), (Edge(v0, v3), Edge(v1, v2))),
    )


def check_relation(rel: ExchangeRelation) -> None:
    lhs = plucker_expand(rel.new) * plucker_expand(rel.old)
    (a, b), (c, d) = rel.rhs
    rhs = plucker_expand(a) * plucker_expand(b) + plucker_expand(c) * plucker_expand(d)
    if not (lhs - rhs).is_zero():
        raise RelationCheckFailed(f"exchange relation failed to expand to zero: {rel.pretty()}")


@dataclass(frozen=True)
class ClusterState:
    """Triangulation descriptor plus flip history.

    In the rank-2 setting the variable attached to a realized arc (i, j) is
    always the Pluecker coordinate D[i,j], so the arc-to-variable map needs no
    storage; coefficients are the side coordinates (plus the bridge in the
    split case).
    """

    desc: TriangulationDesc
    history: tuple[ExchangeRelation, ...] = field(default_factory=tuple)

    def variable_label(self, arc: Edge) -> PluckerLabel:
        return arc

    def coefficient_bridge(self) -> Edge | None:
        return bridge_of(self.desc)


def exchange_flip(state: ClusterState, e: Edge) -> tuple[ClusterState, ExchangeRelation]:
    """Flip an arc, emit and verify the instantiated exchange relation."""
    quad = quadrilateral_of(state.desc, e)
    desc, _new = flip(state.desc, e)
    rel = relation_for_quad(quad)
    check_relation(rel)
    return ClusterState(desc, state.history + (rel,)), rel


def subalgebra_generators(cls: TriangulationClass):
    """Predicate selecting the Pluecker coordinates the class generates."""
    if isinstance(cls, LocallyFinite):
        return lambda label: True
    if isinstance(cls, FountainAt):
        k = cls.vertex
        return lambda label: label.right <= k or label.left >= k
    if isinstance(cls, SplitFountainAt):
        l, r = cls.left, cls.right
        return lambda label: (
            label.right <= l or (l <= label.left and label.right <= r) or label.left >= r
        )
    raise TypeError(f"not a triangulation class: {cls!r}")


def reachable_variable_closure(
    state: ClusterState, a: int, b: int, max_descriptors: int = 20000
) -> set[PluckerLabel]:
    """All arc labels reachable by flip sequences whose quadrilaterals stay in [a, b].

    Exhaustive BFS over descriptors; the label set is the union of realized
    in-window arcs over every reachable descriptor.
    """
    start = state.desc
    seen = {start}
    labels = set(arcs_in_window(start, a, b))
    frontier = [start]
    while frontier:
        nxt = []
        for t in frontier:
            for arc in sorted(arcs_in_window(t, a, b)):
                if arc == bridge_of(t):
                    continue
                quad = quadrilateral_of(t, arc)
                if quad.v0 < a or quad.v3 > b:
                    continue
                t2, new_arc = flip(t, arc)
                labels.add(new_arc)
                if t2 not in seen:
                    seen.add(t2)
                    nxt.append(t2)
                    if len(seen) > max_descriptors:
                        raise BudgetExceeded(
                            f"reachability search exceeded {max_descriptors} descriptors"
                        )
        frontier = nxt
    return labels


# ---------------------------------------------------------------------------
# Laurent expansion in an initial window cluster
# ---------------------------------------------------------------------------


class LaurentPoly:
    """Exact sparse Laurent polynomial over edge variables x_e.

    Monomials are canonical tuples of ((i, j), exponent) sorted by edge, with
    exponents possibly negative.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {m: c for m, c in (terms or {}).items() if c != 0}

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({(): 1})

    @classmethod
    def variable(cls, e: Edge):
        return cls({((e.as_pair(), 1),): 1})

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return LaurentPoly(out)

    def __sub__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) - c
        return LaurentPoly(out)

    @staticmethod
    def _mul_mono(m1, m2):
        exp = dict(m1)
        for v, e in m2:
            exp[v] = exp.get(v, 0) + e
        return tuple(sorted((v, e) for v, e in exp.items() if e != 0))

    def __mul__(self, other):
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = self._mul_mono(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return LaurentPoly(out)

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def exact_div(self, divisor: "LaurentPoly") -> "LaurentPoly | None":
        """Exact quotient in the Laurent ring, or None if not divisible.

        Leading-term cancellation in lexicographic order over the variables
        of both operands.  When the quotient exists each step peels off one
        of its terms, so the step cap is a pure safety net for the
        non-divisible case (lex on Laurent exponents is not a well-order).
        """
        if divisor.is_zero():
            return None
        if self.is_zero():
            return LaurentPoly.zero()
        variables = sorted({v for m in (*self.terms, *divisor.terms) for v, _ in m})
        vindex = {v: k for k, v in enumerate(variables)}

        def vec(m):
            out = [0] * len(variables)
            for v, e in m:
                out[vindex[v]] = e
            return tuple(out)

        def unvec(vv):
            return tuple(sorted((variables[k], e) for k, e in enumerate(vv) if e))

        rem = {vec(m): c for m, c in self.terms.items()}
        div = {vec(m): c for m, c in divisor.terms.items()}
        dlead = max(div)
        dcoeff = div[dlead]
        quotient = {}
        cap = 4 * (len(rem) + 1) * (len(div) + 1) + 1000
        for _ in range(cap):
            if not rem:
                return LaurentPoly(quotient)
            rlead = max(rem)
            rcoeff = rem[rlead]
            if rcoeff % dcoeff != 0:
                return None
            qv = tuple(a - b for a, b in zip(rlead, dlead))
            qcoeff = rcoeff // dcoeff
            qm = unvec(qv)
            quotient[qm] = quotient.get(qm, 0) + qcoeff
            for mv, c in div.items():
                mm = tuple(a + b for a, b in zip(qv, mv))
                nc = rem.get(mm, 0) - qcoeff * c
                if nc == 0:
                    rem.pop(mm, None)
                else:
                    rem[mm] = nc
        return None

    def monomial_split(self) -> tuple["LaurentPoly", dict]:
        """Write self = numerator / monomial with a genuine polynomial numerator."""
        neg = {}
        for m in self.terms:
            for v, e in m:
                if e < 0:
                    neg[v] = max(neg.get(v, 0), -e)
        shift = tuple(sorted(neg.items()))
        num = self * LaurentPoly({shift: 1}) if shift else self
        return num, neg

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for m in sorted(self.terms):
            c = self.terms[m]
            mono = "*".join(
                f"x_({v[0]},{v[1]})" + (f"^{e}" if e != 1 else "") for v, e in m
            ) or "1"
            bits.append(f"{'+' if c >= 0 else '-'} {abs(c)}*{mono}")
        return " ".join(bits)


@dataclass(frozen=True)
class RationalExpr:
    """Canonical numerator / monomial-denominator form of a Laurent polynomial."""

    numerator: LaurentPoly
    denominator: dict  # variable pair -> positive exponent

    @classmethod
    def from_laurent(cls, p: LaurentPoly) -> "RationalExpr":
        num, den = p.monomial_split()
        return cls(num, den)

    def denominator_is_monomial(self) -> bool:
        return True  # structural: the split form always has a monomial denominator

    def __eq__(self, other):
        return (
            isinstance(other, RationalExpr)
            and self.numerator == other.numerator
            and self.denominator == other.denominator
        )

    def pretty(self) -> str:
        if not self.denominator:
            return repr(self.numerator)
        den = "*".join(
            f"x_({v[0]},{v[1]})" + (f"^{e}" if e != 1 else "") for v, e in sorted(self.denominator.items())
        )
        return f"({self.numerator!r}) / ({den})"


def laurent_expand(
    state: ClusterState, flips: list[Edge], target: Edge, window: tuple[int, int]
) -> RationalExpr:
    """Expand the variable attached to `target` after `flips` in the initial window cluster.

    Each flip applies the exchange relation x' = (prod(in) + prod(out)) / x
    with exact Laurent division; the Laurent phenomenon guarantees the
    division is exact, and a failure raises RelationCheckFailed.
    """
    a, b = window
    desc = state.desc
    variables: dict[Edge, LaurentPoly] = {}
    for e in sorted(arcs_in_window(desc, a, b)) + sides_in_window(a, b):
        variables[e] = LaurentPoly.variable(e)

    def var(e: Edge) -> LaurentPoly:
        if e not in variables:
            raise RelationCheckFailed(f"edge {e} is outside the expansion window {window}")
        return variables[e]

    for arc in flips:
        quad = quadrilateral_of(desc, arc)
        if quad.v0 < a or quad.v3 > b:
            raise RelationCheckFailed(f"quadrilateral of {arc} leaves the window {window}")
        desc, new_arc = flip(desc, arc)
        rel = relation_for_quad(quad)
        (p, q), (r, s) = rel.rhs
        numerator = var(p) * var(q) + var(r) * var(s)
        quotient = numerator.exact_div(var(arc))
        if quotient is None:
            raise RelationCheckFailed(f"exchange numerator not divisible by x_{arc}")
        old = variables.pop(arc)
        del old
        variables[new_arc] = quotient

    if not (target.is_side() or contains(desc, target)):
        raise RelationCheckFailed(f"target {target} is not an edge of the final triangulation")
    return RationalExpr.from_laurent(var(target))
