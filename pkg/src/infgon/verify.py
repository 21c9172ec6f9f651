"""Verification suites: figure goldens, property sweeps, randomized cross-checks.

Each suite returns a SuiteResult; the CLI `verify` command and the acceptance
test module both drive these functions, so there is exactly one
implementation of every check.  All randomness is seeded and deterministic.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .arcs import Edge, crosses
from .errors import NotQuasiCommuting
from .plucker import (
    ClusterState,
    exchange_flip,
    laurent_expand,
    plucker_expand,
    reachable_variable_closure,
    verify_short_plucker,
)
from .quantum import compatibility_check, l_entry, quantum_mutate, verify_quantum_plucker, verify_quasi_commute
from .quiver import b_entry, build_exchange_quiver, component_count
from .triangulation import (
    TriangulationDesc,
    arcs_in_window,
    bridge_of,
    flip,
    quadrilateral_of,
    validate_window,
)

# Hand-checked golden data: the arrow sets of two canonical quiver windows,
# the standard leapfrog quiver and a two-component fountain quiver, both on
# the window [-6, 7], written out vertex by vertex.
FIG1_WINDOW = (-6, 7)
FIG1_ARROWS = frozenset(
    {
        ((-1, 1), (0, 1)), ((-1, 0), (-1, 1)), ((-1, 1), (-1, 2)), ((-1, 2), (1, 2)),
        ((1, 2), (-1, 1)), ((-2, -1), (-2, 2)), ((-2, 2), (-1, 2)), ((-1, 2), (-2, -1)),
        ((-2, 2), (-2, 3)), ((-2, 3), (2, 3)), ((2, 3), (-2, 2)), ((-3, 3), (-2, 3)),
        ((-2, 3), (-3, -2)), ((-3, -2), (-3, 3)), ((-3, 3), (-3, 4)), ((-3, 4), (3, 4)),
        ((3, 4), (-3, 3)), ((-4, 4), (-3, 4)), ((-4, -3), (-4, 4)), ((-3, 4), (-4, -3)),
        ((-4, 4), (-4, 5)), ((-4, 5), (4, 5)), ((4, 5), (-4, 4)), ((-5, 5), (-4, 5)),
        ((-4, 5), (-5, -4)), ((-5, -4), (-5, 5)), ((-5, 5), (-5, 6)), ((-5, 6), (5, 6)),
        ((5, 6), (-5, 5)), ((-6, 6), (-5, 6)), ((-5, 6), (-6, -5)), ((-6, -5), (-6, 6)),
        ((-6, 6), (-6, 7)), ((-6, 7), (6, 7)), ((6, 7), (-6, 6)),
    }
)

FIG2_WINDOW = (-6, 7)
FIG2_DESC = TriangulationDesc.fountain(
    0,
    removed=[Edge(0, 2), Edge(0, 4), Edge(0, 6), Edge(-3, 0), Edge(-4, 0)],
    added=[Edge(1, 3), Edge(3, 5), Edge(5, 7), Edge(-5, -2), Edge(-4, -2)],
)
FIG2_ARROWS = frozenset(
    {
        ((0, 1), (0, 3)), ((0, 3), (0, 5)), ((0, 5), (3, 5)), ((3, 5), (4, 5)),
        ((3, 4), (3, 5)), ((0, 3), (1, 3)), ((1, 3), (2, 3)), ((1, 2), (1, 3)),
        ((1, 3), (0, 1)), ((3, 5), (0, 3)), ((0, 5), (0, 7)), ((0, 7), (5, 7)),
        ((5, 7), (0, 5)), ((5, 6), (5, 7)), ((5, 7), (6, 7)),
        ((-2, 0), (-1, 0)), ((-5, 0), (-2, 0)), ((-5, -2), (-5, 0)), ((-5, -4), (-5, -2)),
        ((-2, 0), (-5, -2)), ((-4, -3), (-4, -2)), ((-4, -2), (-3, -2)), ((-2, -1), (-2, 0)),
        ((-5, -2), (-4, -2)), ((-4, -2), (-5, -4)), ((-6, 0), (-5, 0)), ((-5, 0), (-6, -5)),
        ((-6, -5), (-6, 0)),
    }
)


@dataclass
class SuiteResult:
    name: str
    passed: bool
    checks: int
    seconds: float
    failures: list[str] = field(default_factory=list)

    def to_json(self):
        return {
            "name": self.name,
            "passed": self.passed,
            "checks": self.checks,
            "seconds": round(self.seconds, 3),
            "failures": self.failures[:20],
        }


def _run(name, fn) -> SuiteResult:
    start = time.perf_counter()
    checks, failures = fn()
    return SuiteResult(name, not failures, checks, time.perf_counter() - start, failures)


# ---------------------------------------------------------------------------
# Random descriptors
# ---------------------------------------------------------------------------


def random_descriptor(rng: random.Random, max_flips: int = 6, window=(-8, 8)) -> TriangulationDesc:
    """A canonical base with a few random flips applied inside the window."""
    kind = rng.choice(("fountain", "leapfrog", "split"))
    if kind == "fountain":
        t = TriangulationDesc.fountain(rng.randint(-2, 2))
    elif kind == "leapfrog":
        t = TriangulationDesc.leapfrog(rng.randint(-2, 2))
    else:
        l = rng.randint(-3, 0)
        t = TriangulationDesc.split(l, l + rng.randint(1, 4))
    a, b = window
    for _ in range(rng.randint(0, max_flips)):
        options = []
        for arc in sorted(arcs_in_window(t, a, b)):
            if arc == bridge_of(t):
                continue
            quad = quadrilateral_of(t, arc)
            if quad.v0 >= a and quad.v3 <= b:
                options.append(arc)
        if not options:
            break
        t, _ = flip(t, rng.choice(options))
    return t


def _flippable(t, a, b, margin=0):
    out = []
    for arc in sorted(arcs_in_window(t, a, b)):
        if arc == bridge_of(t):
            continue
        quad = quadrilateral_of(t, arc)
        if quad.v0 >= a + margin and quad.v3 <= b - margin:
            out.append((arc, quad))
    return out


# ---------------------------------------------------------------------------
# Suites
# ---------------------------------------------------------------------------


def suite_figures() -> SuiteResult:
    def body():
        failures = []
        q1 = build_exchange_quiver(TriangulationDesc.leapfrog(0), *FIG1_WINDOW)
        if q1.arrow_set() != set(FIG1_ARROWS):
            failures.append("leapfrog window quiver does not match figure 1 arrow set")
        q2 = build_exchange_quiver(FIG2_DESC, *FIG2_WINDOW)
        if q2.arrow_set() != set(FIG2_ARROWS):
            failures.append("fountain window quiver does not match figure 2 arrow set")
        comp = _window_components(q2)
        if comp != 2:
            failures.append(f"fountain window quiver has {comp} components, expected 2")
        return 3, failures

    return _run("figures", body)


def _window_components(q) -> int:
    n = len(q.labels)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u in range(n):
        for v in range(n):
            if q.b[u][v] != 0:
                parent[find(u)] = find(v)
    touched = {find(i) for i in range(n) if any(q.b[i][j] or q.b[j][i] for j in range(n))}
    return len(touched)


def suite_components(seed=0, count=50) -> SuiteResult:
    def body():
        rng = random.Random(seed)
        failures = []
        expected = {"fountain": 2, "leapfrog": 1, "split": 3}
        for case in range(count):
            t = random_descriptor(rng)
            want = expected[t.base.kind]
            got = component_count(t)
            if got != want:
                failures.append(f"case {case}: {t.base.kind} gave {got} components, wanted {want}")
        return count, failures

    return _run("components", body)


def suite_involution(seed=1, count=1000) -> SuiteResult:
    def body():
        rng = random.Random(seed)
        failures = []
        done = 0
        while done < count:
            t = random_descriptor(rng)
            options = _flippable(t, -8, 8)
            if not options:
                continue
            arc, quad = rng.choice(options)
            t2, new_arc = flip(t, arc)
            lo, hi = quad.v0 - 2, quad.v3 + 2
            if not validate_window(t2, lo, hi):
                failures.append(f"flip {arc} broke validity on [{lo},{hi}]")
            t3, back = flip(t2, new_arc)
            if t3 != t or back != arc:
                failures.append(f"flip at {arc} is not an involution")
            done += 1
        return count, failures

    return _run("involution", body)


def suite_commutation(seed=2, count=500) -> SuiteResult:
    def body():
        rng = random.Random(seed)
        a, b = -8, 8
        failures = []
        done = 0
        while done < count:
            t = random_descriptor(rng)
            options = _flippable(t, a, b, margin=2)
            if not options:
                continue
            arc, _ = rng.choice(options)
            q = build_exchange_quiver(t, a, b)
            t2, new_arc = flip(t, arc)
            mutated = q.mutate(arc).relabel(arc, new_arc)
            rebuilt = build_exchange_quiver(t2, a, b)
            keep = lambda lab: lab.left >= a + 2 and lab.right <= b - 2
            if mutated.restrict(keep) != rebuilt.restrict(keep):
                failures.append(f"mutation at {arc} disagrees with flip on interior")
            done += 1
        return count, failures

    return _run("commutation", body)


def suite_bmatrix(seed=3, count=100) -> SuiteResult:
    def body():
        rng = random.Random(seed)
        failures = []
        pairs = 0
        for case in range(count):
            t = random_descriptor(rng)
            c = rng.randint(-4, 4)
            w = rng.randint(6, 14)
            a, b = c - w // 2, c + (w + 1) // 2
            q = build_exchange_quiver(t, a, b)
            bridge = bridge_of(t)
            for ij in sorted(arcs_in_window(t, a, b)):
                if ij == bridge:
                    continue
                quad = quadrilateral_of(t, ij)
                if quad.v0 < a or quad.v3 > b:
                    continue  # column support leaves the window
                col = q.index(ij)
                for row, mn in enumerate(q.labels):
                    pairs += 1
                    if b_entry(t, mn, ij) != q.b[row][col]:
                        failures.append(f"case {case}: B[{mn},{ij}] closed form != arrow count")
        return pairs, failures

    return _run("bmatrix", body)


def suite_exchange(seed=4, count=500) -> SuiteResult:
    def body():
        rng = random.Random(seed)
        failures = []
        done = 0
        while done < count:
            state = ClusterState(random_descriptor(rng))
            options = _flippable(state.desc, -8, 8)
            if not options:
                continue
            arc, _ = rng.choice(options)
            # exchange_flip raises RelationCheckFailed if the relation does
            # not expand to zero; reaching the next line is the check.
            state, rel = exchange_flip(state, arc)
            lhs = plucker_expand(rel.new) * plucker_expand(rel.old)
            rhs = plucker_expand(rel.rhs[0][0]) * plucker_expand(rel.rhs[0][1]) + plucker_expand(
                rel.rhs[1][0]
            ) * plucker_expand(rel.rhs[1][1])
            if not (lhs - rhs).is_zero():
                failures.append(f"relation for {arc} did not expand to zero")
            done += 1
        return count, failures

    return _run("exchange", body)


def suite_plucker_sweep(radius=4) -> SuiteResult:
    def body():
        failures = []
        checks = 0
        idx = range(-radius, radius + 1)
        for i in idx:
            for k in idx:
                for j in idx:
                    for l in idx:
                        if not (i < k < j < l):
                            continue
                        checks += 2
                        if not verify_short_plucker(i, k, j, l):
                            failures.append(f"short relation fails at ({i},{k},{j},{l})")
                        if not verify_quantum_plucker(i, k, j, l):
                            failures.append(f"quantum relation fails at ({i},{k},{j},{l})")
        return checks, failures

    return _run("plucker", body)


def suite_ltable(radius=4) -> SuiteResult:
    def body():
        failures = []
        checks = 0
        edges = [Edge(i, j) for i in range(-radius, radius + 1) for j in range(i + 1, radius + 1)]
        for e1 in edges:
            for e2 in edges:
                checks += 1
                if crosses(e1, e2):
                    for fn in (l_entry, verify_quasi_commute):
                        try:
                            fn(e1, e2)
                            failures.append(f"{fn.__name__}({e1},{e2}) accepted a crossing pair")
                        except NotQuasiCommuting:
                            pass
                    continue
                table = l_entry(e1, e2)
                oracle = verify_quasi_commute(e1, e2)
                if table != oracle:
                    failures.append(f"L[{e1},{e2}]: table {table} != oracle {oracle}")
                if l_entry(e2, e1) != -table:
                    failures.append(f"L not skew at ({e1},{e2})")
        return checks, failures

    return _run("ltable", body)


def suite_compat(seed=5, count=50) -> SuiteResult:
    def body():
        rng = random.Random(seed)
        failures = []
        done = 0
        while done < count:
            t = random_descriptor(rng)
            c = rng.randint(-3, 3)
            w = rng.randint(8, 16)
            a, b = c - w // 2, c + (w + 1) // 2
            if not _flippable(t, a, b):
                continue  # no fully-supported column: vacuous window, re-roll
            if not compatibility_check(t, a, b):
                failures.append(f"case {done}: B^T L != 2*delta on [{a},{b}] for {t.to_json()}")
            done += 1
        return count, failures

    return _run("compat", body)


def suite_qmutation(seed=6, count=200) -> SuiteResult:
    def body():
        rng = random.Random(seed)
        failures = []
        done = 0
        while done < count:
            t = random_descriptor(rng)
            options = _flippable(t, -8, 8)
            if not options:
                continue
            arc, _ = rng.choice(options)
            _, expected = flip(t, arc)
            label, cert = quantum_mutate(t, arc)  # raises CertificateFailed on mismatch
            if label != expected:
                failures.append(f"quantum label {label} != flip arc {expected}")
            if cert.lhs != cert.rhs:
                failures.append(f"certificate sides differ for {arc}")
            done += 1
        return count, failures

    return _run("qmutation", body)


def suite_reachability() -> SuiteResult:
    def body():
        failures = []
        labels = reachable_variable_closure(ClusterState(TriangulationDesc.fountain(0)), -4, 4)
        bad = [lab for lab in labels if lab.left < 0 < lab.right]
        if bad:
            failures.append(f"fountain closure crossed the fountain: {sorted(bad)}")
        lf = reachable_variable_closure(ClusterState(TriangulationDesc.leapfrog(0)), -3, 3)
        want = {Edge(i, j) for i in range(-3, 2) for j in range(i + 2, 4)}
        if lf != want:
            failures.append("leapfrog closure missed in-window labels")
        return 2, failures

    return _run("reachability", body)


def suite_escape(kmax=10) -> SuiteResult:
    """The flip cascade on the standard fountain: mu_k ... mu_2 opens arcs at 1.

    Flipping (0, k) at stage k creates (1, k+1), because the quadrilateral of
    (0, k) at that stage is (0, 1, k, k+1).  A hand-written arc list for this
    cascade easily stops at (1, k), one arc short; the sets asserted here are
    the computed ones, ending at (1, k+1).
    """

    def body():
        failures = []
        t = TriangulationDesc.fountain(0)
        for k in range(2, kmax + 1):
            t, new_arc = flip(t, Edge(0, k))
            if new_arc != Edge(1, k + 1):
                failures.append(f"mu_{k} produced {new_arc}, expected (1,{k + 1})")
            if not validate_window(t, -3, k + 4):
                failures.append(f"stage {k} descriptor fails validity")
            want = {Edge(1, m) for m in range(3, k + 2)}
            got = {e for e in arcs_in_window(t, 1, k + 2) if e.left == 1}
            if got != want:
                failures.append(f"stage {k} arcs at 1: {sorted(got)} != {sorted(want)}")
            if not (Edge(0, k + 1) in arcs_in_window(t, 0, k + 2)):
                failures.append(f"stage {k} lost fountain arc (0,{k + 1})")
        return kmax - 1, failures

    return _run("escape", body)


def suite_laurent(seed=7, count=40) -> SuiteResult:
    """Laurent property at desk scale: random flip sequences in a heptagon."""

    def body():
        rng = random.Random(seed)
        failures = []
        window = (-1, 6)
        for case in range(count):
            t = TriangulationDesc.fountain(0)
            state = ClusterState(t)
            seq = []
            cur = t
            for _ in range(rng.randint(1, 5)):
                opts = [arc for arc, _ in _flippable(cur, *window)]
                if not opts:
                    break
                arc = rng.choice(opts)
                seq.append(arc)
                cur, _ = flip(cur, arc)
            targets = sorted(arcs_in_window(cur, *window))
            target = rng.choice(targets)
            expr = laurent_expand(state, seq, target, window)
            if any(c <= 0 for c in expr.denominator.values()):
                failures.append(f"case {case}: denominator not a genuine monomial")
            neg = [c for c in expr.numerator.terms.values() if c < 0]
            if neg:
                failures.append(f"case {case}: numerator has negative coefficients")
        return count, failures

    return _run("laurent", body)


ALL_SUITES = {
    "figures": suite_figures,
    "components": suite_components,
    "involution": suite_involution,
    "commutation": suite_commutation,
    "bmatrix": suite_bmatrix,
    "exchange": suite_exchange,
    "plucker": suite_plucker_sweep,
    "ltable": suite_ltable,
    "compat": suite_compat,
    "qmutation": suite_qmutation,
    "reachability": suite_reachability,
    "escape": suite_escape,
    "laurent": suite_laurent,
}

QUICK_SCALE = {
    "components": {"count": 10},
    "involution": {"count": 100},
    "commutation": {"count": 50},
    "bmatrix": {"count": 10},
    "exchange": {"count": 50},
    "plucker": {"radius": 3},
    "ltable": {"radius": 3},
    "compat": {"count": 10},
    "qmutation": {"count": 20},
    "laurent": {"count": 10},
}


def run_suites(names=None, intensity: str = "full") -> list[SuiteResult]:
    names = list(names) if names else list(ALL_SUITES)
    results = []
    for name in names:
        if name not in ALL_SUITES:
            raise KeyError(f"unknown suite {name!r}; available: {', '.join(ALL_SUITES)}")
        kwargs = QUICK_SCALE.get(name, {}) if intensity == "quick" else {}
        results.append(ALL_SUITES[name](**kwargs))
    return results


def report_json(results: list[SuiteResult]) -> dict:
    return {
        "passed": all(r.passed for r in results),
        "suites": [r.to_json() for r in results],
    }
