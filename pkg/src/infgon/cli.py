"""Command-line front door.

Thin shell over the library: create/flip/inspect descriptors, render windows
and quivers, run the verification suites, start the HTTP service.  Exit
codes: 0 ok, 1 verification failure, 2 usage or operation error.
"""

from __future__ import annotations

import json
import os
import sys

import click

from .arcs import Edge
from .errors import InfgonError
from .plucker import ClusterState, exchange_flip
from .quantum import quantum_mutate
from .quiver import build_exchange_quiver, component_count, export_dot, finite_component_empty
from .render import ascii_window, svg_window
from .triangulation import (
    TriangulationDesc,
    arcs_in_window,
    bridge_of,
    classify,
    validate_descriptor,
)
from .verify import report_json, run_suites


def _budget():
    raw = os.environ.get("INFGON_BUDGET")
    return int(raw) if raw else None


def _parse_arc(text: str) -> Edge:
    try:
        i, j = (int(part) for part in text.split(","))
    except ValueError:
        raise click.UsageError(f"arc must be 'i,j' with integers, got {text!r}")
    return Edge(i, j)


def _load(path: str) -> TriangulationDesc:
    with open(path, encoding="utf-8") as fh:
        return TriangulationDesc.from_json(json.load(fh))


def _dump(desc: TriangulationDesc, path: str | None):
    text = json.dumps(desc.to_json(), indent=2) + "\n"
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def _class_line(desc: TriangulationDesc) -> str:
    cls = classify(desc)
    line = f"classification: {cls.to_json()}  components: {component_count(desc)}"
    bridge = bridge_of(desc)
    if bridge is not None:
        line += f"  frozen bridge: {bridge}"
        if finite_component_empty(desc):
            line += " (gap component has no mutable arcs)"
    return line


@click.group()
def main():
    """Exact cluster combinatorics of the infinity-gon."""


@main.command()
@click.option("--fountain", type=int, default=None, metavar="V", help="standard fountain at V")
@click.option("--leapfrog", type=int, default=None, metavar="C", help="standard leapfrog centred at C")
@click.option("--split", nargs=2, type=int, default=None, metavar="L R", help="split fountain at L, R")
@click.option("--removed", default="", help="semicolon-separated arcs to remove, e.g. '0,2;0,3'")
@click.option("--added", default="", help="semicolon-separated arcs to add")
@click.option("-o", "--out", type=click.Path(), default=None, help="descriptor file (stdout if omitted)")
def new(fountain, leapfrog, split, removed, added, out):
    """Create a canonical triangulation descriptor."""
    chosen = [x for x in (fountain, leapfrog, split) if x is not None]
    if len(chosen) != 1:
        raise click.UsageError("choose exactly one of --fountain, --leapfrog, --split")
    edits = lambda text: frozenset(_parse_arc(p) for p in text.split(";") if p)
    try:
        if fountain is not None:
            desc = TriangulationDesc.fountain(fountain, edits(removed), edits(added))
        elif leapfrog is not None:
            desc = TriangulationDesc.leapfrog(leapfrog, edits(removed), edits(added))
        else:
            desc = TriangulationDesc.split(split[0], split[1], edits(removed), edits(added))
        validate_descriptor(desc, _budget())
    except InfgonError as exc:
        raise click.UsageError(f"[{exc.code}] {exc}")
    _dump(desc, out)
    click.echo(_class_line(desc), err=out is None)


@main.command()
@click.argument("descriptor", type=click.Path(exists=True))
@click.argument("arcs", nargs=-1, required=True)
@click.option("--quantum", is_flag=True, help="also log the quantum exchange relation")
@click.option("-o", "--out", type=click.Path(), default=None, help="output file (default: in place)")
def flip(descriptor, arcs, quantum, out):
    """Flip arcs in order, logging the exchange relation of each flip."""
    desc = _load(descriptor)
    state = ClusterState(desc)
    try:
        for text in arcs:
            arc = _parse_arc(text)
            if quantum:
                label, cert = quantum_mutate(state.desc, arc)
                qp = cert.relation_q_powers
            state, rel = exchange_flip(state, arc)
            click.echo(f"flip {arc}: {rel.pretty()}")
            if quantum:
                v0, v1, v2, v3 = cert.quad_vertices
                click.echo(
                    f"  quantum: D_q^{{{v0},{v2}}}D_q^{{{v1},{v3}}} = "
                    f"q^{qp[0]} D_q^{{{v0},{v1}}}D_q^{{{v2},{v3}}} + "
                    f"q^{qp[1]} D_q^{{{v0},{v3}}}D_q^{{{v1},{v2}}}  [certified]"
                )
    except InfgonError as exc:
        raise click.UsageError(f"[{exc.code}] {exc}")
    _dump(state.desc, out or descriptor)


@main.command()
@click.argument("descriptor", type=click.Path(exists=True))
@click.option("--window", nargs=2, type=int, default=(-6, 7), metavar="A B")
@click.option("--format", "fmt", type=click.Choice(["ascii", "svg", "json"]), default="ascii")
def show(descriptor, window, fmt):
    """Render the realized arcs in a window."""
    desc = _load(descriptor)
    a, b = window
    try:
        if fmt == "ascii":
            click.echo(ascii_window(desc, a, b, _budget()), nl=False)
        elif fmt == "svg":
            click.echo(svg_window(desc, a, b, _budget()), nl=False)
        else:
            arcs = sorted(e.to_json() for e in arcs_in_window(desc, a, b, _budget()))
            click.echo(json.dumps({"window": [a, b], "arcs": arcs}, indent=2))
    except InfgonError as exc:
        raise click.UsageError(f"[{exc.code}] {exc}")
    click.echo(_class_line(desc), err=True)


@main.command()
@click.argument("descriptor", type=click.Path(exists=True))
@click.option("--window", nargs=2, type=int, default=(-6, 7), metavar="A B")
@click.option("--format", "fmt", type=click.Choice(["dot", "json"]), default="dot")
def quiver(descriptor, window, fmt):
    """Export the exchange quiver on a window."""
    desc = _load(descriptor)
    a, b = window
    try:
        q = build_exchange_quiver(desc, a, b, _budget())
    except InfgonError as exc:
        raise click.UsageError(f"[{exc.code}] {exc}")
    click.echo(export_dot(q) if fmt == "dot" else json.dumps(q.to_json(), indent=2), nl=False)


@main.command()
@click.argument("suites", nargs=-1)
@click.option("--intensity", type=click.Choice(["quick", "full"]), default="full")
@click.option("--json", "as_json", is_flag=True, help="machine-readable report")
def verify(suites, intensity, as_json):
    """Run verification suites (all by default)."""
    try:
        results = run_suites(suites or None, intensity)
    except KeyError as exc:
        raise click.UsageError(str(exc.args[0]))
    if as_json:
        click.echo(json.dumps(report_json(results), indent=2))
    else:
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            click.echo(f"{status}  {r.name:14s}  {r.checks:6d} checks  {r.seconds:7.2f}s")
            for failure in r.failures[:10]:
                click.echo(f"      {failure}")
    if not all(r.passed for r in results):
        sys.exit(1)


@main.command()
@click.option("--host", default="127.0.0.1")
@click.option("--port", type=int, default=8321)
def serve(host, port):
    """Start the session HTTP service."""
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(budget=_budget()), host=host, port=port, log_level="warning")


if __name__ == "__main__":
    main()
