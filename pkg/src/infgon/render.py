"""Arc diagrams over an integer ruler, as plain text or SVG.

Arcs are drawn as semicircles above a number line, matching the way windows
of the infinity-gon are usually pictured; the frozen split-fountain bridge is
styled differently.
"""

from __future__ import annotations

from .triangulation import TriangulationDesc, arcs_in_window, bridge_of


def ascii_window(t: TriangulationDesc, a: int, b: int, budget=None) -> str:
    """One line per arc (span drawn between its endpoints), plus a ruler."""
    arcs = sorted(arcs_in_window(t, a, b, budget), key=lambda e: (e.span, e.left))
    bridge = bridge_of(t)
    cell = max(len(str(i)) for i in range(a, b + 1)) + 2
    ruler = "".join(str(i).center(cell) for i in range(a, b + 1))

    def pos(i: int) -> int:
        return (i - a) * cell + cell // 2

    lines = []
    for e in arcs:
        fill = "=" if e == bridge else "-"
        row = [" "] * (pos(b) + 1)
        lo, hi = pos(e.left), pos(e.right)
        for x in range(lo + 1, hi):
            row[x] = fill
        row[lo] = "*"
        row[hi] = "*"
        label = f"  {e}" + ("  [frozen]" if e == bridge else "")
        lines.append("".join(row).rstrip() + label)
    lines.append(ruler)
    return "\n".join(lines) + "\n"


def svg_window(t: TriangulationDesc, a: int, b: int, budget=None, scale: int = 40) -> str:
    """Semicircular arcs over a ruler; returns a standalone SVG document."""
    arcs = sorted(arcs_in_window(t, a, b, budget))
    bridge = bridge_of(t)
    pad = scale
    width = (b - a) * scale + 2 * pad
    max_span = max((e.span for e in arcs), default=2)
    height = max_span * scale // 2 + 2 * pad

    def x(i: int) -> int:
        return pad + (i - a) * scale

    base_y = height - pad
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<line x1="{x(a)}" y1="{base_y}" x2="{x(b)}" y2="{base_y}" stroke="#444"/>',
    ]
    for i in range(a, b + 1):
        parts.append(f'<line x1="{x(i)}" y1="{base_y - 3}" x2="{x(i)}" y2="{base_y + 3}" stroke="#444"/>')
        parts.append(
            f'<text x="{x(i)}" y="{base_y + 16}" font-size="11" text-anchor="middle">{i}</text>'
        )
    for e in arcs:
        r = (x(e.right) - x(e.left)) / 2
        style = 'stroke="#b5651d" stroke-dasharray="6 3"' if e == bridge else 'stroke="#1f6fb2"'
        parts.append(
            f'<path d="M {x(e.left)} {base_y} A {r} {r} 0 0 1 {x(e.right)} {base_y}" '
            f'fill="none" {style} stroke-width="1.5" data-arc="{e.left},{e.right}"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
