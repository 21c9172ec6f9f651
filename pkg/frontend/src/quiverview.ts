// SVG rendering of an ice quiver window. Vertices sit at the apex of the arc
// they label (midpoint horizontally, height by arc span), which reproduces
// the staircase look of the exchange-quiver pictures; frozen vertices are
// rectangles.

import { pairKey, type QuiverJson } from "./types.js";

const SX = 34;
const SY = 26;

export function renderQuiver(q: QuiverJson): string {
    if (q.vertices.length === 0) {
        return '<svg class="quiver" xmlns="http://www.w3.org/2000/svg" width="80" height="40"></svg>';
    }
    const xs = q.vertices.map((v) => (v.label[0] + v.label[1]) / 2);
    const spans = q.vertices.map((v) => v.label[1] - v.label[0]);
    const minX = Math.min(...xs);
    const maxSpan = Math.max(...spans);
    const px = (i: number) => 50 + (xs[i] - minX) * SX;
    const py = (i: number) => 30 + (maxSpan - spans[i]) * SY;
    const width = 100 + (Math.max(...xs) - minX) * SX;
    const height = 70 + maxSpan * SY;

    const parts: string[] = [
        `<svg class="quiver" xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" viewBox="0 0 ${width} ${height}">`,
        "<defs><marker id=\"arrowhead\" markerWidth=\"7\" markerHeight=\"7\" refX=\"6\" refY=\"2.5\" orient=\"auto\">" +
            '<polygon points="0 0, 7 2.5, 0 5" fill="#333"/></marker></defs>',
    ];
    const n = q.vertices.length;
    for (let u = 0; u < n; u++) {
        for (let v = 0; v < n; v++) {
            const mult = q.b[u][v];
            if (mult <= 0) continue;
            const dx = px(v) - px(u);
            const dy = py(v) - py(u);
            const len = Math.hypot(dx, dy) || 1;
            const trim = 16;
            const x1 = px(u) + (dx / len) * trim;
            const y1 = py(u) + (dy / len) * trim;
            const x2 = px(v) - (dx / len) * trim;
            const y2 = py(v) - (dy / len) * trim;
            for (let m = 0; m < mult; m++) {
                const off = (m - (mult - 1) / 2) * 4;
                parts.push(
                    `<line class="arrow" data-from="${pairKey(q.vertices[u].label)}" data-to="${pairKey(q.vertices[v].label)}" ` +
                        `x1="${x1}" y1="${y1 + off}" x2="${x2}" y2="${y2 + off}" stroke="#333" stroke-width="1.3" marker-end="url(#arrowhead)"/>`,
                );
            }
        }
    }
    for (let i = 0; i < n; i++) {
        const v = q.vertices[i];
        const key = pairKey(v.label);
        if (v.frozen) {
            parts.push(
                `<rect class="node frozen" data-vertex="${key}" x="${px(i) - 16}" y="${py(i) - 9}" width="32" height="18" fill="#fff" stroke="#777"/>`,
            );
        } else {
            parts.push(
                `<ellipse class="node mutable" data-vertex="${key}" cx="${px(i)}" cy="${py(i)}" rx="17" ry="10" fill="#eef" stroke="#336"/>`,
            );
        }
        parts.push(
            `<text x="${px(i)}" y="${py(i) + 3}" font-size="9" text-anchor="middle">(${v.label[0]},${v.label[1]})</text>`,
        );
    }
    parts.push("</svg>");
    return parts.join("\n");
}
