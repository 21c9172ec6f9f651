// SVG arc diagram: semicircles over an integer ruler, clickable per arc.

import { pairKey, type Classification, type WindowSnapshot } from "./types.js";

const SCALE = 44;
const PAD = 36;

export interface ArcViewOptions {
    selected?: string | null;
}

function esc(text: string): string {
    return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

function fountainVertices(cls: Classification): number[] {
    if (cls.kind === "fountain") return [cls.vertex!];
    if (cls.kind === "split_fountain") return [cls.left!, cls.right!];
    return [];
}

export function renderArcWindow(snap: WindowSnapshot, opts: ArcViewOptions = {}): string {
    const { a, b } = snap;
    const x = (i: number) => PAD + (i - a) * SCALE;
    const maxSpan = Math.max(2, ...snap.arcs.map((e) => e.arc[1] - e.arc[0]));
    const baseY = (maxSpan * SCALE) / 2 + 24;
    const width = (b - a) * SCALE + 2 * PAD;
    const height = baseY + 40;
    const parts: string[] = [
        `<svg class="arc-window" xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" viewBox="0 0 ${width} ${height}">`,
        `<line class="ruler" x1="${x(a)}" y1="${baseY}" x2="${x(b)}" y2="${baseY}" stroke="#555"/>`,
    ];
    for (let i = a; i <= b; i++) {
        parts.push(`<line x1="${x(i)}" y1="${baseY - 4}" x2="${x(i)}" y2="${baseY + 4}" stroke="#555"/>`);
        parts.push(
            `<text x="${x(i)}" y="${baseY + 18}" font-size="12" text-anchor="middle">${i}</text>`,
        );
    }
    for (const v of fountainVertices(snap.classification)) {
        if (v < a || v > b) continue;
        parts.push(
            `<circle class="fountain-badge" data-vertex="${v}" cx="${x(v)}" cy="${baseY + 28}" r="5" fill="#c0392b"/>`,
        );
    }
    for (const info of snap.arcs) {
        const key = pairKey(info.arc);
        const r = (x(info.arc[1]) - x(info.arc[0])) / 2;
        const classes = ["arc"];
        if (info.frozen) classes.push("frozen");
        if (info.flippable) classes.push("flippable");
        if (opts.selected === key) classes.push("selected");
        const dash = info.frozen ? ' stroke-dasharray="7 4"' : "";
        parts.push(
            `<path class="${classes.join(" ")}" data-arc="${esc(key)}" data-flippable="${info.flippable}" ` +
                `d="M ${x(info.arc[0])} ${baseY} A ${r} ${r} 0 0 1 ${x(info.arc[1])} ${baseY}" ` +
                `fill="none" stroke="${info.frozen ? "#b5651d" : "#1f6fb2"}" stroke-width="2.5"${dash}/>`,
        );
    }
    parts.push("</svg>");
    return parts.join("\n");
}
