// Explorer state machine. Holds the view state, talks to the service, and
// renders the whole app to markup through a host callback; the DOM layer is
// a thin event-delegation shell around this class, which keeps every piece
// of behaviour drivable from tests (and from the e2e smoke run).

import { ApiClient, ApiFailure } from "./api.js";
import { renderArcWindow } from "./arcview.js";
import { renderQuiver } from "./quiverview.js";
import {
    pairKey,
    parsePairKey,
    type BaseSpec,
    type Pair,
    type QuiverJson,
    type SessionInfo,
    type WindowSnapshot,
} from "./types.js";

export type RenderMode = "arcs" | "quiver" | "split";

export interface ViewState {
    sessionId: string | null;
    window: [number, number];
    selected: string | null;
    mode: RenderMode;
    quantum: boolean;
    log: string[];
    banner: string | null;
    info: SessionInfo | null;
    snapshot: WindowSnapshot | null;
    quiver: QuiverJson | null;
}

export interface Host {
    render(html: string): void;
}

function esc(text: string): string {
    return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

// Small stable hash of the latest server snapshot, displayed for audit: what
// is on screen is exactly what the service sent, nothing locally computed.
export function snapshotHash(payload: unknown): string {
    const text = JSON.stringify(payload) ?? "";
    let h = 0x811c9dc5;
    for (let i = 0; i < text.length; i++) {
        h ^= text.charCodeAt(i);
        h = Math.imul(h, 0x01000193) >>> 0;
    }
    return h.toString(16).padStart(8, "0");
}

export class ExplorerController {
    readonly state: ViewState;
    private inflight: Promise<void> = Promise.resolve();

    constructor(
        private readonly api: ApiClient,
        private readonly host: Host,
        window: [number, number] = [-6, 7],
    ) {
        this.state = {
            sessionId: null,
            window,
            selected: null,
            mode: "split",
            quantum: false,
            log: [],
            banner: null,
            info: null,
            snapshot: null,
            quiver: null,
        };
    }

    async start(base: BaseSpec): Promise<void> {
        const info = await this.api.createSession(base);
        this.state.sessionId = info.id;
        this.state.info = info;
        this.state.log = [`session ${info.id.slice(0, 8)}: ${describeClass(info)}`];
        await this.refresh();
    }

    async refresh(): Promise<void> {
        const id = this.state.sessionId;
        if (!id) return;
        const [a, b] = this.state.window;
        try {
            const [snapshot, quiver, info] = await Promise.all([
                this.api.getWindow(id, a, b),
                this.api.getQuiver(id, a, b),
                this.api.getSession(id),
            ]);
            this.state.snapshot = snapshot;
            this.state.quiver = quiver;
            this.state.info = info;
        } catch (err) {
            this.fail(err);
        }
        this.paint();
    }

    /** Entry point used by the DOM click delegate (data-arc attribute). */
    handleArcClick(arcKey: string): Promise<void> {
        this.inflight = this.inflight.then(() => this.flipArc(arcKey));
        return this.inflight;
    }

    private async flipArc(arcKey: string): Promise<void> {
        const id = this.state.sessionId;
        const snap = this.state.snapshot;
        if (!id || !snap) return;
        const info = snap.arcs.find((x) => pairKey(x.arc) === arcKey);
        if (!info || !info.flippable) {
            return; // frozen or stale label: no request
        }
        this.state.selected = arcKey; // optimistic highlight
        this.paint();
        try {
            const res = await this.api.flip(id, parsePairKey(arcKey), this.state.quantum);
            this.state.banner = null;
            this.state.log.push(res.relation.pretty);
            if (res.q_relation) {
                const [s, t] = res.q_relation.qpow;
                this.state.log.push(`quantum coefficients q^${s}, q^${t} (certified)`);
            }
            this.state.selected = pairKey(res.new_arc);
        } catch (err) {
            this.state.selected = null; // rollback
            this.fail(err);
        }
        await this.refresh();
    }

    async undo(): Promise<void> {
        await this.stackOp("undo");
    }

    async redo(): Promise<void> {
        await this.stackOp("redo");
    }

    private async stackOp(which: "undo" | "redo"): Promise<void> {
        const id = this.state.sessionId;
        if (!id) return;
        try {
            await (which === "undo" ? this.api.undo(id) : this.api.redo(id));
            this.state.banner = null;
            this.state.log.push(which);
            this.state.selected = null;
        } catch (err) {
            this.fail(err);
        }
        await this.refresh();
    }

    async pan(delta: number): Promise<void> {
        const [a, b] = this.state.window;
        this.state.window = [a + delta, b + delta];
        this.state.banner = null;
        await this.refresh();
    }

    async grow(delta: number): Promise<void> {
        const [a, b] = this.state.window;
        if (b + delta - (a - delta) < 2) return;
        this.state.window = [a - delta, b + delta];
        this.state.banner = null;
        await this.refresh();
    }

    setMode(mode: RenderMode): void {
        this.state.mode = mode;
        this.paint();
    }

    toggleQuantum(): void {
        this.state.quantum = !this.state.quantum;
        this.paint();
    }

    private fail(err: unknown): void {
        if (err instanceof ApiFailure) {
            const note = err.code === "window_too_large" ? " (zoom limit)" : "";
            this.state.banner = `[${err.code}] ${err.message}${note}`;
            this.state.log.push(`error: ${err.code}`);
        } else {
            this.state.banner = String(err);
        }
    }

    paint(): void {
        this.host.render(this.render());
    }

    render(): string {
        const s = this.state;
        const [a, b] = s.window;
        const head = s.info
            ? `${describeClass(s.info)} | components: ${s.info.component_count}` +
              (s.info.finite_component_empty ? " (gap component empty)" : "")
            : "no session";
        const hash = snapshotHash({ snapshot: s.snapshot, quiver: s.quiver });
        const arcPanel =
            s.snapshot && (s.mode === "arcs" || s.mode === "split")
                ? `<section class="panel arcs">${renderArcWindow(s.snapshot, { selected: s.selected })}</section>`
                : "";
        const quiverPanel =
            s.quiver && (s.mode === "quiver" || s.mode === "split")
                ? `<section class="panel quiver">${renderQuiver(s.quiver)}</section>`
                : "";
        const logItems = s.log.map((line) => `<li>${esc(line)}</li>`).join("");
        const banner = s.banner ? `<div class="banner" role="alert">${esc(s.banner)}</div>` : "";
        return [
            '<div class="app">',
            `<header><span class="session-info">${esc(head)}</span>`,
            ` <span class="window-info">window [${a}, ${b}]</span>`,
            ` <span class="snapshot-hash" title="server snapshot hash">#${hash}</span>`,
            ` <button data-action="undo">undo</button><button data-action="redo">redo</button>`,
            ` <button data-action="pan-left">&#8592;</button><button data-action="pan-right">&#8594;</button>`,
            ` <button data-action="grow">wider</button>`,
            ` <button data-action="mode-arcs">arcs</button><button data-action="mode-quiver">quiver</button>` +
                `<button data-action="mode-split">both</button>`,
            ` <label><input type="checkbox" data-action="quantum"${s.quantum ? " checked" : ""}/> quantum</label>`,
            "</header>",
            banner,
            `<main class="mode-${s.mode}">`,
            arcPanel,
            quiverPanel,
            "</main>",
            `<aside class="log"><h2>relations</h2><ol>${logItems}</ol></aside>`,
            "</div>",
        ].join("\n");
    }
}

function describeClass(info: SessionInfo): string {
    const cls = info.classification;
    if (cls.kind === "fountain") return `fountain at ${cls.vertex}`;
    if (cls.kind === "split_fountain") return `split fountain at ${cls.left}, ${cls.right}`;
    return "locally finite";
}
