// Browser glue: a Host that renders into an element, and an event delegate
// mapping DOM clicks back to controller calls. All behaviour lives in
// ExplorerController; this file only routes events.

import type { ExplorerController, Host, RenderMode } from "./controller.js";

export function domHost(root: HTMLElement): Host {
    return { render: (html: string) => (root.innerHTML = html) };
}

export function wireEvents(root: HTMLElement, controller: ExplorerController): void {
    root.addEventListener("click", (ev) => {
        const target = ev.target as Element | null;
        if (!target) return;
        const arcEl = target.closest("[data-arc]");
        if (arcEl) {
            if (arcEl.getAttribute("data-flippable") === "true") {
                void controller.handleArcClick(arcEl.getAttribute("data-arc")!);
            }
            return;
        }
        const actionEl = target.closest("[data-action]");
        if (!actionEl) return;
        const action = actionEl.getAttribute("data-action")!;
        if (action === "undo") void controller.undo();
        else if (action === "redo") void controller.redo();
        else if (action === "pan-left") void controller.pan(-2);
        else if (action === "pan-right") void controller.pan(2);
        else if (action === "grow") void controller.grow(1);
        else if (action === "quantum") controller.toggleQuantum();
        else if (action.startsWith("mode-")) controller.setMode(action.slice(5) as RenderMode);
    });
}
