// Browser entry point: boot a session against the service and mount the app.
// The service origin defaults to same-origin and can be overridden with
// ?api=http://host:port; the base family comes from ?base=fountain:0 etc.

import { ApiClient } from "./api.js";
import { ExplorerController } from "./controller.js";
import { domHost, wireEvents } from "./dom.js";
import type { BaseSpec } from "./types.js";

function baseFromQuery(raw: string | null): BaseSpec {
    if (!raw) return { kind: "fountain", vertex: 0 };
    const [kind, ...params] = raw.split(":");
    const nums = params.map(Number);
    if (kind === "leapfrog") return { kind, center: nums[0] ?? 0 };
    if (kind === "split") return { kind, left: nums[0] ?? 0, right: nums[1] ?? 3 };
    return { kind: "fountain", vertex: nums[0] ?? 0 };
}

const query = new URLSearchParams(window.location.search);
const api = new ApiClient(query.get("api") ?? "");
const root = document.getElementById("app")!;
const controller = new ExplorerController(api, domHost(root));
wireEvents(root, controller);

controller.start(baseFromQuery(query.get("base"))).catch((err) => {
    root.innerHTML = `<div class="banner" role="alert">failed to start: ${String(err)}</div>`;
});
