// Typed client for the session service. The UI never computes mathematics:
// every arc, arrow and relation shown comes back from these calls.

import type {
    BaseSpec,
    FlipResponse,
    Pair,
    QuiverJson,
    SessionInfo,
    WindowSnapshot,
} from "./types.js";

export class ApiFailure extends Error {
    constructor(
        readonly status: number,
        readonly code: string,
        message: string,
        readonly arc?: Pair,
    ) {
        super(message);
    }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
    constructor(
        private readonly baseUrl: string,
        private readonly fetchImpl: FetchLike = (input, init) => fetch(input, init),
    ) {}

    private async request<T>(path: string, init?: RequestInit): Promise<T> {
        const res = await this.fetchImpl(`${this.baseUrl}${path}`, init);
        const body = await res.json().catch(() => ({}));
        if (!res.ok) {
            throw new ApiFailure(
                res.status,
                body.code ?? "http_error",
                body.message ?? `HTTP ${res.status}`,
                body.arc,
            );
        }
        return body as T;
    }

    createSession(base: BaseSpec, removed: Pair[] = [], added: Pair[] = []): Promise<SessionInfo> {
        return this.request("/sessions", {
            method: "POST",
            headers: { "content-type": "application/json" },
            body: JSON.stringify({ base, removed, added }),
        });
    }

    getSession(id: string): Promise<SessionInfo> {
        return this.request(`/sessions/${id}`);
    }

    getWindow(id: string, a: number, b: number): Promise<WindowSnapshot> {
        return this.request(`/sessions/${id}/window?a=${a}&b=${b}`);
    }

    getQuiver(id: string, a: number, b: number): Promise<QuiverJson> {
        return this.request(`/sessions/${id}/quiver?a=${a}&b=${b}`);
    }

    flip(id: string, arc: Pair, quantum: boolean): Promise<FlipResponse> {
        return this.request(`/sessions/${id}/flip`, {
            method: "POST",
            headers: { "content-type": "application/json" },
            body: JSON.stringify({ arc, quantum }),
        });
    }

    undo(id: string): Promise<SessionInfo> {
        return this.request(`/sessions/${id}/undo`, { method: "POST" });
    }

    redo(id: string): Promise<SessionInfo> {
        return this.request(`/sessions/${id}/redo`, { method: "POST" });
    }
}
