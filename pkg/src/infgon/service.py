"""Session-based HTTP JSON API for the explorer UI and scripts.

Sessions hold a cluster state (descriptor plus flip history) with undo/redo
snapshot stacks.  All mathematics happens in the library; the service only
folds requests over it, so any request sequence leaves the session equal to
the pure-library fold of the same operations.
"""

from __future__ import annotations

import threading
import time
import uuid
from dataclasses import dataclass, field

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from .arcs import Edge
from .errors import (
    BadEdge,
    FrozenArc,
    InfgonError,
    InvalidDescriptor,
    NotInTriangulation,
    WindowTooLarge,
)
from .plucker import ClusterState, exchange_flip
from .quantum import quantum_mutate
from .quiver import build_exchange_quiver, component_count, export_dot, finite_component_empty
from .triangulation import (
    TriangulationDesc,
    arcs_in_window,
    bridge_of,
    classify,
    is_mutable,
    sides_in_window,
    validate_descriptor,
)

SESSION_TTL_SECONDS = 3600.0


class DescriptorIn(BaseModel):
    base: dict
    removed: list[list[int]] = Field(default_factory=list)
    added: list[list[int]] = Field(default_factory=list)


class FlipIn(BaseModel):
    arc: list[int]
    quantum: bool = False


@dataclass
class Session:
    id: str
    state: ClusterState
    undo: list[ClusterState] = field(default_factory=list)
    redo: list[ClusterState] = field(default_factory=list)
    created: float = field(default_factory=time.time)
    last_access: float = field(default_factory=time.time)
    lock: threading.Lock = field(default_factory=threading.Lock)


class SessionStore:
    def __init__(self, ttl: float = SESSION_TTL_SECONDS):
        self.ttl = ttl
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()

    def create(self, state: ClusterState) -> Session:
        session = Session(id=uuid.uuid4().hex, state=state)
        with self._lock:
            self._evict()
            self._sessions[session.id] = session
        return session

    def get(self, session_id: str) -> Session | None:
        with self._lock:
            self._evict()
            session = self._sessions.get(session_id)
            if session:
                session.last_access = time.time()
            return session

    def _evict(self):
        cutoff = time.time() - self.ttl
        stale = [sid for sid, s in self._sessions.items() if s.last_access < cutoff]
        for sid in stale:
            del self._sessions[sid]


def _error(status: int, exc: InfgonError, arc: Edge | None = None) -> JSONResponse:
    payload = {"code": exc.code, "message": str(exc)}
    if arc is not None:
        payload["arc"] = arc.to_json()
    return JSONResponse(payload, status_code=status)


def _classification_payload(desc: TriangulationDesc) -> dict:
    payload = {
        "classification": classify(desc).to_json(),
        "component_count": component_count(desc),
    }
    empty = finite_component_empty(desc)
    if empty is not None:
        payload["finite_component_empty"] = empty
    bridge = bridge_of(desc)
    if bridge is not None:
        payload["bridge"] = bridge.to_json()
    return payload


def _snapshot(session: Session) -> dict:
    state = session.state
    return {
        "id": session.id,
        "descriptor": state.desc.to_json(),
        "history_length": len(state.history),
        "undo_depth": len(session.undo),
        "redo_depth": len(session.redo),
        **_classification_payload(state.desc),
    }


def create_app(budget: int | None = None, ttl: float = SESSION_TTL_SECONDS) -> FastAPI:
    app = FastAPI(title="infgon service", version="0.1.0")
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )
    store = SessionStore(ttl=ttl)

    def session_or_404(session_id: str):
        session = store.get(session_id)
        if session is None:
            raise LookupError(session_id)
        return session

    @app.exception_handler(LookupError)
    async def missing_session(_req: Request, exc: LookupError):
        return JSONResponse(
            {"code": "unknown_session", "message": f"no session {exc.args[0]!r}"}, status_code=404
        )

    @app.post("/sessions", status_code=201)
    def create_session(body: DescriptorIn):
        try:
            desc = TriangulationDesc.from_json(body.model_dump())
            validate_descriptor(desc, budget)
        except (InvalidDescriptor, BadEdge, WindowTooLarge) as exc:
            return _error(400, exc)
        session = store.create(ClusterState(desc))
        return _snapshot(session)

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str):
        return _snapshot(session_or_404(session_id))

    @app.get("/sessions/{session_id}/window")
    def get_window(session_id: str, a: int, b: int):
        session = session_or_404(session_id)
        desc = session.state.desc
        try:
            arcs = sorted(arcs_in_window(desc, a, b, budget))
        except (WindowTooLarge, BadEdge) as exc:
            return _error(422, exc)
        bridge = bridge_of(desc)
        return {
            "a": a,
            "b": b,
            "arcs": [
                {
                    "arc": e.to_json(),
                    "frozen": e == bridge,
                    "flippable": is_mutable(desc, e),
                }
                for e in arcs
            ],
            "sides": [s.to_json() for s in sides_in_window(a, b)],
            **_classification_payload(desc),
        }

    @app.post("/sessions/{session_id}/flip")
    def flip_arc(session_id: str, body: FlipIn):
        session = session_or_404(session_id)
        try:
            arc = Edge.from_json(body.arc)
        except BadEdge as exc:
            return _error(422, exc)
        with session.lock:
            try:
                q_relation = None
                if body.quantum:
                    label, cert = quantum_mutate(session.state.desc, arc)
                    v0, v1, v2, v3 = cert.quad_vertices
                    q_relation = {
                        "qpow": list(cert.relation_q_powers),
                        "lhs": [[v0, v2], [v1, v3]],
                        "rhs": [[[v0, v1], [v2, v3]], [[v0, v3], [v1, v2]]],
                        "certificate": cert.to_json(),
                    }
                state, rel = exchange_flip(session.state, arc)
            except (FrozenArc, NotInTriangulation) as exc:
                return _error(409, exc, arc)
            except InfgonError as exc:
                return _error(422, exc, arc)
            session.undo.append(session.state)
            session.redo.clear()
            session.state = state
            payload = {
                "new_arc": rel.new.to_json(),
                "relation": {**rel.to_json(), "pretty": rel.pretty()},
                **_snapshot(session),
            }
            if q_relation is not None:
                payload["q_relation"] = q_relation
            return payload

    @app.get("/sessions/{session_id}/quiver")
    def get_quiver(session_id: str, a: int, b: int, request: Request):
        session = session_or_404(session_id)
        try:
            q = build_exchange_quiver(session.state.desc, a, b, budget)
        except (WindowTooLarge, BadEdge) as exc:
            return _error(422, exc)
        accept = request.headers.get("accept", "")
        if "text/vnd.graphviz" in accept:
            return Response(export_dot(q), media_type="text/vnd.graphviz")
        return q.to_json()

    @app.post("/sessions/{session_id}/undo")
    def undo(session_id: str):
        session = session_or_404(session_id)
        with session.lock:
            if not session.undo:
                return JSONResponse(
                    {"code": "empty_stack", "message": "nothing to undo"}, status_code=409
                )
            session.redo.append(session.state)
            session.state = session.undo.pop()
            return _snapshot(session)

    @app.post("/sessions/{session_id}/redo")
    def redo(session_id: str):
        session = session_or_404(session_id)
        with session.lock:
            if not session.redo:
                return JSONResponse(
                    {"code": "empty_stack", "message": "nothing to redo"}, status_code=409
                )
            session.undo.append(session.state)
            session.state = session.redo.pop()
            return _snapshot(session)

    @app.get("/spec")
    def openapi_spec():
        return app.openapi()

    return app
