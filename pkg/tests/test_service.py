import pytest
from fastapi.testclient import TestClient

from infgon.service import create_app


@pytest.fixture()
def client():
    return TestClient(create_app())


def make_session(client, base):
    r = client.post("/sessions", json={"base": base})
    assert r.status_code == 201
    return r.json()


def test_create_fountain_session(client):
    data = make_session(client, {"kind": "fountain", "vertex": 0})
    assert data["classification"] == {"kind": "fountain", "vertex": 0}
    assert data["component_count"] == 2


def test_create_leapfrog_session(client):
    data = make_session(client, {"kind": "leapfrog", "center": 0})
    assert data["component_count"] == 1
    assert data["classification"]["kind"] == "locally_finite"


def test_create_rejects_crossing_added_arcs(client):
    r = client.post(
        "/sessions",
        json={"base": {"kind": "fountain", "vertex": 0}, "added": [[1, 3], [2, 4]]},
    )
    assert r.status_code == 400
    assert r.json()["code"] == "invalid_descriptor"


def test_window_snapshot(client):
    sid = make_session(client, {"kind": "fountain", "vertex": 0})["id"]
    r = client.get(f"/sessions/{sid}/window", params={"a": -2, "b": 3})
    assert r.status_code == 200
    body = r.json()
    assert [x["arc"] for x in body["arcs"]] == [[-2, 0], [0, 2], [0, 3]]
    assert all(x["flippable"] for x in body["arcs"])
    assert body["sides"] == [[-2, -1], [-1, 0], [0, 1], [1, 2], [2, 3]]


def test_window_marks_bridge_frozen(client):
    sid = make_session(client, {"kind": "split", "left": 0, "right": 3})["id"]
    r = client.get(f"/sessions/{sid}/window", params={"a": 0, "b": 3})
    flags = {tuple(x["arc"]): (x["frozen"], x["flippable"]) for x in r.json()["arcs"]}
    assert flags[(0, 3)] == (True, False)
    assert flags[(0, 2)] == (False, True)


def test_window_rejects_bad_bounds(client):
    sid = make_session(client, {"kind": "fountain", "vertex": 0})["id"]
    assert client.get(f"/sessions/{sid}/window", params={"a": 3, "b": 2}).status_code == 422
    assert client.get(f"/sessions/{sid}/window", params={"a": -200, "b": 200}).status_code == 422


def test_flip_and_relation(client):
    sid = make_session(client, {"kind": "fountain", "vertex": 0})["id"]
    r = client.post(f"/sessions/{sid}/flip", json={"arc": [0, 2]})
    assert r.status_code == 200
    body = r.json()
    assert body["new_arc"] == [1, 3]
    assert body["relation"]["lhs"] == [[1, 3], [0, 2]]
    assert "q_relation" not in body
    # the replaced label is gone: flipping it again conflicts
    r = client.post(f"/sessions/{sid}/flip", json={"arc": [0, 2]})
    assert r.status_code == 409
    assert r.json()["code"] == "not_in_triangulation"


def test_flip_quantum_payload(client):
    sid = make_session(client, {"kind": "fountain", "vertex": 0})["id"]
    r = client.post(f"/sessions/{sid}/flip", json={"arc": [0, 2], "quantum": True})
    q = r.json()["q_relation"]
    assert q["qpow"] == [-1, 1]
    assert q["lhs"] == [[0, 2], [1, 3]]
    assert q["certificate"]["verified"] is True


def test_flip_frozen_bridge(client):
    sid = make_session(client, {"kind": "split", "left": 0, "right": 3})["id"]
    r = client.post(f"/sessions/{sid}/flip", json={"arc": [0, 3]})
    assert r.status_code == 409
    assert r.json()["code"] == "frozen_arc"
    assert r.json()["arc"] == [0, 3]


def test_quiver_endpoint(client):
    sid = make_session(client, {"kind": "leapfrog", "center": 0})["id"]
    r = client.get(f"/sessions/{sid}/quiver", params={"a": -6, "b": 7})
    assert r.status_code == 200
    body = r.json()
    assert {"label": [-1, 1], "frozen": False} in body["vertices"]
    r = client.get(
        f"/sessions/{sid}/quiver",
        params={"a": -6, "b": 7},
        headers={"accept": "text/vnd.graphviz"},
    )
    assert r.headers["content-type"].startswith("text/vnd.graphviz")
    assert r.text.startswith("digraph")
    assert client.get(f"/sessions/{sid}/quiver", params={"a": 0, "b": 1000}).status_code == 422


def test_quiver_tracks_flips(client):
    sid = make_session(client, {"kind": "fountain", "vertex": 0})["id"]
    before = client.get(f"/sessions/{sid}/quiver", params={"a": -4, "b": 4}).json()
    client.post(f"/sessions/{sid}/flip", json={"arc": [0, 2]})
    after = client.get(f"/sessions/{sid}/quiver", params={"a": -4, "b": 4}).json()
    labels = [v["label"] for v in after["vertices"]]
    assert [1, 3] in labels and [0, 2] not in labels
    assert before != after


def test_undo_redo_cycle(client):
    sid = make_session(client, {"kind": "fountain", "vertex": 0})["id"]
    initial = client.get(f"/sessions/{sid}").json()["descriptor"]
    client.post(f"/sessions/{sid}/flip", json={"arc": [0, 2]})
    flipped = client.get(f"/sessions/{sid}").json()["descriptor"]
    r = client.post(f"/sessions/{sid}/undo")
    assert r.status_code == 200 and r.json()["descriptor"] == initial
    r = client.post(f"/sessions/{sid}/redo")
    assert r.status_code == 200 and r.json()["descriptor"] == flipped
    # a fresh flip invalidates redo
    client.post(f"/sessions/{sid}/undo")
    client.post(f"/sessions/{sid}/flip", json={"arc": [0, 3]})
    assert client.post(f"/sessions/{sid}/redo").status_code == 409


def test_undo_empty_conflict(client):
    sid = make_session(client, {"kind": "fountain", "vertex": 0})["id"]
    r = client.post(f"/sessions/{sid}/undo")
    assert r.status_code == 409 and r.json()["code"] == "empty_stack"


def test_unknown_session(client):
    assert client.get("/sessions/missing/window", params={"a": 0, "b": 2}).status_code == 404
    assert client.post("/sessions/missing/flip", json={"arc": [0, 2]}).status_code == 404


def test_service_matches_library_fold(client):
    from infgon.arcs import Edge
    from infgon.triangulation import TriangulationDesc, flip as lib_flip

    sid = make_session(client, {"kind": "fountain", "vertex": 0})["id"]
    t = TriangulationDesc.fountain(0)
    for arc in ([0, 2], [0, 3], [-2, 0], [1, 3]):
        client.post(f"/sessions/{sid}/flip", json={"arc": arc})
        t, _ = lib_flip(t, Edge(*arc))
    assert client.get(f"/sessions/{sid}").json()["descriptor"] == t.to_json()


def test_openapi_served_at_spec(client):
    r = client.get("/spec")
    assert r.status_code == 200
    assert "/sessions/{session_id}/flip" in r.json()["paths"]
