import json
from pathlib import Path

import pytest
from fastapi.testclient import TestClient

from semmap.server import create_app

FIXTURES = Path(__file__).parent / "fixtures"
CSV_BYTES = (FIXTURES / "handmade.csv").read_bytes()
GOLD_BYTES = (FIXTURES / "handmade_gold.json").read_bytes()


@pytest.fixture()
def client():
    return TestClient(create_app())


def new_session(client, merge=False, gold=False, k=100, m=3):
    files = {"table": ("t.csv", CSV_BYTES, "text/csv")}
    if gold:
        files["gold"] = ("g.json", GOLD_BYTES, "application/json")
    response = client.post(
        "/api/sessions",
        files=files,
        data={"k": str(k), "m": str(m), "merge": "true" if merge else "false"},
    )
    assert response.status_code == 201, response.text
    return response.json()


def test_health(client):
    r = client.get("/api/health")
    assert r.status_code == 200
    assert r.json() == {"status": "ok"}


def test_upload_creates_session_with_three_candidates(client):
    doc = new_session(client)
    assert doc["session_id"]
    summary = doc["summary"]
    assert len(summary["candidates"]) == 3
    assert summary["table"]["rows"] == 6
    assert summary["merged"] is False


def test_upload_with_gold_reports_acc(client):
    doc = new_session(client, gold=True)
    for cand in doc["summary"]["candidates"]:
        assert cand["report"]["acc"] is not None


def test_malformed_csv_is_stage_tagged_400(client):
    r = client.post(
        "/api/sessions",
        files={"table": ("t.csv", b"language,form,A,B\nl,f,1,7\n", "text/csv")},
    )
    assert r.status_code == 400
    body = r.json()
    assert body["stage"] == "read-table"
    assert "row 2" in body["detail"]


def test_oversized_table_413():
    client = TestClient(create_app(max_table_bytes=64))
    r = client.post(
        "/api/sessions", files={"table": ("t.csv", CSV_BYTES, "text/csv")}
    )
    assert r.status_code == 413


def test_function_cap_413():
    client = TestClient(create_app(max_functions=2))
    r = client.post(
        "/api/sessions", files={"table": ("t.csv", CSV_BYTES, "text/csv")}
    )
    assert r.status_code == 413


def test_unknown_session_and_candidate_404(client):
    assert client.get("/api/sessions/nope/candidates").status_code == 404
    sid = new_session(client)["session_id"]
    assert client.get(f"/api/sessions/{sid}/candidates/9/form/f1").status_code == 404
    assert client.post(f"/api/sessions/{sid}/candidates/9/merge").status_code == 404


def test_list_candidates(client):
    sid = new_session(client)["session_id"]
    r = client.get(f"/api/sessions/{sid}/candidates")
    assert r.status_code == 200
    doc = r.json()
    assert len(doc["candidates"]) == 3
    assert len(doc["reports"]) == 3
    assert doc["active"] == 0
    assert doc["g0"]["provenance"] == "initial-G0"
    for g in doc["candidates"]:
        assert all(e["source"] < e["target"] for e in g["edges"])


def test_form_endpoint_flags_connectivity(client):
    sid = new_session(client)["session_id"]
    r = client.get(f"/api/sessions/{sid}/candidates/0/form/f1")
    assert r.status_code == 200
    doc = r.json()
    assert len(doc["matches"]) == 1
    match = doc["matches"][0]
    assert match["language"] == "l1"
    assert set(match["labels"]) == {"A", "B"}
    missing = client.get(f"/api/sessions/{sid}/candidates/0/form/zzz")
    assert missing.status_code == 404


def test_form_endpoint_unconnected_components(client):
    # candidate trees over the fixture always leave f3 = {A, C} connected
    # or not depending on shape; check flag agrees with components count
    sid = new_session(client)["session_id"]
    r = client.get(f"/api/sessions/{sid}/candidates/0/form/f3")
    match = r.json()["matches"][0]
    assert match["connected"] == (len(match["components"]) <= 1)


def test_edit_roundtrip_updates_report(client):
    sid = new_session(client)["session_id"]
    graph = client.get(f"/api/sessions/{sid}/candidates").json()["candidates"][0]
    present = {(e["source"], e["target"]) for e in graph["edges"]}
    absent = next(
        (u, v) for u in range(4) for v in range(u + 1, 4) if (u, v) not in present
    )
    r = client.post(
        f"/api/sessions/{sid}/candidates/0/edits",
        json={"kind": "add_edge", "source": absent[0], "target": absent[1], "weight": 2},
    )
    assert r.status_code == 200
    doc = r.json()
    assert doc["history_length"] == 1
    assert doc["report"]["n_edges"] == len(present) + 1


def test_edit_rejections_400(client):
    sid = new_session(client)["session_id"]
    graph = client.get(f"/api/sessions/{sid}/candidates").json()["candidates"][0]
    e0 = graph["edges"][0]
    bad = [
        {"kind": "add_edge", "source": e0["source"], "target": e0["target"]},
        {"kind": "delete_edge", "source": 0, "target": 0},
        {"kind": "mystery"},
        {"kind": "set_weight", "source": e0["source"], "target": e0["target"], "weight": -1},
    ]
    for action in bad:
        r = client.post(f"/api/sessions/{sid}/candidates/0/edits", json=action)
        assert r.status_code == 400, action
        assert r.json()["stage"] in ("edit", "request")
    r = client.post(
        f"/api/sessions/{sid}/candidates/0/edits", content=b"not json",
        headers={"Content-Type": "application/json"},
    )
    assert r.status_code == 400


def test_merge_then_report_full_recall(client):
    sid = new_session(client)["session_id"]
    r = client.post(f"/api/sessions/{sid}/candidates/0/merge")
    assert r.status_code == 200
    assert r.json()["report"]["recall"] == 1.0
    fetched = client.get(f"/api/sessions/{sid}/candidates").json()
    assert fetched["reports"][0]["recall"] == 1.0


def test_undo_reverts_and_reports(client):
    sid = new_session(client)["session_id"]
    before = client.get(f"/api/sessions/{sid}/candidates").json()["candidates"][0]
    client.post(f"/api/sessions/{sid}/candidates/0/merge")
    r = client.post(f"/api/sessions/{sid}/candidates/0/undo")
    assert r.status_code == 200
    doc = r.json()
    assert doc["undone"] is True
    assert doc["graph"]["edges"] == before["edges"]
    r2 = client.post(f"/api/sessions/{sid}/candidates/0/undo")
    assert r2.json()["undone"] is False


def test_export_json_and_dot(client):
    sid = new_session(client)["session_id"]
    r = client.get(f"/api/sessions/{sid}/candidates/0/export?format=json")
    assert r.status_code == 200
    doc = json.loads(r.content)
    assert doc["provenance"] == "mst-candidate"
    r = client.get(f"/api/sessions/{sid}/candidates/0/export?format=dot")
    assert r.status_code == 200
    assert b"graph semantic_map {" in r.content
    r = client.get(f"/api/sessions/{sid}/candidates/0/export?format=png")
    assert r.status_code == 400


def test_concurrent_edit_conflict_409(client):
    sid = new_session(client)["session_id"]
    session = client.app.state.store.get(sid)
    assert session.lock.acquire(blocking=False)
    try:
        r = client.post(f"/api/sessions/{sid}/candidates/0/merge")
        assert r.status_code == 409
    finally:
        session.lock.release()
    assert client.post(f"/api/sessions/{sid}/candidates/0/merge").status_code == 200


def test_gets_are_pure_reads(client):
    sid = new_session(client)["session_id"]
    first = client.get(f"/api/sessions/{sid}/candidates").json()
    for _ in range(3):
        client.get(f"/api/sessions/{sid}/candidates/0/form/f1")
        client.get(f"/api/sessions/{sid}/candidates/0/export?format=json")
    again = client.get(f"/api/sessions/{sid}/candidates").json()
    assert again == first


def test_session_ttl_eviction():
    client = TestClient(create_app(ttl_seconds=0.0))
    sid = new_session(client)["session_id"]
    import time

    time.sleep(0.01)
    assert client.get(f"/api/sessions/{sid}/candidates").status_code == 404


def test_edits_target_specific_candidate(client):
    sid = new_session(client)["session_id"]
    r = client.post(f"/api/sessions/{sid}/candidates/1/merge")
    assert r.status_code == 200
    assert r.json()["active"] == 1
    doc = client.get(f"/api/sessions/{sid}/candidates").json()
    assert doc["reports"][1]["recall"] == 1.0
