"""HTTP service tests: session lifecycle, rule enforcement, status codes."""

from __future__ import annotations

import random

from fastapi.testclient import TestClient

from thuegame.game import replay, transcript_from_dict
from thuegame.service import SessionStore, create_app
from thuegame.words import is_nonrepetitive


def make_client(capacity: int = 64) -> tuple[TestClient, SessionStore]:
    store = SessionStore(capacity=capacity)
    return TestClient(create_app(store)), store


def create_session(client: TestClient, mode: str, q: int, rounds: int) -> dict:
    resp = client.post("/sessions", json={"mode": mode, "q": q, "rounds": rounds})
    assert resp.status_code == 200, resp.text
    return resp.json()


def test_health():
    client, _ = make_client()
    resp = client.get("/health")
    assert resp.status_code == 200
    body = resp.json()
    assert body["status"] == "ok"
    assert isinstance(body["version"], str)


def test_new_human_bob_view_shape():
    client, _ = make_client()
    created = create_session(client, "human-bob", 12, 8)
    view = created["view"]
    assert view["id"] == created["id"]
    assert view["mode"] == "human-bob"
    assert view["q"] == 12 and view["max_rounds"] == 8
    assert view["round"] == 0 and view["status"] == "ongoing"
    assert view["points"] == []
    assert view["legal_slots"] == [0]  # empty line has a single slot
    assert view["pending"] is None and view["witness"] is None
    assert view["engines"] == {"alice": "coloring", "bob": None}
    assert view["transcript"]["final_word"] == []


def test_human_bob_engine_survives_random_play():
    # the certified table must answer any slot sequence for the full budget
    client, _ = make_client()
    for seed in (1, 2, 3):
        rng = random.Random(seed)
        created = create_session(client, "human-bob", 12, 8)
        sid, view = created["id"], created["view"]
        while view["legal_slots"]:
            slot = rng.choice(view["legal_slots"])
            resp = client.post(f"/sessions/{sid}/bob-move", json={"slot": slot})
            assert resp.status_code == 200, resp.text
            view = resp.json()
            assert view["status"] == "ongoing"
            assert view["pending"] is None  # engine Alice answers in the same request
        assert view["round"] == 8 and view["witness"] is None
        point_word = tuple(p["color"] for p in view["points"])
        assert is_nonrepetitive(point_word)
        # budget exhausted: further slot picks are rejected
        resp = client.post(f"/sessions/{sid}/bob-move", json={"slot": 0})
        assert resp.status_code == 400

        replayed = replay(transcript_from_dict(view["transcript"]))
        assert replayed.word() == point_word


def test_human_alice_against_solver_bob():
    client, _ = make_client()
    created = create_session(client, "human-alice", 3, 10)
    sid, view = created["id"], created["view"]
    assert view["engines"] == {"alice": None, "bob": "solver"}
    # engine Bob stages its slot at creation
    assert view["pending"] is not None
    assert set(view["pending"]) == {"num", "depth", "value", "slot"}
    assert view["legal_slots"] == []
    while view["status"] == "ongoing" and view["pending"] is not None:
        resp = client.post(f"/sessions/{sid}/alice-move", json={"color": 0})
        assert resp.status_code == 200, resp.text
        view = resp.json()
    # stubbornly repeating one color loses immediately
    assert view["status"] == "ended"
    assert view["witness"] == {"start": 0, "size": 1}
    assert view["round"] == 2
    resp = client.post(f"/sessions/{sid}/alice-move", json={"color": 0})
    assert resp.status_code == 400


def test_auto_small_alphabet_is_decided():
    client, _ = make_client()
    view = create_session(client, "auto", 2, 8)["view"]
    assert view["engines"] == {"alice": "greedy", "bob": "solver"}
    assert view["status"] == "ended"
    assert view["witness"] is not None
    assert view["round"] == len(view["points"]) <= 8


def test_auto_full_palette_survives():
    client, _ = make_client()
    view = create_session(client, "auto", 12, 6)["view"]
    assert view["engines"] == {"alice": "coloring", "bob": "heuristic"}
    assert view["status"] == "ongoing"
    assert view["round"] == 6 and view["legal_slots"] == []
    assert is_nonrepetitive(tuple(view["transcript"]["final_word"]))


def test_create_session_validation():
    client, _ = make_client()

    def status(payload: dict) -> int:
        return client.post("/sessions", json=payload).status_code

    assert status({"mode": "spectator", "q": 3, "rounds": 4}) == 400
    assert status({"mode": "auto", "q": 0, "rounds": 4}) == 400
    assert status({"mode": "auto", "q": 65, "rounds": 4}) == 400
    assert status({"mode": "auto", "q": 3, "rounds": 0}) == 400
    assert status({"mode": "auto", "q": 3, "rounds": 513}) == 400
    # malformed bodies are 400, not framework 422s
    assert status({}) == 400
    assert status({"mode": "auto", "q": "three", "rounds": 4}) == 400
    # human Bob beyond the table budget is refused, human Alice needs no table
    assert status({"mode": "human-bob", "q": 12, "rounds": 11}) == 400
    assert status({"mode": "human-alice", "q": 12, "rounds": 11}) == 200


def test_unknown_session_is_404():
    client, _ = make_client()
    assert client.get("/sessions/deadbeef").status_code == 404
    assert client.get("/sessions/deadbeef/transcript").status_code == 404
    assert (
        client.post("/sessions/deadbeef/bob-move", json={"slot": 0}).status_code == 404
    )
    assert (
        client.post("/sessions/deadbeef/alice-move", json={"color": 0}).status_code
        == 404
    )


def test_moves_require_matching_mode():
    client, _ = make_client()
    bob_sid = create_session(client, "human-bob", 4, 4)["id"]
    alice_sid = create_session(client, "human-alice", 4, 4)["id"]
    auto_sid = create_session(client, "auto", 4, 4)["id"]

    resp = client.post(f"/sessions/{bob_sid}/alice-move", json={"color": 0})
    assert resp.status_code == 400
    resp = client.post(f"/sessions/{alice_sid}/bob-move", json={"slot": 0})
    assert resp.status_code == 400
    assert (
        client.post(f"/sessions/{auto_sid}/bob-move", json={"slot": 0}).status_code
        == 400
    )
    assert (
        client.post(f"/sessions/{auto_sid}/alice-move", json={"color": 0}).status_code
        == 400
    )


def test_rejected_move_leaves_session_unchanged():
    client, _ = make_client()
    sid = create_session(client, "human-bob", 4, 6)["id"]
    resp = client.post(f"/sessions/{sid}/bob-move", json={"slot": 5})
    assert resp.status_code == 400
    view = client.get(f"/sessions/{sid}").json()
    assert view["round"] == 0 and view["points"] == []
    assert client.post(f"/sessions/{sid}/bob-move", json={"slot": "left"}).status_code == 400
    resp = client.post(f"/sessions/{sid}/bob-move", json={"slot": 0})
    assert resp.status_code == 200
    assert resp.json()["round"] == 1


def test_busy_session_is_409():
    client, store = make_client()
    sid = create_session(client, "human-bob", 4, 4)["id"]
    session = store.get(sid)
    assert session is not None
    session.lock.acquire()
    try:
        assert client.get(f"/sessions/{sid}").status_code == 409
        resp = client.post(f"/sessions/{sid}/bob-move", json={"slot": 0})
        assert resp.status_code == 409
        assert client.get(f"/sessions/{sid}/transcript").status_code == 409
    finally:
        session.lock.release()
    assert client.get(f"/sessions/{sid}").status_code == 200


def test_lru_eviction():
    client, store = make_client(capacity=2)
    first = create_session(client, "human-bob", 2, 2)["id"]
    second = create_session(client, "human-bob", 2, 2)["id"]
    third = create_session(client, "human-bob", 2, 2)["id"]
    assert len(store) == 2
    assert client.get(f"/sessions/{first}").status_code == 404
    assert client.get(f"/sessions/{second}").status_code == 200
    assert client.get(f"/sessions/{third}").status_code == 200


def test_engine_failure_forfeits_instead_of_500():
    client, store = make_client()
    sid = create_session(client, "human-bob", 4, 6)["id"]
    session = store.get(sid)
    assert session is not None

    def boom(state):
        raise RuntimeError("engine crashed")

    session.engine_alice = boom
    resp = client.post(f"/sessions/{sid}/bob-move", json={"slot": 0})
    assert resp.status_code == 200
    view = resp.json()
    assert view["status"] == "forfeit"
    assert view["transcript"]["forfeit"] == {
        "actor": "alice",
        "reason": "engine crashed",
    }
    assert client.post(f"/sessions/{sid}/bob-move", json={"slot": 0}).status_code == 400


def test_transcript_endpoint_matches_view():
    client, _ = make_client()
    created = create_session(client, "auto", 3, 6)
    sid = created["id"]
    transcript = client.get(f"/sessions/{sid}/transcript")
    assert transcript.status_code == 200
    assert transcript.json() == client.get(f"/sessions/{sid}").json()["transcript"]
