"""HTTP service endpoints."""

import numpy as np
import pytest
from fastapi.testclient import TestClient

import splitfft
from splitfft.densealg import VERIFY_TOLERANCE
from splitfft.service.app import create_app


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def test_health(client):
    resp = client.get("/health")
    assert resp.status_code == 200
    body = resp.json()
    assert body["status"] == "ok"
    assert body["version"] == splitfft.__version__


def test_transform_known_answer(client):
    resp = client.post("/transform", json={"re": [1, 2, 3, 4], "im": [0, 0, 0, 0]})
    assert resp.status_code == 200
    body = resp.json()
    assert body["re"] == [10.0, -2.0, -2.0, -2.0]
    assert body["im"] == [0.0, 2.0, 0.0, -2.0]
    assert body["m"] == 2
    assert body["algorithm"] == "dit"
    assert body["inverse"] is False


def test_transform_variants_agree(client):
    rng = np.random.default_rng(4)
    re = rng.standard_normal(32).tolist()
    im = rng.standard_normal(32).tolist()
    a = client.post("/transform", json={"re": re, "im": im, "algorithm": "dit"}).json()
    b = client.post("/transform", json={"re": re, "im": im, "algorithm": "dif"}).json()
    assert np.max(np.abs(np.array(a["re"]) - b["re"])) <= 1e-10
    assert np.max(np.abs(np.array(a["im"]) - b["im"])) <= 1e-10


def test_transform_inverse_round_trip(client):
    rng = np.random.default_rng(5)
    re = rng.standard_normal(16).tolist()
    im = rng.standard_normal(16).tolist()
    fwd = client.post("/transform", json={"re": re, "im": im}).json()
    back = client.post(
        "/transform", json={"re": fwd["re"], "im": fwd["im"], "inverse": True}
    ).json()
    assert back["inverse"] is True
    assert np.max(np.abs(np.array(back["re"]) - re)) <= 1e-9
    assert np.max(np.abs(np.array(back["im"]) - im)) <= 1e-9


def test_transform_rejects_bad_lengths(client):
    resp = client.post("/transform", json={"re": [1, 2, 3], "im": [0, 0, 0]})
    assert resp.status_code == 400
    assert "power of two" in resp.json()["detail"]

    resp = client.post("/transform", json={"re": [1, 2], "im": [0]})
    assert resp.status_code == 400
    assert "channel lengths differ" in resp.json()["detail"]


def test_transform_rejects_unknown_algorithm(client):
    resp = client.post(
        "/transform", json={"re": [1, 2], "im": [0, 0], "algorithm": "qft"}
    )
    assert resp.status_code == 422


def test_verify_endpoint(client):
    resp = client.post("/verify", json={"max_m": 4})
    assert resp.status_code == 200
    body = resp.json()
    assert body["passed"] is True
    assert body["tolerance"] == VERIFY_TOLERANCE
    assert len(body["results"]) == 8
    seen = {(r["m"], r["algorithm"]) for r in body["results"]}
    assert seen == {(m, a) for m in range(1, 5) for a in ("dit", "dif")}
    assert all(r["passed"] for r in body["results"])
    assert all(r["deviation"] <= VERIFY_TOLERANCE for r in body["results"])


def test_verify_rejects_oversized_request(client):
    resp = client.post("/verify", json={"max_m": 99})
    assert resp.status_code == 400
    assert "limit" in resp.json()["detail"]


def test_bench_endpoint(client):
    resp = client.post("/bench", json={"min_m": 1, "max_m": 3, "reps": 2})
    assert resp.status_code == 200
    rows = resp.json()["rows"]
    assert [(r["m"], r["algorithm"]) for r in rows] == [
        (m, a) for m in (1, 2, 3) for a in ("dit", "dif", "naive")
    ]
    for row in rows:
        assert row["median_seconds"] > 0
        assert row["n"] == 1 << row["m"]
        if row["algorithm"] == "naive":
            assert row["real_mults"] is None
        else:
            assert row["real_adds"] == 4 * (row["n"] // 2) * row["m"]
    # both fast variants report the same census
    dit = [r for r in rows if r["algorithm"] == "dit"]
    dif = [r for r in rows if r["algorithm"] == "dif"]
    for a, b in zip(dit, dif):
        assert a["real_mults"] == b["real_mults"]
        assert a["generic_rotations"] == b["generic_rotations"]


def test_bench_rejects_bad_ranges(client):
    assert client.post("/bench", json={"min_m": 5, "max_m": 3}).status_code == 400
    assert client.post("/bench", json={"min_m": 1, "max_m": 30}).status_code == 422
    assert client.post("/bench", json={"reps": 0}).status_code == 422
