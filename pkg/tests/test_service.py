import pytest
from fastapi.testclient import TestClient

from gpgraph import GpParams, build, serialize_edge_list
from gpgraph.service import create_app


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def graph_text(n, k):
    g, _ = build(GpParams(n, k))
    return serialize_edge_list(g)


def test_health(client):
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json() == {"status": "ok"}


def test_generate_petersen(client):
    response = client.post("/generate", json={"n": 5, "k": 2})
    assert response.status_code == 200
    data = response.json()
    assert data["num_vertices"] == 10
    assert len(data["graph_text"].splitlines()) == 15
    assert data["outer"] == list(range(5))
    assert data["inner"] == list(range(5, 10))


def test_generate_invalid_params(client):
    response = client.post("/generate", json={"n": 6, "k": 3})
    assert response.status_code == 422
    assert "invalid parameters" in response.json()["detail"]


def test_recognize_round_trip(client):
    response = client.post("/recognize", json={"graph_text": graph_text(100, 3)})
    assert response.status_code == 200
    data = response.json()
    assert data["is_gp"] is True
    assert data["n"] == 100
    assert data["k"] == 3
    assert sorted(data["outer"] + data["inner"]) == list(range(200))
    assert data["reason"] is None


def test_recognize_rejects_k33(client):
    text = "0 3\n0 4\n0 5\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n"
    response = client.post("/recognize", json={"graph_text": text})
    assert response.status_code == 200
    data = response.json()
    assert data["is_gp"] is False
    assert data["reason"] == "OracleRejected"
    assert data["n"] is None


def test_recognize_oracle_flag(client):
    response = client.post(
        "/recognize", json={"graph_text": graph_text(7, 2), "oracle": True}
    )
    assert response.status_code == 200
    assert response.json()["is_gp"] is True


def test_recognize_non_cubic_input(client):
    response = client.post("/recognize", json={"graph_text": "0 1\n1 2\n2 0\n3 4\n4 5\n5 3\n"})
    assert response.status_code == 422
    assert "degree" in response.json()["detail"]


def test_recognize_malformed_input(client):
    response = client.post("/recognize", json={"graph_text": "0 one\n"})
    assert response.status_code == 422


def test_sigma_single_part(client):
    response = client.post("/sigma", json={"graph_text": graph_text(24, 5)})
    assert response.status_code == 200
    parts = response.json()["parts"]
    assert len(parts) == 1
    assert parts[0]["sigma"] == 8
    assert parts[0]["size"] == 72
    assert len(parts[0]["edges"]) == 72


def test_sigma_sorted_ascending(client):
    response = client.post("/sigma", json={"graph_text": graph_text(50, 5)})
    parts = response.json()["parts"]
    assert [p["sigma"] for p in parts] == [3, 6, 7]
    assert [p["size"] for p in parts] == [50, 50, 50]


def test_bench_records(client):
    response = client.post("/bench", json={"sizes": [100, 200], "k": 3, "reps": 2})
    assert response.status_code == 200
    records = response.json()["records"]
    assert len(records) == 4
    for record in records:
        assert record["accepted"] is True
        assert record["wall_time_ns"] > 0
        assert record["sigma_steps"] > 0


def test_bench_invalid_combo(client):
    response = client.post("/bench", json={"sizes": [10], "k": 7})
    assert response.status_code == 422
