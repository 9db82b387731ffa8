import warnings

import pytest

with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    from fastapi.testclient import TestClient

from cqdirac.service import app
from cqdirac.suites import SUITE_NAMES


@pytest.fixture(scope="module")
def client():
    with TestClient(app) as c:
        yield c


def test_health(client):
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json() == {"status": "ok"}


def test_list_suites(client):
    response = client.get("/suites")
    assert response.status_code == 200
    assert response.json() == list(SUITE_NAMES)


def test_run_single_suite(client):
    response = client.post("/suites/algebra", json={"seed": 1, "cases": 30})
    assert response.status_code == 200
    payload = response.json()
    assert payload["suite"] == "algebra"
    assert payload["cases"] == 30
    assert payload["seed"] == 1
    assert payload["status"] == "pass"
    assert payload["elapsed_ms"] >= 0


def test_unknown_suite_is_404(client):
    response = client.post("/suites/bogus", json={})
    assert response.status_code == 404


def test_request_validation(client):
    assert client.post("/suites/algebra", json={"seed": -1}).status_code == 422
    assert client.post("/suites/algebra", json={"cases": 0}).status_code == 422
    assert client.post("/suites/algebra", json={"tol": 0.0}).status_code == 422


def test_run_all_suites(client):
    response = client.post("/suites", json={"seed": 0, "cases": 5})
    assert response.status_code == 200
    payload = response.json()
    assert [r["suite"] for r in payload] == list(SUITE_NAMES)
    assert all(r["status"] == "pass" for r in payload)


def test_obstruction_demo(client):
    response = client.post("/demos/obstruction", json={"seed": 3})
    assert response.status_code == 200
    payload = response.json()
    assert payload["seed"] == 3
    assert len(payload["axis"]) == 3
    labels = [row["label"] for row in payload["rows"]]
    assert labels[0] == "identical pair"
    assert labels[1] == "complex-scaled pair"
    assert payload["generic_floor"] > 1e-3
