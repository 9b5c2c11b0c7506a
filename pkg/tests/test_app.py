import json

from fastapi.testclient import TestClient

from qverify.app import create_app
from qverify.verifier.catalog import catalog

client = TestClient(create_app())


def test_catalog_endpoint():

    response = client.get("/catalog")
    assert response.status_code == 200
    entries = response.json()
    assert len(entries) == len(catalog())
    r8 = next(e for e in entries if e["id"] == "R-8")
    assert r8["fidelity"] == "corrected"
    assert r8["relation"] == "eq"


def test_expand_endpoint():

    response = client.post("/expand", json={"expr": "f2/f1^2", "order": 10})
    assert response.status_code == 200
    assert response.json() == {
        "order": 10,
        "modulus": 0,
        "coefficients": [1, 2, 4, 8, 14, 24, 40, 64, 100, 154, 232],
    }


def test_expand_reports_syntax_errors():

    response = client.post("/expand", json={"expr": "f1^", "order": 10})
    assert response.status_code == 400
    assert response.json()["detail"]["column"] == 3


def test_expand_reports_evaluation_errors():

    response = client.post("/expand", json={"expr": "1/(2 + q)", "order": 10})
    assert response.status_code == 400


def test_expand_validates_the_body():

    response = client.post("/expand", json={"expr": "f1", "order": -1})
    assert response.status_code == 422


def test_scan_endpoint():

    response = client.post("/scan", json={"a": 40, "b": 35, "m": 40, "n_max": 20})
    assert response.status_code == 200
    assert response.json() == []

    response = client.post("/scan", json={"a": 2, "b": 0, "m": 3, "n_max": 5})
    assert response.json()[0] == {"n": 0, "residue": 1}


def test_scan_rejects_bad_claims():

    response = client.post("/scan", json={"a": 4, "b": 7, "m": 8, "n_max": 5})
    assert response.status_code == 422


def test_verify_endpoint():

    response = client.post("/verify", json={"ids": ["M-2", "L2.1-a"], "order": 8})
    assert response.status_code == 200
    reports = response.json()
    assert [r["id"] for r in reports] == ["M-2", "L2.1-a"]
    assert all(r["status"] == "pass" for r in reports)


def test_verify_endpoint_errors():

    assert client.post("/verify", json={"ids": ["9-99"], "order": 8}).status_code == 404
    assert client.post("/verify", json={"ids": ["M-2"], "order": 4}).status_code == 400


def test_verify_stream_sends_one_event_per_record():

    ids = ["M-2", "L2.1-a", "3-14"]
    with client.stream("POST", "/verify/stream", json={"ids": ids, "order": 8}) as response:
        assert response.status_code == 200
        events = [
            json.loads(line[len("data:"):].strip()) for line in response.iter_lines() if line.startswith("data:")
        ]
    assert [event["id"] for event in events] == ids
    assert all(event["status"] == "pass" for event in events)


def test_verify_stream_rejects_low_order():

    response = client.post("/verify/stream", json={"ids": ["M-2"], "order": 4})
    assert response.status_code == 400
    assert "M-2" in response.json()["detail"]["msg"]
    assert client.post("/verify/stream", json={"ids": ["9-99"], "order": 8}).status_code == 404
