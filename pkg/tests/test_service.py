"""HTTP service endpoints and payload schema conformance."""

import json
from importlib import resources

import jsonschema
import pytest
from fastapi.testclient import TestClient

from obstructor.service import create_app

SCHEMA = json.loads(
    resources.files("obstructor.data").joinpath("report.schema.json").read_text("utf-8")
)


def validate(payload, kind):
    jsonschema.validate(
        payload,
        {"$ref": "#/$defs/%s" % kind, "$defs": SCHEMA["$defs"]},
        cls=jsonschema.Draft202012Validator,
    )


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def test_health(client):
    r = client.get("/health")
    assert r.status_code == 200
    body = r.json()
    assert body["status"] == "ok"
    assert body["schema_version"] == "1"


def test_derive_ok(client):
    r = client.post("/derive", json={"spec": "PSU(3)", "include_trace": True})
    assert r.status_code == 200
    body = r.json()
    validate(body, "derive")
    assert body["l0"] == 3
    assert body["provenance"] == "fully-engine-derived"
    assert any(step["stage"] == "φ*" for step in body["trace"])


def test_derive_omits_trace_by_default(client):
    body = client.post("/derive", json={"spec": "PSU(3)"}).json()
    validate(body, "derive")
    assert "trace" not in body


def test_derive_bad_spec(client):
    r = client.post("/derive", json={"spec": "SU(6)/Z4"})
    assert r.status_code == 400
    body = r.json()
    assert body["error"] == "group-spec"
    assert "4 does not divide 6" in body["message"]
    assert body["position"] == 2


def test_derive_request_validation(client):
    assert client.post("/derive", json={}).status_code == 422
    assert (
        client.post("/derive", json={"spec": "PSU(3)", "max_degree": 99}).status_code
        == 422
    )


def test_check_ok(client):
    r = client.post("/check", json={"spec": "PSU(4)", "level": 8, "genus": 3})
    assert r.status_code == 200
    body = r.json()
    validate(body, "check")
    assert body["prequantizable"] is True
    assert body["l0"] == 4
    assert body["genus_independent"] is True


def test_check_rejected_level(client):
    body = client.post("/check", json={"spec": "PSU(4)", "level": 6}).json()
    validate(body, "check")
    assert body["prequantizable"] is False
    assert body["smallest_level"] == 4


def test_table_ok(client):
    r = client.post("/table", json={"family": "exceptional"})
    assert r.status_code == 200
    body = r.json()
    validate(body, "table")
    assert body["all_match"] is True
    assert [row["spec"] for row in body["rows"]] == ["PE6", "PE7"]


def test_table_unknown_family(client):
    r = client.post("/table", json={"family": "nope"})
    assert r.status_code == 400
    assert r.json()["error"] == "group-spec"


def test_verify_catalog(client):
    r = client.post("/verify-catalog")
    assert r.status_code == 200
    body = r.json()
    validate(body, "verify")
    assert body["all_ok"] is True
    assert len(body["presentations"]) >= 13
