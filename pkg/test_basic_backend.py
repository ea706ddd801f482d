#!/usr/bin/env python3
"""
Basic checks of the report models and the HTTP API
"""
from fastapi.testclient import TestClient

from backend.app import app
from backend.completion.completion_engine import fli_completable
from backend.config import DEFAULT_CONFIG, CalculusConfig
from backend.dsl import parse_expr
from backend.models.numeric import GQ
from backend.models.report_models import (
    SCHEMA_VERSION, CompletionTarget, NumericPointData, Verdict, VerdictOutcome, VerifyRequest,
)

client = TestClient(app)
PAIR = {"a": "ushift", "b": "adj(ushift)"}


def test_models():
    verdict = Verdict(check="holes", outcome=VerdictOutcome.EXACT, explanation="ok")
    data = verdict.to_json()
    assert data["schema"] == SCHEMA_VERSION
    assert data["outcome"] == "exact"
    assert verdict.passed
    request = VerifyRequest.model_validate({"check": "harte", **PAIR, "lambda": "0", "target": "fri"})
    assert request.lambda_ == "0"
    assert request.target == CompletionTarget.FRI
    assert CalculusConfig() == DEFAULT_CONFIG


def test_completion_report_json():
    report = fli_completable(parse_expr("ushift"), parse_expr("adj(ushift)"), GQ(0))
    data = report.to_json()
    assert data["decision"] == "yes"
    assert data["case"] == "finite"
    assert data["point_data"]["a"]["beta_bar"] == "1"
    assert data["certificate"]["pairs"][0][0]["atom"] == 0


def test_numeric_point_data_flags_caps():
    estimate = NumericPointData(alpha_est=8, beta_est=0, closed_evidence="stable_gap",
                                alpha_capped=True, per_size=[])
    assert estimate.capped
    assert estimate.to_json()["capped"] is True


def test_health():
    response = client.get("/api/health")
    assert response.status_code == 200
    assert response.json() == {"status": "ok", "schema": SCHEMA_VERSION}


def test_classify_route():
    response = client.post("/api/classify", json={"op": "ushift", "lambda": "1/2", "kind": "left"})
    assert response.status_code == 200
    body = response.json()
    assert body["resolvent"] is True
    assert body["index"] == "-1"


def test_spectrum_route():
    response = client.post("/api/spectrum", json={"op": "adj(ushift)", "kind": "fri"})
    assert response.status_code == 200
    assert response.json()["bounded"] is True


def test_complete_route():
    response = client.post("/api/complete", json={**PAIR, "lambda": "0", "target": "inv"})
    assert response.status_code == 200
    body = response.json()
    assert body["decision"] == "yes"
    assert body["certificate"]["k"] == 1


def test_verify_routes():
    response = client.post("/api/verify", json={"check": "delta", **PAIR})
    assert response.status_code == 200
    assert response.json()["outcome"] == "exact"
    cert = client.post("/api/complete", json={**PAIR, "lambda": "0"}).json()["certificate"]
    response = client.post("/api/verify", json={"check": "harte", **PAIR, "c": cert})
    assert response.json()["outcome"] == "exact"
    response = client.post("/api/verify/all", json={**PAIR, "samples": 2})
    assert response.status_code == 200
    checks = [v["check"] for v in response.json()["verdicts"]]
    assert "wforms" in checks and "duality(B)" in checks


def test_oracle_route():
    response = client.post("/api/oracle", json={"op": "adj(ushift)", "lambda": "0", "sizes": [32, 64]})
    assert response.status_code == 200
    assert response.json()["alpha_est"] == 1


def test_error_mapping():
    response = client.post("/api/classify", json={"op": "ushift (+)", "lambda": "0"})
    assert response.status_code == 400
    body = response.json()
    assert body["error"] == "DslSyntaxError"
    assert (body["line"], body["column"]) == (1, 11)
    assert client.post("/api/classify", json={"op": "diag{1:2}", "lambda": "0"}).status_code == 400
    assert client.post("/api/verify", json={"check": "nope", **PAIR}).status_code == 404
    assert client.post("/api/verify", json={"check": "holes", "a": "ushift"}).status_code == 400
    response = client.post("/api/oracle", json={"op": "ushift", "lambda": "0", "sizes": [64, 32]})
    assert response.status_code == 422
