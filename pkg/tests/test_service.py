"""HTTP endpoints and the CLI client: statuses, exit codes, determinism."""

import json
from pathlib import Path

import pytest
from click.testing import CliRunner
from fastapi.testclient import TestClient

from bhkmirror.cli import main
from bhkmirror.service.app import app
from bhkmirror.service.models import OrbifoldInput, Report

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def load(name):
    return json.loads((DATA / name).read_text())


class TestEndpoints:
    def test_healthz(self, client):
        assert client.get("/healthz").json()["status"] == "ok"

    def test_validate_ok(self, client):
        res = client.post("/validate", json=load("orbifold_a.json"))
        assert res.status_code == 200
        body = res.json()
        assert body["status"] == "ok" and body["exit_code"] == 0
        assert body["potential"]["weights"] == [3, 3, 6, 8, 4]
        assert body["potential"]["calabi_yau"] and body["potential"]["gorenstein"]

    def test_validate_condition_violation(self, client):
        res = client.post("/validate", json=load("bad_singular.json"))
        assert res.status_code == 200
        body = res.json()
        assert body["status"] == "invalid" and body["exit_code"] == 2
        assert "condition (1)" in body["message"]

    def test_validate_sl_violation(self, client):
        body = client.post("/validate", json=load("bad_sl.json")).json()
        assert body["exit_code"] == 2
        assert "SL violation" in body["message"]

    def test_malformed_is_422(self, client):
        doc = load("orbifold_a.json")
        doc["matrix"] = doc["matrix"][:3]
        assert client.post("/validate", json=doc).status_code == 422
        doc = load("orbifold_a.json")
        doc["matrix"][0][0] = -2
        assert client.post("/validate", json=doc).status_code == 422

    def test_mirror_round_trip(self, client):
        body = client.post("/mirror", json=load("orbifold_aprime.json")).json()
        assert body["status"] == "ok"
        assert body["transpose"]["reduced_weights"] == [1, 1, 2, 2, 2]
        # the emitted document is a valid input whose own mirror restores
        # the original group data
        emitted = body["mirror_input"]
        OrbifoldInput.model_validate(emitted)
        back = client.post("/mirror", json=emitted).json()
        assert back["status"] == "ok"
        assert back["transpose"]["monomials"] == load("orbifold_aprime.json")["matrix"]

    def test_model_endpoint(self, client):
        req = {"orbifold": load("orbifold_a.json"), "side": "mirror", "scale": 1}
        body = client.post("/model", json=req).json()
        assert body["status"] == "ok"
        model = body["models"][0]
        assert model["fermat_degree"] == 24
        assert model["quotient_order"] == 1728

    def test_compare_endpoint(self, client):
        req = {"first": load("orbifold_a.json"), "second": load("orbifold_aprime.json")}
        body = client.post("/compare", json=req).json()
        assert body["status"] == "ok" and body["exit_code"] == 0
        assert any("certificate" in c for c in body["checks"])

    def test_compare_mismatch(self, client):
        quintic = load("fermat_quintic.json")
        other = dict(quintic)
        other["group"] = {"generators": [{"num": [1, 4, 0, 0, 0], "den": 5}]}
        body = client.post("/compare", json={"first": quintic, "second": other}).json()
        assert body["status"] == "mismatch" and body["exit_code"] == 3

    def test_hodge_endpoint(self, client):
        req = {"orbifold": load("orbifold_aprime.json"), "cr": True,
               "check_mirror": True}
        body = client.post("/hodge", json=req).json()
        assert body["status"] == "ok"
        assert "mirror symmetry: PASS" in body["checks"]
        cr = next(d for d in body["diamonds"] if d["name"] == "chen-ruan")
        cells = {(e["p"], e["q"]): e["h"] for e in cr["entries"]}
        assert cells[("1", "1")] == 55 and cells[("2", "1")] == 7

    def test_hodge_resource_limit(self, client):
        req = {"orbifold": load("orbifold_a.json"), "limit": 10}
        body = client.post("/hodge", json=req).json()
        assert body["status"] == "resource-limit" and body["exit_code"] == 4


class TestCli:
    def test_validate_exit_codes(self):
        runner = CliRunner()
        ok = runner.invoke(main, ["validate", str(DATA / "orbifold_a.json")])
        assert ok.exit_code == 0
        assert "weights: (3, 3, 6, 8, 4)" in ok.output
        bad = runner.invoke(main, ["validate", str(DATA / "bad_singular.json")])
        assert bad.exit_code == 2
        assert "condition (1)" in bad.output
        sl = runner.invoke(main, ["validate", str(DATA / "bad_sl.json")])
        assert sl.exit_code == 2 and "SL violation" in sl.output
        missing = runner.invoke(main, ["validate", str(DATA / "nonexistent.json")])
        assert missing.exit_code == 1

    def test_malformed_json_is_exit_1(self, tmp_path):
        bad = tmp_path / "broken.json"
        bad.write_text("{not json")
        runner = CliRunner()
        result = runner.invoke(main, ["validate", str(bad)])
        assert result.exit_code == 1
        schema = tmp_path / "schema.json"
        schema.write_text(json.dumps({"n": 1, "matrix": [[2]]}))
        result = runner.invoke(main, ["validate", str(schema)])
        assert result.exit_code == 1

    def test_compare_exit_codes(self):
        runner = CliRunner()
        same = runner.invoke(main, ["compare", str(DATA / "orbifold_a.json"),
                                    str(DATA / "orbifold_aprime.json")])
        assert same.exit_code == 0
        assert "certificate" in same.output

    def test_hodge_check_mirror(self):
        runner = CliRunner()
        result = runner.invoke(main, ["hodge", str(DATA / "orbifold_a.json"),
                                      "--check-mirror"])
        assert result.exit_code == 0
        assert "mirror symmetry: PASS" in result.output

    def test_hodge_sector_table(self):
        runner = CliRunner()
        result = runner.invoke(main, ["--json", "hodge",
                                      str(DATA / "fermat_quintic.json"), "--cr"])
        assert result.exit_code == 0
        report = Report.model_validate(json.loads(result.output))
        assert len(report.sectors) == 1

    def test_mirror_output_file(self, tmp_path):
        runner = CliRunner()
        out = tmp_path / "mirror.json"
        result = runner.invoke(main, ["mirror", str(DATA / "orbifold_aprime.json"),
                                      "-o", str(out)])
        assert result.exit_code == 0
        emitted = json.loads(out.read_text())
        OrbifoldInput.model_validate(emitted)
        second = runner.invoke(main, ["validate", str(out)])
        assert second.exit_code == 0

    def test_json_reports_are_byte_identical(self):
        runner = CliRunner()
        args = ["--json", "hodge", str(DATA / "orbifold_aprime.json"), "--cr"]
        first = runner.invoke(main, args)
        second = runner.invoke(main, args)
        assert first.exit_code == second.exit_code == 0
        assert first.output == second.output
        assert first.output.endswith("\n")

    def test_json_round_trip(self):
        runner = CliRunner()
        result = runner.invoke(main, ["--json", "validate",
                                      str(DATA / "orbifold_a.json")])
        report = Report.model_validate(json.loads(result.output))
        assert report.to_json() == result.output

    def test_scale_flag(self):
        runner = CliRunner()
        result = runner.invoke(main, ["--json", "model",
                                      str(DATA / "orbifold_a.json"),
                                      "--side", "mirror", "--scale", "2"])
        report = Report.model_validate(json.loads(result.output))
        assert report.models[0].fermat_degree == 48
        reduced = next(m for m in report.models if "reduced" in m.side)
        assert reduced.fermat_degree == 24


class TestServerMode:
    def test_cli_against_live_server(self, tmp_path):
        # run uvicorn in a subprocess and point the CLI at it
        import subprocess
        import sys
        import time

        import httpx

        proc = subprocess.Popen(
            [sys.executable, "-m", "uvicorn",
             "bhkmirror.service.app:app", "--port", "8765",
             "--log-level", "warning"],
            stdout=subprocess.DEVNULL, stderr=subprocess.DEVNULL)
        try:
            base = "http://127.0.0.1:8765"
            for _ in range(50):
                try:
                    if httpx.get(base + "/healthz", timeout=1.0).status_code == 200:
                        break
                except httpx.TransportError:
                    time.sleep(0.2)
            else:
                pytest.skip("service did not come up")
            runner = CliRunner()
            local = runner.invoke(main, ["--json", "validate",
                                         str(DATA / "orbifold_a.json")])
            remote = runner.invoke(main, ["--json", "--server", base, "validate",
                                          str(DATA / "orbifold_a.json")])
            assert remote.exit_code == 0
            assert remote.output == local.output
        finally:
            proc.terminate()
            proc.wait(timeout=10)
