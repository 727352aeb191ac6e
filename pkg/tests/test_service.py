import pytest
from fastapi.testclient import TestClient

from metasylv.service import app, fuss_catalan


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


class TestCount:
    def test_classes(self, client):
        r = client.post("/count", json={"n": 5, "m": 2, "object": "classes"})
        assert r.status_code == 200 and r.json()["count"] == 945

    def test_trivial(self, client):
        r = client.post("/count", json={"n": 1, "m": 7, "object": "classes"})
        assert r.json()["count"] == 1

    def test_ballot_paths(self, client):
        r = client.post("/count", json={"n": 3, "m": 2, "object": "ballot-paths"})
        assert r.json()["count"] == 12

    def test_mperms(self, client):
        r = client.post("/count", json={"n": 3, "m": 2, "object": "mperms"})
        assert r.json()["count"] == 90

    def test_size_limit(self, client):
        r = client.post("/count", json={"n": 7, "m": 2, "object": "classes"})
        assert r.status_code == 413 and r.json()["error"] == "size_limit"

    def test_env_override(self, client, monkeypatch):
        monkeypatch.setenv("METASYLV_MAX_NM", "14")
        r = client.post("/count", json={"n": 7, "m": 2, "object": "classes"})
        assert r.status_code == 200

    def test_bad_object(self, client):
        r = client.post("/count", json={"n": 2, "m": 2, "object": "widgets"})
        assert r.status_code == 422 and "detail" in r.json()

    def test_fuss_catalan_against_enumerator(self):
        from metasylv.tamari import enumerate_ballot_paths
        for n in range(1, 5):
            for m in range(1, 3):
                assert fuss_catalan(n, m) == \
                    sum(1 for _ in enumerate_ballot_paths(n, m))


class TestConvert:
    def test_chain_to_maxclass(self, client):
        r = client.post("/convert", json={
            "from": "chain", "to": "maxclass",
            "payload": [[2, 1, 3], [2, 3, 1]], "n": 3, "m": 2})
        assert r.json()["payload"]["word"] == [2, 2, 3, 1, 1, 3]

    def test_bad_payload(self, client):
        r = client.post("/convert", json={
            "from": "mperm", "to": "tree", "payload": "121", "n": 3, "m": 2})
        assert r.status_code == 422 and r.json()["error"] == "bad_payload"

    def test_bad_representation(self, client):
        r = client.post("/convert", json={
            "from": "mperm", "to": "widget", "payload": "1122"})
        assert r.status_code == 422 and "detail" in r.json()


class TestHasse:
    def test_weak_2_2(self, client):
        r = client.post("/hasse", json={"n": 2, "m": 2, "lattice": "weak"})
        d = r.json()["diagram"]
        assert len(d["elements"]) == 6 and len(d["covers"]) == 6

    def test_metasylvester_3_2(self, client):
        r = client.post("/hasse", json={"n": 3, "m": 2,
                                        "lattice": "metasylvester",
                                        "verify": True})
        d = r.json()["diagram"]
        assert len(d["elements"]) == 15 and len(d["covers"]) == 20

    def test_trivial(self, client):
        r = client.post("/hasse", json={"n": 1, "m": 1, "lattice": "mtamari"})
        d = r.json()["diagram"]
        assert len(d["elements"]) == 1 and d["covers"] == []

    def test_json_matches_in_memory(self, client):
        from metasylv.diagram import LatticeDiagram, weak_lattice_diagram
        r = client.post("/hasse", json={"n": 2, "m": 2, "lattice": "weak",
                                        "format": "json"})
        assert LatticeDiagram.from_dict(r.json()["diagram"]) == \
            weak_lattice_diagram(2, 2)

    def test_dot_format(self, client):
        r = client.post("/hasse", json={"n": 2, "m": 2, "lattice": "weak",
                                        "format": "dot"})
        assert r.json()["diagram"].startswith("digraph weak")

    def test_size_limit(self, client):
        r = client.post("/hasse", json={"n": 5, "m": 2, "lattice": "weak"})
        assert r.status_code == 413


class TestVerify:
    def test_all_tiny(self, client):
        r = client.post("/verify", json={"suite": "all", "max_nm": 2})
        body = r.json()
        assert body["passed"] is True
        assert len(body["results"]) >= 25

    def test_expected_negative_reported(self, client):
        r = client.post("/verify", json={"suite": "semi-quotient", "max_nm": 2})
        details = {res["name"]: res["detail"] for res in r.json()["results"]}
        assert "113223" in details["meet-counterexample"]
        assert "311223" in details["meet-counterexample"]

    def test_bad_suite(self, client):
        r = client.post("/verify", json={"suite": "everything", "max_nm": 2})
        assert r.status_code == 422

    def test_over_hard_cap(self, client):
        r = client.post("/verify", json={"suite": "all", "max_nm": 99})
        assert r.status_code == 422
