import json

from primegraph.classify import fixture
from primegraph.graphs import complement


def graph_payload(g):
    data = g.to_json_dict()
    return {"vertices": data["vertices"], "edges": data["edges"]}


class TestMeta:
    def test_root_lists_families(self, service_client):
        resp = service_client.get("/")
        assert resp.status_code == 200
        assert len(resp.json()["families"]) == 9


class TestClassifyEndpoint:
    def test_single_family(self, service_client):
        payload = {
            "graph": graph_payload(fixture("figure5")),
            "family": "psl27",
            "complement": True,
        }
        resp = service_client.post("/classify", json=payload)
        assert resp.status_code == 200
        verdicts = resp.json()["verdicts"]
        assert len(verdicts) == 1 and verdicts[0]["decision"] == "accept"
        assert verdicts[0]["certificate"]["hub"] == "7"

    def test_auto_runs_all_nine(self, service_client):
        payload = {
            "graph": graph_payload(fixture("figure2")),
            "family": "auto",
            "complement": True,
        }
        resp = service_client.post("/classify", json=payload)
        verdicts = resp.json()["verdicts"]
        assert len(verdicts) == 9
        assert all(v["decision"] == "reject" for v in verdicts)
        by_family = {v["family"]: v for v in verdicts}
        assert by_family["psl27"]["witness"]["kind"] == "no_constrained_coloring"

    def test_unknown_family_is_400(self, service_client):
        payload = {"graph": {"vertices": ["2"], "edges": []}, "family": "a5"}
        resp = service_client.post("/classify", json=payload)
        assert resp.status_code == 400
        assert resp.json()["error"] == "InvalidInput"

    def test_composite_label_is_400(self, service_client):
        payload = {"graph": {"vertices": ["6"], "edges": []}, "family": "solvable"}
        resp = service_client.post("/classify", json=payload)
        assert resp.status_code == 400


class TestConstructEndpoint:
    def test_accept_with_realization(self, service_client):
        payload = {
            "graph": graph_payload(fixture("figure5")),
            "family": "psl27",
            "complement": True,
            "realize": True,
        }
        resp = service_client.post("/construct", json=payload)
        assert resp.status_code == 200
        data = resp.json()
        assert data["accepted"] and data["obligations"]["ok"]
        assert data["realization"]["order"] == 840
        assert data["realization"]["matches_recipe"]
        assert data["realization"]["permutation_group"]

    def test_reject_reports_witness(self, service_client):
        payload = {
            "graph": graph_payload(complement(fixture("groetzsch"))),
            "family": "solvable",
        }
        resp = service_client.post("/construct", json=payload)
        data = resp.json()
        assert resp.status_code == 200 and not data["accepted"]
        assert data["verdict"]["witness"]["kind"] == "chromatic_obstruction"

    def test_symbolic_realization(self, service_client):
        gbar = {
            "vertices": ["a", "b", "c", "v"],
            "edges": [["a", "b"], ["a", "c"], ["b", "c"], ["c", "v"]],
        }
        payload = {
            "graph": gbar,
            "family": "psl27",
            "complement": True,
            "realize": True,
        }
        resp = service_client.post("/construct", json=payload)
        data = resp.json()
        assert data["realization"]["order"] == 168 * 337**3
        assert data["realization"]["symbolic_modules"] == [[337, 3]]
        assert data["realization"]["matches_recipe"]


class TestPrimeGraphEndpoint:
    def test_builtin(self, service_client):
        resp = service_client.post("/prime-graph", json={"builtin": "PSL(2,7)", "dot": True})
        data = resp.json()
        assert data["order"] == 168
        assert data["graph"]["edges"] == []
        assert data["complement"]["edges"] == [["2", "3"], ["2", "7"], ["3", "7"]]
        assert data["graph_dot"].startswith("graph {")

    def test_user_group(self, service_client):
        group = {
            "name": "S3",
            "degree": 3,
            "generators": [[1, 0, 2], [1, 2, 0]],
        }
        resp = service_client.post("/prime-graph", json={"group": group})
        data = resp.json()
        assert data["order"] == 6
        assert data["graph"]["edges"] == []

    def test_recipe(self, service_client):
        recipe = {
            "kind": "module_ext",
            "actor": {"kind": "cyclic", "prime": 5},
            "prime": 11,
            "rank": 1,
            "profile": {"5": "FPF"},
            "obligations": [{"prime": 5, "kind": "FROBENIUS_CYCLIC"}],
        }
        resp = service_client.post("/prime-graph", json={"recipe": recipe})
        assert resp.json()["graph"]["edges"] == []
        assert resp.json()["complement"]["edges"] == [["5", "11"]]

    def test_exactly_one_source(self, service_client):
        resp = service_client.post("/prime-graph", json={})
        assert resp.status_code == 400


class TestVerifyTablesEndpoint:
    def test_all_green(self, service_client):
        resp = service_client.post("/verify-tables")
        data = resp.json()
        assert resp.status_code == 200 and data["ok"]
        assert len(data["claims"]["checks"]) == 5
        assert len(data["tables"]) == 4


class TestFixturesEndpoint:
    def test_named(self, service_client):
        resp = service_client.get("/fixtures/whisker:5")
        data = resp.json()
        assert resp.status_code == 200
        assert len(data["graph"]["vertices"]) == 12

    def test_unknown_is_400(self, service_client):
        assert service_client.get("/fixtures/figure9").status_code == 400

    def test_whisker_too_small_is_400(self, service_client):
        assert service_client.get("/fixtures/whisker:3").status_code == 400


class TestOracleEndpoint:
    def test_chromatic_and_triangles(self, service_client):
        payload = {"graph": graph_payload(fixture("figure5"))}
        resp = service_client.post("/oracle", json=payload)
        data = resp.json()
        assert data["chromatic_number"] == 3
        assert data["triangles"] == [["2", "3", "7"]]

    def test_cap_is_413(self, service_client):
        payload = {"graph": {"vertices": [f"v{i}" for i in range(11)], "edges": []}}
        resp = service_client.post("/oracle", json=payload)
        assert resp.status_code == 413


class TestAuxiliaryEndpoints:
    def test_edge_removal(self, service_client):
        gbar = {"vertices": ["2", "3", "7"], "edges": [["2", "3"], ["2", "7"], ["3", "7"]]}
        resp = service_client.post(
            "/edge-removal", json={"graph": gbar, "family": "psl27", "complement": True}
        )
        assert resp.json()["decision"] == "accept"

    def test_edge_removal_not_applicable(self, service_client):
        gbar = {"vertices": ["2"], "edges": []}
        resp = service_client.post(
            "/edge-removal", json={"graph": gbar, "family": "multi", "complement": True}
        )
        assert resp.status_code == 400

    def test_psl33_obstruction(self, service_client):
        gbar = {"vertices": ["2", "3", "5", "13"], "edges": [["3", "5"]]}
        resp = service_client.post(
            "/psl33-obstruction", json={"graph": gbar, "complement": True}
        )
        data = resp.json()
        assert data["obstructed"] and data["witness"]["kind"] == "forbidden_edge"


class TestJsonRoundTrips:
    def test_recipe_from_construct_feeds_prime_graph(self, service_client):
        payload = {
            "graph": graph_payload(fixture("figure5")),
            "family": "psl28",
            "complement": True,
        }
        constructed = service_client.post("/construct", json=payload).json()
        resp = service_client.post(
            "/prime-graph", json={"recipe": constructed["recipe"]}
        )
        expected = {
            tuple(e) for e in constructed["assignment"]["assignment"].items()
        }
        assert resp.status_code == 200
        # the recipe's graph lives on the assigned primes
        vertices = set(resp.json()["graph"]["vertices"])
        assert vertices == {str(p) for _, p in expected}

    def test_graph_json_round_trip(self, service_client):
        g = fixture("figure2")
        resp = service_client.get("/fixtures/figure2")
        from primegraph.graphs import graph_from_json_dict

        assert graph_from_json_dict(resp.json()["graph"]) == g
