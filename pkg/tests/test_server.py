import json
import threading
import urllib.error
import urllib.request
from pathlib import Path
from urllib.parse import quote

import pytest

from semlift.rdf import parse_turtle
from semlift.snapshot import load_snapshot
from semlift.server import SnapshotHolder, make_server, run_search
from semlift.search.facets import FilterSelection

LOCAL_WATER = "http://fixtures.semlift.example/thermo/data/d1/compound/1"
LOCAL_ETHANOL = "http://fixtures.semlift.example/thermo/data/d1/compound/2"
CHEBI_COMPOUND = "http://chebi.example/Compound"
CAT_SOLVENTS = "http://dbpedia.example/category/Solvents"


@pytest.fixture(scope="module")
def snapshot(pipeline_out):
    return load_snapshot(pipeline_out / "snapshot")


@pytest.fixture(scope="module")
def base_url(snapshot):
    server = make_server(SnapshotHolder(snapshot), port=0)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    yield f"http://127.0.0.1:{server.server_address[1]}"
    server.shutdown()


def get(url: str, accept: str | None = None):
    request = urllib.request.Request(url)
    if accept:
        request.add_header("Accept", accept)
    with urllib.request.urlopen(request) as response:
        return response.status, response.headers.get("Content-Type", ""), response.read()


def post(url: str, payload: dict):
    request = urllib.request.Request(
        url, data=json.dumps(payload).encode(), headers={"Content-Type": "application/json"}
    )
    with urllib.request.urlopen(request) as response:
        return response.status, response.read()


class TestHealth:
    def test_status_and_hash(self, base_url, snapshot):
        status, _, body = get(base_url + "/health")
        assert status == 200
        assert json.loads(body) == {"snapshot": snapshot.content_hash, "status": "ok"}


class TestAutocomplete:
    def test_delegates_to_index(self, base_url, snapshot):
        status, _, body = get(base_url + "/autocomplete?q=was&limit=10")
        assert status == 200
        got = json.loads(body)
        expected = [
            {"surface": h.surface, "language": h.language, "concept": h.concept.value, "score": h.score}
            for h in snapshot.index.complete("was", 10)
        ]
        assert got == expected
        assert {h["surface"] for h in got} >= {"water", "Wasser"}

    def test_empty_query_is_empty_list(self, base_url):
        status, _, body = get(base_url + "/autocomplete?q=")
        assert status == 200 and json.loads(body) == []

    def test_bad_limit_is_400(self, base_url):
        with pytest.raises(urllib.error.HTTPError) as exc:
            get(base_url + "/autocomplete?q=w&limit=0")
        assert exc.value.code == 400


class TestFacets:
    def test_definitions_in_config_order(self, base_url):
        _, _, body = get(base_url + "/facets")
        facets = json.loads(body)
        assert [f["id"] for f in facets] == ["class", "category", "formula"]
        assert facets[0]["kind"] == "class-hierarchy"


class TestSearch:
    def test_empty_selections_counts_typed_entities(self, base_url, snapshot):
        status, body = post(base_url + "/search", {"selections": []})
        assert status == 200
        got = json.loads(body)
        assert got["total"] == len(snapshot.engine.evaluate(()))

    def test_delegation_matches_engine(self, base_url, snapshot):
        selections = [{"facet": "class", "values": [CHEBI_COMPOUND]}]
        _, body = post(base_url + "/search", {"selections": selections, "offset": 0, "limit": 100})
        got = json.loads(body)
        engine_result = snapshot.engine.evaluate(
            (FilterSelection("class", frozenset({CHEBI_COMPOUND})),)
        )
        assert got["total"] == len(engine_result)
        assert [e["iri"] for e in got["entities"]] == sorted(e.value for e in engine_result)
        state = snapshot.engine.state((FilterSelection("class", frozenset({CHEBI_COMPOUND})),))
        assert len(got["suggestions"]) == len(snapshot.engine.suggest(state))

    def test_three_step_narrowing(self, base_url):
        selections = [
            {"facet": "class", "values": [CHEBI_COMPOUND]},
            {"facet": "category", "values": [CAT_SOLVENTS]},
            {"facet": "formula", "values": ["C2H6O"]},
        ]
        _, body = post(base_url + "/search", {"selections": selections})
        got = json.loads(body)
        assert [e["iri"] for e in got["entities"]] == [
            "http://chebi.example/16236",
            LOCAL_ETHANOL,
        ]

    def test_pagination(self, base_url):
        _, body = post(base_url + "/search", {"selections": [], "offset": 0, "limit": 3})
        first = json.loads(body)
        _, body = post(base_url + "/search", {"selections": [], "offset": 3, "limit": 3})
        second = json.loads(body)
        assert len(first["entities"]) == 3 and len(second["entities"]) == 3
        assert first["entities"][0]["iri"] != second["entities"][0]["iri"]
        assert first["total"] == second["total"]

    def test_no_zero_count_suggestions(self, base_url):
        _, body = post(base_url + "/search", {"selections": []})
        assert all(s["count"] >= 1 for s in json.loads(body)["suggestions"])

    @pytest.mark.parametrize(
        "payload",
        [
            {"selections": [{"facet": "mystery", "values": ["x"]}]},
            {"selections": [{"facet": "class"}]},
            {"selections": [{"facet": "class", "values": "notalist"}]},
            {"selections": "nope"},
            {"selections": [], "offset": -1},
        ],
    )
    def test_malformed_selections_400(self, base_url, payload):
        with pytest.raises(urllib.error.HTTPError) as exc:
            post(base_url + "/search", payload)
        assert exc.value.code == 400

    def test_bad_json_body_400(self, base_url):
        request = urllib.request.Request(base_url + "/search", data=b"{nope")
        with pytest.raises(urllib.error.HTTPError) as exc:
            urllib.request.urlopen(request)
        assert exc.value.code == 400


class TestEntity:
    def url(self, base_url, iri):
        return base_url + "/entity/" + quote(iri, safe="")

    def test_default_json_description(self, base_url):
        status, content_type, body = get(self.url(base_url, LOCAL_WATER))
        assert status == 200 and content_type.startswith("application/json")
        entity = json.loads(body)
        assert entity["iri"] == LOCAL_WATER
        assert entity["label"] is not None
        assert any(t.endswith("Compound") for t in entity["types"])
        assert CAT_SOLVENTS in entity["categories"]

    def test_turtle_negotiation_round_trips(self, base_url, snapshot):
        from semlift.rdf import Iri

        status, content_type, body = get(self.url(base_url, LOCAL_WATER), accept="text/turtle")
        assert status == 200 and content_type.startswith("text/turtle")
        served = parse_turtle(body.decode("utf-8"))
        expected = set(snapshot.graph.match(subject=Iri(LOCAL_WATER)))
        assert served.triple_set() == expected

    def test_browserish_accept_gets_json(self, base_url):
        status, content_type, _ = get(
            self.url(base_url, LOCAL_WATER),
            accept="text/html,application/xhtml+xml,application/xml;q=0.9,*/*;q=0.8",
        )
        assert status == 200 and content_type.startswith("application/json")

    def test_unknown_entity_404(self, base_url):
        with pytest.raises(urllib.error.HTTPError) as exc:
            get(self.url(base_url, "http://nowhere.example/x"))
        assert exc.value.code == 404

    def test_unsupported_accept_406(self, base_url):
        with pytest.raises(urllib.error.HTTPError) as exc:
            get(self.url(base_url, LOCAL_WATER), accept="application/pdf")
        assert exc.value.code == 406


class TestDeterminism:
    def test_identical_requests_identical_bytes(self, base_url):
        requests = [
            ("GET", "/health"),
            ("GET", "/autocomplete?q=wa&limit=5"),
            ("GET", "/facets"),
            ("POST", "/search"),
            ("GET", "/entity/" + quote(LOCAL_WATER, safe="")),
        ]
        def run_all():
            out = []
            for method, path in requests:
                if method == "GET":
                    out.append(get(base_url + path)[2])
                else:
                    out.append(post(base_url + path, {"selections": []})[1])
            return out
        assert run_all() == run_all()

    def test_json_keys_sorted(self, base_url):
        _, body = post(base_url + "/search", {"selections": []})
        text = body.decode()
        assert text.index('"entities"') < text.index('"suggestions"') < text.index('"total"')


class TestReload:
    def test_reload_disabled_404(self, base_url):
        with pytest.raises(urllib.error.HTTPError) as exc:
            post(base_url + "/admin/reload", {})
        assert exc.value.code == 404

    def test_reload_enabled_swaps_snapshot(self, snapshot):
        holder = SnapshotHolder(snapshot, rebuild=lambda: snapshot)
        server = make_server(holder, port=0, allow_reload=True)
        thread = threading.Thread(target=server.serve_forever, daemon=True)
        thread.start()
        try:
            url = f"http://127.0.0.1:{server.server_address[1]}/admin/reload"
            status, body = post(url, {})
            assert status == 200
            assert json.loads(body)["snapshot"] == snapshot.content_hash
        finally:
            server.shutdown()


class TestRunSearchUnit:
    def test_engine_parity_without_http(self, snapshot):
        body = {"selections": [{"facet": "formula", "values": ["H2O"]}]}
        result = run_search(snapshot, body)
        engine_result = snapshot.engine.evaluate(
            (FilterSelection("formula", frozenset({"H2O"})),)
        )
        assert result["total"] == len(engine_result)
