import json
import threading
import urllib.error
import urllib.request

import pytest

import analogon
from analogon.kb import abstractions_for
from analogon.service import Engine, ServerConfig, make_server, resolve_config

from conftest import TESTS_DATA


@pytest.fixture(scope="module")
def six_product_server():
    """Server over the 6-product fixture corpus with the demo KB and vectors."""
    config = resolve_config({"corpus": str(TESTS_DATA / "corpus6.jsonl")})
    engine = Engine.from_config(config)
    server = make_server(engine, port=0)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    yield f"http://127.0.0.1:{server.server_address[1]}", engine
    server.shutdown()


def get(base, path):
    try:
        with urllib.request.urlopen(base + path) as response:
            return response.status, response.read()
    except urllib.error.HTTPError as exc:
        return exc.code, exc.read()


def post(base, path, body):
    request = urllib.request.Request(
        base + path, data=json.dumps(body).encode("utf-8"),
        headers={"Content-Type": "application/json"})
    try:
        with urllib.request.urlopen(request) as response:
            return response.status, response.read()
    except urllib.error.HTTPError as exc:
        return exc.code, exc.read()


FIG2_SELECTION = {
    "doc_id": "soapy-slider",
    "sentence_indices": [1],
    "ignored": ["bar"],
    "abstractions": {"size": "SpatialQuantity", "soap": "PersonalProduct"},
}


class TestProducts:
    def test_six_products_listed(self, six_product_server):
        base, _ = six_product_server
        status, body = get(base, "/products")
        assert status == 200
        products = json.loads(body)
        assert len(products) == 6
        assert products[0] == {"id": "soapy-slider", "title": "Soapy slider"}

    def test_detail_contains_extendable_sentence(self, six_product_server):
        base, _ = six_product_server
        status, body = get(base, "/products/soapy-slider")
        assert status == 200
        doc = json.loads(body)
        raws = [s["raw"] for s in doc["sentences"]]
        assert "extendable for different sizes of soap bars." in raws
        token = doc["sentences"][1]["tokens"][0]
        assert set(token) == {"surface", "lemma", "pos", "is_stopword"}

    def test_unknown_product_404(self, six_product_server):
        base, _ = six_product_server
        status, body = get(base, "/products/nope")
        assert status == 404
        assert json.loads(body)["error"]["code"] == "unknown_product"


class TestAbstractionsEndpoint:
    def test_soap_includes_personal_product(self, six_product_server):
        base, _ = six_product_server
        status, body = get(base, "/terms/soap/abstractions")
        assert status == 200
        names = [e["property"] for e in json.loads(body)]
        assert "PersonalProduct" in names

    def test_unknown_lemma_empty_list(self, six_product_server):
        base, _ = six_product_server
        status, body = get(base, "/terms/qwzx/abstractions")
        assert status == 200
        assert json.loads(body) == []

    def test_matches_kb_module_output_exactly(self, six_product_server):
        base, engine = six_product_server
        _, body = get(base, "/terms/soap/abstractions")
        expected = [{"property": e.property, "level": e.level}
                    for e in abstractions_for(engine.kb, "soap")]
        assert json.loads(body) == expected

    def test_entries_level_ascending_max_three_levels(self, six_product_server):
        base, _ = six_product_server
        _, body = get(base, "/terms/soap/abstractions")
        levels = [e["level"] for e in json.loads(body)]
        assert levels == sorted(levels)
        assert all(level <= 3 for level in levels)


class TestSearchEndpoint:
    def test_fig2_query_tokens(self, six_product_server):
        base, _ = six_product_server
        status, body = post(base, "/search", {
            "selection": FIG2_SELECTION, "method": "focus-abstracted", "k": 5})
        assert status == 200
        payload = json.loads(body)
        assert [t["text"] for t in payload["query_tokens"]] == \
            ["extendable", "different", "SpatialQuantity", "PersonalProduct"]
        assert [t["kind"] for t in payload["query_tokens"]] == \
            ["term", "term", "property", "property"]
        assert payload["matches"]
        assert all(m["doc_id"] != "soapy-slider" for m in payload["matches"])

    def test_k_zero_rejected(self, six_product_server):
        base, _ = six_product_server
        status, body = post(base, "/search", {
            "selection": FIG2_SELECTION, "method": "focus-abstracted", "k": 0})
        assert status == 400
        assert json.loads(body)["error"]["code"] == "invalid_k"

    def test_identical_requests_identical_bodies(self, six_product_server):
        base, _ = six_product_server
        body_one = post(base, "/search", {"selection": FIG2_SELECTION,
                                          "method": "focus-abstracted", "k": 5})[1]
        body_two = post(base, "/search", {"selection": FIG2_SELECTION,
                                          "method": "focus-abstracted", "k": 5})[1]
        assert body_one == body_two

    def test_invalid_selection_machine_readable(self, six_product_server):
        base, _ = six_product_server
        bad = dict(FIG2_SELECTION, sentence_indices=[])
        status, body = post(base, "/search", {"selection": bad, "method": "focus-only"})
        assert status == 400
        assert json.loads(body)["error"]["code"] == "empty_selection"

    def test_unknown_document_rejected(self, six_product_server):
        base, _ = six_product_server
        bad = dict(FIG2_SELECTION, doc_id="missing")
        status, body = post(base, "/search", {"selection": bad})
        assert status == 400
        assert json.loads(body)["error"]["code"] == "unknown_document"

    def test_unknown_method_rejected(self, six_product_server):
        base, _ = six_product_server
        status, body = post(base, "/search", {"selection": FIG2_SELECTION,
                                              "method": "psychic"})
        assert status == 400
        assert json.loads(body)["error"]["code"] == "unknown_method"

    def test_all_methods_respond(self, six_product_server):
        base, _ = six_product_server
        for method in ("focus-abstracted", "focus-only", "overall-glove",
                       "overall-purpmech"):
            status, body = post(base, "/search", {
                "selection": FIG2_SELECTION, "method": method, "k": 3})
            assert status == 200, (method, body)
            payload = json.loads(body)
            assert len(payload["matches"]) == 3

    def test_unresolvable_query_maps_to_422(self, tmp_path):
        # an embedding store that cannot resolve any query token
        store_path = tmp_path / "vec.txt"
        store_path.write_text("unrelated 1 0\n")
        config = resolve_config({"corpus": str(TESTS_DATA / "corpus6.jsonl"),
                                 "embeddings": str(store_path)})
        engine = Engine.from_config(config)
        server = make_server(engine, port=0)
        thread = threading.Thread(target=server.serve_forever, daemon=True)
        thread.start()
        try:
            base = f"http://127.0.0.1:{server.server_address[1]}"
            status, body = post(base, "/search", {"selection": FIG2_SELECTION})
            assert status == 422
            assert json.loads(body)["error"]["code"] == "unresolvable_query"
        finally:
            server.shutdown()


class TestConfig:
    def test_port_range_validated(self):
        config = ServerConfig(corpus_path=analogon.data_path("demo_corpus.jsonl"),
                              kb_primary_path=analogon.data_path("demo_kb.jsonl"),
                              port=0)
        with pytest.raises(ValueError):
            config.validate()

    def test_missing_file_rejected(self, tmp_path):
        config = ServerConfig(corpus_path=tmp_path / "nope.jsonl",
                              kb_primary_path=analogon.data_path("demo_kb.jsonl"))
        with pytest.raises(FileNotFoundError):
            config.validate()

    def test_precedence_cli_over_env_over_file(self, tmp_path):
        config_file = tmp_path / "analogon.toml"
        config_file.write_text('port = 1111\nk_default = 3\n')
        env = {"ANALOGON_PORT": "2222"}
        config = resolve_config({"port": 3333}, config_file=config_file, env=env)
        assert config.port == 3333
        assert config.k_default == 3
        env_only = resolve_config({}, config_file=config_file, env=env)
        assert env_only.port == 2222

    def test_defaults_point_at_demo_data(self):
        config = resolve_config({}, env={})
        assert config.corpus_path == analogon.data_path("demo_corpus.jsonl")
