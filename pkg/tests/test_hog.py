from __future__ import annotations

import http.server
import logging
import threading
import urllib.request

import pytest

from pebbling import encode_graph6, fetch_graph, flower_snark, petersen
from pebbling.hog import DEFAULT_URL_TEMPLATE, HogFetchError, url_for


class _OneLineHandler(http.server.BaseHTTPRequestHandler):
    payloads: dict[str, bytes] = {}

    def do_GET(self):
        body = self.payloads.get(self.path)
        if body is None:
            self.send_response(404)
            self.end_headers()
            return
        self.send_response(200)
        self.send_header("Content-Type", "text/plain")
        self.end_headers()
        self.wfile.write(body)

    def log_message(self, *args):
        pass


@pytest.fixture()
def stub_server():
    server = http.server.HTTPServer(("127.0.0.1", 0), _OneLineHandler)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    base = f"http://127.0.0.1:{server.server_port}/graphs/{{id}}/graph6"
    _OneLineHandler.payloads = {
        "/graphs/660/graph6": (encode_graph6(petersen()) + "\n").encode(),
        "/graphs/1310/graph6": (encode_graph6(flower_snark(3))).encode(),
        "/graphs/13/graph6": b"not graph6 at all\x01",
        "/graphs/14/graph6": b"A_\nA_\n",
    }
    yield base
    server.shutdown()


def test_fetch_decodes_and_labels(stub_server, tmp_path):
    g = fetch_graph(660, cache_dir=tmp_path, base_url=stub_server)
    assert g.n == 10
    assert g.labels == tuple(str(i) for i in range(1, 11))
    assert g.name == "hog660"
    assert (tmp_path / "hog_660.g6").exists()


def test_second_fetch_is_cache_only(stub_server, tmp_path, monkeypatch, caplog):
    fetch_graph(660, cache_dir=tmp_path, base_url=stub_server)

    def refuse(*args, **kwargs):
        raise AssertionError("network touched despite a populated cache")

    monkeypatch.setattr(urllib.request, "urlopen", refuse)
    with caplog.at_level(logging.INFO, logger="pebbling.hog"):
        g = fetch_graph(660, cache_dir=tmp_path, base_url=stub_server)
    assert g.n == 10
    assert any("cache hit" in record.message for record in caplog.records)


def test_missing_id_fails_loudly(stub_server, tmp_path):
    with pytest.raises(HogFetchError):
        fetch_graph(999, cache_dir=tmp_path, base_url=stub_server)
    assert not (tmp_path / "hog_999.g6").exists()


def test_garbage_body_fails_loudly_and_is_not_cached(stub_server, tmp_path):
    with pytest.raises(HogFetchError):
        fetch_graph(13, cache_dir=tmp_path, base_url=stub_server)
    assert not (tmp_path / "hog_13.g6").exists()


def test_multi_line_body_rejected(stub_server, tmp_path):
    with pytest.raises(HogFetchError, match="single graph6 line"):
        fetch_graph(14, cache_dir=tmp_path, base_url=stub_server)


def test_network_failure_with_empty_cache(tmp_path):
    with pytest.raises(HogFetchError, match="cache.*empty"):
        fetch_graph(660, cache_dir=tmp_path, base_url="http://127.0.0.1:9/x/{id}")


def test_url_template_from_environment(monkeypatch):
    assert url_for(42) == DEFAULT_URL_TEMPLATE.format(id=42)
    monkeypatch.setenv("PEBBLE_HOG_URL", "http://mirror.example/{id}.g6")
    assert url_for(42) == "http://mirror.example/42.g6"
    monkeypatch.setenv("PEBBLE_HOG_URL", "http://mirror.example/no-placeholder")
    with pytest.raises(HogFetchError):
        url_for(42)


def test_cache_dir_from_environment(monkeypatch, tmp_path, stub_server):
    monkeypatch.setenv("PEBBLE_CACHE_DIR", str(tmp_path / "env-cache"))
    fetch_graph(1310, base_url=stub_server)
    assert (tmp_path / "env-cache" / "hog_1310.g6").exists()
