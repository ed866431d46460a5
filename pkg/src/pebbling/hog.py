"""House of Graphs retrieval with an offline file cache.

Fetching is a convenience only; every check in this package runs from the
vendored fixtures. The client expects the response body to be a single
graph6 line and fails loudly on anything else. Configuration comes from
the environment: PEBBLE_CACHE_DIR for the cache directory and
PEBBLE_HOG_URL for the URL template (must contain ``{id}``).
"""

from __future__ import annotations

import logging
import os
import urllib.error
import urllib.request
from dataclasses import replace
from pathlib import Path

from .graph6 import Graph6Error, decode_graph6
from .graphs import Graph

log = logging.getLogger(__name__)

CACHE_ENV = "PEBBLE_CACHE_DIR"
URL_ENV = "PEBBLE_HOG_URL"
DEFAULT_URL_TEMPLATE = "https://houseofgraphs.org/api/graphs/{id}/graph6"


class HogFetchError(RuntimeError):
    """Raised when a graph cannot be retrieved or decoded."""


def cache_directory(cache_dir: str | Path | None = None) -> Path:
    if cache_dir is not None:
        return Path(cache_dir)
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "pebbling"


def url_for(graph_id: int, base_url: str | None = None) -> str:
    template = base_url or os.environ.get(URL_ENV) or DEFAULT_URL_TEMPLATE
    if "{id}" not in template:
        raise HogFetchError(f"URL template {template!r} lacks an {{id}} placeholder")
    return template.format(id=graph_id)


def fetch_graph(
    graph_id: int,
    *,
    cache_dir: str | Path | None = None,
    base_url: str | None = None,
    timeout: float = 30.0,
) -> Graph:
    """Return House of Graphs entry ``graph_id``, caching its graph6 line.

    Subsequent calls are served from the cache without network access.
    """
    directory = cache_directory(cache_dir)
    path = directory / f"hog_{graph_id}.g6"
    if path.exists():
        log.info("cache hit for House of Graphs #%d at %s", graph_id, path)
        text = path.read_text()
    else:
        url = url_for(graph_id, base_url)
        log.info("fetching House of Graphs #%d from %s", graph_id, url)
        try:
            with urllib.request.urlopen(url, timeout=timeout) as response:
                body = response.read()
        except (urllib.error.URLError, OSError) as exc:
            raise HogFetchError(
                f"could not fetch House of Graphs #{graph_id} and the cache at "
                f"{path} is empty: {exc}"
            ) from exc
        text = body.decode("ascii", errors="strict").strip()
        if not text or "\n" in text:
            raise HogFetchError(
                f"expected a single graph6 line for #{graph_id}, "
                f"got {len(body)} bytes"
            )
        # validate before polluting the cache
        _decode(graph_id, text)
        directory.mkdir(parents=True, exist_ok=True)
        path.write_text(text + "\n")
    g = _decode(graph_id, text)
    labels = tuple(str(i + 1) for i in range(g.n))
    return replace(g, labels=labels, name=f"hog{graph_id}")


def _decode(graph_id: int, text: str) -> Graph:
    try:
        return decode_graph6(text)
    except Graph6Error as exc:
        raise HogFetchError(
            f"House of Graphs #{graph_id} response is not valid graph6: {exc}"
        ) from exc
