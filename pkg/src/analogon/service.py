"""HTTP JSON API over a loaded corpus, KB and embedding store.

Endpoints::

    GET  /products                      -> [{"id", "title"}, ...]
    GET  /products/{id}                 -> document with sentences and tokens
    GET  /terms/{lemma}/abstractions    -> [{"property", "level"}, ...]
    POST /search                        -> {"query_tokens", "matches"}

All state is loaded once at startup and never mutated, so responses are pure
functions of the request; repeated requests return identical bodies. Errors
carry a machine-readable ``{"error": {"code", "message"}}`` payload.
"""

from __future__ import annotations

import json
import os
import sys
import threading
from dataclasses import dataclass, field
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path

from . import data_path
from .corpus import Corpus, load_corpus
from .embedding import EmbeddingStore, load_embeddings
from .errors import AnalogonError, EmptyVectorError, SelectionError
from .kb import KnowledgeBase, abstractions_for, load_kb
from .query import FocusSelection, QueryToken, abstracted_only_terms, build_query, step2_terms
from .search import (
    PurposeMechanismVectors,
    fallback_purpose_mechanism,
    load_purpose_mechanism,
    search_focus_abstracted,
    search_focus_only,
    search_overall_glove,
    search_overall_purpmech,
)

try:
    import tomllib
except ModuleNotFoundError:  # Python 3.10
    import tomli as tomllib

_ENV_PREFIX = "ANALOGON_"
_CONFIG_KEYS = ("corpus", "kb", "kb_fallback", "embeddings", "purpmech",
                "port", "host", "k_default")

METHOD_NAMES = ("focus-abstracted", "focus-only", "overall-glove", "overall-purpmech")


@dataclass
class ServerConfig:
    corpus_path: Path
    kb_primary_path: Path
    kb_fallback_path: Path | None = None
    embeddings_path: Path | None = None
    purpmech_path: Path | None = None
    port: int = 8765
    host: str = "127.0.0.1"
    k_default: int = 10

    def validate(self) -> None:
        if not 1 <= self.port <= 65535:
            raise ValueError(f"port {self.port} outside [1, 65535]")
        for label, path in (("corpus", self.corpus_path),
                            ("kb", self.kb_primary_path),
                            ("kb fallback", self.kb_fallback_path),
                            ("embeddings", self.embeddings_path),
                            ("purpmech", self.purpmech_path)):
            if path is not None and not Path(path).exists():
                raise FileNotFoundError(f"{label} file not found: {path}")


def resolve_config(cli_values: dict | None = None,
                   config_file: str | Path | None = None,
                   env: dict | None = None) -> ServerConfig:
    """Layer configuration: CLI flags > ANALOGON_* environment > config file.

    Unset values fall back to the shipped demo data, so a bare ``serve``
    works out of the box.
    """
    env = os.environ if env is None else env
    values: dict = {}
    if config_file is not None:
        with open(config_file, "rb") as handle:
            parsed = tomllib.load(handle)
        for key in _CONFIG_KEYS:
            if key in parsed:
                values[key] = parsed[key]
    for key in _CONFIG_KEYS:
        env_key = _ENV_PREFIX + key.upper()
        if env_key in env:
            values[key] = env[env_key]
    for key, value in (cli_values or {}).items():
        if value is not None:
            values[key] = value
    config = ServerConfig(
        corpus_path=Path(values.get("corpus") or data_path("demo_corpus.jsonl")),
        kb_primary_path=Path(values.get("kb") or data_path("demo_kb.jsonl")),
        kb_fallback_path=Path(values["kb_fallback"]) if values.get("kb_fallback")
        else data_path("fallback_kb.jsonl"),
        embeddings_path=Path(values.get("embeddings") or data_path("demo_embeddings.txt")),
        purpmech_path=Path(values["purpmech"]) if values.get("purpmech") else None,
        port=int(values.get("port", 8765)),
        host=str(values.get("host", "127.0.0.1")),
        k_default=int(values.get("k_default", 10)),
    )
    config.validate()
    return config


class Engine:
    """Read-only search state shared across requests."""

    def __init__(self, corpus: Corpus, kb: KnowledgeBase, store: EmbeddingStore,
                 pm: PurposeMechanismVectors | None = None, k_default: int = 10,
                 focus_only_abstracted_words_only: bool = False):
        self.corpus = corpus
        self.kb = kb
        self.store = store
        self._pm = pm
        self._pm_lock = threading.Lock()
        self.k_default = k_default
        self.focus_only_abstracted_words_only = focus_only_abstracted_words_only

    @classmethod
    def from_config(cls, config: ServerConfig) -> "Engine":
        config.validate()
        if config.embeddings_path is None:
            raise ValueError("an embeddings file is required to serve searches")
        corpus = load_corpus(config.corpus_path)
        kb = load_kb(config.kb_primary_path, config.kb_fallback_path)
        store = load_embeddings(config.embeddings_path)
        pm = None
        if config.purpmech_path is not None:
            pm = load_purpose_mechanism(config.purpmech_path, corpus.ids)
        return cls(corpus=corpus, kb=kb, store=store, pm=pm,
                   k_default=config.k_default)

    def purpose_mechanism(self) -> PurposeMechanismVectors:
        with self._pm_lock:
            if self._pm is None:
                self._pm = fallback_purpose_mechanism(self.corpus, self.store)
            return self._pm

    def run_search(self, selection: FocusSelection, method: str, k: int):
        """Dispatch one search; returns (query_tokens, matches)."""
        if method not in METHOD_NAMES:
            raise SelectionError(f"unknown method {method!r}", code="unknown_method")
        if k < 1:
            raise SelectionError(f"k must be >= 1, got {k}", code="invalid_k")
        if selection.doc_id not in self.corpus:
            raise SelectionError(f"unknown document {selection.doc_id!r}",
                                 code="unknown_document")
        doc = self.corpus.get(selection.doc_id)
        if method == "focus-abstracted":
            query = build_query(doc, selection, self.kb)
            return list(query.tokens), search_focus_abstracted(
                query, self.corpus, self.kb, self.store, k=k)
        if method == "focus-only":
            if self.focus_only_abstracted_words_only:
                lemmas = abstracted_only_terms(doc, selection, self.kb)
            else:
                lemmas = step2_terms(doc, selection, self.kb)
            matches = search_focus_only(lemmas, self.corpus, self.store,
                                        k=k, seed_id=doc.id)
            return [QueryToken.term(lemma) for lemma in lemmas], matches
        if method == "overall-glove":
            return [], search_overall_glove(doc, self.corpus, self.store, k=k)
        pool = max(100, k)
        return [], search_overall_purpmech(doc, self.purpose_mechanism(),
                                           k=k, pool=pool)


def _token_payload(token) -> dict:
    return {"kind": "property" if token.is_property else "term", "text": token.text}


def match_payload(match) -> dict:
    return {
        "doc_id": match.doc_id,
        "score": float(f"{match.score:.9f}"),
        "rank": match.rank,
        "method": match.method,
        "matched_properties": [[lemma, prop] for lemma, prop in match.matched_properties],
    }


def _document_payload(doc) -> dict:
    return {
        "id": doc.id,
        "title": doc.title,
        "text": doc.text,
        "sentences": [
            {
                "index": sentence.index,
                "raw": sentence.raw,
                "tokens": [
                    {"surface": t.surface, "lemma": t.lemma, "pos": t.pos,
                     "is_stopword": t.is_stopword}
                    for t in sentence.tokens
                ],
            }
            for sentence in doc.sentences
        ],
    }


class _Handler(BaseHTTPRequestHandler):
    engine: Engine  # assigned by make_server

    def log_message(self, format, *args):  # noqa: A002 - stdlib signature
        pass

    def _send(self, status: int, payload) -> None:
        body = json.dumps(payload, separators=(",", ":"), sort_keys=True).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json; charset=utf-8")
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(body)

    def _error(self, status: int, code: str, message: str) -> None:
        self._send(status, {"error": {"code": code, "message": message}})

    def do_OPTIONS(self):
        self.send_response(204)
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.end_headers()

    def do_GET(self):
        parts = [p for p in self.path.split("?")[0].split("/") if p]
        engine = self.engine
        if parts == ["products"]:
            self._send(200, [{"id": d.id, "title": d.title} for d in engine.corpus])
        elif len(parts) == 2 and parts[0] == "products":
            if parts[1] not in engine.corpus:
                self._error(404, "unknown_product", f"no product {parts[1]!r}")
            else:
                self._send(200, _document_payload(engine.corpus.get(parts[1])))
        elif len(parts) == 3 and parts[0] == "terms" and parts[2] == "abstractions":
            entries = abstractions_for(engine.kb, parts[1])
            self._send(200, [{"property": e.property, "level": e.level} for e in entries])
        else:
            self._error(404, "unknown_route", f"no route {self.path!r}")

    def do_POST(self):
        if self.path.split("?")[0] != "/search":
            self._error(404, "unknown_route", f"no route {self.path!r}")
            return
        length = int(self.headers.get("Content-Length", 0))
        raw = self.rfile.read(length)
        try:
            body = json.loads(raw.decode("utf-8"))
            if not isinstance(body, dict) or "selection" not in body:
                raise SelectionError("body must carry a 'selection' object",
                                     code="missing_selection")
            selection = FocusSelection.from_json(body["selection"])
            method = str(body.get("method", "focus-abstracted"))
            k = int(body.get("k", self.engine.k_default))
        except (json.JSONDecodeError, ValueError, TypeError) as exc:
            self._error(400, "malformed_request", str(exc))
            return
        except SelectionError as exc:
            self._error(400, exc.code, str(exc))
            return
        try:
            tokens, matches = self.engine.run_search(selection, method, k)
        except SelectionError as exc:
            self._error(400, exc.code, str(exc))
            return
        except EmptyVectorError as exc:
            self._error(422, "unresolvable_query", str(exc))
            return
        except AnalogonError as exc:
            self._error(400, "search_failed", str(exc))
            return
        self._send(200, {
            "query_tokens": [_token_payload(t) for t in tokens],
            "matches": [match_payload(m) for m in matches],
        })


def make_server(engine: Engine, host: str = "127.0.0.1", port: int = 0) -> ThreadingHTTPServer:
    """Build (but do not start) the HTTP server; port 0 picks a free port."""
    handler = type("BoundHandler", (_Handler,), {"engine": engine})
    return ThreadingHTTPServer((host, port), handler)


def serve(config: ServerConfig) -> None:
    """Load everything, then serve requests until interrupted."""
    engine = Engine.from_config(config)
    server = make_server(engine, host=config.host, port=config.port)
    print(f"analogon service on http://{config.host}:{server.server_address[1]} "
          f"({len(engine.corpus)} products)", file=sys.stderr)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        server.shutdown()
