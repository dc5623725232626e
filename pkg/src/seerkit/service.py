"""JSON HTTP query service.

Response bodies for the GET endpoints are the CLI payloads plus a
``timing_ms`` field measured around the ranking call, so the same engine
directory answers identically over both interfaces (modulo timing).
Error mapping: 400 bad request (empty or malformed input), 404 unknown
author or out-of-lexicon related pivot, 409 duplicate document batch,
503 engine not loaded.
"""

from __future__ import annotations

import time
from contextlib import asynccontextmanager
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import FastAPI, Query, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .corpus import parse_record
from .engine import Engine, experts_payload, expertise_payload, related_payload
from .errors import (
    ConfigError,
    DomainError,
    DuplicateDocumentError,
    EmptyQueryError,
    PhraseNotInLexiconError,
    UnknownAuthorError,
)
from .update import UpdateBatch, apply_update


@dataclass
class ServiceConfig:
    """Runtime settings, loadable from a KEY=VALUE file.

    Unknown keys are ignored so one file can feed several tools; values
    keep their raw string form except for the integer port.
    """

    engine_dir: str = ""
    host: str = "127.0.0.1"
    port: int = 8040
    cors_origin: str = "*"
    extras: dict[str, str] = field(default_factory=dict)

    @classmethod
    def from_file(cls, path: str | Path) -> "ServiceConfig":
        config = cls()
        for lineno, raw in enumerate(Path(path).read_text("utf-8").splitlines(), 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            key, sep, value = line.partition("=")
            if not sep:
                raise ConfigError(f"{path}:{lineno}: expected KEY=VALUE, got {raw!r}")
            key = key.strip().lower()
            value = value.strip()
            if key == "engine_dir":
                config.engine_dir = value
            elif key == "host":
                config.host = value
            elif key == "port":
                try:
                    config.port = int(value)
                except ValueError:
                    raise ConfigError(f"{path}:{lineno}: port must be an integer")
            elif key == "cors_origin":
                config.cors_origin = value
            else:
                config.extras[key] = value
        return config


def _error(status: int, message: str) -> JSONResponse:
    return JSONResponse(status_code=status, content={"error": message})


def create_app(
    engine: Engine | None = None,
    engine_dir: str | Path | None = None,
    cors_origin: str = "*",
) -> FastAPI:
    """Build the application.

    Pass a live ``engine`` (tests) or an ``engine_dir`` to load at startup.
    With neither, every query endpoint answers 503 until one is attached
    via ``app.state.engine``.
    """

    @asynccontextmanager
    async def _lifespan(app: FastAPI):
        if app.state.engine is None and app.state.engine_dir:
            app.state.engine = Engine.load(app.state.engine_dir)
        yield

    app = FastAPI(title="seerkit", docs_url=None, redoc_url=None, lifespan=_lifespan)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=[cors_origin] if cors_origin != "*" else ["*"],
        allow_methods=["GET", "POST"],
        allow_headers=["*"],
    )
    app.state.engine = engine
    app.state.engine_dir = str(engine_dir) if engine_dir else None

    def _engine() -> Engine | None:
        return app.state.engine

    @app.get("/healthz")
    def healthz():
        eng = _engine()
        if eng is None:
            return _error(503, "engine not loaded")
        state = eng.state
        return {
            "status": "ok",
            "documents": len(state.corpus),
            "authors": len(state.corpus.authors),
            "lexicon": len(state.lexicon),
            "matcher_backend": state.trie.backend,
        }

    @app.get("/experts")
    def experts(q: str = Query(default=""), k: int = Query(default=10)):
        eng = _engine()
        if eng is None:
            return _error(503, "engine not loaded")
        if k < 1:
            return _error(400, "k must be >= 1")
        try:
            start = time.perf_counter()
            payload = experts_payload(eng, q, k)
            payload["timing_ms"] = (time.perf_counter() - start) * 1000.0
        except EmptyQueryError as exc:
            return _error(400, str(exc))
        except DomainError as exc:
            return _error(404, str(exc))
        return payload

    @app.get("/expertise")
    def expertise(author: str = Query(default=""), k: int = Query(default=10)):
        eng = _engine()
        if eng is None:
            return _error(503, "engine not loaded")
        if k < 1:
            return _error(400, "k must be >= 1")
        if not author.strip():
            return _error(400, "author must be non-empty")
        try:
            start = time.perf_counter()
            payload = expertise_payload(eng, author, k)
            payload["timing_ms"] = (time.perf_counter() - start) * 1000.0
        except UnknownAuthorError as exc:
            return _error(404, str(exc))
        except DomainError as exc:
            return _error(404, str(exc))
        return payload

    @app.get("/related")
    def related(q: str = Query(default=""), k: int = Query(default=10)):
        eng = _engine()
        if eng is None:
            return _error(503, "engine not loaded")
        if k < 1:
            return _error(400, "k must be >= 1")
        try:
            start = time.perf_counter()
            payload = related_payload(eng, q, k)
            payload["timing_ms"] = (time.perf_counter() - start) * 1000.0
        except EmptyQueryError as exc:
            return _error(400, str(exc))
        except PhraseNotInLexiconError as exc:
            return _error(404, str(exc))
        except DomainError as exc:
            return _error(404, str(exc))
        return payload

    @app.post("/documents")
    async def add_documents(request: Request):
        eng = _engine()
        if eng is None:
            return _error(503, "engine not loaded")
        try:
            body = await request.json()
        except Exception:
            return _error(400, "request body must be JSON")
        if not isinstance(body, dict) or not isinstance(body.get("documents"), list):
            return _error(400, 'body must be {"documents": [...]}')
        docs = []
        for idx, record in enumerate(body["documents"]):
            if not isinstance(record, dict):
                return _error(400, f"documents[{idx}] must be an object")
            try:
                docs.append(parse_record(record))
            except ConfigError as exc:
                return _error(400, f"documents[{idx}]: {exc}")
        try:
            start = time.perf_counter()
            summary = apply_update(eng, UpdateBatch(documents=docs))
            elapsed = (time.perf_counter() - start) * 1000.0
        except DuplicateDocumentError as exc:
            return _error(409, str(exc))
        if app.state.engine_dir:
            eng.save(app.state.engine_dir)
        payload = summary.to_json()
        payload["timing_ms"] = elapsed
        return payload

    return app
