"""HTTP service for the writing aid: live analysis and grammar hints.

Stateless by design: the registry and lexicon are immutable shared state,
every request runs against private automaton contexts, so concurrent
identical requests return identical bodies.
"""
from __future__ import annotations

import logging
import uuid

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .analysis import analyze_payload, hints_payload
from .config import Config
from .grammar import Registry, load_bundled_registry, load_registry
from .tokenize import Lexicon, load_bundled_lexicon, tokenize_document

log = logging.getLogger("sakubun.service")


class TextIn(BaseModel):
    text: str


def create_app(config: Config | None = None,
               registry: Registry | None = None,
               lexicon: Lexicon | None = None) -> FastAPI:
    config = config or Config()
    if registry is None:
        registry = (load_registry(config.patterns_path) if config.patterns_path
                    else load_bundled_registry())
    if lexicon is None:
        lexicon = (Lexicon.load(config.lexicon_path) if config.lexicon_path
                   else load_bundled_lexicon())

    app = FastAPI(title="sakubun writing aid", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(RequestValidationError)
    async def validation_handler(request: Request, exc: RequestValidationError):
        # broken JSON is a malformed request (400); a well-formed body with
        # missing/wrong fields is unprocessable (422)
        malformed = any(e.get("type") == "json_invalid" for e in exc.errors())
        return JSONResponse(status_code=400 if malformed else 422,
                            content={"error": "malformed JSON" if malformed
                                     else "invalid request body"})

    @app.exception_handler(Exception)
    async def internal_handler(request: Request, exc: Exception):
        incident = uuid.uuid4().hex
        log.exception("request failed (incident %s)", incident)
        return JSONResponse(status_code=500,
                            content={"error": "internal error", "id": incident})

    @app.get("/api/health")
    def health():
        return {"status": "ok", "patterns": len(registry)}

    @app.get("/api/patterns")
    def patterns():
        return {
            "patterns": [
                {"id": p.id, "display_name": p.display_name, "level": p.level,
                 "description": p.description}
                for p, _ in registry.items()
            ],
        }

    @app.post("/api/analyze")
    def analyze(body: TextIn):
        if not body.text.strip():
            return JSONResponse(status_code=422, content={"error": "empty text"})
        doc = tokenize_document("request", body.text, lexicon)
        return analyze_payload(doc, registry, lexicon,
                               step_budget=config.step_budget)

    @app.post("/api/hints")
    def hint_endpoint(body: TextIn):
        return hints_payload(body.text, registry, lexicon,
                             step_budget=config.step_budget)

    return app
