"""HTTP+JSON service exposing the translation pipeline.

Endpoints
---------
* ``POST /sessions`` ``{source_lang, target_lang, context_id?, ontology_id?}``
  -> 201 ``{session_id}``
* ``POST /sessions/{id}/messages`` ``{sender, text}``
  -> 200 ``{translated, trace}``
* ``GET  /sessions/{id}/history`` -> 200 ``{records: [...]}``
* ``GET  /ontologies`` -> 200 registry listing (ontology ids and contexts)
* ``POST /admin/logs`` (raw message-log document, admin token header)
  -> 200 ``{selected_context}``
* ``GET  /health`` -> 200

Unknown sessions yield 404, malformed bodies 400 with field errors,
unresolvable ontology/context ids 422.  Message processing is serialized
per session (one lock per session) while distinct sessions run
concurrently.
"""

from __future__ import annotations

import threading

from fastapi import FastAPI, Header, Request, Response
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from . import context as context_mod
from . import dialogue, pipeline
from .config import ServiceConfig
from .errors import ConfigurationError
from .lexicon import load_lexicon_file
from .persistence import SessionStore
from .skos import OntologyRegistry
from .translation import MockStatisticalMt, load_phrase_table_file

ADMIN_TOKEN_HEADER = "x-admin-token"


class CreateSessionBody(BaseModel):
    source_lang: str = Field(pattern=r"^[a-z]{2}$")
    target_lang: str = Field(pattern=r"^[a-z]{2}$")
    context_id: str | None = None
    ontology_id: str | None = None


class MessageBody(BaseModel):
    sender: str = Field(min_length=1)
    text: str = Field(min_length=1)


class _SessionSlot:
    """A session plus the lock that serializes its message processing."""

    def __init__(self, session: dialogue.Session):
        self.session = session
        self.lock = threading.Lock()


def create_app(config: ServiceConfig) -> FastAPI:
    lexicon = load_lexicon_file(config.lexicon_path)
    registry = OntologyRegistry(config.ontology_dir)
    contexts = context_mod.load_contexts_file(config.context_config_path)
    contexts_by_name = {c.name: c for c in contexts}
    backend = MockStatisticalMt(load_phrase_table_file(config.phrase_table_path))
    store = SessionStore(config.persistence_dir)

    sessions: dict[str, _SessionSlot] = {
        sid: _SessionSlot(session) for sid, session in store.load_all().items()
    }
    sessions_lock = threading.Lock()

    app = FastAPI(title="sensebridge", version="0.1.0")

    @app.exception_handler(RequestValidationError)
    async def _validation_handler(request: Request, exc: RequestValidationError):
        errors = [
            {"field": ".".join(str(loc) for loc in err["loc"] if loc != "body"), "message": err["msg"]}
            for err in exc.errors()
        ]
        return JSONResponse(status_code=400, content={"detail": "invalid body", "errors": errors})

    def _slot_or_404(session_id: str) -> _SessionSlot | JSONResponse:
        with sessions_lock:
            slot = sessions.get(session_id)
        if slot is None:
            return JSONResponse(status_code=404, content={"detail": f"unknown session {session_id!r}"})
        return slot

    @app.get("/health")
    def health():
        return {"status": "ok"}

    @app.get("/ontologies")
    def ontologies():
        return {
            "ontologies": [
                {"id": oid, "concepts": len(registry.get(oid))} for oid in registry.ids()
            ],
            "contexts": [
                {"name": c.name, "ontology_id": c.ontology_id} for c in contexts
            ],
        }

    @app.post("/sessions", status_code=201)
    def create_session(body: CreateSessionBody):
        ctx = None
        if body.context_id is not None:
            ctx = contexts_by_name.get(body.context_id)
            if ctx is None:
                return JSONResponse(
                    status_code=422, content={"detail": f"unknown context {body.context_id!r}"}
                )
        try:
            session = dialogue.create_session(
                body.source_lang,
                body.target_lang,
                context=ctx,
                ontology_id=body.ontology_id,
                registry=registry,
                window_limit=config.window_limit,
            )
        except ConfigurationError as exc:
            return JSONResponse(status_code=422, content={"detail": str(exc)})
        store.write_meta(session)
        with sessions_lock:
            sessions[session.id] = _SessionSlot(session)
        return {"session_id": session.id}

    @app.post("/sessions/{session_id}/messages")
    def post_message(session_id: str, body: MessageBody):
        slot = _slot_or_404(session_id)
        if isinstance(slot, JSONResponse):
            return slot
        with slot.lock:
            result = pipeline.translate_message(
                slot.session,
                body.text,
                backend,
                lexicon,
                registry,
                sender=body.sender,
                on_record=lambda record: store.append_record(session_id, record),
            )
        return {"translated": result.final_text, "trace": result.trace.to_dict()}

    @app.get("/sessions/{session_id}/history")
    def history(session_id: str):
        slot = _slot_or_404(session_id)
        if isinstance(slot, JSONResponse):
            return slot
        with slot.lock:
            session = slot.session
            records = [
                {
                    "seq": seq,
                    "sender": entry.sender,
                    "original": entry.original,
                    "translated": entry.translated,
                    "trace": entry.trace,
                    "iteration": entry.trace["iteration"],
                    "window_reset": entry.trace["window_reset"],
                }
                for seq, entry in enumerate(session.history, start=1)
            ]
            return {
                "session_id": session.id,
                "context_id": session.context.name if session.context else None,
                "ontology_id": session.ontology_id,
                "iteration": session.iteration,
                "window_limit": session.window_limit,
                "records": records,
            }

    @app.post("/admin/logs")
    async def upload_log(
        request: Request,
        response: Response,
        x_admin_token: str | None = Header(default=None),
    ):
        if config.admin_token and x_admin_token != config.admin_token:
            return JSONResponse(status_code=401, content={"detail": "missing or wrong admin token"})
        body = (await request.body()).decode("utf-8")
        log = context_mod.load_message_log(body)
        selected = context_mod.select_session_context(log, contexts)
        return {"selected_context": selected.name if selected else None}

    return app


def run(config: ServiceConfig) -> None:
    import uvicorn

    uvicorn.run(create_app(config), host=config.host, port=config.port, log_level="info")
