"""Session-oriented HTTP API for interactive graph editing.

Sessions live in memory and expire after a TTL. Edits on one session are
serialized through a per-session lock; a second writer racing on the same
session gets 409 instead of waiting. Uploaded tables stay inside the
session store and are never logged.
"""

from __future__ import annotations

import os
import threading
import time
import uuid
from dataclasses import dataclass, field

from fastapi import FastAPI, File, Form, Request, UploadFile
from fastapi.responses import JSONResponse, Response

from .errors import EditError, PipelineStageError, SemmapError
from .graph import bits, graph_to_dict, induced_components, mask_of, serialize_graph
from .session import EditAction, SessionBundle, apply_edit, run_pipeline, switch_active, undo
from .table import parse_table


def _env_int(name: str, default: int) -> int:
    try:
        return int(os.environ.get(name, default))
    except ValueError:
        return default


@dataclass
class _Session:
    bundle: SessionBundle
    lock: threading.Lock = field(default_factory=threading.Lock)
    last_access: float = field(default_factory=time.monotonic)


class SessionStore:
    def __init__(self, ttl_seconds: float):
        self.ttl = ttl_seconds
        self._sessions: dict[str, _Session] = {}
        self._guard = threading.Lock()

    def create(self, bundle: SessionBundle) -> str:
        sid = uuid.uuid4().hex
        with self._guard:
            self._evict()
            self._sessions[sid] = _Session(bundle)
        return sid

    def get(self, sid: str) -> _Session | None:
        with self._guard:
            self._evict()
            session = self._sessions.get(sid)
            if session is not None:
                session.last_access = time.monotonic()
            return session

    def _evict(self) -> None:
        now = time.monotonic()
        stale = [
            sid
            for sid, s in self._sessions.items()
            if now - s.last_access > self.ttl
        ]
        for sid in stale:
            del self._sessions[sid]


def _error(status: int, stage: str, detail: str) -> JSONResponse:
    return JSONResponse(status_code=status, content={"stage": stage, "detail": detail})


def _summary(bundle: SessionBundle) -> dict:
    return {
        "table": {
            "rows": len(bundle.table.instances),
            "functions": list(bundle.table.functions),
            "sparsity": bundle.table.sparsity,
            "forms": [
                {"language": inst.language, "form": inst.form}
                for inst in bundle.table.instances
            ],
        },
        "k": bundle.k,
        "m": bundle.m,
        "merged": bundle.merged,
        "truncated": bundle.truncated,
        "max_weight": bundle.max_weight,
        "has_gold": bundle.gold is not None,
        "candidates": [
            {
                "index": i,
                "n_edges": g.n_edges,
                "report": r.to_dict(),
            }
            for i, (g, r) in enumerate(zip(bundle.candidates, bundle.reports))
        ],
    }


def create_app(
    *,
    max_table_bytes: int | None = None,
    max_functions: int | None = None,
    ttl_seconds: float | None = None,
    ui_dir: str | None = None,
) -> FastAPI:
    if max_table_bytes is None:
        max_table_bytes = _env_int("SEMMAP_MAX_TABLE_BYTES", 5_000_000)
    if max_functions is None:
        max_functions = _env_int("SEMMAP_MAX_FUNCTIONS", 40)
    if ttl_seconds is None:
        ttl_seconds = _env_int("SEMMAP_SESSION_TTL", 24 * 3600)

    app = FastAPI(title="semmap service", version="0.1.0")
    store = SessionStore(ttl_seconds)
    app.state.store = store

    @app.exception_handler(SemmapError)
    async def _domain_error(request: Request, exc: SemmapError):
        if isinstance(exc, PipelineStageError):
            return _error(400, exc.stage, str(exc.cause))
        return _error(400, "request", str(exc))

    @app.get("/api/health")
    def health():
        return {"status": "ok"}

    @app.post("/api/sessions", status_code=201)
    async def create_session(
        table: UploadFile = File(...),
        gold: UploadFile | None = File(default=None),
        k: int = Form(default=10000),
        m: int = Form(default=3),
        merge: bool = Form(default=False),
    ):
        raw = await table.read()
        if len(raw) > max_table_bytes:
            return _error(
                413, "read-table",
                f"table upload exceeds the {max_table_bytes} byte cap",
            )
        gold_raw = await gold.read() if gold is not None else None
        try:
            parsed = parse_table(raw)
        except SemmapError as exc:
            return _error(400, "read-table", str(exc))
        if parsed.n_functions > max_functions:
            return _error(
                413, "read-table",
                f"table has {parsed.n_functions} functions, cap is {max_functions}",
            )
        bundle = run_pipeline(parsed, k=k, m=m, do_merge=merge, gold=gold_raw)
        sid = store.create(bundle)
        return JSONResponse(
            status_code=201,
            content={"session_id": sid, "summary": _summary(bundle)},
        )

    def _session_or_404(sid: str):
        session = store.get(sid)
        if session is None:
            return None, _error(404, "session", f"unknown session {sid!r}")
        return session, None

    def _candidate_or_404(session: _Session, index: int):
        if not 0 <= index < len(session.bundle.candidates):
            return _error(
                404, "candidate",
                f"candidate {index} out of range "
                f"({len(session.bundle.candidates)} candidates)",
            )
        return None

    @app.get("/api/sessions/{sid}/candidates")
    def list_candidates(sid: str):
        session, err = _session_or_404(sid)
        if err:
            return err
        bundle = session.bundle
        return {
            "active": bundle.active,
            "candidates": [graph_to_dict(g) for g in bundle.candidates],
            "reports": [r.to_dict() for r in bundle.reports],
            "g0": graph_to_dict(bundle.g0),
            "summary": _summary(bundle),
        }

    @app.get("/api/sessions/{sid}/candidates/{index}/form/{form}")
    def form_subgraph(sid: str, index: int, form: str):
        session, err = _session_or_404(sid)
        if err:
            return err
        err = _candidate_or_404(session, index)
        if err:
            return err
        bundle = session.bundle
        graph = bundle.candidates[index]
        adj = graph.adjacency_masks()
        matches = []
        for inst in bundle.table.instances:
            if inst.form != form:
                continue
            nodes = sorted(inst.functions)
            comps = induced_components(adj, mask_of(inst.functions))
            edges = [
                [u, v]
                for (u, v) in graph.canonical_edges()
                if u in inst.functions and v in inst.functions
            ]
            matches.append(
                {
                    "language": inst.language,
                    "form": inst.form,
                    "functions": nodes,
                    "labels": [graph.labels[i] for i in nodes],
                    "edges": edges,
                    "connected": len(comps) <= 1,
                    "components": [sorted(bits(c)) for c in comps],
                }
            )
        if not matches:
            return _error(404, "form", f"no row has form {form!r}")
        return {"form": form, "matches": matches}

    def _mutate(sid: str, index: int, fn):
        session, err = _session_or_404(sid)
        if err:
            return err
        err = _candidate_or_404(session, index)
        if err:
            return err
        if not session.lock.acquire(blocking=False):
            return _error(
                409, "edit", "another edit on this session is in progress"
            )
        try:
            bundle = switch_active(session.bundle, index)
            result = fn(bundle)
            if isinstance(result, JSONResponse):
                return result
            session.bundle = result
            return {
                "active": result.active,
                "graph": graph_to_dict(result.active_graph()),
                "report": result.active_report().to_dict(),
                "history_length": len(result.history),
            }
        finally:
            session.lock.release()

    @app.post("/api/sessions/{sid}/candidates/{index}/edits")
    async def post_edit(sid: str, index: int, request: Request):
        try:
            doc = await request.json()
        except Exception:
            return _error(400, "edit", "body must be a JSON edit action")
        if not isinstance(doc, dict):
            return _error(400, "edit", "body must be a JSON object")

        def run(bundle: SessionBundle):
            action = EditAction.from_dict(doc)
            return apply_edit(bundle, action)

        try:
            return _mutate(sid, index, run)
        except EditError as exc:
            return _error(400, "edit", str(exc))

    @app.post("/api/sessions/{sid}/candidates/{index}/merge")
    def post_merge(sid: str, index: int):
        return _mutate(
            sid, index, lambda b: apply_edit(b, EditAction(kind="merge_all"))
        )

    @app.post("/api/sessions/{sid}/candidates/{index}/undo")
    def post_undo(sid: str, index: int):
        outcome = {"undone": False}

        def run(bundle: SessionBundle):
            before = len(bundle.history)
            result = undo(bundle)
            outcome["undone"] = len(result.history) < before
            return result

        response = _mutate(sid, index, run)
        if isinstance(response, dict):
            response.update(outcome)
        return response

    @app.get("/api/sessions/{sid}/candidates/{index}/export")
    def export_candidate(sid: str, index: int, format: str = "json"):
        session, err = _session_or_404(sid)
        if err:
            return err
        err = _candidate_or_404(session, index)
        if err:
            return err
        if format not in ("json", "dot"):
            return _error(400, "export", f"unknown format {format!r}")
        data = serialize_graph(session.bundle.candidates[index], format)
        media = "application/json" if format == "json" else "text/vnd.graphviz"
        return Response(
            content=data,
            media_type=media,
            headers={
                "Content-Disposition": f'attachment; filename="candidate_{index}.{format}"'
            },
        )

    if ui_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app


app = create_app()
