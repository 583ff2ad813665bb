"""Local single-user HTTP JSON API hosting one project for the recorder UI.

Mutations carry an ``expected_revision``; a stale value gets 409 and
changes nothing. All mutations funnel through one lock, so observable
state is always the loaded project plus the accepted mutations in
acceptance order. Shutdown persists the project canonically.
"""

from __future__ import annotations

import json
import threading
from contextlib import asynccontextmanager
from pathlib import Path
from typing import Any, Callable, Optional

from fastapi import FastAPI, Request, Response
from fastapi.responses import JSONResponse

from . import model, replay, store, video
from .model import InteractionEvent, ModelError, Project
from .raster import canvas_size, render_frame
from .replay import ReplayConfig
from .video import ExportConfig


def _error(status: int, reason_code: str, message: str, path: str = "") -> JSONResponse:
    return JSONResponse(
        {"reason_code": reason_code, "message": message, "path": path},
        status_code=status)


class Session:
    """The loaded project plus a revision counter and a single-writer lock."""

    def __init__(self, project_path: Path):
        self.project_path = Path(project_path)
        self.project: Project = store.load_project(self.project_path)
        self.revision = 0
        self.lock = threading.Lock()

    def mutate(self, expected_revision: int,
               op: Callable[[Project], Any]) -> tuple[Optional[Any], Optional[JSONResponse]]:
        """Apply op under the lock; reject stale revisions; roll back on error."""
        with self.lock:
            if expected_revision != self.revision:
                return None, _error(
                    409, "revision_conflict",
                    f"expected_revision {expected_revision} != current {self.revision}")
            snapshot = model.clone_project(self.project)
            try:
                result = op(self.project)
            except ModelError as e:
                self.project = snapshot
                return None, _error(422, "invalid_edit", str(e))
            self.revision += 1
            return result, None

    def save(self) -> None:
        with self.lock:
            store.save_project(self.project, self.project_path)


# ---------------------------------------------------------------------------
# JSON encoding of the project snapshot (mirrors the file format's shapes)


def _project_json(project: Project) -> dict:
    doc = json.loads(store.encode_project(project).decode("ascii"))
    return doc


async def _body(request: Request) -> dict:
    try:
        data = json.loads(await request.body() or b"{}")
    except json.JSONDecodeError as e:
        raise ValueError(f"bad JSON body: {e}") from e
    if not isinstance(data, dict):
        raise ValueError("body must be a JSON object")
    return data


def _decode_events(raw: Any) -> list[InteractionEvent]:
    if not isinstance(raw, list):
        raise ValueError("events must be an array")
    doc = json.dumps(raw).encode()
    node = store.parse_positioned_json(doc)
    return [store.decode_event(n) for n in node.value]


def create_app(project_path: Path) -> FastAPI:
    session = Session(project_path)

    @asynccontextmanager
    async def lifespan(app: FastAPI):
        yield
        session.save()

    app = FastAPI(lifespan=lifespan)
    app.state.session = session

    @app.get("/api/project")
    def get_project():
        with session.lock:
            return {"revision": session.revision,
                    "project": _project_json(session.project)}

    @app.post("/api/scenarios/{sid}/entries")
    async def post_entry(sid: str, request: Request):
        try:
            body = await _body(request)
            mockup_id = body["mockup_id"]
            expected = int(body["expected_revision"])
        except (ValueError, KeyError, TypeError) as e:
            return _error(400, "bad_request", str(e))

        def op(project: Project):
            return model.append_entry(project, project.scenario(sid), mockup_id)

        eid, err = session.mutate(expected, op)
        if err:
            return err
        return {"revision": session.revision, "entry_id": eid}

    @app.put("/api/scenarios/{sid}/entries/order")
    async def put_order(sid: str, request: Request):
        try:
            body = await _body(request)
            order = body["order"]
            expected = int(body["expected_revision"])
            if not isinstance(order, list) or not all(isinstance(e, str) for e in order):
                raise ValueError("order must be an array of entry ids")
        except (ValueError, KeyError, TypeError) as e:
            return _error(400, "bad_request", str(e))

        def op(project: Project):
            scenario = project.scenario(sid)
            current = {e.id: e for e in scenario.entries}
            if sorted(order) != sorted(current):
                raise ModelError("order must be a permutation of the current entry ids")
            scenario.entries = [current[eid] for eid in order]

        _, err = session.mutate(expected, op)
        if err:
            return err
        return {"revision": session.revision}

    @app.delete("/api/scenarios/{sid}/entries/{eid}")
    def delete_entry(sid: str, eid: str, expected_revision: int):
        expected = expected_revision

        def op(project: Project):
            model.delete_entry(project.scenario(sid), eid)

        _, err = session.mutate(expected, op)
        if err:
            return err
        return {"revision": session.revision}

    @app.post("/api/entries/{eid}/events")
    async def post_events(eid: str, request: Request):
        try:
            body = await _body(request)
            events = _decode_events(body["events"])
            expected = int(body["expected_revision"])
        except (ValueError, KeyError, TypeError) as e:
            return _error(400, "bad_request", str(e))
        except store.ParseError as e:
            return _error(400, "bad_request", e.message)

        def op(project: Project):
            # All-or-nothing: ModelError on any event rolls the batch back.
            _, entry = project.find_entry(eid)
            for ev in events:
                model.record_event(entry, ev)
            return len(events)

        n, err = session.mutate(expected, op)
        if err:
            return err
        return {"revision": session.revision, "recorded": n}

    @app.post("/api/entries/{eid}/events/insert")
    async def post_insert_event(eid: str, request: Request):
        try:
            body = await _body(request)
            events = _decode_events([body["event"]])
            index = int(body["index"])
            expected = int(body["expected_revision"])
        except (ValueError, KeyError, TypeError) as e:
            return _error(400, "bad_request", str(e))
        except store.ParseError as e:
            return _error(400, "bad_request", e.message)

        def op(project: Project):
            _, entry = project.find_entry(eid)
            model.insert_event(entry, events[0], index)

        _, err = session.mutate(expected, op)
        if err:
            return err
        return {"revision": session.revision}

    @app.delete("/api/entries/{eid}/events")
    def delete_events(eid: str, expected_revision: int):
        expected = expected_revision

        def op(project: Project):
            _, entry = project.find_entry(eid)
            model.clear_sequence(entry)

        _, err = session.mutate(expected, op)
        if err:
            return err
        return {"revision": session.revision}

    @app.get("/api/scenarios/{sid}/frame")
    def get_frame(sid: str, t_ms: int, hold_ms: int = 500):
        config = ReplayConfig(hold_ms=hold_ms)
        with session.lock:
            project = model.clone_project(session.project)
        try:
            scenario = project.scenario(sid)
        except ModelError as e:
            return _error(404, "unknown_scenario", str(e))
        if not scenario.entries:
            return _error(422, "empty_scenario", f"scenario {sid!r} has no entries")
        if t_ms < 0:
            return _error(400, "bad_request", "t_ms must be >= 0")
        timeline = replay.scenario_timeline(scenario, project, config)
        entry_id, local_t = timeline.locate(t_ms)
        _, entry = project.find_entry(entry_id)
        mockup = project.mockup(entry.mockup_id)
        images = video.load_mockup_images(project, session.project_path.parent)
        w, h = canvas_size([project.mockup(e.mockup_id) for e in scenario.entries])
        state = replay.state_at(mockup, entry.sequence, local_t, config)
        frame = render_frame(mockup, state, w, h, images[mockup.id])
        return Response(content=video.encode_png(frame), media_type="image/png")

    @app.post("/api/scenarios/{sid}/export")
    async def post_export(sid: str, request: Request):
        try:
            body = await _body(request)
        except ValueError as e:
            return _error(400, "bad_request", str(e))
        fps = int(body.get("fps", 30))
        hold_ms = int(body.get("hold_ms", 500))
        fmt = body.get("format", "y4m_stream")
        if fps < 1 or hold_ms < 0 or fmt not in video.EXPORT_FORMATS:
            return _error(400, "bad_request", "bad fps/hold_ms/format")
        root = session.project_path.parent
        suffix = "y4m" if fmt == "y4m_stream" else "frames"
        output = Path(body.get("output", root / "exports" / f"{sid}.{suffix}"))
        output.parent.mkdir(parents=True, exist_ok=True)
        with session.lock:
            project = model.clone_project(session.project)
        try:
            report = video.export_scenario_video(
                project, sid, root, ReplayConfig(hold_ms=hold_ms, fps=fps),
                ExportConfig(format=fmt, output=output))
        except ModelError as e:
            return _error(404, "unknown_scenario", str(e))
        except video.ExportError as e:
            return _error(422, "export_failed", str(e))
        return {"frames": report.frames, "duration_ms": report.duration_ms,
                "bytes": report.bytes_written, "output": report.output}

    return app


def serve(project_path: Path, host: str = "127.0.0.1", port: int = 8787) -> None:
    import uvicorn

    uvicorn.run(create_app(project_path), host=host, port=port, log_level="warning")
