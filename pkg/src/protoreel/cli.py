"""Command line entry point.

Exit codes: 0 success, 1 validation/parse failure, 2 usage error,
3 I/O failure. Machine-readable output goes to stdout, diagnostics to
stderr. Every mutating command saves atomically: on failure the project
file bytes are unchanged.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from . import fixture, model, replay, store, video
from .model import ModelError
from .replay import ReplayConfig
from .store import ParseError, StoreError
from .video import ExportConfig

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_IO = 3


def _fail(code: int, message: str) -> "NoReturn":  # noqa: F821
    click.echo(message, err=True)
    sys.exit(code)


def _load(project_path: Path) -> model.Project:
    try:
        return store.load_project(project_path)
    except FileNotFoundError as e:
        _fail(EXIT_IO, f"cannot read {project_path}: {e}")
    except ParseError as e:
        _fail(EXIT_INVALID, f"{project_path}:{e.line}:{e.column}: {e.reason}: {e.message}")
    except StoreError as e:
        _fail(EXIT_INVALID, str(e))
    except OSError as e:
        _fail(EXIT_IO, str(e))


@click.group()
def main() -> None:
    """Capture, replay and export interaction scenarios on mockups."""


@main.command()
@click.argument("project_path", type=Path)
def validate(project_path: Path) -> None:
    """Check a project file; print one line per violation."""
    if not project_path.exists():
        _fail(EXIT_IO, f"no such file: {project_path}")
    try:
        project = store.parse_project(project_path.read_bytes())
    except ParseError as e:
        _fail(EXIT_INVALID, f"{project_path}:{e.line}:{e.column}: {e.reason}: {e.message}")
    except OSError as e:
        _fail(EXIT_IO, str(e))
    violations = model.validate_project(project, root=project_path.parent)
    for v in violations:
        click.echo(f"{v.path}: {v.reason}: {v.message}")
    sys.exit(EXIT_INVALID if violations else EXIT_OK)


@main.command()
@click.argument("project_path", type=Path)
@click.option("--hold-ms", default=500, show_default=True)
def info(project_path: Path, hold_ms: int) -> None:
    """Print counts and per-scenario durations as JSON."""
    project = _load(project_path)
    config = ReplayConfig(hold_ms=hold_ms)
    scenarios = []
    for s in project.scenarios:
        entry = {"id": s.id, "name": s.name, "entries": len(s.entries)}
        if s.entries:
            entry["duration_ms"] = replay.scenario_timeline(s, project, config).total_ms
        scenarios.append(entry)
    click.echo(json.dumps({
        "mockups": len(project.mockups),
        "scenarios": scenarios,
    }))


@main.command()
@click.argument("project_path", type=Path)
@click.argument("scenario_id")
@click.argument("output", type=Path)
@click.option("--fps", default=30, show_default=True)
@click.option("--hold-ms", default=500, show_default=True)
@click.option("--format", "fmt", default="y4m_stream", show_default=True,
              type=click.Choice(video.EXPORT_FORMATS))
def export(project_path: Path, scenario_id: str, output: Path,
           fps: int, hold_ms: int, fmt: str) -> None:
    """Export one scenario as a video or PNG frame sequence."""
    if fps < 1:
        _fail(EXIT_USAGE, "--fps must be >= 1")
    if hold_ms < 0:
        _fail(EXIT_USAGE, "--hold-ms must be >= 0")
    project = _load(project_path)
    try:
        project.scenario(scenario_id)
    except ModelError:
        _fail(EXIT_USAGE, f"unknown scenario {scenario_id!r}")
    try:
        report = video.export_scenario_video(
            project, scenario_id, project_path.parent,
            ReplayConfig(hold_ms=hold_ms, fps=fps),
            ExportConfig(format=fmt, output=output))
    except video.ExportError as e:
        _fail(EXIT_INVALID, str(e))
    except OSError as e:
        _fail(EXIT_IO, str(e))
    click.echo(json.dumps({
        "frames": report.frames,
        "duration_ms": report.duration_ms,
        "bytes": report.bytes_written,
        "output": report.output,
    }))


@main.command("render-frame")
@click.argument("project_path", type=Path)
@click.argument("scenario_id")
@click.argument("t_ms", type=int)
@click.argument("output", type=Path)
@click.option("--hold-ms", default=500, show_default=True)
def render_frame_cmd(project_path: Path, scenario_id: str, t_ms: int, output: Path,
                     hold_ms: int) -> None:
    """Render the frame at a scenario time to a PNG file."""
    if t_ms < 0:
        _fail(EXIT_USAGE, "t_ms must be >= 0")
    project = _load(project_path)
    try:
        scenario = project.scenario(scenario_id)
    except ModelError:
        _fail(EXIT_USAGE, f"unknown scenario {scenario_id!r}")
    if not scenario.entries:
        _fail(EXIT_INVALID, f"scenario {scenario_id!r} is empty")
    config = ReplayConfig(hold_ms=hold_ms)
    timeline = replay.scenario_timeline(scenario, project, config)
    entry_id, local_t = timeline.locate(t_ms)
    _, entry = project.find_entry(entry_id)
    mockup = project.mockup(entry.mockup_id)
    images = video.load_mockup_images(project, project_path.parent)
    from .raster import canvas_size, render_frame

    w, h = canvas_size([project.mockup(e.mockup_id) for e in scenario.entries])
    state = replay.state_at(mockup, entry.sequence, local_t, config)
    frame = render_frame(mockup, state, w, h, images[mockup.id])
    try:
        output.write_bytes(video.encode_png(frame))
    except OSError as e:
        _fail(EXIT_IO, str(e))
    click.echo(json.dumps({"entry_id": entry_id, "local_t_ms": local_t,
                           "output": str(output)}))


@main.command("export-images")
@click.argument("project_path", type=Path)
@click.argument("out_dir", type=Path)
def export_images(project_path: Path, out_dir: Path) -> None:
    """Export every mockup as <mockup_id>.png."""
    project = _load(project_path)
    try:
        count = store.export_mockup_images(project, project_path.parent, out_dir)
    except StoreError as e:
        _fail(EXIT_IO, str(e))
    click.echo(json.dumps({"images": count, "out_dir": str(out_dir)}))


@main.command("fixture-webstore")
@click.argument("out_dir", type=Path)
def fixture_webstore(out_dir: Path) -> None:
    """Generate the 11-mockup, 19-step web-store example project."""
    try:
        path = fixture.generate_webstore(out_dir)
    except FileExistsError as e:
        _fail(EXIT_USAGE, str(e))
    except OSError as e:
        _fail(EXIT_IO, str(e))
    click.echo(json.dumps({"project": str(path),
                           "steps": str(out_dir / fixture.STEPS_FILENAME)}))


@main.command()
@click.argument("project_path", type=Path)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8787, show_default=True)
def serve(project_path: Path, host: str, port: int) -> None:
    """Serve the recorder HTTP API for one project."""
    from . import service

    project = _load(project_path)  # fail fast with proper exit codes
    del project
    service.serve(project_path, host, port)


# ---------------------------------------------------------------------------
# Edit subcommands: load, apply one edit, save canonically (atomic).


@main.group()
def edit() -> None:
    """Apply one timeline or sequence edit and save the project."""


def _save_or_die(project: model.Project, project_path: Path) -> None:
    try:
        store.save_project(project, project_path)
    except StoreError as e:
        _fail(EXIT_INVALID, str(e))
    except OSError as e:
        _fail(EXIT_IO, str(e))


@edit.command("add-entry")
@click.argument("project_path", type=Path)
@click.argument("scenario_id")
@click.argument("mockup_id")
def edit_add_entry(project_path: Path, scenario_id: str, mockup_id: str) -> None:
    project = _load(project_path)
    try:
        scenario = project.scenario(scenario_id)
        eid = model.append_entry(project, scenario, mockup_id)
    except ModelError as e:
        _fail(EXIT_INVALID, str(e))
    _save_or_die(project, project_path)
    click.echo(json.dumps({"entry_id": eid}))


@edit.command("move-entry")
@click.argument("project_path", type=Path)
@click.argument("scenario_id")
@click.argument("entry_id")
@click.argument("new_index", type=int)
def edit_move_entry(project_path: Path, scenario_id: str, entry_id: str,
                    new_index: int) -> None:
    project = _load(project_path)
    try:
        model.move_entry(project.scenario(scenario_id), entry_id, new_index)
    except ModelError as e:
        _fail(EXIT_INVALID, str(e))
    _save_or_die(project, project_path)


@edit.command("delete-entry")
@click.argument("project_path", type=Path)
@click.argument("scenario_id")
@click.argument("entry_id")
def edit_delete_entry(project_path: Path, scenario_id: str, entry_id: str) -> None:
    project = _load(project_path)
    try:
        model.delete_entry(project.scenario(scenario_id), entry_id)
    except ModelError as e:
        _fail(EXIT_INVALID, str(e))
    _save_or_die(project, project_path)


@edit.command("clear-seq")
@click.argument("project_path", type=Path)
@click.argument("entry_id")
def edit_clear_seq(project_path: Path, entry_id: str) -> None:
    project = _load(project_path)
    try:
        _, entry = project.find_entry(entry_id)
        model.clear_sequence(entry)
    except ModelError as e:
        _fail(EXIT_INVALID, str(e))
    _save_or_die(project, project_path)


@edit.command("insert-event")
@click.argument("project_path", type=Path)
@click.argument("entry_id")
@click.argument("events_file", type=Path)
@click.option("--index", type=int, default=None,
              help="Insertion index; default appends at the end.")
def edit_insert_event(project_path: Path, entry_id: str, events_file: Path,
                      index: int | None) -> None:
    """Insert events read from a JSON file (array of event objects)."""
    project = _load(project_path)
    try:
        raw = events_file.read_bytes()
    except OSError as e:
        _fail(EXIT_IO, str(e))
    try:
        nodes = store.parse_positioned_json(raw)
        if not isinstance(nodes.value, list):
            raise nodes.err("wrong_type", "events file must be a JSON array")
        events = [store.decode_event(n) for n in nodes.value]
    except ParseError as e:
        _fail(EXIT_INVALID, f"{events_file}:{e.line}:{e.column}: {e.reason}: {e.message}")
    try:
        _, entry = project.find_entry(entry_id)
        for offset, ev in enumerate(events):
            if index is None:
                model.record_event(entry, ev)
            else:
                model.insert_event(entry, ev, index + offset)
    except ModelError as e:
        _fail(EXIT_INVALID, str(e))
    _save_or_die(project, project_path)
    click.echo(json.dumps({"inserted": len(events)}))


if __name__ == "__main__":
    main()
