"""Shared fixtures: deterministic random project/scenario generators and
tiny PNG assets for store-level tests."""

from __future__ import annotations

import io
import random
from pathlib import Path

import numpy as np
import pytest
from PIL import Image

from protoreel import model
from protoreel.model import (
    BBox,
    CheckboxState,
    EventSequence,
    InteractionEvent,
    KeyBackspace,
    KeyChar,
    Mockup,
    PointerDown,
    PointerMove,
    PointerUp,
    Project,
    Scenario,
    TextInputState,
    TimelineEntry,
)

PRINTABLE = "abcdefghijklmnopqrstuvwxyz ABC123.!?-"


def png_bytes(width: int, height: int, color=(127, 127, 127)) -> bytes:
    buf = io.BytesIO()
    arr = np.zeros((height, width, 3), dtype=np.uint8)
    arr[:, :] = color
    Image.fromarray(arr, "RGB").save(buf, format="PNG")
    return buf.getvalue()


def random_event(rng: random.Random, t_ms: int, width: int, height: int) -> InteractionEvent:
    x = rng.randrange(width)
    y = rng.randrange(height)
    roll = rng.random()
    if roll < 0.4:
        payload = PointerMove(x, y)
    elif roll < 0.55:
        payload = PointerDown(x, y, rng.choice(("mouse", "touch")))
    elif roll < 0.7:
        payload = PointerUp(x, y, rng.choice(("mouse", "touch")))
    elif roll < 0.9:
        payload = KeyChar(rng.choice(PRINTABLE))
    else:
        payload = KeyBackspace()
    return InteractionEvent(t_ms, payload)


def random_sequence(rng: random.Random, width: int, height: int,
                    max_events: int = 50) -> EventSequence:
    n = rng.randrange(max_events + 1)
    t = 0
    events = []
    for _ in range(n):
        t += rng.choice((0, 10, 16, 33, 120, 400))
        events.append(random_event(rng, t, width, height))
    return EventSequence(events)


def random_mockup(rng: random.Random, mockup_id: str) -> Mockup:
    w = rng.randrange(40, 200)
    h = rng.randrange(40, 200)
    m = Mockup(mockup_id, f"mockup {mockup_id}", f"assets/{mockup_id}.png", w, h)
    for _ in range(rng.randrange(0, 5)):
        kind = rng.choice(model.CONTROL_KINDS)
        bw = rng.randrange(1, w)
        bh = rng.randrange(1, h)
        bbox = BBox(rng.randrange(0, w - bw + 1), rng.randrange(0, h - bh + 1), bw, bh)
        initial = None
        if kind == "checkbox":
            initial = CheckboxState(rng.random() < 0.5)
        elif kind == "text_input":
            initial = TextInputState("".join(rng.choices(PRINTABLE, k=rng.randrange(4))))
        label = "".join(rng.choices(PRINTABLE, k=rng.randrange(8)))
        model.add_control(m, kind, bbox, initial, label)
    return m


def random_project(rng: random.Random, max_mockups: int = 5,
                   max_events: int = 50) -> Project:
    project = Project()
    n_mockups = rng.randrange(1, max_mockups + 1)
    for i in range(n_mockups):
        project.mockups.append(random_mockup(rng, f"m{i + 1:02d}"))
    n_scenarios = rng.randrange(0, 3)
    eid = 0
    for i in range(n_scenarios):
        scenario = Scenario(f"s{i + 1:02d}", f"scenario {i + 1}")
        for _ in range(rng.randrange(0, 6)):
            eid += 1
            mockup = rng.choice(project.mockups)
            scenario.entries.append(TimelineEntry(
                f"e{eid:02d}", mockup.id,
                random_sequence(rng, mockup.width_px, mockup.height_px, max_events)))
        project.scenarios.append(scenario)
    return project


def materialize_assets(project: Project, root: Path) -> None:
    """Write a decodable PNG for every mockup reference."""
    for m in project.mockups:
        path = root / m.image_ref
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_bytes(png_bytes(m.width_px, m.height_px))


@pytest.fixture
def webstore(tmp_path_factory) -> Path:
    """Freshly generated web-store fixture project path (per test)."""
    from protoreel.fixture import generate_webstore

    out = tmp_path_factory.mktemp("webstore")
    return generate_webstore(out / "proj")
