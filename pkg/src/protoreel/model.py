"""Domain model: projects, mockups, responsive controls, scenarios and the
per-entry interaction event sequences, plus the edit operations on them.

All values are plain dataclasses. Mutating operations edit the passed-in
object in place and assume a single writer; callers serialize concurrent
edits externally.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Union

FORMAT_VERSION = 1

CONTROL_KINDS = ("button", "text_input", "checkbox", "hotspot")

POINTER_SOURCES = ("mouse", "touch")


class ModelError(ValueError):
    """An edit operation rejected its input (precondition violated)."""


# ---------------------------------------------------------------------------
# Events


@dataclass(frozen=True)
class PointerMove:
    x: int
    y: int


@dataclass(frozen=True)
class PointerDown:
    x: int
    y: int
    source: str = "mouse"


@dataclass(frozen=True)
class PointerUp:
    x: int
    y: int
    source: str = "mouse"


@dataclass(frozen=True)
class KeyChar:
    char: str


@dataclass(frozen=True)
class KeyBackspace:
    pass


EventPayload = Union[PointerMove, PointerDown, PointerUp, KeyChar, KeyBackspace]


@dataclass(frozen=True)
class InteractionEvent:
    """One captured pointer/keyboard/touch action.

    ``t_ms`` is relative to the start of the owning entry's sequence, so
    rearranging timeline entries never needs to rewrite timestamps.
    """

    t_ms: int
    payload: EventPayload

    def __post_init__(self):
        if self.t_ms < 0:
            raise ModelError(f"negative timestamp {self.t_ms}")
        if isinstance(self.payload, (PointerDown, PointerUp)):
            if self.payload.source not in POINTER_SOURCES:
                raise ModelError(f"unknown pointer source {self.payload.source!r}")
        if isinstance(self.payload, KeyChar):
            ch = self.payload.char
            if len(ch) != 1 or not ch.isprintable():
                raise ModelError(f"key_char must be one printable character, got {ch!r}")


# ---------------------------------------------------------------------------
# Control states


@dataclass(frozen=True)
class ButtonState:
    pressed: bool = False
    pressed_since_ms: Optional[int] = None


@dataclass(frozen=True)
class TextInputState:
    text: str = ""
    focused: bool = False


@dataclass(frozen=True)
class CheckboxState:
    checked: bool = False


@dataclass(frozen=True)
class HotspotState:
    pass


ControlState = Union[ButtonState, TextInputState, CheckboxState, HotspotState]

_STATE_FOR_KIND = {
    "button": ButtonState,
    "text_input": TextInputState,
    "checkbox": CheckboxState,
    "hotspot": HotspotState,
}


def default_state(kind: str) -> ControlState:
    return _STATE_FOR_KIND[kind]()


def state_compatible(kind: str, state: ControlState) -> bool:
    cls = _STATE_FOR_KIND.get(kind)
    return cls is not None and type(state) is cls


# ---------------------------------------------------------------------------
# Structure


@dataclass(frozen=True)
class BBox:
    x: int
    y: int
    w: int
    h: int

    def contains(self, px: int, py: int) -> bool:
        """Half-open: left/top edges inclusive, right/bottom exclusive."""
        return self.x <= px < self.x + self.w and self.y <= py < self.y + self.h


@dataclass
class Control:
    id: str
    kind: str
    bbox: BBox
    initial: ControlState
    label: str = ""


@dataclass
class Mockup:
    id: str
    name: str
    image_ref: str
    width_px: int
    height_px: int
    controls: list[Control] = field(default_factory=list)

    def control(self, control_id: str) -> Control:
        for c in self.controls:
            if c.id == control_id:
                return c
        raise ModelError(f"unknown control {control_id!r}")


@dataclass
class EventSequence:
    events: list[InteractionEvent] = field(default_factory=list)

    def last_t_ms(self) -> Optional[int]:
        return self.events[-1].t_ms if self.events else None


@dataclass
class TimelineEntry:
    id: str
    mockup_id: str
    sequence: EventSequence = field(default_factory=EventSequence)


@dataclass
class Scenario:
    id: str
    name: str
    entries: list[TimelineEntry] = field(default_factory=list)

    def entry(self, entry_id: str) -> TimelineEntry:
        for e in self.entries:
            if e.id == entry_id:
                return e
        raise ModelError(f"unknown entry {entry_id!r}")

    def entry_index(self, entry_id: str) -> int:
        for i, e in enumerate(self.entries):
            if e.id == entry_id:
                return i
        raise ModelError(f"unknown entry {entry_id!r}")


@dataclass
class Project:
    format_version: int = FORMAT_VERSION
    asset_dir: str = "assets"
    mockups: list[Mockup] = field(default_factory=list)
    scenarios: list[Scenario] = field(default_factory=list)

    def mockup(self, mockup_id: str) -> Mockup:
        for m in self.mockups:
            if m.id == mockup_id:
                return m
        raise ModelError(f"unknown mockup {mockup_id!r}")

    def scenario(self, scenario_id: str) -> Scenario:
        for s in self.scenarios:
            if s.id == scenario_id:
                return s
        raise ModelError(f"unknown scenario {scenario_id!r}")

    def find_entry(self, entry_id: str) -> tuple[Scenario, TimelineEntry]:
        for s in self.scenarios:
            for e in s.entries:
                if e.id == entry_id:
                    return s, e
        raise ModelError(f"unknown entry {entry_id!r}")


# ---------------------------------------------------------------------------
# Fresh identifiers


def _fresh_id(prefix: str, taken: set[str]) -> str:
    n = len(taken) + 1
    while True:
        candidate = f"{prefix}{n:02d}"
        if candidate not in taken:
            return candidate
        n += 1


def fresh_mockup_id(project: Project) -> str:
    return _fresh_id("m", {m.id for m in project.mockups})


def fresh_scenario_id(project: Project) -> str:
    return _fresh_id("s", {s.id for s in project.scenarios})


def fresh_control_id(mockup: Mockup) -> str:
    return _fresh_id("c", {c.id for c in mockup.controls})


def fresh_entry_id(project: Project) -> str:
    # Entry ids only need to be unique per scenario, but the HTTP API
    # addresses entries without a scenario prefix, so keep them unique
    # across the whole project.
    taken = {e.id for s in project.scenarios for e in s.entries}
    return _fresh_id("e", taken)


# ---------------------------------------------------------------------------
# Edit operations


def add_mockup(project: Project, name: str, image_ref: str,
               width_px: int, height_px: int) -> str:
    if not name:
        raise ModelError("mockup name must be non-empty")
    if width_px < 1 or height_px < 1:
        raise ModelError("mockup dimensions must be positive")
    mid = fresh_mockup_id(project)
    if any(m.id == mid for m in project.mockups):
        raise ModelError(f"id collision {mid!r}")
    project.mockups.append(Mockup(mid, name, image_ref, width_px, height_px))
    return mid


def add_scenario(project: Project, name: str) -> str:
    sid = fresh_scenario_id(project)
    project.scenarios.append(Scenario(sid, name))
    return sid


def add_control(mockup: Mockup, kind: str, bbox: BBox,
                initial: Optional[ControlState] = None, label: str = "") -> str:
    if kind not in CONTROL_KINDS:
        raise ModelError(f"unknown control kind {kind!r}")
    if initial is None:
        initial = default_state(kind)
    if not state_compatible(kind, initial):
        raise ModelError(f"initial state {initial!r} incompatible with kind {kind!r}")
    if bbox.w < 1 or bbox.h < 1:
        raise ModelError("bbox must be at least 1x1")
    if (bbox.x < 0 or bbox.y < 0
            or bbox.x + bbox.w > mockup.width_px
            or bbox.y + bbox.h > mockup.height_px):
        raise ModelError(f"bbox {bbox} outside mockup {mockup.width_px}x{mockup.height_px}")
    cid = fresh_control_id(mockup)
    mockup.controls.append(Control(cid, kind, bbox, initial, label))
    return cid


def append_entry(project: Project, scenario: Scenario, mockup_id: str) -> str:
    project.mockup(mockup_id)  # raises on dangling ref
    eid = fresh_entry_id(project)
    scenario.entries.append(TimelineEntry(eid, mockup_id))
    return eid


def move_entry(scenario: Scenario, entry_id: str, new_index: int) -> None:
    i = scenario.entry_index(entry_id)
    if not 0 <= new_index < len(scenario.entries):
        raise ModelError(f"index {new_index} out of range")
    entry = scenario.entries.pop(i)
    scenario.entries.insert(new_index, entry)


def delete_entry(scenario: Scenario, entry_id: str) -> None:
    i = scenario.entry_index(entry_id)
    del scenario.entries[i]


def record_event(entry: TimelineEntry, event: InteractionEvent) -> None:
    last = entry.sequence.last_t_ms()
    if last is not None and event.t_ms < last:
        raise ModelError(f"timestamp {event.t_ms} before last event at {last}")
    entry.sequence.events.append(event)


def clear_sequence(entry: TimelineEntry) -> None:
    entry.sequence.events.clear()


def insert_event(entry: TimelineEntry, event: InteractionEvent, index: int) -> None:
    events = entry.sequence.events
    if not 0 <= index <= len(events):
        raise ModelError(f"index {index} out of range")
    if index > 0 and events[index - 1].t_ms > event.t_ms:
        raise ModelError("insertion breaks timestamp order with predecessor")
    if index < len(events) and event.t_ms > events[index].t_ms:
        raise ModelError("insertion breaks timestamp order with successor")
    events.insert(index, event)


# ---------------------------------------------------------------------------
# Validation


@dataclass(frozen=True)
class Violation:
    path: str
    reason: str
    message: str


VIOLATION_REASONS = (
    "duplicate_mockup_id",
    "duplicate_scenario_id",
    "duplicate_control_id",
    "duplicate_entry_id",
    "bad_dimensions",
    "bbox_out_of_bounds",
    "incompatible_initial",
    "unknown_control_kind",
    "dangling_mockup_ref",
    "nonmonotonic_timestamps",
    "negative_timestamp",
    "nonprintable_char",
    "missing_asset",
    "dimension_mismatch",
)


def validate_project(project: Project, root: Optional[Path] = None) -> list[Violation]:
    """Collect every invariant violation; pure, empty list means clean.

    With ``root`` given, asset files are resolved under it and checked for
    existence and matching pixel dimensions. Without it, only structural
    invariants are checked.
    """
    out: list[Violation] = []
    seen_m: set[str] = set()
    for mi, m in enumerate(project.mockups):
        mpath = f"mockups[{mi}]"
        if m.id in seen_m:
            out.append(Violation(mpath, "duplicate_mockup_id", f"mockup id {m.id!r} reused"))
        seen_m.add(m.id)
        if m.width_px < 1 or m.height_px < 1:
            out.append(Violation(mpath, "bad_dimensions",
                                 f"{m.width_px}x{m.height_px} not positive"))
        seen_c: set[str] = set()
        for ci, c in enumerate(m.controls):
            cpath = f"{mpath}/controls[{ci}]"
            if c.id in seen_c:
                out.append(Violation(cpath, "duplicate_control_id", f"control id {c.id!r} reused"))
            seen_c.add(c.id)
            if c.kind not in CONTROL_KINDS:
                out.append(Violation(cpath, "unknown_control_kind", f"kind {c.kind!r}"))
            elif not state_compatible(c.kind, c.initial):
                out.append(Violation(cpath, "incompatible_initial",
                                     f"{type(c.initial).__name__} for kind {c.kind}"))
            b = c.bbox
            if (b.w < 1 or b.h < 1 or b.x < 0 or b.y < 0
                    or b.x + b.w > m.width_px or b.y + b.h > m.height_px):
                out.append(Violation(cpath, "bbox_out_of_bounds",
                                     f"({b.x},{b.y},{b.w},{b.h}) in {m.width_px}x{m.height_px}"))
        if root is not None:
            asset = root / m.image_ref
            if not asset.is_file():
                out.append(Violation(mpath, "missing_asset", f"{m.image_ref} not found"))
            else:
                dims = _png_dimensions(asset)
                if dims is not None and dims != (m.width_px, m.height_px):
                    out.append(Violation(
                        mpath, "dimension_mismatch",
                        f"declared {m.width_px}x{m.height_px}, image is {dims[0]}x{dims[1]}"))

    mockup_ids = {m.id for m in project.mockups}
    seen_s: set[str] = set()
    for si, s in enumerate(project.scenarios):
        spath = f"scenarios[{si}]"
        if s.id in seen_s:
            out.append(Violation(spath, "duplicate_scenario_id", f"scenario id {s.id!r} reused"))
        seen_s.add(s.id)
        seen_e: set[str] = set()
        for ei, e in enumerate(s.entries):
            epath = f"{spath}/entries[{ei}]"
            if e.id in seen_e:
                out.append(Violation(epath, "duplicate_entry_id", f"entry id {e.id!r} reused"))
            seen_e.add(e.id)
            if e.mockup_id not in mockup_ids:
                out.append(Violation(epath, "dangling_mockup_ref",
                                     f"mockup {e.mockup_id!r} not in project"))
            prev = -1
            for vi, ev in enumerate(e.sequence.events):
                vpath = f"{epath}/events[{vi}]"
                if ev.t_ms < 0:
                    out.append(Violation(vpath, "negative_timestamp", f"t_ms {ev.t_ms}"))
                elif ev.t_ms < prev:
                    out.append(Violation(vpath, "nonmonotonic_timestamps",
                                         f"t_ms {ev.t_ms} after {prev}"))
                prev = max(prev, ev.t_ms)
                if isinstance(ev.payload, KeyChar) and not ev.payload.char.isprintable():
                    out.append(Violation(vpath, "nonprintable_char", repr(ev.payload.char)))
    return out


def _png_dimensions(path: Path) -> Optional[tuple[int, int]]:
    try:
        from PIL import Image

        with Image.open(path) as im:
            return im.size
    except Exception:
        return None


def clone_project(project: Project) -> Project:
    """Deep structural copy; frozen leaves are shared."""
    return dataclasses.replace(
        project,
        mockups=[dataclasses.replace(m, controls=list(m.controls)) for m in project.mockups],
        scenarios=[
            dataclasses.replace(
                s,
                entries=[
                    dataclasses.replace(e, sequence=EventSequence(list(e.sequence.events)))
                    for e in s.entries
                ],
            )
            for s in project.scenarios
        ],
    )
