"""Replay core: pure fold of interaction events into control states,
per-entry durations, scenario timelines, and frame-time sampling.

Everything here is a pure function of its inputs, so replay is available
at any time without a video, and frames may be computed in parallel.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterator, Optional

from .model import (
    ButtonState,
    CheckboxState,
    ControlState,
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


@dataclass(frozen=True)
class ReplayConfig:
    hold_ms: int = 500        # dwell after a sequence's last event
    fps: int = 30
    press_flash_ms: int = 100  # minimum visible press duration

    def __post_init__(self):
        if self.fps < 1:
            raise ValueError("fps must be >= 1")
        if self.hold_ms < 0 or self.press_flash_ms < 0:
            raise ValueError("durations must be non-negative")


@dataclass(frozen=True)
class ReplayState:
    control_states: dict[str, ControlState]
    cursor: Optional[tuple[int, int]] = None
    focused_control: Optional[str] = None


def initial_state(mockup: Mockup) -> ReplayState:
    return ReplayState({c.id: c.initial for c in mockup.controls})


def hit_test(mockup: Mockup, x: int, y: int) -> Optional[str]:
    """Topmost (last-declared) control containing (x, y); bbox is half-open."""
    for c in reversed(mockup.controls):
        if c.bbox.contains(x, y):
            return c.id
    return None


def fold_event(state: ReplayState, event: InteractionEvent, mockup: Mockup) -> ReplayState:
    """Pure transition for one event. Unmatched events are no-ops."""
    p = event.payload
    states = dict(state.control_states)
    cursor = state.cursor
    focused = state.focused_control

    if isinstance(p, PointerMove):
        cursor = (p.x, p.y)
    elif isinstance(p, PointerDown):
        cursor = (p.x, p.y)
        hit = hit_test(mockup, p.x, p.y)
        if hit is None:
            focused = None
        else:
            kind = mockup.control(hit).kind
            if kind == "button":
                states[hit] = ButtonState(pressed=True, pressed_since_ms=event.t_ms)
            elif kind == "checkbox":
                states[hit] = CheckboxState(checked=not states[hit].checked)
            elif kind == "text_input":
                if focused != hit:
                    if focused is not None and isinstance(states[focused], TextInputState):
                        states[focused] = replace(states[focused], focused=False)
                    states[hit] = replace(states[hit], focused=True)
                    focused = hit
            else:  # hotspot
                focused = None
    elif isinstance(p, PointerUp):
        cursor = (p.x, p.y)
        for cid, cs in states.items():
            if isinstance(cs, ButtonState) and cs.pressed:
                states[cid] = replace(cs, pressed=False)
    elif isinstance(p, (KeyChar, KeyBackspace)):
        if focused is not None and isinstance(states.get(focused), TextInputState):
            ts = states[focused]
            if isinstance(p, KeyChar):
                states[focused] = replace(ts, text=ts.text + p.char)
            elif ts.text:
                states[focused] = replace(ts, text=ts.text[:-1])

    return ReplayState(states, cursor, focused)


def fold_prefix(mockup: Mockup, events: list[InteractionEvent], t_ms: int) -> ReplayState:
    """Fold every event with t <= t_ms (ties included) over the initial state."""
    state = initial_state(mockup)
    for ev in events:
        if ev.t_ms > t_ms:
            break
        state = fold_event(state, ev, mockup)
    return state


def _pointer_positions(events: list[InteractionEvent]) -> list[tuple[int, int, int]]:
    return [
        (ev.t_ms, ev.payload.x, ev.payload.y)
        for ev in events
        if isinstance(ev.payload, (PointerMove, PointerDown, PointerUp))
    ]


def interpolate_cursor(events: list[InteractionEvent], t_ms: int) -> Optional[tuple[int, int]]:
    """Cursor at time t: hidden before the first pointer event, linearly
    interpolated between bracketing pointer events, frozen after the last."""
    pts = _pointer_positions(events)
    if not pts or t_ms < pts[0][0]:
        return None
    prev = pts[0]
    for cur in pts[1:]:
        if cur[0] > t_ms:
            t0, x0, y0 = prev
            t1, x1, y1 = cur
            if t1 == t0:
                return (x0, y0)
            f = (t_ms - t0) / (t1 - t0)
            return (round(x0 + (x1 - x0) * f), round(y0 + (y1 - y0) * f))
        prev = cur
    return (prev[1], prev[2])


def _apply_press_flash(state: ReplayState, t_ms: int, config: ReplayConfig) -> ReplayState:
    """Extend pressed rendering to pressed_since + press_flash_ms so that
    sub-frame clicks stay visible."""
    states = dict(state.control_states)
    changed = False
    for cid, cs in states.items():
        if (isinstance(cs, ButtonState) and not cs.pressed
                and cs.pressed_since_ms is not None
                and t_ms < cs.pressed_since_ms + config.press_flash_ms):
            states[cid] = replace(cs, pressed=True)
            changed = True
    return ReplayState(states, state.cursor, state.focused_control) if changed else state


def state_at(mockup: Mockup, sequence: EventSequence, t_ms: int,
             config: ReplayConfig = ReplayConfig()) -> ReplayState:
    """Replay state at time t: prefix fold + cursor interpolation + press flash."""
    if t_ms < 0:
        raise ValueError("t_ms must be >= 0")
    folded = fold_prefix(mockup, sequence.events, t_ms)
    folded = _apply_press_flash(folded, t_ms, config)
    return replace(folded, cursor=interpolate_cursor(sequence.events, t_ms))


class SequencePlayer:
    """Incremental replay of one entry's sequence.

    Caches the fold position so monotone queries (video export, playhead
    scrubbing forward) fold each event exactly once; a query before the
    cached time restarts from the initial state.
    """

    def __init__(self, mockup: Mockup, sequence: EventSequence,
                 config: ReplayConfig = ReplayConfig()):
        self.mockup = mockup
        self.events = list(sequence.events)
        self.config = config
        self._state = initial_state(mockup)
        self._idx = 0  # events[:_idx] folded
        self._t = -1

    def state_at(self, t_ms: int) -> ReplayState:
        if t_ms < 0:
            raise ValueError("t_ms must be >= 0")
        if t_ms < self._t:
            self._state = initial_state(self.mockup)
            self._idx = 0
        while self._idx < len(self.events) and self.events[self._idx].t_ms <= t_ms:
            self._state = fold_event(self._state, self.events[self._idx], self.mockup)
            self._idx += 1
        self._t = t_ms
        folded = _apply_press_flash(self._state, t_ms, self.config)
        return replace(folded, cursor=interpolate_cursor(self.events, t_ms))


# ---------------------------------------------------------------------------
# Timeline


def entry_duration(entry: TimelineEntry, config: ReplayConfig = ReplayConfig()) -> int:
    last = entry.sequence.last_t_ms()
    return (last if last is not None else 0) + config.hold_ms


@dataclass(frozen=True)
class TimelineSpan:
    entry_id: str
    start_ms: int
    end_ms: int


@dataclass(frozen=True)
class ScenarioTimeline:
    spans: list[TimelineSpan] = field(default_factory=list)
    total_ms: int = 0

    def locate(self, t_ms: int) -> tuple[str, int]:
        """Map a global time to (entry_id, local_t). Spans are right-open;
        times at or past the end land in the last span (held final state)."""
        for span in self.spans:
            if span.start_ms <= t_ms < span.end_ms:
                return span.entry_id, t_ms - span.start_ms
        last = self.spans[-1]
        return last.entry_id, t_ms - last.start_ms


def scenario_timeline(scenario: Scenario, project: Project,
                      config: ReplayConfig = ReplayConfig()) -> ScenarioTimeline:
    """Concatenate entry durations in timeline order; spans are contiguous,
    non-overlapping and start at 0."""
    if not scenario.entries:
        raise ValueError(f"scenario {scenario.id!r} is empty")
    spans: list[TimelineSpan] = []
    t = 0
    for entry in scenario.entries:
        project.mockup(entry.mockup_id)  # raises on dangling ref
        d = entry_duration(entry, config)
        spans.append(TimelineSpan(entry.id, t, t + d))
        t += d
    return ScenarioTimeline(spans, t)


def frame_count(total_ms: int, fps: int) -> int:
    """N = max(1, ceil(total_ms * fps / 1000)): at least one frame always."""
    return max(1, -(-total_ms * fps // 1000))


def frame_time_ms(k: int, fps: int) -> int:
    """t_k = round(k * 1000 / fps), half away from zero, in exact integers."""
    return (2 * k * 1000 + fps) // (2 * fps)


@dataclass(frozen=True)
class FrameSample:
    frame_index: int
    entry_id: str
    local_t_ms: int


def sample_frames(scenario: Scenario, project: Project,
                  config: ReplayConfig = ReplayConfig()) -> Iterator[FrameSample]:
    timeline = scenario_timeline(scenario, project, config)
    n = frame_count(timeline.total_ms, config.fps)
    for k in range(n):
        entry_id, local_t = timeline.locate(frame_time_ms(k, config.fps))
        yield FrameSample(k, entry_id, local_t)
