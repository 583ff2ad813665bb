import random

import pytest
from hypothesis import given, settings, strategies as st

from protoreel import model
from protoreel.model import (
    BBox,
    ButtonState,
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
from protoreel.replay import (
    ReplayConfig,
    SequencePlayer,
    entry_duration,
    fold_event,
    fold_prefix,
    frame_count,
    frame_time_ms,
    hit_test,
    initial_state,
    sample_frames,
    scenario_timeline,
    state_at,
)

from conftest import random_project, random_sequence
from replay_oracle import as_oracle_shape, oracle_state


# ---------------------------------------------------------------------------
# fold_event


def ui_mockup():
    m = Mockup("m01", "form", "assets/form.png", 200, 200)
    model.add_control(m, "button", BBox(10, 10, 60, 20), label="ok")
    model.add_control(m, "text_input", BBox(10, 40, 100, 20))
    model.add_control(m, "checkbox", BBox(10, 70, 16, 16))
    model.add_control(m, "hotspot", BBox(120, 10, 60, 60))
    return m


def test_checkbox_toggles_on_pointer_down():
    m = ui_mockup()
    s = initial_state(m)
    s = fold_event(s, InteractionEvent(0, PointerDown(12, 72)), m)
    assert s.control_states["c03"] == CheckboxState(True)
    s = fold_event(s, InteractionEvent(10, PointerDown(12, 72)), m)
    assert s.control_states["c03"] == CheckboxState(False)


def test_key_without_focus_is_noop():
    m = ui_mockup()
    s = initial_state(m)
    assert fold_event(s, InteractionEvent(0, KeyChar("a")), m) == s


def test_typing_with_backspace():
    m = ui_mockup()
    s = initial_state(m)
    for ev in [InteractionEvent(0, PointerDown(15, 45)),
               InteractionEvent(10, KeyChar("h")),
               InteractionEvent(20, KeyChar("i")),
               InteractionEvent(30, KeyBackspace())]:
        s = fold_event(s, ev, m)
    assert s.control_states["c02"] == TextInputState("h", focused=True)
    assert s.focused_control == "c02"


def test_button_press_and_release():
    m = ui_mockup()
    s = initial_state(m)
    s = fold_event(s, InteractionEvent(100, PointerDown(20, 15)), m)
    assert s.control_states["c01"] == ButtonState(True, 100)
    s = fold_event(s, InteractionEvent(150, PointerUp(20, 15)), m)
    assert s.control_states["c01"] == ButtonState(False, 100)


def test_hotspot_clears_focus():
    m = ui_mockup()
    s = initial_state(m)
    s = fold_event(s, InteractionEvent(0, PointerDown(15, 45)), m)
    assert s.focused_control == "c02"
    s = fold_event(s, InteractionEvent(10, PointerDown(130, 20)), m)
    assert s.focused_control is None


# ---------------------------------------------------------------------------
# hit_test


def test_hit_test_single():
    m = ui_mockup()
    assert hit_test(m, 15, 15) == "c01"
    assert hit_test(m, 199, 199) is None


def test_hit_test_zorder_overlap():
    m = Mockup("m01", "x", "a.png", 100, 100)
    model.add_control(m, "button", BBox(0, 0, 50, 50))
    model.add_control(m, "button", BBox(25, 25, 50, 50))
    assert hit_test(m, 30, 30) == "c02"  # later-declared wins


def test_hit_test_half_open_edges():
    m = Mockup("m01", "x", "a.png", 100, 100)
    model.add_control(m, "button", BBox(10, 10, 20, 20))
    assert hit_test(m, 10, 10) == "c01"
    assert hit_test(m, 30, 15) is None  # x + w excluded
    assert hit_test(m, 15, 30) is None  # y + h excluded


# ---------------------------------------------------------------------------
# state_at


def test_state_before_first_event():
    m = ui_mockup()
    seq = EventSequence([InteractionEvent(100, PointerDown(12, 72))])
    s = state_at(m, seq, 50)
    assert s == initial_state(m)
    assert s.cursor is None


def test_state_at_last_event_equals_full_fold():
    m = ui_mockup()
    seq = EventSequence([
        InteractionEvent(0, PointerMove(5, 5)),
        InteractionEvent(100, PointerDown(12, 72)),
    ])
    s = state_at(m, seq, 100)
    full = fold_prefix(m, seq.events, 10 ** 9)
    assert s.control_states == full.control_states


def test_press_flash_extends_rendered_press():
    m = ui_mockup()
    seq = EventSequence([
        InteractionEvent(100, PointerDown(20, 15)),
        InteractionEvent(110, PointerUp(20, 15)),
    ])
    config = ReplayConfig(press_flash_ms=100)
    assert state_at(m, seq, 150, config).control_states["c01"].pressed
    assert not state_at(m, seq, 200, config).control_states["c01"].pressed


def test_cursor_interpolation_linear():
    m = ui_mockup()
    seq = EventSequence([
        InteractionEvent(0, PointerMove(0, 0)),
        InteractionEvent(100, PointerMove(100, 50)),
    ])
    assert state_at(m, seq, 50).cursor == (50, 25)
    assert state_at(m, seq, 500).cursor == (100, 50)  # frozen after last


@given(st.integers(0, 2 ** 32 - 1))
@settings(max_examples=60, deadline=None)
def test_incremental_player_matches_oracle(seed):
    rng = random.Random(seed)
    m = ui_mockup()
    seq = random_sequence(rng, 200, 200)
    config = ReplayConfig()
    player = SequencePlayer(m, seq, config)
    horizon = (seq.last_t_ms() or 0) + 1000
    for _ in range(25):
        t = rng.randrange(horizon + 1)
        got = as_oracle_shape(player.state_at(t))
        want = oracle_state(m, seq.events, t, config)
        assert got == want, f"t={t}"


@given(st.integers(0, 2 ** 32 - 1))
@settings(max_examples=40, deadline=None)
def test_prefix_fold_law(seed):
    # fold state at t1, then fold events in (t1, t2]: equals prefix fold at t2
    rng = random.Random(seed)
    m = ui_mockup()
    events = random_sequence(rng, 200, 200).events
    horizon = (events[-1].t_ms if events else 0) + 100
    t1 = rng.randrange(horizon + 1)
    t2 = rng.randrange(t1, horizon + 1)
    s = fold_prefix(m, events, t1)
    for ev in events:
        if t1 < ev.t_ms <= t2:
            s = fold_event(s, ev, m)
    direct = fold_prefix(m, events, t2)
    assert s.control_states == direct.control_states
    assert s.focused_control == direct.focused_control


# ---------------------------------------------------------------------------
# durations, timeline, frames


def entry_with_last_event(t_last):
    e = TimelineEntry("e01", "m01")
    if t_last is not None:
        e.sequence.events.append(InteractionEvent(t_last, PointerMove(0, 0)))
    return e


def test_entry_duration():
    config = ReplayConfig(hold_ms=500)
    assert entry_duration(entry_with_last_event(1000), config) == 1500
    assert entry_duration(entry_with_last_event(None), config) == 500
    assert entry_duration(entry_with_last_event(0), ReplayConfig(hold_ms=0)) == 0


def scenario_with_durations(durations, hold_ms=500):
    p = Project()
    model.add_mockup(p, "page", "assets/x.png", 100, 100)
    s = Scenario("s01", "s")
    for i, d in enumerate(durations):
        entry = TimelineEntry(f"e{i + 1:02d}", "m01")
        if d > hold_ms:
            entry.sequence.events.append(InteractionEvent(d - hold_ms, PointerMove(0, 0)))
        assert entry_duration(entry, ReplayConfig(hold_ms=hold_ms)) == d
        s.entries.append(entry)
    p.scenarios.append(s)
    return p, s


def test_scenario_timeline_spans():
    p, s = scenario_with_durations([1500, 500, 2500])
    tl = scenario_timeline(s, p, ReplayConfig(hold_ms=500))
    assert [(sp.start_ms, sp.end_ms) for sp in tl.spans] == [(0, 1500), (1500, 2000), (2000, 4500)]
    assert tl.total_ms == 4500


def test_scenario_timeline_single_empty_entry():
    p, s = scenario_with_durations([500])
    assert scenario_timeline(s, p, ReplayConfig(hold_ms=500)).total_ms == 500


def test_scenario_timeline_empty_scenario_rejected():
    p = Project()
    s = Scenario("s01", "s")
    p.scenarios.append(s)
    with pytest.raises(ValueError):
        scenario_timeline(s, p)


@given(st.integers(0, 2 ** 32 - 1))
@settings(max_examples=60, deadline=None)
def test_total_invariant_under_permutation(seed):
    rng = random.Random(seed)
    p = random_project(rng)
    scenarios = [s for s in p.scenarios if s.entries]
    if not scenarios:
        return
    s = rng.choice(scenarios)
    total = scenario_timeline(s, p).total_ms
    rng.shuffle(s.entries)
    assert scenario_timeline(s, p).total_ms == total


def test_frame_count_law():
    assert frame_count(1500, 30) == 45
    assert frame_count(0, 30) == 1
    assert frame_count(500, 30) == 15
    assert frame_count(1, 1) == 1
    assert frame_count(1001, 1) == 2


def test_sample_frames_45_of_two_entry_scenario():
    p, s = scenario_with_durations([1500, 500])
    samples = list(sample_frames(s, p, ReplayConfig(hold_ms=500, fps=30)))
    assert len(samples) == 60  # total 2000 ms at 30 fps
    f45 = samples[45]
    assert frame_time_ms(45, 30) == 1500
    assert f45.entry_id == "e02" and f45.local_t_ms == 0  # right-open boundary


def test_sample_frames_cover_all_indices():
    p, s = scenario_with_durations([1500, 500, 2500])
    samples = list(sample_frames(s, p, ReplayConfig(hold_ms=500, fps=24)))
    assert [x.frame_index for x in samples] == list(range(len(samples)))
    assert len(samples) == frame_count(4500, 24)
    # local times non-decreasing within each entry
    by_entry = {}
    for x in samples:
        by_entry.setdefault(x.entry_id, []).append(x.local_t_ms)
    for ts in by_entry.values():
        assert ts == sorted(ts)


def test_sample_frames_total_zero_renders_one_frame():
    p, s = scenario_with_durations([0], hold_ms=0)
    samples = list(sample_frames(s, p, ReplayConfig(hold_ms=0, fps=30)))
    assert len(samples) == 1
    assert samples[0].local_t_ms == 0
