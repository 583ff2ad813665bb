"""Project file format (.mrp): positioned parsing, canonical serialization,
content-addressed image assets, mockup image export.

The document is a JSON object written in a canonical form (fixed key order,
two-space indent, ASCII escapes, LF endings, trailing newline) so that equal
projects always serialize to identical bytes. Parsing goes through a small
position-tracking JSON reader so every error can point at a byte offset,
line and column in the source.
"""

from __future__ import annotations

import hashlib
import json
import shutil
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Optional

from . import model
from .model import (
    BBox,
    ButtonState,
    CheckboxState,
    Control,
    EventSequence,
    HotspotState,
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

SUPPORTED_VERSIONS = (1,)

PARSE_REASONS = (
    "bad_encoding",
    "bad_syntax",
    "truncated",
    "trailing_data",
    "wrong_type",
    "missing_field",
    "unknown_field",
    "unsupported_version",
    "unknown_control_kind",
    "unknown_event_kind",
    "unknown_pointer_source",
    "bad_value",
    "invariant_violation",
    "missing_asset",
    "dimension_mismatch",
)


class ParseError(Exception):
    """A positioned rejection of a project document."""

    def __init__(self, offset: int, line: int, column: int, reason: str, message: str):
        assert reason in PARSE_REASONS, reason
        super().__init__(f"{line}:{column}: {reason}: {message}")
        self.offset = offset
        self.line = line
        self.column = column
        self.reason = reason
        self.message = message


@dataclass(frozen=True)
class Pos:
    offset: int
    line: int
    column: int


@dataclass(frozen=True)
class Node:
    """A parsed JSON value annotated with its source position."""

    value: Any  # dict[str, Node] | list[Node] | str | int | float | bool | None
    pos: Pos

    def err(self, reason: str, message: str) -> ParseError:
        return ParseError(self.pos.offset, self.pos.line, self.pos.column, reason, message)


# ---------------------------------------------------------------------------
# Position-tracking JSON reader

_WS = " \t\n\r"


class _Reader:
    def __init__(self, text: str):
        self.text = text
        self.i = 0
        self.line = 1
        self.col = 1

    def pos(self) -> Pos:
        return Pos(self.i, self.line, self.col)

    def error(self, reason: str, message: str) -> ParseError:
        return ParseError(self.i, self.line, self.col, reason, message)

    def eof(self) -> bool:
        return self.i >= len(self.text)

    def peek(self) -> str:
        return self.text[self.i] if self.i < len(self.text) else ""

    def advance(self, n: int = 1) -> str:
        s = self.text[self.i:self.i + n]
        for ch in s:
            if ch == "\n":
                self.line += 1
                self.col = 1
            else:
                self.col += 1
        self.i += n
        return s

    def skip_ws(self) -> None:
        while not self.eof() and self.peek() in _WS:
            self.advance()

    def expect(self, ch: str) -> None:
        if self.eof():
            raise self.error("truncated", f"expected {ch!r}, got end of document")
        if self.peek() != ch:
            raise self.error("bad_syntax", f"expected {ch!r}, got {self.peek()!r}")
        self.advance()

    def parse_document(self) -> Node:
        self.skip_ws()
        if self.eof():
            raise self.error("truncated", "empty document")
        node = self.parse_value()
        self.skip_ws()
        if not self.eof():
            raise self.error("trailing_data", "content after top-level value")
        return node

    def parse_value(self) -> Node:
        self.skip_ws()
        if self.eof():
            raise self.error("truncated", "expected a value, got end of document")
        ch = self.peek()
        if ch == "{":
            return self.parse_object()
        if ch == "[":
            return self.parse_array()
        if ch == '"':
            return self.parse_string()
        if ch == "-" or ch.isdigit():
            return self.parse_number()
        for word, val in (("true", True), ("false", False), ("null", None)):
            if self.text.startswith(word, self.i):
                pos = self.pos()
                self.advance(len(word))
                return Node(val, pos)
        raise self.error("bad_syntax", f"unexpected character {ch!r}")

    def parse_object(self) -> Node:
        pos = self.pos()
        self.expect("{")
        items: dict[str, Node] = {}
        self.skip_ws()
        if self.peek() == "}":
            self.advance()
            return Node(items, pos)
        while True:
            self.skip_ws()
            if self.eof():
                raise self.error("truncated", "unterminated object")
            key_node = self.parse_string()
            key = key_node.value
            if key in items:
                raise key_node.err("bad_syntax", f"duplicate key {key!r}")
            self.skip_ws()
            self.expect(":")
            items[key] = self.parse_value()
            self.skip_ws()
            if self.eof():
                raise self.error("truncated", "unterminated object")
            ch = self.advance()
            if ch == "}":
                return Node(items, pos)
            if ch != ",":
                self.i -= 1
                self.col = max(1, self.col - 1)
                raise self.error("bad_syntax", f"expected ',' or '}}', got {ch!r}")

    def parse_array(self) -> Node:
        pos = self.pos()
        self.expect("[")
        items: list[Node] = []
        self.skip_ws()
        if self.peek() == "]":
            self.advance()
            return Node(items, pos)
        while True:
            items.append(self.parse_value())
            self.skip_ws()
            if self.eof():
                raise self.error("truncated", "unterminated array")
            ch = self.advance()
            if ch == "]":
                return Node(items, pos)
            if ch != ",":
                self.i -= 1
                self.col = max(1, self.col - 1)
                raise self.error("bad_syntax", f"expected ',' or ']', got {ch!r}")

    def parse_string(self) -> Node:
        pos = self.pos()
        if self.peek() != '"':
            raise self.error("bad_syntax", f"expected string, got {self.peek()!r}")
        self.advance()
        out: list[str] = []
        while True:
            if self.eof():
                raise self.error("truncated", "unterminated string")
            ch = self.advance()
            if ch == '"':
                return Node("".join(out), pos)
            if ch == "\\":
                if self.eof():
                    raise self.error("truncated", "unterminated escape")
                esc = self.advance()
                simple = {'"': '"', "\\": "\\", "/": "/", "b": "\b",
                          "f": "\f", "n": "\n", "r": "\r", "t": "\t"}
                if esc in simple:
                    out.append(simple[esc])
                elif esc == "u":
                    hexs = self.advance(4)
                    if len(hexs) < 4 or any(c not in "0123456789abcdefABCDEF" for c in hexs):
                        raise self.error("bad_syntax", f"bad unicode escape \\u{hexs}")
                    code = int(hexs, 16)
                    # Surrogate pair
                    if 0xD800 <= code <= 0xDBFF and self.text.startswith("\\u", self.i):
                        self.advance(2)
                        lo_hex = self.advance(4)
                        if len(lo_hex) < 4 or any(c not in "0123456789abcdefABCDEF" for c in lo_hex):
                            raise self.error("bad_syntax", "bad low surrogate escape")
                        lo = int(lo_hex, 16)
                        if 0xDC00 <= lo <= 0xDFFF:
                            code = 0x10000 + ((code - 0xD800) << 10) + (lo - 0xDC00)
                            out.append(chr(code))
                            continue
                        raise self.error("bad_syntax", "unpaired surrogate")
                    if 0xDC00 <= code <= 0xDFFF:
                        raise self.error("bad_syntax", "unpaired surrogate")
                    out.append(chr(code))
                else:
                    raise self.error("bad_syntax", f"unknown escape \\{esc}")
            elif ord(ch) < 0x20:
                raise self.error("bad_syntax", f"raw control character {ch!r} in string")
            else:
                out.append(ch)

    def parse_number(self) -> Node:
        pos = self.pos()
        start = self.i
        if self.peek() == "-":
            self.advance()
        if self.eof() or not self.peek().isdigit():
            raise self.error("bad_syntax", "malformed number")
        while not self.eof() and self.peek().isdigit():
            self.advance()
        is_float = False
        if not self.eof() and self.peek() == ".":
            is_float = True
            self.advance()
            if self.eof() or not self.peek().isdigit():
                raise self.error("bad_syntax", "malformed number")
            while not self.eof() and self.peek().isdigit():
                self.advance()
        if not self.eof() and self.peek() in "eE":
            is_float = True
            self.advance()
            if not self.eof() and self.peek() in "+-":
                self.advance()
            if self.eof() or not self.peek().isdigit():
                raise self.error("bad_syntax", "malformed number")
            while not self.eof() and self.peek().isdigit():
                self.advance()
        lit = self.text[start:self.i]
        return Node(float(lit) if is_float else int(lit), pos)


def parse_positioned_json(data: bytes) -> Node:
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as e:
        line = data[:e.start].count(b"\n") + 1
        col = e.start - (data[:e.start].rfind(b"\n") + 1) + 1
        raise ParseError(e.start, line, col, "bad_encoding", str(e)) from None
    return _Reader(text).parse_document()


# ---------------------------------------------------------------------------
# Node -> Project decoding


def _as_obj(node: Node, what: str) -> dict[str, Node]:
    if not isinstance(node.value, dict):
        raise node.err("wrong_type", f"{what} must be an object")
    return node.value


def _as_list(node: Node, what: str) -> list[Node]:
    if not isinstance(node.value, list):
        raise node.err("wrong_type", f"{what} must be an array")
    return node.value


def _field(obj: dict[str, Node], parent: Node, name: str) -> Node:
    if name not in obj:
        raise parent.err("missing_field", f"missing field {name!r}")
    return obj[name]


def _str_field(obj: dict[str, Node], parent: Node, name: str) -> str:
    n = _field(obj, parent, name)
    if not isinstance(n.value, str):
        raise n.err("wrong_type", f"{name} must be a string")
    return n.value


def _int_field(obj: dict[str, Node], parent: Node, name: str, minimum: Optional[int] = None) -> int:
    n = _field(obj, parent, name)
    if not isinstance(n.value, int) or isinstance(n.value, bool):
        raise n.err("wrong_type", f"{name} must be an integer")
    if minimum is not None and n.value < minimum:
        raise n.err("bad_value", f"{name} must be >= {minimum}")
    return n.value


def _decode_event(node: Node) -> InteractionEvent:
    obj = _as_obj(node, "event")
    t = _int_field(obj, node, "t", minimum=0)
    kind = _str_field(obj, node, "kind")
    if kind in ("pointer_move", "pointer_down", "pointer_up"):
        x = _int_field(obj, node, "x")
        y = _int_field(obj, node, "y")
        if kind == "pointer_move":
            payload: model.EventPayload = PointerMove(x, y)
        else:
            source = obj["source"].value if "source" in obj else "mouse"
            if source not in model.POINTER_SOURCES:
                raise _field(obj, node, "source").err(
                    "unknown_pointer_source", f"{source!r}")
            cls = PointerDown if kind == "pointer_down" else PointerUp
            payload = cls(x, y, source)
    elif kind == "key_char":
        ch = _str_field(obj, node, "char")
        if len(ch) != 1 or not ch.isprintable():
            raise _field(obj, node, "char").err(
                "bad_value", f"char must be one printable character, got {ch!r}")
        payload = KeyChar(ch)
    elif kind == "key_backspace":
        payload = KeyBackspace()
    else:
        raise _field(obj, node, "kind").err("unknown_event_kind", f"{kind!r}")
    return InteractionEvent(t, payload)


decode_event = _decode_event


def _decode_control(node: Node) -> Control:
    obj = _as_obj(node, "control")
    kind = _str_field(obj, node, "kind")
    if kind not in model.CONTROL_KINDS:
        raise _field(obj, node, "kind").err("unknown_control_kind", f"{kind!r}")
    bbox_node = _field(obj, node, "bbox")
    coords = _as_list(bbox_node, "bbox")
    if len(coords) != 4 or any(
            not isinstance(c.value, int) or isinstance(c.value, bool) for c in coords):
        raise bbox_node.err("bad_value", "bbox must be [x, y, w, h] integers")
    bbox = BBox(*(c.value for c in coords))
    initial_node = obj.get("initial")
    iv = initial_node.value if initial_node is not None else None
    if kind == "checkbox":
        if not isinstance(iv, bool) and iv is not None:
            raise initial_node.err("bad_value", "checkbox initial must be a boolean")
        initial: model.ControlState = CheckboxState(bool(iv))
    elif kind == "text_input":
        if iv is not None and not isinstance(iv, str):
            raise initial_node.err("bad_value", "text_input initial must be a string")
        initial = TextInputState(iv or "")
    else:
        if iv is not None:
            raise initial_node.err("bad_value", f"{kind} takes no initial state")
        initial = ButtonState() if kind == "button" else HotspotState()
    label = ""
    if "label" in obj:
        if not isinstance(obj["label"].value, str):
            raise obj["label"].err("wrong_type", "label must be a string")
        label = obj["label"].value
    return Control(_str_field(obj, node, "id"), kind, bbox, initial, label)


def decode_project(root_node: Node) -> Project:
    obj = _as_obj(root_node, "project")
    version = _int_field(obj, root_node, "schema_version")
    if version not in SUPPORTED_VERSIONS:
        raise _field(obj, root_node, "schema_version").err(
            "unsupported_version", f"schema_version {version} not supported")
    asset_dir = _str_field(obj, root_node, "asset_dir")
    project = Project(format_version=version, asset_dir=asset_dir)

    for mnode in _as_list(_field(obj, root_node, "mockups"), "mockups"):
        mobj = _as_obj(mnode, "mockup")
        mockup = Mockup(
            id=_str_field(mobj, mnode, "id"),
            name=_str_field(mobj, mnode, "name"),
            image_ref=_str_field(mobj, mnode, "image_ref"),
            width_px=_int_field(mobj, mnode, "width_px", minimum=1),
            height_px=_int_field(mobj, mnode, "height_px", minimum=1),
        )
        for cnode in _as_list(_field(mobj, mnode, "controls"), "controls"):
            mockup.controls.append(_decode_control(cnode))
        project.mockups.append(mockup)

    for snode in _as_list(_field(obj, root_node, "scenarios"), "scenarios"):
        sobj = _as_obj(snode, "scenario")
        scenario = Scenario(_str_field(sobj, snode, "id"), _str_field(sobj, snode, "name"))
        for enode in _as_list(_field(sobj, snode, "entries"), "entries"):
            eobj = _as_obj(enode, "entry")
            entry = TimelineEntry(
                _str_field(eobj, enode, "id"),
                _str_field(eobj, enode, "mockup_id"),
                EventSequence(),
            )
            for evnode in _as_list(_field(eobj, enode, "events"), "events"):
                entry.sequence.events.append(_decode_event(evnode))
            scenario.entries.append(entry)
        project.scenarios.append(scenario)

    violations = model.validate_project(project)
    if violations:
        v = violations[0]
        raise root_node.err("invariant_violation", f"{v.path}: {v.reason}: {v.message}")
    return project


# ---------------------------------------------------------------------------
# Project -> canonical bytes


def _encode_event(ev: InteractionEvent) -> dict:
    p = ev.payload
    if isinstance(p, PointerMove):
        return {"t": ev.t_ms, "kind": "pointer_move", "x": p.x, "y": p.y}
    if isinstance(p, PointerDown):
        return {"t": ev.t_ms, "kind": "pointer_down", "x": p.x, "y": p.y, "source": p.source}
    if isinstance(p, PointerUp):
        return {"t": ev.t_ms, "kind": "pointer_up", "x": p.x, "y": p.y, "source": p.source}
    if isinstance(p, KeyChar):
        return {"t": ev.t_ms, "kind": "key_char", "char": p.char}
    return {"t": ev.t_ms, "kind": "key_backspace"}


def _encode_control(c: Control) -> dict:
    d: dict = {"id": c.id, "kind": c.kind, "bbox": [c.bbox.x, c.bbox.y, c.bbox.w, c.bbox.h]}
    if c.kind == "checkbox":
        d["initial"] = c.initial.checked
    elif c.kind == "text_input":
        if c.initial.text:
            d["initial"] = c.initial.text
    if c.label:
        d["label"] = c.label
    return d


def encode_project(project: Project) -> bytes:
    """Canonical form: fixed key order, 2-space indent, ASCII, LF, final newline."""
    doc = {
        "schema_version": project.format_version,
        "asset_dir": project.asset_dir,
        "mockups": [
            {
                "id": m.id,
                "name": m.name,
                "image_ref": m.image_ref,
                "width_px": m.width_px,
                "height_px": m.height_px,
                "controls": [_encode_control(c) for c in m.controls],
            }
            for m in project.mockups
        ],
        "scenarios": [
            {
                "id": s.id,
                "name": s.name,
                "entries": [
                    {
                        "id": e.id,
                        "mockup_id": e.mockup_id,
                        "events": [_encode_event(ev) for ev in e.sequence.events],
                    }
                    for e in s.entries
                ],
            }
            for s in project.scenarios
        ],
    }
    text = json.dumps(doc, indent=2, ensure_ascii=True, separators=(",", ": "))
    return text.encode("ascii") + b"\n"


# ---------------------------------------------------------------------------
# File I/O


class StoreError(Exception):
    """Non-positional store failure (validation refusal, bad asset)."""


def parse_project(data: bytes) -> Project:
    return decode_project(parse_positioned_json(data))


def load_project(path: Path) -> Project:
    """Read and fully check a project: document, invariants, assets."""
    path = Path(path)
    project = parse_project(path.read_bytes())
    violations = model.validate_project(project, root=path.parent)
    if violations:
        raise StoreError("; ".join(f"{v.path}: {v.reason}: {v.message}" for v in violations))
    return project


def save_project(project: Project, path: Path) -> int:
    """Write the canonical document atomically; returns bytes written."""
    violations = model.validate_project(project)
    if violations:
        raise StoreError("refusing to save invalid project: " + "; ".join(
            f"{v.path}: {v.reason}" for v in violations))
    path = Path(path)
    data = encode_project(project)
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_bytes(data)
    tmp.replace(path)
    return len(data)


# ---------------------------------------------------------------------------
# Assets


def import_mockup_image(project_root: Path, source_path: Path,
                        asset_dir: str = "assets") -> tuple[str, int, int]:
    """Copy an image into the content-addressed asset store.

    Returns (image_ref, width_px, height_px). Re-importing identical bytes
    yields the same ref and no duplicate file.
    """
    from PIL import Image

    source_path = Path(source_path)
    data = source_path.read_bytes()
    try:
        with Image.open(source_path) as im:
            im.load()
            width, height = im.size
            needs_flatten = im.mode not in ("RGB", "L")
            flattened = im.convert("RGBA") if needs_flatten else None
    except Exception as e:
        raise StoreError(f"cannot decode image {source_path}: {e}") from e

    if needs_flatten:
        # Alpha is flattened onto white at import; mockups are opaque rasters.
        from PIL import Image as _I

        bg = _I.new("RGB", (width, height), (255, 255, 255))
        bg.paste(flattened, mask=flattened.split()[-1])
        import io

        buf = io.BytesIO()
        bg.save(buf, format="PNG")
        data = buf.getvalue()

    digest = hashlib.sha256(data).hexdigest()[:16]
    ref = f"{asset_dir}/{digest}.png"
    dest = Path(project_root) / ref
    dest.parent.mkdir(parents=True, exist_ok=True)
    if not dest.exists():
        dest.write_bytes(data)
    return ref, width, height


def export_mockup_images(project: Project, root: Path, out_dir: Path) -> int:
    """Write one <mockup_id>.png per mockup; returns the count written."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    count = 0
    errors: list[str] = []
    for m in project.mockups:
        src = Path(root) / m.image_ref
        try:
            shutil.copyfile(src, out_dir / f"{m.id}.png")
            count += 1
        except OSError as e:
            errors.append(f"{m.id}: {e}")
    if errors:
        raise StoreError(f"wrote {count} images; failures: " + "; ".join(errors))
    return count
