"""Software rasterizer: compose a replay state into an RGB24 frame.

Draw order is fixed — white canvas, mockup bitmap at top-left, control
overlays in z-order (declaration order), cursor sprite last — so identical
inputs always produce byte-identical buffers.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .font8x8 import GLYPH_HEIGHT, GLYPH_WIDTH, GLYPHS
from .model import BBox, ButtonState, CheckboxState, Mockup, TextInputState
from .replay import ReplayState

BLACK = (0, 0, 0)
WHITE = (255, 255, 255)

# 8x12 arrow sprite, tip at top-left; '#' = black, 'o' = white outline fill.
_CURSOR_ROWS = (
    "#.......",
    "##......",
    "#o#.....",
    "#oo#....",
    "#ooo#...",
    "#oooo#..",
    "#ooooo#.",
    "#oooooo#",
    "#oo##...",
    "#o#.#...",
    "##..#...",
    "#....#..",
)
CURSOR_WIDTH = 8
CURSOR_HEIGHT = 12


@dataclass
class Frame:
    """A row-major RGB24 image; ``pixels`` has shape (height, width, 3)."""

    width: int
    height: int
    pixels: np.ndarray

    @classmethod
    def blank(cls, width: int, height: int, color=WHITE) -> "Frame":
        buf = np.empty((height, width, 3), dtype=np.uint8)
        buf[:, :] = color
        return cls(width, height, buf)

    def tobytes(self) -> bytes:
        return self.pixels.tobytes()


class RasterError(ValueError):
    pass


def _clip_span(off: int, size: int, limit: int) -> tuple[int, int, int]:
    """Clip [off, off+size) to [0, limit); returns (dst_start, src_start, length)."""
    start = max(off, 0)
    end = min(off + size, limit)
    if end <= start:
        return 0, 0, 0
    return start, start - off, end - start


def fill_rect(frame: Frame, bbox: BBox, color) -> None:
    y0, _, h = _clip_span(bbox.y, bbox.h, frame.height)
    x0, _, w = _clip_span(bbox.x, bbox.w, frame.width)
    if w and h:
        frame.pixels[y0:y0 + h, x0:x0 + w] = color


def stroke_rect(frame: Frame, bbox: BBox, color, thickness: int = 1) -> None:
    t = min(thickness, bbox.w // 2 + 1, bbox.h // 2 + 1)
    fill_rect(frame, BBox(bbox.x, bbox.y, bbox.w, t), color)
    fill_rect(frame, BBox(bbox.x, bbox.y + bbox.h - t, bbox.w, t), color)
    fill_rect(frame, BBox(bbox.x, bbox.y, t, bbox.h), color)
    fill_rect(frame, BBox(bbox.x + bbox.w - t, bbox.y, t, bbox.h), color)


def blit(frame: Frame, image: np.ndarray, x: int, y: int) -> None:
    ih, iw = image.shape[:2]
    y0, sy, h = _clip_span(y, ih, frame.height)
    x0, sx, w = _clip_span(x, iw, frame.width)
    if w and h:
        frame.pixels[y0:y0 + h, x0:x0 + w] = image[sy:sy + h, sx:sx + w]


def _draw_glyph(frame: Frame, code: int, x: int, y: int, color,
                clip: BBox) -> None:
    rows = GLYPHS.get(code, GLYPHS[0x3F])
    cx0 = max(clip.x, 0)
    cy0 = max(clip.y, 0)
    cx1 = min(clip.x + clip.w, frame.width)
    cy1 = min(clip.y + clip.h, frame.height)
    for ry, bits in enumerate(rows):
        py = y + ry
        if not cy0 <= py < cy1:
            continue
        for rx in range(GLYPH_WIDTH):
            if bits & (0x80 >> rx):
                px = x + rx
                if cx0 <= px < cx1:
                    frame.pixels[py, px] = color


def draw_text(frame: Frame, bbox: BBox, text: str, color=BLACK) -> None:
    """Fixed 8 px advance, vertically centered in bbox, clipped at bbox.
    Non-ASCII codepoints fall back to the '?' glyph."""
    if not text:
        return
    y = bbox.y + (bbox.h - GLYPH_HEIGHT) // 2
    for i, ch in enumerate(text):
        x = bbox.x + i * GLYPH_WIDTH
        if x >= bbox.x + bbox.w:
            break
        code = ord(ch)
        if not 0x20 <= code <= 0x7E:
            code = 0x3F
        _draw_glyph(frame, code, x, y, color, bbox)


def text_width(text: str) -> int:
    return len(text) * GLYPH_WIDTH


def draw_cursor(frame: Frame, x: int, y: int) -> None:
    """Composite the arrow sprite with its tip at (x, y), clipped at edges."""
    for ry, row in enumerate(_CURSOR_ROWS):
        py = y + ry
        if not 0 <= py < frame.height:
            continue
        for rx, cell in enumerate(row):
            if cell == ".":
                continue
            px = x + rx
            if 0 <= px < frame.width:
                frame.pixels[py, px] = BLACK if cell == "#" else WHITE


def _draw_button(frame: Frame, bbox: BBox, state: ButtonState, label: str) -> None:
    if state.pressed:
        fill_rect(frame, bbox, BLACK)
        stroke_rect(frame, bbox, BLACK, 2)
        draw_text(frame, bbox, label, color=WHITE)
    else:
        fill_rect(frame, bbox, WHITE)
        stroke_rect(frame, bbox, BLACK, 2)
        draw_text(frame, bbox, label, color=BLACK)


def _draw_text_input(frame: Frame, bbox: BBox, state: TextInputState) -> None:
    fill_rect(frame, bbox, WHITE)
    stroke_rect(frame, bbox, BLACK, 1)
    inner = BBox(bbox.x + 2, bbox.y, max(bbox.w - 4, 1), bbox.h)
    draw_text(frame, inner, state.text)
    if state.focused:
        caret_x = min(inner.x + text_width(state.text), bbox.x + bbox.w - 2)
        caret_y = bbox.y + (bbox.h - GLYPH_HEIGHT) // 2
        fill_rect(frame, BBox(caret_x, caret_y, 1, GLYPH_HEIGHT), BLACK)


def _draw_checkbox(frame: Frame, bbox: BBox, state: CheckboxState, label: str) -> None:
    side = min(bbox.w, bbox.h)
    box = BBox(bbox.x, bbox.y + (bbox.h - side) // 2, side, side)
    fill_rect(frame, box, WHITE)
    stroke_rect(frame, box, BLACK, 1)
    if state.checked:
        # X mark, inset 2 px
        for i in range(max(side - 4, 0)):
            x0 = box.x + 2 + i
            y0 = box.y + 2 + i
            y1 = box.y + side - 3 - i
            if x0 < box.x + side - 2:
                frame.pixels[y0, x0] = BLACK
                frame.pixels[y1, x0] = BLACK
    if label:
        draw_text(frame, BBox(box.x + side + 4, bbox.y,
                              max(bbox.w - side - 4, 1), bbox.h), label)


def render_frame(mockup: Mockup, state: ReplayState, canvas_w: int, canvas_h: int,
                 mockup_image: np.ndarray | None = None) -> Frame:
    """Compose one frame. ``mockup_image`` is the decoded mockup bitmap,
    shape (height_px, width_px, 3); omit it to render on plain white."""
    if canvas_w < mockup.width_px or canvas_h < mockup.height_px:
        raise RasterError(
            f"canvas {canvas_w}x{canvas_h} smaller than mockup "
            f"{mockup.width_px}x{mockup.height_px}")
    frame = Frame.blank(canvas_w, canvas_h)
    if mockup_image is not None:
        if mockup_image.shape[:2] != (mockup.height_px, mockup.width_px):
            raise RasterError("mockup image does not match declared dimensions")
        blit(frame, mockup_image, 0, 0)
    for control in mockup.controls:
        cs = state.control_states[control.id]
        if control.kind == "button":
            _draw_button(frame, control.bbox, cs, control.label)
        elif control.kind == "text_input":
            _draw_text_input(frame, control.bbox, cs)
        elif control.kind == "checkbox":
            _draw_checkbox(frame, control.bbox, cs, control.label)
        # hotspots are invisible
    if state.cursor is not None:
        draw_cursor(frame, state.cursor[0], state.cursor[1])
    return frame


def canvas_size(mockups: list[Mockup]) -> tuple[int, int]:
    """Constant video dimensions: max width x max height over the scenario."""
    return (max(m.width_px for m in mockups), max(m.height_px for m in mockups))
