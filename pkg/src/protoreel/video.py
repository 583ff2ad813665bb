"""Video export: uncompressed y4m streams and numbered PNG frame sequences.

The y4m layout is fixed so exports are byte-deterministic:
header ``YUV4MPEG2 W<w> H<h> F<fps>:1 Ip A1:1 C444`` + LF, then per frame
``FRAME`` + LF followed by full-resolution Y, Cb and Cr planes (C444).
RGB converts with full-range BT.601 and round-half-up integer arithmetic.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Optional

import numpy as np

from . import replay
from .model import Project, Scenario
from .raster import Frame, canvas_size, render_frame
from .replay import ReplayConfig, SequencePlayer

EXPORT_FORMATS = ("y4m_stream", "png_sequence")


class ExportError(Exception):
    pass


@dataclass(frozen=True)
class ExportConfig:
    format: str = "y4m_stream"
    output: Path = Path("out.y4m")

    def __post_init__(self):
        if self.format not in EXPORT_FORMATS:
            raise ValueError(f"unknown export format {self.format!r}")


@dataclass(frozen=True)
class ExportReport:
    frames: int
    duration_ms: int
    bytes_written: int
    output: str


def rgb_to_ycbcr(rgb: np.ndarray) -> np.ndarray:
    """Full-range BT.601, rounded half up, clamped to 0..255.

    Y  = 0.299 R + 0.587 G + 0.114 B
    Cb = 128 - 0.168736 R - 0.331264 G + 0.5 B
    Cr = 128 + 0.5 R - 0.418688 G - 0.081312 B
    """
    r = rgb[..., 0].astype(np.float64)
    g = rgb[..., 1].astype(np.float64)
    b = rgb[..., 2].astype(np.float64)
    y = 0.299 * r + 0.587 * g + 0.114 * b
    cb = 128.0 - 0.168736 * r - 0.331264 * g + 0.5 * b
    cr = 128.0 + 0.5 * r - 0.418688 * g - 0.081312 * b
    planes = np.stack([y, cb, cr])
    return np.clip(np.floor(planes + 0.5), 0, 255).astype(np.uint8)


def y4m_header(width: int, height: int, fps: int) -> bytes:
    return f"YUV4MPEG2 W{width} H{height} F{fps}:1 Ip A1:1 C444\n".encode("ascii")


def y4m_file_size(width: int, height: int, fps: int, n_frames: int) -> int:
    return len(y4m_header(width, height, fps)) + n_frames * (6 + 3 * width * height)


def write_y4m(frames: Iterable[Frame], fps: int, path: Path) -> int:
    """Write frames sequentially; returns bytes written. All frames must
    share dimensions; a partial file is removed on failure."""
    path = Path(path)
    written = 0
    dims: Optional[tuple[int, int]] = None
    try:
        with open(path, "wb") as fh:
            for frame in frames:
                if dims is None:
                    dims = (frame.width, frame.height)
                    written += fh.write(y4m_header(frame.width, frame.height, fps))
                elif (frame.width, frame.height) != dims:
                    raise ExportError(
                        f"frame dimensions {frame.width}x{frame.height} != {dims[0]}x{dims[1]}")
                written += fh.write(b"FRAME\n")
                written += fh.write(rgb_to_ycbcr(frame.pixels).tobytes())
            if dims is None:
                raise ExportError("no frames to write")
    except Exception:
        path.unlink(missing_ok=True)
        raise
    return written


def encode_png(frame: Frame) -> bytes:
    from PIL import Image

    buf = io.BytesIO()
    Image.fromarray(frame.pixels, "RGB").save(buf, format="PNG")
    return buf.getvalue()


def write_png_sequence(frames: Iterable[Frame], out_dir: Path) -> int:
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    count = 0
    for frame in frames:
        (out_dir / f"frame_{count:06d}.png").write_bytes(encode_png(frame))
        count += 1
    return count


def load_mockup_images(project: Project, root: Path) -> dict[str, np.ndarray]:
    from PIL import Image

    images: dict[str, np.ndarray] = {}
    for m in project.mockups:
        with Image.open(Path(root) / m.image_ref) as im:
            images[m.id] = np.asarray(im.convert("RGB"))
    return images


def render_scenario_frames(project: Project, scenario: Scenario,
                           config: ReplayConfig,
                           images: Optional[dict[str, np.ndarray]] = None) -> Iterator[Frame]:
    """Drive sample_frames -> state_at -> render_frame for a whole scenario."""
    mockups = [project.mockup(e.mockup_id) for e in scenario.entries]
    w, h = canvas_size(mockups)
    players = {
        e.id: SequencePlayer(project.mockup(e.mockup_id), e.sequence, config)
        for e in scenario.entries
    }
    entry_mockup = {e.id: project.mockup(e.mockup_id) for e in scenario.entries}
    for sample in replay.sample_frames(scenario, project, config):
        mockup = entry_mockup[sample.entry_id]
        state = players[sample.entry_id].state_at(sample.local_t_ms)
        image = images.get(mockup.id) if images else None
        yield render_frame(mockup, state, w, h, image)


def export_scenario_video(project: Project, scenario_id: str, root: Path,
                          replay_config: ReplayConfig,
                          export_config: ExportConfig) -> ExportReport:
    scenario = project.scenario(scenario_id)
    if not scenario.entries:
        raise ExportError(f"scenario {scenario_id!r} is empty")
    timeline = replay.scenario_timeline(scenario, project, replay_config)
    n = replay.frame_count(timeline.total_ms, replay_config.fps)
    images = load_mockup_images(project, root)
    frames = render_scenario_frames(project, scenario, replay_config, images)
    out = Path(export_config.output)
    if export_config.format == "y4m_stream":
        nbytes = write_y4m(frames, replay_config.fps, out)
    else:
        count = write_png_sequence(frames, out)
        nbytes = sum(f.stat().st_size for f in out.glob("frame_*.png"))
        assert count == n
    return ExportReport(frames=n, duration_ms=timeline.total_ms,
                        bytes_written=nbytes, output=str(out))
