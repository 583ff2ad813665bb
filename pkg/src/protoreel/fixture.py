"""Synthetic web-store evaluation project: 11 programmatically drawn
mockups, one 11-entry scenario and a 19-step textual scenario file with
per-step mockup references.

Mockup imagery is generated (labeled boxes and placeholder rows), so the
fixture is fully reproducible from code.
"""

from __future__ import annotations

import io
from pathlib import Path

from PIL import Image

from . import model, store
from .model import BBox, CheckboxState, InteractionEvent, KeyChar, PointerDown, \
    PointerMove, PointerUp, Project
from .raster import BLACK, Frame, draw_text, fill_rect, stroke_rect

PAGE_W = 320
PAGE_H = 240

GREY = (200, 200, 200)
DARK = (90, 90, 90)

STEPS_FILENAME = "steps.txt"
PROJECT_FILENAME = "webstore.mrp"


def _page(title: str, boxes: list[tuple[BBox, str]]) -> bytes:
    """Draw one synthetic mockup page and return PNG bytes."""
    frame = Frame.blank(PAGE_W, PAGE_H)
    fill_rect(frame, BBox(0, 0, PAGE_W, 24), DARK)
    draw_text(frame, BBox(8, 0, PAGE_W - 16, 24), "WEB STORE", color=(255, 255, 255))
    draw_text(frame, BBox(8, 28, PAGE_W - 16, 16), title)
    for bbox, label in boxes:
        stroke_rect(frame, bbox, GREY, 1)
        if label:
            draw_text(frame, BBox(bbox.x + 4, bbox.y, bbox.w - 8, bbox.h), label)
    stroke_rect(frame, BBox(0, 0, PAGE_W, PAGE_H), BLACK, 1)
    buf = io.BytesIO()
    Image.fromarray(frame.pixels, "RGB").save(buf, format="PNG")
    return buf.getvalue()


_PAGES: list[tuple[str, list[tuple[BBox, str]]]] = [
    ("Home", [(BBox(20, 60, 180, 24), ""), (BBox(210, 60, 90, 24), ""),
              (BBox(20, 100, 280, 110), "featured products")]),
    ("Products", [(BBox(20, 60, 280, 40), "Coffee mug  9.90"),
                  (BBox(20, 110, 280, 40), "Tea pot  24.50"),
                  (BBox(20, 160, 280, 40), "Espresso cup  6.00")]),
    ("Coffee mug", [(BBox(20, 60, 120, 120), "photo"),
                    (BBox(160, 60, 140, 60), "9.90 in stock"),
                    (BBox(160, 150, 140, 30), "")]),
    ("Cart", [(BBox(20, 60, 280, 40), "1x Coffee mug  9.90"),
              (BBox(20, 120, 280, 20), "Total  9.90"),
              (BBox(200, 170, 100, 30), "")]),
    ("Login", [(BBox(20, 70, 200, 24), ""), (BBox(20, 110, 200, 24), ""),
               (BBox(20, 150, 100, 30), "")]),
    ("Shipping", [(BBox(20, 70, 260, 24), ""), (BBox(20, 110, 16, 16), ""),
                  (BBox(200, 170, 100, 30), "")]),
    ("Payment", [(BBox(20, 70, 16, 16), ""), (BBox(20, 110, 200, 24), ""),
                 (BBox(200, 170, 100, 30), "")]),
    ("Review order", [(BBox(20, 60, 280, 90), "1x Coffee mug to Main St 1"),
                      (BBox(180, 170, 120, 30), "")]),
    ("Confirmation", [(BBox(20, 60, 280, 60), "Order 1042 received"),
                      (BBox(20, 150, 140, 30), "")]),
    ("Order status", [(BBox(20, 60, 280, 60), "Order 1042: processing"),
                      (BBox(20, 150, 280, 40), "back to shop")]),
    ("Goodbye", [(BBox(20, 80, 280, 60), "Thank you for your purchase"),
                 (BBox(110, 170, 100, 30), "")]),
]

STEPS: list[tuple[str, int]] = [
    ("Open the web store home page", 1),
    ("Type the product name into the search field", 1),
    ("Press the search button", 1),
    ("Browse the list of matching products", 2),
    ("Select the coffee mug product", 2),
    ("Review the product details", 3),
    ("Press the add-to-cart button", 3),
    ("Open the shopping cart", 4),
    ("Press the checkout button", 4),
    ("Enter the user name", 5),
    ("Enter the password", 5),
    ("Press the log-in button", 5),
    ("Enter the shipping address", 6),
    ("Tick that billing equals shipping and continue", 6),
    ("Choose payment on invoice and continue", 7),
    ("Review the order summary", 8),
    ("Press the place-order button", 8),
    ("Read the order confirmation and open the status page", 9),
    ("Log out of the web store", 11),
]


def _click(events: list[InteractionEvent], t: int, x: int, y: int,
           approach_from: tuple[int, int] | None = None) -> int:
    if approach_from:
        events.append(InteractionEvent(t, PointerMove(*approach_from)))
        t += 150
    events.append(InteractionEvent(t, PointerMove(x, y)))
    events.append(InteractionEvent(t + 80, PointerDown(x, y)))
    events.append(InteractionEvent(t + 160, PointerUp(x, y)))
    return t + 160


def _type(events: list[InteractionEvent], t: int, text: str) -> int:
    for ch in text:
        events.append(InteractionEvent(t, KeyChar(ch)))
        t += 90
    return t - 90


def generate_webstore(out_dir: Path) -> Path:
    """Build the fixture project under out_dir; returns the project path.

    out_dir must not already contain files.
    """
    out_dir = Path(out_dir)
    if out_dir.exists() and any(out_dir.iterdir()):
        raise FileExistsError(f"{out_dir} exists and is not empty")
    out_dir.mkdir(parents=True, exist_ok=True)

    project = Project()
    for title, boxes in _PAGES:
        png = _page(title, boxes)
        tmp = out_dir / "_page.png"
        tmp.write_bytes(png)
        ref, w, h = store.import_mockup_image(out_dir, tmp, project.asset_dir)
        tmp.unlink()
        model.add_mockup(project, title, ref, w, h)

    m = {mk.name: mk for mk in project.mockups}
    model.add_control(m["Home"], "text_input", BBox(20, 60, 180, 24), label="search")
    model.add_control(m["Home"], "button", BBox(210, 60, 90, 24), label="Search")
    model.add_control(m["Products"], "hotspot", BBox(20, 60, 280, 40), label="coffee mug")
    model.add_control(m["Coffee mug"], "button", BBox(160, 150, 140, 30), label="Add to cart")
    model.add_control(m["Cart"], "button", BBox(200, 170, 100, 30), label="Checkout")
    model.add_control(m["Login"], "text_input", BBox(20, 70, 200, 24), label="user")
    model.add_control(m["Login"], "text_input", BBox(20, 110, 200, 24), label="password")
    model.add_control(m["Login"], "button", BBox(20, 150, 100, 30), label="Log in")
    model.add_control(m["Shipping"], "text_input", BBox(20, 70, 260, 24), label="address")
    model.add_control(m["Shipping"], "checkbox", BBox(20, 110, 16, 16),
                      CheckboxState(False), label="billing equals shipping")
    model.add_control(m["Shipping"], "button", BBox(200, 170, 100, 30), label="Continue")
    model.add_control(m["Payment"], "checkbox", BBox(20, 70, 16, 16),
                      CheckboxState(False), label="pay on invoice")
    model.add_control(m["Payment"], "button", BBox(200, 170, 100, 30), label="Continue")
    model.add_control(m["Review order"], "button", BBox(180, 170, 120, 30),
                      label="Place order")
    model.add_control(m["Confirmation"], "button", BBox(20, 150, 140, 30),
                      label="Order status")
    model.add_control(m["Order status"], "hotspot", BBox(20, 150, 280, 40),
                      label="back to shop")
    model.add_control(m["Goodbye"], "button", BBox(110, 170, 100, 30), label="Log out")

    sid = model.add_scenario(project, "Buy a coffee mug in the web store")
    scenario = project.scenario(sid)
    for mk in project.mockups:
        model.append_entry(project, scenario, mk.id)

    def seq(name: str) -> list[InteractionEvent]:
        idx = [mk.name for mk in project.mockups].index(name)
        return scenario.entries[idx].sequence.events

    ev = seq("Home")
    ev.append(InteractionEvent(0, PointerMove(160, 200)))
    _click(ev, 200, 60, 70)          # focus search field
    t = _type(ev, 500, "mug")
    _click(ev, t + 200, 250, 70)     # press Search

    ev = seq("Products")
    _click(ev, 100, 150, 80, approach_from=(150, 220))  # open coffee mug row

    ev = seq("Coffee mug")
    _click(ev, 150, 230, 165, approach_from=(80, 120))  # Add to cart

    ev = seq("Cart")
    _click(ev, 150, 250, 185, approach_from=(160, 80))  # Checkout

    ev = seq("Login")
    t = _click(ev, 100, 100, 80)
    t = _type(ev, t + 150, "erika")
    t = _click(ev, t + 200, 100, 120)
    t = _type(ev, t + 150, "secret")
    _click(ev, t + 200, 60, 165)     # Log in

    ev = seq("Shipping")
    t = _click(ev, 100, 120, 80)
    t = _type(ev, t + 150, "Main St 1")
    t = _click(ev, t + 200, 28, 118)   # tick checkbox
    _click(ev, t + 200, 250, 185)      # Continue

    ev = seq("Payment")
    t = _click(ev, 100, 28, 78)        # pay on invoice
    _click(ev, t + 250, 250, 185)      # Continue

    ev = seq("Review order")
    _click(ev, 300, 240, 185, approach_from=(160, 100))  # Place order

    ev = seq("Confirmation")
    _click(ev, 200, 90, 165, approach_from=(160, 90))    # Order status

    ev = seq("Order status")
    _click(ev, 200, 160, 170, approach_from=(160, 90))   # back to shop

    ev = seq("Goodbye")
    _click(ev, 200, 160, 185, approach_from=(160, 110))  # Log out

    project_path = out_dir / PROJECT_FILENAME
    store.save_project(project, project_path)

    mockup_ids = [mk.id for mk in project.mockups]
    lines = [f"{i}. {text} -> {mockup_ids[page - 1]}"
             for i, (text, page) in enumerate(STEPS, start=1)]
    (out_dir / STEPS_FILENAME).write_text("\n".join(lines) + "\n", encoding="utf-8")
    return project_path
