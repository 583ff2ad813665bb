import random

import pytest
from hypothesis import given, settings, strategies as st

from protoreel import model, store
from protoreel.store import ParseError, StoreError

from conftest import materialize_assets, png_bytes, random_project

MINIMAL = b"""{
  "schema_version": 1,
  "asset_dir": "assets",
  "mockups": [],
  "scenarios": []
}
"""


def test_minimal_document_parses():
    p = store.parse_project(MINIMAL)
    assert p.mockups == [] and p.scenarios == []


def test_canonical_form_is_fixpoint_of_minimal():
    p = store.parse_project(MINIMAL)
    assert store.encode_project(p) == MINIMAL


@given(st.integers(0, 2 ** 32 - 1))
@settings(max_examples=100, deadline=None)
def test_round_trip_semantic_identity(seed):
    project = random_project(random.Random(seed))
    assert store.parse_project(store.encode_project(project)) == project


@given(st.integers(0, 2 ** 32 - 1))
@settings(max_examples=100, deadline=None)
def test_save_load_save_byte_fixpoint(seed):
    project = random_project(random.Random(seed))
    data = store.encode_project(project)
    assert store.encode_project(store.parse_project(data)) == data


def test_save_twice_byte_identical(tmp_path):
    project = random_project(random.Random(42))
    materialize_assets(project, tmp_path)
    a = tmp_path / "a.mrp"
    b = tmp_path / "b.mrp"
    store.save_project(project, a)
    store.save_project(project, b)
    assert a.read_bytes() == b.read_bytes()


def test_save_refuses_invalid_project(tmp_path):
    project = model.Project()
    project.scenarios.append(model.Scenario("s01", "s", [model.TimelineEntry("e01", "gone")]))
    path = tmp_path / "p.mrp"
    with pytest.raises(StoreError, match="dangling_mockup_ref"):
        store.save_project(project, path)
    assert not path.exists()


def test_truncated_document_position():
    doc = MINIMAL[:25]
    with pytest.raises(ParseError) as exc:
        store.parse_project(doc)
    assert exc.value.reason == "truncated"
    assert exc.value.offset == len(doc)


def test_unsupported_schema_version():
    doc = MINIMAL.replace(b'"schema_version": 1', b'"schema_version": 999')
    with pytest.raises(ParseError) as exc:
        store.parse_project(doc)
    assert exc.value.reason == "unsupported_version"


def test_unknown_control_kind_rejected_with_position():
    doc = b"""{
  "schema_version": 1,
  "asset_dir": "assets",
  "mockups": [
    {
      "id": "m01", "name": "x", "image_ref": "assets/x.png",
      "width_px": 10, "height_px": 10,
      "controls": [{"id": "c01", "kind": "slider", "bbox": [0, 0, 5, 5]}]
    }
  ],
  "scenarios": []
}
"""
    with pytest.raises(ParseError) as exc:
        store.parse_project(doc)
    assert exc.value.reason == "unknown_control_kind"
    assert 0 < exc.value.offset < len(doc)
    assert doc.splitlines()[exc.value.line - 1].find(b"slider") >= 0


def test_syntax_error_position_points_inside():
    doc = b'{\n  "schema_version": 1,,\n}'
    with pytest.raises(ParseError) as exc:
        store.parse_project(doc)
    assert exc.value.reason in ("bad_syntax", "truncated")
    assert 0 <= exc.value.offset <= len(doc)
    assert exc.value.line == 2


@pytest.mark.parametrize("junk", [
    b"", b"\x00\xff\xfe", b"[1,2,", b'{"a"', b"nul", b'"\\u12', b"123abc",
    b'{"schema_version": true}', b"[[[[[[", b'{"a": 1e}',
])
def test_parser_rejects_junk_without_crashing(junk):
    with pytest.raises(ParseError):
        store.parse_project(junk)


@given(st.binary(max_size=400))
@settings(max_examples=300, deadline=None)
def test_parser_fuzz_never_crashes(data):
    try:
        store.parse_project(data)
    except ParseError as e:
        assert 0 <= e.offset <= len(data)


def test_load_project_checks_assets(tmp_path):
    project = model.Project()
    model.add_mockup(project, "page", "assets/x.png", 8, 8)
    path = tmp_path / "p.mrp"
    store.save_project(project, path)
    with pytest.raises(StoreError, match="missing_asset"):
        store.load_project(path)
    (tmp_path / "assets").mkdir()
    (tmp_path / "assets/x.png").write_bytes(png_bytes(8, 8))
    assert store.load_project(path) == project


def test_load_project_dimension_mismatch(tmp_path):
    project = model.Project()
    model.add_mockup(project, "page", "assets/x.png", 8, 8)
    path = tmp_path / "p.mrp"
    store.save_project(project, path)
    (tmp_path / "assets").mkdir()
    (tmp_path / "assets/x.png").write_bytes(png_bytes(9, 8))
    with pytest.raises(StoreError, match="dimension_mismatch"):
        store.load_project(path)


def test_import_image_content_addressed(tmp_path):
    src = tmp_path / "src.png"
    src.write_bytes(png_bytes(800, 600))
    ref1, w, h = store.import_mockup_image(tmp_path, src)
    ref2, _, _ = store.import_mockup_image(tmp_path, src)
    assert ref1 == ref2
    assert (w, h) == (800, 600)
    assert (tmp_path / ref1).is_file()
    assert len(list((tmp_path / "assets").iterdir())) == 1


def test_import_corrupt_image(tmp_path):
    src = tmp_path / "src.png"
    src.write_bytes(b"not a png at all")
    with pytest.raises(StoreError):
        store.import_mockup_image(tmp_path, src)
    assert not (tmp_path / "assets").exists()


def test_export_mockup_images(webstore, tmp_path):
    project = store.load_project(webstore)
    count = store.export_mockup_images(project, webstore.parent, tmp_path / "imgs")
    assert count == 11
    files = sorted((tmp_path / "imgs").iterdir())
    assert [f.name for f in files] == [f"{m.id}.png" for m in sorted(
        project.mockups, key=lambda m: m.id)]
    # exported bytes decode to the source dimensions
    from PIL import Image

    for m in project.mockups:
        with Image.open(tmp_path / "imgs" / f"{m.id}.png") as im:
            assert im.size == (m.width_px, m.height_px)


def test_export_mockup_images_empty_project(tmp_path):
    assert store.export_mockup_images(model.Project(), tmp_path, tmp_path / "o") == 0
