import xml.etree.ElementTree as ET

from tracegrid import EventLog, SortKey, Viewport, build_cells, compute_layout, render_svg

from .test_grid import brute_force_side, log_of_types

SVG_NS = "{http://www.w3.org/2000/svg}"


def rects_of(doc):
    root = ET.fromstring(doc)
    return root.findall(f"{SVG_NS}rect")


def test_empty_document():
    layout, cells = build_cells(EventLog([]), SortKey.NONE, Viewport(320, 200))
    doc = render_svg(layout, cells)
    root = ET.fromstring(doc)
    assert root.get("width") == "320"
    assert rects_of(doc) == []


def test_single_cell():
    layout, cells = build_cells(log_of_types("A"), SortKey.NONE, Viewport(100, 100))
    rects = rects_of(render_svg(layout, cells))
    assert len(rects) == 1
    r = rects[0]
    assert (r.get("x"), r.get("y"), r.get("width"), r.get("height")) == ("0", "0", "100", "100")


def test_positions_match_layout_oracle():
    log = log_of_types(*(["A"] * 10))
    vp = Viewport(100, 100)
    layout, cells = build_cells(log, SortKey.TYPE, vp)
    rects = rects_of(render_svg(layout, cells))
    assert len(rects) == 10
    side = brute_force_side(10, 100, 100)
    oracle = compute_layout(10, vp)
    for i, r in enumerate(rects):
        assert int(r.get("width")) == side
        assert (int(r.get("x")), int(r.get("y"))) == oracle.positions[i]


def test_data_attributes_and_fill():
    log = log_of_types("java.util.Vector")
    layout, cells = build_cells(log, SortKey.TYPE, Viewport(50, 50))
    r = rects_of(render_svg(layout, cells))[0]
    assert r.get("data-oid") == "o0"
    assert r.get("data-group") == "java.util.Vector"
    assert r.get("fill") == cells[0].color.hex


def test_attribute_values_escaped():
    log = log_of_types("a<b>&c")
    layout, cells = build_cells(log, SortKey.TYPE, Viewport(50, 50))
    r = rects_of(render_svg(layout, cells))[0]  # parse succeeds -> escaped
    assert r.get("data-group") == "a<b>&c"


def test_document_height_tracks_rows():
    layout, cells = build_cells(log_of_types(*["A"] * 10), SortKey.NONE, Viewport(100, 100))
    root = ET.fromstring(render_svg(layout, cells))
    assert int(root.get("height")) == layout.rows * layout.cell_side
