import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tracegrid import (
    EventKind,
    EventLog,
    SortKey,
    Viewport,
    build_cells,
    color_of,
    compute_layout,
    legend,
    sort_permutation,
)
from tracegrid.analytics import KeyNone, attribute_of

from .test_model import make_event


def brute_force_side(n, width, height):
    """Independent layout oracle: linear scan from the largest candidate."""
    for s in range(min(width, height), 0, -1):
        if (width // s) * (height // s) >= n:
            return s
    return 1


def log_of_types(*types):
    return EventLog([make_event(oid=f"o{i}", type_name=t) for i, t in enumerate(types)])


class TestComputeLayout:
    def test_single_cell_fills_viewport(self):
        layout = compute_layout(1, Viewport(100, 100))
        assert layout.cell_side == 100
        assert (layout.columns, layout.rows) == (1, 1)
        assert layout.positions == ((0, 0),)

    def test_perfect_square_split(self):
        layout = compute_layout(4, Viewport(100, 100))
        assert layout.cell_side == 50
        assert (layout.columns, layout.rows) == (2, 2)

    def test_ten_cells(self):
        layout = compute_layout(10, Viewport(100, 100))
        assert layout.cell_side == 25
        assert (layout.columns, layout.rows) == (4, 3)

    def test_empty(self):
        layout = compute_layout(0, Viewport(100, 100))
        assert layout.count == 0
        assert layout.positions == ()
        assert (layout.columns, layout.rows) == (0, 0)

    def test_overflow_clamps_to_one(self):
        layout = compute_layout(200, Viewport(10, 10))
        assert layout.cell_side == 1
        assert layout.rows * layout.cell_side > 10  # grows past the viewport

    @pytest.mark.parametrize("viewport", [(100, 100), (640, 480), (37, 91)])
    def test_matches_brute_force_oracle(self, viewport):
        w, h = viewport
        vp = Viewport(w, h)
        for n in range(1, 200):
            assert compute_layout(n, vp).cell_side == brute_force_side(n, w, h), n

    def test_monotone_in_n(self):
        vp = Viewport(640, 480)
        sides = [compute_layout(n, vp).cell_side for n in range(1, 300)]
        assert sides == sorted(sides, reverse=True)

    def test_row_major_positions_and_packing(self):
        layout = compute_layout(10, Viewport(100, 100))
        s = layout.cell_side
        for i, (x, y) in enumerate(layout.positions):
            assert (x, y) == ((i % layout.columns) * s, (i // layout.columns) * s)
            assert 0 <= x and x + s <= 100
        assert len(set(layout.positions)) == 10  # no overlap


class TestSortPermutation:
    def test_empty(self):
        assert sort_permutation(EventLog([]), SortKey.TYPE) == []

    def test_none_is_file_order(self):
        log = log_of_types("B", "A", "A")
        assert sort_permutation(log, SortKey.NONE) == [0, 1, 2]

    def test_single_group_is_identity(self):
        log = log_of_types("A", "A", "A")
        assert sort_permutation(log, SortKey.TYPE) == [0, 1, 2]

    def test_largest_group_first(self):
        log = log_of_types("B", "A", "A")
        assert sort_permutation(log, SortKey.TYPE) == [1, 2, 0]

    def test_skips_non_created_events(self):
        log = EventLog([
            make_event(oid="a", type_name="A"),
            make_event(EventKind.DESTROYED, oid="a", type_name="A"),
            make_event(oid="b", type_name="B"),
        ])
        assert sorted(sort_permutation(log, SortKey.TYPE)) == [0, 1]

    @given(
        types=st.lists(st.sampled_from("ABCDE"), max_size=60),
        key=st.sampled_from([SortKey.TYPE, SortKey.PACKAGE, SortKey.THREAD, SortKey.METHOD, SortKey.CLASS]),
    )
    @settings(max_examples=200, deadline=None)
    def test_properties(self, types, key):
        log = log_of_types(*types)
        created = log.created_events()
        perm = sort_permutation(log, key)
        # bijection
        assert sorted(perm) == list(range(len(created)))
        values = [attribute_of(created[i], key) for i in perm]
        # groups contiguous
        seen = set()
        prev = object()
        for v in values:
            if v != prev:
                assert v not in seen
                seen.add(v)
                prev = v
        # stable within groups
        by_value = {}
        for i in perm:
            by_value.setdefault(attribute_of(created[i], key), []).append(i)
        for members in by_value.values():
            assert members == sorted(members)
        # group order: size desc, then value asc
        order = []
        for v in values:
            if not order or order[-1][0] != v:
                order.append((v, values.count(v)))
        assert order == sorted(order, key=lambda it: (-it[1], it[0]))


class TestColorOf:
    def test_deterministic(self):
        assert color_of("x") == color_of("x")

    def test_fixture_table(self, color_table):
        for value, expected in color_table.items():
            rgb = color_of(value)
            assert [rgb.r, rgb.g, rgb.b] == expected["rgb"], value
            assert rgb.hex == expected["hex"]

    def test_empty_string_bucket(self):
        from tracegrid.color import hsl_of

        assert hsl_of("") == (61, 65, 55)

    def test_channels_in_range(self):
        for v in ("", "a", "zz", "java.util.Vector", "éß"):
            rgb = color_of(v)
            assert all(0 <= c <= 255 for c in (rgb.r, rgb.g, rgb.b))


class TestBuildCells:
    def test_empty_log(self):
        layout, cells = build_cells(EventLog([]), SortKey.TYPE, Viewport(100, 100))
        assert cells == []
        assert layout.count == 0

    def test_three_cells_sorted(self):
        log = log_of_types("B", "A", "A")
        layout, cells = build_cells(log, SortKey.TYPE, Viewport(100, 100))
        assert layout.cell_side == 50
        assert [c.group_value for c in cells] == ["A", "A", "B"]
        assert [c.position for c in cells] == [(0, 0), (50, 0), (0, 50)]
        assert cells[0].color == color_of("A")
        assert cells[2].color == color_of("B")

    def test_none_colors_by_type(self):
        log = log_of_types("B", "A")
        _, cells = build_cells(log, SortKey.NONE, Viewport(100, 100))
        assert [c.group_value for c in cells] == ["B", "A"]
        assert cells[0].color == color_of("B")

    def test_cardinality_per_key(self, jedit_log):
        n = len(jedit_log.created_events())
        for key in SortKey:
            _, cells = build_cells(jedit_log, key, Viewport(640, 480))
            assert len(cells) == n

    def test_thread_sort_groups_contiguous(self, jedit_log):
        _, cells = build_cells(jedit_log, SortKey.THREAD, Viewport(640, 480))
        values = [c.group_value for c in cells]
        starts = [values[0]] + [v for i, v in enumerate(values) if i and values[i - 1] != v]
        # each distinct thread begins exactly one run (Thread-0 creates nothing)
        assert len(starts) == len(set(values)) == 2


class TestLegend:
    def test_empty(self):
        assert legend(EventLog([]), SortKey.TYPE) == []

    def test_counts_and_order(self):
        entries = legend(log_of_types("B", "A", "A"), SortKey.TYPE)
        assert entries == [("A", color_of("A"), 2), ("B", color_of("B"), 1)]

    def test_single_type(self):
        entries = legend(log_of_types("A", "A"), SortKey.TYPE)
        assert entries == [("A", color_of("A"), 2)]

    def test_key_none_rejected(self):
        with pytest.raises(KeyNone):
            legend(log_of_types("A"), SortKey.NONE)
