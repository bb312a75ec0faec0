"""Space-filling square grid: layout, ordering, and cell assembly.

Every created object becomes one square.  The layout packs N equal
squares row-major into a viewport at the largest integer cell side
that fits; sorting regroups the squares by an attribute without
changing their number.
"""

from __future__ import annotations

from dataclasses import dataclass

from .analytics import SortKey, attribute_of
from .color import Rgb, color_of
from .model import EventLog


@dataclass(frozen=True)
class Viewport:
    width: int
    height: int

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise ValueError("viewport must be at least 1x1")


@dataclass(frozen=True)
class GridLayout:
    cell_side: int
    columns: int
    rows: int
    count: int
    width: int  # viewport width, kept for rendering
    positions: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class CellView:
    index: int
    position: tuple[int, int]
    color: Rgb
    object_id: str
    group_value: str


def _fits(side: int, width: int, height: int, n: int) -> bool:
    return (width // side) * (height // side) >= n


def compute_layout(n: int, viewport: Viewport) -> GridLayout:
    """Maximal integer cell side such that all n squares fit row-major.

    When even side 1 cannot fit (n > width*height) the side clamps at 1
    and rows run past the viewport height.
    """
    if n == 0:
        return GridLayout(1, 0, 0, 0, viewport.width, ())
    # (W//s)*(H//s) is nonincreasing in s, so binary search the largest
    # fitting side in [1, min(W, H)].
    lo, hi = 1, min(viewport.width, viewport.height)
    if not _fits(1, viewport.width, viewport.height, n):
        side = 1  # overflow
    else:
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if _fits(mid, viewport.width, viewport.height, n):
                lo = mid
            else:
                hi = mid - 1
        side = lo
    columns = viewport.width // side
    rows = -(-n // columns)
    positions = tuple(
        ((i % columns) * side, (i // columns) * side) for i in range(n)
    )
    return GridLayout(side, columns, rows, n, viewport.width, positions)


def sort_permutation(log: EventLog, key: SortKey) -> list[int]:
    """Display order of created events, as indices into the created
    subsequence.

    key=none keeps file order.  Otherwise groups are contiguous,
    ordered by size descending (ties by attribute value ascending),
    and file order is preserved inside each group.
    """
    created = log.created_events()
    if key is SortKey.NONE:
        return list(range(len(created)))
    groups: dict[str, list[int]] = {}
    for i, e in enumerate(created):
        groups.setdefault(attribute_of(e, key), []).append(i)
    ordered = sorted(groups.items(), key=lambda kv: (-len(kv[1]), kv[0]))
    return [i for _, members in ordered for i in members]


def build_cells(log: EventLog, key: SortKey, viewport: Viewport) -> tuple[GridLayout, list[CellView]]:
    """Layout plus one colored cell per created object, in sorted order.

    With key=none the cells still color by type name, so the unsorted
    view shows the same categories scattered in file order.
    """
    created = log.created_events()
    layout = compute_layout(len(created), viewport)
    color_key = SortKey.TYPE if key is SortKey.NONE else key
    perm = sort_permutation(log, key)
    cache: dict[str, Rgb] = {}
    cells = []
    for cell_index, created_index in enumerate(perm):
        e = created[created_index]
        value = attribute_of(e, color_key)
        rgb = cache.get(value)
        if rgb is None:
            rgb = cache[value] = color_of(value)
        cells.append(CellView(cell_index, layout.positions[cell_index], rgb, e.object_id, value))
    return layout, cells


def legend(log: EventLog, key: SortKey) -> list[tuple[str, Rgb, int]]:
    """(value, color, count) per distinct attribute value of created
    events, in the same group order the sorted grid uses."""
    created = log.created_events()
    counts: dict[str, int] = {}
    for e in created:
        value = attribute_of(e, key)  # raises KeyNone for key=none
        counts[value] = counts.get(value, 0) + 1
    ordered = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    return [(value, color_of(value), count) for value, count in ordered]
