"""SVG output for the object grid."""

from __future__ import annotations

from xml.sax.saxutils import quoteattr

from .grid import CellView, GridLayout


def render_svg(layout: GridLayout, cells: list[CellView]) -> str:
    """One rect per cell; document width is the viewport width and the
    height grows with the row count (overflow is allowed)."""
    height = layout.rows * layout.cell_side
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{layout.width}" height="{height}" '
        f'viewBox="0 0 {layout.width} {height}">'
    ]
    side = layout.cell_side
    for c in cells:
        x, y = c.position
        parts.append(
            f'<rect x="{x}" y="{y}" width="{side}" height="{side}" '
            f'fill="{c.color.hex}" data-oid={quoteattr(c.object_id)} '
            f'data-group={quoteattr(c.group_value)}/>'
        )
    parts.append("</svg>\n")
    return "\n".join(parts)
