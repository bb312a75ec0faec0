"""Object-lifecycle trace analytics and space-filling grid visualization."""

from .analytics import (
    CountTable,
    KeyNone,
    LiveReport,
    ObjectDetail,
    SortKey,
    ThreadProfile,
    count_by,
    live_objects,
    object_detail,
    thread_profile,
    top_k,
)
from .color import Rgb, color_of, fnv1a32
from .grid import CellView, GridLayout, Viewport, build_cells, compute_layout, legend, sort_permutation
from .model import (
    EventKind,
    EventLog,
    MalformedRow,
    ObjectEvent,
    ValidationReport,
    derive_package,
    emit_csv,
    parse_csv,
    parse_timestamp,
    validate,
)
from .svg import render_svg
from .workload import GenConfig, InvalidConfig, ThreadSpec, generate, parse_config

__all__ = [
    "CellView",
    "CountTable",
    "EventKind",
    "EventLog",
    "GenConfig",
    "GridLayout",
    "InvalidConfig",
    "KeyNone",
    "LiveReport",
    "MalformedRow",
    "ObjectDetail",
    "ObjectEvent",
    "Rgb",
    "SortKey",
    "ThreadProfile",
    "ThreadSpec",
    "ValidationReport",
    "Viewport",
    "build_cells",
    "color_of",
    "compute_layout",
    "count_by",
    "derive_package",
    "emit_csv",
    "fnv1a32",
    "generate",
    "legend",
    "live_objects",
    "object_detail",
    "parse_config",
    "parse_csv",
    "parse_timestamp",
    "render_svg",
    "sort_permutation",
    "thread_profile",
    "top_k",
    "validate",
]

__version__ = "0.1.0"
