"""Aggregations over an event log: per-attribute counts, top-k,
liveness accounting, per-thread activity, and per-object details."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .model import EventKind, EventLog, ObjectEvent, derive_package


class KeyNone(ValueError):
    """Operation requires a concrete grouping attribute."""


class SortKey(enum.Enum):
    NONE = "none"
    PACKAGE = "package"
    CLASS = "class"
    TYPE = "type"
    THREAD = "thread"
    METHOD = "method"


def attribute_of(event: ObjectEvent, key: SortKey) -> str:
    """The grouping attribute value of an event under a sort key."""
    if key is SortKey.PACKAGE:
        return derive_package(event.type_name)
    if key is SortKey.CLASS:
        return event.site_class
    if key is SortKey.TYPE:
        return event.type_name
    if key is SortKey.THREAD:
        return event.thread
    if key is SortKey.METHOD:
        return event.site_method
    raise KeyNone("sort key 'none' has no grouping attribute")


@dataclass(frozen=True)
class CountTable:
    entries: dict[str, int]
    key: SortKey


@dataclass(frozen=True)
class ThreadProfile:
    rows: tuple[tuple[str, int, int], ...]  # (thread, created, destroyed)


@dataclass(frozen=True)
class LiveReport:
    per_type: dict[str, int]
    total: int
    orphan_destroys: int


@dataclass(frozen=True)
class ObjectDetail:
    object_id: str
    events: tuple[ObjectEvent, ...]
    type_name: str
    package: str
    created_by: str
    created_at: int
    destroyed: bool


def count_by(log: EventLog, key: SortKey, kind: EventKind) -> CountTable:
    if key is SortKey.NONE:
        raise KeyNone("count_by needs a grouping key")
    entries: dict[str, int] = {}
    for e in log:
        if e.kind is kind:
            value = attribute_of(e, key)
            entries[value] = entries.get(value, 0) + 1
    return CountTable(entries, key)


def top_k(table: CountTable, k: int) -> list[tuple[str, int]]:
    """Largest counts first; ties broken by value, ascending."""
    ranked = sorted(table.entries.items(), key=lambda kv: (-kv[1], kv[0]))
    return ranked[:k]


def live_objects(log: EventLog) -> LiveReport:
    """Created minus matched Destroyed, per type.

    A destroy's type is looked up from its id's create event; destroys
    with no matching create are counted separately, not subtracted.
    """
    type_of: dict[str, str] = {}
    per_type: dict[str, int] = {}
    orphans = 0
    for e in log:
        if e.kind is EventKind.CREATED:
            type_of[e.object_id] = e.type_name
            per_type[e.type_name] = per_type.get(e.type_name, 0) + 1
        elif e.kind is EventKind.DESTROYED:
            t = type_of.get(e.object_id)
            if t is None:
                orphans += 1
            else:
                per_type[t] -= 1
                del type_of[e.object_id]  # double destroy counts as orphan
    return LiveReport(per_type, sum(per_type.values()), orphans)


def thread_profile(log: EventLog) -> ThreadProfile:
    """One row per thread, ordered by created count descending then name."""
    created: dict[str, int] = {}
    destroyed: dict[str, int] = {}
    for e in log:
        if e.kind is EventKind.CREATED:
            created[e.thread] = created.get(e.thread, 0) + 1
            destroyed.setdefault(e.thread, 0)
        elif e.kind is EventKind.DESTROYED:
            destroyed[e.thread] = destroyed.get(e.thread, 0) + 1
            created.setdefault(e.thread, 0)
    rows = sorted(
        ((t, created[t], destroyed[t]) for t in created),
        key=lambda r: (-r[1], r[0]),
    )
    return ThreadProfile(tuple(rows))


def object_detail(log: EventLog, object_id: str) -> ObjectDetail | None:
    """All events of one object plus derived facts; None when unknown."""
    hits = [e for e in log if e.object_id == object_id]
    if not hits:
        return None
    create = next((e for e in hits if e.kind is EventKind.CREATED), hits[0])
    return ObjectDetail(
        object_id=object_id,
        events=tuple(hits),
        type_name=create.type_name,
        package=derive_package(create.type_name),
        created_by=create.thread,
        created_at=create.timestamp,
        destroyed=any(e.kind is EventKind.DESTROYED for e in hits),
    )
