"""Object-lifecycle event model and CSV log I/O.

The log format is a plain comma-separated file with the header

    Status,thread,datetime,objectName,Type,Class,Method,linenum

Status is an integer tag: 1 = object created, 2 = method entry,
3 = object destroyed.  Quoting is not supported; a row containing a
double quote is rejected.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from datetime import datetime, timezone

CSV_HEADER = "Status,thread,datetime,objectName,Type,Class,Method,linenum"
_NUM_COLUMNS = 8

_MDY_RE = re.compile(r"^(\d{1,2})/(\d{1,2})/(\d{4}) (\d{1,2}):(\d{2})$")


class MalformedRow(ValueError):
    """A physical line of the log could not be parsed."""

    def __init__(self, line_number: int, reason: str):
        self.line_number = line_number
        self.reason = reason
        super().__init__(f"line {line_number}: {reason}")


class EventKind(enum.IntEnum):
    CREATED = 1
    METHOD_ENTRY = 2
    DESTROYED = 3


@dataclass(frozen=True, slots=True)
class ObjectEvent:
    kind: EventKind
    thread: str
    timestamp: int  # epoch seconds, UTC
    object_id: str
    type_name: str
    site_class: str
    site_method: str
    line: int


class EventLog:
    """Ordered, immutable sequence of events, in source record order."""

    __slots__ = ("_events", "source_name")

    def __init__(self, events, source_name: str = "generated"):
        self._events = tuple(events)
        self.source_name = source_name

    @property
    def events(self) -> tuple[ObjectEvent, ...]:
        return self._events

    def __len__(self) -> int:
        return len(self._events)

    def __iter__(self):
        return iter(self._events)

    def __getitem__(self, i):
        return self._events[i]

    def __eq__(self, other) -> bool:
        if not isinstance(other, EventLog):
            return NotImplemented
        return self._events == other._events

    def __hash__(self):
        return hash(self._events)

    def created_events(self) -> list[ObjectEvent]:
        return [e for e in self._events if e.kind is EventKind.CREATED]


@dataclass(frozen=True)
class Violation:
    index: int
    rule: str
    message: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    def __bool__(self) -> bool:
        return bool(self.violations)


def parse_timestamp(s: str) -> int:
    """Epoch seconds from either M/D/YYYY H:mm or ISO 8601, both UTC."""
    m = _MDY_RE.match(s)
    if m:
        month, day, year, hour, minute = map(int, m.groups())
        try:
            dt = datetime(year, month, day, hour, minute, tzinfo=timezone.utc)
        except ValueError as e:
            raise ValueError(f"bad timestamp {s!r}: {e}") from None
        return int(dt.timestamp())
    try:
        dt = datetime.fromisoformat(s)
    except ValueError:
        raise ValueError(f"bad timestamp {s!r}") from None
    if dt.tzinfo is None:
        dt = dt.replace(tzinfo=timezone.utc)
    return int(dt.timestamp())


def format_timestamp(ts: int) -> str:
    """Canonical ISO 8601 text, minute precision when seconds are zero."""
    dt = datetime.fromtimestamp(ts, tz=timezone.utc)
    if dt.second == 0:
        return dt.strftime("%Y-%m-%dT%H:%M")
    return dt.strftime("%Y-%m-%dT%H:%M:%S")


def derive_package(fq_name: str) -> str:
    """Prefix before the last dot; empty for the default package."""
    idx = fq_name.rfind(".")
    return fq_name[:idx] if idx >= 0 else ""


def _parse_row(fields: list[str], lineno: int) -> ObjectEvent:
    status_s, thread, datetime_s, object_id, type_name, site_class, site_method, line_s = fields
    try:
        status = int(status_s)
    except ValueError:
        raise MalformedRow(lineno, f"bad status {status_s!r}")
    if status not in (1, 2, 3):
        raise MalformedRow(lineno, f"unknown status {status}")
    try:
        ts = parse_timestamp(datetime_s)
    except ValueError as e:
        raise MalformedRow(lineno, str(e))
    try:
        line = int(line_s)
    except ValueError:
        raise MalformedRow(lineno, f"bad line number {line_s!r}")
    if line < 0:
        raise MalformedRow(lineno, f"negative line number {line}")
    kind = EventKind(status)
    if kind in (EventKind.CREATED, EventKind.DESTROYED) and not object_id:
        raise MalformedRow(lineno, "empty objectName")
    if kind is EventKind.CREATED and not type_name:
        raise MalformedRow(lineno, "empty Type for created object")
    return ObjectEvent(kind, thread, ts, object_id, type_name, site_class, site_method, line)


def _looks_like_header(first_field: str) -> bool:
    try:
        int(first_field)
    except ValueError:
        return True
    return False


def parse_csv(text: str, source_name: str = "<string>") -> EventLog:
    """Parse a whole log document.  Order of events equals row order."""
    events: list[ObjectEvent] = []
    lines = text.split("\n")
    first_data = True
    for i, raw in enumerate(lines):
        lineno = i + 1
        line = raw.rstrip("\r")
        if line == "":
            continue  # trailing / blank lines
        if '"' in line:
            raise MalformedRow(lineno, "quoted fields are not supported")
        fields = line.split(",")
        if first_data:
            first_data = False
            if _looks_like_header(fields[0]):
                continue
        if len(fields) != _NUM_COLUMNS:
            raise MalformedRow(lineno, f"expected {_NUM_COLUMNS} columns, got {len(fields)}")
        events.append(_parse_row(fields, lineno))
    return EventLog(events, source_name=source_name)


def emit_csv(log: EventLog) -> str:
    """Canonical CSV document; parse_csv(emit_csv(log)) == log."""
    out = [CSV_HEADER]
    for e in log:
        out.append(
            f"{int(e.kind)},{e.thread},{format_timestamp(e.timestamp)},"
            f"{e.object_id},{e.type_name},{e.site_class},{e.site_method},{e.line}"
        )
    out.append("")
    return "\n".join(out)


def validate(log: EventLog) -> ValidationReport:
    """Lifecycle sanity over object ids, in file order.

    Rules: DUP_CREATE (second create of an id), ORPHAN_DESTROY (destroy
    with no earlier create), DUP_DESTROY (second destroy of an id).
    """
    violations: list[Violation] = []
    created: set[str] = set()
    destroyed: set[str] = set()
    for i, e in enumerate(log):
        if e.kind is EventKind.CREATED:
            if e.object_id in created:
                violations.append(Violation(i, "DUP_CREATE", f"object {e.object_id} created twice"))
            created.add(e.object_id)
        elif e.kind is EventKind.DESTROYED:
            if e.object_id in destroyed:
                violations.append(Violation(i, "DUP_DESTROY", f"object {e.object_id} destroyed twice"))
            elif e.object_id not in created:
                violations.append(Violation(i, "ORPHAN_DESTROY", f"object {e.object_id} destroyed but never created"))
            destroyed.add(e.object_id)
    return ValidationReport(tuple(violations))
