"""HTTP/JSON facade over the log store, analytics, and grid builder.

Logs are uploaded as raw CSV bodies and held as immutable in-memory
snapshots keyed by a short random token; everything else is a pure
read over a snapshot.  See docs/api.md for the response shapes.
"""

from __future__ import annotations

import secrets
import threading
from dataclasses import dataclass

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .analytics import (
    EventKind,
    KeyNone,
    SortKey,
    count_by,
    object_detail,
    thread_profile,
    top_k,
)
from .grid import Viewport, build_cells, legend
from .model import EventLog, MalformedRow, parse_csv


@dataclass(frozen=True)
class LogHandle:
    id: str
    source_name: str
    event_count: int
    created_count: int


class LogStore:
    """Concurrent map of immutable log snapshots."""

    def __init__(self):
        self._lock = threading.Lock()
        self._logs: dict[str, EventLog] = {}

    def add(self, log: EventLog) -> LogHandle:
        with self._lock:
            while True:
                token = secrets.token_hex(4)
                if token not in self._logs:
                    break
            self._logs[token] = log
        return LogHandle(token, log.source_name, len(log), len(log.created_events()))

    def get(self, token: str) -> EventLog | None:
        return self._logs.get(token)


def _error(status: int, message: str, **extra) -> JSONResponse:
    return JSONResponse({"error": message, **extra}, status_code=status)


def _parse_sort(value: str) -> SortKey | None:
    try:
        return SortKey(value)
    except ValueError:
        return None


def create_app(store: LogStore | None = None) -> FastAPI:
    app = FastAPI(title="tracegrid")
    app.state.store = store if store is not None else LogStore()

    @app.post("/logs", status_code=201)
    async def upload_log(request: Request):
        body = await request.body()
        name = request.headers.get("x-log-name", "upload.csv")
        try:
            log = parse_csv(body.decode("utf-8"), source_name=name)
        except UnicodeDecodeError:
            return _error(400, "body is not UTF-8 text")
        except MalformedRow as e:
            return _error(400, "malformed row", line=e.line_number, reason=e.reason)
        h = app.state.store.add(log)
        return {
            "id": h.id,
            "source_name": h.source_name,
            "event_count": h.event_count,
            "created_count": h.created_count,
        }

    @app.get("/logs/{log_id}/grid")
    def get_grid(log_id: str, sort: str = "none", w: int = 1024, h: int = 768):
        log = app.state.store.get(log_id)
        if log is None:
            return _error(404, "unknown log id")
        key = _parse_sort(sort)
        if key is None:
            return _error(400, f"invalid sort key {sort!r}")
        if w < 1 or h < 1:
            return _error(400, "w and h must be >= 1")
        layout, cells = build_cells(log, key, Viewport(w, h))
        legend_key = SortKey.TYPE if key is SortKey.NONE else key
        return {
            "layout": {
                "cell_side": layout.cell_side,
                "columns": layout.columns,
                "rows": layout.rows,
                "count": layout.count,
                "width": layout.width,
            },
            "cells": [
                {
                    "index": c.index,
                    "x": c.position[0],
                    "y": c.position[1],
                    "color": c.color.hex,
                    "object_id": c.object_id,
                    "group_value": c.group_value,
                }
                for c in cells
            ],
            "legend": [
                {"value": value, "color": rgb.hex, "count": count}
                for value, rgb, count in legend(log, legend_key)
            ],
        }

    @app.get("/logs/{log_id}/objects/{object_id}")
    def get_object(log_id: str, object_id: str):
        log = app.state.store.get(log_id)
        if log is None:
            return _error(404, "unknown log id")
        detail = object_detail(log, object_id)
        if detail is None:
            return _error(404, "unknown object id")
        return {
            "object_id": detail.object_id,
            "type": detail.type_name,
            "package": detail.package,
            "created_by": detail.created_by,
            "created_at": detail.created_at,
            "destroyed": detail.destroyed,
            "events": [
                {
                    "kind": int(e.kind),
                    "thread": e.thread,
                    "timestamp": e.timestamp,
                    "type": e.type_name,
                    "class": e.site_class,
                    "method": e.site_method,
                    "line": e.line,
                }
                for e in detail.events
            ],
        }

    @app.get("/logs/{log_id}/stats")
    def get_stats(log_id: str, by: str = "class", k: int = 10):
        log = app.state.store.get(log_id)
        if log is None:
            return _error(404, "unknown log id")
        key = _parse_sort(by)
        if key is None or k < 1:
            return _error(400, f"invalid stats query by={by!r} k={k}")
        try:
            table = count_by(log, key, EventKind.CREATED)
        except KeyNone:
            return _error(400, "stats need a grouping key other than 'none'")
        return {
            "by": key.value,
            "k": k,
            "total": sum(table.entries.values()),
            "entries": [{"value": v, "count": c} for v, c in top_k(table, k)],
        }

    @app.get("/logs/{log_id}/threads")
    def get_threads(log_id: str):
        log = app.state.store.get(log_id)
        if log is None:
            return _error(404, "unknown log id")
        profile = thread_profile(log)
        return {
            "rows": [
                {"thread": t, "created": c, "destroyed": d}
                for t, c, d in profile.rows
            ]
        }

    return app
