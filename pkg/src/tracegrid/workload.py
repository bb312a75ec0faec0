"""Synthetic multi-threaded object-lifecycle trace generator.

Stands in for runtime instrumentation of a real program: given a config
it emits a deterministic event log that is lifecycle-sound by
construction (every destroy refers to a live, previously created id).

Draw order per event, from a single Xoshiro256StarStar stream (see
rng.py for the exact recurrence), so alternate implementations can
reproduce logs bit-for-bit:

  1. u = next_float()                  decide destroy vs. create
  2. (destroy) next_below(len(live))   which live object dies
     (destroy) next_float()            which thread, by destroy weight
  3. (create)  next_float()            which thread, by create weight
     (create)  next_float()            which class, by class weight
     (create)  next_u64(), next_u64()  128 id bits -> 8-4-4-4-12 hex
     (create)  next_below(5000)        source line number
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .model import EventKind, EventLog, ObjectEvent
from .rng import Xoshiro256StarStar


class InvalidConfig(ValueError):
    pass


@dataclass(frozen=True)
class ThreadSpec:
    name: str
    create_weight: float
    destroy_weight: float


@dataclass(frozen=True)
class GenConfig:
    seed: int
    threads: tuple[ThreadSpec, ...]
    classes: tuple[tuple[str, float], ...]  # (fq type name, relative frequency)
    event_count: int
    destroy_fraction: float = 0.0
    start_time: int = 0
    time_step: int = 1

    def check(self) -> None:
        if self.event_count < 1:
            raise InvalidConfig("event_count must be positive")
        if not (0.0 <= self.destroy_fraction <= 1.0):
            raise InvalidConfig("destroy_fraction must be in [0, 1]")
        if self.time_step < 0:
            raise InvalidConfig("time_step must be >= 0")
        if not self.classes:
            raise InvalidConfig("at least one class is required")
        for name, freq in self.classes:
            if freq <= 0:
                raise InvalidConfig(f"class {name!r} frequency must be > 0")
        for t in self.threads:
            if t.create_weight < 0 or t.destroy_weight < 0:
                raise InvalidConfig(f"thread {t.name!r} weights must be >= 0")
        if not any(t.create_weight > 0 for t in self.threads):
            raise InvalidConfig("at least one thread needs create_weight > 0")


def _weighted_pick(u: float, weights: list[float]) -> int:
    # u in [0,1); scan cumulative normalized weights
    total = sum(weights)
    acc = 0.0
    for i, w in enumerate(weights):
        acc += w / total
        if u < acc:
            return i
    return len(weights) - 1  # float round-off guard


def _uuid_text(hi: int, lo: int) -> str:
    h = f"{hi:016x}{lo:016x}"
    return f"{h[0:8]}-{h[8:12]}-{h[12:16]}-{h[16:20]}-{h[20:32]}"


def generate(config: GenConfig) -> EventLog:
    """Deterministic EventLog of exactly config.event_count events."""
    config.check()
    rng = Xoshiro256StarStar(config.seed)
    create_w = [t.create_weight for t in config.threads]
    destroy_w = [t.destroy_weight for t in config.threads]
    can_destroy = any(w > 0 for w in destroy_w)
    class_names = [c[0] for c in config.classes]
    class_w = [c[1] for c in config.classes]

    max_destroys = int(config.destroy_fraction * config.event_count)
    events: list[ObjectEvent] = []
    live: list[ObjectEvent] = []  # created-and-not-destroyed, creation order
    destroyed = 0
    for i in range(config.event_count):
        ts = config.start_time + i * config.time_step
        u = rng.next_float()
        if u < config.destroy_fraction and destroyed < max_destroys and live and can_destroy:
            victim = live.pop(rng.next_below(len(live)))
            thread = config.threads[_weighted_pick(rng.next_float(), destroy_w)].name
            events.append(
                ObjectEvent(
                    EventKind.DESTROYED,
                    thread,
                    ts,
                    victim.object_id,
                    victim.type_name,
                    victim.site_class,
                    victim.site_method,
                    victim.line,
                )
            )
            destroyed += 1
        else:
            thread = config.threads[_weighted_pick(rng.next_float(), create_w)].name
            type_name = class_names[_weighted_pick(rng.next_float(), class_w)]
            oid = _uuid_text(rng.next_u64(), rng.next_u64())
            line = rng.next_below(5000)
            ev = ObjectEvent(
                EventKind.CREATED, thread, ts, oid, type_name, type_name, "<init>", line
            )
            events.append(ev)
            live.append(ev)
    return EventLog(events, source_name="generated")


def parse_config(text: str) -> GenConfig:
    """Flat key=value config; `thread` and `class` keys repeat.

    thread = <name>,<create weight>,<destroy weight>
    class  = <fq type name>,<relative frequency>
    plus scalar keys seed, event_count, destroy_fraction, start_time,
    time_step.  Lines starting with '#' are comments.
    """
    scalars: dict[str, str] = {}
    threads: list[ThreadSpec] = []
    classes: list[tuple[str, float]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise InvalidConfig(f"config line {lineno}: expected key = value")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        try:
            if key == "thread":
                name, cw, dw = (p.strip() for p in value.split(","))
                threads.append(ThreadSpec(name, float(cw), float(dw)))
            elif key == "class":
                name, freq = (p.strip() for p in value.split(","))
                classes.append((name, float(freq)))
            elif key in ("seed", "event_count", "start_time", "time_step"):
                scalars[key] = value
            elif key == "destroy_fraction":
                scalars[key] = value
            else:
                raise InvalidConfig(f"config line {lineno}: unknown key {key!r}")
        except (ValueError, InvalidConfig) as e:
            if isinstance(e, InvalidConfig):
                raise
            raise InvalidConfig(f"config line {lineno}: {e}") from None
    try:
        return GenConfig(
            seed=int(scalars.get("seed", "0")),
            threads=tuple(threads),
            classes=tuple(classes),
            event_count=int(scalars.get("event_count", "0")),
            destroy_fraction=float(scalars.get("destroy_fraction", "0")),
            start_time=int(scalars.get("start_time", "0")),
            time_step=int(scalars.get("time_step", "1")),
        )
    except ValueError as e:
        raise InvalidConfig(str(e)) from None
