"""Deterministic attribute-value coloring.

Every distinct attribute value (type name, thread name, ...) gets a
stable color: the FNV-1a 32-bit hash of its UTF-8 bytes picks a hue
out of 360, one of four saturations and one of three lightnesses, and
the HSL triple is converted to 8-bit RGB.  The bucketing keeps colors
saturated and legible; equal values always render identically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

_FNV_OFFSET = 2166136261
_FNV_PRIME = 16777619

_SATURATIONS = (55, 65, 75, 85)  # percent
_LIGHTNESSES = (40, 55, 70)  # percent


@dataclass(frozen=True)
class Rgb:
    r: int
    g: int
    b: int

    def __post_init__(self):
        for c in (self.r, self.g, self.b):
            if not 0 <= c <= 255:
                raise ValueError(f"channel {c} out of range")

    @property
    def hex(self) -> str:
        return f"#{self.r:02x}{self.g:02x}{self.b:02x}"


def fnv1a32(data: bytes) -> int:
    h = _FNV_OFFSET
    for b in data:
        h ^= b
        h = (h * _FNV_PRIME) & 0xFFFFFFFF
    return h


def hsl_of(value: str) -> tuple[int, int, int]:
    """(hue degrees, saturation %, lightness %) bucket for a value."""
    h = fnv1a32(value.encode("utf-8"))
    hue = h % 360
    sat = _SATURATIONS[(h // 360) % 4]
    light = _LIGHTNESSES[(h // 1440) % 3]
    return hue, sat, light


def _hsl_to_rgb(hue: int, sat: int, light: int) -> tuple[int, int, int]:
    """Standard piecewise HSL->RGB over exact rationals.

    Channels are rounded half-up, so the result is bit-identical on any
    platform (no float rounding at .5 boundaries).
    """
    s = Fraction(sat, 100)
    l = Fraction(light, 100)
    c = (1 - abs(2 * l - 1)) * s
    x = c * (1 - abs(Fraction(hue, 60) % 2 - 1))
    m = l - c / 2
    sextant = (hue // 60) % 6
    rp, gp, bp = (
        (c, x, 0), (x, c, 0), (0, c, x), (0, x, c), (x, 0, c), (c, 0, x)
    )[sextant]
    def channel(v: Fraction) -> int:
        scaled = (v + m) * 255
        return int(scaled + Fraction(1, 2))  # round half up
    return channel(rp), channel(gp), channel(bp)


def color_of(value: str) -> Rgb:
    return Rgb(*_hsl_to_rgb(*hsl_of(value)))
