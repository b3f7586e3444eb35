"""Color-name resolution onto unit-range RGB."""

from __future__ import annotations

import math
from dataclasses import dataclass

from ._css_colors import CSS_COLORS

GRAY_FALLBACK = (0.5, 0.5, 0.5)


@dataclass(frozen=True)
class RGBColor:
    r: float
    g: float
    b: float

    def __post_init__(self):
        for v in (self.r, self.g, self.b):
            if not (0.0 <= v <= 1.0):
                raise ValueError(f"RGB component out of range: {v}")

    def as_tuple(self):
        return (self.r, self.g, self.b)


def color_to_rgb(name: str) -> RGBColor:
    """Resolve a free-text color name to RGB.

    Exact lookup first; otherwise each whitespace word that names a color
    contributes its RGB and the result is the mean ("red and brown").
    Anything unresolvable falls back to neutral gray, so every input maps
    to a valid color.
    """
    key = name.strip().lower()
    if key in CSS_COLORS:
        return RGBColor(*CSS_COLORS[key])
    parts = [CSS_COLORS[w] for w in key.split() if w in CSS_COLORS]
    if not parts:
        return RGBColor(*GRAY_FALLBACK)
    n = len(parts)
    return RGBColor(
        sum(p[0] for p in parts) / n,
        sum(p[1] for p in parts) / n,
        sum(p[2] for p in parts) / n,
    )


def rgb_distance(c1: RGBColor, c2: RGBColor) -> float:
    return math.sqrt((c1.r - c2.r) ** 2 + (c1.g - c2.g) ** 2 + (c1.b - c2.b) ** 2)
