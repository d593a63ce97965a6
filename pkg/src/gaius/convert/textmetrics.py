"""Fixed-advance text measurement.

No font rasterization: every character advances 0.55 em and a line is
1.3 em tall, so layout is identical on every platform.
"""

from __future__ import annotations

import math

CHAR_ADVANCE_EM = 0.55
LINE_HEIGHT_EM = 1.3


def line_height(font: int) -> int:
    return math.ceil(LINE_HEIGHT_EM * font)


def chars_per_line(width: float, font: int) -> int:
    if font <= 0:
        return max(1, int(width))
    return max(1, math.floor(width / (CHAR_ADVANCE_EM * font)))


def wrapped_height(text: str, width: float, font: int) -> int:
    """Height of a text block wrapped at the fixed per-character advance."""
    lines = max(1, math.ceil(len(text) / chars_per_line(width, font)))
    return lines * line_height(font)
