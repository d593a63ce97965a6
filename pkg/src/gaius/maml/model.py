"""MAML domain model: a flat page of absolutely positioned objects.

A page is a single document listing every object needed to paint it;
the only follow-up fetches a renderer ever makes are the Image/Video
source urls. Six object kinds exist: image, text, rect, video,
text-field and button. Objects are painted in list order (later wins).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, replace
from datetime import datetime, timezone
from typing import Optional, Union

CANVAS_WIDTH = 1080

_COLOR_RE = re.compile(r"^#[0-9a-f]{6}$")
# Syntactic BCP-47 shape: primary subtag plus dash-separated alnum subtags.
_LANG_RE = re.compile(r"^[A-Za-z]{2,8}(-[A-Za-z0-9]{1,8})*$")

EPOCH = datetime(2020, 1, 1, tzinfo=timezone.utc)


def normalize_color(value: str) -> str:
    """Lowercase a #RRGGBB color; callers validate the result."""
    return value.lower()


@dataclass(frozen=True)
class GeoPoint:
    lat: float
    lon: float


@dataclass(frozen=True)
class Image:
    url: str
    x: float
    y: float
    w: int
    h: int
    href: Optional[str] = None

    kind = "img"


@dataclass(frozen=True)
class Text:
    txt: str
    x: float
    y: float
    w: int
    h: int
    font: int
    font_type: str
    color: str
    href: Optional[str] = None

    kind = "txt"


@dataclass(frozen=True)
class Rect:
    x: float
    y: float
    w: int
    h: int
    color: str

    kind = "rect"


@dataclass(frozen=True)
class Video:
    url: str
    x: float
    y: float
    w: int
    h: int
    href: Optional[str] = None

    kind = "video"


@dataclass(frozen=True)
class TextField:
    name: str
    placeholder: str
    x: float
    y: float
    w: int
    h: int

    kind = "text-field"


@dataclass(frozen=True)
class Button:
    label: str
    action: str
    x: float
    y: float
    w: int
    h: int
    color: str

    kind = "button"


MamlObject = Union[Image, Text, Rect, Video, TextField, Button]

OBJECT_KINDS = ("img", "txt", "rect", "video", "text-field", "button")


def content_height(objects: tuple[MamlObject, ...]) -> int:
    """Lowest extent of any object; 0 for an empty page."""
    if not objects:
        return 0
    return max(math.ceil(o.y + o.h) for o in objects)


@dataclass(frozen=True)
class MamlPage:
    page_id: str
    title: str
    language: str
    location: GeoPoint
    author_id: str
    objects: tuple[MamlObject, ...] = ()
    community_id: Optional[str] = None
    canvas_width: int = CANVAS_WIDTH
    canvas_height: Optional[int] = None
    version: int = 1
    created_at: datetime = EPOCH
    updated_at: datetime = EPOCH

    def __post_init__(self):
        object.__setattr__(self, "objects", tuple(self.objects))
        if self.canvas_height is None:
            object.__setattr__(self, "canvas_height", content_height(self.objects))

    def with_objects(self, objects) -> "MamlPage":
        """Copy with a new object list; canvas_height grows if content does."""
        objects = tuple(objects)
        height = max(self.canvas_height or 0, content_height(objects))
        return replace(self, objects=objects, canvas_height=height)


@dataclass(frozen=True)
class Violation:
    rule: str
    field: str
    message: str
    object_index: Optional[int] = None


def _check_box(index: int, obj: MamlObject, out: list[Violation]) -> None:
    if obj.w <= 0 or obj.h <= 0:
        out.append(Violation("positive-extent", "w/h",
                             f"w={obj.w} h={obj.h} must be > 0", index))
    if obj.x < 0 or obj.y < 0:
        out.append(Violation("nonneg-origin", "x/y",
                             f"x={obj.x} y={obj.y} must be >= 0", index))


def _check_color(index: int, value: str, out: list[Violation]) -> None:
    if not _COLOR_RE.match(value):
        out.append(Violation("color-format", "color",
                             f"{value!r} is not #rrggbb", index))


def _check_link(index: int, fieldname: str, value: Optional[str],
                out: list[Violation]) -> None:
    if value is not None and value == "":
        out.append(Violation("empty-link", fieldname,
                             "present but empty", index))


def validate(page: MamlPage) -> list[Violation]:
    """Check every model invariant; an empty list means the page is valid."""
    out: list[Violation] = []
    if page.canvas_width <= 0:
        out.append(Violation("canvas-width", "canvas_width",
                             f"{page.canvas_width} must be > 0"))
    if (page.canvas_height or 0) < content_height(page.objects):
        out.append(Violation("canvas-height", "canvas_height",
                             f"{page.canvas_height} is smaller than the content extent"))
    if not _LANG_RE.match(page.language):
        out.append(Violation("language-tag", "language",
                             f"{page.language!r} is not a valid language tag"))
    if not -90.0 <= page.location.lat <= 90.0:
        out.append(Violation("lat-range", "location.lat",
                             f"{page.location.lat} outside [-90, 90]"))
    if not -180.0 <= page.location.lon <= 180.0:
        out.append(Violation("lon-range", "location.lon",
                             f"{page.location.lon} outside [-180, 180]"))
    if page.version < 1:
        out.append(Violation("version", "version", "must be >= 1"))

    for i, obj in enumerate(page.objects):
        _check_box(i, obj, out)
        if isinstance(obj, Image):
            if not obj.url:
                out.append(Violation("empty-resource", "url", "image url is empty", i))
            _check_link(i, "href", obj.href, out)
        elif isinstance(obj, Text):
            _check_color(i, obj.color, out)
            if obj.font < 0:
                out.append(Violation("font-size", "font", "must be >= 0", i))
            _check_link(i, "href", obj.href, out)
        elif isinstance(obj, Rect):
            _check_color(i, obj.color, out)
        elif isinstance(obj, Video):
            if not obj.url:
                out.append(Violation("empty-resource", "url", "video url is empty", i))
            _check_link(i, "href", obj.href, out)
        elif isinstance(obj, TextField):
            if not obj.name:
                out.append(Violation("field-name", "name", "must be non-empty", i))
        elif isinstance(obj, Button):
            _check_color(i, obj.color, out)
            if not obj.action:
                out.append(Violation("empty-link", "action", "must be non-empty", i))
    return out


def hit_test(page: MamlPage, x: float, y: float) -> Optional[int]:
    """Index of the topmost object containing (x, y), or None.

    Containment is half-open: [x, x+w) by [y, y+h), so abutting objects
    never both claim an edge point. Topmost = last in paint order.
    """
    for i in range(len(page.objects) - 1, -1, -1):
        o = page.objects[i]
        if o.x <= x < o.x + o.w and o.y <= y < o.y + o.h:
            return i
    return None


def resource_urls(page: MamlPage) -> list[str]:
    """Urls a renderer must fetch, one per Image/Video object, in paint order."""
    return [o.url for o in page.objects if isinstance(o, (Image, Video))]
