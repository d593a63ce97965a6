"""Wire codec for MAML documents.

A document is UTF-8 JSON shaped as ``{"page": {...}, "objects": [...]}``.
Object encodings use the hyphenated key ``font-type`` on the wire; it maps
to ``font_type`` internally. Serialization is canonical (fixed key order,
compact separators, integral numbers rendered without a decimal point) so
golden files stay bit-stable.
"""

from __future__ import annotations

import json
import math
import re
from datetime import datetime, timezone
from typing import Any, Optional

from .model import (
    Button,
    EPOCH,
    GeoPoint,
    Image,
    MamlObject,
    MamlPage,
    OBJECT_KINDS,
    Rect,
    Text,
    TextField,
    Video,
    normalize_color,
    validate,
)

_COLOR_RE = re.compile(r"^#[0-9a-f]{6}$")

# reference pixels are bounded; anything bigger is a hostile document
MAX_COORD = 10**9


class MamlError(ValueError):
    """Base for document-level failures; carries byte offset and object index."""

    def __init__(self, message: str, *, offset: Optional[int] = None,
                 object_index: Optional[int] = None):
        self.offset = offset
        self.object_index = object_index
        where = []
        if object_index is not None:
            where.append(f"object {object_index}")
        if offset is not None:
            where.append(f"byte {offset}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)


class MamlSyntaxError(MamlError):
    pass


class UnknownObjectType(MamlError):
    pass


class MissingField(MamlError):
    pass


class MamlRangeError(MamlError):
    pass


class InvariantViolation(MamlError):
    pass


class MissingMediaSize(MamlError):
    def __init__(self, url: str):
        self.url = url
        super().__init__(f"no media size known for {url!r}")


def parse_timestamp(value: str) -> datetime:
    try:
        dt = datetime.fromisoformat(value.replace("Z", "+00:00"))
    except ValueError as e:
        raise MamlSyntaxError(f"bad timestamp {value!r}: {e}") from None
    if dt.tzinfo is None:
        dt = dt.replace(tzinfo=timezone.utc)
    return dt.astimezone(timezone.utc)


def format_timestamp(dt: datetime) -> str:
    if dt.tzinfo is not None:
        dt = dt.astimezone(timezone.utc)
    return dt.strftime("%Y-%m-%dT%H:%M:%SZ")


# ---------------------------------------------------------------------------
# byte offsets

def _skip_ws(text: str, i: int) -> int:
    while i < len(text) and text[i] in " \t\n\r":
        i += 1
    return i


def _top_level_offsets(text: str):
    """Byte offsets of each root key's value, plus each objects[] element.

    Only called on documents that already json.loads()ed cleanly; any
    surprise here degrades to "no offset" rather than failing the parse.
    """
    dec = json.JSONDecoder()
    key_offsets: dict[str, int] = {}
    elem_offsets: list[int] = []
    try:
        i = _skip_ws(text, 0)
        if text[i] != "{":
            return key_offsets, elem_offsets
        i += 1
        while True:
            i = _skip_ws(text, i)
            if text[i] == "}":
                break
            key, i = dec.raw_decode(text, i)
            i = _skip_ws(text, i) + 1  # ':'
            i = _skip_ws(text, i)
            key_offsets[key] = i
            if key == "objects" and text[i] == "[":
                j = _skip_ws(text, i + 1)
                while text[j] != "]":
                    elem_offsets.append(j)
                    _, j = dec.raw_decode(text, j)
                    j = _skip_ws(text, j)
                    if text[j] == ",":
                        j = _skip_ws(text, j + 1)
            _, i = dec.raw_decode(text, i)
            i = _skip_ws(text, i)
            if text[i] == ",":
                i += 1
    except (IndexError, ValueError):
        pass
    return key_offsets, elem_offsets


# ---------------------------------------------------------------------------
# parsing

def _round_half_up(v: float) -> int:
    return math.floor(v + 0.5)


class _ObjectReader:
    def __init__(self, raw: dict, index: int, offset: Optional[int],
                 strict: bool, notes: Optional[list]):
        self.raw = raw
        self.index = index
        self.offset = offset
        self.strict = strict
        self.notes = notes
        self.seen = {"type"}
        self.extras: list[tuple[str, str]] = []

    def _fail(self, cls, message):
        raise cls(message, offset=self.offset, object_index=self.index)

    def _get(self, key: str, required: bool):
        if key not in self.raw:
            if required:
                self._fail(MissingField, f"missing field {key!r}")
            return None
        self.seen.add(key)
        return self.raw[key]

    def string(self, key: str, required: bool = True, nonempty: bool = True):
        if key not in self.raw:
            if required:
                self._fail(MissingField, f"missing field {key!r}")
            return None
        self.seen.add(key)
        v = self.raw[key]
        if not isinstance(v, str):
            self._fail(MamlSyntaxError, f"field {key!r} must be a string")
        if nonempty and v == "":
            self._fail(MamlRangeError, f"field {key!r} must be non-empty")
        return v

    def number(self, key: str, minimum: Optional[float] = None) -> float:
        v = self._get(key, True)
        if isinstance(v, bool) or not isinstance(v, (int, float)):
            self._fail(MamlSyntaxError, f"field {key!r} must be a number")
        if isinstance(v, int) and abs(v) > MAX_COORD:
            self._fail(MamlRangeError, f"field {key!r} is out of range")
        if not math.isfinite(v):
            self._fail(MamlRangeError, f"field {key!r}={v} must be finite")
        if minimum is not None and v < minimum:
            self._fail(MamlRangeError, f"field {key!r}={v} must be >= {minimum}")
        return float(v)

    def size(self, key: str) -> int:
        """Extent/font value: non-negative integer, fractions rounded half-up."""
        v = self._get(key, True)
        if isinstance(v, bool) or not isinstance(v, (int, float)):
            self._fail(MamlSyntaxError, f"field {key!r} must be a number")
        if isinstance(v, int) and abs(v) > MAX_COORD:
            self._fail(MamlRangeError, f"field {key!r} is out of range")
        if not math.isfinite(v):
            self._fail(MamlRangeError, f"field {key!r}={v} must be finite")
        if isinstance(v, float) and not v.is_integer():
            rounded = _round_half_up(v)
            if self.notes is not None:
                self.notes.append(
                    f"object {self.index}: {key}={v} rounded to {rounded}")
            v = rounded
        v = int(v)
        return v

    def positive_size(self, key: str) -> int:
        v = self.size(key)
        if v <= 0:
            self._fail(MamlRangeError, f"field {key!r}={v} must be > 0")
        return v

    def color(self, key: str = "color") -> str:
        v = normalize_color(self.string(key))
        if not _COLOR_RE.match(v):
            self._fail(MamlRangeError, f"field {key!r}={v!r} is not #rrggbb")
        return v

    def finish(self):
        unknown = sorted(set(self.raw) - self.seen)
        if unknown:
            if self.strict:
                self._fail(MamlSyntaxError,
                           f"unknown fields {unknown} on {self.raw.get('type')!r} object")
            for key in unknown:
                self.extras.append(
                    (key, json.dumps(self.raw[key], ensure_ascii=False,
                                     separators=(",", ":"), sort_keys=True)))


def _parse_object(raw: Any, index: int, offset: Optional[int],
                  strict: bool, notes: Optional[list]) -> MamlObject:
    if not isinstance(raw, dict):
        raise MamlSyntaxError("object must be a JSON object",
                              offset=offset, object_index=index)
    tag = raw.get("type")
    if tag is None:
        raise MissingField("missing field 'type'", offset=offset, object_index=index)
    if tag not in OBJECT_KINDS:
        raise UnknownObjectType(f"unknown object type {tag!r}",
                                offset=offset, object_index=index)
    r = _ObjectReader(raw, index, offset, strict, notes)
    x = r.number("x", minimum=0)
    y = r.number("y", minimum=0)
    w = r.positive_size("w")
    h = r.positive_size("h")
    if tag == "img":
        obj = Image(url=r.string("url"), x=x, y=y, w=w, h=h,
                    href=r.string("href", required=False))
    elif tag == "txt":
        obj = Text(txt=r.string("txt", nonempty=False), x=x, y=y, w=w, h=h,
                   font=r.size("font"), font_type=r.string("font-type"),
                   color=r.color(), href=r.string("href", required=False))
    elif tag == "rect":
        obj = Rect(x=x, y=y, w=w, h=h, color=r.color())
    elif tag == "video":
        obj = Video(url=r.string("url"), x=x, y=y, w=w, h=h,
                    href=r.string("href", required=False))
    elif tag == "text-field":
        obj = TextField(name=r.string("name"),
                        placeholder=r.string("placeholder", nonempty=False),
                        x=x, y=y, w=w, h=h)
    else:
        obj = Button(label=r.string("label"), action=r.string("action"),
                     x=x, y=y, w=w, h=h, color=r.color())
    r.finish()
    if r.extras:
        # lenient mode: unknown fields ride along as frozen JSON fragments
        object.__setattr__(obj, "_extras", tuple(r.extras))
    return obj


class _MetaReader(_ObjectReader):
    def __init__(self, raw, offset, strict):
        super().__init__(raw, None, offset, strict, None)

    def finish(self):
        unknown = sorted(set(self.raw) - self.seen - {"type"})
        if unknown and self.strict:
            self._fail(MamlSyntaxError, f"unknown page fields {unknown}")


def parse_page(text: str, *, strict: bool = True,
               notes: Optional[list] = None) -> MamlPage:
    """Parse a wire document into a MamlPage, enforcing every invariant.

    ``notes``, when given, collects human-readable normalization notes
    (fractional extents rounded half-up). Lenient mode (``strict=False``)
    keeps unknown fields so they survive a round trip.
    """
    try:
        root = json.loads(text)
    except json.JSONDecodeError as e:
        raise MamlSyntaxError(f"malformed document: {e.msg}", offset=e.pos) from None
    if not isinstance(root, dict):
        raise MamlSyntaxError("document root must be an object", offset=0)
    key_offsets, elem_offsets = _top_level_offsets(text)
    unknown_root = sorted(set(root) - {"page", "objects"})
    if unknown_root and strict:
        raise MamlSyntaxError(f"unknown top-level keys {unknown_root}", offset=0)
    if "page" not in root:
        raise MissingField("missing top-level 'page'", offset=0)
    if "objects" not in root:
        raise MissingField("missing top-level 'objects'", offset=0)
    meta = root["page"]
    if not isinstance(meta, dict):
        raise MamlSyntaxError("'page' must be an object",
                              offset=key_offsets.get("page"))
    raw_objects = root["objects"]
    if not isinstance(raw_objects, list):
        raise MamlSyntaxError("'objects' must be an array",
                              offset=key_offsets.get("objects"))

    m = _MetaReader(meta, key_offsets.get("page"), strict)
    page_id = m.string("page_id")
    title = m.string("title", nonempty=False)
    language = m.string("language")
    loc_raw = m._get("location", True)
    if not isinstance(loc_raw, dict) or not {"lat", "lon"} <= set(loc_raw):
        raise MissingField("'location' must carry lat and lon",
                           offset=key_offsets.get("page"))
    lat, lon = loc_raw["lat"], loc_raw["lon"]
    for name, v in (("lat", lat), ("lon", lon)):
        if isinstance(v, bool) or not isinstance(v, (int, float)):
            raise MamlSyntaxError(f"location.{name} must be a number",
                                  offset=key_offsets.get("page"))
        if isinstance(v, int) and abs(v) > MAX_COORD:
            raise MamlRangeError(f"location.{name} is out of range",
                                 offset=key_offsets.get("page"))
    author_id = m.string("author_id")
    community_id = m.string("community_id", required=False)
    canvas_width = meta.get("canvas_width", 1080)
    canvas_height = meta.get("canvas_height")
    m.seen.update({"canvas_width", "canvas_height"})
    version = meta.get("version", 1)
    m.seen.add("version")
    for name, v in (("canvas_width", canvas_width), ("version", version)):
        if isinstance(v, bool) or not isinstance(v, int):
            raise MamlSyntaxError(f"page field {name!r} must be an integer",
                                  offset=key_offsets.get("page"))
    if canvas_height is not None and (isinstance(canvas_height, bool)
                                      or not isinstance(canvas_height, int)):
        raise MamlSyntaxError("page field 'canvas_height' must be an integer",
                              offset=key_offsets.get("page"))
    created_raw = m.string("created_at", required=False)
    updated_raw = m.string("updated_at", required=False)
    m.finish()

    objects = []
    for i, raw in enumerate(raw_objects):
        offset = elem_offsets[i] if i < len(elem_offsets) else None
        objects.append(_parse_object(raw, i, offset, strict, notes))

    page = MamlPage(
        page_id=page_id,
        title=title,
        language=language,
        location=GeoPoint(lat=float(lat), lon=float(lon)),
        author_id=author_id,
        objects=tuple(objects),
        community_id=community_id,
        canvas_width=canvas_width,
        canvas_height=canvas_height,
        version=version,
        created_at=parse_timestamp(created_raw) if created_raw else EPOCH,
        updated_at=parse_timestamp(updated_raw) if updated_raw else EPOCH,
    )
    violations = validate(page)
    if violations:
        v = violations[0]
        offset = None
        if v.object_index is not None and v.object_index < len(elem_offsets):
            offset = elem_offsets[v.object_index]
        raise MamlRangeError(f"invariant {v.rule}: {v.message}",
                             offset=offset, object_index=v.object_index)
    return page


# ---------------------------------------------------------------------------
# serialization

def _num(v) -> str:
    if isinstance(v, float):
        if v.is_integer():
            return str(int(v))
        return repr(v)
    return str(v)


def _s(v: str) -> str:
    return json.dumps(v, ensure_ascii=False)


def _pairs_for(obj: MamlObject) -> list[tuple[str, str]]:
    box = [("x", _num(obj.x)), ("y", _num(obj.y)),
           ("w", _num(obj.w)), ("h", _num(obj.h))]
    if isinstance(obj, Image):
        pairs = [("type", '"img"'), ("url", _s(obj.url))] + box
        if obj.href is not None:
            pairs.append(("href", _s(obj.href)))
    elif isinstance(obj, Text):
        pairs = [("type", '"txt"'), ("txt", _s(obj.txt))] + box
        pairs += [("font", _num(obj.font)), ("font-type", _s(obj.font_type)),
                  ("color", _s(obj.color))]
        if obj.href is not None:
            pairs.append(("href", _s(obj.href)))
    elif isinstance(obj, Rect):
        pairs = [("type", '"rect"')] + box + [("color", _s(obj.color))]
    elif isinstance(obj, Video):
        pairs = [("type", '"video"'), ("url", _s(obj.url))] + box
        if obj.href is not None:
            pairs.append(("href", _s(obj.href)))
    elif isinstance(obj, TextField):
        pairs = [("type", '"text-field"'), ("name", _s(obj.name)),
                 ("placeholder", _s(obj.placeholder))] + box
    elif isinstance(obj, Button):
        pairs = [("type", '"button"'), ("label", _s(obj.label)),
                 ("action", _s(obj.action))] + box + [("color", _s(obj.color))]
    else:  # pragma: no cover - closed sum
        raise InvariantViolation(f"unknown object {obj!r}")
    for key, fragment in getattr(obj, "_extras", ()):
        pairs.append((key, fragment))
    return pairs


def serialize_object(obj: MamlObject) -> str:
    return "{" + ",".join(f"{_s(k)}:{v}" for k, v in _pairs_for(obj)) + "}"


def serialize_page(page: MamlPage) -> str:
    """Render a page as its canonical wire document."""
    violations = validate(page)
    if violations:
        v = violations[0]
        raise InvariantViolation(f"invariant {v.rule}: {v.message}",
                                 object_index=v.object_index)
    meta = [
        ("page_id", _s(page.page_id)),
        ("title", _s(page.title)),
        ("language", _s(page.language)),
        ("location", '{"lat":%s,"lon":%s}' % (_num(page.location.lat),
                                              _num(page.location.lon))),
        ("author_id", _s(page.author_id)),
    ]
    if page.community_id is not None:
        meta.append(("community_id", _s(page.community_id)))
    meta += [
        ("canvas_width", _num(page.canvas_width)),
        ("canvas_height", _num(page.canvas_height)),
        ("version", _num(page.version)),
        ("created_at", _s(format_timestamp(page.created_at))),
        ("updated_at", _s(format_timestamp(page.updated_at))),
    ]
    meta_json = "{" + ",".join(f"{_s(k)}:{v}" for k, v in meta) + "}"
    objects_json = "[" + ",".join(serialize_object(o) for o in page.objects) + "]"
    return '{"page":%s,"objects":%s}' % (meta_json, objects_json)


def page_weight(page: MamlPage, media_sizes: dict[str, int]) -> int:
    """Total delivered bytes: document plus one media payload per Image/Video."""
    total = len(serialize_page(page).encode("utf-8"))
    for obj in page.objects:
        if isinstance(obj, (Image, Video)):
            if obj.url not in media_sizes:
                raise MissingMediaSize(obj.url)
            total += media_sizes[obj.url]
    return total
