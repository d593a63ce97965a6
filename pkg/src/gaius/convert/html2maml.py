"""Flatten captured HTML pages into MAML.

Every layout box becomes at most one object; scripts and styles vanish.
The output needs exactly ``1 + #Image + #Video`` fetches to render, so
the dependency tree of the source page collapses to depth one.
"""

from __future__ import annotations

import hashlib
import io
import math
import re
from dataclasses import dataclass, field
from html.parser import HTMLParser
from typing import Optional

from ..maml import (
    Button, CANVAS_WIDTH, GeoPoint, Image, MamlObject, MamlPage, Rect, Text,
    TextField, Video, validate,
)
from ..maml.model import EPOCH, normalize_color
from .snapshot import HtmlPageSnapshot, LayoutBox, check_snapshot
from .textmetrics import wrapped_height


class ConvertError(ValueError):
    pass


class EmptySnapshot(ConvertError):
    pass


class UnscalableViewport(ConvertError):
    pass


class ParseFailure(ConvertError):
    pass


@dataclass(frozen=True)
class ConvertOptions:
    page_id: Optional[str] = None
    title: Optional[str] = None
    language: str = "en"
    location: GeoPoint = GeoPoint(0.0, 0.0)
    author_id: str = "converter"
    community_id: Optional[str] = None
    use_fallback: bool = True
    font_family: str = "Arial"
    text_color: str = "#222222"


def _round_half_up(v: float) -> int:
    return math.floor(v + 0.5)


def _page_id_for(url: str) -> str:
    return "maml-" + hashlib.sha1(url.encode("utf-8")).hexdigest()[:12]


def _scaled_geometry(box: LayoutBox, scale: float):
    x = max(0.0, round(box.x * scale, 1))
    y = max(0.0, round(box.y * scale, 1))
    w = max(1, _round_half_up(box.w * scale))
    h = max(1, _round_half_up(box.h * scale))
    return x, y, w, h


def _box_to_object(box: LayoutBox, scale: float, index: int,
                   opts: ConvertOptions) -> Optional[MamlObject]:
    x, y, w, h = _scaled_geometry(box, scale)
    if box.kind == "image" or (box.kind == "link" and box.src):
        return Image(url=box.src, x=x, y=y, w=w, h=h, href=box.href)
    if box.kind in ("text-block", "link"):
        if not box.text:
            return None
        font = max(1, _round_half_up((box.font or 16) * scale))
        return Text(txt=box.text, x=x, y=y, w=w, h=h, font=font,
                    font_type=opts.font_family,
                    color=box.color or opts.text_color, href=box.href)
    if box.kind == "block":
        if not box.color:
            return None  # transparent blocks paint nothing
        return Rect(x=x, y=y, w=w, h=h, color=box.color)
    if box.kind == "video":
        return Video(url=box.src, x=x, y=y, w=w, h=h)
    if box.kind == "input":
        return TextField(name=box.name or f"field{index}",
                         placeholder=box.placeholder or "",
                         x=x, y=y, w=w, h=h)
    return None


def convert_html(snapshot: HtmlPageSnapshot,
                 opts: ConvertOptions = ConvertOptions()) -> MamlPage:
    """Flatten a snapshot into a valid MamlPage, one object per layout box."""
    if snapshot.viewport_width <= 0:
        raise UnscalableViewport(f"viewport width {snapshot.viewport_width}")
    check_snapshot(snapshot)
    boxes = snapshot.layout_boxes
    if not boxes:
        if not opts.use_fallback:
            raise EmptySnapshot(f"{snapshot.url} has no layout boxes")
        boxes = fallback_layout(snapshot)
        scale = 1.0  # the fallback lays out on the reference canvas directly
    else:
        scale = CANVAS_WIDTH / snapshot.viewport_width

    objects = []
    for i, box in enumerate(boxes):
        obj = _box_to_object(box, scale, i, opts)
        if obj is not None:
            objects.append(obj)
    page = MamlPage(
        page_id=opts.page_id or _page_id_for(snapshot.url),
        title=opts.title or snapshot.url,
        language=opts.language,
        location=opts.location,
        author_id=opts.author_id,
        community_id=opts.community_id,
        objects=tuple(objects),
        created_at=EPOCH,
        updated_at=EPOCH,
    )
    violations = validate(page)
    if violations:  # pragma: no cover - construction keeps invariants
        raise ConvertError(f"conversion produced invalid page: {violations[0]}")
    return page


# ---------------------------------------------------------------------------
# fallback layout: deterministic single-column block flow

_BLOCK_FONTS = {"h1": 40, "h2": 34, "h3": 28, "h4": 24, "h5": 22, "h6": 20,
                "p": 20, "li": 20, "blockquote": 20, "figcaption": 16}
_SKIP_CONTENT = {"script", "style", "noscript", "head", "template", "iframe"}
_BG_RE = re.compile(r"background(?:-color)?\s*:\s*(#[0-9a-fA-F]{6})")


class _FlowParser(HTMLParser):
    """Single-column flow: blocks stack at full canvas width, zero gap."""

    def __init__(self, snapshot: HtmlPageSnapshot):
        super().__init__(convert_charrefs=True)
        self.snapshot = snapshot
        self.boxes: list[LayoutBox] = []
        self.y = 0.0
        self.skip_depth = 0
        self.text_parts: list[str] = []
        self.block_tag: Optional[str] = None
        self.block_href: Optional[str] = None
        self.href_stack: list[str] = []
        self.bg_stack: list[tuple[int, float, str]] = []  # insert index, y, color
        self.field_count = 0

    # -- text block lifecycle

    def _flush_text(self):
        if self.block_tag is None:
            return
        text = re.sub(r"\s+", " ", "".join(self.text_parts)).strip()
        tag = self.block_tag
        self.block_tag = None
        self.text_parts = []
        if not text:
            return
        font = _BLOCK_FONTS.get(tag, 20)
        height = wrapped_height(text, CANVAS_WIDTH, font)
        kind = "link" if self.block_href else "text-block"
        self.boxes.append(LayoutBox(kind=kind, x=0, y=self.y, w=CANVAS_WIDTH,
                                    h=height, text=text, font=font,
                                    href=self.block_href))
        self.block_href = None
        self.y += height

    # -- element handling

    def handle_starttag(self, tag, attrs):
        if tag in _SKIP_CONTENT:
            self.skip_depth += 1
            return
        if self.skip_depth:
            return
        attrs = dict(attrs)
        if tag in _BLOCK_FONTS:
            self._flush_text()
            self.block_tag = tag
            if self.href_stack:
                self.block_href = self.href_stack[-1]
        elif tag == "a":
            href = attrs.get("href")
            if href:
                self.href_stack.append(href)
                if self.block_tag is not None and self.block_href is None:
                    self.block_href = href
        elif tag == "img":
            self._flush_text()
            self._emit_image(attrs)
        elif tag == "video":
            self._flush_text()
            self._emit_video(attrs)
        elif tag == "input":
            self._flush_text()
            self._emit_input(attrs)
        elif tag in ("div", "section", "article", "main", "header", "footer",
                     "aside", "ul", "ol", "body"):
            self._flush_text()
            style = attrs.get("style", "")
            m = _BG_RE.search(style)
            color = None
            if m:
                color = normalize_color(m.group(1))
            elif attrs.get("bgcolor", "").startswith("#") and len(attrs["bgcolor"]) == 7:
                color = normalize_color(attrs["bgcolor"])
            if color:
                self.bg_stack.append((len(self.boxes), self.y, color))

    def handle_endtag(self, tag):
        if tag in _SKIP_CONTENT:
            self.skip_depth = max(0, self.skip_depth - 1)
            return
        if self.skip_depth:
            return
        if tag in _BLOCK_FONTS:
            self._flush_text()
        elif tag == "a" and self.href_stack:
            self.href_stack.pop()
        elif tag in ("div", "section", "article", "main", "header", "footer",
                     "aside", "ul", "ol", "body"):
            self._flush_text()
            if self.bg_stack:
                index, y0, color = self.bg_stack.pop()
                height = self.y - y0
                if height >= 1:
                    self.boxes.insert(index, LayoutBox(
                        kind="block", x=0, y=y0, w=CANVAS_WIDTH, h=height,
                        color=color))

    def handle_data(self, data):
        if self.skip_depth:
            return
        if self.block_tag is not None:
            self.text_parts.append(data)
        elif data.strip():
            # stray text outside any block flows as a paragraph
            self.block_tag = "p"
            self.text_parts.append(data)
            if self.href_stack:
                self.block_href = self.href_stack[-1]

    # -- replaced elements

    def _intrinsic_size(self, url: Optional[str], attrs: dict):
        w = _int_attr(attrs, "width")
        h = _int_attr(attrs, "height")
        if w and h:
            return w, h
        if url:
            try:
                from PIL import Image as PilImage
                data = self.snapshot.resource_bytes(url)
                with PilImage.open(io.BytesIO(data)) as im:
                    return im.width, im.height
            except Exception:
                pass
        return 4, 3  # aspect fallback

    def _emit_image(self, attrs):
        url = attrs.get("src")
        if not url:
            return
        iw, ih = self._intrinsic_size(url, attrs)
        if iw <= 0 or ih <= 0:
            iw, ih = 4, 3
        w = CANVAS_WIDTH
        h = _round_half_up(w * ih / iw)
        href = self.href_stack[-1] if self.href_stack else None
        self.boxes.append(LayoutBox(kind="image", x=0, y=self.y, w=w, h=h,
                                    src=url, href=href))
        self.y += h

    def _emit_video(self, attrs):
        url = attrs.get("src")
        if not url:
            return
        w = CANVAS_WIDTH
        h = _round_half_up(w * 9 / 16)
        self.boxes.append(LayoutBox(kind="video", x=0, y=self.y, w=w, h=h,
                                    src=url))
        self.y += h

    def _emit_input(self, attrs):
        self.field_count += 1
        h = 56
        self.boxes.append(LayoutBox(
            kind="input", x=0, y=self.y, w=CANVAS_WIDTH, h=h,
            name=attrs.get("name") or f"field{self.field_count}",
            placeholder=attrs.get("placeholder") or ""))
        self.y += h


def _int_attr(attrs: dict, key: str) -> Optional[int]:
    v = attrs.get(key)
    if v is None:
        return None
    try:
        return int(v)
    except ValueError:
        return None


def fallback_layout(snapshot: HtmlPageSnapshot) -> list[LayoutBox]:
    """Lay the root document out as a deterministic single-column flow."""
    try:
        raw = snapshot.resource_bytes(snapshot.url)
    except Exception as e:
        raise ParseFailure(f"root document unavailable: {e}") from None
    if not raw.strip():
        raise ParseFailure("root document is empty")
    parser = _FlowParser(snapshot)
    try:
        parser.feed(raw.decode("utf-8", errors="replace"))
        parser.close()
    except Exception as e:  # html.parser rarely raises, but stay honest
        raise ParseFailure(f"cannot parse root document: {e}") from None
    parser._flush_text()
    return parser.boxes
