"""RSS/Atom feeds to MAML pages.

Each feed item becomes exactly three objects: an image, a title and a
description. The item link rides on the image and the title so a tap
anywhere useful opens the full article.
"""

from __future__ import annotations

import re
import xml.etree.ElementTree as ET
from dataclasses import dataclass, replace
from datetime import datetime, timezone
from email.utils import parsedate_to_datetime
from typing import Optional

from ..maml import GeoPoint, Image, MamlPage, Text, validate
from ..maml.model import EPOCH
from .textmetrics import wrapped_height

ATOM_NS = "{http://www.w3.org/2005/Atom}"
MEDIA_NS = "{http://search.yahoo.com/mrss/}"


class FeedParseError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None,
                 column: Optional[int] = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


@dataclass(frozen=True)
class RssItem:
    title: str
    description: str
    link: str
    image_url: Optional[str] = None
    published_at: datetime = EPOCH


@dataclass(frozen=True)
class RssFeed:
    title: str
    source_url: str
    fetched_at: datetime = EPOCH
    items: tuple[RssItem, ...] = ()


def _strip_markup(text: Optional[str]) -> str:
    if not text:
        return ""
    text = re.sub(r"<[^>]+>", " ", text)
    return re.sub(r"\s+", " ", text).strip()


def _parse_date(raw: Optional[str]) -> datetime:
    if not raw:
        return EPOCH
    raw = raw.strip()
    try:
        return parsedate_to_datetime(raw).astimezone(timezone.utc)
    except (TypeError, ValueError):
        pass
    try:
        return datetime.fromisoformat(raw.replace("Z", "+00:00")).astimezone(timezone.utc)
    except ValueError:
        return EPOCH


def _rss_items(channel) -> list[RssItem]:
    items = []
    for node in channel.findall("item"):
        link = (node.findtext("link") or "").strip()
        if not link:
            continue
        image = None
        enclosure = node.find("enclosure")
        if enclosure is not None and "image" in (enclosure.get("type") or ""):
            image = enclosure.get("url")
        if image is None:
            media = node.find(f"{MEDIA_NS}content")
            if media is None:
                media = node.find(f"{MEDIA_NS}thumbnail")
            if media is not None:
                image = media.get("url")
        items.append(RssItem(
            title=_strip_markup(node.findtext("title")),
            description=_strip_markup(node.findtext("description")),
            link=link,
            image_url=image,
            published_at=_parse_date(node.findtext("pubDate")),
        ))
    return items


def _atom_items(root) -> list[RssItem]:
    items = []
    for node in root.findall(f"{ATOM_NS}entry"):
        link = ""
        for ln in node.findall(f"{ATOM_NS}link"):
            if ln.get("rel") in (None, "alternate"):
                link = ln.get("href") or ""
                break
        if not link:
            continue
        published = node.findtext(f"{ATOM_NS}published") or \
            node.findtext(f"{ATOM_NS}updated")
        items.append(RssItem(
            title=_strip_markup(node.findtext(f"{ATOM_NS}title")),
            description=_strip_markup(node.findtext(f"{ATOM_NS}summary")
                                      or node.findtext(f"{ATOM_NS}content")),
            link=link,
            image_url=None,
            published_at=_parse_date(published),
        ))
    return items


def parse_feed(xml_text: str, source_url: str = "",
               fetched_at: datetime = EPOCH) -> RssFeed:
    """Parse RSS 2.0 or Atom 1.0 XML into a feed, items newest-first."""
    try:
        root = ET.fromstring(xml_text)
    except ET.ParseError as e:
        line, column = e.position
        raise FeedParseError(f"malformed feed XML: {e.msg if hasattr(e, 'msg') else e}",
                             line=line, column=column) from None
    if root.tag == "rss":
        channel = root.find("channel")
        if channel is None:
            raise FeedParseError("rss document has no channel")
        title = _strip_markup(channel.findtext("title"))
        items = _rss_items(channel)
    elif root.tag == f"{ATOM_NS}feed":
        title = _strip_markup(root.findtext(f"{ATOM_NS}title"))
        items = _atom_items(root)
    else:
        raise FeedParseError(f"unsupported feed root element {root.tag!r}")
    items.sort(key=lambda item: item.published_at, reverse=True)
    return RssFeed(title=title, source_url=source_url,
                   fetched_at=fetched_at, items=tuple(items))


# ---------------------------------------------------------------------------
# feed -> page

@dataclass(frozen=True)
class RssLayoutParams:
    page_id: str = "rss-feed"
    language: str = "en"
    location: GeoPoint = GeoPoint(0.0, 0.0)
    author_id: str = "rss-translator"
    community_id: Optional[str] = None
    margin: int = 40
    item_gap: int = 36
    inner_gap: int = 12
    image_height: int = 400
    title_font: int = 28
    desc_font: int = 18
    title_color: str = "#111111"
    desc_color: str = "#444444"
    font_family: str = "Arial"
    placeholder_image: str = "static/item-placeholder.png"


def translate_rss(feed: RssFeed, layout: RssLayoutParams = RssLayoutParams()) -> MamlPage:
    """Emit Image + title Text + description Text per item, stacked vertically."""
    width = 1080 - 2 * layout.margin
    objects = []
    y = float(layout.margin)
    for item in feed.items:
        objects.append(Image(
            url=item.image_url or layout.placeholder_image,
            x=float(layout.margin), y=y, w=width, h=layout.image_height,
            href=item.link))
        y += layout.image_height + layout.inner_gap
        title = item.title or item.link
        title_h = wrapped_height(title, width, layout.title_font)
        objects.append(Text(
            txt=title, x=float(layout.margin), y=y, w=width, h=title_h,
            font=layout.title_font, font_type=layout.font_family,
            color=layout.title_color, href=item.link))
        y += title_h + layout.inner_gap
        desc = item.description or ""
        desc_h = wrapped_height(desc, width, layout.desc_font)
        objects.append(Text(
            txt=desc, x=float(layout.margin), y=y, w=width, h=desc_h,
            font=layout.desc_font, font_type=layout.font_family,
            color=layout.desc_color))
        y += desc_h + layout.item_gap
    page = MamlPage(
        page_id=layout.page_id,
        title=feed.title,
        language=layout.language,
        location=layout.location,
        author_id=layout.author_id,
        community_id=layout.community_id,
        objects=tuple(objects),
        created_at=EPOCH,
        updated_at=EPOCH,
    )
    assert validate(page) == []
    return page
