"""Seeded random page generator shared by roundtrip and fuzz suites."""

from __future__ import annotations

import random
import string

from gaius.maml import (
    Button, GeoPoint, Image, MamlPage, Rect, Text, TextField, Video,
)

FONT_FAMILIES = ["Arial", "Roboto", "Noto Sans", "Courier New"]


def _word(rng: random.Random, k=8) -> str:
    return "".join(rng.choice(string.ascii_lowercase) for _ in range(rng.randint(1, k)))


def _text(rng: random.Random) -> str:
    pool = " ".join(_word(rng) for _ in range(rng.randint(0, 12)))
    if rng.random() < 0.2:
        pool += " সংবাদ কেন্দ্র"  # non-ASCII survives the wire
    return pool


def _color(rng: random.Random) -> str:
    return "#" + "".join(rng.choice("0123456789abcdef") for _ in range(6))


def _url(rng: random.Random) -> str:
    return f"www.{_word(rng)}.example/{_word(rng)}.{rng.choice(['png', 'jpg', 'mp4'])}"


def _coord(rng: random.Random) -> float:
    v = rng.choice([rng.randint(0, 1000), round(rng.uniform(0, 1000), 1)])
    return float(v)


def random_object(rng: random.Random):
    x, y = _coord(rng), _coord(rng)
    w, h = rng.randint(1, 1080), rng.randint(1, 800)
    kind = rng.choice(["img", "txt", "rect", "video", "text-field", "button"])
    href = _url(rng) if rng.random() < 0.4 else None
    if kind == "img":
        return Image(url=_url(rng), x=x, y=y, w=w, h=h, href=href)
    if kind == "txt":
        return Text(txt=_text(rng), x=x, y=y, w=w, h=h,
                    font=rng.randint(0, 64), font_type=rng.choice(FONT_FAMILIES),
                    color=_color(rng), href=href)
    if kind == "rect":
        return Rect(x=x, y=y, w=w, h=h, color=_color(rng))
    if kind == "video":
        return Video(url=_url(rng), x=x, y=y, w=w, h=h, href=href)
    if kind == "text-field":
        return TextField(name=_word(rng), placeholder=_text(rng), x=x, y=y, w=w, h=h)
    return Button(label=_word(rng), action=_url(rng), x=x, y=y, w=w, h=h,
                  color=_color(rng))


def random_page(rng: random.Random, max_objects: int = 12) -> MamlPage:
    objects = tuple(random_object(rng) for _ in range(rng.randint(0, max_objects)))
    return MamlPage(
        page_id=_word(rng),
        title=_text(rng),
        language=rng.choice(["en", "bn-BD", "sw", "hi-IN", "en-GB"]),
        location=GeoPoint(lat=round(rng.uniform(-90, 90), 4),
                          lon=round(rng.uniform(-180, 180), 4)),
        author_id=_word(rng),
        objects=objects,
        community_id=_word(rng) if rng.random() < 0.5 else None,
        version=rng.randint(1, 40),
    )
