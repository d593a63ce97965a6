#!/usr/bin/env python3
"""Generate the bundled fixture corpus: ten HTML page snapshots with
realistic resource mixes and dependency graphs, plus their frozen MAML
conversions. Deterministic under a fixed seed; outputs are committed and
never regenerated by tests.

Usage: python3 scripts/gen_fixtures.py
"""

from __future__ import annotations

import io
import json
import random
import sys
from pathlib import Path

import numpy as np
from PIL import Image as PilImage

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from gaius.convert import ConvertOptions, convert_html, load_snapshot  # noqa: E402


def stable_seed(*parts) -> int:
    """Process-independent seed (hash() is randomized per interpreter)."""
    import zlib
    return zlib.crc32("|".join(str(p) for p in parts).encode("utf-8"))
from gaius.maml import GeoPoint, serialize_page  # noqa: E402

CORPUS = ROOT / "fixtures" / "corpus"

CITIES = {
    "in": ("en-IN", GeoPoint(12.9716, 77.5946)),
    "bd": ("bn-BD", GeoPoint(23.8103, 90.4125)),
    "ke": ("sw-KE", GeoPoint(-1.2921, 36.8219)),
}

WORDS = ("local market fresh news sport team school class price offer city "
         "street shop phone radio music event festival college course bus "
         "train power water community notice meeting review trade craft").split()


def photo(w, h, seed, quality=78):
    rng = np.random.default_rng(seed)
    xs = np.arange(w)[None, :]
    ys = np.arange(h)[:, None]
    base = np.stack([
        (xs * 3 + ys * 2) % 256 + np.zeros((h, w)),
        (xs // 4 + ys * 5) % 256 + np.zeros((h, w)),
        (xs + ys * 3) % 256 + np.zeros((h, w)),
    ], axis=-1)
    noise = rng.integers(0, 28, size=(h, w, 3))
    img = ((base + noise) % 256).astype(np.uint8)
    out = io.BytesIO()
    PilImage.fromarray(img, "RGB").save(out, format="JPEG", quality=quality)
    return out.getvalue()


def prose(rng, approx_bytes):
    parts = []
    total = 0
    while total < approx_bytes:
        sentence = " ".join(rng.choice(WORDS) for _ in range(rng.randint(6, 14)))
        sentence = sentence.capitalize() + "."
        parts.append(sentence)
        total += len(sentence) + 1
    return " ".join(parts)[:approx_bytes]


def css_blob(rng, approx_bytes):
    out = []
    total = 0
    while total < approx_bytes:
        cls = "".join(rng.choice("abcdefghijklmnop") for _ in range(8))
        rule = (".%s{margin:%dpx;padding:%dpx;color:#%06x;display:%s;"
                "font-size:%dpx;line-height:%.2f}\n") % (
            cls, rng.randint(0, 32), rng.randint(0, 24),
            rng.randint(0, 0xFFFFFF), rng.choice(["block", "flex", "none"]),
            rng.randint(10, 28), rng.uniform(1.0, 1.8))
        out.append(rule)
        total += len(rule)
    return "".join(out)[:approx_bytes]


def js_blob(rng, approx_bytes):
    out = []
    total = 0
    while total < approx_bytes:
        fn = "fn" + "".join(rng.choice("0123456789") for _ in range(6))
        body = ("function %s(a,b){var c=a*%d+b;for(var i=0;i<%d;i++)"
                "{c+=i%%%d;}return c;}\n") % (
            fn, rng.randint(2, 97), rng.randint(3, 40), rng.randint(2, 13))
        out.append(body)
        total += len(body)
    return "".join(out)[:approx_bytes]


def font_blob(rng, approx_bytes):
    return bytes(rng.randrange(256) for _ in range(approx_bytes))


class PageBuilder:
    def __init__(self, name, seed, region):
        self.name = name
        self.rng = random.Random(seed)
        self.region = region
        self.dir = CORPUS / name
        (self.dir / "res").mkdir(parents=True, exist_ok=True)
        self.site = f"https://www.{name}.example"
        self.resources = []
        self.edges = []
        self.boxes = []
        self.y = 0.0
        self.image_seq = 0

    def _write(self, relpath, data):
        if isinstance(data, str):
            data = data.encode("utf-8")
        path = self.dir / relpath
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_bytes(data)
        return len(data)

    def add_resource(self, url, mime, relpath, data, parent=None, trigger="parse"):
        size = self._write(relpath, data)
        self.resources.append({"url": url, "mime": mime, "file": relpath,
                               "size": size})
        if parent is not None:
            self.edges.append({"from": parent, "to": url, "trigger": trigger})
        return url

    def root(self, kb=55):
        body = []
        for _ in range(self.rng.randint(10, 20)):
            body.append("<div class=\"s%d\"><p>%s</p></div>" % (
                self.rng.randint(0, 99), prose(self.rng, 400)))
        html = ("<html><head><title>%s</title></head><body>%s</body></html>"
                % (self.name, "\n".join(body)))
        while len(html) < kb * 1024:
            html += "<!-- %s -->" % prose(self.rng, 240)
        url = self.add_resource(self.site + "/", "text/html",
                                "res/index.html", html)
        favicon = photo(32, 32, seed=stable_seed(self.name, "icon"),
                        quality=60)
        self.add_resource(self.site + "/favicon.ico", "image/x-icon",
                          "res/favicon.ico", favicon, parent=url)
        return url

    # layout boxes (device px, viewport 1280)

    def hero(self, url, h=640):
        self.boxes.append({"kind": "image", "x": 0, "y": self.y, "w": 1280,
                           "h": h, "src": url,
                           "href": self.site + "/story/hero"})
        self.y += h + 16

    def image_row(self, urls, h=300):
        w = 1280 / len(urls)
        for i, url in enumerate(urls):
            self.boxes.append({"kind": "image", "x": i * w, "y": self.y,
                               "w": w, "h": h, "src": url})
        self.y += h + 16

    def headline(self, text, font=42):
        self.boxes.append({"kind": "text-block", "x": 24, "y": self.y,
                           "w": 1232, "h": font * 1.4, "text": text,
                           "font": font, "color": "#101010"})
        self.y += font * 1.4 + 10

    def paragraph(self, text, font=19):
        lines = max(1, len(text) // 90)
        h = lines * font * 1.35
        self.boxes.append({"kind": "text-block", "x": 24, "y": self.y,
                           "w": 1232, "h": h, "text": text, "font": font})
        self.y += h + 10

    def banner(self, color="#eef2f6", h=90):
        self.boxes.append({"kind": "block", "x": 0, "y": self.y, "w": 1280,
                           "h": h, "color": color})
        self.y += h + 8

    def link(self, text, href):
        self.boxes.append({"kind": "link", "x": 24, "y": self.y, "w": 600,
                           "h": 30, "text": text, "href": href, "font": 18})
        self.y += 38

    def video_box(self, url, h=540):
        self.boxes.append({"kind": "video", "x": 0, "y": self.y, "w": 1280,
                           "h": h, "src": url})
        self.y += h + 16

    def content_image(self, w, h):
        self.image_seq += 1
        name = f"img{self.image_seq}.jpg"
        data = photo(w, h, seed=stable_seed(self.name, self.image_seq))
        url = f"https://img-cdn.example/{self.name}/{name}"
        self.add_resource(url, "image/jpeg", f"res/{name}", data,
                          parent=self.site + "/")
        return url

    def stylesheet(self, kb, with_font=False):
        n = sum(1 for r in self.resources if r["mime"] == "text/css") + 1
        url = f"https://static.{self.name}.example/css/style{n}.css"
        self.add_resource(url, "text/css", f"res/style{n}.css",
                          css_blob(self.rng, kb * 1024),
                          parent=self.site + "/")
        if with_font:
            fname = f"font{n}.woff2"
            furl = f"https://fonts.gstatic.example/{self.name}/{fname}"
            self.add_resource(furl, "font/woff2", f"res/{fname}",
                              font_blob(self.rng, self.rng.randint(26, 60) * 1024),
                              parent=url, trigger="stylesheet")
        return url

    def script_chain(self, kbs, host=None, tracking_pixel=False):
        host = host or f"https://static.{self.name}.example"
        parent = self.site + "/"
        trigger = "parse"
        url = None
        for kb in kbs:
            n = sum(1 for r in self.resources
                    if r["mime"] == "text/javascript") + 1
            url = f"{host}/js/app{n}.js"
            self.add_resource(url, "text/javascript", f"res/app{n}.js",
                              js_blob(self.rng, kb * 1024),
                              parent=parent, trigger=trigger)
            parent, trigger = url, "script"
        if tracking_pixel and url:
            n = sum(1 for r in self.resources if "pixel" in r["url"]) + 1
            purl = f"https://metrics.example/pixel{n}.gif"
            self.add_resource(purl, "image/gif", f"res/pixel{n}.gif",
                              b"GIF89a" + bytes(60), parent=url,
                              trigger="script")
        return url

    def social_widget(self):
        """Third-party embed: a script chain that hops two extra hosts."""
        widget = "https://connect.social.example/widget.js"
        self.add_resource(widget, "text/javascript", "res/widget.js",
                          js_blob(self.rng, self.rng.randint(28, 44) * 1024),
                          parent=self.site + "/", trigger="parse")
        api = "https://api.social.example/session.js"
        self.add_resource(api, "text/javascript", "res/session.js",
                          js_blob(self.rng, self.rng.randint(16, 26) * 1024),
                          parent=widget, trigger="script")
        avatar = photo(96, 96, seed=stable_seed(self.name, "avatar"),
                       quality=70)
        self.add_resource("https://avatars.social.example/me.jpg",
                          "image/jpeg", "res/avatar.jpg", avatar,
                          parent=api, trigger="script")

    def ad_redirect(self):
        click = f"https://adserve.example/{self.name}/click"
        self.add_resource(click, "text/html", "res/adclick.html",
                          "<html>moved</html>", parent=self.site + "/",
                          trigger="script")
        banner_data = photo(480, 240, seed=stable_seed(self.name, "ad"),
                            quality=70)
        burl = f"https://ads.example/{self.name}/banner.jpg"
        self.add_resource(burl, "image/jpeg", "res/banner.jpg", banner_data,
                          parent=click, trigger="redirect")
        return burl

    def video_resource(self, kb=150):
        rng = random.Random(stable_seed(self.name, "video"))
        url = f"https://img-cdn.example/{self.name}/clip.mp4"
        self.add_resource(url, "video/mp4", "res/clip.mp4",
                          bytes(rng.randrange(256) for _ in range(kb * 1024)),
                          parent=self.site + "/")
        return url

    def finish(self):
        manifest = {
            "url": self.site + "/",
            "viewport": {"width": 1280},
            "resources": self.resources,
            "graph": self.edges,
            "layout_boxes": self.boxes,
        }
        (self.dir / "manifest.json").write_text(
            json.dumps(manifest, indent=1, ensure_ascii=False), encoding="utf-8")
        snap = load_snapshot(self.dir)
        language, location = CITIES[self.region]
        page = convert_html(snap, ConvertOptions(
            page_id=f"fx-{self.name}", title=f"{self.name} front page",
            language=language, location=location, author_id="corpus"))
        doc = serialize_page(page)
        (self.dir / "page.maml").write_text(doc, encoding="utf-8")
        total = sum(r["size"] for r in self.resources)
        media = sum(1 for o in page.objects
                    if type(o).__name__ in ("Image", "Video"))
        print(f"{self.name:10s} resources={len(self.resources):3d} "
              f"bytes={total:8d} maml_objects={len(page.objects):3d} "
              f"maml_requests={1 + media:2d}")
        return snap, page


def build_news(b: PageBuilder):
    """The replicated news front page: the fidelity fixture."""
    b.root(kb=62)
    b.stylesheet(36, with_font=True)
    b.stylesheet(24, with_font=True)
    b.script_chain([96, 64, 36], tracking_pixel=True)
    b.script_chain([48, 24], tracking_pixel=True)
    b.script_chain([30], host="https://metrics.example", tracking_pixel=True)
    b.social_widget()
    b.banner()
    b.headline("Evening headlines from the city desk")
    b.hero(b.content_image(560, 360))
    b.paragraph(prose(b.rng, 700))
    b.image_row([b.content_image(380, 250) for _ in range(3)])
    b.paragraph(prose(b.rng, 900))
    b.image_row([b.content_image(380, 250) for _ in range(2)], h=340)
    b.link("all stories", b.site + "/stories")
    b.ad_redirect()


def build_portal(b: PageBuilder):
    b.root(kb=72)
    b.stylesheet(44, with_font=True)
    b.stylesheet(28, with_font=True)
    b.stylesheet(18)
    b.script_chain([110, 70, 40, 20], tracking_pixel=True)
    b.script_chain([64, 30], host="https://widgets.example",
                   tracking_pixel=True)
    b.script_chain([26], host="https://metrics.example", tracking_pixel=True)
    b.social_widget()
    b.banner("#dde6ef")
    b.headline("Portal start page")
    b.hero(b.content_image(560, 360), h=480)
    b.paragraph(prose(b.rng, 1100))
    b.image_row([b.content_image(360, 240) for _ in range(2)])
    b.paragraph(prose(b.rng, 800))
    b.link("weather", b.site + "/weather")
    b.ad_redirect()


def build_shop(b: PageBuilder):
    b.root(kb=58)
    b.stylesheet(42, with_font=True)
    b.stylesheet(20)
    b.script_chain([88, 56, 28], tracking_pixel=True)
    b.script_chain([40, 18], host="https://pay.example", tracking_pixel=True)
    b.social_widget()
    b.banner("#fff4e0")
    b.headline("Weekly offers")
    b.image_row([b.content_image(300, 300) for _ in range(4)], h=320)
    b.paragraph(prose(b.rng, 600))
    b.image_row([b.content_image(300, 300) for _ in range(2)], h=320)
    b.link("cart", b.site + "/cart")
    b.ad_redirect()


def build_blog(b: PageBuilder):
    b.root(kb=66)
    b.stylesheet(30, with_font=True)
    b.stylesheet(16)
    b.script_chain([60, 32, 16], tracking_pixel=True)
    b.script_chain([22], host="https://metrics.example", tracking_pixel=True)
    b.social_widget()
    b.headline("Field notes")
    b.paragraph(prose(b.rng, 1600))
    b.hero(b.content_image(560, 360), h=560)
    b.paragraph(prose(b.rng, 1800))
    b.image_row([b.content_image(360, 240) for _ in range(2)])
    b.paragraph(prose(b.rng, 1200))
    b.link("archive", b.site + "/archive")


def build_sports(b: PageBuilder):
    b.root(kb=56)
    b.stylesheet(34, with_font=True)
    b.stylesheet(18)
    b.script_chain([84, 52, 24], tracking_pixel=True)
    b.script_chain([30, 14], host="https://scores.example",
                   tracking_pixel=True)
    b.social_widget()
    b.banner("#e8f6e8")
    b.headline("Match day")
    b.hero(b.content_image(540, 320), h=540)
    b.image_row([b.content_image(340, 220) for _ in range(3)], h=280)
    b.paragraph(prose(b.rng, 900))
    b.ad_redirect()


def build_cinema(b: PageBuilder):
    b.root(kb=52)
    b.stylesheet(30, with_font=True)
    b.stylesheet(16, with_font=True)
    b.script_chain([88, 54, 26], tracking_pixel=True)
    b.script_chain([26, 12], host="https://metrics.example",
                   tracking_pixel=True)
    b.social_widget()
    b.headline("Now showing")
    b.video_box(b.video_resource(kb=64))
    b.paragraph(prose(b.rng, 700))
    b.image_row([b.content_image(260, 380) for _ in range(3)], h=420)
    b.link("tickets", b.site + "/tickets")


def build_school(b: PageBuilder):
    b.root(kb=44)
    b.stylesheet(22, with_font=True)
    b.script_chain([56, 32, 14], tracking_pixel=True)
    b.script_chain([18], host="https://metrics.example", tracking_pixel=True)
    b.headline("Course notices")
    b.paragraph(prose(b.rng, 1400))
    b.hero(b.content_image(520, 300), h=450)
    b.paragraph(prose(b.rng, 1000))
    b.link("timetable", b.site + "/timetable")


def build_market(b: PageBuilder):
    b.root(kb=52)
    b.stylesheet(30, with_font=True)
    b.stylesheet(14)
    b.script_chain([70, 42, 20], tracking_pixel=True)
    b.script_chain([26], host="https://pay.example", tracking_pixel=True)
    b.social_widget()
    b.banner("#f6eef6")
    b.headline("Trader listings")
    b.image_row([b.content_image(240, 240) for _ in range(4)], h=320)
    b.image_row([b.content_image(240, 240) for _ in range(4)], h=320)
    b.paragraph(prose(b.rng, 500))
    b.ad_redirect()


def build_radio(b: PageBuilder):
    b.root(kb=50)
    b.stylesheet(38, with_font=True)
    b.stylesheet(22, with_font=True)
    b.script_chain([56, 30, 14], tracking_pixel=True)
    b.script_chain([20], host="https://metrics.example", tracking_pixel=True)
    b.social_widget()
    b.headline("On air this week")
    b.hero(b.content_image(560, 300), h=400)
    b.paragraph(prose(b.rng, 1100))
    b.image_row([b.content_image(320, 200) for _ in range(2)])
    b.link("schedule", b.site + "/schedule")


def build_events(b: PageBuilder):
    b.root(kb=54)
    b.stylesheet(26, with_font=True)
    b.stylesheet(16)
    b.script_chain([64, 48, 30, 16], tracking_pixel=True)
    b.script_chain([22], host="https://metrics.example", tracking_pixel=True)
    b.social_widget()
    b.banner("#fdf0e4")
    b.headline("What is on")
    b.hero(b.content_image(540, 310), h=520)
    b.paragraph(prose(b.rng, 800))
    b.image_row([b.content_image(340, 230) for _ in range(3)], h=300)
    b.ad_redirect()


PAGES = [
    ("news", build_news, "in"),
    ("portal", build_portal, "bd"),
    ("shop", build_shop, "ke"),
    ("blog", build_blog, "in"),
    ("sports", build_sports, "bd"),
    ("cinema", build_cinema, "ke"),
    ("school", build_school, "in"),
    ("market", build_market, "ke"),
    ("radio", build_radio, "bd"),
    ("events", build_events, "in"),
]


def main():
    CORPUS.mkdir(parents=True, exist_ok=True)
    for i, (name, builder, region) in enumerate(PAGES):
        b = PageBuilder(name, seed=1000 + i, region=region)
        builder(b)
        b.finish()


if __name__ == "__main__":
    main()
