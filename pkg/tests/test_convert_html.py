import math

import pytest

from gaius.convert import (
    ConvertOptions, EmptySnapshot, GraphEdge, HtmlPageSnapshot, LayoutBox,
    ParseFailure, Resource, SnapshotError, UnscalableViewport, check_snapshot,
    convert_html, fallback_layout, load_snapshot, snapshot_from_har,
)
from gaius.maml import Image, Rect, Text, TextField, resource_urls, validate


def snap(url="https://site.example/", resources=None, edges=None, boxes=None,
         viewport=1080, bodies=None):
    resources = resources or [Resource(url=url, mime="text/html", size=1000)]
    return HtmlPageSnapshot(url=url, viewport_width=viewport,
                            resources=resources, edges=edges or [],
                            layout_boxes=boxes, inline_bodies=bodies or {})


def test_simple_box_mapping():
    url = "https://site.example/"
    logo = "https://site.example/logo.png"
    s = snap(resources=[
        Resource(url=url, mime="text/html", size=900),
        Resource(url=logo, mime="image/png", size=4000),
    ], edges=[GraphEdge(url, logo, "parse")], boxes=[
        LayoutBox(kind="image", x=0, y=0, w=1080, h=600, src=logo),
        LayoutBox(kind="text-block", x=0, y=600, w=1080, h=60,
                  text="hello world", font=20),
    ])
    page = convert_html(s)
    assert len(page.objects) == 2
    assert isinstance(page.objects[0], Image)
    assert isinstance(page.objects[1], Text)
    assert page.objects[0].url == logo
    assert validate(page) == []


def test_zero_boxes_without_fallback_is_empty_snapshot():
    s = snap(boxes=[])
    with pytest.raises(EmptySnapshot):
        convert_html(s, ConvertOptions(use_fallback=False))


def test_unscalable_viewport():
    s = snap(viewport=0, boxes=[LayoutBox(kind="block", x=0, y=0, w=10, h=10)])
    with pytest.raises(UnscalableViewport):
        convert_html(s)


def test_device_pixels_rescale_to_canvas():
    url = "https://site.example/"
    s = snap(viewport=360, boxes=[
        LayoutBox(kind="block", x=0, y=0, w=360, h=100, color="#aabbcc"),
        LayoutBox(kind="text-block", x=10, y=100, w=340, h=30, text="t", font=14),
    ])
    page = convert_html(s)
    rect = page.objects[0]
    assert isinstance(rect, Rect)
    assert rect.w == 1080 and rect.h == 300
    text = page.objects[1]
    assert text.x == 30.0 and text.w == 1020 and text.font == 42


def test_blocks_without_background_paint_nothing():
    s = snap(boxes=[
        LayoutBox(kind="block", x=0, y=0, w=100, h=100),
        LayoutBox(kind="block", x=0, y=0, w=100, h=100, color="#ffffff"),
    ])
    page = convert_html(s)
    assert len(page.objects) == 1
    assert isinstance(page.objects[0], Rect)


def test_inputs_and_links():
    url = "https://site.example/"
    s = snap(boxes=[
        LayoutBox(kind="input", x=0, y=0, w=500, h=56, name="q",
                  placeholder="Search"),
        LayoutBox(kind="link", x=0, y=60, w=500, h=30, text="read more",
                  href="https://site.example/article", font=16),
    ])
    page = convert_html(s)
    assert isinstance(page.objects[0], TextField)
    assert page.objects[0].name == "q"
    assert isinstance(page.objects[1], Text)
    assert page.objects[1].href == "https://site.example/article"


def test_conversion_is_deterministic():
    s = snap(boxes=[LayoutBox(kind="text-block", x=3, y=7, w=900, h=44,
                              text="same in, same out", font=18)])
    from gaius.maml import serialize_page
    a = serialize_page(convert_html(s))
    b = serialize_page(convert_html(s))
    assert a == b


class TestFallbackLayout:
    def _snapshot_with_html(self, html: str, extra=None):
        url = "https://site.example/"
        resources = [Resource(url=url, mime="text/html", size=len(html))]
        edges = []
        for r in extra or []:
            resources.append(r)
            edges.append(GraphEdge(url, r.url, "parse"))
        return HtmlPageSnapshot(
            url=url, viewport_width=1080, resources=resources, edges=edges,
            inline_bodies={url: html.encode()})

    def test_two_paragraphs_stack_by_line_height(self):
        s = self._snapshot_with_html(
            "<html><body><p>ten chars!</p><p>ten chars!</p></body></html>")
        boxes = fallback_layout(s)
        assert len(boxes) == 2
        assert boxes[0].font == 20
        assert boxes[1].y == boxes[0].y + math.ceil(1.3 * 20)

    def test_image_scales_to_canvas_preserving_aspect(self):
        s = self._snapshot_with_html(
            '<html><body><img src="https://site.example/wide.jpg" '
            'width="2160" height="1200"></body></html>',
            extra=[Resource(url="https://site.example/wide.jpg",
                            mime="image/jpeg", size=50_000)])
        boxes = fallback_layout(s)
        assert len(boxes) == 1
        box = boxes[0]
        assert (box.x, box.y, box.w, box.h) == (0, 0, 1080, 600)

    def test_scripts_and_styles_produce_nothing(self):
        s = self._snapshot_with_html(
            "<html><head><style>p{color:red}</style></head>"
            "<body><script>alert(1)</script><p>visible</p></body></html>")
        boxes = fallback_layout(s)
        assert len(boxes) == 1
        assert boxes[0].text == "visible"

    def test_background_rect_spans_children(self):
        s = self._snapshot_with_html(
            '<html><body><div style="background-color: #FFEEDD">'
            "<p>one line p</p><p>one line p</p></div></body></html>")
        boxes = fallback_layout(s)
        assert boxes[0].kind == "block"
        assert boxes[0].color == "#ffeedd"
        assert boxes[0].h == 2 * math.ceil(1.3 * 20)

    def test_wrapped_text_height(self):
        text = "x" * 250  # advance 11px at font 20 -> 98 chars/line -> 3 lines
        s = self._snapshot_with_html(f"<html><body><p>{text}</p></body></html>")
        boxes = fallback_layout(s)
        assert boxes[0].h == 3 * math.ceil(1.3 * 20)

    def test_missing_root_document_fails(self):
        s = snap()
        with pytest.raises(ParseFailure):
            fallback_layout(s)

    def test_link_href_propagates(self):
        s = self._snapshot_with_html(
            '<html><body><a href="/next"><p>go on</p></a></body></html>')
        boxes = fallback_layout(s)
        assert boxes[0].href == "/next"


def test_check_snapshot_rejects_cycles():
    a, b = "https://x.example/", "https://x.example/b"
    s = snap(url=a, resources=[Resource(a, "text/html", 10),
                               Resource(b, "text/javascript", 10)],
             edges=[GraphEdge(a, b, "script"), GraphEdge(b, a, "script")])
    with pytest.raises(SnapshotError):
        check_snapshot(s)


def test_check_snapshot_rejects_unreachable_resources():
    a, b = "https://x.example/", "https://x.example/orphan.js"
    s = snap(url=a, resources=[Resource(a, "text/html", 10),
                               Resource(b, "text/javascript", 10)])
    with pytest.raises(SnapshotError):
        check_snapshot(s)


def test_har_import_builds_graph():
    har = {"log": {"entries": [
        {"request": {"url": "https://h.example/"},
         "response": {"content": {"size": 1200, "mimeType": "text/html"}}},
        {"request": {"url": "https://h.example/app.js"},
         "response": {"content": {"size": 800, "mimeType": "text/javascript"}},
         "_initiator": {"type": "parser", "url": "https://h.example/"}},
        {"request": {"url": "https://h.example/data.json"},
         "response": {"content": {"size": 300, "mimeType": "application/json"}},
         "_initiator": {"type": "script", "url": "https://h.example/app.js"}},
    ]}}
    s = snapshot_from_har(har)
    assert s.url == "https://h.example/"
    assert len(s.resources) == 3
    triggers = {(e.src, e.dst): e.trigger for e in s.edges}
    assert triggers[("https://h.example/app.js", "https://h.example/data.json")] == "script"


def test_corpus_request_count_law(corpus_dir):
    from gaius.maml import parse_page
    dirs = sorted(p for p in corpus_dir.iterdir() if p.is_dir())
    assert len(dirs) == 10
    for d in dirs:
        s = load_snapshot(d)
        page = parse_page((d / "page.maml").read_text(encoding="utf-8"))
        maml_requests = 1 + len(resource_urls(page))
        assert maml_requests < len(s.resources), d.name
